#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace swdual {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Least nonnegative residue.
inline int64_t mod(int64_t a, int64_t m) {
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

BigInt mod(const BigInt& a, const BigInt& m);

int64_t gcd64(int64_t a, int64_t b);
int64_t lcm64(int64_t a, int64_t b);
int64_t pow_mod(int64_t b, int64_t e, int64_t m);
// Inverse of a modulo m; throws InvalidArgument if not invertible.
int64_t inv_mod(int64_t a, int64_t m);
int64_t ipow(int64_t b, int e);

bool is_prime(int64_t n);
std::vector<int64_t> prime_factors(int64_t n);  // distinct, ascending
int64_t mult_order(int64_t a, int64_t m);        // multiplicative order, gcd(a,m)=1
int64_t primitive_root(int64_t p);               // smallest generator of (Z/p)^x
int64_t padic_val(int64_t a, int64_t p);         // a != 0
int64_t factorial_val(int64_t k, int64_t p);     // v_p(k!)

// Representative in (-m/2, m/2].
int64_t signed_residue(int64_t a, int64_t m);

std::string to_string(const BigInt& a);

}  // namespace swdual
