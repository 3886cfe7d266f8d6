#include "swdual/arith.hpp"

#include "swdual/error.hpp"

namespace swdual {

BigInt mod(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return r;
}

int64_t gcd64(int64_t a, int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

int64_t lcm64(int64_t a, int64_t b) { return a / gcd64(a, b) * b; }

int64_t pow_mod(int64_t b, int64_t e, int64_t m) {
    __int128 r = 1 % m, x = mod(b, m);
    while (e > 0) {
        if (e & 1) r = r * x % m;
        x = x * x % m;
        e >>= 1;
    }
    return static_cast<int64_t>(r);
}

int64_t inv_mod(int64_t a, int64_t m) {
    int64_t g = m, x = 0, x1 = 1, a1 = mod(a, m);
    while (a1) {
        int64_t q = g / a1;
        int64_t t = g - q * a1;
        g = a1;
        a1 = t;
        t = x - q * x1;
        x = x1;
        x1 = t;
    }
    if (g != 1) fail(ErrorKind::InvalidArgument, std::to_string(a) + " not invertible mod " + std::to_string(m));
    return mod(x, m);
}

int64_t ipow(int64_t b, int e) {
    int64_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<int64_t> prime_factors(int64_t n) {
    std::vector<int64_t> out;
    for (int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

int64_t mult_order(int64_t a, int64_t m) {
    a = mod(a, m);
    if (gcd64(a, m) != 1) fail(ErrorKind::InvalidArgument, "mult_order of non-unit");
    int64_t k = 1, x = a % m;
    while (x != 1 % m) {
        x = static_cast<int64_t>(static_cast<__int128>(x) * a % m);
        ++k;
    }
    return k;
}

int64_t primitive_root(int64_t p) {
    auto qs = prime_factors(p - 1);
    for (int64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (int64_t q : qs)
            if (pow_mod(g, (p - 1) / q, p) == 1) ok = false;
        if (ok) return g;
    }
    return 1;  // p == 2
}

int64_t padic_val(int64_t a, int64_t p) {
    int64_t v = 0;
    while (a % p == 0) {
        a /= p;
        ++v;
    }
    return v;
}

int64_t factorial_val(int64_t k, int64_t p) {
    int64_t v = 0;
    for (int64_t q = p; q <= k; q *= p) v += k / q;
    return v;
}

int64_t signed_residue(int64_t a, int64_t m) {
    int64_t r = mod(a, m);
    return 2 * r > m ? r - m : r;
}

std::string to_string(const BigInt& a) { return a.str(); }

}  // namespace swdual
