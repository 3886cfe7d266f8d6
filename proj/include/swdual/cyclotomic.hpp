#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace swdual {

// Integer polynomial coefficients of the N-th cyclotomic polynomial, low degree first.
std::vector<int64_t> cyclotomic_poly(int N);

// An element of Z[zeta_N], stored as a coefficient vector in Z[x]/(x^N - 1).
// Two values compare equal when they agree modulo Phi_N, i.e. as complex numbers
// with zeta_N = exp(2 pi i / N).
class Cyclo {
public:
    Cyclo() : Cyclo(1) {}
    explicit Cyclo(int N, int64_t c = 0);
    static Cyclo root_power(int N, int64_t k);  // zeta_N^k

    int order() const { return N_; }
    const std::vector<int64_t>& coeffs() const { return c_; }

    Cyclo operator+(const Cyclo& o) const;
    Cyclo operator-(const Cyclo& o) const;
    Cyclo operator-() const;
    Cyclo operator*(const Cyclo& o) const;
    Cyclo operator*(int64_t s) const;
    Cyclo& operator+=(const Cyclo& o);

    Cyclo conj() const;            // zeta -> zeta^{-1}
    Cyclo galois(int64_t k) const;  // zeta -> zeta^k
    // The same number in Z[zeta_M], M a multiple of N.
    Cyclo lift(int M) const;

    // Canonical representative of degree < phi(N).
    std::vector<int64_t> reduced() const;
    bool operator==(const Cyclo& o) const;
    bool operator!=(const Cyclo& o) const { return !(*this == o); }
    bool is_zero() const;

    std::optional<int64_t> as_integer() const;
    // Exact division by an integer; nullopt if the quotient is not in Z[zeta_N].
    std::optional<Cyclo> div_exact(int64_t d) const;

    std::string str() const;

private:
    int N_;
    std::vector<int64_t> c_;
};

}  // namespace swdual
