#pragma once

#include "swdual/group.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace swdual {

// O_n / p^N where O_n = W<S> with S^n = p and S a = sigma(a) S, W = W(F_{p^n}).
// W/p^N is realised as (Z/p^N)[omega]/(g) with omega the Teichmueller lift of a
// primitive element. An element sum_k a_k S^k is stored as n*n residues,
// entry k*n + i being the coefficient of omega^i in a_k.
class TruncatedOn {
public:
    using Elem = std::vector<int64_t>;
    using WElem = std::vector<int64_t>;

    TruncatedOn(int p, int n, int N);

    int p() const { return p_; }
    int n() const { return n_; }
    int precision() const { return N_; }
    int64_t modulus() const { return P_; }
    // Minimal polynomial of omega mod p^N: omega^n = sum g[i] omega^i.
    const std::vector<int64_t>& omega_relation() const { return g_; }
    // Monic polynomial over F_p used to build the residue field.
    const std::vector<int64_t>& residue_poly() const { return f_; }

    // W arithmetic.
    WElem w_mul(const WElem& a, const WElem& b) const;
    WElem w_add(const WElem& a, const WElem& b) const;
    WElem w_frob(const WElem& a, int k = 1) const;  // sigma^k
    WElem w_omega_pow(int64_t e) const;
    WElem w_scalar(int64_t c) const;

    // O_n arithmetic.
    Elem zero() const { return Elem(static_cast<std::size_t>(n_) * n_, 0); }
    Elem one() const;
    Elem S() const;
    Elem omega_pow(int64_t e) const;      // omega^e as an element of W in O_n
    Elem from_w(const WElem& a, int k = 0) const;  // a S^k
    WElem w_part(const Elem& x, int k) const;
    Elem add(const Elem& x, const Elem& y) const;
    Elem sub(const Elem& x, const Elem& y) const;
    Elem neg(const Elem& x) const;
    Elem scale(const Elem& x, int64_t c) const;
    Elem mul(const Elem& x, const Elem& y) const;
    Elem pow(const Elem& x, int64_t e) const;
    bool is_one(const Elem& x) const { return x == one(); }
    // Residues reduced modulo p^m (m <= N).
    Elem reduce(const Elem& x, int m) const;
    // Largest v <= N with every coordinate divisible by p^v.
    int valuation(const Elem& x) const;
    Elem random(std::mt19937_64& rng) const;

    // Order of omega mod p, which must be p^n - 1.
    int64_t omega_residue_order() const;
    std::string show(const Elem& x) const;

private:
    int64_t md(__int128 v) const;
    int p_, n_, N_;
    int64_t P_;
    std::vector<int64_t> f_, g_;
    std::vector<WElem> frob_rows_;  // sigma(omega^i)
};

// Throws PrecisionTooLow.
TruncatedOn make_truncated_On(int p, int n, int N);

struct ZetaTau {
    TruncatedOn::Elem zeta, tau, X;
    int64_t e = 0;                      // tau zeta tau^-1 = zeta^e
    int iterations = 0;                 // Newton steps until the residual vanished
    std::vector<int> residual_valuations;  // X-adic valuation of the residual before each step
    std::vector<int64_t> u;             // zeta = 1 + X u, coefficients in X
};

// Requires n = p - 1 with p odd. Throws HenselNonconvergent, OrderMismatch.
ZetaTau hensel_zeta_tau(const TruncatedOn& R);

// The subgroup of O_n^x generated by zeta and tau, as an abstract group.
FiniteGroup zeta_tau_group(const TruncatedOn& R, const ZetaTau& zt);

struct LowerPSeriesData {
    int64_t order = 1;
    std::vector<int64_t> invariants;  // cyclic factor orders
    bool additive_iso = false;        // x -> 1 + x is a homomorphism on all checked pairs
    int64_t pairs_checked = 0;
};

// Gamma_i / Gamma_j = (1 + p^i O_n) / (1 + p^j O_n) for i <= j <= 2i. Throws TooLarge, OutOfAbelianRange.
LowerPSeriesData lower_p_series_data(const TruncatedOn& R, int i, int j);

struct ExpCheck {
    int samples = 0;
    int passed = 0;
    int max_terms = 0;
    std::optional<TruncatedOn::Elem> counterexample;
};

// exp(x) = 1 + x mod p^{2i} on random x in p^i O_n. Throws SeriesDivergence.
ExpCheck exp_identity_check(const TruncatedOn& R, int i, int samples, uint64_t seed = 0x5eed);
TruncatedOn::Elem exp_series(const TruncatedOn& R, const TruncatedOn::Elem& y, int i);  // exp(p^i y)

}  // namespace swdual
