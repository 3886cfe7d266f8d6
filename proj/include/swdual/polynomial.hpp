#pragma once

#include "swdual/arith.hpp"

#include <map>
#include <string>
#include <vector>

namespace swdual {

using Monomial = std::vector<int>;

// Sparse multivariate polynomial over Q (modulus 0) or F_p (modulus p).
// Monomials are ordered lexicographically with variable 0 most significant.
class MPoly {
public:
    MPoly() = default;
    explicit MPoly(int nvars, int64_t modulus = 0) : nvars_(nvars), mod_(modulus) {}

    static MPoly constant(int nvars, const Rational& c, int64_t modulus = 0);
    static MPoly var(int nvars, int i, int64_t modulus = 0);
    static MPoly monomial(const Monomial& m, const Rational& c, int64_t modulus = 0);

    int nvars() const { return nvars_; }
    int64_t modulus() const { return mod_; }
    const std::map<Monomial, Rational>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    int total_degree() const;

    void add_term(const Monomial& m, const Rational& c);
    Rational coeff(const Monomial& m) const;

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator*(const Rational& s) const;
    MPoly pow(int e) const;
    bool operator==(const MPoly& o) const { return nvars_ == o.nvars_ && t_ == o.t_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    // Homogeneous component of the given total degree.
    MPoly homogeneous_part(int deg) const;
    // Substitute images[i] for variable i.
    MPoly substitute(const std::vector<MPoly>& images) const;
    bool is_symmetric() const;

    std::string str(const std::string& var_prefix = "t") const;

private:
    Rational normalize(const Rational& c) const;
    int nvars_ = 0;
    int64_t mod_ = 0;
    std::map<Monomial, Rational> t_;
};

MPoly elementary_symmetric(int nvars, int k, int64_t modulus = 0);
MPoly power_sum(int nvars, int k, int64_t modulus = 0);

// Rewrites a symmetric polynomial in t_1..t_m as a polynomial in e_1..e_m
// (variable i of the result is e_{i+1}). Throws NotSymmetric.
MPoly sym_to_elementary(const MPoly& f);

// The Newton polynomial s_k in c_1..c_k (variable i is c_{i+1}), so that
// s_k(e_1, ..., e_k) = t_1^k + ... + t_m^k for m >= k.
MPoly newton_s_k(int k, int64_t modulus = 0);

}  // namespace swdual
