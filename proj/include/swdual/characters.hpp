#pragma once

#include "swdual/cyclotomic.hpp"
#include "swdual/group.hpp"

#include <memory>
#include <string>
#include <vector>

namespace swdual {

// A class function: one value per conjugacy class, in Z[zeta_N] with N the group exponent.
using ClassFn = std::vector<Cyclo>;

enum class RealType { Real, Complex, Quaternionic };

struct RealIrrep {
    std::string name;
    RealType type;
    int complex_index;   // irreducible complex constituent
    int partner;         // conjugate constituent for complex type, else complex_index
    int dim;             // real dimension
    ClassFn character;   // character of the complexification
};

class CharacterTable {
public:
    // Burnside-Dixon over F_q with q = 1 mod exponent, lifted to cyclotomic values.
    explicit CharacterTable(FiniteGroup G);

    const FiniteGroup& group() const { return G_; }
    int exponent() const { return N_; }
    int num_classes() const { return static_cast<int>(G_.classes().size()); }
    int64_t prime_used() const { return q_; }
    const std::vector<ClassFn>& irreducibles() const { return irr_; }
    int dim(int i) const;
    // Class of g^k for the representative of class c.
    int power_class(int c, int64_t k) const;

    ClassFn trivial() const;
    ClassFn regular() const;
    ClassFn zero() const;
    ClassFn from_integers(const std::vector<int64_t>& v) const;

    // <a, b> = (1/|G|) sum |C| a(g) conj(b(g)); must be a rational integer.
    int64_t inner(const ClassFn& a, const ClassFn& b) const;
    // Multiplicities over the irreducibles. Throws NotAClassFunction.
    std::vector<int64_t> decompose(const ClassFn& chi) const;
    ClassFn combine(const std::vector<int64_t>& mult) const;
    int frobenius_schur(int i) const;

    // Eigenvalue multiplicities of chi on the cyclic group generated by the
    // representative of class c: entry k counts eigenvalue exp(2 pi i k / o).
    std::vector<int64_t> eigen_multiplicities(const ClassFn& chi, int c) const;
    // Same, for an arbitrary element.
    std::vector<int64_t> element_multiplicities(const ClassFn& chi, int g) const;
    // det as a linear character.
    ClassFn det(const ClassFn& chi) const;
    ClassFn conj(const ClassFn& chi) const;

    // Real irreducibles (1 per real-type and quaternionic constituent, 1 per conjugate pair).
    const std::vector<RealIrrep>& real_irreducibles() const { return real_; }
    void set_real_names(const std::vector<std::string>& names);
    int real_index(const std::string& name) const;
    // Coefficients of a real representation in RO(G). Throws NotAClassFunction.
    std::vector<int64_t> decompose_real(const ClassFn& chi) const;
    ClassFn real_character(const std::vector<int64_t>& coeffs) const;

    std::string show(const ClassFn& chi) const;

private:
    void build_real();
    FiniteGroup G_;
    int N_;
    int64_t q_ = 0;
    std::vector<ClassFn> irr_;
    std::vector<std::vector<int>> power_;  // power_[c][k mod order]
    std::vector<RealIrrep> real_;
};

using TablePtr = std::shared_ptr<const CharacterTable>;

// Restriction to H (embed[h] = index in G of element h of H).
ClassFn restrict_fn(const CharacterTable& G, const CharacterTable& H, const std::vector<int>& embed, const ClassFn& chi);
// Induction from H to G. Throws NotAClassFunction if the result is not integral.
ClassFn induce_fn(const CharacterTable& H, const CharacterTable& G, const std::vector<int>& embed, const ClassFn& psi);

// Character of a representation given by integer matrices on class representatives.
ClassFn character_from_traces(const CharacterTable& T, const std::vector<int64_t>& traces);

}  // namespace swdual
