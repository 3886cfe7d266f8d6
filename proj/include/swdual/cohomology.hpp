#pragma once

#include "swdual/fp_linalg.hpp"
#include "swdual/group.hpp"

#include <memory>
#include <random>
#include <string>
#include <vector>

namespace swdual {

// Normalized inhomogeneous bar cochains of G with trivial F_p coefficients,
// with cohomology computed exactly through degree maxdeg. A k-cochain is a
// function on (G - {1})^k, stored densely with the first argument most significant.
class BarModel {
public:
    static constexpr double kCap = 1e7;

    // Throws TooLarge when |G|^maxdeg exceeds 10^7.
    BarModel(const FiniteGroup& G, int p, int maxdeg);

    const FiniteGroup& group() const { return G_; }
    int p() const { return p_; }
    int maxdeg() const { return maxdeg_; }
    std::size_t cochain_dim(int k) const;
    std::vector<int> dims() const;
    int dim(int k) const { return static_cast<int>(hbasis_.at(k).size()); }

    FpVec coboundary(const FpVec& f, int k) const;
    bool is_cocycle(const FpVec& f, int k) const;
    bool is_coboundary(const FpVec& f, int k) const;
    // Coordinates of a cocycle in the chosen basis of H^k. Throws NotACocycle.
    FpVec coords(const FpVec& z, int k) const;
    // Cocycle representing the class with the given coordinates.
    FpVec cocycle(const FpVec& coords, int k) const;
    const std::vector<FpVec>& basis(int k) const { return hbasis_.at(k); }
    FpVec random_coboundary(int k, std::mt19937_64& rng) const;

    // Cochain helpers.
    std::size_t index(const std::vector<int>& elems) const;  // tuple of non-identity elements
    std::vector<int> tuple(std::size_t idx, int k) const;

private:
    FiniteGroup G_;
    int p_, maxdeg_;
    std::vector<std::shared_ptr<FpRowSpace>> hspace_;  // B^k plus class representatives, tagged
    std::vector<std::vector<FpVec>> hbasis_;
};

using BarModelPtr = std::shared_ptr<const BarModel>;
BarModelPtr make_bar_model(const FiniteGroup& G, int p, int maxdeg);

// Graded F_p dimensions of H^k(G; F_p) for k = 0..maxdeg.
std::vector<int> bar_cohomology(const FiniteGroup& G, int p, int maxdeg);

struct CohClass {
    BarModelPtr model;
    int degree = 0;
    FpVec coords;

    FpVec cocycle() const { return model->cocycle(coords, degree); }
    bool is_zero() const;
    bool operator==(const CohClass& o) const;
    bool operator!=(const CohClass& o) const { return !(*this == o); }
    CohClass operator+(const CohClass& o) const;
    CohClass scaled(int c) const;
    std::string str() const;
};

CohClass make_class(const BarModelPtr& m, int degree, const FpVec& coords);
CohClass class_of_cocycle(const BarModelPtr& m, int degree, const FpVec& cocycle);
CohClass unit_class(const BarModelPtr& m);
CohClass zero_class(const BarModelPtr& m, int degree);
// The 1-class of a homomorphism G -> Z/p given by its values on all elements.
CohClass hom_class(const BarModelPtr& m, const std::vector<int>& values);

// Alexander-Whitney cup product. Throws MixedGroups.
FpVec cup_cochains(const BarModel& M, const FpVec& f, int a, const FpVec& g, int b);
CohClass cup(const CohClass& x, const CohClass& y);

// embed[h] is the index in G of element h of H. Throws NotSubgroup.
FpVec restrict_cochain(const BarModel& G, const BarModel& H, const std::vector<int>& embed, const FpVec& f, int k);
CohClass restriction(const CohClass& x, const BarModelPtr& H, const std::vector<int>& embed);

// Transfer from H to G using right coset representatives reps (one per coset H g);
// an empty list picks the least element of each coset.
FpVec transfer_cochain(const BarModel& H, const BarModel& G, const std::vector<int>& embed, const FpVec& f, int k,
                       const std::vector<int>& reps = {});
CohClass transfer(const CohClass& y, const BarModelPtr& G, const std::vector<int>& embed, const std::vector<int>& reps = {});
std::vector<int> coset_representatives(const FiniteGroup& G, const std::vector<int>& embed, std::mt19937_64* rng = nullptr);

// x in H^*(H) with H normal in the group of `ambient`; g acts by f -> f(g - g^-1, ...).
CohClass conjugation_action(const CohClass& x, const FiniteGroup& ambient, const std::vector<int>& embed, int g);

// Symbolic model of H^*(C_p; Z_(p)) = Z[z0]/(p z0) under z0 -> m z0.
struct InvariantsModel {
    int p = 0;
    int64_t multiplier = 0;
    int generator_degree = 0;        // degree of the invariant generator z0^d
    int generator_power = 0;         // d = order of m mod p
    std::vector<int> invariant_degrees;  // positive degrees <= maxdeg carrying invariants
};
InvariantsModel invariants_model(int p, int64_t multiplier, int maxdeg);

// c * z0^j in H^{2j}(C_k; Z) = Z/k for j > 0 and Z for j = 0.
struct CyclicIntClass {
    int k = 1;
    int power = 0;
    int64_t coeff = 0;
    int degree() const { return 2 * power; }
    bool operator==(const CyclicIntClass& o) const { return k == o.k && power == o.power && coeff == o.coeff; }
};
CyclicIntClass cyclic_z0_power(int k, int power, int64_t coeff = 1);
CyclicIntClass cup(const CyclicIntClass& x, const CyclicIntClass& y);

}  // namespace swdual
