#pragma once

#include "swdual/matrix.hpp"

#include <vector>

namespace swdual {

// A full-rank lattice in Q^d, given by basis rows in ambient coordinates.
struct Lattice {
    IntMatrix basis;
    std::size_t dim() const { return basis.cols(); }
};

// L = {x in Z^d : p^k x in L0 for some k}. Throws SingularBasis.
Lattice saturate_at_p(const Lattice& L0, int64_t p);

// True if every action matrix (row convention x -> x A) maps L into itself.
// Throws DimensionMismatch.
bool check_stability(const Lattice& L, const std::vector<IntMatrix>& actions);

// [L : L0] for L0 inside L. Throws NotContained, SingularBasis.
BigInt lattice_index(const Lattice& L0, const Lattice& L);

// Hermite-style canonical basis (row echelon over Z) for comparing lattices.
IntMatrix canonical_basis(const Lattice& L);
bool same_lattice(const Lattice& a, const Lattice& b);

}  // namespace swdual
