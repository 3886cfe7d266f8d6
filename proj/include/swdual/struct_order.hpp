#pragma once

#include "swdual/group.hpp"
#include "swdual/matrix.hpp"

#include <string>
#include <vector>

namespace swdual {

using QElem = std::vector<int64_t>;      // coordinates in an order basis
using QRat = std::vector<Rational>;      // coordinates in the standard basis 1, i, j, k

// A Z-order of rank 4 in the quaternion algebra (a, b | Q): i^2 = a, j^2 = b, k = ij = -ji.
// The order basis is given by rational coordinate rows in the standard basis.
class StructOrder {
public:
    StructOrder(std::string name, int64_t a, int64_t b, const RatMatrix& basis, std::vector<std::string> basis_names,
                std::vector<std::string> std_names = {"1", "i", "j", "k"});

    const std::string& name() const { return name_; }
    int rank() const { return 4; }
    int64_t a() const { return a_; }
    int64_t b() const { return b_; }
    const RatMatrix& basis() const { return basis_; }
    const std::vector<std::string>& basis_names() const { return names_; }
    // Structure constants: coordinates of b_r * b_s.
    const QElem& product(int r, int s) const { return mult_[r * 4 + s]; }

    QElem one() const { return one_; }
    QElem mul(const QElem& x, const QElem& y) const;
    QElem conj(const QElem& x) const;
    int64_t nrd(const QElem& x) const;
    // Gram matrix of the reduced norm in the order basis.
    const RatMatrix& norm_form() const { return gram_; }

    QRat to_standard(const QElem& x) const;
    // Throws NotClosed when the element is not in the order.
    QElem from_standard(const QRat& q) const;
    QRat std_mul(const QRat& x, const QRat& y) const;
    QRat std_conj(const QRat& x) const;
    Rational std_nrd(const QRat& x) const;

    std::string show(const QElem& x) const;

private:
    std::string name_;
    int64_t a_, b_;
    RatMatrix basis_, basis_inv_, gram_;
    std::vector<std::string> names_, std_names_;
    std::vector<QElem> mult_;
    QElem one_;
};

StructOrder make_lipschitz_order();
StructOrder make_hurwitz_order();        // Z{1, i, j, (1+i+j+k)/2}
StructOrder make_eisenstein_order();     // Z{1, i, sigma, i sigma}, phi^2 = -3, sigma = -(1+phi)/2
StructOrder make_e0_order();             // Z{1, i, phi, i phi}

struct UnitGroup {
    FiniteGroup group;
    std::vector<QElem> elements;  // order coordinates of each group element
};

// The finite unit group of a definite order. Throws NormNotDefinite.
UnitGroup finite_units(const StructOrder& O);

// Row r is the coordinate vector of u * v_r * u^-1 in the basis rows v_r (given in order coordinates).
// Throws NotUnit and NonIntegralEntries.
IntMatrix conj_action_matrix(const StructOrder& O, const QElem& u, const RatMatrix& lattice_basis);
IntMatrix conj_action_matrix(const StructOrder& O, const QElem& u);

}  // namespace swdual
