#include "swdual/struct_order.hpp"

#include "swdual/error.hpp"

#include <sstream>

namespace swdual {

StructOrder::StructOrder(std::string name, int64_t a, int64_t b, const RatMatrix& basis, std::vector<std::string> basis_names,
                         std::vector<std::string> std_names)
    : name_(std::move(name)), a_(a), b_(b), basis_(basis), names_(std::move(basis_names)), std_names_(std::move(std_names)) {
    if (basis.rows() != 4 || basis.cols() != 4) fail(ErrorKind::DimensionMismatch, "order basis must be 4 x 4");
    basis_inv_ = inverse(basis_);
    one_ = from_standard({1, 0, 0, 0});
    for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s) mult_.push_back(from_standard(std_mul(basis_.row(r), basis_.row(s))));
    RatMatrix D(4, 4);
    D(0, 0) = 1;
    D(1, 1) = -a_;
    D(2, 2) = -b_;
    D(3, 3) = a_ * b_;
    gram_ = basis_ * D * basis_.transpose();
}

QRat StructOrder::std_mul(const QRat& x, const QRat& y) const {
    const Rational A(a_), B(b_);
    QRat z(4);
    z[0] = x[0] * y[0] + A * x[1] * y[1] + B * x[2] * y[2] - A * B * x[3] * y[3];
    z[1] = x[0] * y[1] + x[1] * y[0] - B * x[2] * y[3] + B * x[3] * y[2];
    z[2] = x[0] * y[2] + x[2] * y[0] + A * x[1] * y[3] - A * x[3] * y[1];
    z[3] = x[0] * y[3] + x[3] * y[0] + x[1] * y[2] - x[2] * y[1];
    return z;
}

QRat StructOrder::std_conj(const QRat& x) const { return {x[0], -x[1], -x[2], -x[3]}; }

Rational StructOrder::std_nrd(const QRat& x) const {
    return x[0] * x[0] - Rational(a_) * x[1] * x[1] - Rational(b_) * x[2] * x[2] + Rational(a_ * b_) * x[3] * x[3];
}

QRat StructOrder::to_standard(const QElem& x) const {
    QRat v(4, Rational(0));
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) v[c] += Rational(x[r]) * basis_(r, c);
    return v;
}

QElem StructOrder::from_standard(const QRat& q) const {
    QRat v = basis_inv_.row_times(q);
    QElem x(4);
    for (int r = 0; r < 4; ++r) {
        if (denominator(v[r]) != 1) fail(ErrorKind::NotClosed, "element not in the order " + name_);
        x[r] = static_cast<int64_t>(numerator(v[r]));
    }
    return x;
}

QElem StructOrder::mul(const QElem& x, const QElem& y) const {
    QElem z(4, 0);
    for (int r = 0; r < 4; ++r) {
        if (!x[r]) continue;
        for (int s = 0; s < 4; ++s) {
            if (!y[s]) continue;
            const QElem& m = mult_[r * 4 + s];
            for (int t = 0; t < 4; ++t) z[t] += x[r] * y[s] * m[t];
        }
    }
    return z;
}

QElem StructOrder::conj(const QElem& x) const { return from_standard(std_conj(to_standard(x))); }

int64_t StructOrder::nrd(const QElem& x) const {
    Rational n = std_nrd(to_standard(x));
    ensure(denominator(n) == 1, "reduced norm of an order element is integral");
    return static_cast<int64_t>(numerator(n));
}

std::string StructOrder::show(const QElem& x) const {
    std::ostringstream os;
    bool first = true;
    for (int r = 0; r < 4; ++r) {
        int64_t c = x[r];
        if (!c) continue;
        if (c < 0) os << "-";
        else if (!first) os << "+";
        int64_t m = c < 0 ? -c : c;
        if (names_[r] == "1") os << m;
        else {
            if (m != 1) os << m << "*";
            os << names_[r];
        }
        first = false;
    }
    return first ? "0" : os.str();
}

StructOrder make_lipschitz_order() {
    return StructOrder("Lipschitz", -1, -1, RatMatrix::identity(4), {"1", "i", "j", "k"});
}

StructOrder make_hurwitz_order() {
    RatMatrix B = RatMatrix::identity(4);
    for (int c = 0; c < 4; ++c) B(3, c) = Rational(1, 2);
    return StructOrder("Hurwitz", -1, -1, B, {"1", "i", "j", "h"});
}

StructOrder make_eisenstein_order() {
    RatMatrix B(4, 4);
    B(0, 0) = 1;
    B(1, 1) = 1;
    B(2, 0) = Rational(-1, 2);  // sigma = -(1 + phi)/2
    B(2, 2) = Rational(-1, 2);
    B(3, 1) = Rational(-1, 2);  // i sigma = -(i + i phi)/2
    B(3, 3) = Rational(-1, 2);
    return StructOrder("E3", -1, -3, B, {"1", "i", "sigma", "i*sigma"}, {"1", "i", "phi", "i*phi"});
}

StructOrder make_e0_order() {
    return StructOrder("E0", -1, -3, RatMatrix::identity(4), {"1", "i", "phi", "i*phi"}, {"1", "i", "phi", "i*phi"});
}

namespace {

int64_t isqrt_floor(const Rational& v) {
    if (v < 0) return -1;
    BigInt f = numerator(v) / denominator(v);
    BigInt r = boost::multiprecision::sqrt(f);
    return static_cast<int64_t>(r);
}

}  // namespace

UnitGroup finite_units(const StructOrder& O) {
    const RatMatrix& Q = O.norm_form();
    for (std::size_t k = 1; k <= 4; ++k) {
        RatMatrix minor(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) minor(i, j) = Q(i, j);
        if (determinant(minor) <= 0) fail(ErrorKind::NormNotDefinite, "reduced norm of " + O.name() + " is not positive definite");
    }
    RatMatrix Qi = inverse(Q);
    int64_t bound[4];
    for (int i = 0; i < 4; ++i) bound[i] = isqrt_floor(Qi(i, i));

    std::vector<QElem> units;
    QElem x(4);
    for (x[0] = -bound[0]; x[0] <= bound[0]; ++x[0])
        for (x[1] = -bound[1]; x[1] <= bound[1]; ++x[1])
            for (x[2] = -bound[2]; x[2] <= bound[2]; ++x[2])
                for (x[3] = -bound[3]; x[3] <= bound[3]; ++x[3])
                    if (O.nrd(x) == 1) units.push_back(x);

    std::vector<std::pair<std::string, QElem>> gens;
    for (auto& u : units)
        if (u != O.one()) gens.emplace_back(O.show(u), u);
    UnitGroup out;
    std::function<QElem(const QElem&, const QElem&)> mul = [&](const QElem& a, const QElem& b) { return O.mul(a, b); };
    std::function<QElem(const QElem&)> key = [](const QElem& a) { return a; };
    std::function<std::string(const QElem&)> show = [&](const QElem& a) { return O.show(a); };
    out.group = group_closure<QElem, QElem>(O.one(), gens, mul, key, show, &out.elements, O.name() + "^x");
    if (out.elements.size() != units.size()) fail(ErrorKind::NotClosed, "norm-one elements are not closed under products");
    return out;
}

IntMatrix conj_action_matrix(const StructOrder& O, const QElem& u, const RatMatrix& lattice_basis) {
    if (O.nrd(u) != 1) fail(ErrorKind::NotUnit, O.show(u) + " has reduced norm " + std::to_string(O.nrd(u)));
    const QRat us = O.to_standard(u), ui = O.std_conj(us);
    const std::size_t d = lattice_basis.rows();
    // Standard coordinates of the lattice basis.
    RatMatrix L = lattice_basis * O.basis();
    RatMatrix Linv = inverse(L);
    RatMatrix M(d, d);
    for (std::size_t r = 0; r < d; ++r) {
        QRat img = O.std_mul(O.std_mul(us, L.row(r)), ui);
        auto coords = Linv.row_times(img);
        for (std::size_t c = 0; c < d; ++c) M(r, c) = coords[c];
    }
    return to_integer(M);
}

IntMatrix conj_action_matrix(const StructOrder& O, const QElem& u) {
    return conj_action_matrix(O, u, RatMatrix::identity(4));
}

}  // namespace swdual
