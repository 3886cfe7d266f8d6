#include "swdual/lattice.hpp"

#include "swdual/error.hpp"

namespace swdual {

namespace {

void require_full_rank(const IntMatrix& B) {
    if (B.rows() != B.cols()) fail(ErrorKind::SingularBasis, "basis must be square");
    if (determinant(B) == 0) fail(ErrorKind::SingularBasis, "basis is singular");
}

}  // namespace

Lattice saturate_at_p(const Lattice& L0, int64_t p) {
    require_full_rank(L0.basis);
    // U B V = D, so L0 = Z^d D V^-1; strip the p-part of each invariant factor.
    SmithResult s = smith_normal_form(L0.basis);
    IntMatrix Vinv = to_integer(inverse(to_rational(s.V)));
    const std::size_t d = L0.basis.rows();
    IntMatrix D = s.D;
    for (std::size_t i = 0; i < d; ++i)
        while (D(i, i) % p == 0) D(i, i) /= p;
    Lattice L{D * Vinv};
    return {canonical_basis(L)};
}

bool check_stability(const Lattice& L, const std::vector<IntMatrix>& actions) {
    require_full_rank(L.basis);
    RatMatrix Binv = inverse(to_rational(L.basis));
    for (const auto& A : actions) {
        if (A.rows() != L.dim() || A.cols() != L.dim()) fail(ErrorKind::DimensionMismatch, "action matrix size");
        RatMatrix C = to_rational(L.basis * A) * Binv;
        for (std::size_t i = 0; i < C.rows(); ++i)
            for (std::size_t j = 0; j < C.cols(); ++j)
                if (denominator(C(i, j)) != 1) return false;
    }
    return true;
}

BigInt lattice_index(const Lattice& L0, const Lattice& L) {
    require_full_rank(L0.basis);
    require_full_rank(L.basis);
    if (L0.dim() != L.dim()) fail(ErrorKind::DimensionMismatch, "lattice dimensions differ");
    RatMatrix C = to_rational(L0.basis) * inverse(to_rational(L.basis));
    for (std::size_t i = 0; i < C.rows(); ++i)
        for (std::size_t j = 0; j < C.cols(); ++j)
            if (denominator(C(i, j)) != 1) fail(ErrorKind::NotContained, "L0 is not contained in L");
    BigInt d = determinant(to_integer(C));
    return d < 0 ? BigInt(-d) : d;
}

IntMatrix canonical_basis(const Lattice& L) {
    // Row-style Hermite normal form by integer row operations.
    IntMatrix H = L.basis;
    const std::size_t R = H.rows(), C = H.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        for (;;) {
            std::size_t best = R;
            for (std::size_t i = r; i < R; ++i)
                if (H(i, c) != 0 && (best == R || abs(H(i, c)) < abs(H(best, c)))) best = i;
            if (best == R) break;
            H.swap_rows(r, best);
            bool done = true;
            for (std::size_t i = r + 1; i < R; ++i) {
                if (H(i, c) == 0) continue;
                BigInt q = H(i, c) / H(r, c);
                H.add_row(i, r, -q);
                if (H(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (r < R && H(r, c) != 0) {
            if (H(r, c) < 0)
                for (std::size_t j = 0; j < C; ++j) H(r, j) = -H(r, j);
            for (std::size_t i = 0; i < r; ++i) {
                BigInt q = H(i, c) / H(r, c);
                if (H(i, c) - q * H(r, c) < 0) q -= 1;
                H.add_row(i, r, -q);
            }
            ++r;
        }
    }
    return H;
}

bool same_lattice(const Lattice& a, const Lattice& b) { return canonical_basis(a) == canonical_basis(b); }

}  // namespace swdual
