#include "swdual/matrix.hpp"

#include "swdual/error.hpp"

#include <sstream>

namespace swdual {

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
    return r;
}

IntMatrix to_integer(const RatMatrix& m) {
    IntMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (denominator(m(i, j)) != 1) fail(ErrorKind::NonIntegralEntries, "entry " + m(i, j).str());
            r(i, j) = numerator(m(i, j));
        }
    return r;
}

BigInt determinant(const IntMatrix& m) {
    // Bareiss fraction-free elimination.
    std::size_t n = m.rows();
    if (n != m.cols()) fail(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
    if (n == 0) return 1;
    IntMatrix a = m;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t s = k + 1;
            while (s < n && a(s, k) == 0) ++s;
            if (s == n) return 0;
            a.swap_rows(k, s);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

Rational determinant(const RatMatrix& m) {
    std::size_t n = m.rows();
    if (n != m.cols()) fail(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
    RatMatrix a = m;
    Rational d = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t s = k;
        while (s < n && a(s, k) == 0) ++s;
        if (s == n) return 0;
        if (s != k) {
            a.swap_rows(k, s);
            d = -d;
        }
        d *= a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            Rational f = a(i, k) / a(k, k);
            a.add_row(i, k, -f);
        }
    }
    return d;
}

RatMatrix inverse(const RatMatrix& m) {
    std::size_t n = m.rows();
    if (n != m.cols()) fail(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
    RatMatrix a = m, inv = RatMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t s = k;
        while (s < n && a(s, k) == 0) ++s;
        if (s == n) fail(ErrorKind::SingularBasis, "matrix is singular");
        a.swap_rows(k, s);
        inv.swap_rows(k, s);
        Rational piv = a(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) /= piv;
            inv(k, j) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k) == 0) continue;
            Rational f = -a(i, k);
            a.add_row(i, k, f);
            inv.add_row(i, k, f);
        }
    }
    return inv;
}

std::size_t rank(const RatMatrix& m) {
    RatMatrix a = m;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t s = r;
        while (s < a.rows() && a(s, c) == 0) ++s;
        if (s == a.rows()) continue;
        a.swap_rows(r, s);
        for (std::size_t i = r + 1; i < a.rows(); ++i)
            if (a(i, c) != 0) a.add_row(i, r, -a(i, c) / a(r, c));
        ++r;
    }
    return r;
}

std::vector<BigInt> SmithResult::invariants() const {
    std::vector<BigInt> out;
    for (std::size_t i = 0; i < D.rows() && i < D.cols(); ++i)
        if (D(i, i) != 0) out.push_back(D(i, i));
    return out;
}

SmithResult smith_normal_form(const IntMatrix& m) {
    const std::size_t R = m.rows(), C = m.cols();
    IntMatrix D = m, U = IntMatrix::identity(R), V = IntMatrix::identity(C);

    for (std::size_t t = 0; t < R && t < C; ++t) {
        for (;;) {
            // Bring the smallest nonzero entry of the trailing block to (t, t).
            std::size_t bi = R, bj = C;
            for (std::size_t i = t; i < R; ++i)
                for (std::size_t j = t; j < C; ++j)
                    if (D(i, j) != 0 && (bi == R || abs(D(i, j)) < abs(D(bi, bj)))) {
                        bi = i;
                        bj = j;
                    }
            if (bi == R) goto done;
            if (bi != t) {
                D.swap_rows(t, bi);
                U.swap_rows(t, bi);
            }
            if (bj != t) {
                D.swap_cols(t, bj);
                V.swap_cols(t, bj);
            }

            bool clean = true;
            for (std::size_t i = t + 1; i < R; ++i) {
                if (D(i, t) == 0) continue;
                BigInt q = D(i, t) / D(t, t);
                D.add_row(i, t, -q);
                U.add_row(i, t, -q);
                if (D(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < C; ++j) {
                if (D(t, j) == 0) continue;
                BigInt q = D(t, j) / D(t, t);
                D.add_col(j, t, -q);
                V.add_col(j, t, -q);
                if (D(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            std::size_t bad = R;
            for (std::size_t i = t + 1; i < R && bad == R; ++i)
                for (std::size_t j = t + 1; j < C; ++j)
                    if (D(i, j) % D(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == R) break;
            D.add_row(t, bad, 1);
            U.add_row(t, bad, 1);
        }
        if (D(t, t) < 0) {
            for (std::size_t j = 0; j < C; ++j) D(t, j) = -D(t, j);
            for (std::size_t j = 0; j < R; ++j) U(t, j) = -U(t, j);
        }
    }
done:
    return {U, D, V};
}

std::string to_string(const IntMatrix& m) {
    std::ostringstream os;
    os << m;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    }
    return os << "]";
}

}  // namespace swdual
