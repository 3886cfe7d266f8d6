#include "doctest.h"

#include "swdual/arith.hpp"
#include "swdual/characters.hpp"
#include "swdual/cyclotomic.hpp"
#include "swdual/error.hpp"
#include "swdual/fp_linalg.hpp"
#include "swdual/matrix.hpp"
#include "swdual/polynomial.hpp"

#include <random>

using namespace swdual;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, int r, int c, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

bool is_diagonal_chain(const IntMatrix& D) {
    for (std::size_t i = 0; i < D.rows(); ++i)
        for (std::size_t j = 0; j < D.cols(); ++j)
            if (i != j && D(i, j) != 0) return false;
    const std::size_t n = std::min(D.rows(), D.cols());
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (D(i, i) < 0) return false;
        if (D(i, i) == 0) {
            if (D(i + 1, i + 1) != 0) return false;
        } else if (D(i + 1, i + 1) % D(i, i) != 0) {
            return false;
        }
    }
    return true;
}

// s_k from the recursion s_k = sum_{i<k} (-1)^{i-1} c_i s_{k-i} + (-1)^{k-1} k c_k, all in K variables.
MPoly newton_by_recursion(int k, int K) {
    std::vector<MPoly> s(k + 1, MPoly(K));
    for (int j = 1; j <= k; ++j) {
        MPoly acc(K);
        for (int i = 1; i < j; ++i) {
            MPoly t = MPoly::var(K, i - 1) * s[j - i];
            acc = (i % 2 == 1) ? acc + t : acc - t;
        }
        MPoly last = MPoly::var(K, j - 1) * Rational(j);
        acc = (j % 2 == 1) ? acc + last : acc - last;
        s[j] = acc;
    }
    return s[k];
}

}  // namespace

TEST_CASE("smith form of diag(2,3)") {
    IntMatrix m{{2, 0}, {0, 3}};
    auto r = smith_normal_form(m);
    CHECK(r.D == IntMatrix{{1, 0}, {0, 6}});
    CHECK(r.U * m * r.V == r.D);
}

TEST_CASE("smith form of identity and zero") {
    auto id = IntMatrix::identity(3);
    CHECK(smith_normal_form(id).D == id);
    IntMatrix z(2, 2);
    auto r = smith_normal_form(z);
    CHECK(r.D.is_zero());
    CHECK(r.invariants().empty());
}

TEST_CASE("smith form property on random matrices") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 150; ++trial) {
        std::uniform_int_distribution<int> dim(1, 5);
        const int r = dim(rng), c = dim(rng);
        IntMatrix m = random_matrix(rng, r, c, -9, 9);
        auto s = smith_normal_form(m);
        REQUIRE(s.U * m * s.V == s.D);
        CHECK(abs(determinant(s.U)) == 1);
        CHECK(abs(determinant(s.V)) == 1);
        CHECK(is_diagonal_chain(s.D));
        if (r == c) {
            BigInt prod = 1;
            for (std::size_t i = 0; i < s.D.rows(); ++i) prod *= s.D(i, i);
            CHECK(abs(determinant(m)) == prod);
        }
    }
}

TEST_CASE("rational inverse and rank") {
    RatMatrix m = to_rational(IntMatrix{{2, 1}, {1, 1}});
    CHECK(m * inverse(m) == RatMatrix::identity(2));
    CHECK(rank(to_rational(IntMatrix{{1, 2}, {2, 4}})) == 1);
    CHECK_THROWS_AS(inverse(to_rational(IntMatrix{{1, 2}, {2, 4}})), Error);
    RatMatrix half(1, 1);
    half(0, 0) = Rational(1, 2);
    CHECK_THROWS_AS(to_integer(half), Error);
}

TEST_CASE("sym_to_elementary examples") {
    const int m = 2;
    MPoly f = MPoly::var(m, 0).pow(2) + MPoly::var(m, 1).pow(2);
    MPoly g = sym_to_elementary(f);
    MPoly expect = MPoly::var(m, 0).pow(2) - MPoly::var(m, 1) * Rational(2);
    CHECK(g == expect);

    for (int k = 1; k <= 3; ++k) {
        MPoly e = elementary_symmetric(3, k);
        CHECK(sym_to_elementary(e) == MPoly::var(3, k - 1));
    }
    MPoly t123 = MPoly::var(3, 0) * MPoly::var(3, 1) * MPoly::var(3, 2);
    CHECK(sym_to_elementary(t123) == MPoly::var(3, 2));
}

TEST_CASE("sym_to_elementary rejects non-symmetric input") {
    MPoly f = MPoly::var(2, 0) * MPoly::var(2, 0) + MPoly::var(2, 1);
    CHECK_FALSE(f.is_symmetric());
    try {
        sym_to_elementary(f);
        FAIL("expected NotSymmetric");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotSymmetric);
    }
}

TEST_CASE("sym_to_elementary round trip") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> coef(-4, 4), expo(0, 2);
    for (int m = 1; m <= 4; ++m) {
        std::vector<MPoly> es;
        for (int k = 1; k <= m; ++k) es.push_back(elementary_symmetric(m, k));
        for (int trial = 0; trial < 12; ++trial) {
            MPoly g(m);
            for (int t = 0; t < 4; ++t) {
                Monomial mono(m);
                for (auto& x : mono) x = expo(rng);
                g.add_term(mono, Rational(coef(rng)));
            }
            MPoly f = g.substitute(es);
            REQUIRE(f.is_symmetric());
            CHECK(sym_to_elementary(f) == g);
        }
    }
}

TEST_CASE("newton polynomials") {
    CHECK(newton_s_k(1) == MPoly::var(1, 0));
    MPoly c1 = MPoly::var(2, 0), c2 = MPoly::var(2, 1);
    CHECK(newton_s_k(2) == c1.pow(2) - c2 * Rational(2));
    MPoly d1 = MPoly::var(3, 0), d2 = MPoly::var(3, 1), d3 = MPoly::var(3, 2);
    CHECK(newton_s_k(3) == d1.pow(3) - d1 * d2 * Rational(3) + d3 * Rational(3));
    for (int k = 1; k <= 6; ++k) CHECK(newton_s_k(k) == newton_by_recursion(k, k));
}

TEST_CASE("newton polynomials give power sums") {
    for (int m = 1; m <= 5; ++m)
        for (int k = 1; k <= std::min(m, 5); ++k) {
            std::vector<MPoly> es;
            for (int j = 1; j <= k; ++j) es.push_back(elementary_symmetric(m, j));
            CHECK(newton_s_k(k).substitute(es) == power_sum(m, k));
        }
}

TEST_CASE("polynomials mod p") {
    MPoly x = MPoly::var(1, 0, 3);
    MPoly f = (x + MPoly::constant(1, 1, 3)).pow(3);
    CHECK(f == x.pow(3) + MPoly::constant(1, 1, 3));
}

TEST_CASE("cyclotomic arithmetic") {
    Cyclo z = Cyclo::root_power(3, 1);
    CHECK((Cyclo(3, 1) + z + z * z).is_zero());
    CHECK(z.conj() == z * z);
    CHECK((z * z * z).as_integer() == 1);
    CHECK(z.lift(12) == Cyclo::root_power(12, 4));
    Cyclo i = Cyclo::root_power(4, 1);
    CHECK(i * i == Cyclo(4, -1));
    CHECK((Cyclo(4, 2) + i * 2).div_exact(2) == Cyclo(4, 1) + i);
    CHECK_FALSE((Cyclo(4, 1) + i).div_exact(2).has_value());
    CHECK(Cyclo::root_power(8, 1).galois(3) == Cyclo::root_power(8, 3));
}

TEST_CASE("cyclotomic conjugation is an involution") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> c(-5, 5);
    for (int N : {1, 2, 5, 8, 12, 16, 80}) {
        for (int t = 0; t < 20; ++t) {
            Cyclo x(N);
            for (int k = 0; k < N && k < 10; ++k) x += Cyclo::root_power(N, k) * c(rng);
            CHECK(x.conj().conj() == x);
            CHECK((x * x.conj()).conj() == x * x.conj());
        }
    }
}

TEST_CASE("character degrees are nonnegative integers") {
    for (auto G : {make_quaternion8(), make_g24(), make_metacyclic(5, 16, 2)}) {
        CharacterTable T(G);
        for (const auto& chi : T.irreducibles()) {
            auto d = chi[0].as_integer();
            REQUIRE(d.has_value());
            CHECK(*d > 0);
        }
        auto r = T.regular()[0].as_integer();
        CHECK(r == G.order());
    }
}

TEST_CASE("modular arithmetic helpers") {
    CHECK(mod(-7, 3) == 2);
    CHECK(inv_mod(3, 7) == 5);
    CHECK_THROWS_AS(inv_mod(2, 4), Error);
    CHECK(primitive_root(5) == 2);
    CHECK(primitive_root(7) == 3);
    CHECK(mult_order(2, 7) == 3);
    CHECK(padic_val(72, 2) == 3);
    CHECK(factorial_val(9, 3) == 4);
    CHECK(signed_residue(5, 8) == -3);
    CHECK(signed_residue(4, 8) == 4);
    CHECK(prime_factors(360) == std::vector<int64_t>{2, 3, 5});
}

TEST_CASE("finite field row spaces") {
    FpRowSpace S(3, 3);
    CHECK(S.insert({1, 2, 0}));
    CHECK(S.insert({0, 1, 1}));
    CHECK_FALSE(S.insert({1, 0, 1}));  // (1,2,0) + (0,1,1) mod 3
    CHECK(S.rank() == 2);
    auto ns = S.nullspace();
    REQUIRE(ns.size() == 1);
    for (const auto& r : S.rows()) {
        int dot = 0;
        for (int j = 0; j < 3; ++j) dot += r[j] * ns[0][j];
        CHECK(dot % 3 == 0);
    }
    CHECK(mod_rank({{1, 2}, {2, 4}}, 7) == 1);
    CHECK(mod_nullspace({{1, 2}, {2, 4}}, 2, 7).size() == 1);
}
