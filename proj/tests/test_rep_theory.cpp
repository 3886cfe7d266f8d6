#include "doctest.h"

#include "swdual/cases.hpp"
#include "swdual/characters.hpp"
#include "swdual/error.hpp"
#include "swdual/struct_order.hpp"

#include <algorithm>
#include <random>

using namespace swdual;

namespace {

ClassFn add(const ClassFn& a, const ClassFn& b) {
    ClassFn c = a;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
    return c;
}

ClassFn random_character(const CharacterTable& T, std::mt19937_64& rng, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    std::vector<int64_t> m(T.num_classes());
    for (auto& x : m) x = d(rng);
    return T.combine(m);
}

std::vector<int> sorted_dims(const CharacterTable& T) {
    std::vector<int> d;
    for (int i = 0; i < T.num_classes(); ++i) d.push_back(T.dim(i));
    std::sort(d.begin(), d.end());
    return d;
}

int endo_dim(RealType t) { return t == RealType::Real ? 1 : (t == RealType::Complex ? 2 : 4); }

bool is_trivial_linear(const ClassFn& chi) {
    for (const auto& v : chi)
        if (v != Cyclo(v.order(), 1)) return false;
    return true;
}

}  // namespace

TEST_CASE("character table of G24") {
    CharacterTable T(make_g24());
    CHECK(sorted_dims(T) == std::vector<int>{1, 1, 1, 2, 2, 2, 3});
}

TEST_CASE("cyclic groups have linear characters only") {
    for (int k : {1, 2, 5, 9, 12}) {
        CharacterTable T(make_cyclic(k));
        CHECK(T.num_classes() == k);
        for (int i = 0; i < k; ++i) CHECK(T.dim(i) == 1);
    }
}

TEST_CASE("character table of C5 x| C16") {
    CharacterTable T(make_metacyclic(5, 16, 2));
    auto d = sorted_dims(T);
    CHECK(std::count(d.begin(), d.end(), 1) == 16);
    CHECK(std::count(d.begin(), d.end(), 4) == 4);
    CHECK(d.size() == 20);
    // C16 acts on C5 through a quotient of order 4, so inducing a nontrivial character of C5
    // gives each degree-4 irreducible exactly once.
    FiniteGroup G = T.group();
    Subgroup C5 = make_subgroup(G, {0, 1, 2, 3, 4});
    CharacterTable T5(C5.group);
    for (int a = 1; a < 5; ++a) {
        auto m = T.decompose(induce_fn(T5, T, C5.embed, T5.irreducibles()[a]));
        int nz = 0;
        for (int i = 0; i < T.num_classes(); ++i)
            if (m[i]) {
                ++nz;
                CHECK(m[i] == 1);
                CHECK(T.dim(i) == 4);
            }
        CHECK(nz == 4);
    }
}

TEST_CASE("orthogonality relations") {
    for (const auto& G : {make_quaternion8(), make_g12(), make_g24(), make_metacyclic(7, 36, 3)}) {
        CharacterTable T(G);
        const int h = T.num_classes();
        for (int i = 0; i < h; ++i)
            for (int j = 0; j < h; ++j) CHECK(T.inner(T.irreducibles()[i], T.irreducibles()[j]) == (i == j ? 1 : 0));
        for (int a = 0; a < h; ++a)
            for (int b = 0; b < h; ++b) {
                Cyclo s(T.exponent());
                for (const auto& chi : T.irreducibles()) s += chi[a] * chi[b].conj();
                const int64_t want = a == b ? G.order() / G.classes()[a].size : 0;
                CHECK(s == Cyclo(T.exponent(), want));
            }
    }
}

TEST_CASE("real irreducibles of Q8, C_p and C2") {
    FiniteGroup Q = make_quaternion8();
    CharacterTable T(Q);
    T.set_real_names(quaternion_real_names(T, *Q.find("i"), *Q.find("j")));
    auto reals = T.real_irreducibles();
    REQUIRE(reals.size() == 5);
    std::vector<std::string> names;
    for (const auto& R : reals) names.push_back(R.name);
    std::sort(names.begin(), names.end());
    CHECK(names == std::vector<std::string>{"1", "H", "chi_i", "chi_j", "chi_k"});
    CHECK(reals[T.real_index("H")].type == RealType::Quaternionic);
    CHECK(reals[T.real_index("H")].dim == 4);
    CHECK(T.frobenius_schur(reals[T.real_index("H")].complex_index) == -1);

    for (int p : {3, 5, 7}) {
        CharacterTable C(make_cyclic(p));
        auto r = C.real_irreducibles();
        CHECK(static_cast<int>(r.size()) == 1 + (p - 1) / 2);
        for (std::size_t k = 1; k < r.size(); ++k) {
            CHECK(r[k].type == RealType::Complex);
            CHECK(r[k].dim == 2);
        }
    }
    CharacterTable C2(make_cyclic(2));
    REQUIRE(C2.real_irreducibles().size() == 2);
    for (const auto& R : C2.real_irreducibles()) {
        CHECK(R.type == RealType::Real);
        CHECK(R.dim == 1);
    }
}

TEST_CASE("regular representation over the reals") {
    for (const auto& G : {make_quaternion8(), make_g12(), make_g24(), make_metacyclic(5, 16, 2)}) {
        CharacterTable T(G);
        auto m = T.decompose_real(T.regular());
        int total = 0;
        for (std::size_t i = 0; i < m.size(); ++i) {
            const auto& R = T.real_irreducibles()[i];
            CHECK(m[i] == R.dim / endo_dim(R.type));
            CHECK(std::abs(T.frobenius_schur(R.complex_index)) <= 1);
            total += static_cast<int>(m[i]) * R.dim;
        }
        CHECK(total == G.order());
        auto t = T.decompose_real(T.trivial());
        CHECK(t[0] == 1);
        CHECK(std::count(t.begin(), t.end(), 0) == static_cast<long>(t.size()) - 1);
    }
}

TEST_CASE("regular representation of Q8 is H_ad + H") {
    StructOrder O = make_lipschitz_order();
    UnitGroup U = finite_units(O);
    CharacterTable T(U.group);
    auto idx = [&](QElem q) {
        for (std::size_t a = 0; a < U.elements.size(); ++a)
            if (U.elements[a] == q) return static_cast<int>(a);
        FAIL("unit not found");
        return 0;
    };
    const int i = idx({0, 1, 0, 0}), j = idx({0, 0, 1, 0});
    T.set_real_names(quaternion_real_names(T, i, j));
    ConjugationRep ad = conjugation_rep(O, U, T, RatMatrix::identity(4));
    std::vector<int64_t> want(T.real_irreducibles().size(), 0);
    for (const char* nm : {"1", "chi_i", "chi_j", "chi_k"}) want[T.real_index(nm)] = 1;
    CHECK(ad.ro == want);
    auto rho = T.decompose_real(T.regular());
    CHECK(rho[T.real_index("H")] == 1);
    want[T.real_index("H")] = 1;
    CHECK(rho == want);

    Subgroup C4 = make_subgroup(U.group, U.group.generated_by({i}));
    CharacterTable T4(C4.group);
    auto m = T4.decompose_real(restrict_fn(T, T4, C4.embed, ad.character));
    // 2 trivial + 2 sign, and nothing on the faithful pair.
    int sign_idx = -1;
    for (std::size_t r = 0; r < T4.real_irreducibles().size(); ++r)
        if (T4.real_irreducibles()[r].type == RealType::Real && r != 0) sign_idx = static_cast<int>(r);
    REQUIRE(sign_idx > 0);
    CHECK(m[0] == 2);
    CHECK(m[sign_idx] == 2);
}

TEST_CASE("E0 under C4 is two trivial plus two sign") {
    StructOrder E0 = make_e0_order();
    FiniteGroup C4 = make_cyclic(4);
    CharacterTable T(C4);
    std::vector<IntMatrix> mats;
    QElem ik{1, 0, 0, 0}, i{0, 1, 0, 0};
    for (int k = 0; k < 4; ++k) {
        mats.push_back(conj_action_matrix(E0, ik));
        ik = E0.mul(ik, i);
    }
    auto rep = conjugation_rep_from_matrices(T, mats);
    std::vector<int64_t> tr;
    for (const auto& cl : C4.classes()) tr.push_back(C4.elem_order(cl.rep) == 4 ? 0 : 4);
    CHECK(rep.character == T.from_integers(tr));

    CharacterTable T1(make_cyclic(1));
    auto triv = conjugation_rep_from_matrices(T1, {IntMatrix::identity(4)});
    CHECK(triv.ro == std::vector<int64_t>{4});
}

TEST_CASE("restriction of V to C_p in the honda case") {
    CaseData c = make_case_honda(3);
    const CharacterTable& T = *c.table;
    Subgroup C = make_subgroup(T.group(), {0, 1, 2});
    CharacterTable TC(C.group);
    ClassFn want = TC.trivial();
    ClassFn reg = TC.regular();
    for (int k = 0; k < c.n - 1; ++k) want = add(want, reg);
    CHECK(restrict_fn(T, TC, C.embed, c.V) == want);
}

TEST_CASE("induction and restriction") {
    CharacterTable T(make_g24());
    std::vector<int> all(24);
    for (int g = 0; g < 24; ++g) all[g] = g;
    CHECK(induce_fn(T, T, all, T.trivial()) == T.trivial());

    std::mt19937_64 rng(6);
    FiniteGroup G = make_g24();
    std::vector<int> q8;
    for (int x = 0; x < 24; ++x)
        if (4 % G.elem_order(x) == 0) q8.push_back(x);
    Subgroup Q = make_subgroup(G, q8);
    CharacterTable TQ(Q.group);
    for (int t = 0; t < 50; ++t) {
        ClassFn a = random_character(TQ, rng, -2, 2), b = random_character(T, rng, -2, 2);
        CHECK(T.inner(induce_fn(TQ, T, Q.embed, a), b) == TQ.inner(a, restrict_fn(T, TQ, Q.embed, b)));
    }
    CHECK(induce_fn(TQ, T, Q.embed, TQ.regular()) == T.regular());
}

TEST_CASE("determinant characters") {
    CaseData c = make_case_p3n2();
    const CharacterTable& T = *c.table;
    CHECK_FALSE(is_trivial_linear(T.det(c.rho)));
    CHECK(is_trivial_linear(T.det(c.V)));
    for (const auto& R : T.real_irreducibles())
        if (R.type != RealType::Real) CHECK(is_trivial_linear(T.det(R.character)));
    for (int p : {5, 7}) {
        CaseData h = make_case_honda(p);
        for (const auto& R : h.table->real_irreducibles())
            if (R.type == RealType::Complex) CHECK(is_trivial_linear(h.table->det(R.character)));
    }
}

TEST_CASE("determinant is multiplicative") {
    std::mt19937_64 rng(12);
    for (const auto& G : {make_g12(), make_quaternion8()}) {
        CharacterTable T(G);
        for (int t = 0; t < 30; ++t) {
            ClassFn a = random_character(T, rng, 0, 2), b = random_character(T, rng, 0, 2);
            ClassFn da = T.det(a), db = T.det(b), dab = T.det(add(a, b));
            for (std::size_t k = 0; k < da.size(); ++k) CHECK(dab[k] == da[k] * db[k]);
        }
    }
}

TEST_CASE("eigenvalue multiplicities") {
    FiniteGroup Q = make_quaternion8();
    CharacterTable T(Q);
    auto m = T.element_multiplicities(T.regular(), *Q.find("i"));
    CHECK(m == std::vector<int64_t>{2, 2, 2, 2});
    CHECK(T.element_multiplicities(T.trivial(), *Q.find("i")) == std::vector<int64_t>{1, 0, 0, 0});
}

TEST_CASE("decomposition rejects non-characters") {
    CharacterTable T(make_quaternion8());
    std::vector<int64_t> v(T.num_classes(), 0);
    v[0] = 1;
    try {
        T.decompose(T.from_integers(v));
        FAIL("expected NotAClassFunction");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotAClassFunction);
    }
}
