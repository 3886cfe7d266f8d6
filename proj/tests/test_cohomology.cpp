#include "doctest.h"

#include "swdual/cohomology.hpp"
#include "swdual/error.hpp"

#include <random>

using namespace swdual;

namespace {

int binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    int r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

// Degree-k dimension of an exterior algebra on g degree-1 generators tensor a polynomial ring on g degree-2 ones.
int exterior_poly_dim(int g, int k) {
    int total = 0;
    for (int e = 0; e <= g && e <= k; ++e)
        if ((k - e) % 2 == 0) total += binom(g, e) * binom((k - e) / 2 + g - 1, g - 1);
    return total;
}

CohClass random_class(const BarModelPtr& M, int k, std::mt19937_64& rng) {
    FpVec c(M->dim(k));
    for (auto& x : c) x = static_cast<uint8_t>(rng() % M->p());
    return make_class(M, k, c);
}

int find(const FiniteGroup& G, const std::string& name) {
    auto x = G.find(name);
    REQUIRE(x.has_value());
    return *x;
}

Subgroup cyclic_sub(const FiniteGroup& G, int g) { return make_subgroup(G, G.generated_by({g})); }

}  // namespace

TEST_CASE("bar cohomology of Q8 mod 2") { CHECK(bar_cohomology(make_quaternion8(), 2, 4) == std::vector<int>{1, 2, 2, 1, 1}); }

TEST_CASE("bar cohomology of C9 mod 3") { CHECK(bar_cohomology(make_cyclic(9), 3, 4) == std::vector<int>{1, 1, 1, 1, 1}); }

TEST_CASE("bar cohomology of elementary abelian groups") {
    auto dims = bar_cohomology(make_direct_product(make_cyclic(3, "a"), make_cyclic(3, "b")), 3, 3);
    CHECK(dims == std::vector<int>{1, 2, 3, 4});
    for (int k = 0; k <= 3; ++k) CHECK(dims[k] == exterior_poly_dim(2, k));
    auto c5 = bar_cohomology(make_cyclic(5), 5, 3);
    for (int k = 0; k <= 3; ++k) CHECK(c5[k] == exterior_poly_dim(1, k));
}

TEST_CASE("cohomology of groups of order prime to p vanishes") {
    CHECK(bar_cohomology(make_cyclic(4), 3, 3) == std::vector<int>{1, 0, 0, 0});
    CHECK(bar_cohomology(make_quaternion8(), 3, 3) == std::vector<int>{1, 0, 0, 0});
}

TEST_CASE("bar model size cap") {
    try {
        BarModel M(make_cyclic(100), 2, 4);
        FAIL("expected TooLarge");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::TooLarge);
    }
}

TEST_CASE("coboundary squares to zero") {
    std::mt19937_64 rng(8);
    for (const auto& [G, p] : {std::pair{make_quaternion8(), 2}, std::pair{make_g12(), 3}, std::pair{make_cyclic(9), 3}}) {
        auto M = make_bar_model(G, p, 3);
        for (int k = 0; k + 2 <= 3; ++k)
            for (int t = 0; t < 5; ++t) {
                FpVec f(M->cochain_dim(k));
                for (auto& x : f) x = static_cast<uint8_t>(rng() % p);
                FpVec df = M->coboundary(f, k);
                CHECK(M->is_cocycle(df, k + 1));
                CHECK(M->is_coboundary(df, k + 1));
                auto zero = M->coboundary(df, k + 1);
                for (auto x : zero) CHECK(x == 0);
            }
        // Adding a coboundary does not change the class.
        for (int k = 1; k <= 2; ++k)
            for (const auto& b : M->basis(k)) {
                FpVec z = b, dz = M->random_coboundary(k, rng);
                for (std::size_t i = 0; i < z.size(); ++i) z[i] = static_cast<uint8_t>((z[i] + dz[i]) % p);
                CHECK(class_of_cocycle(M, k, z) == class_of_cocycle(M, k, b));
            }
    }
}

TEST_CASE("cup products") {
    for (int p : {3, 5}) {
        auto M = make_bar_model(make_cyclic(p), p, 2);
        CohClass x = make_class(M, 1, {1});
        CHECK(cup(x, x).is_zero());
        CHECK_FALSE(cup(unit_class(M), x).is_zero());
        CHECK(cup(unit_class(M), x) == x);
    }
    auto Q = make_bar_model(make_quaternion8(), 2, 3);
    for (const auto& a : Q->basis(1))
        for (const auto& b : Q->basis(1)) {
            CohClass ca = class_of_cocycle(Q, 1, a), cb = class_of_cocycle(Q, 1, b);
            CHECK(cup(ca, cb) == cup(cb, ca));
        }
    CyclicIntClass z0 = cyclic_z0_power(5, 1);
    CHECK(cup(z0, cyclic_z0_power(5, 3)) == cyclic_z0_power(5, 4));
    CHECK(cup(cyclic_z0_power(3, 1, 2), cyclic_z0_power(3, 1, 2)) == cyclic_z0_power(3, 2, 1));
}

TEST_CASE("cup products are graded commutative and associative") {
    std::mt19937_64 rng(21);
    auto M = make_bar_model(make_direct_product(make_cyclic(3, "a"), make_cyclic(3, "b")), 3, 3);
    for (int t = 0; t < 40; ++t) {
        const int a = static_cast<int>(rng() % 2) + 1, b = static_cast<int>(rng() % (3 - a)) + 1;
        CohClass x = random_class(M, a, rng), y = random_class(M, b, rng);
        const int sign = (a * b) % 2 ? 2 : 1;
        CHECK(cup(x, y) == cup(y, x).scaled(sign));
        if (a + b <= 2) {
            CohClass z = random_class(M, 1, rng);
            CHECK(cup(cup(x, y), z) == cup(x, cup(y, z)));
        }
    }
}

TEST_CASE("cup rejects classes from different groups") {
    auto A = make_bar_model(make_cyclic(3), 3, 2), B = make_bar_model(make_cyclic(9), 3, 2);
    try {
        cup(make_class(A, 1, {1}), make_class(B, 1, {1}));
        FAIL("expected MixedGroups");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::MixedGroups);
    }
}

TEST_CASE("restriction from C9 to C3") {
    FiniteGroup G = make_cyclic(9);
    auto M = make_bar_model(G, 3, 3);
    Subgroup H = cyclic_sub(G, 3);
    auto MH = make_bar_model(H.group, 3, 3);
    CHECK(restriction(make_class(M, 1, {1}), MH, H.embed).is_zero());
    CHECK(restriction(make_class(M, 3, {1}), MH, H.embed).is_zero());
    CHECK(restriction(unit_class(M), MH, H.embed) == unit_class(MH));
    // The degree-2 class is the Bockstein of a generator of Hom(C9, Z/9) and survives restriction.
    CHECK_FALSE(restriction(make_class(M, 2, {1}), MH, H.embed).is_zero());
}

TEST_CASE("restriction to the trivial subgroup is the augmentation") {
    FiniteGroup G = make_quaternion8();
    auto M = make_bar_model(G, 2, 3);
    Subgroup E = make_subgroup(G, {0});
    auto ME = make_bar_model(E.group, 2, 3);
    for (int k = 1; k <= 3; ++k)
        for (const auto& b : M->basis(k)) CHECK(restriction(class_of_cocycle(M, k, b), ME, E.embed).is_zero());
    CHECK(restriction(unit_class(M), ME, E.embed) == unit_class(ME));
}

TEST_CASE("restriction from G12 to C4 mod 2") {
    FiniteGroup G = make_g12();
    auto M = make_bar_model(G, 2, 2);
    Subgroup H = cyclic_sub(G, find(G, "t"));
    auto MH = make_bar_model(H.group, 2, 2);
    CHECK(M->dims() == MH->dims());
    for (int k = 0; k <= 2; ++k)
        for (const auto& b : M->basis(k)) CHECK_FALSE(restriction(class_of_cocycle(M, k, b), MH, H.embed).is_zero());
}

TEST_CASE("restriction is a ring map") {
    std::mt19937_64 rng(4);
    FiniteGroup G = make_g12();
    auto M = make_bar_model(G, 2, 3);
    Subgroup H = cyclic_sub(G, find(G, "t"));
    auto MH = make_bar_model(H.group, 2, 3);
    for (int t = 0; t < 30; ++t) {
        const int a = static_cast<int>(rng() % 2), b = static_cast<int>(rng() % 2) + 1;
        CohClass x = random_class(M, a, rng), y = random_class(M, b, rng);
        CHECK(restriction(cup(x, y), MH, H.embed) == cup(restriction(x, MH, H.embed), restriction(y, MH, H.embed)));
        CHECK(restriction(x + x, MH, H.embed) == restriction(x, MH, H.embed).scaled(2));
    }
    auto G24 = make_g24();
    auto M24 = make_bar_model(G24, 2, 1);
    CHECK_THROWS_AS(restriction(unit_class(M24), make_bar_model(make_cyclic(4), 2, 1), {0, 2, 4, 6}), Error);
}

TEST_CASE("transfer") {
    FiniteGroup G = make_g12();
    auto M = make_bar_model(G, 3, 3);
    Subgroup H = cyclic_sub(G, find(G, "s"));
    auto MH = make_bar_model(H.group, 3, 3);
    // Index 4 is a unit mod 3, so tr(res x) = x.
    for (int k = 0; k <= 3; ++k)
        for (const auto& b : M->basis(k)) {
            CohClass x = class_of_cocycle(M, k, b);
            CHECK(transfer(restriction(x, MH, H.embed), M, H.embed) == x);
        }
    CHECK(transfer(unit_class(MH), M, H.embed) == unit_class(M).scaled(4 % 3));

    FiniteGroup C9 = make_cyclic(9);
    auto M9 = make_bar_model(C9, 3, 2);
    Subgroup C3 = cyclic_sub(C9, 3);
    auto M3 = make_bar_model(C3.group, 3, 2);
    CHECK(transfer(make_class(M3, 2, {1}), M9, C3.embed).is_zero());
    CHECK(transfer(unit_class(M3), M9, C3.embed).is_zero());
    CHECK_FALSE(transfer(make_class(M3, 1, {1}), M9, C3.embed).is_zero());
}

TEST_CASE("transfer does not depend on coset representatives") {
    std::mt19937_64 rng(13);
    FiniteGroup G = make_quaternion8();
    auto M = make_bar_model(G, 2, 2);
    Subgroup H = cyclic_sub(G, find(G, "i"));
    auto MH = make_bar_model(H.group, 2, 2);
    for (int t = 0; t < 10; ++t) {
        auto reps = coset_representatives(G, H.embed, &rng);
        for (int k = 0; k <= 2; ++k) {
            CohClass y = random_class(MH, k, rng);
            CHECK(transfer(y, M, H.embed, reps) == transfer(y, M, H.embed));
        }
    }
}

TEST_CASE("Frobenius reciprocity for C3 in C9") {
    std::mt19937_64 rng(99);
    FiniteGroup G = make_cyclic(9);
    auto M = make_bar_model(G, 3, 3);
    Subgroup H = cyclic_sub(G, 3);
    auto MH = make_bar_model(H.group, 3, 3);
    for (int t = 0; t < 30; ++t) {
        const int a = static_cast<int>(rng() % 2), b = static_cast<int>(rng() % 2);
        CohClass x = random_class(MH, a, rng), y = random_class(M, b, rng);
        CHECK(transfer(cup(x, restriction(y, MH, H.embed)), M, H.embed) == cup(transfer(x, M, H.embed), y));
    }
}

TEST_CASE("conjugation action on H^1(Q8)") {
    FiniteGroup G = make_g24();
    std::vector<int> q8;
    for (int x = 0; x < G.order(); ++x)
        if (4 % G.elem_order(x) == 0) q8.push_back(x);
    Subgroup Q = make_subgroup(G, q8, "Q8");
    auto M = make_bar_model(Q.group, 2, 2);
    // a(i) = 1, a(j) = 0 and b(i) = 0, b(j) = 1, as homomorphisms Q8 -> Z/2.
    std::vector<int> av(8), bv(8);
    for (int h = 0; h < 8; ++h) {
        const std::string& nm = G.name(Q.embed[h]);
        const char u = nm.back();
        av[h] = u == 'i' || u == 'k';
        bv[h] = u == 'j' || u == 'k';
    }
    CohClass a = hom_class(M, av), b = hom_class(M, bv);
    const int w = find(G, "w");
    CHECK(conjugation_action(a, G, Q.embed, w) == b);
    CHECK(conjugation_action(b, G, Q.embed, w) == a + b);
    CHECK(conjugation_action(a, G, Q.embed, 0) == a);
    // Inner conjugation is trivial in every degree.
    for (int g : q8)
        for (int k = 1; k <= 2; ++k)
            for (const auto& z : M->basis(k)) {
                CohClass x = class_of_cocycle(M, k, z);
                CHECK(conjugation_action(x, G, Q.embed, g) == x);
            }
}

TEST_CASE("invariants of the cyclic integral model") {
    auto m3 = invariants_model(3, -1, 8);
    CHECK(m3.generator_power == 2);
    CHECK(m3.generator_degree == 4);
    CHECK(m3.invariant_degrees == std::vector<int>{4, 8});
    auto m5 = invariants_model(5, 2, 16);
    CHECK(m5.generator_degree == 8);
    CHECK(m5.invariant_degrees == std::vector<int>{8, 16});
    auto triv = invariants_model(7, 1, 6);
    CHECK(triv.generator_degree == 2);
    CHECK(triv.invariant_degrees == std::vector<int>{2, 4, 6});
    try {
        invariants_model(5, 10, 8);
        FAIL("expected BadMultiplier");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BadMultiplier);
    }
}
