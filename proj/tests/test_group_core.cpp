#include "doctest.h"

#include "swdual/error.hpp"
#include "swdual/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

using namespace swdual;

namespace {

std::vector<int> class_sizes(const FiniteGroup& G) {
    std::vector<int> s;
    for (const auto& c : G.classes()) s.push_back(c.size);
    std::sort(s.begin(), s.end());
    return s;
}

// All subgroups of a given order, by brute force over cyclic subgroups and pairs.
std::set<std::vector<int>> subgroups_of_order(const FiniteGroup& G, int k) {
    std::set<std::vector<int>> out;
    for (int a = 0; a < G.order(); ++a)
        for (int b = a; b < G.order(); ++b) {
            auto H = G.generated_by({a, b});
            if (static_cast<int>(H.size()) == k) out.insert(H);
        }
    return out;
}

void check_class_equation(const FiniteGroup& G) {
    int total = 0;
    for (const auto& c : G.classes()) total += c.size;
    CHECK(total == G.order());
    CHECK(G.classes()[G.class_of(0)].size == 1);
    std::vector<int> singletons;
    for (const auto& c : G.classes())
        if (c.size == 1) singletons.push_back(c.rep);
    std::sort(singletons.begin(), singletons.end());
    CHECK(G.center() == singletons);
}

}  // namespace

TEST_CASE("cyclic groups") {
    CHECK(make_cyclic(1).order() == 1);
    FiniteGroup C4 = make_cyclic(4);
    CHECK(C4.elem_order(0) == 1);
    CHECK(C4.elem_order(1) == 4);
    CHECK(C4.elem_order(2) == 2);
    CHECK(C4.elem_order(3) == 4);
    FiniteGroup C9 = make_cyclic(9);
    auto subs = subgroups_of_order(C9, 3);
    CHECK(subs.size() == 1);
    CHECK(*subs.begin() == std::vector<int>{0, 3, 6});
}

TEST_CASE("C3 semidirect C4 is G12") {
    FiniteGroup G = make_g12();
    CHECK(G.order() == 12);
    CHECK(G.classes().size() == 6);
    CHECK_FALSE(G.is_abelian());
    std::vector<std::vector<int>> inv(4, std::vector<int>(3));
    for (int h = 0; h < 4; ++h)
        for (int a = 0; a < 3; ++a) inv[h][a] = h % 2 ? (3 - a) % 3 : a;
    FiniteGroup S = make_semidirect(make_cyclic(3), make_cyclic(4), inv);
    CHECK(find_isomorphism(G, S).has_value());
    CHECK(find_isomorphism(S, G).has_value());
}

TEST_CASE("trivial action gives the direct product") {
    for (auto [n, h] : {std::pair{3, 4}, std::pair{2, 2}, std::pair{5, 3}}) {
        FiniteGroup N = make_cyclic(n, "a"), H = make_cyclic(h, "b");
        std::vector<std::vector<int>> triv(h, std::vector<int>(n));
        for (auto& row : triv) std::iota(row.begin(), row.end(), 0);
        FiniteGroup S = make_semidirect(N, H, triv);
        FiniteGroup D = make_direct_product(N, H);
        CHECK(S.is_abelian());
        CHECK(find_isomorphism(D, S).has_value());
        CHECK(S.table() == D.table());
    }
}

TEST_CASE("C5 semidirect C16") {
    FiniteGroup G = make_metacyclic(5, 16, 2);
    CHECK(G.order() == 80);
    CHECK(G.exponent() == 80);
    int l = 1;
    for (int g = 0; g < G.order(); ++g) l = std::lcm(l, G.elem_order(g));
    CHECK(l == 80);
}

TEST_CASE("semidirect product rejects bad actions") {
    FiniteGroup N = make_cyclic(3), H = make_cyclic(2);
    std::vector<std::vector<int>> not_aut{{0, 1, 2}, {0, 0, 0}};
    CHECK_THROWS_AS(make_semidirect(N, H, not_aut), Error);
    FiniteGroup H3 = make_cyclic(3);
    // x -> -x has order 2, so it cannot be the image of a generator of order 3.
    std::vector<std::vector<int>> not_hom{{0, 1, 2}, {0, 2, 1}, {0, 2, 1}};
    try {
        make_semidirect(N, H3, not_hom);
        FAIL("expected NotHomomorphism");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotHomomorphism);
    }
}

TEST_CASE("conjugacy classes") {
    FiniteGroup Q = make_quaternion8();
    CHECK(class_sizes(Q) == std::vector<int>{1, 1, 2, 2, 2});
    FiniteGroup A = make_direct_product(make_cyclic(3), make_cyclic(3));
    CHECK(A.classes().size() == 9);
    FiniteGroup G24 = make_g24();
    CHECK(G24.order() == 24);
    CHECK(G24.classes().size() == 7);
    for (const auto& G : {Q, A, G24, make_g12(), make_metacyclic(7, 36, 3)}) check_class_equation(G);
}

TEST_CASE("centers") {
    FiniteGroup Q = make_quaternion8();
    auto Z = Q.center();
    REQUIRE(Z.size() == 2);
    CHECK(Q.name(Z[1]) == "-1");
    CHECK(make_g24().center().size() == 2);
    FiniteGroup A = make_cyclic(6);
    CHECK(A.center().size() == 6);
    CHECK(make_g12().center().size() == 2);
}

TEST_CASE("subgroups and normality") {
    FiniteGroup G = make_g24();
    std::vector<int> q8;
    for (int g = 0; g < G.order(); ++g)
        if (G.elem_order(g) != 3 && G.elem_order(g) != 6) q8.push_back(g);
    REQUIRE(q8.size() == 8);
    CHECK(G.is_subgroup(q8));
    CHECK(G.is_normal(q8));
    Subgroup H = make_subgroup(G, q8, "Q8");
    CHECK(find_isomorphism(H.group, make_quaternion8()).has_value());
    auto w = G.find("w");
    REQUIRE(w.has_value());
    auto C3 = G.generated_by({*w});
    CHECK(C3.size() == 3);
    CHECK_FALSE(G.is_normal(C3));
    CHECK_THROWS_AS(make_subgroup(G, {0, *w}), Error);
}

TEST_CASE("tables are audited") {
    std::vector<int> bad{0, 1, 1, 1};
    CHECK_THROWS_AS(FiniteGroup(bad, 2, {"1", "x"}), Error);
    // A loop of order 5 that is not associative.
    std::vector<int> loop{0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
    CHECK_THROWS_AS(FiniteGroup(loop, 5, {"1", "a", "b", "c", "d"}), Error);
}

TEST_CASE("order statistics distinguish Q8 from D8") {
    auto q = order_statistics(make_quaternion8());
    CHECK(q == std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {4, 6}});
    std::vector<std::vector<int>> inv(2, std::vector<int>(4));
    for (int a = 0; a < 4; ++a) {
        inv[0][a] = a;
        inv[1][a] = (4 - a) % 4;
    }
    FiniteGroup D8 = make_semidirect(make_cyclic(4), make_cyclic(2), inv);
    CHECK_FALSE(find_isomorphism(make_quaternion8(), D8).has_value());
}
