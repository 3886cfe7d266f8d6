#include "doctest.h"

#include "swdual/arith.hpp"
#include "swdual/duality.hpp"
#include "swdual/error.hpp"

#include <functional>
#include <map>
#include <random>

using namespace swdual;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InternalInvariant;
}

PsiValue pv(const std::string& tag, int64_t dim, std::optional<int64_t> w1, int64_t torsion, int64_t m) {
    PsiValue v;
    v.case_tag = tag;
    v.dim = dim;
    v.w1 = w1;
    v.torsion = mod(torsion, m);
    v.modulus = m;
    return v;
}

const CaseData& honda(int p) {
    static std::map<int, CaseData> cache;
    auto it = cache.find(p);
    if (it == cache.end()) it = cache.emplace(p, make_case_honda(p)).first;
    return it->second;
}

}  // namespace

TEST_CASE("psi on the p = 3 case") {
    CaseData c = make_case_p3n2();
    PsiValue r = psi(c, c.named_class("rho")), v = psi(c, c.named_class("V"));
    CHECK(r == pv("p3n2", 12, 1, -1, 3));
    CHECK(v == pv("p3n2", 4, 0, -1, 3));
    CHECK(r.str() == "(12, 1, -1)");
    CHECK(v.str() == "(4, 0, -1)");
    CHECK(psi(c, c.named_class("1")) == pv("p3n2", 1, 0, 0, 3));
}

TEST_CASE("psi on the p = 2 case") {
    CaseData c = make_case_p2n2();
    PsiValue r = psi(c, c.named_class("rho")), v = psi(c, c.named_class("H_ad"));
    CHECK(r.str() == "(24, 1)");
    CHECK(v.str() == "(4, 2)");
    CHECK_FALSE(r.w1.has_value());
    CHECK(r.modulus == 8);
}

TEST_CASE("psi on the honda cases") {
    for (int p : {3, 5, 7}) {
        const CaseData& c = honda(p);
        const int64_t n = c.n;
        CHECK(psi(c, c.named_class("rho")) == pv("honda", p * n * n, 1, -n / 2, p));
        CHECK(psi(c, c.named_class("V")) == pv("honda", n * n, 0, -(n - 1) * n / 2, p));
        CHECK(psi_of_character(c, c.V) == psi(c, c.named_class("V")));
    }
}

TEST_CASE("psi is additive") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> d(-2, 3);
    std::vector<CaseData> cases{make_case_p3n2(), make_case_p2n2(), honda(5)};
    for (const auto& c : cases) {
        const std::size_t r = c.table->real_irreducibles().size();
        std::vector<int64_t> zero(r, 0);
        CHECK(psi(c, zero).dim == 0);
        for (int t = 0; t < 20; ++t) {
            std::vector<int64_t> a(r), b(r), s(r);
            for (std::size_t i = 0; i < r; ++i) {
                a[i] = d(rng);
                b[i] = d(rng);
                s[i] = a[i] + b[i];
            }
            CHECK(psi(c, s) == psi(c, a) + psi(c, b));
            CHECK(psi(c, s).scaled(3) == psi(c, a).scaled(3) + psi(c, b).scaled(3));
        }
    }
    CaseData c = make_case_p3n2();
    CHECK(kind_of([&] { psi(c, {1, 0}); }) == ErrorKind::WrongGroup);
}

TEST_CASE("quotient reduction") {
    auto a = quotient_reduce(pv("p3n2", 12, 1, -1, 3), pv("p3n2", 4, 0, -1, 3));
    CHECK(a.period == 72);
    CHECK(a.c == mod(-44, 72));
    CHECK(a.multiple == 4);

    auto b = quotient_reduce(pv("p2n2", 24, std::nullopt, 1, 8), pv("p2n2", 4, std::nullopt, 2, 8));
    CHECK(b.period == 192);
    CHECK(b.c == mod(-44, 192));

    for (int64_t p : {3, 5, 7, 11}) {
        const int64_t n = p - 1;
        auto h = quotient_reduce(pv("honda", p * n * n, 1, -n / 2, p), pv("honda", n * n, 0, -(n - 1) * n / 2, p));
        CHECK(h.period == 2 * p * p * n * n);
        CHECK(h.c == mod(n * n * (1 + 2 * p), h.period));
    }
}

TEST_CASE("quotient reduction rejects non-cyclic quotients") {
    // Z + Z/2 + Z/3 modulo (2, 0, 0) is Z/2 + Z/2 + Z/3.
    CHECK(kind_of([] { quotient_reduce(pv("x", 2, 0, 0, 3), pv("x", 1, 0, 0, 3)); }) == ErrorKind::NotReducible);
    CHECK(kind_of([] { quotient_reduce(pv("x", 2, 0, 0, 3), pv("y", 1, 0, 0, 3)); }) == ErrorKind::WrongGroup);
}

TEST_CASE("reduction does not depend on the representative") {
    std::mt19937_64 rng(10);
    std::uniform_int_distribution<int> k(-20, 20), d(-50, 50);
    std::vector<PsiValue> rhos{pv("p3n2", 12, 1, -1, 3), pv("p2n2", 24, std::nullopt, 1, 8), pv("honda", 80, 1, -2, 5)};
    for (const auto& rho : rhos) {
        for (int t = 0; t < 30; ++t) {
            PsiValue W = rho.scaled(0);
            W.dim = d(rng);
            if (W.w1) W.w1 = mod(d(rng), 2);
            W.torsion = mod(d(rng), rho.modulus);
            auto base = quotient_reduce(rho, W);
            auto moved = quotient_reduce(rho, W + rho.scaled(k(rng)));
            CHECK(moved.c == base.c);
            CHECK(moved.period == base.period);
            // c * (1, 0, 0) really is W modulo rho.
            PsiValue one = rho.scaled(0);
            one.dim = 1;
            PsiValue diff = W + one.scaled(-base.c) + rho.scaled(-base.multiple);
            CHECK(mod(diff.dim, base.period) == 0);
            if (diff.w1) CHECK(*diff.w1 == 0);
            CHECK(diff.torsion == 0);
        }
    }
}

TEST_CASE("duality shifts") {
    ShiftResult a = sw_shift(make_case_p3n2());
    CHECK(a.shift == 44);
    CHECK(a.period == 72);
    CHECK(a.paper_inputs() == 0);

    ShiftResult b = sw_shift(make_case_p2n2());
    CHECK(b.shift == 44);
    CHECK(b.period == 192);
    CHECK(b.paper_inputs() == 2);

    ShiftResult h = sw_shift(honda(3));
    CHECK(h.signed_form == -28);
    CHECK(h.shift == 44);
    CHECK(h.period == 72);
    CHECK(mod(h.shift, 72) == mod(a.shift, 72));
    for (int p : {5, 7}) {
        const int64_t n = p - 1;
        ShiftResult s = sw_shift(honda(p));
        CHECK(s.signed_form == -n * n * (2 * p + 1));
        CHECK(s.period == 2 * p * p * n * n);
        CHECK(s.paper_inputs() == 0);
    }
}

TEST_CASE("derivation trails") {
    for (const auto& s : {sw_shift(make_case_p3n2()), sw_shift(make_case_p2n2()), sw_shift(honda(5)), exotic_picard_shift(5),
                          central_case_shift(3)}) {
        CHECK_FALSE(s.trail.empty());
        for (const auto& t : s.trail) {
            CHECK_FALSE(t.step.empty());
            if (t.provenance == Provenance::Computed) CHECK_FALSE(t.value.empty());
        }
    }
}

TEST_CASE("central case") {
    CHECK(central_case_shift(1).shift == -1);
    CHECK(central_case_shift(2).shift == -4);
    CHECK(central_case_shift(4).shift == -16);
    CHECK(central_case_shift(2).period == 0);
}

TEST_CASE("exotic Picard element") {
    CHECK(exotic_picard_shift(3).shift == 12);
    CHECK(exotic_picard_shift(3).period == 18);
    ShiftResult e = exotic_picard_shift(5);
    CHECK(e.shift == 30);
    CHECK(e.period == 50);
    CHECK(e.paper_inputs() == 2);
    for (int64_t p : {3, 5, 7, 11}) {
        const int64_t n = p - 1, P = 2 * p * p;
        CHECK(mod(-n * n * (1 + 2 * p), P) == mod(-(p * p + 1), P));
        CHECK(exotic_picard_shift(static_cast<int>(p)).shift == mod(p * p + p, P));
    }
}

TEST_CASE("periods") {
    CHECK(period_of("p3n2", "G12") == 72);
    CHECK(period_of("p2n2", "G24") == 192);
    CHECK(period_of("honda", "Cp", 5) == 50);
    CHECK(period_of("honda", "G", 3) == 72);
    CHECK(kind_of([] { period_of("p3n2", "Q8"); }) == ErrorKind::UnknownTag);
    CHECK(kind_of([] { period_of("honda", "Cp", 4); }) == ErrorKind::InvalidArgument);
}
