#include "swdual/verify.hpp"

#include "swdual/arith.hpp"
#include "swdual/cases.hpp"
#include "swdual/char_classes.hpp"
#include "swdual/characters.hpp"
#include "swdual/cohomology.hpp"
#include "swdual/duality.hpp"
#include "swdual/error.hpp"
#include "swdual/lattice.hpp"
#include "swdual/struct_order.hpp"
#include "swdual/truncated_on.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

namespace swdual {

bool SuiteReport::pass() const {
    return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.pass; });
}

const CheckItem* SuiteReport::first_failure() const {
    for (const auto& c : items)
        if (!c.pass) return &c;
    return nullptr;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"cohomology", "lattice", "order", "reps", "units", "wu"};
    return names;
}

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::string counterexample;

    void check(bool cond, const std::string& what) {
        if (cond || !pass) {
            pass = pass && cond;
            return;
        }
        pass = false;
        counterexample = what;
    }
};

void run(SuiteReport& S, const std::string& name, const std::function<Outcome()>& f) {
    CheckItem it;
    it.name = S.suite + "/" + name;
    auto t0 = std::chrono::steady_clock::now();
    try {
        Outcome o = f();
        it.pass = o.pass;
        it.detail = o.detail;
        it.counterexample = o.counterexample;
    } catch (const std::exception& e) {
        it.pass = false;
        it.counterexample = e.what();
    }
    it.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    S.items.push_back(std::move(it));
}

template <class T>
std::string join(const std::vector<T>& v, const char* sep = ",") {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
    return os.str();
}

int find_unit(const StructOrder& O, const UnitGroup& U, const QRat& q) {
    QElem x = O.from_standard(q);
    for (std::size_t g = 0; g < U.elements.size(); ++g)
        if (U.elements[g] == x) return static_cast<int>(g);
    fail(ErrorKind::InternalInvariant, "unit not found");
}

Subgroup cyclic_subgroup(const FiniteGroup& G, int g, const std::string& label) {
    return make_subgroup(G, G.generated_by({g}), label);
}

int element_of_order(const FiniteGroup& G, int o) {
    for (int x = 0; x < G.order(); ++x)
        if (G.elem_order(x) == o) return x;
    fail(ErrorKind::InternalInvariant, "no element of order " + std::to_string(o));
}

ClassFn random_virtual(const CharacterTable& T, std::mt19937_64& rng, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    std::vector<int64_t> m(T.num_classes());
    for (auto& x : m) x = d(rng);
    return T.combine(m);
}

// ---------------------------------------------------------------- units

void suite_units(SuiteReport& S, const VerifyConfig&) {
    struct Spec {
        std::string name;
        StructOrder (*make)();
        int order;
        FiniteGroup (*ref)();
        std::string ref_name;
    };
    std::vector<Spec> specs{{"eisenstein", make_eisenstein_order, 12, make_g12, "C3 x| C4"},
                            {"hurwitz", make_hurwitz_order, 24, make_g24, "Q8 x| C3"},
                            {"lipschitz", make_lipschitz_order, 8, make_quaternion8, "Q8"}};
    for (const auto& sp : specs)
        run(S, sp.name, [&] {
            Outcome o;
            StructOrder O = sp.make();
            UnitGroup U = finite_units(O);
            o.check(U.group.order() == sp.order, "unit count " + std::to_string(U.group.order()));
            for (const auto& u : U.elements) o.check(O.nrd(u) == 1, "unit of norm " + std::to_string(O.nrd(u)) + ": " + O.show(u));
            o.check(find_isomorphism(U.group, sp.ref()).has_value(), "unit group is not " + sp.ref_name);
            o.detail = std::to_string(U.group.order()) + " units of norm 1, isomorphic to " + sp.ref_name;
            return o;
        });
}

// ----------------------------------------------------------- cohomology

int lambda_poly_count(int gens, int k) {
    // dim of degree k in Lambda(x_1..x_g) (x) P(y_1..y_g), |x| = 1, |y| = 2
    int total = 0;
    for (int e = 0; e <= gens && e <= k; ++e) {
        if ((k - e) % 2) continue;
        const int m = (k - e) / 2;
        int64_t ext = 1, poly = 1;
        for (int i = 0; i < e; ++i) ext = ext * (gens - i) / (i + 1);
        for (int i = 1; i <= gens - 1; ++i) poly = poly * (m + i) / i;  // C(m + g - 1, g - 1)
        total += static_cast<int>(ext * poly);
    }
    return total;
}

void suite_cohomology(SuiteReport& S, const VerifyConfig& cfg) {
    run(S, "q8_dims", [&] {
        Outcome o;
        const int D = std::min(cfg.max_degree, 4);
        std::vector<int> want{1, 2, 2, 1, 1};
        want.resize(D + 1);
        auto got = bar_cohomology(make_quaternion8(), 2, D);
        o.check(got == want, "H^*(Q8; F2) dims " + join(got));
        o.detail = "dims " + join(got);
        return o;
    });
    run(S, "c3xc3_dims", [&] {
        Outcome o;
        const int D = std::min(cfg.max_degree, 3);
        std::vector<int> want;
        for (int k = 0; k <= D; ++k) want.push_back(lambda_poly_count(2, k));
        auto got = bar_cohomology(make_direct_product(make_cyclic(3, "a"), make_cyclic(3, "b")), 3, D);
        o.check(got == want, "H^*((Z/3)^2; F3) dims " + join(got) + " vs " + join(want));
        o.detail = "dims " + join(got) + " = exterior x polynomial counts";
        return o;
    });
    run(S, "restriction_cyclic", [&] {
        // Restriction to the index-p subgroup of a cyclic p-group kills H^1 and H^3 and every product of
        // degree-1 classes. The degree-2 polynomial class survives, which is reported, not asserted away.
        Outcome o;
        std::vector<std::string> notes;
        for (auto [p, j] : std::vector<std::pair<int, int>>{{3, 2}, {2, 2}, {2, 3}}) {
            const int q = static_cast<int>(ipow(p, j));
            FiniteGroup G = make_cyclic(q);
            auto M = make_bar_model(G, p, 3);
            Subgroup H = cyclic_subgroup(G, G.pow(1, p), "C" + std::to_string(q / p));
            auto MH = make_bar_model(H.group, p, 3);
            const std::string tag = "C" + std::to_string(q / p) + "<C" + std::to_string(q);
            for (int k : {1, 3})
                for (const auto& b : M->basis(k))
                    o.check(restriction(class_of_cocycle(M, k, b), MH, H.embed).is_zero(),
                            tag + ": degree " + std::to_string(k) + " class restricts nonzero");
            const auto& h1 = M->basis(1);
            for (const auto& a : h1)
                for (const auto& b : h1) {
                    CohClass prod = cup(class_of_cocycle(M, 1, a), class_of_cocycle(M, 1, b));
                    o.check(restriction(prod, MH, H.embed).is_zero(), tag + ": product of degree-1 classes restricts nonzero");
                }
            int survive = 0;
            for (const auto& b : M->basis(2)) survive += !restriction(class_of_cocycle(M, 2, b), MH, H.embed).is_zero();
            notes.push_back(tag + " mod " + std::to_string(p) + ": H^2 classes restricting nonzero = " + std::to_string(survive));
        }
        o.detail = "degrees 1,3 and H^1-products vanish; " + join(notes, "; ");
        return o;
    });
    run(S, "restriction_ring_map", [&] {
        Outcome o;
        FiniteGroup G = make_quaternion8();
        auto M = make_bar_model(G, 2, 3);
        Subgroup H = cyclic_subgroup(G, element_of_order(G, 4), "C4");
        auto MH = make_bar_model(H.group, 2, 3);
        int pairs = 0;
        for (int a = 0; a <= 3; ++a)
            for (int b = 0; a + b <= 3; ++b)
                for (const auto& x : M->basis(a))
                    for (const auto& y : M->basis(b)) {
                        CohClass cx = class_of_cocycle(M, a, x), cy = class_of_cocycle(M, b, y);
                        o.check(restriction(cup(cx, cy), MH, H.embed) ==
                                    cup(restriction(cx, MH, H.embed), restriction(cy, MH, H.embed)),
                                "res(x y) != res(x) res(y) in degrees " + std::to_string(a) + "," + std::to_string(b));
                        ++pairs;
                    }
        o.detail = std::to_string(pairs) + " products on C4 < Q8 mod 2";
        return o;
    });
    run(S, "frobenius_reciprocity", [&] {
        // tr(x res y) = tr(x) y and tr(res(y) x) = y tr(x) on random classes.
        Outcome o;
        std::mt19937_64 rng(cfg.seed + 2);
        const int D = std::min(cfg.max_degree, 3);
        std::vector<std::tuple<std::string, FiniteGroup, int, int>> incs;
        {
            FiniteGroup G = make_cyclic(9);
            incs.emplace_back("C3<C9", G, G.pow(1, 3), 3);
        }
        {
            FiniteGroup G = make_quaternion8();
            incs.emplace_back("C4<Q8", G, element_of_order(G, 4), 2);
        }
        {
            FiniteGroup G = make_g12();
            incs.emplace_back("C3<G12", G, element_of_order(G, 3), 3);
        }
        auto random_class = [&](const BarModelPtr& M, int k) {
            FpVec c(M->dim(k));
            for (auto& x : c) x = static_cast<uint8_t>(rng() % M->p());
            return make_class(M, k, c);
        };
        int total = 0;
        for (auto& [nm, G, g, p] : incs) {
            auto M = make_bar_model(G, p, D);
            Subgroup H = cyclic_subgroup(G, g, nm);
            auto MH = make_bar_model(H.group, p, D);
            for (int s = 0; s < cfg.frobenius_samples; ++s) {
                const int a = static_cast<int>(rng() % (D + 1));
                const int b = static_cast<int>(rng() % (D - a + 1));
                CohClass x = random_class(MH, a), y = random_class(M, b);
                CohClass ry = restriction(y, MH, H.embed), tx = transfer(x, M, H.embed);
                o.check(transfer(cup(x, ry), M, H.embed) == cup(tx, y), nm + ": tr(x res y) != tr(x) y in degrees " +
                                                                              std::to_string(a) + "," + std::to_string(b));
                o.check(transfer(cup(ry, x), M, H.embed) == cup(y, tx), nm + ": tr(res(y) x) != y tr(x)");
                ++total;
            }
        }
        o.detail = std::to_string(total) + " class pairs over C3<C9, C4<Q8, C3<G12 through degree " + std::to_string(D);
        return o;
    });
    run(S, "transfer_restriction", [&] {
        Outcome o;
        std::mt19937_64 rng(cfg.seed);
        struct Inc {
            std::string name;
            FiniteGroup G;
            std::vector<int> sub;
            int p, maxdeg;
        };
        std::vector<Inc> incs;
        {
            FiniteGroup G = make_g12();
            incs.push_back({"C3<G12", G, G.generated_by({element_of_order(G, 3)}), 3, 2});
        }
        {
            FiniteGroup G = make_g24();
            std::vector<int> q8;
            for (int x = 0; x < G.order(); ++x)
                if (4 % G.elem_order(x) == 0) q8.push_back(x);
            incs.push_back({"Q8<G24", G, q8, 2, 2});
        }
        {
            FiniteGroup G = make_quaternion8();
            incs.push_back({"C4<Q8", G, G.generated_by({element_of_order(G, 4)}), 2, 3});
        }
        std::vector<std::string> notes;
        for (auto& inc : incs) {
            auto M = make_bar_model(inc.G, inc.p, inc.maxdeg);
            Subgroup H = make_subgroup(inc.G, inc.sub);
            auto MH = make_bar_model(H.group, inc.p, inc.maxdeg);
            const int index = inc.G.order() / H.group.order();
            auto reps = coset_representatives(inc.G, H.embed, &rng);
            for (int k = 0; k <= inc.maxdeg; ++k)
                for (const auto& b : M->basis(k)) {
                    CohClass x = class_of_cocycle(M, k, b);
                    CohClass r = restriction(x, MH, H.embed);
                    o.check(transfer(r, M, H.embed) == x.scaled(index % inc.p),
                            inc.name + ": tr(res x) != [G:H] x in degree " + std::to_string(k));
                    o.check(transfer(r, M, H.embed, reps) == transfer(r, M, H.embed),
                            inc.name + ": transfer depends on coset representatives");
                }
            notes.push_back(inc.name + " (index " + std::to_string(index) + ", mod " + std::to_string(inc.p) + ")");
        }
        o.detail = join(notes, "; ");
        return o;
    });
}

// ------------------------------------------------------------------ wu

void suite_wu(SuiteReport& S, const VerifyConfig&) {
    for (auto [p, n] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}})
        run(S, "p" + std::to_string(p) + "_n" + std::to_string(n), [p = p, n = n] {
            Outcome o;
            WuResult w = wu_congruence_check(p, n);
            o.check(w.holds, "reduced " + w.reduced.str("e") + " != target " + w.target.str("e"));
            o.detail = "q_n reduces to " + w.reduced.str("e") + " over " + std::to_string(w.m) + " variables";
            return o;
        });
}

// ---------------------------------------------------------------- reps

void suite_reps(SuiteReport& S, const VerifyConfig& cfg) {
    run(S, "character_tables", [&] {
        Outcome o;
        std::vector<std::pair<std::string, FiniteGroup>> gs{{"Q8", make_quaternion8()}, {"G12", make_g12()},
                                                            {"G24", make_g24()},       {"C9", make_cyclic(9)},
                                                            {"C5:C16", make_metacyclic(5, 16, 2)}};
        for (auto& [nm, G] : gs) {
            CharacterTable T(G);
            int64_t s = 0;
            for (int i = 0; i < T.num_classes(); ++i) s += static_cast<int64_t>(T.dim(i)) * T.dim(i);
            o.check(s == G.order(), nm + ": sum of squared degrees " + std::to_string(s));
            for (int i = 0; i < T.num_classes(); ++i)
                for (int j = 0; j < T.num_classes(); ++j)
                    o.check(T.inner(T.irreducibles()[i], T.irreducibles()[j]) == (i == j), nm + ": rows not orthonormal");
            if (nm == "G24") {
                std::vector<int> d;
                for (int i = 0; i < T.num_classes(); ++i) d.push_back(T.dim(i));
                o.check(d == std::vector<int>{1, 1, 1, 2, 2, 2, 3}, "G24 degrees " + join(d));
            }
        }
        o.detail = "orthonormal rows and sum of squared degrees = |G| for Q8, G12, G24, C9, C5:C16";
        return o;
    });
    run(S, "frobenius_reciprocity", [&] {
        Outcome o;
        std::mt19937_64 rng(cfg.seed);
        std::vector<std::tuple<std::string, FiniteGroup, int>> incs;
        {
            FiniteGroup G = make_cyclic(9);
            incs.emplace_back("C3<C9", G, G.pow(1, 3));
        }
        {
            FiniteGroup G = make_quaternion8();
            incs.emplace_back("C4<Q8", G, element_of_order(G, 4));
        }
        {
            FiniteGroup G = make_g12();
            incs.emplace_back("C3<G12", G, element_of_order(G, 3));
        }
        int total = 0;
        for (auto& [nm, G, g] : incs) {
            CharacterTable TG(G);
            Subgroup H = cyclic_subgroup(G, g, nm);
            CharacterTable TH(H.group);
            for (int s = 0; s < cfg.frobenius_samples; ++s) {
                ClassFn psi = random_virtual(TH, rng, -3, 3), chi = random_virtual(TG, rng, -3, 3);
                const int64_t lhs = TG.inner(induce_fn(TH, TG, H.embed, psi), chi);
                const int64_t rhs = TH.inner(psi, restrict_fn(TG, TH, H.embed, chi));
                o.check(lhs == rhs, nm + ": <Ind psi, chi> = " + std::to_string(lhs) + " but <psi, Res chi> = " +
                                        std::to_string(rhs) + " for psi = " + TH.show(psi));
                ++total;
            }
        }
        o.detail = std::to_string(total) + " virtual pairs over C3<C9, C4<Q8, C3<G12";
        return o;
    });
    run(S, "det_multiplicative", [&] {
        Outcome o;
        std::mt19937_64 rng(cfg.seed + 1);
        for (FiniteGroup G : {make_g12(), make_g24()}) {
            CharacterTable T(G);
            for (int s = 0; s < 50; ++s) {
                ClassFn a = random_virtual(T, rng, 0, 2), b = random_virtual(T, rng, 0, 2);
                ClassFn ab = a;
                for (std::size_t i = 0; i < ab.size(); ++i) ab[i] += b[i];
                ClassFn da = T.det(a), db = T.det(b), dab = T.det(ab);
                for (std::size_t i = 0; i < ab.size(); ++i) o.check(dab[i] == da[i] * db[i], "det(a+b) != det a det b");
            }
        }
        o.detail = "100 pairs over G12 and G24";
        return o;
    });
    run(S, "q8_adjoint", [&] {
        Outcome o;
        StructOrder O = make_lipschitz_order();
        UnitGroup U = finite_units(O);
        CharacterTable T(U.group);
        const int i = find_unit(O, U, {0, 1, 0, 0}), j = find_unit(O, U, {0, 0, 1, 0});
        T.set_real_names(quaternion_real_names(T, i, j));
        ConjugationRep ad = conjugation_rep(O, U, T, RatMatrix::identity(4));
        std::vector<int64_t> tr;
        for (const auto& cl : U.group.classes()) tr.push_back(4 * U.elements[cl.rep][0]);
        ClassFn H = T.from_integers(tr);
        o.check(H == T.real_irreducibles()[T.real_index("H")].character, "left multiplication is not the quaternionic irreducible");
        ClassFn sum = ad.character;
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += H[k];
        o.check(sum == T.regular(), "rho_Q8 != H_ad + H");
        for (const char* nm : {"1", "chi_i", "chi_j", "chi_k"})
            o.check(ad.ro[T.real_index(nm)] == 1, std::string("H_ad misses ") + nm);
        o.check(ad.ro[T.real_index("H")] == 0, "H_ad contains H");
        // On C4 = <i>: 2 trivial + 2 sign.
        Subgroup C4 = cyclic_subgroup(U.group, i, "C4");
        CharacterTable T4(C4.group);
        ClassFn r = restrict_fn(T, T4, C4.embed, ad.character);
        std::vector<int64_t> vals;
        for (const auto& cl : C4.group.classes()) vals.push_back(C4.group.elem_order(cl.rep) == 4 ? 0 : 4);
        o.check(r == T4.from_integers(vals), "H_ad on C4 is not 2 + 2 sign");
        o.detail = "rho = H_ad + H, H_ad = 1 + chi_i + chi_j + chi_k, H_ad|C4 = 2 + 2 sign";
        return o;
    });
    for (int p : {3, 5, 7})
        run(S, "honda_p" + std::to_string(p), [p] {
            Outcome o;
            CaseData c = make_case_honda(p);
            const CharacterTable& T = *c.table;
            const int n = c.n;
            std::vector<int> cp;
            for (int a = 0; a < p; ++a) cp.push_back(a);
            Subgroup C = make_subgroup(T.group(), cp);
            CharacterTable TC(C.group);
            ClassFn want = TC.trivial(), reg = TC.regular();
            for (std::size_t k = 0; k < want.size(); ++k) want[k] += reg[k] * (n - 1);
            o.check(restrict_fn(T, TC, C.embed, c.V) == want, "res V != 1 + (n-1) rho_Cp");
            RegularSummands rs = honda_regular_summands(c);
            ClassFn sum = T.zero();
            for (auto& x : rs.characters)
                for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += x[k];
            const std::size_t count = 2 + (n * n - 2) / 2 + n / 2;
            o.check(rs.characters.size() == count, "summand count " + std::to_string(rs.characters.size()));
            o.check(sum == T.regular(), "listed summands do not add up to rho");
            o.detail = "|G| = " + std::to_string(T.group().order()) + ", " + std::to_string(count) +
                       " summands each once, res V = 1 + " + std::to_string(n - 1) + " rho_C" + std::to_string(p);
            return o;
        });
    run(S, "lambda_spin_choice", [&] {
        Outcome o;
        CaseData c = make_case_p2n2();
        const CharacterTable& T = *c.table;
        for (const char* nm : {"H", "H_ad"}) {
            ClassFn chi = T.real_character(c.named_class(nm));
            LambdaCyclic l = lambda_of_real_on_cyclic(cyclic_restriction(T, chi, c.torsion_detector));
            o.check(l.d_choices.size() == 2, std::string(nm) + ": expected two spin choices");
            for (auto v : l.values) o.check(v == l.value, std::string(nm) + ": spin choices disagree");
        }
        o.detail = "both spin choices agree for H and H_ad on C4";
        return o;
    });
    run(S, "chern_character_parity", [&] {
        Outcome o;
        for (int p : {5, 7}) {
            CaseData c = make_case_honda(p);
            const CharacterTable& T = *c.table;
            for (const auto& R : T.real_irreducibles()) {
                auto mult = cyclic_restriction(T, R.character, c.torsion_detector);
                for (int k = 1; k < p; k += 2)
                    o.check(chern_character_real(mult, k, p) == 0, R.name + ": odd ch_" + std::to_string(k) + " nonzero");
            }
            for (const char* nm : {"1", "sigma"}) {
                auto mult = cyclic_restriction(T, T.real_character(c.named_class(nm)), c.torsion_detector);
                o.check(chern_character_real(mult, c.n, p) == 0, std::string("ch_n(") + nm + ") nonzero");
            }
        }
        o.detail = "odd ch_k vanish on real irreducibles; ch_n(1) = ch_n(sigma) = 0 for p = 5, 7";
        return o;
    });
    run(S, "psi_values", [&] {
        Outcome o;
        std::vector<std::string> got;
        {
            CaseData c = make_case_p3n2();
            PsiValue r = psi_of_character(c, c.rho), v = psi_of_character(c, c.V);
            o.check(r.dim == 12 && r.w1 == 1 && r.torsion == 2, "psi(rho_G12) = " + r.str());
            o.check(v.dim == 4 && v.w1 == 0 && v.torsion == 2, "psi(R E) = " + v.str());
            got.push_back("G12 " + r.str() + " " + v.str());
        }
        {
            CaseData c = make_case_p2n2();
            PsiValue r = psi_of_character(c, c.rho), v = psi_of_character(c, c.V);
            o.check(r.dim == 24 && !r.w1 && r.torsion == 1, "psi(rho_G24) = " + r.str());
            o.check(v.dim == 4 && !v.w1 && v.torsion == 2, "psi(H_ad) = " + v.str());
            got.push_back("G24 " + r.str() + " " + v.str());
        }
        for (int p : {3, 5, 7}) {
            CaseData c = make_case_honda(p);
            const int64_t n = c.n;
            PsiValue r = psi_of_character(c, c.rho), v = psi_of_character(c, c.V);
            o.check(r.dim == p * n * n && r.w1 == 1 && r.torsion == mod(-n / 2, p), "psi(rho) = " + r.str());
            o.check(v.dim == n * n && v.w1 == 0 && v.torsion == mod(-n * (n - 1) / 2, p), "psi(V) = " + v.str());
            got.push_back("p=" + std::to_string(p) + " " + r.str() + " " + v.str());
        }
        o.detail = join(got, "; ");
        return o;
    });
}

// -------------------------------------------------------------- lattice

bool is_power_of(BigInt x, int64_t p) {
    if (x <= 0) return false;
    while (x % p == 0) x /= p;
    return x == 1;
}

void suite_lattice(SuiteReport& S, const VerifyConfig& cfg) {
    run(S, "saturation_properties", [&] {
        Outcome o;
        std::mt19937_64 rng(cfg.seed);
        std::uniform_int_distribution<int> small(-2, 2), coef(-3, 3), dimd(1, 5), pick(0, 2), expo(0, 3);
        const int primes[3] = {2, 3, 5};
        for (int s = 0; s < cfg.lattice_samples && o.pass; ++s) {
            const int d = dimd(rng);
            const int64_t p = primes[pick(rng)];
            const int64_t cofactor = std::vector<int64_t>{1, 7, 11}[pick(rng)];
            IntMatrix f(d, d);
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b) f(a, b) = small(rng);
            // L0 = span of the f-orbits of a few vectors plus M Z^d, so L0 is f-stable by construction.
            std::vector<std::vector<BigInt>> gens;
            const int64_t M = ipow(p, expo(rng) + 1) * cofactor;
            for (int a = 0; a < d; ++a) {
                std::vector<BigInt> e(d, 0);
                e[a] = M;
                gens.push_back(e);
            }
            for (int v = 0; v < 2; ++v) {
                std::vector<BigInt> x(d);
                for (auto& t : x) t = coef(rng);
                for (int k = 0; k < d; ++k) {
                    gens.push_back(x);
                    x = f.row_times(x);
                }
            }
            IntMatrix H = canonical_basis(Lattice{IntMatrix::from_rows(gens, d)});
            IntMatrix B(d, d);
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b) B(a, b) = H(a, b);
            Lattice L0{B};
            std::ostringstream inst;
            inst << "d=" << d << " p=" << p << " L0=" << L0.basis << " f=" << f;
            o.check(check_stability(L0, {f}), "construction not f-stable: " + inst.str());
            Lattice L = saturate_at_p(L0, p);
            o.check(same_lattice(saturate_at_p(L, p), L), "saturation not idempotent: " + inst.str());
            o.check(is_power_of(lattice_index(L0, L), p), "index not a power of p: " + inst.str());
            o.check(check_stability(L, {f}), "saturation lost f-stability: " + inst.str());
        }
        o.detail = std::to_string(cfg.lattice_samples) + " random instances of rank <= 5, p in {2,3,5}";
        return o;
    });
    struct OrderSpec {
        std::string name;
        StructOrder (*make)();
    };
    for (const auto& sp : std::vector<OrderSpec>{{"e_lattice_p2", make_hurwitz_order}, {"e_lattice_p3", make_eisenstein_order}})
        run(S, sp.name, [&] {
            Outcome o;
            StructOrder O = sp.make();
            UnitGroup U = finite_units(O);
            const Rational d = determinant(O.basis());
            o.check(d != 0, "basis determinant zero");
            for (const auto& u : U.elements) {
                try {
                    conj_action_matrix(O, u);
                } catch (const Error& e) {
                    o.check(false, "not stable under " + O.show(u) + ": " + e.what());
                }
            }
            std::ostringstream os;
            os << O.name() << " stable under conjugation by all " << U.group.order() << " units, det " << d;
            o.detail = os.str();
            return o;
        });
    run(S, "e0_lattice_p3", [&] {
        // Z{1, i, phi, i phi} is stable under i; conjugation by sigma = -(1+phi)/2 leaves it.
        Outcome o;
        StructOrder E = make_eisenstein_order(), E0 = make_e0_order();
        UnitGroup U = finite_units(E);
        RatMatrix L0(4, 4);
        for (int r = 0; r < 4; ++r) {
            QElem b(4, 0);
            b[r] = 1;
            QElem x = E.from_standard(E0.to_standard(b));
            for (int s = 0; s < 4; ++s) L0(r, s) = x[s];
        }
        const int i = find_unit(E, U, {0, 1, 0, 0});
        const int sigma = find_unit(E, U, {Rational(-1, 2), 0, Rational(-1, 2), 0});
        o.check(determinant(L0) != 0, "E0 basis singular in E");
        for (int g : U.group.generated_by({i})) conj_action_matrix(E, U.elements[g], L0);
        bool sigma_stable = true;
        try {
            conj_action_matrix(E, U.elements[sigma], L0);
        } catch (const Error&) {
            sigma_stable = false;
        }
        std::ostringstream os;
        os << "stable under <i>, [E:E0] = " << abs(determinant(L0)) << ", sigma-stable: " << (sigma_stable ? "yes" : "no");
        o.detail = os.str();
        return o;
    });
    for (int p : {3, 5})
        run(S, "honda_lattice_p" + std::to_string(p), [&cfg, p] {
            Outcome o;
            TruncatedOn R = make_truncated_On(p, p - 1, cfg.precision);
            ZetaTau zt = hensel_zeta_tau(R);
            HondaLatticeCheck h = verify_honda_lattice(R, zt);
            o.check(h.stable, "not conjugation-stable");
            o.check(h.det_mod != 0, "determinant vanishes mod p^N");
            o.detail = "rank " + std::to_string(h.dim) + ", det valuation " + std::to_string(h.det_valuation) + ", " +
                       std::to_string(h.identities_checked) + " conjugation identities in O_n/p^" + std::to_string(cfg.precision);
            return o;
        });
}

// ---------------------------------------------------------------- order

void suite_order(SuiteReport& S, const VerifyConfig& cfg) {
    for (int p : {3, 5})
        run(S, "zeta_tau_p" + std::to_string(p), [&cfg, p] {
            Outcome o;
            const int n = p - 1, n2 = n * n;
            TruncatedOn R = make_truncated_On(p, n, cfg.precision);
            ZetaTau zt = hensel_zeta_tau(R);
            o.check(!R.is_one(zt.zeta) && R.is_one(R.pow(zt.zeta, p)), "zeta does not have order p");
            o.check(R.is_one(R.pow(zt.tau, n2)), "tau^(n^2) != 1");
            for (int64_t q : prime_factors(n2)) o.check(!R.is_one(R.pow(zt.tau, n2 / q)), "tau has order below n^2");
            auto lhs = R.mul(R.mul(zt.tau, zt.zeta), R.pow(zt.tau, n2 - 1));
            o.check(lhs == R.pow(zt.zeta, zt.e), "tau zeta tau^-1 != zeta^e");
            o.check(mult_order(zt.e, p) == p - 1, "e is not a primitive root");
            FiniteGroup G = zeta_tau_group(R, zt);
            o.check(find_isomorphism(G, make_metacyclic(p, n2, zt.e)).has_value(), "<zeta, tau> is not C_p x| C_{n^2}");
            o.detail = "e = " + std::to_string(zt.e) + ", " + std::to_string(zt.iterations) + " Newton steps, |<zeta,tau>| = " +
                       std::to_string(G.order());
            return o;
        });
    run(S, "gamma1_gamma2_p3", [&] {
        Outcome o;
        TruncatedOn R = make_truncated_On(3, 2, cfg.precision);
        LowerPSeriesData d = lower_p_series_data(R, 1, 2);
        o.check(d.order == 81 && d.invariants == std::vector<int64_t>{3, 3, 3, 3}, "Gamma1/Gamma2 invariants " + join(d.invariants));
        o.check(d.additive_iso, "x -> 1 + x not additive on Gamma1/Gamma2");
        o.detail = "(Z/3)^4 by enumeration, " + std::to_string(d.pairs_checked) + " pairs";
        return o;
    });
    run(S, "exp_identity", [&] {
        Outcome o;
        int total = 0;
        for (int p : {3, 5}) {
            TruncatedOn R = make_truncated_On(p, p - 1, cfg.precision);
            ExpCheck e = exp_identity_check(R, 1, cfg.exp_samples, cfg.seed);
            o.check(e.passed == e.samples, "exp(x) != 1 + x mod p^2 at p = " + std::to_string(p) +
                                               (e.counterexample ? " for " + R.show(*e.counterexample) : ""));
            total += e.samples;
        }
        o.detail = std::to_string(total) + " samples at p = 3, 5";
        return o;
    });
    run(S, "det_conjugation", [&] {
        Outcome o;
        int tested = 0;
        for (StructOrder (*mk)() : {make_lipschitz_order, make_hurwitz_order, make_eisenstein_order}) {
            StructOrder O = mk();
            UnitGroup U = finite_units(O);
            for (const auto& u : U.elements) {
                o.check(determinant(conj_action_matrix(O, u)) == 1, "det of conjugation by " + O.show(u));
                ++tested;
            }
        }
        for (int p : {3, 5}) {
            CaseData c = make_case_honda(p, cfg.precision);
            for (std::size_t g = 0; g < c.v_matrices.size(); ++g) {
                o.check(determinant(c.v_matrices[g]) == 1, "det of conjugation by " + c.table->group().name(static_cast<int>(g)));
                ++tested;
            }
        }
        o.detail = std::to_string(tested) + " finite-order units";
        return o;
    });
}

}  // namespace

SuiteReport run_suite(const std::string& suite, const VerifyConfig& cfg) {
    SuiteReport S;
    S.suite = suite;
    if (suite == "units") suite_units(S, cfg);
    else if (suite == "cohomology") suite_cohomology(S, cfg);
    else if (suite == "wu") suite_wu(S, cfg);
    else if (suite == "reps") suite_reps(S, cfg);
    else if (suite == "lattice") suite_lattice(S, cfg);
    else if (suite == "order") suite_order(S, cfg);
    else fail(ErrorKind::UnknownTag, "unknown suite " + suite);
    std::sort(S.items.begin(), S.items.end(), [](const CheckItem& a, const CheckItem& b) { return a.name < b.name; });
    return S;
}

}  // namespace swdual
