#include "swdual/cases.hpp"

#include "swdual/arith.hpp"
#include "swdual/error.hpp"

namespace swdual {

namespace {

int find_standard(const StructOrder& O, const UnitGroup& U, const QRat& q) {
    QElem x = O.from_standard(q);
    for (std::size_t g = 0; g < U.elements.size(); ++g)
        if (U.elements[g] == x) return static_cast<int>(g);
    fail(ErrorKind::InternalInvariant, "unit not found: " + O.show(x));
}

int64_t trace(const IntMatrix& A) {
    BigInt t = 0;
    for (std::size_t i = 0; i < A.rows(); ++i) t += A(i, i);
    return static_cast<int64_t>(t);
}

// Coefficients of zeta^a tau^h (zeta^b tau^j) (zeta^a tau^h)^-1 = zeta^(a + b e^h - a e^j) tau^j
// in the basis zeta^c tau^j, c < n, using 1 + zeta + ... + zeta^(p-1) = 0.
std::vector<int64_t> honda_conj_row(int p, int n, int64_t e, int a, int h, int j, int b) {
    std::vector<int64_t> row(static_cast<std::size_t>(n) * n, 0);
    const int64_t k = mod(a + b * pow_mod(e, h, p) - a * pow_mod(e, j, p), p);
    if (k < n) row[j * n + k] = 1;
    else
        for (int c = 0; c < n; ++c) row[j * n + c] = -1;
    return row;
}

IntMatrix honda_conj_matrix(int p, int n, int64_t e, int a, int h) {
    IntMatrix A(static_cast<std::size_t>(n) * n, static_cast<std::size_t>(n) * n);
    for (int j = 0; j < n; ++j)
        for (int b = 0; b < n; ++b) {
            auto row = honda_conj_row(p, n, e, a, h, j, b);
            for (std::size_t c = 0; c < row.size(); ++c) A(j * n + b, c) = row[c];
        }
    return A;
}

std::vector<int64_t> unit_vector(std::size_t len, std::size_t k) {
    std::vector<int64_t> v(len, 0);
    v.at(k) = 1;
    return v;
}

}  // namespace

const std::vector<int64_t>& CaseData::named_class(const std::string& name) const {
    for (auto& [nm, v] : named)
        if (nm == name) return v;
    fail(ErrorKind::InvalidArgument, "no representation named " + name + " in case " + tag);
}

ConjugationRep conjugation_rep_from_matrices(const CharacterTable& T, std::vector<IntMatrix> matrices) {
    const FiniteGroup& G = T.group();
    if (static_cast<int>(matrices.size()) != G.order()) fail(ErrorKind::DimensionMismatch, "one matrix per element");
    ConjugationRep R;
    R.matrices = std::move(matrices);
    std::vector<int64_t> tr;
    for (const auto& cl : G.classes()) {
        const int64_t t = trace(R.matrices[cl.rep]);
        for (int x : cl.elements) ensure(trace(R.matrices[x]) == t, "trace not constant on a class");
        tr.push_back(t);
    }
    R.character = character_from_traces(T, tr);
    R.ro = T.decompose_real(R.character);
    return R;
}

ConjugationRep conjugation_rep(const StructOrder& O, const UnitGroup& U, const CharacterTable& T,
                               const RatMatrix& lattice_basis) {
    if (T.group().table() != U.group.table()) fail(ErrorKind::MixedGroups, "table is not over the unit group");
    std::vector<IntMatrix> mats;
    for (const auto& u : U.elements) {
        try {
            mats.push_back(conj_action_matrix(O, u, lattice_basis));
        } catch (const Error& err) {
            if (err.kind() == ErrorKind::NonIntegralEntries)
                fail(ErrorKind::NotStable, "lattice not stable under conjugation by " + O.show(u));
            throw;
        }
    }
    return conjugation_rep_from_matrices(T, std::move(mats));
}

std::vector<std::string> quaternion_real_names(const CharacterTable& T, int i, int j) {
    const FiniteGroup& G = T.group();
    const int k = G.mul(i, j);
    std::vector<std::string> names;
    for (const auto& R : T.real_irreducibles()) {
        if (R.dim == 4) {
            names.push_back("H");
            continue;
        }
        ensure(R.dim == 1, "unexpected real irreducible of Q8");
        auto val = [&](int g) { return *R.character[G.class_of(g)].as_integer(); };
        if (val(i) == 1 && val(j) == 1) names.push_back("1");
        else if (val(i) == 1) names.push_back("chi_i");
        else if (val(j) == 1) names.push_back("chi_j");
        else {
            ensure(val(k) == 1, "sign character of Q8");
            names.push_back("chi_k");
        }
    }
    return names;
}

CaseData make_case_p3n2() {
    CaseData c;
    c.tag = "p3n2";
    c.p = 3;
    c.n = 2;
    c.order = make_eisenstein_order();
    c.units = finite_units(*c.order);
    auto T = std::make_shared<CharacterTable>(c.units->group);
    // Real irreducibles: 1, sign, the pair from C4, the 2-dim real one, the quaternionic one.
    std::vector<std::string> names;
    for (const auto& R : T->real_irreducibles()) {
        if (R.dim == 1) names.push_back(names.empty() ? "1" : "sigma");
        else if (R.dim == 2) names.push_back(R.type == RealType::Complex ? "gamma4" : "delta");
        else names.push_back("H");
    }
    T->set_real_names(names);
    c.table = T;
    c.torsion_name = "lambda";
    c.torsion_modulus = 3;
    c.has_w1 = true;
    c.ell = 8;
    c.w1_detector = find_standard(*c.order, *c.units, {0, 1, 0, 0});
    c.torsion_detector = find_standard(*c.order, *c.units, {Rational(-1, 2), 0, Rational(-1, 2), 0});
    auto V = conjugation_rep(*c.order, *c.units, *T, RatMatrix::identity(4));
    c.v_matrices = V.matrices;
    c.v_basis = c.order->basis_names();
    c.V = V.character;
    c.rho = T->regular();
    c.named = {{"1", T->decompose_real(T->trivial())}, {"rho", c.ro(c.rho)}, {"V", V.ro}};
    return c;
}

CaseData make_case_p2n2() {
    CaseData c;
    c.tag = "p2n2";
    c.p = 2;
    c.n = 2;
    c.order = make_hurwitz_order();
    c.units = finite_units(*c.order);
    auto T = std::make_shared<CharacterTable>(c.units->group);
    std::vector<std::string> names;
    for (const auto& R : T->real_irreducibles()) {
        if (R.dim == 1) names.push_back("1");
        else if (R.dim == 2) names.push_back("theta");
        else if (R.dim == 3) names.push_back("T");
        else names.push_back(R.type == RealType::Quaternionic ? "H" : "H'");
    }
    T->set_real_names(names);
    c.table = T;
    const FiniteGroup& G = T->group();
    const int gi = find_standard(*c.order, *c.units, {0, 1, 0, 0});

    // H is the left multiplication representation: trace 4 Re(u).
    {
        std::vector<int64_t> tr;
        for (const auto& cl : G.classes()) {
            Rational re = c.order->to_standard(c.units->elements[cl.rep])[0];
            tr.push_back(static_cast<int64_t>(numerator(Rational(re * 4))));
        }
        ensure(T->real_irreducibles()[T->real_index("H")].character == T->from_integers(tr),
               "quaternionic irreducible is not left multiplication");
    }

    auto V = conjugation_rep(*c.order, *c.units, *T, RatMatrix::identity(4));
    c.v_matrices = V.matrices;
    c.v_basis = c.order->basis_names();
    c.V = V.character;
    c.rho = T->regular();

    std::vector<int> q8;
    for (int x = 0; x < G.order(); ++x)
        if (4 % G.elem_order(x) == 0) q8.push_back(x);
    Subgroup Q = make_subgroup(G, q8, "Q8");
    CharacterTable TQ(Q.group);

    const std::size_t r = T->real_irreducibles().size();
    LambdaSeed sH{unit_vector(r, T->real_index("H")), 1, "lambda(H) = 1 normalizes the generator of H^4(G24; Z_2) = Z/8"};
    LambdaSeed sAd{V.ro, 2, "lambda(H_ad) = 2 lambda(H), from the geometry of SU(2)"};
    c.lambda = build_lambda_table(T, TQ, Q.embed, 8, "lambda(H)", {sH, sAd}, {{"C4", gi}});

    c.torsion_name = "lambda";
    c.torsion_modulus = 8;
    c.has_w1 = false;
    c.ell = 8;
    c.w1_detector = -1;
    c.torsion_detector = gi;
    c.named = {{"1", T->decompose_real(T->trivial())},
               {"rho", c.ro(c.rho)},
               {"V", V.ro},
               {"H_ad", V.ro},
               {"H", unit_vector(r, T->real_index("H"))},
               {"H'", unit_vector(r, T->real_index("H'"))},
               {"T", unit_vector(r, T->real_index("T"))},
               {"theta", unit_vector(r, T->real_index("theta"))}};
    return c;
}

CaseData make_case_honda(int p, int precision) {
    if (p < 3 || !is_prime(p)) fail(ErrorKind::InvalidArgument, "honda case needs an odd prime");
    CaseData c;
    c.tag = "honda";
    c.p = p;
    c.n = p - 1;
    const int n = c.n;
    TruncatedOn R = make_truncated_On(p, n, precision);
    c.zeta_tau = hensel_zeta_tau(R);
    c.e = c.zeta_tau->e;
    FiniteGroup G = make_metacyclic(p, n * n, c.e, "zeta", "tau");
    auto T = std::make_shared<CharacterTable>(G);
    c.table = T;
    // Element zeta^a tau^h has index h p + a.
    std::vector<IntMatrix> mats;
    for (int x = 0; x < G.order(); ++x) mats.push_back(honda_conj_matrix(p, n, c.e, x % p, x / p));
    auto V = conjugation_rep_from_matrices(*T, std::move(mats));
    c.v_matrices = V.matrices;
    for (int j = 0; j < n; ++j)
        for (int b = 0; b < n; ++b) c.v_basis.push_back("zeta^" + std::to_string(b) + " tau^" + std::to_string(j));
    c.V = V.character;
    c.rho = T->regular();
    c.torsion_name = "ch_" + std::to_string(n);
    c.torsion_modulus = p;
    c.has_w1 = true;
    c.ell = 2 * p;
    c.torsion_detector = 1;
    c.w1_detector = p;

    // Sign representation through G -> C_{n^2} -> {+1, -1}.
    std::vector<int64_t> sg;
    for (const auto& cl : G.classes()) sg.push_back((cl.rep / p) % 2 ? -1 : 1);
    c.named = {{"1", T->decompose_real(T->trivial())},
               {"sigma", T->decompose_real(T->from_integers(sg))},
               {"rho", c.ro(c.rho)},
               {"V", V.ro}};
    return c;
}

RegularSummands honda_regular_summands(const CaseData& c) {
    if (c.tag != "honda") fail(ErrorKind::WrongGroup, "regular summands are defined for the honda case");
    const CharacterTable& T = *c.table;
    const FiniteGroup& G = T.group();
    const int p = c.p, n = c.n, n2 = n * n;
    const int N = T.exponent();
    RegularSummands out;
    out.names.push_back("1");
    out.characters.push_back(T.trivial());
    {
        ClassFn s;
        for (const auto& cl : G.classes()) s.emplace_back(N, (cl.rep / p) % 2 ? -1 : 1);
        out.names.push_back("sigma");
        out.characters.push_back(s);
    }
    for (int m = 1; m <= (n2 - 2) / 2; ++m) {
        ClassFn s;
        for (const auto& cl : G.classes()) {
            const int64_t h = cl.rep / p;
            s.push_back(Cyclo::root_power(N, m * h * (N / n2)) + Cyclo::root_power(N, -m * h * (N / n2)));
        }
        out.names.push_back("lambda_" + std::to_string(m));
        out.characters.push_back(s);
    }
    std::vector<int> cp;
    for (int a = 0; a < p; ++a) cp.push_back(a);
    Subgroup C = make_subgroup(G, cp, "C" + std::to_string(p));
    CharacterTable TC(C.group);
    for (int m = 1; m <= n / 2; ++m) {
        ClassFn alpha;
        for (const auto& cl : TC.group().classes()) {
            const int a = C.embed[cl.rep] % p;
            alpha.push_back(Cyclo::root_power(TC.exponent(), static_cast<int64_t>(m) * a) +
                            Cyclo::root_power(TC.exponent(), -static_cast<int64_t>(m) * a));
        }
        out.names.push_back("Lambda_" + std::to_string(m));
        out.characters.push_back(induce_fn(TC, T, C.embed, alpha));
    }
    return out;
}

HondaLatticeCheck verify_honda_lattice(const TruncatedOn& R, const ZetaTau& zt) {
    const int p = R.p(), n = R.n();
    if (n != p - 1) fail(ErrorKind::InvalidArgument, "lattice check needs n = p - 1");
    const int d = n * n;
    HondaLatticeCheck out;
    out.dim = d;
    std::vector<TruncatedOn::Elem> basis;
    for (int j = 0; j < n; ++j)
        for (int b = 0; b < n; ++b) basis.push_back(R.mul(R.pow(zt.zeta, b), R.pow(zt.tau, j)));
    IntMatrix B(d, d);
    for (int r = 0; r < d; ++r)
        for (int s = 0; s < d; ++s) B(r, s) = basis[r][s];
    const BigInt P = R.modulus();
    out.det_mod = mod(determinant(B), P);
    out.det_valuation = 0;
    if (out.det_mod == 0) out.det_valuation = R.precision();
    else {
        BigInt t = out.det_mod;
        while (t % p == 0) {
            t /= p;
            ++out.det_valuation;
        }
    }
    // Conjugation by zeta and tau, compared modulo p^(N-1) since the cyclotomic relation
    // for zeta holds only up to the last S-adic digit.
    const int m = R.precision() - 1;
    const int64_t ord_tau = static_cast<int64_t>(n) * n;
    bool ok = true;
    const std::vector<std::pair<int, int>> gens = {{1, 0}, {0, 1}};
    for (auto [a, h] : gens) {
        auto g = R.mul(R.pow(zt.zeta, a), R.pow(zt.tau, h));
        auto ginv = R.mul(R.pow(zt.tau, ord_tau - h), R.pow(zt.zeta, p - a));
        for (int j = 0; j < n; ++j)
            for (int b = 0; b < n; ++b) {
                auto lhs = R.mul(R.mul(g, basis[j * n + b]), ginv);
                auto row = honda_conj_row(p, n, zt.e, a, h, j, b);
                auto rhs = R.zero();
                for (int s = 0; s < d; ++s)
                    if (row[s]) rhs = R.add(rhs, R.scale(basis[s], row[s]));
                if (R.reduce(lhs, m) != R.reduce(rhs, m)) ok = false;
                ++out.identities_checked;
            }
    }
    out.stable = ok && out.det_valuation < R.precision();
    return out;
}

}  // namespace swdual
