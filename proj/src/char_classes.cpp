#include "swdual/char_classes.hpp"

#include "swdual/arith.hpp"
#include "swdual/error.hpp"
#include "swdual/matrix.hpp"

#include <optional>

namespace swdual {

const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::Computed: return "computed";
        case Provenance::PaperInput: return "paper-input";
        case Provenance::CitedRule: return "cited-rule";
    }
    return "?";
}

ChernData chern_on_cyclic(int64_t k, const std::vector<int64_t>& multipliers) {
    if (k < 1) fail(ErrorKind::InvalidArgument, "cyclic order must be positive");
    ChernData d;
    d.k = k;
    d.c = {mod(1, k)};
    for (int64_t m : multipliers) {
        // Multiply by (1 + m z0).
        d.c.push_back(0);
        for (std::size_t j = d.c.size() - 1; j >= 1; --j) d.c[j] = mod(d.c[j] + m % k * d.c[j - 1], k);
    }
    d.c[0] = 1;
    return d;
}

CyclicRealSplit split_real_cyclic(const std::vector<int64_t>& eig_mult) {
    const int64_t k = static_cast<int64_t>(eig_mult.size());
    if (k < 1) fail(ErrorKind::InvalidArgument, "empty multiplicity vector");
    CyclicRealSplit s;
    s.k = k;
    s.trivial = eig_mult[0];
    for (int64_t m = 1; 2 * m < k; ++m) {
        if (eig_mult[m] != eig_mult[k - m]) fail(ErrorKind::NotAClassFunction, "not the character of a real representation");
        if (eig_mult[m] < 0) fail(ErrorKind::NotAClassFunction, "negative multiplicity");
        for (int64_t t = 0; t < eig_mult[m]; ++t) s.lines.push_back(m);
    }
    if (k % 2 == 0) s.sign = eig_mult[k / 2];
    if (s.trivial < 0 || s.sign < 0) fail(ErrorKind::NotAClassFunction, "negative multiplicity");
    return s;
}

LambdaCyclic lambda_on_cyclic(int64_t k, const std::vector<int64_t>& multipliers) {
    ChernData ch = chern_on_cyclic(k, multipliers);
    const int64_t c1 = ch.c_at(1), c2 = ch.c_at(2);
    LambdaCyclic L;
    L.k = k;
    for (int64_t d = 0; d < k; ++d)
        if (mod(2 * d - c1, k) == 0) L.d_choices.push_back(d);
    if (L.d_choices.empty()) fail(ErrorKind::NotSpinnable, "first Chern class is odd");
    for (int64_t d : L.d_choices) L.values.push_back(mod(d * c1 - c2, k));
    for (int64_t v : L.values)
        if (v != L.values[0]) fail(ErrorKind::SpinAmbiguity, "the spin structures give different lambda");
    L.value = L.values[0];
    return L;
}

LambdaCyclic lambda_of_real_on_cyclic(const std::vector<int64_t>& eig_mult) {
    CyclicRealSplit s = split_real_cyclic(eig_mult);
    if (s.sign % 2) fail(ErrorKind::NotSpinnable, "odd number of sign lines");
    std::vector<int64_t> lines = s.lines;
    for (int64_t t = 0; t < s.sign / 2; ++t) lines.push_back(s.k / 2);
    return lambda_on_cyclic(s.k, lines);
}

int64_t chern_character_complex(const std::vector<int64_t>& eig_mult, int k, int64_t p) {
    if (k < 1 || k >= p) fail(ErrorKind::IndexOutOfRange, "ch_k needs 1 <= k < p");
    if (static_cast<int64_t>(eig_mult.size()) != p) fail(ErrorKind::DimensionMismatch, "detector must be cyclic of order p");
    int64_t fact = 1;
    for (int i = 2; i <= k; ++i) fact = fact * i % p;
    int64_t s = 0;
    for (int64_t m = 1; m < p; ++m) s = mod(s + mod(eig_mult[m], p) * pow_mod(m, k, p), p);
    return s * inv_mod(fact, p) % p;
}

int64_t chern_character_real(const std::vector<int64_t>& eig_mult, int k, int64_t p) {
    if (p == 2) fail(ErrorKind::IndexOutOfRange, "real ch_k needs p odd");
    split_real_cyclic(eig_mult);
    return chern_character_complex(eig_mult, k, p) * inv_mod(2, p) % p;
}

std::vector<int64_t> cyclic_restriction(const CharacterTable& T, const ClassFn& chi, int g) {
    return T.element_multiplicities(chi, g);
}

namespace {

struct ModSolution {
    std::vector<int64_t> x;
    std::vector<bool> determined;
};

// Solves x A = b over Z/m for A with rows indexed by unknowns. nullopt if inconsistent.
std::optional<ModSolution> solve_mod(const std::vector<std::vector<int64_t>>& eqs, const std::vector<int64_t>& rhs,
                                     int nvars, int64_t m) {
    // Equations as rows: eqs[e] . x = rhs[e].
    const std::size_t ne = eqs.size();
    IntMatrix A(ne, nvars);
    for (std::size_t e = 0; e < ne; ++e)
        for (int v = 0; v < nvars; ++v) A(e, v) = eqs[e][v];
    SmithResult s = smith_normal_form(A);
    std::vector<BigInt> c(ne, 0);
    for (std::size_t i = 0; i < ne; ++i)
        for (std::size_t e = 0; e < ne; ++e) c[i] += s.U(i, e) * rhs[e];
    std::vector<int64_t> y(nvars, 0);
    std::vector<int64_t> step(nvars, 1);
    for (std::size_t i = 0; i < ne; ++i) {
        const int64_t ci = static_cast<int64_t>(mod(c[i], BigInt(m)));
        const int64_t di = i < static_cast<std::size_t>(nvars) ? static_cast<int64_t>(mod(s.D(i, i), BigInt(m))) : 0;
        const int64_t g = gcd64(di, m);
        if (ci % g) return std::nullopt;
        if (i < static_cast<std::size_t>(nvars)) {
            step[i] = m / g;
            if (m / g > 1) y[i] = mod((ci / g) * inv_mod((di / g) % (m / g), m / g), m / g);
        }
    }
    ModSolution sol;
    sol.x.assign(nvars, 0);
    sol.determined.assign(nvars, true);
    for (int k = 0; k < nvars; ++k) {
        BigInt acc = 0;
        for (int i = 0; i < nvars; ++i) acc += s.V(k, i) * y[i];
        sol.x[k] = static_cast<int64_t>(mod(acc, BigInt(m)));
        for (int i = 0; i < nvars; ++i)
            if (step[i] < m && mod(static_cast<int64_t>(mod(s.V(k, i), BigInt(m))) * step[i], m) != 0)
                sol.determined[k] = false;
    }
    for (std::size_t e = 0; e < ne; ++e) {
        int64_t t = 0;
        for (int v = 0; v < nvars; ++v) t = mod(t + mod(eqs[e][v], m) * sol.x[v], m);
        ensure(t == mod(rhs[e], m), "modular solve check failed");
    }
    return sol;
}

// Integer kernel {x : x M = 0} of an r x s matrix, as rows.
std::vector<std::vector<int64_t>> left_kernel(const std::vector<std::vector<int64_t>>& M, int s) {
    const std::size_t r = M.size();
    IntMatrix A(s, r);  // A = M^T
    for (std::size_t i = 0; i < r; ++i)
        for (int j = 0; j < s; ++j) A(j, i) = M[i][j];
    SmithResult sn = smith_normal_form(A);
    std::size_t rank = 0;
    while (rank < std::min<std::size_t>(s, r) && sn.D(rank, rank) != 0) ++rank;
    std::vector<std::vector<int64_t>> out;
    for (std::size_t c = rank; c < r; ++c) {
        std::vector<int64_t> v(r);
        for (std::size_t i = 0; i < r; ++i) v[i] = static_cast<int64_t>(sn.V(i, c));
        out.push_back(v);
    }
    return out;
}

}  // namespace

std::vector<std::vector<int64_t>> real_restriction_matrix(const CharacterTable& G, const CharacterTable& H,
                                                          const std::vector<int>& embed) {
    std::vector<std::vector<int64_t>> rows;
    for (const auto& R : G.real_irreducibles()) rows.push_back(H.decompose_real(restrict_fn(G, H, embed, R.character)));
    return rows;
}

LambdaTable build_lambda_table(const TablePtr& G, const CharacterTable& H, const std::vector<int>& embed,
                               int64_t order, const std::string& generator, const std::vector<LambdaSeed>& seeds,
                               const std::vector<LambdaDetector>& detectors) {
    const auto& real = G->real_irreducibles();
    const int r = static_cast<int>(real.size());
    const int s = static_cast<int>(H.real_irreducibles().size());
    LambdaTable T;
    T.table = G;
    T.order = order;
    T.generator = generator;
    T.seeds = seeds;
    T.relations = left_kernel(real_restriction_matrix(*G, H, embed), s);

    std::vector<std::vector<int64_t>> eqs;
    std::vector<int64_t> rhs;
    eqs.push_back(G->decompose_real(G->trivial()));
    rhs.push_back(0);
    for (auto& k : T.relations) {
        eqs.push_back(k);
        rhs.push_back(0);
    }
    auto unseeded = solve_mod(eqs, rhs, r, order);
    if (!unseeded) fail(ErrorKind::IncompleteTable, "restriction relations are inconsistent");
    for (auto& sd : seeds) {
        if (static_cast<int>(sd.coeffs.size()) != r) fail(ErrorKind::DimensionMismatch, "seed length");
        eqs.push_back(sd.coeffs);
        rhs.push_back(sd.value);
    }
    auto full = solve_mod(eqs, rhs, r, order);
    if (!full) fail(ErrorKind::IncompleteTable, "seeds are inconsistent with the restriction relations");
    for (int k = 0; k < r; ++k)
        if (!full->determined[k]) fail(ErrorKind::IncompleteTable, "lambda of " + real[k].name + " is not determined");

    for (int k = 0; k < r; ++k)
        T.entries.push_back({real[k].name, full->x[k], unseeded->determined[k] ? Provenance::Computed : Provenance::PaperInput});

    // Every entry must agree with its cyclic detectors.
    for (const auto& det : detectors) {
        const int o = G->group().elem_order(det.element);
        if (order % o) fail(ErrorKind::InvalidArgument, "detector order must divide the table order");
        for (int k = 0; k < r; ++k) {
            auto mult = cyclic_restriction(*G, real[k].character, det.element);
            const int64_t lam = lambda_of_real_on_cyclic(mult).value;
            if (mod(full->x[k], o) != lam)
                fail(ErrorKind::InternalInvariant, "lambda of " + real[k].name + " disagrees with detector " + det.name);
            ++T.detector_checks;
        }
    }
    return T;
}

int64_t lambda_on_group(const LambdaTable& T, const std::vector<int64_t>& coeffs) {
    if (coeffs.size() != T.entries.size()) fail(ErrorKind::DimensionMismatch, "one coefficient per real irreducible required");
    int64_t s = 0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) s = mod(s + mod(coeffs[k], T.order) * T.entries[k].value, T.order);
    return s;
}

int64_t lambda_via_restriction(const LambdaTable& T, const CharacterTable& H, const std::vector<int>& embed,
                               const std::vector<int64_t>& coeffs_H) {
    auto M = real_restriction_matrix(*T.table, H, embed);
    const int r = static_cast<int>(M.size());
    const int s = static_cast<int>(coeffs_H.size());
    if (static_cast<int>(H.real_irreducibles().size()) != s) fail(ErrorKind::DimensionMismatch, "class length");
    // Integer solution of x M = coeffs_H.
    IntMatrix A(s, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < s; ++j) A(j, i) = M[i][j];
    SmithResult sn = smith_normal_form(A);
    std::vector<BigInt> c(s, 0);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) c[i] += sn.U(i, j) * coeffs_H[j];
    std::vector<BigInt> y(r, 0);
    for (int i = 0; i < s; ++i) {
        const BigInt d = i < r ? sn.D(i, i) : BigInt(0);
        if (d == 0) {
            if (c[i] != 0) fail(ErrorKind::IncompleteTable, "class is not a restriction");
            continue;
        }
        if (c[i] % d != 0) fail(ErrorKind::IncompleteTable, "class is not a restriction");
        y[i] = c[i] / d;
    }
    std::vector<int64_t> x(r);
    for (int k = 0; k < r; ++k) {
        BigInt acc = 0;
        for (int i = 0; i < r; ++i) acc += sn.V(k, i) * y[i];
        x[k] = static_cast<int64_t>(acc);
    }
    return lambda_on_group(T, x);
}

namespace {

std::vector<CohClass> mul_total(const std::vector<CohClass>& a, const std::vector<CohClass>& b) {
    const int top = static_cast<int>(a.size()) - 1;
    std::vector<CohClass> out;
    for (int d = 0; d <= top; ++d) {
        CohClass s = zero_class(a[0].model, d);
        for (int i = 0; i <= d; ++i) {
            if (a[i].is_zero() || b[d - i].is_zero()) continue;
            s = s + cup(a[i], b[d - i]);
        }
        out.push_back(s);
    }
    return out;
}

std::vector<CohClass> inverse_total(const std::vector<CohClass>& a) {
    // (1 + u)^-1 = sum (-u)^j, truncated.
    const int top = static_cast<int>(a.size()) - 1;
    std::vector<CohClass> u = a;
    u[0] = zero_class(a[0].model, 0);
    for (auto& x : u) x = x.scaled(-1);
    std::vector<CohClass> out, pw;
    for (int d = 0; d <= top; ++d) {
        out.push_back(d == 0 ? unit_class(a[0].model) : zero_class(a[0].model, d));
        pw.push_back(out.back());
    }
    for (int j = 1; j <= top; ++j) {
        pw = mul_total(pw, u);
        for (int d = 0; d <= top; ++d) out[d] = out[d] + pw[d];
    }
    return out;
}

}  // namespace

std::vector<CohClass> total_sw(const BarModelPtr& M, const CharacterTable& T, const std::vector<int64_t>& coeffs) {
    if (M->p() != 2) fail(ErrorKind::InvalidArgument, "Stiefel-Whitney classes need the mod 2 model");
    const FiniteGroup& G = T.group();
    if (G.table() != M->group().table()) fail(ErrorKind::MixedGroups, "model and table describe different groups");
    const auto& real = T.real_irreducibles();
    if (coeffs.size() != real.size()) fail(ErrorKind::DimensionMismatch, "one coefficient per real irreducible required");
    const int top = M->maxdeg();
    const int N = T.exponent();

    std::vector<CohClass> total;
    for (int d = 0; d <= top; ++d) total.push_back(d == 0 ? unit_class(M) : zero_class(M, d));

    for (std::size_t k = 0; k < real.size(); ++k) {
        if (!coeffs[k]) continue;
        const RealIrrep& R = real[k];
        std::vector<CohClass> f;
        for (int d = 0; d <= top; ++d) f.push_back(d == 0 ? unit_class(M) : zero_class(M, d));
        if (R.type == RealType::Real && R.dim == 1) {
            std::vector<int> vals(G.order());
            for (int g = 0; g < G.order(); ++g) vals[g] = *R.character[G.class_of(g)].as_integer() == 1 ? 0 : 1;
            if (top >= 1) f[1] = hom_class(M, vals);
        } else if (R.type == RealType::Complex && R.dim == 2) {
            // c1 mod 2 of a linear character a: G -> Z/N is the carry cocycle (a(g) + a(h) - a(gh)) / N.
            const ClassFn& chi = T.irreducibles()[R.complex_index];
            std::vector<int> a(G.order());
            for (int g = 0; g < G.order(); ++g) {
                auto m = T.element_multiplicities(chi, g);
                const int o = static_cast<int>(m.size());
                int e = -1;
                for (int t = 0; t < o; ++t)
                    if (m[t] == 1) e = t * (N / o);
                ensure(e >= 0, "linear character value");
                a[g] = e;
            }
            if (top >= 2) {
                FpVec c(M->cochain_dim(2), 0);
                for (int g = 1; g < G.order(); ++g)
                    for (int h = 1; h < G.order(); ++h)
                        c[M->index({g, h})] = static_cast<uint8_t>(((a[g] + a[h] - a[G.mul(g, h)]) / N) & 1);
                f[2] = class_of_cocycle(M, 2, c);
            }
        } else {
            fail(ErrorKind::NoDecomposition, R.name + " is not a sum of lines");
        }
        if (coeffs[k] < 0) f = inverse_total(f);
        const int64_t times = coeffs[k] < 0 ? -coeffs[k] : coeffs[k];
        for (int64_t t = 0; t < times; ++t) total = mul_total(total, f);
    }
    return total;
}

WuResult wu_congruence_check(int p, int n) {
    if (p < 3 || !is_prime(p)) fail(ErrorKind::InvalidArgument, "p must be an odd prime");
    if (n < 1) fail(ErrorKind::InvalidArgument, "n must be positive");
    WuResult W;
    W.r = (p - 1) / 2;
    W.m = W.r * n;
    if (W.m > 8) fail(ErrorKind::TooManyVariables, "rn exceeds 8");
    const int m = W.m;
    MPoly prod = MPoly::constant(m, 1, p);
    for (int i = 0; i < m; ++i) {
        Monomial mono(m, 0);
        mono[i] = W.r;
        prod = prod * (MPoly::constant(m, 1, p) + MPoly::monomial(mono, 1, p));
    }
    MPoly q = prod.homogeneous_part(W.r * n);
    W.q_in_e = sym_to_elementary(q);
    std::vector<MPoly> images;
    for (int i = 0; i < m; ++i) images.push_back(i + 1 < m ? MPoly(m, p) : MPoly::var(m, i, p));
    W.reduced = W.q_in_e.substitute(images);
    const int64_t sign = (static_cast<int64_t>(n) * (W.r + 1)) % 2 ? -1 : 1;
    Monomial em(m, 0);
    em[m - 1] = 1;
    W.target = MPoly::monomial(em, Rational(sign * W.r), p);
    W.holds = W.reduced == W.target;
    return W;
}

}  // namespace swdual
