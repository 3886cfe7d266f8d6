#include "swdual/characters.hpp"

#include "swdual/arith.hpp"
#include "swdual/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

namespace swdual {

namespace {

using Vec = std::vector<int64_t>;

// Reduced row echelon form over F_q, in place; returns pivot columns.
std::vector<int> rref(std::vector<Vec>& rows, int64_t q) {
    std::vector<int> piv;
    std::size_t r = 0;
    const std::size_t ncols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t s = r;
        while (s < rows.size() && rows[s][c] == 0) ++s;
        if (s == rows.size()) continue;
        std::swap(rows[r], rows[s]);
        int64_t inv = inv_mod(rows[r][c], q);
        for (auto& x : rows[r]) x = x * inv % q;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            int64_t f = rows[i][c];
            for (std::size_t j = 0; j < ncols; ++j) rows[i][j] = mod(rows[i][j] - f * rows[r][j], q);
        }
        piv.push_back(static_cast<int>(c));
        ++r;
    }
    rows.resize(r);
    return piv;
}

int64_t det_mod(std::vector<Vec> a, int64_t q) {
    const std::size_t n = a.size();
    int64_t det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t s = c;
        while (s < n && a[s][c] == 0) ++s;
        if (s == n) return 0;
        if (s != c) {
            std::swap(a[s], a[c]);
            det = q - det;
        }
        det = det * a[c][c] % q;
        int64_t inv = inv_mod(a[c][c], q);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (!a[i][c]) continue;
            int64_t f = a[i][c] * inv % q;
            for (std::size_t j = c; j < n; ++j) a[i][j] = mod(a[i][j] - f * a[c][j], q);
        }
    }
    return det % q;
}

// Left null space of a (vectors x with x a = 0), as rows.
std::vector<Vec> left_nullspace(const std::vector<Vec>& a, int64_t q) {
    const std::size_t n = a.size();
    std::vector<Vec> t(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[j][i] = a[i][j];
    auto piv = rref(t, q);
    std::vector<bool> is_piv(n, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<Vec> out;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_piv[f]) continue;
        Vec x(n, 0);
        x[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = mod(-t[r][f], q);
        out.push_back(x);
    }
    return out;
}

bool value_less(const ClassFn& a, const ClassFn& b) {
    for (std::size_t c = 0; c < a.size(); ++c) {
        auto ra = a[c].reduced(), rb = b[c].reduced();
        if (ra != rb) return ra > rb;  // larger first, so the trivial character leads
    }
    return false;
}

void check_subgroup(const FiniteGroup& G, const FiniteGroup& H, const std::vector<int>& embed) {
    if (static_cast<int>(embed.size()) != H.order()) fail(ErrorKind::NotSubgroup, "embedding has wrong length");
    std::vector<bool> seen(G.order(), false);
    for (int h = 0; h < H.order(); ++h) {
        if (embed[h] < 0 || embed[h] >= G.order() || seen[embed[h]]) fail(ErrorKind::NotSubgroup, "embedding not injective");
        seen[embed[h]] = true;
    }
    for (int a = 0; a < H.order(); ++a)
        for (int b = 0; b < H.order(); ++b)
            if (embed[H.mul(a, b)] != G.mul(embed[a], embed[b]))
                fail(ErrorKind::NotSubgroup, "embedding is not a homomorphism");
}

}  // namespace

CharacterTable::CharacterTable(FiniteGroup G) : G_(std::move(G)), N_(G_.exponent()) {
    const auto& cls = G_.classes();
    const int r = static_cast<int>(cls.size());
    const int n = G_.order();

    power_.resize(r);
    for (int c = 0; c < r; ++c) {
        const int o = cls[c].order;
        power_[c].resize(o);
        for (int k = 0; k < o; ++k) power_[c][k] = G_.class_of(G_.pow(cls[c].rep, k));
    }

    // Prime q = 1 mod N large enough to separate degrees and eigenvalue multiplicities.
    const int64_t bound = 2 * static_cast<int64_t>(std::ceil(std::sqrt(static_cast<double>(n)))) + 1;
    int64_t q = N_ + 1;
    while (q <= bound || !is_prime(q)) q += N_;
    q_ = q;

    // a[i][j][k] = #{x in C_i : x^-1 z_k in C_j}.
    std::vector<std::vector<Vec>> a(r, std::vector<Vec>(r, Vec(r, 0)));
    for (int k = 0; k < r; ++k) {
        const int z = cls[k].rep;
        for (int x = 0; x < n; ++x) ++a[G_.class_of(x)][G_.class_of(G_.mul(G_.inv(x), z))][k];
    }

    // Split F_q^r into common eigenspaces of the class multiplication matrices.
    std::vector<std::vector<Vec>> spaces;
    {
        std::vector<Vec> id(r, Vec(r, 0));
        for (int i = 0; i < r; ++i) id[i][i] = 1;
        spaces.push_back(id);
    }
    std::mt19937_64 rng(0x5eed);
    for (int round = 0; round < 64; ++round) {
        bool all_one = true;
        for (auto& s : spaces) all_one = all_one && s.size() == 1;
        if (all_one) break;
        // A combination of class matrices; the first rounds use single classes.
        Vec coef(r, 0);
        if (round + 1 < r) coef[round + 1] = 1;
        else
            for (int i = 1; i < r; ++i) coef[i] = static_cast<int64_t>(rng() % q);
        std::vector<Vec> M(r, Vec(r, 0));
        for (int i = 1; i < r; ++i) {
            if (!coef[i]) continue;
            for (int j = 0; j < r; ++j)
                for (int k = 0; k < r; ++k) M[j][k] = (M[j][k] + coef[i] * a[i][j][k]) % q;
        }
        std::vector<std::vector<Vec>> next;
        for (auto& W : spaces) {
            if (W.size() == 1) {
                next.push_back(W);
                continue;
            }
            auto piv = rref(W, q);
            const std::size_t d = W.size();
            // M w_a = sum_b C[a][b] w_b, read off at the pivot columns.
            std::vector<Vec> C(d, Vec(d, 0));
            for (std::size_t aa = 0; aa < d; ++aa) {
                Vec img(r, 0);
                for (int j = 0; j < r; ++j) {
                    int64_t s = 0;
                    for (int k = 0; k < r; ++k) s = (s + M[j][k] * W[aa][k]) % q;
                    img[j] = s;
                }
                for (std::size_t b = 0; b < d; ++b) C[aa][b] = img[piv[b]];
            }
            std::size_t found = 0;
            for (int64_t lam = 0; lam < q && found < d; ++lam) {
                auto A = C;
                for (std::size_t i = 0; i < d; ++i) A[i][i] = mod(A[i][i] - lam, q);
                if (det_mod(A, q) != 0) continue;
                auto xs = left_nullspace(A, q);
                std::vector<Vec> E;
                for (auto& x : xs) {
                    Vec v(r, 0);
                    for (std::size_t aa = 0; aa < d; ++aa)
                        for (int j = 0; j < r; ++j) v[j] = (v[j] + x[aa] * W[aa][j]) % q;
                    E.push_back(v);
                }
                found += E.size();
                next.push_back(E);
            }
            ensure(found == d, "class matrix not diagonalizable mod q");
        }
        spaces = std::move(next);
    }
    ensure(static_cast<int>(spaces.size()) == r, "character splitting incomplete");

    // Primitive N-th root of unity in F_q standing for zeta_N.
    const int64_t zq = pow_mod(primitive_root(q), (q - 1) / N_, q);
    for (auto& W : spaces) {
        Vec w = W[0];
        ensure(w[0] != 0, "eigenvector vanishes at the identity");
        const int64_t s0 = inv_mod(w[0], q);
        for (auto& x : w) x = x * s0 % q;
        int64_t S = 0;
        for (int j = 0; j < r; ++j) {
            int jb = G_.class_of(G_.inv(cls[j].rep));
            S = (S + w[j] * w[jb] % q * inv_mod(cls[j].size, q)) % q;
        }
        const int64_t d2 = n % q * inv_mod(S, q) % q;
        int64_t deg = 0;
        for (int64_t t = 1; t * t <= n; ++t)
            if (t * t % q == d2) deg = t;
        ensure(deg > 0, "no admissible degree");
        Vec chi(r);
        for (int j = 0; j < r; ++j) chi[j] = w[j] * deg % q * inv_mod(cls[j].size, q) % q;
        ClassFn val;
        for (int c = 0; c < r; ++c) {
            const int o = cls[c].order;
            const int step = N_ / o;
            const int64_t oinv = inv_mod(o, q);
            Cyclo v(N_);
            for (int k = 0; k < o; ++k) {
                int64_t m = 0;
                for (int t = 0; t < o; ++t) {
                    int64_t e = mod(-static_cast<int64_t>(step) * k * t, N_);
                    m = (m + chi[power_[c][t]] * pow_mod(zq, e, q)) % q;
                }
                m = m * oinv % q;
                ensure(m <= deg, "eigenvalue multiplicity out of range");
                if (m) v += Cyclo::root_power(N_, static_cast<int64_t>(k) * step) * m;
            }
            val.push_back(v);
        }
        irr_.push_back(val);
    }

    std::stable_sort(irr_.begin(), irr_.end(), [](const ClassFn& x, const ClassFn& y) {
        int64_t dx = *x[0].as_integer(), dy = *y[0].as_integer();
        if (dx != dy) return dx < dy;
        return value_less(x, y);
    });

    int64_t sumsq = 0;
    for (int i = 0; i < r; ++i) sumsq += static_cast<int64_t>(dim(i)) * dim(i);
    ensure(sumsq == n, "sum of squared degrees differs from |G|");
    for (int i = 0; i < r; ++i)
        for (int j = i; j < r; ++j) ensure(inner(irr_[i], irr_[j]) == (i == j ? 1 : 0), "row orthogonality failed");

    build_real();
}

int CharacterTable::dim(int i) const { return static_cast<int>(*irr_.at(i)[0].as_integer()); }

int CharacterTable::power_class(int c, int64_t k) const {
    const auto& p = power_.at(c);
    return p[mod(k, static_cast<int64_t>(p.size()))];
}

ClassFn CharacterTable::trivial() const { return ClassFn(num_classes(), Cyclo(N_, 1)); }

ClassFn CharacterTable::zero() const { return ClassFn(num_classes(), Cyclo(N_, 0)); }

ClassFn CharacterTable::regular() const {
    ClassFn f = zero();
    f[0] = Cyclo(N_, G_.order());
    return f;
}

ClassFn CharacterTable::from_integers(const std::vector<int64_t>& v) const {
    if (static_cast<int>(v.size()) != num_classes()) fail(ErrorKind::NotAClassFunction, "one value per class required");
    ClassFn f;
    for (auto x : v) f.emplace_back(N_, x);
    return f;
}

int64_t CharacterTable::inner(const ClassFn& a, const ClassFn& b) const {
    const int r = num_classes();
    if (static_cast<int>(a.size()) != r || static_cast<int>(b.size()) != r)
        fail(ErrorKind::NotAClassFunction, "class function has wrong length");
    Cyclo s(N_);
    for (int c = 0; c < r; ++c) {
        if (a[c].order() != N_ || b[c].order() != N_) fail(ErrorKind::NotAClassFunction, "value field mismatch");
        s += a[c] * b[c].conj() * G_.classes()[c].size;
    }
    auto v = s.as_integer();
    if (!v || *v % G_.order()) fail(ErrorKind::NotAClassFunction, "inner product is not an integer");
    return *v / G_.order();
}

std::vector<int64_t> CharacterTable::decompose(const ClassFn& chi) const {
    std::vector<int64_t> m;
    for (const auto& x : irr_) m.push_back(inner(chi, x));
    if (combine(m) != chi) fail(ErrorKind::NotAClassFunction, "not a combination of irreducible characters");
    return m;
}

ClassFn CharacterTable::combine(const std::vector<int64_t>& mult) const {
    ensure(mult.size() == irr_.size(), "multiplicity vector length");
    ClassFn f = zero();
    for (std::size_t i = 0; i < irr_.size(); ++i) {
        if (!mult[i]) continue;
        for (int c = 0; c < num_classes(); ++c) f[c] += irr_[i][c] * mult[i];
    }
    return f;
}

int CharacterTable::frobenius_schur(int i) const {
    Cyclo s(N_);
    for (int c = 0; c < num_classes(); ++c) s += irr_.at(i)[power_class(c, 2)] * G_.classes()[c].size;
    auto v = s.as_integer();
    ensure(v && *v % G_.order() == 0, "indicator not integral");
    return static_cast<int>(*v / G_.order());
}

std::vector<int64_t> CharacterTable::eigen_multiplicities(const ClassFn& chi, int c) const {
    const int o = G_.classes().at(c).order;
    const int step = N_ / o;
    std::vector<int64_t> m(o);
    for (int k = 0; k < o; ++k) {
        Cyclo s(N_);
        for (int t = 0; t < o; ++t) s += chi.at(power_class(c, t)) * Cyclo::root_power(N_, -static_cast<int64_t>(step) * k * t);
        auto q = s.div_exact(o);
        std::optional<int64_t> v = q ? q->as_integer() : std::nullopt;
        if (!v) fail(ErrorKind::NotAClassFunction, "eigenvalue multiplicities are not integers");
        m[k] = *v;
    }
    return m;
}

std::vector<int64_t> CharacterTable::element_multiplicities(const ClassFn& chi, int g) const {
    // Conjugate elements have the same eigenvalues, and powers of g track powers of the representative.
    return eigen_multiplicities(chi, G_.class_of(g));
}

ClassFn CharacterTable::det(const ClassFn& chi) const {
    ClassFn f;
    for (int c = 0; c < num_classes(); ++c) {
        auto m = eigen_multiplicities(chi, c);
        const int o = static_cast<int>(m.size());
        int64_t e = 0;
        for (int k = 0; k < o; ++k) e = mod(e + k * m[k], o);
        f.push_back(Cyclo::root_power(N_, e * (N_ / o)));
    }
    return f;
}

ClassFn CharacterTable::conj(const ClassFn& chi) const {
    ClassFn f;
    for (auto& v : chi) f.push_back(v.conj());
    return f;
}

void CharacterTable::build_real() {
    real_.clear();
    const int r = num_classes();
    for (int i = 0; i < r; ++i) {
        const int fs = frobenius_schur(i);
        RealIrrep R;
        R.complex_index = i;
        R.partner = i;
        if (fs == 1) {
            R.type = RealType::Real;
            R.dim = dim(i);
            R.character = irr_[i];
        } else if (fs == -1) {
            R.type = RealType::Quaternionic;
            R.dim = 2 * dim(i);
            R.character = combine([&] {
                std::vector<int64_t> m(r, 0);
                m[i] = 2;
                return m;
            }());
        } else {
            ensure(fs == 0, "indicator out of range");
            auto cc = conj(irr_[i]);
            int j = -1;
            for (int t = 0; t < r; ++t)
                if (irr_[t] == cc) j = t;
            ensure(j >= 0 && j != i, "conjugate character missing");
            if (j < i) continue;
            R.type = RealType::Complex;
            R.partner = j;
            R.dim = 2 * dim(i);
            R.character = irr_[i];
            for (int c = 0; c < r; ++c) R.character[c] += irr_[j][c];
        }
        real_.push_back(R);
    }
    std::stable_sort(real_.begin(), real_.end(), [](const RealIrrep& a, const RealIrrep& b) { return a.dim < b.dim; });
    for (std::size_t k = 0; k < real_.size(); ++k) real_[k].name = "R" + std::to_string(k);
}

void CharacterTable::set_real_names(const std::vector<std::string>& names) {
    if (names.size() != real_.size()) fail(ErrorKind::InvalidArgument, "one name per real irreducible required");
    for (std::size_t k = 0; k < names.size(); ++k) real_[k].name = names[k];
}

int CharacterTable::real_index(const std::string& name) const {
    for (std::size_t k = 0; k < real_.size(); ++k)
        if (real_[k].name == name) return static_cast<int>(k);
    fail(ErrorKind::InvalidArgument, "no real irreducible named " + name);
}

std::vector<int64_t> CharacterTable::decompose_real(const ClassFn& chi) const {
    auto m = decompose(chi);
    std::vector<int64_t> out;
    for (const auto& R : real_) {
        const int64_t a = m[R.complex_index];
        switch (R.type) {
            case RealType::Real:
                out.push_back(a);
                break;
            case RealType::Quaternionic:
                if (a % 2) fail(ErrorKind::NotAClassFunction, "quaternionic constituent with odd multiplicity");
                out.push_back(a / 2);
                break;
            case RealType::Complex:
                if (m[R.partner] != a) fail(ErrorKind::NotAClassFunction, "character is not real");
                out.push_back(a);
                break;
        }
    }
    return out;
}

ClassFn CharacterTable::real_character(const std::vector<int64_t>& coeffs) const {
    if (coeffs.size() != real_.size()) fail(ErrorKind::DimensionMismatch, "one coefficient per real irreducible required");
    ClassFn f = zero();
    for (std::size_t k = 0; k < real_.size(); ++k) {
        if (!coeffs[k]) continue;
        for (int c = 0; c < num_classes(); ++c) f[c] += real_[k].character[c] * coeffs[k];
    }
    return f;
}

std::string CharacterTable::show(const ClassFn& chi) const {
    std::ostringstream os;
    os << "[";
    for (std::size_t c = 0; c < chi.size(); ++c) os << (c ? ", " : "") << chi[c].str();
    os << "]";
    return os.str();
}

ClassFn restrict_fn(const CharacterTable& G, const CharacterTable& H, const std::vector<int>& embed, const ClassFn& chi) {
    check_subgroup(G.group(), H.group(), embed);
    const int NH = H.exponent();
    ClassFn out;
    for (const auto& cl : H.group().classes()) {
        auto m = G.element_multiplicities(chi, embed[cl.rep]);
        const int o = static_cast<int>(m.size());
        ensure(o == cl.order, "element order changed under embedding");
        Cyclo v(NH);
        for (int k = 0; k < o; ++k)
            if (m[k]) v += Cyclo::root_power(NH, static_cast<int64_t>(k) * (NH / o)) * m[k];
        out.push_back(v);
    }
    return out;
}

ClassFn induce_fn(const CharacterTable& H, const CharacterTable& G, const std::vector<int>& embed, const ClassFn& psi) {
    check_subgroup(G.group(), H.group(), embed);
    if (static_cast<int>(psi.size()) != H.num_classes()) fail(ErrorKind::NotAClassFunction, "class function has wrong length");
    std::vector<int> back(G.group().order(), -1);
    for (int h = 0; h < H.group().order(); ++h) back[embed[h]] = h;
    const int NG = G.exponent();
    ClassFn out;
    for (const auto& cl : G.group().classes()) {
        // Ind psi(g) = |C_G(g)| / |H| * sum over y in class(g) meeting H of psi(y).
        Cyclo s(NG);
        for (int y : cl.elements)
            if (back[y] >= 0) s += psi[H.group().class_of(back[y])].lift(NG);
        const int64_t cent = G.group().order() / cl.size;
        auto q = (s * cent).div_exact(H.group().order());
        if (!q) fail(ErrorKind::NotAClassFunction, "induced values are not integral");
        out.push_back(*q);
    }
    return out;
}

ClassFn character_from_traces(const CharacterTable& T, const std::vector<int64_t>& traces) { return T.from_integers(traces); }

}  // namespace swdual
