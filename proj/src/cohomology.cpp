#include "swdual/cohomology.hpp"

#include "swdual/arith.hpp"
#include "swdual/error.hpp"

#include <cmath>
#include <sstream>

namespace swdual {

namespace {

std::size_t upow(std::size_t b, int e) {
    std::size_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

// Calls emit(column, sign) for each face of the (k+1)-tuple x (non-identity
// element indices) that survives normalization.
template <class Emit>
void faces(const FiniteGroup& G, const std::vector<int>& x, int k, std::size_t base, Emit&& emit) {
    // d^0: drop x_1.
    std::size_t idx = 0;
    for (int t = 1; t <= k; ++t) idx = idx * base + (x[t] - 1);
    emit(idx, 1);
    for (int i = 1; i <= k; ++i) {
        int prod = G.mul(x[i - 1], x[i]);
        if (prod == 0) continue;
        idx = 0;
        for (int t = 0; t <= k; ++t) {
            if (t == i) continue;
            int e = (t == i - 1) ? prod : x[t];
            idx = idx * base + (e - 1);
        }
        emit(idx, (i % 2) ? -1 : 1);
    }
    // Last face: drop x_{k+1}.
    idx = 0;
    for (int t = 0; t < k; ++t) idx = idx * base + (x[t] - 1);
    emit(idx, ((k + 1) % 2) ? -1 : 1);
}

void next_tuple(std::vector<int>& x, int n) {
    for (std::size_t t = x.size(); t-- > 0;) {
        if (++x[t] < n) return;
        x[t] = 1;
    }
}

}  // namespace

BarModel::BarModel(const FiniteGroup& G, int p, int maxdeg) : G_(G), p_(p), maxdeg_(maxdeg) {
    if (!is_prime(p) || p >= 128) fail(ErrorKind::InvalidArgument, "coefficients must be F_p with p < 128");
    if (maxdeg < 0) fail(ErrorKind::InvalidArgument, "negative degree");
    if (std::pow(static_cast<double>(G.order()), maxdeg) > kCap)
        fail(ErrorKind::TooLarge, "|G|^maxdeg exceeds 10^7");
    const int n = G.order();
    const std::size_t base = n - 1;

    for (int k = 0; k <= maxdeg; ++k) {
        const std::size_t dk = cochain_dim(k);
        // B^k = image of d^{k-1}.
        FpRowSpace B(p, dk);
        if (k >= 1) {
            const std::size_t dprev = cochain_dim(k - 1);
            for (std::size_t j = 0; j < dprev; ++j) {
                FpVec e(dprev, 0);
                e[j] = 1;
                B.insert(coboundary(e, k - 1));
            }
        }
        // Z^k = kernel of d^k, one row per (k+1)-tuple.
        FpRowSpace A(p, dk);
        if (n > 1) {
            std::vector<int> x(k + 1, 1);
            const std::size_t rows = upow(base, k + 1);
            for (std::size_t r = 0; r < rows; ++r) {
                FpVec row(dk, 0);
                faces(G_, x, k, base, [&](std::size_t c, int s) { row[c] = static_cast<uint8_t>(mod(row[c] + s, p)); });
                A.insert(std::move(row));
                next_tuple(x, n);
            }
        }
        std::vector<FpVec> Z = A.nullspace();
        for (const auto& b : B.rows()) ensure(is_cocycle(b, k), "d o d != 0");
        ensure(Z.size() >= B.rank(), "boundaries exceed cycles");
        const std::size_t h = Z.size() - B.rank();
        auto hs = std::make_shared<FpRowSpace>(p, dk, h);
        for (const auto& b : B.rows()) hs->insert(b);
        std::vector<FpVec> reps;
        for (const auto& z : Z) {
            FpVec probe = z;
            if (hs->reduce(probe)) continue;
            FpVec tag(h, 0);
            tag[reps.size()] = 1;
            hs->insert(z, tag);
            reps.push_back(z);
        }
        ensure(reps.size() == h, "class representatives do not span H^k");
        hspace_.push_back(hs);
        hbasis_.push_back(std::move(reps));
    }
}

std::size_t BarModel::cochain_dim(int k) const { return upow(G_.order() - 1, k); }

std::vector<int> BarModel::dims() const {
    std::vector<int> d;
    for (int k = 0; k <= maxdeg_; ++k) d.push_back(dim(k));
    return d;
}

std::size_t BarModel::index(const std::vector<int>& elems) const {
    std::size_t idx = 0;
    for (int e : elems) idx = idx * (G_.order() - 1) + (e - 1);
    return idx;
}

std::vector<int> BarModel::tuple(std::size_t idx, int k) const {
    std::vector<int> x(k);
    const std::size_t base = G_.order() - 1;
    for (int t = k; t-- > 0;) {
        x[t] = static_cast<int>(idx % base) + 1;
        idx /= base;
    }
    return x;
}

FpVec BarModel::coboundary(const FpVec& f, int k) const {
    const int n = G_.order();
    const std::size_t base = n - 1;
    const std::size_t rows = upow(base, k + 1);
    FpVec out(rows, 0);
    if (n == 1) return out;
    std::vector<int> x(k + 1, 1);
    for (std::size_t r = 0; r < rows; ++r) {
        int acc = 0;
        faces(G_, x, k, base, [&](std::size_t c, int s) { acc += s * f[c]; });
        out[r] = static_cast<uint8_t>(mod(acc, p_));
        next_tuple(x, n);
    }
    return out;
}

bool BarModel::is_cocycle(const FpVec& f, int k) const {
    for (auto v : coboundary(f, k))
        if (v) return false;
    return true;
}

bool BarModel::is_coboundary(const FpVec& f, int k) const {
    if (!is_cocycle(f, k)) return false;
    FpVec c = coords(f, k);
    for (auto v : c)
        if (v) return false;
    return true;
}

FpVec BarModel::coords(const FpVec& z, int k) const {
    if (k < 0 || k > maxdeg_) fail(ErrorKind::InvalidArgument, "degree outside the model");
    if (z.size() != cochain_dim(k)) fail(ErrorKind::DimensionMismatch, "cochain length");
    const auto& hs = *hspace_[k];
    FpVec v = z, tag(hbasis_[k].size(), 0);
    if (!hs.reduce(v, &tag)) fail(ErrorKind::NotACocycle, "cochain is not a cocycle");
    for (auto& t : tag) t = static_cast<uint8_t>((p_ - t) % p_);
    return tag;
}

FpVec BarModel::cocycle(const FpVec& c, int k) const {
    FpVec z(cochain_dim(k), 0);
    const auto& basis = hbasis_.at(k);
    if (c.size() != basis.size()) fail(ErrorKind::DimensionMismatch, "coordinate length");
    for (std::size_t j = 0; j < basis.size(); ++j) {
        if (!c[j]) continue;
        for (std::size_t i = 0; i < z.size(); ++i) z[i] = static_cast<uint8_t>((z[i] + c[j] * basis[j][i]) % p_);
    }
    return z;
}

FpVec BarModel::random_coboundary(int k, std::mt19937_64& rng) const {
    if (k == 0) return FpVec(1, 0);
    std::uniform_int_distribution<int> d(0, p_ - 1);
    FpVec f(cochain_dim(k - 1));
    for (auto& v : f) v = static_cast<uint8_t>(d(rng));
    return coboundary(f, k - 1);
}

BarModelPtr make_bar_model(const FiniteGroup& G, int p, int maxdeg) { return std::make_shared<BarModel>(G, p, maxdeg); }

std::vector<int> bar_cohomology(const FiniteGroup& G, int p, int maxdeg) { return BarModel(G, p, maxdeg).dims(); }

bool CohClass::is_zero() const {
    for (auto v : coords)
        if (v) return false;
    return true;
}

bool CohClass::operator==(const CohClass& o) const {
    if (model != o.model) fail(ErrorKind::MixedGroups, "classes live in different models");
    return degree == o.degree && coords == o.coords;
}

CohClass CohClass::operator+(const CohClass& o) const {
    if (model != o.model) fail(ErrorKind::MixedGroups, "classes live in different models");
    if (degree != o.degree) fail(ErrorKind::InvalidArgument, "degrees differ");
    CohClass r = *this;
    for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] = static_cast<uint8_t>((coords[i] + o.coords[i]) % model->p());
    return r;
}

CohClass CohClass::scaled(int c) const {
    CohClass r = *this;
    for (auto& v : r.coords) v = static_cast<uint8_t>(mod(static_cast<int64_t>(v) * c, model->p()));
    return r;
}

std::string CohClass::str() const {
    std::ostringstream os;
    os << "H^" << degree << "(" << model->group().label() << ";F" << model->p() << ")[";
    for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << int(coords[i]);
    return os.str() + "]";
}

CohClass make_class(const BarModelPtr& m, int degree, const FpVec& coords) {
    if (degree < 0 || degree > m->maxdeg()) fail(ErrorKind::InvalidArgument, "degree outside the model");
    if (static_cast<int>(coords.size()) != m->dim(degree)) fail(ErrorKind::DimensionMismatch, "coordinate length");
    return {m, degree, coords};
}

CohClass class_of_cocycle(const BarModelPtr& m, int degree, const FpVec& z) {
    return {m, degree, m->coords(z, degree)};
}

CohClass unit_class(const BarModelPtr& m) { return class_of_cocycle(m, 0, FpVec(1, 1)); }

CohClass zero_class(const BarModelPtr& m, int degree) { return {m, degree, FpVec(m->dim(degree), 0)}; }

CohClass hom_class(const BarModelPtr& m, const std::vector<int>& values) {
    const FiniteGroup& G = m->group();
    const int p = m->p();
    if (static_cast<int>(values.size()) != G.order()) fail(ErrorKind::DimensionMismatch, "hom values");
    for (int a = 0; a < G.order(); ++a)
        for (int b = 0; b < G.order(); ++b)
            if (mod(values[G.mul(a, b)] - values[a] - values[b], p) != 0)
                fail(ErrorKind::NotHomomorphism, "values do not define a homomorphism to Z/p");
    FpVec f(G.order() - 1);
    for (int a = 1; a < G.order(); ++a) f[a - 1] = static_cast<uint8_t>(mod(values[a], p));
    return class_of_cocycle(m, 1, f);
}

FpVec cup_cochains(const BarModel& M, const FpVec& f, int a, const FpVec& g, int b) {
    if (f.size() != M.cochain_dim(a) || g.size() != M.cochain_dim(b)) fail(ErrorKind::DimensionMismatch, "cochain length");
    const int p = M.p();
    FpVec out(M.cochain_dim(a + b), 0);
    const std::size_t nb = g.size();
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (!f[i]) continue;
        for (std::size_t j = 0; j < nb; ++j) out[i * nb + j] = static_cast<uint8_t>((f[i] * g[j]) % p);
    }
    return out;
}

CohClass cup(const CohClass& x, const CohClass& y) {
    if (x.model != y.model) fail(ErrorKind::MixedGroups, "cup of classes on different groups");
    const int d = x.degree + y.degree;
    if (d > x.model->maxdeg()) fail(ErrorKind::InvalidArgument, "product degree exceeds the model");
    return class_of_cocycle(x.model, d, cup_cochains(*x.model, x.cocycle(), x.degree, y.cocycle(), y.degree));
}

namespace {

void check_embedding(const FiniteGroup& G, const FiniteGroup& H, const std::vector<int>& embed) {
    if (static_cast<int>(embed.size()) != H.order()) fail(ErrorKind::NotSubgroup, "embedding size");
    std::vector<char> hit(G.order(), 0);
    for (int e : embed) {
        if (e < 0 || e >= G.order() || hit[e]) fail(ErrorKind::NotSubgroup, "embedding is not injective");
        hit[e] = 1;
    }
    for (int a = 0; a < H.order(); ++a)
        for (int b = 0; b < H.order(); ++b)
            if (embed[H.mul(a, b)] != G.mul(embed[a], embed[b])) fail(ErrorKind::NotSubgroup, "embedding is not a homomorphism");
}

}  // namespace

FpVec restrict_cochain(const BarModel& G, const BarModel& H, const std::vector<int>& embed, const FpVec& f, int k) {
    FpVec out(H.cochain_dim(k), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        auto h = H.tuple(i, k);
        for (auto& x : h) x = embed[x];
        out[i] = f[G.index(h)];
    }
    return out;
}

CohClass restriction(const CohClass& x, const BarModelPtr& H, const std::vector<int>& embed) {
    check_embedding(x.model->group(), H->group(), embed);
    if (H->p() != x.model->p()) fail(ErrorKind::MixedGroups, "coefficient primes differ");
    return class_of_cocycle(H, x.degree, restrict_cochain(*x.model, *H, embed, x.cocycle(), x.degree));
}

std::vector<int> coset_representatives(const FiniteGroup& G, const std::vector<int>& embed, std::mt19937_64* rng) {
    std::vector<int> coset_of(G.order(), -1), reps;
    for (int x = 0; x < G.order(); ++x) {
        if (coset_of[x] >= 0) continue;
        std::vector<int> members;
        for (int h : embed) {
            int y = G.mul(h, x);
            coset_of[y] = static_cast<int>(reps.size());
            members.push_back(y);
        }
        int rep = x;
        if (rng) rep = members[std::uniform_int_distribution<std::size_t>(0, members.size() - 1)(*rng)];
        reps.push_back(rep);
    }
    return reps;
}

FpVec transfer_cochain(const BarModel& H, const BarModel& G, const std::vector<int>& embed, const FpVec& f, int k,
                       const std::vector<int>& reps_in) {
    const FiniteGroup& GG = G.group();
    const FiniteGroup& HH = H.group();
    std::vector<int> reps = reps_in.empty() ? coset_representatives(GG, embed) : reps_in;
    std::vector<int> local(GG.order(), -1);
    for (int h = 0; h < HH.order(); ++h) local[embed[h]] = h;
    // rho(x) = x r(x)^-1 in H, where r(x) is the representative of H x.
    std::vector<int> rho(GG.order(), -1);
    for (int r : reps)
        for (int h : embed) {
            int x = GG.mul(h, r);
            ensure(rho[x] < 0, "coset representatives overlap");
            rho[x] = h;
        }
    for (int v : rho) ensure(v >= 0, "coset representatives do not cover G");
    const int p = G.p();
    FpVec out(G.cochain_dim(k), 0);
    std::vector<int> y(k + 1), w(k + 1), hs(k);
    for (std::size_t idx = 0; idx < out.size(); ++idx) {
        auto g = G.tuple(idx, k);
        y[0] = 0;
        for (int t = 0; t < k; ++t) y[t + 1] = GG.mul(y[t], g[t]);
        int acc = 0;
        for (int s : reps) {
            for (int t = 0; t <= k; ++t) w[t] = local[rho[GG.mul(s, y[t])]];
            bool degenerate = false;
            for (int t = 0; t < k; ++t) {
                hs[t] = HH.mul(HH.inv(w[t]), w[t + 1]);
                if (hs[t] == 0) degenerate = true;
            }
            if (degenerate) continue;
            acc += f[H.index(hs)];
        }
        out[idx] = static_cast<uint8_t>(mod(acc, p));
    }
    return out;
}

CohClass transfer(const CohClass& y, const BarModelPtr& G, const std::vector<int>& embed, const std::vector<int>& reps) {
    check_embedding(G->group(), y.model->group(), embed);
    if (G->p() != y.model->p()) fail(ErrorKind::MixedGroups, "coefficient primes differ");
    return class_of_cocycle(G, y.degree, transfer_cochain(*y.model, *G, embed, y.cocycle(), y.degree, reps));
}

CohClass conjugation_action(const CohClass& x, const FiniteGroup& ambient, const std::vector<int>& embed, int g) {
    const BarModel& H = *x.model;
    check_embedding(ambient, H.group(), embed);
    std::vector<int> local(ambient.order(), -1);
    for (int h = 0; h < H.group().order(); ++h) local[embed[h]] = h;
    std::vector<int> c(H.group().order());
    for (int h = 0; h < H.group().order(); ++h) {
        c[h] = local[ambient.conj(g, embed[h])];
        if (c[h] < 0) fail(ErrorKind::NotSubgroup, "subgroup is not normalized by the element");
    }
    const int k = x.degree;
    FpVec f = x.cocycle(), out(H.cochain_dim(k), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        auto t = H.tuple(i, k);
        for (auto& e : t) e = c[e];
        out[i] = f[H.index(t)];
    }
    return class_of_cocycle(x.model, k, out);
}

InvariantsModel invariants_model(int p, int64_t multiplier, int maxdeg) {
    if (!is_prime(p)) fail(ErrorKind::InvalidArgument, "p must be prime");
    if (mod(multiplier, p) == 0) fail(ErrorKind::BadMultiplier, "multiplier is divisible by p");
    InvariantsModel m;
    m.p = p;
    m.multiplier = mod(multiplier, p);
    m.generator_power = static_cast<int>(mult_order(m.multiplier, p));
    m.generator_degree = 2 * m.generator_power;
    for (int j = 1; 2 * j <= maxdeg; ++j)
        if (pow_mod(m.multiplier, j, p) == 1) m.invariant_degrees.push_back(2 * j);
    return m;
}

CyclicIntClass cyclic_z0_power(int k, int power, int64_t coeff) {
    CyclicIntClass c;
    c.k = k;
    c.power = power;
    c.coeff = power > 0 ? mod(coeff, k) : coeff;
    return c;
}

CyclicIntClass cup(const CyclicIntClass& x, const CyclicIntClass& y) {
    if (x.k != y.k) fail(ErrorKind::MixedGroups, "cyclic groups differ");
    return cyclic_z0_power(x.k, x.power + y.power, x.coeff * y.coeff);
}

}  // namespace swdual
