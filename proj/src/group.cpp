#include "swdual/group.hpp"

#include "swdual/arith.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace swdual {

FiniteGroup::FiniteGroup(std::vector<int> table, int n, std::vector<std::string> names,
                         std::vector<std::pair<std::string, int>> generators, std::string label)
    : n_(n), table_(std::move(table)), names_(std::move(names)), gens_(std::move(generators)), label_(std::move(label)) {
    if (n < 1) fail(ErrorKind::InvalidArgument, "empty group");
    if (n > kMaxOrder) fail(ErrorKind::TooLarge, "group order " + std::to_string(n) + " exceeds cap");
    if (static_cast<int>(table_.size()) != n * n) fail(ErrorKind::DimensionMismatch, "table size");
    if (static_cast<int>(names_.size()) != n) {
        names_.resize(n);
        for (int i = 0; i < n; ++i) names_[i] = "g" + std::to_string(i);
    }
    for (int x : table_)
        if (x < 0 || x >= n) fail(ErrorKind::InvalidArgument, "table entry out of range");
    for (int x = 0; x < n; ++x)
        if (mul(0, x) != x || mul(x, 0) != x) fail(ErrorKind::InvalidArgument, "element 0 is not the identity");
    inv_.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (mul(a, b) == 0) {
                if (mul(b, a) != 0) fail(ErrorKind::NotAssociative, "one-sided inverse");
                inv_[a] = b;
                break;
            }
    for (int a = 0; a < n; ++a)
        if (inv_[a] < 0) fail(ErrorKind::InvalidArgument, "element without inverse: " + names_[a]);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const int ab = mul(a, b);
            for (int c = 0; c < n; ++c)
                if (table_[ab * n + c] != mul(a, mul(b, c)))
                    fail(ErrorKind::NotAssociative, names_[a] + "," + names_[b] + "," + names_[c]);
        }
    ord_.assign(n, 0);
    for (int a = 0; a < n; ++a) {
        int k = 1, x = a;
        while (x != 0) {
            x = mul(x, a);
            ++k;
        }
        ord_[a] = k;
    }
    if (!gens_.empty()) {
        std::vector<int> g;
        for (auto& [nm, x] : gens_) g.push_back(x);
        if (static_cast<int>(generated_by(g).size()) != n) fail(ErrorKind::NotGenerating, "generators are not generating");
    }
    compute_classes();
}

int FiniteGroup::pow(int a, int64_t e) const {
    e = mod(e, ord_[a]);
    int r = 0;
    for (int64_t i = 0; i < e; ++i) r = mul(r, a);
    return r;
}

int FiniteGroup::exponent() const {
    int64_t e = 1;
    for (int o : ord_) e = lcm64(e, o);
    return static_cast<int>(e);
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::optional<int> FiniteGroup::find(const std::string& name) const {
    for (int i = 0; i < n_; ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

void FiniteGroup::compute_classes() {
    class_of_.assign(n_, -1);
    classes_.clear();
    for (int x = 0; x < n_; ++x) {
        if (class_of_[x] >= 0) continue;
        std::set<int> orbit;
        for (int g = 0; g < n_; ++g) orbit.insert(conj(g, x));
        ConjClass c{x, static_cast<int>(orbit.size()), ord_[x], std::vector<int>(orbit.begin(), orbit.end())};
        for (int y : orbit) class_of_[y] = static_cast<int>(classes_.size());
        classes_.push_back(std::move(c));
    }
}

std::vector<int> FiniteGroup::center() const {
    std::vector<int> z;
    for (auto& c : classes_)
        if (c.size == 1) z.push_back(c.rep);
    return z;
}

std::vector<int> FiniteGroup::generated_by(const std::vector<int>& gens) const {
    std::vector<char> in(n_, 0);
    std::vector<int> elems{0};
    in[0] = 1;
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (int g : gens) {
            int x = mul(elems[i], g);
            if (!in[x]) {
                in[x] = 1;
                elems.push_back(x);
            }
        }
    std::sort(elems.begin(), elems.end());
    return elems;
}

bool FiniteGroup::is_subgroup(const std::vector<int>& elems) const {
    if (elems.empty()) return false;
    std::vector<char> in(n_, 0);
    for (int x : elems) {
        if (x < 0 || x >= n_) return false;
        in[x] = 1;
    }
    if (!in[0]) return false;
    for (int a : elems)
        for (int b : elems)
            if (!in[mul(a, inv_[b])]) return false;
    return true;
}

bool FiniteGroup::is_normal(const std::vector<int>& elems) const {
    if (!is_subgroup(elems)) return false;
    std::vector<char> in(n_, 0);
    for (int x : elems) in[x] = 1;
    for (int g = 0; g < n_; ++g)
        for (int x : elems)
            if (!in[conj(g, x)]) return false;
    return true;
}

Subgroup make_subgroup(const FiniteGroup& G, const std::vector<int>& elems_in, const std::string& label) {
    std::vector<int> elems = elems_in;
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (!G.is_subgroup(elems)) fail(ErrorKind::NotSubgroup, "subset is not a subgroup");
    const int m = static_cast<int>(elems.size());
    std::vector<int> local(G.order(), -1);
    for (int i = 0; i < m; ++i) local[elems[i]] = i;
    std::vector<int> table(static_cast<std::size_t>(m) * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) table[a * m + b] = local[G.mul(elems[a], elems[b])];
    std::vector<std::string> names;
    for (int x : elems) names.push_back(G.name(x));
    return {FiniteGroup(std::move(table), m, std::move(names), {}, label), elems};
}

FiniteGroup make_cyclic(int k, const std::string& gen) {
    if (k < 1) fail(ErrorKind::InvalidArgument, "cyclic order must be positive");
    std::vector<int> table(static_cast<std::size_t>(k) * k);
    std::vector<std::string> names(k);
    for (int a = 0; a < k; ++a) {
        names[a] = a == 0 ? "1" : (a == 1 ? gen : gen + "^" + std::to_string(a));
        for (int b = 0; b < k; ++b) table[a * k + b] = (a + b) % k;
    }
    std::vector<std::pair<std::string, int>> gens;
    if (k > 1) gens.emplace_back(gen, 1);
    return FiniteGroup(std::move(table), k, std::move(names), std::move(gens), "C" + std::to_string(k));
}

namespace {

std::string join_name(const std::string& a, const std::string& b) {
    if (a == "1") return b;
    if (b == "1") return a;
    return a + b;
}

}  // namespace

FiniteGroup make_direct_product(const FiniteGroup& A, const FiniteGroup& B) {
    std::vector<std::vector<int>> trivial(B.order(), std::vector<int>(A.order()));
    for (auto& row : trivial)
        for (int a = 0; a < A.order(); ++a) row[a] = a;
    FiniteGroup G = make_semidirect(A, B, trivial);
    G.set_label(A.label() + "x" + B.label());
    return G;
}

FiniteGroup make_semidirect(const FiniteGroup& N, const FiniteGroup& H, const std::vector<std::vector<int>>& action) {
    const int nn = N.order(), nh = H.order();
    if (static_cast<int>(action.size()) != nh) fail(ErrorKind::DimensionMismatch, "action must list every element of H");
    if (static_cast<long>(nn) * nh > FiniteGroup::kMaxOrder) fail(ErrorKind::TooLarge, "semidirect product too large");
    for (int h = 0; h < nh; ++h) {
        const auto& f = action[h];
        if (static_cast<int>(f.size()) != nn) fail(ErrorKind::NotAutomorphism, "action map has wrong size");
        std::vector<char> seen(nn, 0);
        for (int x : f) {
            if (x < 0 || x >= nn || seen[x]) fail(ErrorKind::NotAutomorphism, "action map is not bijective");
            seen[x] = 1;
        }
        for (int a = 0; a < nn; ++a)
            for (int b = 0; b < nn; ++b)
                if (f[N.mul(a, b)] != N.mul(f[a], f[b]))
                    fail(ErrorKind::NotAutomorphism, "action of " + H.name(h) + " is not multiplicative");
    }
    for (int h1 = 0; h1 < nh; ++h1)
        for (int h2 = 0; h2 < nh; ++h2)
            for (int a = 0; a < nn; ++a)
                if (action[H.mul(h1, h2)][a] != action[h1][action[h2][a]])
                    fail(ErrorKind::NotHomomorphism, "action is not a homomorphism H -> Aut(N)");

    const int n = nn * nh;
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    std::vector<std::string> names(n);
    // (a, h) has index h * nn + a and stands for a * h.
    for (int h1 = 0; h1 < nh; ++h1)
        for (int a1 = 0; a1 < nn; ++a1) {
            int x = h1 * nn + a1;
            names[x] = join_name(N.name(a1), H.name(h1));
            for (int h2 = 0; h2 < nh; ++h2)
                for (int a2 = 0; a2 < nn; ++a2)
                    table[x * n + h2 * nn + a2] = H.mul(h1, h2) * nn + N.mul(a1, action[h1][a2]);
        }
    std::vector<std::pair<std::string, int>> gens;
    for (auto& [nm, g] : N.generators()) gens.emplace_back(nm, g);
    for (auto& [nm, g] : H.generators()) gens.emplace_back(nm, g * nn);
    return FiniteGroup(std::move(table), n, std::move(names), std::move(gens), N.label() + ":" + H.label());
}

FiniteGroup make_metacyclic(int p, int m, int64_t e, const std::string& zeta, const std::string& tau) {
    FiniteGroup N = make_cyclic(p, zeta), H = make_cyclic(m, tau);
    std::vector<std::vector<int>> action(m, std::vector<int>(p));
    int64_t ej = 1;
    for (int j = 0; j < m; ++j) {
        for (int a = 0; a < p; ++a) action[j][a] = static_cast<int>(mod(a * ej, p));
        ej = mod(ej * e, p);
    }
    FiniteGroup G = make_semidirect(N, H, action);
    G.set_label("C" + std::to_string(p) + ":C" + std::to_string(m));
    return G;
}

FiniteGroup make_quaternion8() {
    // Index 2*u + s encodes sign s (0 = +, 1 = -) and unit u in {1, i, j, k}.
    static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign_mul[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    static const char* unit_name[4] = {"1", "i", "j", "k"};
    std::vector<int> table(64);
    std::vector<std::string> names(8);
    for (int x = 0; x < 8; ++x) {
        int ux = x / 2, sx = x % 2;
        names[x] = std::string(sx ? "-" : "") + unit_name[ux];
        for (int y = 0; y < 8; ++y) {
            int uy = y / 2, sy = y % 2;
            int s = sx ^ sy ^ sign_mul[ux][uy];
            table[x * 8 + y] = 2 * unit_mul[ux][uy] + s;
        }
    }
    return FiniteGroup(std::move(table), 8, std::move(names), {{"i", 2}, {"j", 4}}, "Q8");
}

FiniteGroup make_g12() {
    FiniteGroup G = make_metacyclic(3, 4, 2, "s", "t");
    G.set_label("G12");
    return G;
}

FiniteGroup make_g24() {
    FiniteGroup Q = make_quaternion8();
    FiniteGroup C = make_cyclic(3, "w");
    // w acts by i -> j -> k -> i.
    std::vector<int> cyc(8);
    for (int x = 0; x < 8; ++x) {
        int u = x / 2, s = x % 2;
        int v = u == 0 ? 0 : (u % 3) + 1;
        cyc[x] = 2 * v + s;
    }
    std::vector<std::vector<int>> action(3);
    action[0].resize(8);
    for (int x = 0; x < 8; ++x) action[0][x] = x;
    action[1] = cyc;
    action[2].resize(8);
    for (int x = 0; x < 8; ++x) action[2][x] = cyc[cyc[x]];
    FiniteGroup G = make_semidirect(Q, C, action);
    G.set_label("G24");
    return G;
}

namespace {

std::vector<int> greedy_generators(const FiniteGroup& G) {
    std::vector<int> cand(G.order());
    for (int i = 0; i < G.order(); ++i) cand[i] = i;
    std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) { return G.elem_order(a) > G.elem_order(b); });
    std::vector<int> gens;
    std::vector<int> H{0};
    for (int x : cand) {
        if (std::binary_search(H.begin(), H.end(), x)) continue;
        gens.push_back(x);
        H = G.generated_by(gens);
        if (static_cast<int>(H.size()) == G.order()) break;
    }
    return gens;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& A, const FiniteGroup& B) {
    if (A.order() != B.order() || order_statistics(A) != order_statistics(B)) return std::nullopt;
    std::vector<int> gens;
    for (auto& [nm, g] : B.generators()) gens.push_back(g);
    if (gens.empty()) gens = greedy_generators(B);
    const int n = B.order();
    std::vector<std::vector<int>> cand(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k)
        for (int a = 0; a < n; ++a)
            if (A.elem_order(a) == B.elem_order(gens[k])) cand[k].push_back(a);

    std::vector<int> choice(gens.size(), 0);
    std::function<std::optional<std::vector<int>>(std::size_t)> search = [&](std::size_t k) -> std::optional<std::vector<int>> {
        if (k < gens.size()) {
            for (int a : cand[k]) {
                choice[k] = a;
                if (auto r = search(k + 1)) return r;
            }
            return std::nullopt;
        }
        std::vector<int> phi(n, -1);
        phi[0] = 0;
        std::deque<int> q{0};
        while (!q.empty()) {
            int b = q.front();
            q.pop_front();
            for (std::size_t s = 0; s < gens.size(); ++s) {
                int nb = B.mul(b, gens[s]);
                int img = A.mul(phi[b], choice[s]);
                if (phi[nb] < 0) {
                    phi[nb] = img;
                    q.push_back(nb);
                } else if (phi[nb] != img) {
                    return std::nullopt;
                }
            }
        }
        std::vector<char> hit(n, 0);
        for (int x : phi) {
            if (x < 0 || hit[x]) return std::nullopt;
            hit[x] = 1;
        }
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (phi[B.mul(x, y)] != A.mul(phi[x], phi[y])) return std::nullopt;
        return phi;
    };
    return search(0);
}

std::vector<std::pair<int, int>> order_statistics(const FiniteGroup& G) {
    std::map<int, int> m;
    for (int a = 0; a < G.order(); ++a) ++m[G.elem_order(a)];
    return {m.begin(), m.end()};
}

}  // namespace swdual
