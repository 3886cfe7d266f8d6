#include "swdual/polynomial.hpp"

#include "swdual/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace swdual {

Rational MPoly::normalize(const Rational& c) const {
    if (mod_ == 0) return c;
    BigInt m = mod_;
    BigInt num = mod(numerator(c), m);
    BigInt den = mod(denominator(c), m);
    if (den == 0) fail(ErrorKind::InvalidArgument, "denominator divisible by the modulus");
    int64_t inv = inv_mod(static_cast<int64_t>(den), mod_);
    return Rational(mod(num * inv, m));
}

MPoly MPoly::constant(int nvars, const Rational& c, int64_t modulus) {
    MPoly p(nvars, modulus);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

MPoly MPoly::var(int nvars, int i, int64_t modulus) {
    Monomial m(nvars, 0);
    m[i] = 1;
    return monomial(m, 1, modulus);
}

MPoly MPoly::monomial(const Monomial& m, const Rational& c, int64_t modulus) {
    MPoly p(static_cast<int>(m.size()), modulus);
    p.add_term(m, c);
    return p;
}

int MPoly::total_degree() const {
    int d = -1;
    for (auto& [m, c] : t_) d = std::max(d, std::accumulate(m.begin(), m.end(), 0));
    return d;
}

void MPoly::add_term(const Monomial& m, const Rational& c) {
    if (static_cast<int>(m.size()) != nvars_) fail(ErrorKind::DimensionMismatch, "monomial arity");
    Rational v = normalize(t_.count(m) ? t_[m] + c : c);
    if (v == 0) t_.erase(m);
    else t_[m] = v;
}

Rational MPoly::coeff(const Monomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? Rational(0) : it->second;
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r = *this;
    for (auto& [m, c] : o.t_) r.add_term(m, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly r = *this;
    for (auto& [m, c] : o.t_) r.add_term(m, -c);
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    if (nvars_ != o.nvars_ || mod_ != o.mod_) fail(ErrorKind::DimensionMismatch, "polynomial ring mismatch");
    MPoly r(nvars_, mod_);
    Monomial m(nvars_);
    for (auto& [a, ca] : t_)
        for (auto& [b, cb] : o.t_) {
            for (int i = 0; i < nvars_; ++i) m[i] = a[i] + b[i];
            r.add_term(m, ca * cb);
        }
    return r;
}

MPoly MPoly::operator*(const Rational& s) const {
    MPoly r(nvars_, mod_);
    for (auto& [m, c] : t_) r.add_term(m, c * s);
    return r;
}

MPoly MPoly::pow(int e) const {
    MPoly r = constant(nvars_, 1, mod_), b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

MPoly MPoly::homogeneous_part(int deg) const {
    MPoly r(nvars_, mod_);
    for (auto& [m, c] : t_)
        if (std::accumulate(m.begin(), m.end(), 0) == deg) r.t_[m] = c;
    return r;
}

MPoly MPoly::substitute(const std::vector<MPoly>& images) const {
    if (static_cast<int>(images.size()) != nvars_) fail(ErrorKind::DimensionMismatch, "substitution arity");
    const int n = images.empty() ? 0 : images[0].nvars();
    MPoly r(n, mod_);
    std::vector<std::vector<MPoly>> powers(nvars_);
    for (auto& [m, c] : t_) {
        MPoly term = constant(n, c, mod_);
        for (int i = 0; i < nvars_; ++i) {
            auto& pw = powers[i];
            while (static_cast<int>(pw.size()) <= m[i])
                pw.push_back(pw.empty() ? constant(n, 1, mod_) : pw.back() * images[i]);
            if (m[i]) term = term * pw[m[i]];
        }
        r = r + term;
    }
    return r;
}

bool MPoly::is_symmetric() const {
    for (int i = 0; i + 1 < nvars_; ++i) {
        MPoly s(nvars_, mod_);
        for (auto& [m, c] : t_) {
            Monomial mm = m;
            std::swap(mm[i], mm[i + 1]);
            s.t_[mm] = c;
        }
        if (s != *this) return false;
    }
    return true;
}

std::string MPoly::str(const std::string& var_prefix) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        bool neg = a < 0;
        if (neg) a = -a;
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        bool constant_term = std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
        if (a != 1 || constant_term) os << a << (constant_term ? "" : "*");
        bool firstvar = true;
        for (int i = 0; i < nvars_; ++i) {
            if (!m[i]) continue;
            os << (firstvar ? "" : "*") << var_prefix << (i + 1);
            if (m[i] > 1) os << "^" << m[i];
            firstvar = false;
        }
        first = false;
    }
    return os.str();
}

MPoly elementary_symmetric(int nvars, int k, int64_t modulus) {
    MPoly r(nvars, modulus);
    if (k < 0 || k > nvars) return r;
    std::vector<int> sel(nvars, 0);
    std::fill(sel.end() - k, sel.end(), 1);
    do {
        r.add_term(Monomial(sel.begin(), sel.end()), 1);
    } while (std::next_permutation(sel.begin(), sel.end()));
    return r;
}

MPoly power_sum(int nvars, int k, int64_t modulus) {
    MPoly r(nvars, modulus);
    for (int i = 0; i < nvars; ++i) {
        Monomial m(nvars, 0);
        m[i] = k;
        r.add_term(m, 1);
    }
    return r;
}

MPoly sym_to_elementary(const MPoly& f) {
    const int m = f.nvars();
    const int64_t p = f.modulus();
    std::vector<MPoly> e;
    for (int k = 1; k <= m; ++k) e.push_back(elementary_symmetric(m, k, p));
    std::vector<std::vector<MPoly>> epow(m);

    MPoly g = f, result(m, p);
    while (!g.is_zero()) {
        auto lead = g.terms().rbegin();
        const Monomial a = lead->first;
        const Rational c = lead->second;
        Monomial b(m);
        for (int i = 0; i < m; ++i) {
            int next = i + 1 < m ? a[i + 1] : 0;
            if (a[i] < next) fail(ErrorKind::NotSymmetric, "leading monomial is not a partition: " + f.str());
            b[i] = a[i] - next;
        }
        result.add_term(b, c);
        MPoly prod = MPoly::constant(m, c, p);
        for (int i = 0; i < m; ++i) {
            auto& pw = epow[i];
            while (static_cast<int>(pw.size()) <= b[i])
                pw.push_back(pw.empty() ? MPoly::constant(m, 1, p) : pw.back() * e[i]);
            if (b[i]) prod = prod * pw[b[i]];
        }
        g = g - prod;
    }
    return result;
}

MPoly newton_s_k(int k, int64_t modulus) {
    if (k < 1) fail(ErrorKind::InvalidArgument, "newton_s_k needs k >= 1");
    std::vector<MPoly> s(k + 1, MPoly(k, modulus));
    auto c = [&](int i) { return MPoly::var(k, i - 1, modulus); };
    for (int j = 1; j <= k; ++j) {
        MPoly acc(k, modulus);
        for (int i = 1; i < j; ++i) {
            MPoly term = c(i) * s[j - i];
            acc = (i % 2 == 1) ? acc + term : acc - term;
        }
        MPoly last = c(j) * Rational(j);
        acc = (j % 2 == 1) ? acc + last : acc - last;
        s[j] = acc;
    }
    return s[k];
}

}  // namespace swdual
