#include "swdual/cyclotomic.hpp"

#include "swdual/arith.hpp"
#include "swdual/error.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace swdual {

namespace {

int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::InternalInvariant, "cyclotomic coefficient overflow");
    return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::InternalInvariant, "cyclotomic coefficient overflow");
    return r;
}

// Exact quotient of a by monic b.
std::vector<int64_t> poly_div_exact(std::vector<int64_t> a, const std::vector<int64_t>& b) {
    std::size_t db = b.size() - 1;
    std::vector<int64_t> q(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        int64_t c = a[i];
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    for (std::size_t i = 0; i < db; ++i) ensure(a[i] == 0, "cyclotomic division not exact");
    return q;
}

}  // namespace

std::vector<int64_t> cyclotomic_poly(int N) {
    static std::map<int, std::vector<int64_t>> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(N);
        if (it != cache.end()) return it->second;
    }
    std::vector<int64_t> p(N + 1, 0);
    p[0] = -1;
    p[N] = 1;
    for (int d = 1; d < N; ++d)
        if (N % d == 0) p = poly_div_exact(p, cyclotomic_poly(d));
    std::lock_guard<std::mutex> lk(mu);
    cache[N] = p;
    return p;
}

Cyclo::Cyclo(int N, int64_t c) : N_(N), c_(N, 0) {
    if (N < 1) fail(ErrorKind::InvalidArgument, "cyclotomic order must be positive");
    c_[0] = c;
}

Cyclo Cyclo::root_power(int N, int64_t k) {
    Cyclo z(N);
    z.c_[0] = 0;
    z.c_[mod(k, N)] = 1;
    return z;
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
    Cyclo r = *this;
    return r += o;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
    ensure(N_ == o.N_, "cyclotomic order mismatch");
    for (int i = 0; i < N_; ++i) c_[i] = checked_add(c_[i], o.c_[i]);
    return *this;
}

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyclo Cyclo::operator-(const Cyclo& o) const { return *this + (-o); }

Cyclo Cyclo::operator*(const Cyclo& o) const {
    ensure(N_ == o.N_, "cyclotomic order mismatch");
    Cyclo r(N_);
    for (int i = 0; i < N_; ++i) {
        if (!c_[i]) continue;
        for (int j = 0; j < N_; ++j) {
            if (!o.c_[j]) continue;
            int k = (i + j) % N_;
            r.c_[k] = checked_add(r.c_[k], checked_mul(c_[i], o.c_[j]));
        }
    }
    return r;
}

Cyclo Cyclo::operator*(int64_t s) const {
    Cyclo r = *this;
    for (auto& x : r.c_) x = checked_mul(x, s);
    return r;
}

Cyclo Cyclo::conj() const { return galois(-1); }

Cyclo Cyclo::galois(int64_t k) const {
    Cyclo r(N_);
    for (int i = 0; i < N_; ++i) {
        int j = static_cast<int>(mod(static_cast<int64_t>(i) * k, N_));
        r.c_[j] = checked_add(r.c_[j], c_[i]);
    }
    return r;
}

Cyclo Cyclo::lift(int M) const {
    if (M % N_) fail(ErrorKind::InvalidArgument, "lift target must be a multiple of the order");
    Cyclo r(M);
    const int s = M / N_;
    for (int i = 0; i < N_; ++i) r.c_[i * s] = c_[i];
    return r;
}

std::vector<int64_t> Cyclo::reduced() const {
    const auto phi = cyclotomic_poly(N_);
    const std::size_t d = phi.size() - 1;
    std::vector<int64_t> a = c_;
    for (std::size_t i = a.size(); i-- > d;) {
        int64_t c = a[i];
        if (!c) continue;
        for (std::size_t j = 0; j <= d; ++j) a[i - d + j] = checked_add(a[i - d + j], -checked_mul(c, phi[j]));
    }
    a.resize(d);
    return a;
}

bool Cyclo::operator==(const Cyclo& o) const { return (*this - o).is_zero(); }

bool Cyclo::is_zero() const {
    for (auto x : reduced())
        if (x) return false;
    return true;
}

std::optional<int64_t> Cyclo::as_integer() const {
    auto r = reduced();
    for (std::size_t i = 1; i < r.size(); ++i)
        if (r[i]) return std::nullopt;
    return r.empty() ? 0 : r[0];
}

std::optional<Cyclo> Cyclo::div_exact(int64_t d) const {
    auto r = reduced();
    Cyclo q(N_);
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] % d) return std::nullopt;
        q.c_[i] = r[i] / d;
    }
    return q;
}

std::string Cyclo::str() const {
    auto r = reduced();
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (!r[i]) continue;
        int64_t c = r[i];
        if (!first) os << (c < 0 ? "-" : "+");
        else if (c < 0) os << "-";
        int64_t a = c < 0 ? -c : c;
        if (i == 0) os << a;
        else {
            if (a != 1) os << a << "*";
            os << "z" << N_;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return first ? "0" : os.str();
}

}  // namespace swdual
