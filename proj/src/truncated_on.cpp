#include "swdual/truncated_on.hpp"

#include "swdual/arith.hpp"
#include "swdual/error.hpp"

#include <map>
#include <sstream>

namespace swdual {

namespace {

using Poly = std::vector<int64_t>;

int64_t mdP(__int128 v, int64_t P) {
    int64_t r = static_cast<int64_t>(v % P);
    return r < 0 ? r + P : r;
}

// a * b mod (f, P) for monic f of degree n, inputs of length n.
Poly polymulmod(const Poly& a, const Poly& b, const Poly& f, int64_t P) {
    const std::size_t n = f.size() - 1;
    std::vector<__int128> t(2 * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < n; ++j) t[i + j] += static_cast<__int128>(a[i]) * b[j];
    }
    for (std::size_t k = 2 * n; k-- > n;) {
        int64_t c = mdP(t[k], P);
        if (!c) continue;
        for (std::size_t j = 0; j <= n; ++j) t[k - n + j] -= static_cast<__int128>(c) * f[j];
    }
    Poly r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = mdP(t[i], P);
    return r;
}

Poly polypowmod(Poly b, BigInt e, const Poly& f, int64_t P) {
    const std::size_t n = f.size() - 1;
    Poly r(n, 0);
    r[0] = 1 % P;
    while (e > 0) {
        if ((e & 1) != 0) r = polymulmod(r, b, f, P);
        e >>= 1;
        if (e > 0) b = polymulmod(b, b, f, P);
    }
    return r;
}

bool is_identity(const Poly& x) {
    if (x.empty() || x[0] != 1) return false;
    for (std::size_t i = 1; i < x.size(); ++i)
        if (x[i]) return false;
    return true;
}

// Lexicographically first monic f of degree n over F_p whose root has order p^n - 1.
Poly primitive_poly(int p, int n) {
    const int64_t q1 = ipow(p, n) - 1;
    const auto primes = prime_factors(q1);
    Poly f(n + 1, 0);
    f[n] = 1;
    int64_t total = ipow(p, n);
    for (int64_t code = 0; code < total; ++code) {
        int64_t c = code;
        for (int i = 0; i < n; ++i) {
            f[i] = c % p;
            c /= p;
        }
        if (f[0] == 0) continue;
        Poly x(n, 0);
        if (n == 1) x[0] = mod(-f[0], p);
        else x[1] = 1;
        if (!is_identity(polypowmod(x, q1, f, p))) continue;
        bool ok = true;
        for (int64_t r : primes)
            if (is_identity(polypowmod(x, q1 / r, f, p))) ok = false;
        if (ok) return f;
    }
    fail(ErrorKind::InternalInvariant, "no primitive polynomial found");
}

// Inverse of a matrix over Z/P that is invertible mod p.
std::vector<Poly> inverse_mod(std::vector<Poly> a, int64_t P) {
    const std::size_t n = a.size();
    std::vector<Poly> inv(n, Poly(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t s = c;
        int64_t iv = 0;
        for (; s < n; ++s) {
            if (gcd64(a[s][c], P) == 1) {
                iv = inv_mod(a[s][c], P);
                break;
            }
        }
        if (s == n) fail(ErrorKind::InternalInvariant, "change of basis not invertible");
        std::swap(a[c], a[s]);
        std::swap(inv[c], inv[s]);
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] = mdP(static_cast<__int128>(a[c][j]) * iv, P);
            inv[c][j] = mdP(static_cast<__int128>(inv[c][j]) * iv, P);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || !a[r][c]) continue;
            int64_t f = a[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] = mdP(a[r][j] - static_cast<__int128>(f) * a[c][j], P);
                inv[r][j] = mdP(inv[r][j] - static_cast<__int128>(f) * inv[c][j], P);
            }
        }
    }
    return inv;
}

}  // namespace

TruncatedOn::TruncatedOn(int p, int n, int N) : p_(p), n_(n), N_(N) {
    if (!is_prime(p) || n < 1) fail(ErrorKind::InvalidArgument, "need a prime p and n >= 1");
    if (N < 1) fail(ErrorKind::PrecisionTooLow, "precision must be positive");
    P_ = ipow(p, N);
    if (P_ > (int64_t(1) << 40)) fail(ErrorKind::TooLarge, "p^N too large");
    f_ = primitive_poly(p, n);

    Poly F(f_.begin(), f_.end());
    Poly x(n, 0);
    if (n == 1) x[0] = mod(-f_[0], p);
    else x[1] = 1;
    // Teichmueller lift: omega = lim x^{q^k}, q = p^n.
    const BigInt q = BigInt(ipow(p, n));
    Poly omega = x;
    for (int it = 0; it < N + 1; ++it) omega = polypowmod(omega, q, F, P_);
    ensure(polypowmod(omega, q, F, P_) == omega, "Teichmueller lift did not stabilise");

    std::vector<Poly> M(n);
    Poly pw(n, 0);
    pw[0] = 1;
    for (int i = 0; i < n; ++i) {
        M[i] = pw;
        pw = polymulmod(pw, omega, F, P_);
    }
    auto Minv = inverse_mod(M, P_);
    g_.assign(n, 0);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) g_[c] = mdP(g_[c] + static_cast<__int128>(pw[r]) * Minv[r][c], P_);

    frob_rows_.resize(n);
    WElem wp = w_omega_pow(p);
    WElem cur = w_scalar(1);
    for (int i = 0; i < n; ++i) {
        frob_rows_[i] = cur;
        cur = w_mul(cur, wp);
    }
}

int64_t TruncatedOn::md(__int128 v) const { return mdP(v, P_); }

TruncatedOn::WElem TruncatedOn::w_mul(const WElem& a, const WElem& b) const {
    std::vector<__int128> t(2 * n_, 0);
    for (int i = 0; i < n_; ++i) {
        if (!a[i]) continue;
        for (int j = 0; j < n_; ++j) t[i + j] += static_cast<__int128>(a[i]) * b[j];
    }
    for (int k = 2 * n_ - 1; k >= n_; --k) {
        int64_t c = md(t[k]);
        if (!c) continue;
        for (int j = 0; j < n_; ++j) t[k - n_ + j] += static_cast<__int128>(c) * g_[j];
    }
    WElem r(n_);
    for (int i = 0; i < n_; ++i) r[i] = md(t[i]);
    return r;
}

TruncatedOn::WElem TruncatedOn::w_add(const WElem& a, const WElem& b) const {
    WElem r(n_);
    for (int i = 0; i < n_; ++i) r[i] = md(static_cast<__int128>(a[i]) + b[i]);
    return r;
}

TruncatedOn::WElem TruncatedOn::w_frob(const WElem& a, int k) const {
    WElem cur = a;
    for (int s = 0; s < mod(k, n_); ++s) {
        std::vector<__int128> t(n_, 0);
        for (int i = 0; i < n_; ++i) {
            if (!cur[i]) continue;
            for (int j = 0; j < n_; ++j) t[j] += static_cast<__int128>(cur[i]) * frob_rows_[i][j];
        }
        for (int j = 0; j < n_; ++j) cur[j] = md(t[j]);
    }
    return cur;
}

TruncatedOn::WElem TruncatedOn::w_scalar(int64_t c) const {
    WElem r(n_, 0);
    r[0] = md(c);
    return r;
}

TruncatedOn::WElem TruncatedOn::w_omega_pow(int64_t e) const {
    e = mod(e, ipow(p_, n_) - 1);
    WElem base(n_, 0), r = w_scalar(1);
    if (n_ == 1) {
        // omega is the Teichmueller lift of the primitive root; g = (omega).
        base[0] = g_[0];
    } else {
        base[1] = 1;
    }
    while (e > 0) {
        if (e & 1) r = w_mul(r, base);
        e >>= 1;
        if (e) base = w_mul(base, base);
    }
    return r;
}

TruncatedOn::Elem TruncatedOn::one() const {
    Elem x = zero();
    x[0] = 1 % P_;
    return x;
}

TruncatedOn::Elem TruncatedOn::S() const {
    if (n_ == 1) return scale(one(), p_);
    Elem x = zero();
    x[n_] = 1;
    return x;
}

TruncatedOn::Elem TruncatedOn::from_w(const WElem& a, int k) const {
    Elem x = zero();
    for (int i = 0; i < n_; ++i) x[k * n_ + i] = a[i];
    return x;
}

TruncatedOn::WElem TruncatedOn::w_part(const Elem& x, int k) const {
    return WElem(x.begin() + k * n_, x.begin() + (k + 1) * n_);
}

TruncatedOn::Elem TruncatedOn::omega_pow(int64_t e) const { return from_w(w_omega_pow(e)); }

TruncatedOn::Elem TruncatedOn::add(const Elem& x, const Elem& y) const {
    Elem r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = md(static_cast<__int128>(x[i]) + y[i]);
    return r;
}

TruncatedOn::Elem TruncatedOn::sub(const Elem& x, const Elem& y) const {
    Elem r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = md(static_cast<__int128>(x[i]) - y[i]);
    return r;
}

TruncatedOn::Elem TruncatedOn::neg(const Elem& x) const { return scale(x, -1); }

TruncatedOn::Elem TruncatedOn::scale(const Elem& x, int64_t c) const {
    Elem r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = md(static_cast<__int128>(x[i]) * c);
    return r;
}

TruncatedOn::Elem TruncatedOn::mul(const Elem& x, const Elem& y) const {
    // (a S^k)(b S^l) = a sigma^k(b) S^{k+l}, with S^n = p.
    Elem r = zero();
    for (int l = 0; l < n_; ++l) {
        WElem b = w_part(y, l);
        bool bz = true;
        for (auto v : b) bz = bz && v == 0;
        if (bz) continue;
        for (int k = 0; k < n_; ++k) {
            WElem a = w_part(x, k);
            bool az = true;
            for (auto v : a) az = az && v == 0;
            if (az) continue;
            WElem prod = w_mul(a, w_frob(b, k));
            int t = k + l;
            int64_t c = 1;
            if (t >= n_) {
                t -= n_;
                c = p_;
            }
            for (int i = 0; i < n_; ++i) r[t * n_ + i] = md(r[t * n_ + i] + static_cast<__int128>(c) * prod[i]);
        }
    }
    return r;
}

TruncatedOn::Elem TruncatedOn::pow(const Elem& x, int64_t e) const {
    Elem r = one(), b = x;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        e >>= 1;
        if (e) b = mul(b, b);
    }
    return r;
}

TruncatedOn::Elem TruncatedOn::reduce(const Elem& x, int m) const {
    int64_t q = ipow(p_, m);
    Elem r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = mod(x[i], q);
    return r;
}

int TruncatedOn::valuation(const Elem& x) const {
    int v = N_;
    for (auto c : x)
        if (c) v = std::min<int>(v, static_cast<int>(padic_val(c, p_)));
    return v;
}

TruncatedOn::Elem TruncatedOn::random(std::mt19937_64& rng) const {
    std::uniform_int_distribution<int64_t> d(0, P_ - 1);
    Elem x = zero();
    for (auto& c : x) c = d(rng);
    return x;
}

int64_t TruncatedOn::omega_residue_order() const {
    // Order of omega in (W/p)^x, computed from residues mod p.
    WElem w = w_omega_pow(1);
    int64_t q1 = ipow(p_, n_) - 1;
    auto is_one_mod_p = [&](const WElem& a) {
        if (mod(a[0], p_) != 1) return false;
        for (int i = 1; i < n_; ++i)
            if (mod(a[i], p_) != 0) return false;
        return true;
    };
    for (int64_t d = 1; d <= q1; ++d) {
        if (q1 % d) continue;
        WElem x = w_scalar(1);
        int64_t e = d;
        WElem b = w;
        while (e > 0) {
            if (e & 1) x = w_mul(x, b);
            e >>= 1;
            if (e) b = w_mul(b, b);
        }
        if (is_one_mod_p(x)) return d;
    }
    return -1;
}

std::string TruncatedOn::show(const Elem& x) const {
    std::ostringstream os;
    os << "[";
    for (int k = 0; k < n_; ++k) {
        os << (k ? " | " : "");
        for (int i = 0; i < n_; ++i) os << (i ? "," : "") << x[k * n_ + i];
    }
    return os.str() + "]";
}

TruncatedOn make_truncated_On(int p, int n, int N) {
    if (N < 2 || (p == 2 && N < 3))
        fail(ErrorKind::PrecisionTooLow, "precision " + std::to_string(N) + " too low for p = " + std::to_string(p));
    return TruncatedOn(p, n, N);
}

namespace {

// Z/p^N [X] / (X^n + p).
struct XRing {
    int p, n;
    int64_t P;
    using E = std::vector<int64_t>;
    E zero() const { return E(n, 0); }
    E one() const {
        E r = zero();
        r[0] = 1;
        return r;
    }
    E X() const {
        E r = zero();
        if (n == 1) r[0] = mod(-p, P);
        else r[1] = 1;
        return r;
    }
    E add(const E& a, const E& b) const {
        E r(n);
        for (int i = 0; i < n; ++i) r[i] = mod(a[i] + b[i], P);
        return r;
    }
    E sub(const E& a, const E& b) const {
        E r(n);
        for (int i = 0; i < n; ++i) r[i] = mod(a[i] - b[i], P);
        return r;
    }
    E scale(const E& a, int64_t c) const {
        E r(n);
        for (int i = 0; i < n; ++i) r[i] = mdP(static_cast<__int128>(a[i]) * c, P);
        return r;
    }
    E mul(const E& a, const E& b) const {
        std::vector<__int128> t(2 * n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) t[i + j] += static_cast<__int128>(a[i]) * b[j];
        for (int k = 2 * n - 1; k >= n; --k) t[k - n] -= t[k] * p;
        E r(n);
        for (int i = 0; i < n; ++i) r[i] = mdP(t[i], P);
        return r;
    }
    E pow(const E& a, int e) const {
        E r = one();
        for (int i = 0; i < e; ++i) r = mul(r, a);
        return r;
    }
    // X-adic valuation; n*N for zero.
    int val(const E& a) const {
        int best = n * 64;
        for (int i = 0; i < n; ++i)
            if (a[i]) best = std::min<int>(best, i + n * static_cast<int>(padic_val(a[i], p)));
        return best;
    }
    bool is_zero(const E& a) const {
        for (auto v : a)
            if (v) return false;
        return true;
    }
    E inverse(const E& a) const {
        if (a[0] % p == 0) fail(ErrorKind::HenselNonconvergent, "derivative is not a unit");
        E v = zero();
        v[0] = inv_mod(a[0], P);
        for (int it = 0; it < 64; ++it) {
            E av = mul(a, v);
            if (av == one()) return v;
            v = mul(v, sub(scale(one(), 2), av));
        }
        fail(ErrorKind::HenselNonconvergent, "inverse iteration did not converge");
    }
};

int64_t binom(int n, int k) {
    int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

ZetaTau hensel_zeta_tau(const TruncatedOn& R) {
    const int p = R.p(), n = R.n();
    if (p == 2 || n != p - 1) fail(ErrorKind::InvalidArgument, "hensel_zeta_tau needs p odd and n = p - 1");
    ZetaTau zt;
    const int64_t q1 = ipow(p, n) - 1;
    const int64_t n2 = static_cast<int64_t>(n) * n;
    if (q1 % n2) fail(ErrorKind::OrderMismatch, "n^2 does not divide p^n - 1");
    zt.tau = R.omega_pow(q1 / n2);
    if (!R.is_one(R.pow(zt.tau, n2))) fail(ErrorKind::OrderMismatch, "tau^(n^2) != 1");
    for (int64_t r : prime_factors(n2))
        if (R.is_one(R.pow(zt.tau, n2 / r))) fail(ErrorKind::OrderMismatch, "tau has order smaller than n^2");

    zt.X = R.mul(R.omega_pow(n / 2), R.S());
    if (R.pow(zt.X, n) != R.scale(R.one(), -p)) fail(ErrorKind::OrderMismatch, "X^n != -p");

    // (1 + X u)^p = 1 with u a unit: divide by p X u using X^n = -p, giving
    // F(u) = 1 - u^n + sum_{k=2}^{p-1} (C(p,k)/p) X^{k-1} u^{k-1} = 0.
    XRing A{p, n, R.modulus()};
    auto F = [&](const XRing::E& u) {
        XRing::E r = A.sub(A.one(), A.pow(u, n));
        XRing::E Xk = A.one(), uk = A.one();
        for (int k = 2; k <= p - 1; ++k) {
            Xk = A.mul(Xk, A.X());
            uk = A.mul(uk, u);
            r = A.add(r, A.scale(A.mul(Xk, uk), binom(p, k) / p));
        }
        return r;
    };
    auto dF = [&](const XRing::E& u) {
        XRing::E r = A.scale(A.pow(u, n - 1), -n);
        XRing::E Xk = A.one(), uk = A.one();  // uk = u^{k-2}
        for (int k = 2; k <= p - 1; ++k) {
            Xk = A.mul(Xk, A.X());
            if (k > 2) uk = A.mul(uk, u);
            r = A.add(r, A.scale(A.mul(Xk, uk), (binom(p, k) / p) * (k - 1)));
        }
        return r;
    };
    XRing::E u = A.one();
    bool done = false;
    for (int it = 0; it < 64; ++it) {
        XRing::E Fu = F(u);
        zt.residual_valuations.push_back(A.val(Fu));
        if (A.is_zero(Fu)) {
            done = true;
            break;
        }
        u = A.sub(u, A.mul(Fu, A.inverse(dF(u))));
        ++zt.iterations;
    }
    if (!done) fail(ErrorKind::HenselNonconvergent, "Newton iteration did not reach an exact root");
    zt.u = u;

    XRing::E zx = A.add(A.one(), A.mul(A.X(), u));
    TruncatedOn::Elem zeta = R.zero(), Xk = R.one();
    for (int k = 0; k < n; ++k) {
        zeta = R.add(zeta, R.scale(Xk, zx[k]));
        Xk = R.mul(Xk, zt.X);
    }
    zt.zeta = zeta;
    if (R.is_one(zeta) || !R.is_one(R.pow(zeta, p))) fail(ErrorKind::OrderMismatch, "zeta is not a primitive p-th root of unity");

    TruncatedOn::Elem tau_inv = R.pow(zt.tau, n2 - 1);
    TruncatedOn::Elem conj = R.mul(R.mul(zt.tau, zeta), tau_inv);
    TruncatedOn::Elem zp = zeta;
    for (int64_t e = 1; e < p; ++e) {
        if (zp == conj) {
            zt.e = e;
            break;
        }
        zp = R.mul(zp, zeta);
    }
    if (zt.e == 0) fail(ErrorKind::OrderMismatch, "tau zeta tau^-1 is not a power of zeta");
    return zt;
}

FiniteGroup zeta_tau_group(const TruncatedOn& R, const ZetaTau& zt) {
    using E = TruncatedOn::Elem;
    std::function<E(const E&, const E&)> mul = [&](const E& a, const E& b) { return R.mul(a, b); };
    std::function<E(const E&)> key = [](const E& a) { return a; };
    std::vector<E> elems;
    std::function<std::string(const E&)> show = [&](const E& a) { return R.show(a); };
    FiniteGroup G = group_closure<E, E>(R.one(), {{"zeta", zt.zeta}, {"tau", zt.tau}}, mul, key, show, &elems,
                                        "<zeta,tau>");
    return G;
}

LowerPSeriesData lower_p_series_data(const TruncatedOn& R0, int i, int j) {
    const int p = R0.p(), n = R0.n();
    if (i < 1 || j < i || j > 2 * i) fail(ErrorKind::OutOfAbelianRange, "need 1 <= i <= j <= 2i");
    LowerPSeriesData out;
    if (i == j) return out;
    const int64_t side = ipow(p, j - i);
    BigInt count = boost::multiprecision::pow(BigInt(side), n * n);
    if (count > 1000000) fail(ErrorKind::TooLarge, "quotient has " + count.str() + " elements");
    const int64_t cnt = static_cast<int64_t>(count);
    out.order = cnt;

    TruncatedOn R(p, n, std::max(j, p == 2 ? 3 : 2));
    const int64_t pi = ipow(p, i);
    auto element = [&](int64_t code) {
        TruncatedOn::Elem x = R.one();
        for (int c = 0; c < n * n; ++c) {
            x[c] = mod(x[c] + (code % side) * pi, R.modulus());
            code /= side;
        }
        return R.reduce(x, j);
    };
    auto rmul = [&](const TruncatedOn::Elem& a, const TruncatedOn::Elem& b) { return R.reduce(R.mul(a, b), j); };
    TruncatedOn::Elem one = R.reduce(R.one(), j);

    // x -> 1 + x on additive representatives: check (1+x)(1+y) = 1 + x + y mod p^j.
    auto check_pair = [&](int64_t a, int64_t b) {
        auto x = element(a), y = element(b);
        auto lhs = rmul(x, y);
        auto rhs = R.reduce(R.sub(R.add(x, y), R.one()), j);
        return lhs == rhs;
    };
    bool iso = true;
    if (cnt * cnt <= 200000) {
        for (int64_t a = 0; a < cnt && iso; ++a)
            for (int64_t b = 0; b < cnt && iso; ++b) {
                iso = check_pair(a, b);
                ++out.pairs_checked;
            }
    } else {
        std::vector<int64_t> basis;
        for (int c = 0, code = 1; c < n * n; ++c, code *= static_cast<int>(side)) basis.push_back(code);
        for (auto a : basis)
            for (auto b : basis) {
                iso = iso && check_pair(a, b);
                ++out.pairs_checked;
            }
        std::mt19937_64 rng(0x10e5);
        std::uniform_int_distribution<int64_t> d(0, cnt - 1);
        for (int s = 0; s < 20000 && iso; ++s) {
            iso = check_pair(d(rng), d(rng));
            ++out.pairs_checked;
        }
    }
    out.additive_iso = iso;

    // Invariant factors from the sizes of the p^k-torsion subgroups.
    std::vector<int64_t> logsize{0};
    int64_t total_log = static_cast<int64_t>(n) * n * (j - i);
    for (int k = 1; logsize.back() < total_log; ++k) {
        int64_t hits = 0;
        int64_t pk = ipow(p, k);
        for (int64_t a = 0; a < cnt; ++a) {
            auto x = element(a);
            TruncatedOn::Elem y = one, b = x;
            int64_t e = pk;
            while (e > 0) {
                if (e & 1) y = rmul(y, b);
                e >>= 1;
                if (e) b = rmul(b, b);
            }
            if (y == one) ++hits;
        }
        int64_t lg = 0;
        while (hits > 1) {
            ensure(hits % p == 0, "torsion subgroup size is not a power of p");
            hits /= p;
            ++lg;
        }
        logsize.push_back(lg);
        ensure(k <= j + 1, "torsion growth did not terminate");
    }
    const int K = static_cast<int>(logsize.size()) - 1;
    for (int k = K; k >= 1; --k) {
        int64_t ge_k = logsize[k] - logsize[k - 1];
        int64_t ge_k1 = k + 1 <= K ? logsize[k + 1] - logsize[k] : 0;
        for (int64_t c = 0; c < ge_k - ge_k1; ++c) out.invariants.push_back(ipow(p, k));
    }
    return out;
}

TruncatedOn::Elem exp_series(const TruncatedOn& R, const TruncatedOn::Elem& y, int i) {
    const int p = R.p(), N = R.precision();
    TruncatedOn::Elem sum = R.one(), ypow = R.one();
    int64_t unit = 1;  // k! with p-part removed, mod p^N
    const int kmax = 64 * N + 64;
    for (int k = 1;; ++k) {
        if (k > kmax) fail(ErrorKind::SeriesDivergence, "exponential series does not converge at this precision");
        int64_t kk = k;
        while (kk % p == 0) kk /= p;
        unit = mod(unit * kk, R.modulus());
        ypow = R.mul(ypow, y);
        int64_t e = static_cast<int64_t>(i) * k - factorial_val(k, p);
        if (e < N) {
            int64_t c = mod(ipow(p, static_cast<int>(e)) * inv_mod(unit, R.modulus()), R.modulus());
            sum = R.add(sum, R.scale(ypow, c));
        }
        // Tail bound: v_p(m!) <= (m-1)/(p-1), so every later term has valuation at least
        // i*m - (m-1)/(p-1), which is increasing in m exactly when i(p-1) > 1.
        int64_t m = k + 1;
        bool increasing = static_cast<int64_t>(i) * (p - 1) > 1;
        if (increasing && (static_cast<int64_t>(i) * m * (p - 1) - (m - 1)) >= static_cast<int64_t>(N) * (p - 1)) break;
    }
    return sum;
}

ExpCheck exp_identity_check(const TruncatedOn& R, int i, int samples, uint64_t seed) {
    if (2 * i > R.precision()) fail(ErrorKind::PrecisionTooLow, "need 2i <= N");
    ExpCheck out;
    std::mt19937_64 rng(seed);
    const int64_t pi = ipow(R.p(), i);
    for (int s = 0; s < samples; ++s) {
        TruncatedOn::Elem y = R.random(rng);
        TruncatedOn::Elem x = R.scale(y, pi);
        TruncatedOn::Elem ex = exp_series(R, y, i);
        TruncatedOn::Elem diff = R.reduce(R.sub(R.sub(ex, R.one()), x), 2 * i);
        ++out.samples;
        bool ok = true;
        for (auto c : diff) ok = ok && c == 0;
        if (ok) ++out.passed;
        else if (!out.counterexample) out.counterexample = x;
    }
    return out;
}

}  // namespace swdual
