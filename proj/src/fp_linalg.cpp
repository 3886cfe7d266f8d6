#include "swdual/fp_linalg.hpp"

#include "swdual/arith.hpp"
#include "swdual/error.hpp"

namespace swdual {

namespace {

template <int P>
void axpy_fixed(uint8_t* __restrict d, const uint8_t* __restrict s, std::size_t n, uint8_t c) {
    if constexpr (P == 2) {
        for (std::size_t i = 0; i < n; ++i) d[i] ^= s[i];
    } else {
        for (std::size_t i = 0; i < n; ++i) d[i] = static_cast<uint8_t>((d[i] + c * s[i]) % P);
    }
}

void axpy_generic(uint8_t* d, const uint8_t* s, std::size_t n, uint8_t c, int p) {
    for (std::size_t i = 0; i < n; ++i) d[i] = static_cast<uint8_t>((d[i] + static_cast<unsigned>(c) * s[i]) % p);
}

}  // namespace

FpRowSpace::FpRowSpace(int p, std::size_t ncols, std::size_t tag_width)
    : p_(p), ncols_(ncols), tagw_(tag_width), piv_of_col_(ncols, -1), inv_(p, 0) {
    if (p < 2 || p >= 128 || !is_prime(p)) fail(ErrorKind::InvalidArgument, "FpRowSpace needs a prime below 128");
    for (int a = 1; a < p; ++a) inv_[a] = static_cast<uint8_t>(inv_mod(a, p));
}

void FpRowSpace::axpy(FpVec& dst, const FpVec& src, uint8_t c) const {
    if (c == 0) return;
    const std::size_t n = dst.size();
    switch (p_) {
        case 2: axpy_fixed<2>(dst.data(), src.data(), n, c); break;
        case 3: axpy_fixed<3>(dst.data(), src.data(), n, c); break;
        case 5: axpy_fixed<5>(dst.data(), src.data(), n, c); break;
        case 7: axpy_fixed<7>(dst.data(), src.data(), n, c); break;
        default: axpy_generic(dst.data(), src.data(), n, c, p_);
    }
}

bool FpRowSpace::reduce(FpVec& v, FpVec* tag) const {
    if (v.size() != ncols_) fail(ErrorKind::DimensionMismatch, "row length");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        uint8_t a = v[piv_[r]];
        if (!a) continue;
        uint8_t c = static_cast<uint8_t>(p_ - a);
        axpy(v, rows_[r], c);
        if (tag && tagw_) axpy(*tag, tags_[r], c);
    }
    for (uint8_t x : v)
        if (x) return false;
    return true;
}

bool FpRowSpace::insert(FpVec v, FpVec tag) {
    if (tagw_ && tag.empty()) tag.assign(tagw_, 0);
    if (reduce(v, &tag)) return false;
    std::size_t c = 0;
    while (!v[c]) ++c;
    uint8_t s = inv_[v[c]];
    if (s != 1) {
        for (auto& x : v) x = static_cast<uint8_t>((x * s) % p_);
        for (auto& x : tag) x = static_cast<uint8_t>((x * s) % p_);
    }
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        uint8_t a = rows_[r][c];
        if (!a) continue;
        uint8_t m = static_cast<uint8_t>(p_ - a);
        axpy(rows_[r], v, m);
        if (tagw_) axpy(tags_[r], tag, m);
    }
    piv_of_col_[c] = static_cast<int32_t>(rows_.size());
    piv_.push_back(c);
    rows_.push_back(std::move(v));
    tags_.push_back(std::move(tag));
    return true;
}

std::vector<FpVec> FpRowSpace::nullspace() const {
    std::vector<FpVec> out;
    for (std::size_t f = 0; f < ncols_; ++f) {
        if (piv_of_col_[f] >= 0) continue;
        FpVec x(ncols_, 0);
        x[f] = 1;
        for (std::size_t r = 0; r < rows_.size(); ++r)
            if (rows_[r][f]) x[piv_[r]] = static_cast<uint8_t>((p_ - rows_[r][f]) % p_);
        out.push_back(std::move(x));
    }
    return out;
}

std::size_t mod_rank(ModMat a, int64_t q) {
    std::size_t r = 0;
    const std::size_t ncols = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < ncols && r < a.size(); ++c) {
        std::size_t s = r;
        while (s < a.size() && mod(a[s][c], q) == 0) ++s;
        if (s == a.size()) continue;
        std::swap(a[r], a[s]);
        int64_t iv = inv_mod(a[r][c], q);
        for (std::size_t i = r + 1; i < a.size(); ++i) {
            int64_t f = mod(a[i][c] * iv, q);
            if (!f) continue;
            for (std::size_t j = c; j < ncols; ++j) a[i][j] = mod(a[i][j] - f * a[r][j], q);
        }
        ++r;
    }
    return r;
}

std::vector<std::vector<int64_t>> mod_nullspace(ModMat a, std::size_t ncols, int64_t q) {
    std::vector<std::size_t> pivcol;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < a.size(); ++c) {
        std::size_t s = r;
        while (s < a.size() && mod(a[s][c], q) == 0) ++s;
        if (s == a.size()) continue;
        std::swap(a[r], a[s]);
        int64_t iv = inv_mod(a[r][c], q);
        for (auto& x : a[r]) x = mod(x * iv, q);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r) continue;
            int64_t f = mod(a[i][c], q);
            if (!f) continue;
            for (std::size_t j = 0; j < ncols; ++j) a[i][j] = mod(a[i][j] - f * a[r][j], q);
        }
        pivcol.push_back(c);
        ++r;
    }
    std::vector<char> is_piv(ncols, 0);
    for (auto c : pivcol) is_piv[c] = 1;
    std::vector<std::vector<int64_t>> out;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_piv[f]) continue;
        std::vector<int64_t> x(ncols, 0);
        x[f] = 1;
        for (std::size_t i = 0; i < pivcol.size(); ++i) x[pivcol[i]] = mod(-a[i][f], q);
        out.push_back(std::move(x));
    }
    return out;
}

}  // namespace swdual
