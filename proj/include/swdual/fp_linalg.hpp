#pragma once

#include <cstdint>
#include <vector>

namespace swdual {

using FpVec = std::vector<uint8_t>;

// Row space over F_p (p < 128) kept in reduced row echelon form. Each row may
// carry a tag vector that is transformed alongside it, which lets callers read
// off how a reduced vector decomposes over a chosen set of inserted rows.
class FpRowSpace {
public:
    FpRowSpace(int p, std::size_t ncols, std::size_t tag_width = 0);

    int p() const { return p_; }
    std::size_t ncols() const { return ncols_; }
    std::size_t rank() const { return rows_.size(); }

    // Reduces v (and its tag) against the current rows in place. Returns true if v became zero.
    bool reduce(FpVec& v, FpVec* tag = nullptr) const;
    // Inserts v if independent. Returns true if the rank grew.
    bool insert(FpVec v, FpVec tag = {});
    bool contains(FpVec v) const { return reduce(v); }

    const std::vector<FpVec>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return piv_; }
    const std::vector<FpVec>& tags() const { return tags_; }

    // Basis of {x : r . x = 0 for every row r}.
    std::vector<FpVec> nullspace() const;

private:
    void axpy(FpVec& dst, const FpVec& src, uint8_t c) const;
    int p_;
    std::size_t ncols_, tagw_;
    std::vector<FpVec> rows_, tags_;
    std::vector<std::size_t> piv_;
    std::vector<int32_t> piv_of_col_;
    std::vector<uint8_t> inv_;
};

// Small dense linear algebra modulo a prime q that fits in 31 bits.
using ModMat = std::vector<std::vector<int64_t>>;
std::size_t mod_rank(ModMat a, int64_t q);
// Basis of the right null space {x : a x = 0}.
std::vector<std::vector<int64_t>> mod_nullspace(ModMat a, std::size_t ncols, int64_t q);

}  // namespace swdual
