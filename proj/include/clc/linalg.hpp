#ifndef CLC_LINALG_HPP
#define CLC_LINALG_HPP

#include <cstdint>
#include <vector>

#include "clc/field.hpp"

namespace clc {

/// Dense row-major matrix over a field, entries as canonical element indices.
class Mat {
   public:
    Mat(const FieldCtx* ctx, size_t rows, size_t cols)
        : ctx_(ctx), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    const FieldCtx* ctx() const noexcept { return ctx_; }
    size_t rows() const noexcept { return rows_; }
    size_t cols() const noexcept { return cols_; }
    uint32_t& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    uint32_t at(size_t r, size_t c) const { return a_[r * cols_ + c]; }
    uint32_t* row(size_t r) { return a_.data() + r * cols_; }
    const uint32_t* row(size_t r) const { return a_.data() + r * cols_; }
    const std::vector<uint32_t>& data() const noexcept { return a_; }
    std::vector<uint32_t>& data() noexcept { return a_; }

    void append_row(const std::vector<uint32_t>& r);

   private:
    const FieldCtx* ctx_;
    size_t rows_, cols_;
    std::vector<uint32_t> a_;
};

/// Reduced row echelon form in place. Pivoting is deterministic: for each
/// column left to right, the first remaining row with a nonzero entry.
/// Returns the pivot column of each echelon row; rank = pivots.size().
std::vector<size_t> rref(Mat& m);

size_t rank(Mat m);

/// Indices of a maximal independent subset of rows, scanning in row order.
std::vector<size_t> independent_rows(const Mat& m);

/// Row-space membership helper built from a matrix once, queried many times.
class RowSpace {
   public:
    explicit RowSpace(Mat m);
    size_t dim() const noexcept { return pivots_.size(); }
    bool contains(const std::vector<uint32_t>& word) const;
    const Mat& basis() const noexcept { return m_; }

   private:
    Mat m_;  // RREF, zero rows dropped
    std::vector<size_t> pivots_;
};

/// Basis of the right kernel {x : m x = 0}, canonicalized from the RREF
/// (one vector per free column, deterministic order).
std::vector<std::vector<uint32_t>> kernel_basis(Mat m);

}  // namespace clc

#endif
