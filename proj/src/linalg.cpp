#include "clc/linalg.hpp"

#include <algorithm>

namespace clc {

void Mat::append_row(const std::vector<uint32_t>& r) {
    a_.insert(a_.end(), r.begin(), r.end());
    a_.resize((rows_ + 1) * cols_, 0);
    ++rows_;
}

std::vector<size_t> rref(Mat& m) {
    const FieldCtx* F = m.ctx();
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t pr = r;
        while (pr < m.rows() && m.at(pr, c) == 0) ++pr;
        if (pr == m.rows()) continue;
        if (pr != r)
            for (size_t j = c; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(pr, j));
        uint32_t s = F->inv(m.at(r, c));
        for (size_t j = c; j < m.cols(); ++j) m.at(r, j) = F->mul(m.at(r, j), s);
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            uint32_t f = m.at(i, c);
            if (f == 0) continue;
            for (size_t j = c; j < m.cols(); ++j)
                m.at(i, j) = F->sub(m.at(i, j), F->mul(f, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

size_t rank(Mat m) { return rref(m).size(); }

std::vector<size_t> independent_rows(const Mat& m) {
    const FieldCtx* F = m.ctx();
    // incremental elimination basis: basis rows kept in echelon form,
    // pivot column -> basis row index
    Mat basis(F, 0, m.cols());
    std::vector<size_t> pivot_of_row;
    std::vector<size_t> kept;
    std::vector<uint32_t> tmp(m.cols());
    for (size_t i = 0; i < m.rows(); ++i) {
        std::copy(m.row(i), m.row(i) + m.cols(), tmp.begin());
        for (size_t bi = 0; bi < basis.rows(); ++bi) {
            uint32_t f = tmp[pivot_of_row[bi]];
            if (f == 0) continue;
            for (size_t j = 0; j < m.cols(); ++j)
                tmp[j] = F->sub(tmp[j], F->mul(f, basis.at(bi, j)));
        }
        size_t pc = 0;
        while (pc < m.cols() && tmp[pc] == 0) ++pc;
        if (pc == m.cols()) continue;  // dependent
        uint32_t s = F->inv(tmp[pc]);
        for (size_t j = 0; j < m.cols(); ++j) tmp[j] = F->mul(tmp[j], s);
        basis.append_row(tmp);
        pivot_of_row.push_back(pc);
        kept.push_back(i);
    }
    return kept;
}

RowSpace::RowSpace(Mat m) : m_(m.ctx(), 0, m.cols()) {
    pivots_ = rref(m);
    for (size_t i = 0; i < pivots_.size(); ++i) {
        std::vector<uint32_t> r(m.row(i), m.row(i) + m.cols());
        m_.append_row(r);
    }
}

bool RowSpace::contains(const std::vector<uint32_t>& word) const {
    const FieldCtx* F = m_.ctx();
    std::vector<uint32_t> w = word;
    for (size_t i = 0; i < pivots_.size(); ++i) {
        uint32_t f = w[pivots_[i]];
        if (f == 0) continue;
        for (size_t j = 0; j < m_.cols(); ++j) w[j] = F->sub(w[j], F->mul(f, m_.at(i, j)));
    }
    return std::all_of(w.begin(), w.end(), [](uint32_t v) { return v == 0; });
}

std::vector<std::vector<uint32_t>> kernel_basis(Mat m) {
    const FieldCtx* F = m.ctx();
    size_t n = m.cols();
    std::vector<size_t> pivots = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<uint32_t>> basis;
    for (size_t fc = 0; fc < n; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<uint32_t> v(n, 0);
        v[fc] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = F->neg(m.at(i, fc));
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace clc
