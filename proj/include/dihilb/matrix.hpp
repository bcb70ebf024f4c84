#pragma once

#include <vector>

#include "dihilb/gauss.hpp"

namespace dihilb {

/// Dense matrix over Gaussian rationals.
class GaussMatrix {
  public:
    GaussMatrix() : rows_(0), cols_(0) {}
    GaussMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static GaussMatrix identity(int n) {
        GaussMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = GaussRat(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    GaussRat& at(int r, int c) { return data_[r * cols_ + c]; }
    const GaussRat& at(int r, int c) const { return data_[r * cols_ + c]; }

    GaussMatrix operator*(const GaussMatrix& o) const {
        if (cols_ != o.rows_) throw std::domain_error("GaussMatrix: shape mismatch");
        GaussMatrix out(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                if (at(i, k).is_zero()) continue;
                for (int j = 0; j < o.cols_; ++j) out.at(i, j) += at(i, k) * o.at(k, j);
            }
        return out;
    }
    GaussMatrix operator+(const GaussMatrix& o) const {
        GaussMatrix out(rows_, cols_);
        for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
        return out;
    }
    GaussMatrix operator-(const GaussMatrix& o) const {
        GaussMatrix out(rows_, cols_);
        for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
        return out;
    }
    GaussMatrix operator*(const GaussRat& c) const {
        GaussMatrix out(rows_, cols_);
        for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * c;
        return out;
    }

    bool is_zero() const {
        for (auto& v : data_) if (!v.is_zero()) return false;
        return true;
    }

    bool operator==(const GaussMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

  private:
    int rows_, cols_;
    std::vector<GaussRat> data_;
};

struct RowReduceResult {
    int rank = 0;
    std::vector<int> pivot_columns;
    GaussMatrix reduced;
};

/// Reduced row echelon form over the Gaussian rationals.
inline RowReduceResult row_reduce(const GaussMatrix& m) {
    RowReduceResult res;
    res.reduced = m;
    GaussMatrix& a = res.reduced;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < a.rows(); ++i)
            if (!a.at(i, c).is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(r, j));
        GaussRat inv = a.at(r, c).inv();
        for (int j = c; j < a.cols(); ++j) a.at(r, j) = a.at(r, j) * inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r || a.at(i, c).is_zero()) continue;
            GaussRat f = a.at(i, c);
            for (int j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
        }
        res.pivot_columns.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

/// Expresses target as a combination of the given independent rows; throws
/// if target lies outside their span.
inline std::vector<GaussRat> solve_in_rowspan(const std::vector<std::vector<GaussRat>>& rows,
                                              const std::vector<GaussRat>& target) {
    int r = (int)rows.size(), len = (int)target.size();
    GaussMatrix aug(len, r + 1);
    for (int i = 0; i < len; ++i) {
        for (int j = 0; j < r; ++j) aug.at(i, j) = rows[j][i];
        aug.at(i, r) = target[i];
    }
    auto rr = row_reduce(aug);
    for (int p : rr.pivot_columns)
        if (p == r) throw std::domain_error("solve_in_rowspan: target outside the span");
    std::vector<GaussRat> out(r);
    for (int i = 0; i < (int)rr.pivot_columns.size(); ++i)
        out[rr.pivot_columns[i]] = rr.reduced.at(i, r);
    return out;
}

/// Solves x * A = b for a row vector x, where A is square and invertible.
/// (Vectors act on the right throughout the quiver code.)
inline std::vector<GaussRat> solve_row(const GaussMatrix& a, const std::vector<GaussRat>& b) {
    int n = a.rows();
    if (a.cols() != n || (int)b.size() != n) throw std::domain_error("solve_row: shape");
    // transpose-augment: solve A^T x^T = b^T by elimination
    GaussMatrix aug(n, n + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(j, i);
        aug.at(i, n) = b[i];
    }
    auto rr = row_reduce(aug);
    if (rr.rank != n) throw std::domain_error("solve_row: singular system");
    std::vector<GaussRat> x(n);
    for (int i = 0; i < n; ++i) x[i] = rr.reduced.at(i, n);
    return x;
}

}  // namespace dihilb
