// Dense linear algebra over a finite field: row reduction, rank, kernels.

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cutcode/gf.hpp"

namespace cutcode {

using gf::Elem;
using Vec = std::vector<Elem>;

class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static Matrix from_rows(const std::vector<Vec>& rows) {
        if (rows.empty()) return {};
        Matrix m(rows.size(), rows.front().size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != m.cols_) throw std::invalid_argument("matrix: ragged rows");
            for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
        }
        return m;
    }

    static Matrix from_columns(const std::vector<Vec>& cols) {
        if (cols.empty()) return {};
        Matrix m(cols.front().size(), cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (cols[c].size() != m.rows_) throw std::invalid_argument("matrix: ragged columns");
            for (std::size_t r = 0; r < m.rows_; ++r) m(r, c) = cols[c][r];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vec row(std::size_t r) const { return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }
    Vec column(std::size_t c) const {
        Vec v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
        return v;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

   private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Elem> data_;
};

struct Echelon {
    Matrix reduced;                   // reduced row echelon form, zero rows last
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
    std::size_t rank() const { return pivots.size(); }
};

inline Echelon rref(const gf::Field& f, Matrix m) {
    Echelon out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
        const Elem s = f.inv(m(r, c));
        for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), s);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Elem t = m(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(t, m(r, j)));
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.reduced = std::move(m);
    return out;
}

inline std::size_t rank(const gf::Field& f, const Matrix& m) { return rref(f, m).rank(); }

/// Basis of {x : M x = 0}.
inline std::vector<Vec> kernel(const gf::Field& f, const Matrix& m) {
    const Echelon e = rref(f, m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec x(m.cols(), 0);
        x[free] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = f.neg(e.reduced(i, free));
        basis.push_back(std::move(x));
    }
    return basis;
}

inline Elem dot(const gf::Field& f, const Vec& a, const Vec& b) {
    Elem s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
    return s;
}

inline Matrix multiply(const gf::Field& f, const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix: shape mismatch in multiply");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Elem x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = f.add(c(i, j), f.mul(x, b(k, j)));
        }
    return c;
}

inline Vec multiply(const gf::Field& f, const Matrix& a, const Vec& v) {
    Vec out(a.rows(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out[i] = f.add(out[i], f.mul(a(i, j), v[j]));
    return out;
}

inline std::optional<Matrix> inverse(const gf::Field& f, const Matrix& a) {
    const std::size_t n = a.rows();
    if (n != a.cols()) throw std::invalid_argument("matrix: inverse of non-square matrix");
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = 1;
    }
    const Echelon e = rref(f, aug);
    if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

/// Incrementally maintained echelon basis; `insert` reports whether the
/// vector enlarged the span.
class SpanBuilder {
   public:
    SpanBuilder(const gf::Field& f, std::size_t dim) : f_(&f), dim_(dim) {}

    bool insert(Vec v) {
        reduce(v);
        std::size_t lead = 0;
        while (lead < dim_ && v[lead] == 0) ++lead;
        if (lead == dim_) return false;
        const Elem s = f_->inv(v[lead]);
        for (auto& x : v) x = f_->mul(x, s);
        rows_.push_back(std::move(v));
        leads_.push_back(lead);
        return true;
    }

    bool contains(Vec v) const {
        reduce(v);
        for (auto x : v)
            if (x != 0) return false;
        return true;
    }

    std::size_t rank() const { return rows_.size(); }
    const std::vector<Vec>& basis() const { return rows_; }

   private:
    void reduce(Vec& v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Elem t = v[leads_[i]];
            if (t == 0) continue;
            for (std::size_t j = 0; j < dim_; ++j) v[j] = f_->sub(v[j], f_->mul(t, rows_[i][j]));
        }
    }

    const gf::Field* f_;
    std::size_t dim_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> leads_;
};

}  // namespace cutcode
