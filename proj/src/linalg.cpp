#include "qda/linalg.hpp"

#include <algorithm>

namespace qda {

Matrix::Matrix(size_t rows, size_t cols, const BackendSpec& backend)
    : rows_(rows), cols_(cols), backend_(backend),
      data_(rows * cols, Scalar::zero(backend)) {}

Matrix Matrix::identity(size_t n, const BackendSpec& backend) {
    Matrix m(n, n, backend);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(backend);
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_, backend_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix shape mismatch");
    Matrix r(rows_, o.cols_, backend_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += at(i, k) * o.at(k, j);
            }
        }
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < data_.size(); ++i)
        if (data_[i] != o.data_[i]) return false;
    return true;
}

bool Matrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

std::vector<size_t> Matrix::rref() {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < cols_ && row < rows_; ++col) {
        // Pivot on the structurally sparsest candidate row: fewer terms
        // keeps expression swell down in the symbolic backend.
        size_t best = rows_;
        size_t best_weight = SIZE_MAX;
        for (size_t i = row; i < rows_; ++i) {
            if (at(i, col).is_zero()) continue;
            size_t weight = 0;
            for (size_t j = col; j < cols_; ++j)
                if (!at(i, j).is_zero()) ++weight;
            if (weight < best_weight) {
                best_weight = weight;
                best = i;
            }
        }
        if (best == rows_) continue;
        if (best != row)
            for (size_t j = 0; j < cols_; ++j) std::swap(at(row, j), at(best, j));
        Scalar inv = at(row, col).inverse();
        for (size_t j = col; j < cols_; ++j)
            if (!at(row, j).is_zero()) at(row, j) = at(row, j) * inv;
        for (size_t i = 0; i < rows_; ++i) {
            if (i == row || at(i, col).is_zero()) continue;
            Scalar f = at(i, col);
            for (size_t j = col; j < cols_; ++j) {
                if (at(row, j).is_zero()) continue;
                at(i, j) -= f * at(row, j);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

size_t Matrix::rank() const {
    Matrix m(*this);
    return m.rref().size();
}

std::vector<std::vector<Scalar>> Matrix::kernel_basis() const {
    Matrix m(*this);
    auto pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> basis;
    for (size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(cols_, Scalar::zero(backend_));
        v[free] = Scalar::one(backend_);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) throw Error("inverse of non-square matrix");
    Matrix aug(rows_, 2 * cols_, backend_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = Scalar::one(backend_);
    }
    auto pivots = aug.rref();
    if (pivots.size() != rows_) return std::nullopt;
    Matrix inv(rows_, cols_, backend_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
}

std::optional<std::vector<Scalar>> Matrix::solve(const Matrix& a, const std::vector<Scalar>& b) {
    if (b.size() != a.rows()) throw Error("solve: rhs size mismatch");
    Matrix aug(a.rows(), a.cols() + 1, a.backend());
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;  // inconsistent
    std::vector<Scalar> x(a.cols(), Scalar::zero(a.backend()));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, a.cols());
    return x;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw Error("apply: vector size mismatch");
    std::vector<Scalar> r(rows_, Scalar::zero(backend_));
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

std::vector<std::vector<Scalar>> echelonize_rows(std::vector<std::vector<Scalar>> rows,
                                                 const BackendSpec& backend) {
    if (rows.empty()) return rows;
    const size_t width = rows[0].size();
    Matrix m(rows.size(), width, backend);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != width) throw Error("echelonize: ragged rows");
        for (size_t j = 0; j < width; ++j) m.at(i, j) = rows[i][j];
    }
    auto pivots = m.rref();
    std::vector<std::vector<Scalar>> out;
    for (size_t r = 0; r < pivots.size(); ++r) {
        std::vector<Scalar> row(width, Scalar::zero(backend));
        for (size_t j = 0; j < width; ++j) row[j] = m.at(r, j);
        out.push_back(std::move(row));
    }
    return out;
}

bool same_row_span(const std::vector<std::vector<Scalar>>& a,
                   const std::vector<std::vector<Scalar>>& b, size_t width,
                   const BackendSpec& backend) {
    auto ea = echelonize_rows(a, backend);
    auto eb = echelonize_rows(b, backend);
    if (ea.size() != eb.size()) return false;
    (void)width;
    return ea == eb;
}

bool in_row_span(const std::vector<std::vector<Scalar>>& rows, const std::vector<Scalar>& v,
                 const BackendSpec& backend) {
    auto base = echelonize_rows(rows, backend);
    auto ext = base;
    ext.push_back(v);
    return echelonize_rows(ext, backend).size() == base.size();
}

}  // namespace qda
