#pragma once
// Dense exact linear algebra over the scalar field.  Reduced row echelon
// form is the workhorse: kernels, ranks, solves and inverses all go
// through it, and its canonical output fixes every basis in the engine.

#include <optional>
#include <vector>

#include "qda/scalar.hpp"

namespace qda {

class Matrix {
  public:
    Matrix(size_t rows, size_t cols, const BackendSpec& backend);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const BackendSpec& backend() const { return backend_; }

    Scalar& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const Scalar& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    bool operator==(const Matrix& o) const;
    bool is_symmetric() const;
    static Matrix identity(size_t n, const BackendSpec& backend);

    // In-place reduction to reduced row echelon form; returns the pivot
    // column indices.  The result is the canonical RREF (independent of
    // pivot-row choices), so downstream bases are deterministic.
    std::vector<size_t> rref();

    size_t rank() const;
    // Canonical kernel basis: one vector per free column, entry 1 there.
    std::vector<std::vector<Scalar>> kernel_basis() const;
    std::optional<Matrix> inverse() const;

    // Particular solution of A x = b with free variables set to zero;
    // nullopt when inconsistent.
    static std::optional<std::vector<Scalar>> solve(const Matrix& a, const std::vector<Scalar>& b);

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

  private:
    size_t rows_, cols_;
    BackendSpec backend_;
    std::vector<Scalar> data_;
};

// Row-echelonizes the given row vectors (over any fixed basis) into the
// canonical reduced form: pivots normalized to 1, pivot columns ascending,
// zero rows dropped.  This is how constant/ideal bases are normalized.
std::vector<std::vector<Scalar>> echelonize_rows(std::vector<std::vector<Scalar>> rows,
                                                 const BackendSpec& backend);

// Span comparison of two row sets over the same basis.
bool same_row_span(const std::vector<std::vector<Scalar>>& a,
                   const std::vector<std::vector<Scalar>>& b, size_t width,
                   const BackendSpec& backend);

// True if v lies in the row span of rows.
bool in_row_span(const std::vector<std::vector<Scalar>>& rows, const std::vector<Scalar>& v,
                 const BackendSpec& backend);

}  // namespace qda
