#pragma once

#include "supvar/scalar.hpp"

#include <optional>
#include <vector>

namespace supvar {

using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& f, std::size_t n);
Vector unit_vector(const Field& f, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector scale(const Scalar& c, const Vector& v);
// a += c * b
void axpy(Vector& a, const Scalar& c, const Vector& b);

class Matrix {
public:
    Matrix() = default;
    Matrix(const Field& f, std::size_t rows, std::size_t cols);
    static Matrix identity(const Field& f, std::size_t n);
    static Matrix from_rows(const Field& f, const std::vector<std::vector<std::int64_t>>& rows);
    static Matrix from_columns(const Field& f, std::size_t rows, const std::vector<Vector>& cols);

    const Field& field() const { return f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector column(std::size_t j) const;

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& c) const;
    Vector apply(const Vector& v) const;
    Matrix transpose() const;
    Matrix pow(std::uint64_t e) const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
    bool is_zero() const;

    bool operator==(const Matrix& o) const;

private:
    Field f_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

struct Echelon {
    Matrix reduced;                   // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;  // pivot column per row
};

Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);
// canonical null-space basis: one vector per free column, read off the RREF
std::vector<Vector> kernel_basis(const Matrix& m);
// solution with all free variables zero, or nullopt
std::optional<Vector> solve(const Matrix& m, const Vector& rhs);

// rank of a matrix given as sparse rows over F_p; used for large differentials
struct SparseRow {
    std::vector<std::pair<std::size_t, std::uint32_t>> entries;
};
std::size_t rank_sparse_mod_p(std::vector<SparseRow> rows, std::uint32_t p);

// Span of vectors kept as a canonical RREF basis.
class Subspace {
public:
    Subspace(const Field& f, std::size_t ambient) : f_(f), n_(ambient) {}
    bool add(const Vector& v);  // true iff v enlarged the span
    bool contains(const Vector& v) const;
    std::size_t dim() const { return rows_.size(); }
    std::size_t ambient() const { return n_; }
    std::vector<Vector> basis() const;  // RREF rows, sorted by pivot
    Vector reduce(const Vector& v) const;
    bool operator==(const Subspace& o) const;

private:
    Field f_;
    std::size_t n_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> piv_;
};

// Even/odd block matrix; rows and columns list even coordinates first.
class SuperMatrix {
public:
    SuperMatrix() = default;
    SuperMatrix(const Field& f, std::pair<std::size_t, std::size_t> row_dims,
                std::pair<std::size_t, std::size_t> col_dims);
    static SuperMatrix from_matrix(const Matrix& m, std::pair<std::size_t, std::size_t> row_dims,
                                   std::pair<std::size_t, std::size_t> col_dims);

    std::pair<std::size_t, std::size_t> row_dims() const { return rd_; }
    std::pair<std::size_t, std::size_t> col_dims() const { return cd_; }
    // (r, c) in {0,1}^2 selects the even/odd row and column sectors
    Matrix& block(int r, int c) { return b_[2 * r + c]; }
    const Matrix& block(int r, int c) const { return b_[2 * r + c]; }
    Matrix to_matrix() const;
    bool is_even() const;
    bool is_odd() const;

private:
    std::pair<std::size_t, std::size_t> rd_, cd_;
    Matrix b_[4];
};

}  // namespace supvar
