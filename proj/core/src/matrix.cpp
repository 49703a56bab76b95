#include "supvar/matrix.hpp"

#include <algorithm>
#include <map>

namespace supvar {

Vector zero_vector(const Field& f, std::size_t n)
{
    return Vector(n, Scalar::zero(f));
}

Vector unit_vector(const Field& f, std::size_t n, std::size_t i)
{
    Vector v = zero_vector(f, n);
    v.at(i) = Scalar::one(f);
    return v;
}

bool is_zero(const Vector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector add(const Vector& a, const Vector& b)
{
    Vector r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] += b.at(i);
    return r;
}

Vector scale(const Scalar& c, const Vector& v)
{
    Vector r = v;
    for (auto& x : r)
        x = c * x;
    return r;
}

void axpy(Vector& a, const Scalar& c, const Vector& b)
{
    if (c.is_zero())
        return;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!b[i].is_zero())
            a[i] += c * b[i];
}

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : f_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f))
{
}

Matrix Matrix::identity(const Field& f, std::size_t n)
{
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<std::vector<std::int64_t>>& rows)
{
    std::size_t c = rows.empty() ? 0 : rows[0].size();
    Matrix m(f, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c)
            throw std::invalid_argument("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = Scalar(f, rows[i][j]);
    }
    return m;
}

Matrix Matrix::from_columns(const Field& f, std::size_t rows, const std::vector<Vector>& cols)
{
    Matrix m(f, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i)
            m(i, j) = cols[j].at(i);
    return m;
}

Vector Matrix::row(std::size_t i) const
{
    return Vector(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

Vector Matrix::column(std::size_t j) const
{
    Vector v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v.push_back((*this)(i, j));
    return v;
}

Matrix Matrix::operator*(const Matrix& o) const
{
    if (cols_ != o.rows_)
        throw std::invalid_argument("matrix shape mismatch in product");
    Matrix r(f_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (a.is_zero())
                continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (!o(k, j).is_zero())
                    r(i, j) += a * o(k, j);
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix shape mismatch in sum");
    Matrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i)
        r.a_[i] += o.a_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const
{
    return *this + o.scaled(-Scalar::one(f_));
}

Matrix Matrix::scaled(const Scalar& c) const
{
    Matrix r = *this;
    for (auto& x : r.a_)
        x = c * x;
    return r;
}

Vector Matrix::apply(const Vector& v) const
{
    if (v.size() != cols_)
        throw std::invalid_argument("vector length mismatch");
    Vector r = zero_vector(f_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!v[j].is_zero() && !(*this)(i, j).is_zero())
                r[i] += (*this)(i, j) * v[j];
    return r;
}

Matrix Matrix::transpose() const
{
    Matrix r(f_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r(j, i) = (*this)(i, j);
    return r;
}

Matrix Matrix::pow(std::uint64_t e) const
{
    Matrix r = identity(f_, rows_), b = *this;
    while (e) {
        if (e & 1)
            r = r * b;
        e >>= 1;
        if (e)
            b = b * b;
    }
    return r;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    Matrix r(f_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j)
            r(i, j) = (*this)(r0 + i, c0 + j);
    return r;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b)
{
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            (*this)(r0 + i, c0 + j) = b(i, j);
}

bool Matrix::is_zero() const
{
    return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::operator==(const Matrix& o) const
{
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

namespace {

using Row32 = std::vector<std::uint32_t>;

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p)
{
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
        if (e & 1)
            r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

// in-place RREF over F_p on dense rows; returns pivot columns
std::vector<std::size_t> rref_mod_p(std::vector<Row32>& rows, std::size_t cols, std::uint32_t p)
{
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c] == 0)
            ++sel;
        if (sel == rows.size())
            continue;
        std::swap(rows[r], rows[sel]);
        std::uint64_t iv = inv_mod(rows[r][c], p);
        for (std::size_t j = c; j < cols; ++j)
            rows[r][j] = static_cast<std::uint32_t>(rows[r][j] * iv % p);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0)
                continue;
            std::uint64_t f = p - rows[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (rows[r][j])
                    rows[i][j] = static_cast<std::uint32_t>((rows[i][j] + f * rows[r][j]) % p);
        }
        piv.push_back(c);
        ++r;
    }
    rows.resize(r);
    return piv;
}

Echelon rref_generic(const Matrix& m)
{
    const Field& f = m.field();
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < m.rows(); ++i)
        rows.push_back(m.row(i));
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c].is_zero())
            ++sel;
        if (sel == rows.size())
            continue;
        std::swap(rows[r], rows[sel]);
        Scalar iv = rows[r][c].inv();
        for (auto& x : rows[r])
            x = x * iv;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && !rows[i][c].is_zero())
                axpy(rows[i], -rows[i][c], rows[r]);
        piv.push_back(c);
        ++r;
    }
    Echelon e{Matrix(f, r, m.cols()), piv};
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            e.reduced(i, j) = rows[i][j];
    return e;
}

}  // namespace

Echelon rref(const Matrix& m)
{
    const Field& f = m.field();
    if (!f.is_prime())
        return rref_generic(m);
    std::vector<Row32> rows(m.rows(), Row32(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            rows[i][j] = m(i, j).residue();
    auto piv = rref_mod_p(rows, m.cols(), f.characteristic());
    Echelon e{Matrix(f, rows.size(), m.cols()), piv};
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            e.reduced(i, j) = Scalar(f, static_cast<std::int64_t>(rows[i][j]));
    return e;
}

std::size_t rank(const Matrix& m)
{
    if (m.field().is_prime()) {
        std::vector<SparseRow> rows(m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (!m(i, j).is_zero())
                    rows[i].entries.emplace_back(j, m(i, j).residue());
        return rank_sparse_mod_p(std::move(rows), m.field().characteristic());
    }
    return rref(m).pivots.size();
}

std::vector<Vector> kernel_basis(const Matrix& m)
{
    Echelon e = rref(m);
    const Field& f = m.field();
    std::vector<bool> is_piv(m.cols(), false);
    for (auto c : e.pivots)
        is_piv[c] = true;
    std::vector<Vector> out;
    for (std::size_t fc = 0; fc < m.cols(); ++fc) {
        if (is_piv[fc])
            continue;
        Vector v = zero_vector(f, m.cols());
        v[fc] = Scalar::one(f);
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            v[e.pivots[i]] = -e.reduced(i, fc);
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<Vector> solve(const Matrix& m, const Vector& rhs)
{
    if (rhs.size() != m.rows())
        throw std::invalid_argument("rhs length mismatch");
    Matrix aug(m.field(), m.rows(), m.cols() + 1);
    aug.set_block(0, 0, m);
    for (std::size_t i = 0; i < m.rows(); ++i)
        aug(i, m.cols()) = rhs[i];
    Echelon e = rref(aug);
    Vector x = zero_vector(m.field(), m.cols());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] == m.cols())
            return std::nullopt;
        x[e.pivots[i]] = e.reduced(i, m.cols());
    }
    return x;
}

std::size_t rank_sparse_mod_p(std::vector<SparseRow> rows, std::uint32_t p)
{
    std::size_t width = 0;
    for (const auto& row : rows)
        for (auto [c, v] : row.entries)
            width = std::max(width, c + 1);
    // pivot rows indexed by leading column, monic, stored sparsely
    std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> piv(width);
    std::vector<bool> has(width, false);
    std::vector<std::uint64_t> acc(width, 0);
    std::size_t r = 0;
    for (const auto& row : rows) {
        std::size_t lo = width;
        for (auto [c, v] : row.entries) {
            acc[c] = (acc[c] + v) % p;
            lo = std::min(lo, c);
        }
        for (std::size_t c = lo; c < width; ++c) {
            if (acc[c] == 0)
                continue;
            if (!has[c]) {
                const std::uint64_t iv = inv_mod(static_cast<std::uint32_t>(acc[c]), p);
                auto& stored = piv[c];
                for (std::size_t k = c; k < width; ++k)
                    if (acc[k]) {
                        stored.emplace_back(k, static_cast<std::uint32_t>(acc[k] * iv % p));
                        acc[k] = 0;
                    }
                has[c] = true;
                ++r;
                break;
            }
            const std::uint64_t f = p - acc[c];
            for (auto [k, v] : piv[c])
                acc[k] = (acc[k] + f * v) % p;
        }
    }
    return r;
}

bool Subspace::add(const Vector& v)
{
    Vector w = reduce(v);
    std::size_t c = 0;
    while (c < n_ && w[c].is_zero())
        ++c;
    if (c == n_)
        return false;
    Scalar iv = w[c].inv();
    for (auto& x : w)
        x = x * iv;
    for (auto& row : rows_)
        if (!row[c].is_zero())
            axpy(row, -row[c], w);
    auto pos = std::lower_bound(piv_.begin(), piv_.end(), c) - piv_.begin();
    piv_.insert(piv_.begin() + pos, c);
    rows_.insert(rows_.begin() + pos, std::move(w));
    return true;
}

Vector Subspace::reduce(const Vector& v) const
{
    if (v.size() != n_)
        throw std::invalid_argument("subspace ambient mismatch");
    Vector w = v;
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (!w[piv_[i]].is_zero())
            axpy(w, -w[piv_[i]], rows_[i]);
    return w;
}

bool Subspace::contains(const Vector& v) const
{
    return supvar::is_zero(reduce(v));
}

std::vector<Vector> Subspace::basis() const
{
    return rows_;
}

bool Subspace::operator==(const Subspace& o) const
{
    return n_ == o.n_ && rows_ == o.rows_;
}

SuperMatrix::SuperMatrix(const Field& f, std::pair<std::size_t, std::size_t> row_dims,
                         std::pair<std::size_t, std::size_t> col_dims)
    : rd_(row_dims), cd_(col_dims)
{
    std::size_t r[2] = {row_dims.first, row_dims.second};
    std::size_t c[2] = {col_dims.first, col_dims.second};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            b_[2 * i + j] = Matrix(f, r[i], c[j]);
}

SuperMatrix SuperMatrix::from_matrix(const Matrix& m, std::pair<std::size_t, std::size_t> row_dims,
                                     std::pair<std::size_t, std::size_t> col_dims)
{
    if (m.rows() != row_dims.first + row_dims.second || m.cols() != col_dims.first + col_dims.second)
        throw std::invalid_argument("super dimensions do not match matrix shape");
    SuperMatrix s(m.field(), row_dims, col_dims);
    std::size_t r0[2] = {0, row_dims.first}, rn[2] = {row_dims.first, row_dims.second};
    std::size_t c0[2] = {0, col_dims.first}, cn[2] = {col_dims.first, col_dims.second};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            s.b_[2 * i + j] = m.block(r0[i], c0[j], rn[i], cn[j]);
    return s;
}

Matrix SuperMatrix::to_matrix() const
{
    Matrix m(b_[0].field(), rd_.first + rd_.second, cd_.first + cd_.second);
    m.set_block(0, 0, b_[0]);
    m.set_block(0, cd_.first, b_[1]);
    m.set_block(rd_.first, 0, b_[2]);
    m.set_block(rd_.first, cd_.first, b_[3]);
    return m;
}

bool SuperMatrix::is_even() const
{
    return b_[1].is_zero() && b_[2].is_zero();
}

bool SuperMatrix::is_odd() const
{
    return b_[0].is_zero() && b_[3].is_zero();
}

}  // namespace supvar
