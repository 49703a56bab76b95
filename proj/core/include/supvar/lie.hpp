#pragma once

#include "supvar/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace supvar {

using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

class LieSuperalgebra {
public:
    LieSuperalgebra(Field f, std::vector<std::string> names, std::vector<int> parity);

    const Field& field() const { return f_; }
    std::size_t dim() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    int parity(std::size_t i) const { return par_[i]; }
    const std::vector<int>& parities() const { return par_; }
    std::vector<std::size_t> even_indices() const;
    std::vector<std::size_t> odd_indices() const;
    std::size_t dim_even() const { return even_indices().size(); }
    std::size_t dim_odd() const { return odd_indices().size(); }
    std::optional<std::size_t> index_of(const std::string& name) const;

    // [e_i, e_j] = sum_k c_ij^k e_k; set_bracket does not impose antisymmetry
    void set_bracket(std::size_t i, std::size_t j, const Vector& v);
    // sets [e_i,e_j] = v and [e_j,e_i] = -(-1)^{ij} v
    void set_bracket_antisym(std::size_t i, std::size_t j, const Vector& v);
    const SparseVector& bracket_basis(std::size_t i, std::size_t j) const { return br_[i * dim() + j]; }
    Vector bracket_basis_dense(std::size_t i, std::size_t j) const;
    Scalar structure_constant(std::size_t i, std::size_t j, std::size_t k) const;
    Vector bracket(const Vector& x, const Vector& y) const;

    bool has_pmap() const { return pmap_.has_value(); }
    // images of even basis vectors; odd slots are ignored
    void set_pmap(std::vector<Vector> images);
    void clear_pmap() { pmap_.reset(); }
    const Vector& pmap_basis(std::size_t i) const;

    bool has_realization() const { return real_.has_value(); }
    void set_realization(std::vector<Matrix> mats, std::size_t even_rows) {
        real_ = std::move(mats);
        real_even_ = even_rows;
    }
    const std::vector<Matrix>& realization() const { return *real_; }
    std::size_t realization_even_rows() const { return real_even_; }
    Matrix realize(const Vector& x) const;

    bool even_part_abelian() const;
    bool is_even(const Vector& x) const;
    bool is_odd(const Vector& x) const;
    Vector basis_vector(std::size_t i) const { return unit_vector(f_, dim(), i); }
    Vector zero() const { return zero_vector(f_, dim()); }

    std::string format(const Vector& x) const;

private:
    Field f_;
    std::vector<std::string> names_;
    std::vector<int> par_;
    std::vector<SparseVector> br_;
    std::optional<std::vector<Vector>> pmap_;
    std::optional<std::vector<Matrix>> real_;
    std::size_t real_even_ = 0;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

ValidationReport validate(const LieSuperalgebra& g);

// x^[p] for an even element via the basis p-map and Jacobson's formula
Vector jacobson_p_power(const LieSuperalgebra& g, const Vector& v);
// sum of brackets appearing in (x+y)^[p] - x^[p] - y^[p]
Vector jacobson_correction(const LieSuperalgebra& g, const Vector& x, const Vector& y);

struct SubalgebraEmbedding {
    LieSuperalgebra sub;
    Matrix inclusion;  // dim g x dim sub, columns are the sub basis in g coordinates
};

// smallest subspace containing the homogeneous parts of the generators and closed
// under bracket and (when present) the p-map
SubalgebraEmbedding restricted_subalgebra(const LieSuperalgebra& g, const std::vector<Vector>& generators);

// supercommutator of matrices with the given even/odd row split; parities of x,y given
Matrix super_commutator(const Matrix& x, int px, const Matrix& y, int py);

}  // namespace supvar
