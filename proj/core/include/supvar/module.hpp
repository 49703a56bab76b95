#pragma once

#include "supvar/lie.hpp"

#include <vector>

namespace supvar {

// Finite-dimensional g-supermodule; basis lists even vectors first. rho[a] is the action
// of the a-th basis vector of g on column vectors.
class Supermodule {
public:
    Supermodule(Field f, std::size_t dim_even, std::size_t dim_odd, std::vector<Matrix> rho);

    const Field& field() const { return f_; }
    std::size_t dim() const { return de_ + do_; }
    std::size_t dim_even() const { return de_; }
    std::size_t dim_odd() const { return do_; }
    long superdim() const { return long(de_) - long(do_); }
    int parity(std::size_t i) const { return i < de_ ? 0 : 1; }
    std::size_t num_operators() const { return rho_.size(); }

    const Matrix& rho(std::size_t a) const { return rho_.at(a); }
    SuperMatrix action(std::size_t a) const;
    // rho of an arbitrary Lie element
    Matrix act(const Vector& x) const;

private:
    Field f_;
    std::size_t de_, do_;
    std::vector<Matrix> rho_;
};

Supermodule trivial_module(const LieSuperalgebra& g);
Supermodule natural_module(const LieSuperalgebra& g);  // needs a matrix realization
Supermodule adjoint_module(const LieSuperalgebra& g);
// (z.f)(w) = -(-1)^{z f} f([z,w]); basis is the dual basis, reordered evens first
Supermodule coadjoint_module(const LieSuperalgebra& g);

Supermodule direct_sum(const Supermodule& a, const Supermodule& b);
// x.(m (x) n) = x.m (x) n + (-1)^{x m} m (x) x.n ; needs the parities of the operators
Supermodule tensor_product(const std::vector<int>& op_parity, const Supermodule& a, const Supermodule& b);
// Pi(M): grading flipped, a acts by (-1)^{a} rho(a)
Supermodule parity_change(const std::vector<int>& op_parity, const Supermodule& m);

ValidationReport check_supermodule(const LieSuperalgebra& g, const Supermodule& m);

// basis permutation used by adjoint/coadjoint modules: evens of g first
std::vector<std::size_t> even_first_order(const LieSuperalgebra& g);

}  // namespace supvar
