#pragma once

#include "supvar/pbw.hpp"
#include "supvar/superalgebra.hpp"

#include <map>
#include <optional>
#include <string>

namespace supvar {

class ScopeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ResolutionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Generators of A(g) (x) Gamma(g0[2]): <x> for even x (exterior, degree 1), gamma(y) for odd y
// (divided powers, degree 1), gamma(x) for even x (divided powers, degree 2). Even basis order
// is the declared one.
GradedCommutativeAlgebra resolution_generators(const LieSuperalgebra& g);
// Dual layout: <x*>, y*, x* (degree 2), exponent vectors aligned with resolution_generators.
GradedCommutativeAlgebra dual_generators(const LieSuperalgebra& g);

// V(g)-basis word (x) A-monomial
using ResolutionKey = std::pair<PBWMonomial, SuperMonomial>;
using ResolutionElement = LinComb<ResolutionKey>;

struct ResolutionOptions {
    int truncation = 0;          // 0 means 2p + 2
    int exactness_through = -1;  // highest i with H_i checked; -1 means truncation - 1
    bool run_checks = true;
};

class MayResolution;

struct TwistingCochain {
    // t(gamma_1(x_i)) for each even basis vector, in W(g0) (Gamma part zero)
    std::vector<ResolutionElement> images;
    bool augmentation_vanishes = false;  // epsilon o t = 0
    bool twisting_condition = false;     // d o t = 0 on gamma_1 and d_t^2 = 0 on Gamma generators
};

class MayResolution {
public:
    MayResolution(const LieSuperalgebra& g, ResolutionOptions opt = {});

    const LieSuperalgebra& algebra() const { return g_; }
    const EnvelopingAlgebra& enveloping() const { return V_; }
    const GradedCommutativeAlgebra& generators() const { return A_; }
    const TwistingCochain& twisting_cochain() const { return t_; }
    int truncation() const { return trunc_; }
    std::size_t num_even() const { return ne_; }
    std::size_t num_odd() const { return no_; }

    // A-monomial helpers: exterior slot of the i-th even vector, divided slot of the j-th odd one,
    // Gamma slot of the i-th even vector
    std::size_t ext_slot(std::size_t i) const { return i; }
    std::size_t odd_slot(std::size_t j) const { return ne_ + j; }
    std::size_t gamma_slot(std::size_t i) const { return ne_ + no_ + i; }

    // d on W(g): word formula on 1 (x) a, a without Gamma part
    ResolutionElement koszul_generator(const SuperMonomial& a) const;
    // d_t(1 (x) a)
    const ResolutionElement& differential_generator(const SuperMonomial& a) const;
    ResolutionElement differential(const ResolutionElement& x) const;

    std::vector<SuperMonomial> generator_basis(int n) const { return A_.basis(n); }
    // field matrix of d_t: X_n -> X_{n-1}, n >= 1; X_n basis = V basis x generator_basis(n)
    Matrix differential_matrix(int n) const;
    std::size_t homology_dim(int n) const;

    // throws ResolutionError with a witness
    void check_square_zero(int through) const;
    void check_exactness(int through) const;

    std::string format(const ResolutionElement& x) const;

private:
    SuperMonomial with_gamma(const SuperMonomial& w, const std::vector<std::uint16_t>& gamma) const;
    AlgebraElement letter(const Vector& z) const;
    AlgebraElement right_action(const SuperMonomial& w, std::size_t even_basis) const;
    ResolutionElement times_twist(const SuperMonomial& w, std::size_t i) const;
    std::size_t sparse_rank(int n) const;

    const LieSuperalgebra& g_;
    EnvelopingAlgebra V_;
    GradedCommutativeAlgebra A_;
    int trunc_;
    std::size_t ne_, no_;
    std::vector<std::size_t> ev_, od_;
    TwistingCochain t_;
    mutable std::map<SuperMonomial, ResolutionElement> memo_;
    mutable std::map<int, std::size_t> rank_cache_;
};

MayResolution build_resolution(const LieSuperalgebra& g, ResolutionOptions opt = {});
TwistingCochain build_twisting_cochain(const LieSuperalgebra& g);

// Hom_V(X(g), k) identified with Lambda_s(g*) (x) S(g0*[2]) through dual monomial bases
class DualComplex {
public:
    DualComplex(const MayResolution& X, int max_degree);

    const GradedCommutativeAlgebra& algebra() const { return D_; }
    int max_degree() const { return max_deg_; }
    const std::vector<SuperMonomial>& basis(int n) const { return basis_.at(n); }
    // d*: C^n -> C^{n+1}, 0 <= n < max_degree
    const Matrix& differential_matrix(int n) const { return mats_.at(n); }
    AlgebraElement differential(const AlgebraElement& f) const;
    Vector coordinates(const AlgebraElement& f, int n) const;
    AlgebraElement from_coordinates(const Vector& v, int n) const;
    bool is_cocycle(const AlgebraElement& f) const;
    // f = d*(c) for some c; nullopt otherwise
    std::optional<AlgebraElement> coboundary_primitive(const AlgebraElement& f) const;
    int degree_of(const AlgebraElement& f) const;

    std::size_t exterior_weight(const SuperMonomial& m) const;

private:
    const MayResolution& X_;
    GradedCommutativeAlgebra D_;
    int max_deg_;
    std::vector<std::vector<SuperMonomial>> basis_;
    std::vector<std::map<SuperMonomial, std::size_t>> index_;
    std::vector<Matrix> mats_;
};

DualComplex dual_complex(const MayResolution& X, int max_degree);

struct VgCohomology {
    std::vector<std::size_t> dims;  // dims[n] = dim H^n(V(g), k), 0 <= n <= max_degree
    int max_degree = 0;
};

VgCohomology vg_cohomology(const LieSuperalgebra& g, int max_degree);
VgCohomology vg_cohomology(const DualComplex& D);

struct EdgeClass {
    std::string label;
    AlgebraElement cochain;
    int degree = 0;
    bool is_cocycle = false;
    bool is_coboundary = false;
};

struct EdgeClasses {
    std::vector<EdgeClass> even;  // x* in S(g0*[2]), degree 2
    std::vector<EdgeClass> odd;   // (y*)^p, degree p
};

EdgeClasses edge_subalgebra_classes(const DualComplex& D);

}  // namespace supvar
