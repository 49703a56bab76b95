#pragma once

#include "supvar/lie.hpp"
#include "supvar/module.hpp"
#include "supvar/superalgebra.hpp"

#include <map>
#include <optional>

namespace supvar {

// module basis index (x) monomial of Lambda_s(g*)
using CochainKey = std::pair<std::size_t, SuperMonomial>;
using CochainElement = LinComb<CochainKey>;

struct CohomologyTable {
    std::vector<std::size_t> dims;  // dims[n] = dim H^n for n < max_degree
    int max_degree = 0;
};

// Generators of Lambda_s(g*): duals of the even basis vectors (exterior), then duals of the
// odd ones (polynomial), all in degree 1.
GradedCommutativeAlgebra super_exterior_dual(const LieSuperalgebra& g);

class KoszulComplex {
public:
    KoszulComplex(const LieSuperalgebra& g, const Supermodule& M, int max_degree);

    const LieSuperalgebra& algebra() const { return g_; }
    const Supermodule& coefficients() const { return M_; }
    const GradedCommutativeAlgebra& cochain_algebra() const { return A_; }
    int max_degree() const { return max_deg_; }

    // generator index in cochain_algebra() of the dual of basis vector i
    std::size_t dual_generator(std::size_t i) const { return pos_[i]; }
    AlgebraElement dual(std::size_t i) const { return A_.generator(pos_[i]); }

    // d on Lambda_s(g*) with trivial coefficients
    AlgebraElement differential(const AlgebraElement& z) const;
    // d on M (x) Lambda_s(g*)
    CochainElement differential(const CochainElement& c) const;

    CochainElement tensor(const Vector& m, const AlgebraElement& z) const;
    CochainElement right_multiply(const CochainElement& c, const AlgebraElement& z) const;

    const std::vector<CochainKey>& component_basis(int n) const { return basis_.at(n); }
    std::size_t component_dim(int n) const { return basis_.at(n).size(); }
    // matrix of d: C^n -> C^{n+1}, defined for 0 <= n < max_degree
    const Matrix& differential_matrix(int n) const { return mats_.at(n); }
    Vector coordinates(const CochainElement& c, int n) const;
    CochainElement from_coordinates(const Vector& v, int n) const;

private:
    const AlgebraElement& dmono(const SuperMonomial& m) const;

    const LieSuperalgebra& g_;
    const Supermodule& M_;
    GradedCommutativeAlgebra A_;
    int max_deg_;
    std::vector<std::size_t> pos_;
    std::vector<AlgebraElement> dgen_;
    mutable std::map<SuperMonomial, AlgebraElement> memo_;
    std::vector<std::vector<CochainKey>> basis_;
    std::vector<std::map<CochainKey, std::size_t>> index_;
    std::vector<Matrix> mats_;
};

class SignConventionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

CohomologyTable cohomology(const KoszulComplex& C);
CohomologyTable cohomology(const LieSuperalgebra& g, const Supermodule& M, int max_degree);

struct PPowerCocycle {
    AlgebraElement cochain;  // f^p
    int degree = 0;
    bool is_cocycle = false;
    bool is_coboundary = false;
    std::optional<AlgebraElement> primitive;  // c with d(c) = f^p when a coboundary
};

// f must be a homogeneous polynomial in the odd dual generators; C needs trivial coefficients
// and max_degree >= deg(f) * p
PPowerCocycle ppower_cocycle(const KoszulComplex& C, const AlgebraElement& f);

// gl(m|m) identities in Lambda_s(g*) and C(g, g*); use_supertrace = false swaps in the
// ordinary trace (which should break the first identity)
bool verify_f1_identity(std::size_t m, std::uint32_t p, bool use_supertrace = true);
bool verify_f2_identity(std::size_t m, std::uint32_t p);
// d(-f2 f1^{p-1}) = str (x) f1^p
bool verify_f2_consequence(std::size_t m, std::uint32_t p);

struct CochainMap {
    std::vector<Matrix> components;  // restriction C^n(g) -> C^n(a)
    bool commutes = false;
    bool surjective = false;
};

// restriction of cochains with trivial coefficients along a subalgebra inclusion
CochainMap restrict_cochains(const KoszulComplex& big, const SubalgebraEmbedding& s, const KoszulComplex& small);
// image of a cochain of g under restriction to the subalgebra
AlgebraElement restrict_element(const KoszulComplex& big, const SubalgebraEmbedding& s, const KoszulComplex& small,
                                const AlgebraElement& z);

}  // namespace supvar
