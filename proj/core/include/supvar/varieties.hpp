#pragma once

#include "supvar/lie.hpp"
#include "supvar/module.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace supvar {

// an enumeration or closure would exceed its configured bound
class ResourceBound : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr std::size_t default_point_bound = 1000000;

// ---- self-commuting cone ----

// odd coordinates (declared order of the odd basis) <-> full vector
Vector odd_embed(const LieSuperalgebra& g, const Vector& odd_coords);
Vector odd_coordinates(const LieSuperalgebra& g, const Vector& x);

bool cone_membership(const LieSuperalgebra& g, const Vector& x);
// F_p-rational points, odd coordinates in lexicographic order (0 first)
std::vector<Vector> enumerate_cone(const LieSuperalgebra& g, std::size_t bound = default_point_bound);

// all vectors of F_p^n in lexicographic order
std::vector<Vector> all_points(const Field& f, std::size_t n, std::size_t bound = default_point_bound);

// ---- rank varieties ----

// x a nonzero cone point given as a full vector; rank rho(x) * 2 == dim M
bool free_over_odd_point(const Supermodule& M, const Vector& x);

struct SupportReport {
    std::size_t tested_points = 0;
    std::vector<Vector> members;  // odd coordinates, 0 included
    bool is_zero_only = false;
    std::optional<std::size_t> dimension_estimate;
    bool dimension_exact = false;  // members form a union of coordinate subspaces
};

SupportReport support_points(const LieSuperalgebra& g, const Supermodule& M, std::size_t bound = default_point_bound);

// M over Lambda(V), V spanned by the odd elements whose actions are ops
bool free_over_exterior(const std::vector<Matrix>& ops);
bool free_over_exterior(const Supermodule& M, const std::vector<Vector>& odd_elements);

// ---- commuting varieties C_r ----

struct CrTuple {
    std::vector<Vector> alphas;  // r even elements (full vectors)
    Vector beta;                 // odd element (full vector)
};

bool cr_membership(const LieSuperalgebra& g, const CrTuple& t, std::size_t r);

struct CrEnumeration {
    std::vector<CrTuple> points;
    std::size_t tested = 0;
    std::size_t count() const { return points.size(); }
};

CrEnumeration enumerate_cr(const LieSuperalgebra& g, std::size_t r, std::size_t bound = default_point_bound);

// ---- support laws over F_p ----

struct TensorSupportReport {
    std::vector<Vector> support_m, support_n, support_mn;
    bool subset_holds = false;    // support(M (x) N) within support(M) and support(N)
    bool equality_holds = false;  // ... equal to the intersection
};

TensorSupportReport tensor_support_check(const LieSuperalgebra& g, const Supermodule& M, const Supermodule& N,
                                         std::size_t bound = default_point_bound);

struct ParitySumReport {
    bool union_law = false;  // support(M + N) = support(M) u support(N)
    bool parity_invariant = false;  // support(Pi M) = support(M)
};

ParitySumReport parity_directsum_checks(const LieSuperalgebra& g, const Supermodule& M, const Supermodule& N,
                                        std::size_t bound = default_point_bound);

// ---- characteristic zero: Lambda(V) # kG ----

// A module over Lambda(V) # kG with V purely odd of dimension d: M carries the odd operators
// (one per basis vector of V, through a purely odd abelian algebra) and, for each group
// generator, its matrix on V and on M.
struct SmashModule {
    Supermodule module;
    std::vector<Matrix> group_on_v;
    std::vector<Matrix> group_on_m;
};

struct GroupElement {
    Matrix on_v;
    Matrix on_m;
};

// all products of the generators (on V and M simultaneously); throws ResourceBound past cap
std::vector<GroupElement> group_closure(const SmashModule& M, std::size_t cap = 10000);
// g rho(v) g^-1 = rho(g v) for every generator and basis vector
bool smash_compatible(const SmashModule& M);

struct OrbitReport {
    std::vector<Vector> representatives;        // lexicographically minimal vector per orbit
    std::vector<std::vector<Vector>> orbits;    // test vectors grouped by orbit
    std::vector<bool> member;                   // per orbit: M restricted to <v> is not free (or v = 0)
    std::size_t group_order = 0;
};

OrbitReport char0_support(const SmashModule& M, const std::vector<Vector>& test_vectors, std::size_t cap = 10000);

struct DivisibilityReport {
    std::size_t codim = 0;  // d = dim V - dim span(support vectors)
    std::size_t dim = 0;
    long sdim = 0;
    bool divides = false;
    bool sdim_vanishes = false;
    bool pass() const { return divides && (codim == 0 || sdim_vanishes); }
};

DivisibilityReport two_divisibility_check(const SmashModule& M, const std::vector<Vector>& support_vectors);

struct Char0TensorReport {
    std::size_t tested = 0;
    std::size_t mismatches = 0;  // v with member(M (x) N) != member(M) && member(N)
};

Char0TensorReport char0_tensor_check(const SmashModule& M, const SmashModule& N, const std::vector<Vector>& test_vectors);

// M (x) N with the diagonal group action
SmashModule smash_tensor(const SmashModule& M, const SmashModule& N);
SmashModule smash_direct_sum(const SmashModule& M, const SmashModule& N);

// dims of S^n(V*)^G, 0 <= n <= max_degree, via the Reynolds operator; V* carries the
// contragredient action
std::vector<std::size_t> invariant_dimensions(const std::vector<Matrix>& group_on_v, int max_degree);

// ---- complexity over exterior algebras ----

struct ComplexityReport {
    std::vector<std::size_t> dims;  // dim P_n, n = 0..steps-1
    double growth_exponent = 0;     // least-squares slope of log dim P_n against log(n + 1)
    std::size_t complexity = 0;
};

// minimal projective resolution of M over Lambda(V), M given by the anticommuting square-zero
// operators of a basis of V
ComplexityReport complexity_sequence(const std::vector<Matrix>& ops, std::size_t steps, std::size_t cap = 64);
ComplexityReport complexity_sequence(const LieSuperalgebra& g, const Supermodule& M, std::size_t steps,
                                     std::size_t cap = 64);

}  // namespace supvar
