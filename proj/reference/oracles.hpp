#pragma once

// Independent reference computations and random generators shared by the unit tests and the
// acceptance runner. Nothing here calls the fast paths it is used to check.

#include "supvar/catalog.hpp"
#include "supvar/module.hpp"
#include "supvar/superalgebra.hpp"
#include "supvar/varieties.hpp"

#include <random>
#include <vector>

namespace oracle {

using namespace supvar;

std::uint64_t binom(std::uint64_t n, std::uint64_t k);

// [x,x] from the raw structure constants
Vector self_bracket(const LieSuperalgebra& g, const Vector& x);
// every F_p point of g_1 with [x,x] = 0, by direct evaluation
std::size_t brute_cone_count(const LieSuperalgebra& g);
// C_r for a matrix-realized algebra: brackets as matrix supercommutators, p-map as matrix power
std::size_t brute_cr_count(const LieSuperalgebra& g, std::size_t r);

// coefficients of the Molien series 1/|G| sum_g 1/det(1 - t g) up to t^max_degree
std::vector<Rational> molien_coefficients(const std::vector<Matrix>& group, int max_degree);
std::vector<Matrix> enumerate_group(const std::vector<Matrix>& gens);

// all elements of a finite algebra over F_p tested for nilpotency; returns the nilpotent set
std::vector<Vector> brute_nilpotent_elements(const FiniteGradedSuperalgebra& A);
// the set of all elements in the span of the given vectors
std::vector<Vector> span_elements(const Field& f, std::size_t n, const std::vector<Vector>& gens);

// random Lambda(k^{0|2}) supermodule: sums of k, Pi k, regular, Pi regular and k^{1|1} line
// quotients, conjugated by a random even change of basis
Supermodule random_exterior_module(const LieSuperalgebra& odd2, std::mt19937_64& rng);
// random gl(1|1) supermodule built from trivial, natural, adjoint and their parity changes
Supermodule random_gl11_module(const LieSuperalgebra& gl11, std::mt19937_64& rng);

// regular module of Lambda(k^{0|d}) over a purely odd abelian algebra
Supermodule exterior_regular_module(const LieSuperalgebra& oddd);

// random graded-commutative superalgebra, truncated and tensored with k[s]/(f)
FiniteGradedSuperalgebra random_finite_algebra(const Field& f, std::mt19937_64& rng, std::size_t max_dim);

Scalar random_scalar(const Field& f, std::mt19937_64& rng);
Matrix random_invertible(const Field& f, std::size_t n, std::mt19937_64& rng);

}  // namespace oracle
