#pragma once

#include "supvar/lie.hpp"

#include <string>
#include <vector>

namespace supvar {

// gl(m|n): matrix units e_ij (1-based names "e11", ...) in row-major order. Over F_p the
// p-map is the p-th matrix power.
LieSuperalgebra build_gl(std::size_t m, std::size_t n, const Field& f);

// purely odd abelian algebra of dimension d; basis y1..yd
LieSuperalgebra build_odd_abelian(std::size_t d, const Field& f);
// basis {x, y}: [y,y] = 2x, no p-map
LieSuperalgebra build_ex_3_1_2(const Field& f);
// basis {x, y}: [y,y] = 2x, x^[p] = x
LieSuperalgebra build_ex_5_3_1(const Field& f);
// basis {x, y}: [y,y] = 0, [y,x] = y, x^[p] = x
LieSuperalgebra build_ex_5_3_2(const Field& f);
// basis {y, x0..xn}: [x_i,y] = 0, [y,y] = 2 x0^[p], x_i^[p] = x_{i+1}, x_n^[p] = sum alpha_i x_i
LieSuperalgebra build_ex_5_3_3(std::size_t n, const std::vector<Scalar>& alphas, const Field& f);
// one-dimensional even abelian algebra, x^[p] = 0 when a p-map is possible
LieSuperalgebra build_even_line(const Field& f);

// "odd_abelian(d)", "ex_3_1_2", "ex_5_3_1", "ex_5_3_2", "ex_5_3_3" (params: n, then alphas)
LieSuperalgebra build_example(const std::string& id, const Field& f, const std::vector<std::int64_t>& params = {});

// named algebras used for catalog-wide invariant checks
struct CatalogEntry {
    std::string name;
    LieSuperalgebra algebra;
};
std::vector<CatalogEntry> catalog(const Field& f);

}  // namespace supvar
