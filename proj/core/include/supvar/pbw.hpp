#pragma once

#include "supvar/lie.hpp"
#include "supvar/lincomb.hpp"
#include "supvar/superalgebra.hpp"

#include <map>

namespace supvar {

// exponent per basis index of g; odd exponents <= 1, and < p for even ones in V(g)
using PBWMonomial = SuperMonomial;
using PBWElement = LinComb<PBWMonomial>;

// U(g) or, when restricted, V(g) = U(g)/(x^p - x^[p]). Canonical words list even basis
// vectors in declared order, then odd ones. Products are memoized, so an instance is
// not safe for concurrent use.
class EnvelopingAlgebra {
public:
    EnvelopingAlgebra(const LieSuperalgebra& g, bool restricted);

    const LieSuperalgebra& algebra() const { return g_; }
    const Field& field() const { return g_.field(); }
    bool restricted() const { return restricted_; }
    const std::vector<std::size_t>& order() const { return order_; }

    PBWMonomial unit_monomial() const { return PBWMonomial(g_.dim()); }
    PBWElement one() const;
    PBWElement generator(std::size_t i) const;
    PBWElement from_lie(const Vector& x) const;
    int parity(const PBWMonomial& m) const;

    const PBWElement& mul_generator(std::size_t gen, const PBWMonomial& m) const;
    PBWElement multiply(const PBWMonomial& a, const PBWMonomial& b) const;
    PBWElement multiply(const PBWElement& a, const PBWElement& b) const;
    PBWElement left_multiply(const PBWMonomial& a, const PBWElement& b) const;

    // canonical basis of V(g) (restricted only), exponents in lexicographic order
    std::vector<PBWMonomial> basis() const;
    Scalar augmentation(const PBWElement& a) const;
    std::string format(const PBWMonomial& m) const;

private:
    const LieSuperalgebra& g_;
    bool restricted_;
    std::vector<std::size_t> order_;
    std::vector<std::size_t> rank_;
    mutable std::map<std::pair<std::size_t, PBWMonomial>, PBWElement> memo_;
};

// product of Lie elements x*y in the enveloping algebra (odd squares straightened)
PBWElement pbw_multiply(const EnvelopingAlgebra& U, const PBWElement& a, const PBWElement& b);

}  // namespace supvar
