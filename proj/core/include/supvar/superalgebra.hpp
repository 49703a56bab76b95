#pragma once

#include "supvar/lincomb.hpp"
#include "supvar/matrix.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace supvar {

enum class GenKind { Polynomial, DividedPower };

struct GeneratorSpec {
    std::string name;
    int parity = 0;
    int z_degree = 1;
    GenKind kind = GenKind::Polynomial;

    // forced by graded commutativity
    bool square_zero() const { return (parity + z_degree) % 2 != 0; }
};

// Exponent vector over the generator list; square-zero generators carry 0 or 1.
struct SuperMonomial {
    std::vector<std::uint16_t> exps;

    SuperMonomial() = default;
    explicit SuperMonomial(std::size_t n) : exps(n, 0) {}
    explicit SuperMonomial(std::vector<std::uint16_t> e) : exps(std::move(e)) {}

    std::size_t size() const { return exps.size(); }
    std::uint16_t operator[](std::size_t i) const { return exps[i]; }
    std::uint16_t& operator[](std::size_t i) { return exps[i]; }
    bool is_one() const;

    auto operator<=>(const SuperMonomial&) const = default;
};

using AlgebraElement = LinComb<SuperMonomial>;

// Free graded-commutative superalgebra on a list of generators: exterior on the
// square-zero ones, polynomial or divided-power on the others.
class GradedCommutativeAlgebra {
public:
    GradedCommutativeAlgebra(Field f, std::vector<GeneratorSpec> gens);

    const Field& field() const { return f_; }
    const std::vector<GeneratorSpec>& generators() const { return gens_; }
    std::size_t num_generators() const { return gens_.size(); }

    int degree(const SuperMonomial& m) const;
    int parity(const SuperMonomial& m) const;
    std::uint64_t exterior_mask(const SuperMonomial& m) const;

    SuperMonomial unit_monomial() const { return SuperMonomial(gens_.size()); }
    AlgebraElement one() const;
    AlgebraElement generator(std::size_t i) const;
    AlgebraElement monomial(const SuperMonomial& m) const;

    // nullopt when the product vanishes
    std::optional<std::pair<SuperMonomial, Scalar>> multiply(const SuperMonomial& a, const SuperMonomial& b) const;
    AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;
    AlgebraElement power(const AlgebraElement& a, unsigned e) const;

    // all monomials of the given degree, lexicographic on exponent vectors
    std::vector<SuperMonomial> basis(int degree) const;

    std::string format(const SuperMonomial& m) const;
    std::string format(const AlgebraElement& a) const;

private:
    Field f_;
    std::vector<GeneratorSpec> gens_;
};

std::vector<SuperMonomial> monomial_basis(const GradedCommutativeAlgebra& A, int degree);

// Finite-dimensional graded superalgebra given by structure constants on a homogeneous basis.
class FiniteGradedSuperalgebra {
public:
    struct BasisInfo {
        std::string name;
        int parity = 0;
        int degree = 0;
    };

    FiniteGradedSuperalgebra(Field f, std::vector<BasisInfo> basis, std::size_t unit_index);

    // the quotient of a free algebra by all monomials of degree > max_degree
    // (or with exponent beyond caps[i] when caps[i] > 0)
    static FiniteGradedSuperalgebra truncation(const GradedCommutativeAlgebra& A, int max_degree,
                                               const std::vector<unsigned>& caps = {});
    // k[s]/(f(s)) in degree 0, f monic given by its coefficients c_0..c_{d-1}
    static FiniteGradedSuperalgebra degree_zero_quotient(const Field& f, const std::vector<Scalar>& lower_coeffs);
    // graded tensor product with the Koszul sign on the middle swap
    static FiniteGradedSuperalgebra tensor(const FiniteGradedSuperalgebra& a, const FiniteGradedSuperalgebra& b);

    const Field& field() const { return f_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<BasisInfo>& basis() const { return basis_; }
    std::size_t unit_index() const { return unit_; }
    bool truncated() const { return truncated_; }

    // e_i e_j = sum_k c(i,j)[k] e_k
    const Vector& structure(std::size_t i, std::size_t j) const { return mult_[i * dim() + j]; }
    void set_structure(std::size_t i, std::size_t j, Vector v) { mult_[i * dim() + j] = std::move(v); }

    Vector multiply(const Vector& a, const Vector& b) const;
    Vector power(const Vector& a, unsigned e) const;
    bool is_nilpotent(const Vector& a) const;
    Vector unit() const { return unit_vector(f_, dim(), unit_); }

private:
    Field f_;
    std::vector<BasisInfo> basis_;
    std::size_t unit_;
    std::vector<Vector> mult_;
    bool truncated_ = false;
};

bool check_graded_commutativity(const FiniteGradedSuperalgebra& A);
bool check_associativity(const FiniteGradedSuperalgebra& A);

struct NilradicalDecomposition {
    std::vector<Vector> nil_of_R;        // Nil(R), R = A_0^ev + A_1^odd
    std::vector<Vector> square_zero;     // basis of A_0^odd + A_1^ev
    std::vector<Vector> full_nilradical;  // Nil(R) + A_0^odd + A_1^ev, canonical RREF basis
    bool truncated = false;
};

// Throws std::invalid_argument on a grading violation, std::logic_error if a returned
// vector fails the nilpotency check.
NilradicalDecomposition nilradical_decomposition(const FiniteGradedSuperalgebra& A);

}  // namespace supvar
