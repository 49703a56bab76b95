#include "supvar/lie.hpp"

#include <stdexcept>

namespace supvar {

Vector jacobson_correction(const LieSuperalgebra& g, const Vector& x, const Vector& y)
{
    const Field& f = g.field();
    const unsigned p = f.characteristic();
    // coefficients in lambda of ad(lambda x + y)^k (x)
    std::vector<Vector> poly{x};
    for (unsigned step = 0; step + 1 < p; ++step) {
        std::vector<Vector> next(poly.size() + 1, g.zero());
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k] = add(next[k], g.bracket(y, poly[k]));
            next[k + 1] = add(next[k + 1], g.bracket(x, poly[k]));
        }
        poly = std::move(next);
    }
    Vector s = g.zero();
    for (unsigned i = 1; i < p; ++i)
        axpy(s, Scalar(f, i).inv(), poly[i - 1]);
    return s;
}

Vector jacobson_p_power(const LieSuperalgebra& g, const Vector& v)
{
    if (!g.has_pmap())
        throw std::logic_error("p-map absent");
    if (!g.is_even(v))
        throw std::invalid_argument("p-power of a non-even element");
    Vector acc = g.zero(), res = g.zero();
    for (auto i : g.even_indices()) {
        if (v[i].is_zero())
            continue;
        Vector y = scale(v[i], g.basis_vector(i));
        // scalars lie in F_p, so c^p = c
        res = add(res, scale(v[i], g.pmap_basis(i)));
        if (!is_zero(acc))
            res = add(res, jacobson_correction(g, acc, y));
        acc = add(acc, y);
    }
    return res;
}

}  // namespace supvar
