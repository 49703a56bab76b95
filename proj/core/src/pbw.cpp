#include "supvar/pbw.hpp"

#include <sstream>
#include <stdexcept>

namespace supvar {

EnvelopingAlgebra::EnvelopingAlgebra(const LieSuperalgebra& g, bool restricted)
    : g_(g), restricted_(restricted), rank_(g.dim())
{
    if (restricted && !g.has_pmap())
        throw std::invalid_argument("V(g) needs a p-map");
    for (auto i : g.even_indices())
        order_.push_back(i);
    for (auto i : g.odd_indices())
        order_.push_back(i);
    for (std::size_t k = 0; k < order_.size(); ++k)
        rank_[order_[k]] = k;
}

PBWElement EnvelopingAlgebra::one() const
{
    return PBWElement(unit_monomial(), Scalar::one(field()));
}

PBWElement EnvelopingAlgebra::generator(std::size_t i) const
{
    PBWMonomial m = unit_monomial();
    m[i] = 1;
    return PBWElement(m, Scalar::one(field()));
}

PBWElement EnvelopingAlgebra::from_lie(const Vector& x) const
{
    PBWElement r;
    for (std::size_t i = 0; i < g_.dim(); ++i)
        r.add(generator(i), x[i]);
    return r;
}

int EnvelopingAlgebra::parity(const PBWMonomial& m) const
{
    int p = 0;
    for (std::size_t i = 0; i < g_.dim(); ++i)
        p += m[i] * g_.parity(i);
    return p & 1;
}

const PBWElement& EnvelopingAlgebra::mul_generator(std::size_t gen, const PBWMonomial& m) const
{
    auto key = std::make_pair(gen, m);
    if (auto it = memo_.find(key); it != memo_.end())
        return it->second;

    const Field& f = field();
    std::size_t h = g_.dim();
    for (auto i : order_)
        if (m[i]) {
            h = i;
            break;
        }

    PBWElement res;
    if (h == g_.dim() || rank_[gen] < rank_[h]) {
        PBWMonomial e = m;
        e[gen] = 1;
        res.add(e, Scalar::one(f));
    } else if (gen == h) {
        PBWMonomial rest = m;
        if (g_.parity(gen) == 1) {
            // y y = 1/2 [y,y]
            rest[gen] = 0;
            Scalar half = Scalar(f, 2).inv();
            for (const auto& [k, c] : g_.bracket_basis(gen, gen))
                res.add(mul_generator(k, rest), half * c);
        } else if (restricted_ && m[gen] + 1 == static_cast<int>(f.characteristic())) {
            rest[gen] = 0;
            const Vector& img = g_.pmap_basis(gen);
            for (std::size_t k = 0; k < g_.dim(); ++k)
                if (!img[k].is_zero())
                    res.add(mul_generator(k, rest), img[k]);
        } else {
            PBWMonomial e = m;
            e[gen] += 1;
            res.add(e, Scalar::one(f));
        }
    } else {
        // gen h rest = (-1)^{gen h} h (gen rest) + [gen,h] rest
        PBWMonomial rest = m;
        rest[h] -= 1;
        Scalar sg = (g_.parity(gen) & g_.parity(h)) ? -Scalar::one(f) : Scalar::one(f);
        PBWElement inner = mul_generator(gen, rest);
        for (const auto& [mm, c] : inner)
            res.add(mul_generator(h, mm), sg * c);
        for (const auto& [k, c] : g_.bracket_basis(gen, h))
            res.add(mul_generator(k, rest), c);
    }
    return memo_.emplace(std::move(key), std::move(res)).first->second;
}

PBWElement EnvelopingAlgebra::multiply(const PBWMonomial& a, const PBWMonomial& b) const
{
    // apply the letters of a to b from the right end of a
    std::vector<std::size_t> word;
    for (auto i : order_)
        for (int e = 0; e < a[i]; ++e)
            word.push_back(i);
    PBWElement cur(b, Scalar::one(field()));
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        PBWElement next;
        for (const auto& [mm, c] : cur)
            next.add(mul_generator(*it, mm), c);
        cur = std::move(next);
    }
    return cur;
}

PBWElement EnvelopingAlgebra::left_multiply(const PBWMonomial& a, const PBWElement& b) const
{
    PBWElement r;
    for (const auto& [mb, cb] : b)
        r.add(multiply(a, mb), cb);
    return r;
}

PBWElement EnvelopingAlgebra::multiply(const PBWElement& a, const PBWElement& b) const
{
    PBWElement r;
    for (const auto& [ma, ca] : a)
        r.add(left_multiply(ma, b), ca);
    return r;
}

std::vector<PBWMonomial> EnvelopingAlgebra::basis() const
{
    if (!restricted_)
        throw std::logic_error("U(g) is infinite-dimensional; basis() needs V(g)");
    std::vector<PBWMonomial> out;
    PBWMonomial cur = unit_monomial();
    const int p = static_cast<int>(field().characteristic());
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == g_.dim()) {
            out.push_back(cur);
            return;
        }
        int mx = g_.parity(i) ? 1 : p - 1;
        for (int e = 0; e <= mx; ++e) {
            cur[i] = static_cast<std::uint16_t>(e);
            self(self, i + 1);
        }
        cur[i] = 0;
    };
    rec(rec, 0);
    return out;
}

Scalar EnvelopingAlgebra::augmentation(const PBWElement& a) const
{
    return a.coefficient(unit_monomial(), field());
}

std::string EnvelopingAlgebra::format(const PBWMonomial& m) const
{
    std::ostringstream os;
    bool any = false;
    for (auto i : order_) {
        if (!m[i])
            continue;
        if (any)
            os << ' ';
        any = true;
        os << g_.name(i);
        if (m[i] > 1)
            os << '^' << m[i];
    }
    return any ? os.str() : std::string("1");
}

PBWElement pbw_multiply(const EnvelopingAlgebra& U, const PBWElement& a, const PBWElement& b)
{
    return U.multiply(a, b);
}

}  // namespace supvar
