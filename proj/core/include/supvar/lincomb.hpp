#pragma once

#include "supvar/scalar.hpp"

#include <map>

namespace supvar {

// Finite linear combination with keys in a canonical order; zero terms are never stored.
template <class Key>
class LinComb {
public:
    using Terms = std::map<Key, Scalar>;

    LinComb() = default;
    LinComb(const Key& k, const Scalar& c) { add(k, c); }

    void add(const Key& k, const Scalar& c)
    {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    void add(const LinComb& o, const Scalar& c)
    {
        if (c.is_zero())
            return;
        for (const auto& [k, v] : o.terms_)
            add(k, c * v);
    }

    LinComb& operator+=(const LinComb& o)
    {
        for (const auto& [k, v] : o.terms_)
            add(k, v);
        return *this;
    }

    LinComb& operator-=(const LinComb& o)
    {
        for (const auto& [k, v] : o.terms_)
            add(k, -v);
        return *this;
    }

    LinComb scaled(const Scalar& c) const
    {
        LinComb r;
        if (c.is_zero())
            return r;
        for (const auto& [k, v] : terms_)
            r.terms_.emplace(k, c * v);
        return r;
    }

    Scalar coefficient(const Key& k, const Field& f) const
    {
        auto it = terms_.find(k);
        return it == terms_.end() ? Scalar::zero(f) : it->second;
    }

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    bool operator==(const LinComb& o) const { return terms_ == o.terms_; }

private:
    Terms terms_;
};

}  // namespace supvar
