#pragma once

// The category of simplices of a truncated simplicial set K.
//
// Objects are pairs (n, sigma) with sigma in K_n; a morphism (n, sigma) -> (m, tau)
// is a monotone p : [n] -> [m] with K(p)(tau) = sigma.

#include "constructions.hpp"

#include <stdexcept>
#include <vector>

namespace sset {

struct SimplexObject {
    int dim = 0;
    int simplex = 0;
    friend bool operator==(const SimplexObject&, const SimplexObject&) = default;
};

class SimplexCategory {
public:
    SimplexCategory() = default;

    explicit SimplexCategory(SimplicialSet base) : base_(std::move(base))
    {
        offset_.assign(base_.dim_bound() + 2, 0);
        for (int n = 0; n <= base_.dim_bound(); ++n)
            offset_[n + 1] = offset_[n] + base_.count(n);
    }

    const SimplicialSet& base() const { return base_; }
    int dim_bound() const { return base_.dim_bound(); }
    int num_objects() const { return offset_.back(); }
    int objects_in_dim(int n) const { return base_.count(n); }

    int id(int n, int sigma) const { return offset_.at(n) + sigma; }
    int id(const SimplexObject& o) const { return id(o.dim, o.simplex); }

    SimplexObject object(int id) const
    {
        int n = 0;
        while (offset_[n + 1] <= id)
            ++n;
        return {n, id - offset_[n]};
    }

    bool is_degenerate(int id) const
    {
        const SimplexObject o = object(id);
        return base_.is_degenerate(o.dim, o.simplex);
    }

    /// Target object of the face generator d_i out of (n, sigma), i.e. (n-1, d_i sigma).
    int face_object(int id, int i) const
    {
        const SimplexObject o = object(id);
        return this->id(o.dim - 1, base_.face(o.dim, i, o.simplex));
    }

    int degeneracy_object(int id, int j) const
    {
        const SimplexObject o = object(id);
        return this->id(o.dim + 1, base_.degeneracy(o.dim, j, o.simplex));
    }

    /// All morphisms a -> b.
    std::vector<MonotoneMap> morphisms(int a, int b) const
    {
        const SimplexObject oa = object(a), ob = object(b);
        std::vector<MonotoneMap> out;
        for (const MonotoneMap& p : enumerate_monotone(oa.dim, ob.dim))
            if (base_.act(p, ob.simplex) == oa.simplex)
                out.push_back(p);
        return out;
    }

    bool is_morphism(int a, int b, const MonotoneMap& p) const
    {
        const SimplexObject oa = object(a), ob = object(b);
        return p.dom() == oa.dim && p.cod() == ob.dim && base_.act(p, ob.simplex) == oa.simplex;
    }

    /// The source of p when p ends at b.
    int source_of(const MonotoneMap& p, int b) const
    {
        const SimplexObject ob = object(b);
        return id(p.dom(), base_.act(p, ob.simplex));
    }

private:
    SimplicialSet base_;
    std::vector<int> offset_;
};

struct SimplexColimit {
    SimplicialSet colimit;
    SimplicialMap comparison; ///< colimit -> K, an isomorphism
};

/// Colimit of (n, sigma) |-> Delta^n over the truncated category of simplices,
/// computed as a coequalizer over the generating morphisms.
inline SimplexColimit colimit_over_simplices(const SimplicialSet& K)
{
    const SimplexCategory cat(K);
    const int D = K.dim_bound();
    std::vector<SimplicialSet> parts;
    for (int o = 0; o < cat.num_objects(); ++o)
        parts.push_back(standard_simplex(cat.object(o).dim, D));
    Coproduct co = coproduct(parts, D);
    std::vector<std::vector<std::pair<int, int>>> pairs(D + 1);
    auto identify = [&](int small, int big, const MonotoneMap& p) {
        const SimplicialMap dp = simplex_map(p, D);
        for (int k = 0; k <= D; ++k)
            for (int q = 0; q < parts[small].count(k); ++q)
                pairs[k].emplace_back(co.legs[small](k, q), co.legs[big](k, dp(k, q)));
    };
    for (int o = 0; o < cat.num_objects(); ++o) {
        const SimplexObject ob = cat.object(o);
        if (ob.dim > 0)
            for (int i = 0; i <= ob.dim; ++i)
                identify(cat.face_object(o, i), o, face(ob.dim, i));
        if (ob.dim < D)
            for (int j = 0; j <= ob.dim; ++j)
                identify(cat.degeneracy_object(o, j), o, degeneracy(ob.dim, j));
    }
    const SimplicialMap q = quotient(co.object, pairs);
    std::vector<std::vector<int>> lv(D + 1);
    for (int k = 0; k <= D; ++k)
        lv[k].assign(q.target().count(k), -1);
    for (int o = 0; o < cat.num_objects(); ++o) {
        const SimplexObject ob = cat.object(o);
        for (int k = 0; k <= D; ++k) {
            const auto simplices = enumerate_monotone(k, ob.dim);
            for (int s = 0; s < static_cast<int>(simplices.size()); ++s) {
                int& slot = lv[k][q(k, co.legs[o](k, s))];
                const int value = K.act(simplices[s], ob.simplex);
                if (slot >= 0 && slot != value)
                    throw std::logic_error("colimit_over_simplices: comparison not well defined");
                slot = value;
            }
        }
    }
    SimplicialMap comparison(q.target(), K, std::move(lv));
    comparison.validate();
    return {q.target(), std::move(comparison)};
}

} // namespace sset
