#pragma once

// Constructed instances of the anodyne triangle and cube lemmas, with every
// anodyne input built from horn pushouts.

#include "sset/sset.hpp"

#include <string>
#include <vector>

namespace anodyne {

using namespace sset;

/// The unique u with g . u = h, for a monomorphism g.
inline SimplicialMap factor_through(const SimplicialMap& g, const SimplicialMap& h)
{
    const int D = h.source().dim_bound();
    std::vector<std::vector<int>> lv(D + 1);
    for (int n = 0; n <= D; ++n) {
        std::vector<int> inverse(g.target().count(n), -1);
        for (int y = 0; y < g.source().count(n); ++y)
            inverse[g(n, y)] = y;
        for (int x = 0; x < h.source().count(n); ++x) {
            const int y = inverse[h(n, x)];
            if (y < 0)
                throw std::invalid_argument("factor_through: image not contained in the subobject");
            lv[n].push_back(y);
        }
    }
    return SimplicialMap(h.source(), g.source(), lv);
}

/// The map out of a pushout determined by its two legs.
inline SimplicialMap copair(const Pushout& po, const SimplicialMap& u, const SimplicialMap& v)
{
    const int D = po.object.dim_bound();
    std::vector<std::vector<int>> lv(D + 1);
    for (int n = 0; n <= D; ++n) {
        lv[n].assign(po.object.count(n), -1);
        auto put = [&](const SimplicialMap& leg, const SimplicialMap& to) {
            for (int x = 0; x < leg.source().count(n); ++x) {
                int& slot = lv[n][leg(n, x)];
                if (slot >= 0 && slot != to(n, x))
                    throw std::invalid_argument("copair: legs disagree on the pushout");
                slot = to(n, x);
            }
        };
        put(po.leg_x, u);
        put(po.leg_y, v);
    }
    return SimplicialMap(po.object, u.target(), lv);
}

/// Attaches Delta^n along some map of Lambda^n_k, preferring nondegenerate horn edges.
inline Pushout attach_some_horn(const SimplicialSet& X, int n, int k, int vertex = 0)
{
    const SimplicialSet L = horn(n, k, X.dim_bound());
    const auto maps = all_maps(L, X);
    const SimplicialMap* pick = nullptr;
    for (const SimplicialMap& m : maps) {
        bool ok = m(0, 0) == vertex || n > 1;
        for (int e = 0; n > 1 && e < L.count(1); ++e)
            ok = ok && (L.is_degenerate(1, e) || !X.is_degenerate(1, m(1, e)));
        if (ok) {
            pick = &m;
            break;
        }
    }
    if (!pick)
        pick = &maps.front();
    return attach_horn(*pick, n, k);
}

/// A whisker at `vertex`, or a 2-simplex filling some inner or outer horn.
inline Pushout grow(const SimplicialSet& X, int step)
{
    switch (step % 3) {
    case 0:
        return attach_some_horn(X, 1, 0, 0);
    case 1:
        return attach_some_horn(X, 2, 1);
    default:
        return attach_some_horn(X, 2, 0);
    }
}

/// X -> grow(grow(...X)): a composite of horn pushouts.
inline SimplicialMap grown(const SimplicialSet& X, const std::vector<int>& steps)
{
    SimplicialMap f = SimplicialMap::identity(X);
    for (int s : steps)
        f = compose(grow(f.target(), s).leg_x, f);
    return f;
}

inline bool horn_certified(const SimplicialMap& f)
{
    const AnodyneCertificate c = horn_expansion(f);
    return c.complete && replay(c, f);
}

inline bool homology_equivalence(const SimplicialMap& g)
{
    for (int k = 0; k < g.target().dim_bound(); ++k)
        if (!(homology(g.source(), k) == homology(g.target(), k)))
            return false;
    return true;
}

/// Mono, homology equivalence and bijection on components.
inline bool shadow(const SimplicialMap& g)
{
    return g.is_mono() && homology_equivalence(g) && pi0_bijective(g) && anodyne_shadow(g);
}

// ---------------------------------------------------------------------------
// Triangles X -f-> Y -g-> Z with h = g . f

struct Triangle {
    std::string name;
    SimplicialMap f, g, h;
};

inline SimplexRef face_of(int n, std::vector<int> vs)
{
    const int d = static_cast<int>(vs.size()) - 1;
    return {d, simplex_index(MonotoneMap(n, std::move(vs)))};
}

/// X in Y in Z, all subcomplexes of Delta^n generated by vertex lists.
inline Triangle nested(const std::string& name, int n, const std::vector<std::vector<int>>& x,
                       const std::vector<std::vector<int>>& y, const std::vector<std::vector<int>>& z)
{
    const SimplicialSet S = standard_simplex(n, n);
    auto sub = [&](const std::vector<std::vector<int>>& gens) {
        std::vector<SimplexRef> refs;
        for (const auto& g : gens)
            refs.push_back(face_of(n, g));
        return Subcomplex::generated_by(S, refs).inclusion();
    };
    const SimplicialMap ix = sub(x), iy = sub(y), iz = sub(z);
    const SimplicialMap f = factor_through(iy, ix);
    const SimplicialMap g = factor_through(iz, iy);
    return {name, f, g, compose(g, f)};
}

inline std::vector<Triangle> triangles()
{
    std::vector<Triangle> out{
        nested("edge in triangle", 2, {{0}}, {{0, 1}}, {{0, 1, 2}}),
        nested("inner horn in triangle", 2, {{0}}, {{0, 1}, {1, 2}}, {{0, 1, 2}}),
        nested("outer horn in triangle", 2, {{1}}, {{0, 1}, {0, 2}}, {{0, 1, 2}}),
        nested("face in tetrahedron", 3, {{0}}, {{0, 1, 2}}, {{0, 1, 2, 3}}),
        nested("outer 3-horn", 3, {{0}}, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}}, {{0, 1, 2, 3}}),
        nested("two faces on an edge", 3, {{0, 1}}, {{0, 1, 2}, {1, 2, 3}}, {{0, 1, 2, 3}}),
        nested("spine", 3, {{0}}, {{0, 1}, {1, 2}, {2, 3}}, {{0, 1, 2, 3}}),
        nested("two faces on a diagonal", 3, {{0, 2}}, {{0, 1, 2}, {0, 2, 3}}, {{0, 1, 2, 3}}),
        nested("face in an inner horn", 3, {{0}}, {{0, 1, 2}}, {{0, 1, 2}, {0, 1, 3}, {1, 2, 3}}),
        nested("two faces in an inner horn", 3, {{1}}, {{0, 1, 2}, {1, 2, 3}}, {{0, 1, 2}, {0, 1, 3}, {1, 2, 3}}),
    };
    // one triangle from horn pushouts on a non-simplex: the circle with whiskers and fillers
    const SimplicialSet C = pushout(to_point(boundary(1, 2)), boundary_inclusion(1, 2)).object;
    const SimplicialMap f = grown(C, {0, 1});
    const SimplicialMap g = grown(f.target(), {2, 0});
    out.push_back({"grown circle", f, g, compose(g, f)});
    return out;
}

// ---------------------------------------------------------------------------
// Cubes: back face A0 A1 A2 A3, front face B0 B1 B2 B3, both pushouts

struct Cube {
    std::string name;
    SimplicialMap f0, f1, f2, f3;
    SimplicialMap f01; ///< B0 +_{A0} A1 -> B1
};

/// a1 : A0 -> A1 and a2 : A0 -> A2; the f's grow by the given horn steps.
inline Cube cube(const std::string& name, const SimplicialMap& a1, const SimplicialMap& a2,
                 const std::vector<int>& s0, const std::vector<int>& s01, const std::vector<int>& s2)
{
    const SimplicialMap f0 = grown(a1.source(), s0);
    const Pushout b1p = pushout(f0, a1); // B0 +_{A0} A1
    const SimplicialMap f01 = grown(b1p.object, s01);
    const SimplicialMap f1 = compose(f01, b1p.leg_y);
    const SimplicialMap b0_b1 = compose(f01, b1p.leg_x);

    const Pushout b2p = pushout(f0, a2);
    const SimplicialMap grow2 = grown(b2p.object, s2);
    const SimplicialMap f2 = compose(grow2, b2p.leg_y);
    const SimplicialMap b0_b2 = compose(grow2, b2p.leg_x);

    const Pushout A3 = pushout(a1, a2);
    const Pushout B3 = pushout(b0_b1, b0_b2);
    const SimplicialMap f3 = copair(A3, compose(B3.leg_x, f1), compose(B3.leg_y, f2));
    return {name, f0, f1, f2, f3, f01};
}

inline std::vector<Cube> cubes()
{
    const int D = 2;
    const SimplicialMap v0 = classifying_map(standard_simplex(1, D), 0, 0);
    const SimplicialMap v1 = classifying_map(standard_simplex(1, D), 0, 1);
    const SimplicialMap ends = boundary_inclusion(1, D);
    const SimplicialSet tri = boundary(2, D);
    const SimplicialMap tri_edge = factor_through(boundary_inclusion(2, D),
                                                  classifying_map(standard_simplex(2, D), 1, simplex_edge(2, 0, 1)));
    const SimplicialMap tri_ends = compose(tri_edge, ends);
    const SimplicialMap pt_tri = classifying_map(tri, 0, 0);
    const SimplicialMap pt = SimplicialMap::identity(point(D));
    return {
        cube("point, whiskers", pt, pt, {0}, {0}, {0}),
        cube("vertex into edges", v0, v0, {0}, {1}, {0}),
        cube("edge ends glued to a circle", ends, ends, {0}, {0}, {0}),
        cube("two ends of an edge", v0, v1, {0, 1}, {0}, {2}),
        cube("vertex into a hollow triangle", pt_tri, v0, {0}, {1, 0}, {0}),
        cube("ends into triangle and edge", tri_ends, ends, {0}, {0}, {1}),
        cube("edge along a triangle side", tri_edge, tri_edge, {0}, {2}, {0}),
        cube("ends with fillers", ends, tri_ends, {0, 1}, {0, 2}, {0, 1}),
        cube("vertex and edge", pt_tri, pt_tri, {0, 0}, {1}, {2}),
        cube("two vertices, mixed horns", v1, v0, {0, 2}, {0}, {0, 1}),
    };
}

} // namespace anodyne
