#pragma once

// Standard complexes and finite (co)limits of truncated simplicial sets.

#include "extension.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace sset {

/// Delta^n truncated at D; k-simplices are enumerate_monotone(k, n) in order.
inline SimplicialSet standard_simplex(int n, int D)
{
    if (n < 0 || D < 0)
        throw std::invalid_argument("standard_simplex: negative argument");
    std::vector<std::vector<std::vector<int>>> keys(D + 1);
    for (int k = 0; k <= D; ++k)
        for (const MonotoneMap& f : enumerate_monotone(k, n))
            keys[k].emplace_back(f.values().begin(), f.values().end());
    auto face_of = [n](int k, int i, const std::vector<int>& key) {
        const MonotoneMap r = compose(MonotoneMap(n, key), face(k, i));
        return std::vector<int>(r.values().begin(), r.values().end());
    };
    auto degeneracy_of = [n](int k, int j, const std::vector<int>& key) {
        const MonotoneMap r = compose(MonotoneMap(n, key), degeneracy(k, j));
        return std::vector<int>(r.values().begin(), r.values().end());
    };
    return build_from_keys(D, keys, face_of, degeneracy_of);
}

/// Index of the k-simplex q : [k] -> [n] in standard_simplex(n, D).
inline int simplex_index(const MonotoneMap& q)
{
    const auto all = enumerate_monotone(q.dom(), q.cod());
    return static_cast<int>(std::lower_bound(all.begin(), all.end(), q) - all.begin());
}

/// The top simplex id_[n] of Delta^n, or -1 when n exceeds the bound.
inline int top_simplex(int n, int D) { return n <= D ? simplex_index(MonotoneMap::identity(n)) : -1; }

/// Delta^0 truncated at D.
inline SimplicialSet point(int D) { return standard_simplex(0, D); }

/// The simplicial map Delta^p : Delta^n -> Delta^m induced by p : [n] -> [m].
inline SimplicialMap simplex_map(const MonotoneMap& p, int D)
{
    const SimplicialSet src = standard_simplex(p.dom(), D);
    const SimplicialSet tgt = standard_simplex(p.cod(), D);
    std::vector<std::vector<int>> lv(D + 1);
    for (int k = 0; k <= D; ++k)
        for (const MonotoneMap& q : enumerate_monotone(k, p.dom()))
            lv[k].push_back(simplex_index(compose(p, q)));
    return SimplicialMap(src, tgt, std::move(lv));
}

/// Simplices of Delta^n whose image misses some vertex other than `spare`.
/// spare = -1 gives the boundary.
inline Subcomplex horn_subcomplex(int n, int spare, int D)
{
    const SimplicialSet S = standard_simplex(n, D);
    Subcomplex sub(S);
    for (int k = 0; k <= D; ++k) {
        const auto maps = enumerate_monotone(k, n);
        for (int x = 0; x < static_cast<int>(maps.size()); ++x) {
            std::vector<char> hit(n + 1, 0);
            for (int v : maps[x].values())
                hit[v] = 1;
            bool misses = false;
            for (int v = 0; v <= n; ++v)
                if (!hit[v] && v != spare)
                    misses = true;
            if (misses)
                sub.add_closure(k, x);
        }
    }
    return sub;
}

/// Boundary inclusion of Delta^n at bound D (n >= 0; the boundary of Delta^0 is empty).
inline SimplicialMap boundary_inclusion(int n, int D)
{
    if (n < 0)
        throw std::invalid_argument("boundary: n must be >= 0");
    return horn_subcomplex(n, -1, D).inclusion();
}

inline SimplicialSet boundary(int n, int D) { return boundary_inclusion(n, D).source(); }

/// Inclusion of the horn Lambda^n_k into Delta^n at bound D.
inline SimplicialMap horn_inclusion(int n, int k, int D)
{
    if (n < 1 || k < 0 || k > n)
        throw std::invalid_argument("horn: need n >= 1 and 0 <= k <= n");
    return horn_subcomplex(n, k, D).inclusion();
}

inline SimplicialSet horn(int n, int k, int D) { return horn_inclusion(n, k, D).source(); }

/// Product with (x, y) in dimension n at index x * |Y_n| + y.
inline SimplicialSet product(const SimplicialSet& X, const SimplicialSet& Y)
{
    if (X.dim_bound() != Y.dim_bound())
        throw std::invalid_argument("product: dimension bounds differ");
    const int D = X.dim_bound();
    std::vector<int> counts(D + 1);
    for (int n = 0; n <= D; ++n)
        counts[n] = X.count(n) * Y.count(n);
    std::vector<std::vector<SimplicialSet::Table>> faces(D + 1), degens(D + 1);
    for (int n = 1; n <= D; ++n) {
        faces[n].assign(n + 1, SimplicialSet::Table(counts[n]));
        for (int i = 0; i <= n; ++i)
            for (int x = 0; x < X.count(n); ++x)
                for (int y = 0; y < Y.count(n); ++y)
                    faces[n][i][x * Y.count(n) + y] =
                        X.face(n, i, x) * Y.count(n - 1) + Y.face(n, i, y);
    }
    for (int n = 0; n < D; ++n) {
        degens[n].assign(n + 1, SimplicialSet::Table(counts[n]));
        for (int j = 0; j <= n; ++j)
            for (int x = 0; x < X.count(n); ++x)
                for (int y = 0; y < Y.count(n); ++y)
                    degens[n][j][x * Y.count(n) + y] =
                        X.degeneracy(n, j, x) * Y.count(n + 1) + Y.degeneracy(n, j, y);
    }
    return SimplicialSet(D, std::move(counts), std::move(faces), std::move(degens));
}

inline SimplicialMap product_projection(const SimplicialSet& X, const SimplicialSet& Y, int which)
{
    const SimplicialSet P = product(X, Y);
    std::vector<std::vector<int>> lv(X.dim_bound() + 1);
    for (int n = 0; n <= X.dim_bound(); ++n)
        for (int x = 0; x < X.count(n); ++x)
            for (int y = 0; y < Y.count(n); ++y)
                lv[n].push_back(which == 0 ? x : y);
    return SimplicialMap(P, which == 0 ? X : Y, std::move(lv));
}

/// f x g between products.
inline SimplicialMap product_map(const SimplicialMap& f, const SimplicialMap& g)
{
    const SimplicialSet src = product(f.source(), g.source());
    const SimplicialSet tgt = product(f.target(), g.target());
    const int D = src.dim_bound();
    std::vector<std::vector<int>> lv(D + 1);
    for (int n = 0; n <= D; ++n) {
        lv[n].resize(src.count(n));
        const int gy = g.source().count(n), ty = g.target().count(n);
        for (int x = 0; x < f.source().count(n); ++x)
            for (int y = 0; y < gy; ++y)
                lv[n][x * gy + y] = f(n, x) * ty + g(n, y);
    }
    return SimplicialMap(src, tgt, std::move(lv));
}

/// The pairing (f, g) : W -> X x Y.
inline SimplicialMap pairing(const SimplicialMap& f, const SimplicialMap& g)
{
    if (!(f.source() == g.source()))
        throw std::invalid_argument("pairing: sources differ");
    const SimplicialSet tgt = product(f.target(), g.target());
    std::vector<std::vector<int>> lv(tgt.dim_bound() + 1);
    for (int n = 0; n <= tgt.dim_bound(); ++n)
        for (int w = 0; w < f.source().count(n); ++w)
            lv[n].push_back(f(n, w) * g.target().count(n) + g(n, w));
    return SimplicialMap(f.source(), tgt, std::move(lv));
}

/// Disjoint union with the pieces laid out consecutively in every dimension.
struct Coproduct {
    SimplicialSet object;
    std::vector<SimplicialMap> legs;
};

inline Coproduct coproduct(const std::vector<SimplicialSet>& parts, int D)
{
    std::vector<int> counts(D + 1, 0);
    std::vector<std::vector<int>> offset(parts.size(), std::vector<int>(D + 1));
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (parts[p].dim_bound() != D)
            throw std::invalid_argument("coproduct: dimension bounds differ");
        for (int n = 0; n <= D; ++n) {
            offset[p][n] = counts[n];
            counts[n] += parts[p].count(n);
        }
    }
    std::vector<std::vector<SimplicialSet::Table>> faces(D + 1), degens(D + 1);
    for (int n = 1; n <= D; ++n) {
        faces[n].assign(n + 1, SimplicialSet::Table(counts[n]));
        for (int i = 0; i <= n; ++i)
            for (std::size_t p = 0; p < parts.size(); ++p)
                for (int x = 0; x < parts[p].count(n); ++x)
                    faces[n][i][offset[p][n] + x] = offset[p][n - 1] + parts[p].face(n, i, x);
    }
    for (int n = 0; n < D; ++n) {
        degens[n].assign(n + 1, SimplicialSet::Table(counts[n]));
        for (int j = 0; j <= n; ++j)
            for (std::size_t p = 0; p < parts.size(); ++p)
                for (int x = 0; x < parts[p].count(n); ++x)
                    degens[n][j][offset[p][n] + x] =
                        offset[p][n + 1] + parts[p].degeneracy(n, j, x);
    }
    Coproduct out{SimplicialSet(D, std::move(counts), std::move(faces), std::move(degens)), {}};
    for (std::size_t p = 0; p < parts.size(); ++p) {
        std::vector<std::vector<int>> lv(D + 1);
        for (int n = 0; n <= D; ++n)
            for (int x = 0; x < parts[p].count(n); ++x)
                lv[n].push_back(offset[p][n] + x);
        out.legs.emplace_back(parts[p], out.object, std::move(lv));
    }
    return out;
}

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return;
        if (a < b)
            parent[b] = a;
        else
            parent[a] = b;
    }
};

} // namespace detail

/// Quotient of X by the equivalence relation generated by the given pairs.
/// The pairs must be closed under faces and degeneracies (pairs coming from
/// two maps out of a common source are). Classes are numbered by their
/// smallest member.
inline SimplicialMap quotient(const SimplicialSet& X,
                              const std::vector<std::vector<std::pair<int, int>>>& pairs)
{
    const int D = X.dim_bound();
    std::vector<std::vector<int>> cls(D + 1);
    std::vector<int> counts(D + 1);
    std::vector<std::vector<int>> rep(D + 1);
    for (int n = 0; n <= D; ++n) {
        detail::UnionFind uf(X.count(n));
        if (n < static_cast<int>(pairs.size()))
            for (auto [a, b] : pairs[n])
                uf.unite(a, b);
        cls[n].assign(X.count(n), -1);
        for (int x = 0; x < X.count(n); ++x) {
            const int r = uf.find(x);
            if (cls[n][r] < 0) {
                cls[n][r] = counts[n]++;
                rep[n].push_back(r);
            }
            cls[n][x] = cls[n][r];
        }
    }
    std::vector<std::vector<SimplicialSet::Table>> faces(D + 1), degens(D + 1);
    for (int n = 1; n <= D; ++n) {
        faces[n].assign(n + 1, SimplicialSet::Table(counts[n]));
        for (int i = 0; i <= n; ++i)
            for (int c = 0; c < counts[n]; ++c)
                faces[n][i][c] = cls[n - 1][X.face(n, i, rep[n][c])];
    }
    for (int n = 0; n < D; ++n) {
        degens[n].assign(n + 1, SimplicialSet::Table(counts[n]));
        for (int j = 0; j <= n; ++j)
            for (int c = 0; c < counts[n]; ++c)
                degens[n][j][c] = cls[n + 1][X.degeneracy(n, j, rep[n][c])];
    }
    SimplicialSet Q(D, std::move(counts), std::move(faces), std::move(degens));
    SimplicialMap proj(X, Q, std::move(cls));
    proj.validate();
    return proj;
}

struct Pushout {
    SimplicialSet object;
    SimplicialMap leg_x; ///< X -> P
    SimplicialMap leg_y; ///< Y -> P
};

/// Pushout of X <- A -> Y.
inline Pushout pushout(const SimplicialMap& f, const SimplicialMap& g)
{
    if (!(f.source() == g.source()))
        throw std::invalid_argument("pushout: maps have different sources");
    const int D = f.source().dim_bound();
    if (f.target().dim_bound() != D || g.target().dim_bound() != D)
        throw std::invalid_argument("pushout: dimension bounds differ");
    Coproduct co = coproduct({f.target(), g.target()}, D);
    std::vector<std::vector<std::pair<int, int>>> pairs(D + 1);
    for (int n = 0; n <= D; ++n)
        for (int a = 0; a < f.source().count(n); ++a)
            pairs[n].emplace_back(co.legs[0](n, f(n, a)), co.legs[1](n, g(n, a)));
    SimplicialMap q = quotient(co.object, pairs);
    return {q.target(), compose(q, co.legs[0]), compose(q, co.legs[1])};
}

struct Pullback {
    SimplicialSet object;
    SimplicialMap leg_x; ///< P -> X
    SimplicialMap leg_y; ///< P -> Y
};

/// Pullback of X -> S <- Y; simplices (x, y) in lexicographic order.
inline Pullback pullback(const SimplicialMap& f, const SimplicialMap& g)
{
    if (!(f.target() == g.target()))
        throw std::invalid_argument("pullback: maps have different targets");
    const int D = f.target().dim_bound();
    const SimplicialSet& X = f.source();
    const SimplicialSet& Y = g.source();
    std::vector<std::vector<std::vector<int>>> keys(D + 1);
    for (int n = 0; n <= D; ++n)
        for (int x = 0; x < X.count(n); ++x)
            for (int y = 0; y < Y.count(n); ++y)
                if (f(n, x) == g(n, y))
                    keys[n].push_back({x, y});
    auto face_of = [&](int n, int i, const std::vector<int>& k) {
        return std::vector<int>{X.face(n, i, k[0]), Y.face(n, i, k[1])};
    };
    auto degeneracy_of = [&](int n, int j, const std::vector<int>& k) {
        return std::vector<int>{X.degeneracy(n, j, k[0]), Y.degeneracy(n, j, k[1])};
    };
    SimplicialSet P = build_from_keys(D, keys, face_of, degeneracy_of);
    std::vector<std::vector<int>> lx(D + 1), ly(D + 1);
    for (int n = 0; n <= D; ++n)
        for (const auto& k : keys[n]) {
            lx[n].push_back(k[0]);
            ly[n].push_back(k[1]);
        }
    return {P, SimplicialMap(P, X, std::move(lx)), SimplicialMap(P, Y, std::move(ly))};
}

/// The unique map to the point.
inline SimplicialMap to_point(const SimplicialSet& X)
{
    std::vector<std::vector<int>> lv(X.dim_bound() + 1);
    for (int n = 0; n <= X.dim_bound(); ++n)
        lv[n].assign(X.count(n), 0);
    return SimplicialMap(X, point(X.dim_bound()), std::move(lv));
}

/// The unique map out of the empty simplicial set.
inline SimplicialMap from_empty(const SimplicialSet& X)
{
    return SimplicialMap(SimplicialSet::empty(X.dim_bound()), X,
                         std::vector<std::vector<int>>(X.dim_bound() + 1));
}

/// The map Delta^n -> X classifying the n-simplex x (bound of X).
inline SimplicialMap classifying_map(const SimplicialSet& X, int n, int x)
{
    const int D = X.dim_bound();
    std::vector<std::vector<int>> lv(D + 1);
    for (int k = 0; k <= D; ++k)
        for (const MonotoneMap& q : enumerate_monotone(k, n))
            lv[k].push_back(X.act(q, x));
    return SimplicialMap(standard_simplex(n, D), X, std::move(lv));
}

/// Right cone X * Delta^0 truncated at the bound of X.
///
/// An n-simplex is a pair (i, x) with x in X_i, -1 <= i <= n, followed by n - i
/// copies of the cone point. Simplices with i = n are listed first in the
/// order of X_n, so the inclusion of X is the identity on indices.
struct Cone {
    SimplicialSet object;
    SimplicialMap inclusion;
    int cone_point = 0; ///< vertex index
};

inline Cone right_cone(const SimplicialSet& X)
{
    const int D = X.dim_bound();
    std::vector<std::vector<std::vector<int>>> keys(D + 1);
    for (int n = 0; n <= D; ++n) {
        for (int x = 0; x < X.count(n); ++x)
            keys[n].push_back({n, x});
        for (int i = n - 1; i >= 0; --i)
            for (int x = 0; x < X.count(i); ++x)
                keys[n].push_back({i, x});
        keys[n].push_back({-1, 0});
    }
    auto face_of = [&](int, int k, const std::vector<int>& key) -> std::vector<int> {
        const int i = key[0];
        if (k <= i) {
            if (i == 0)
                return {-1, 0};
            return {i - 1, X.face(i, k, key[1])};
        }
        return key;
    };
    auto degeneracy_of = [&](int, int k, const std::vector<int>& key) -> std::vector<int> {
        const int i = key[0];
        if (k <= i)
            return {i + 1, X.degeneracy(i, k, key[1])};
        return key;
    };
    SimplicialSet C = build_from_keys(D, keys, face_of, degeneracy_of);
    std::vector<std::vector<int>> lv(D + 1);
    for (int n = 0; n <= D; ++n) {
        lv[n].resize(X.count(n));
        std::iota(lv[n].begin(), lv[n].end(), 0);
    }
    const int cp = X.count(0);
    return {C, SimplicialMap(X, C, std::move(lv)), cp};
}

/// Index of the simplex (i, x) of dimension n in right_cone(X).
inline int cone_simplex(const SimplicialSet& X, int n, int i, int x)
{
    if (i == n)
        return x;
    int idx = X.count(n);
    for (int k = n - 1; k > i; --k)
        idx += X.count(k);
    if (i < 0)
        return idx;
    return idx + x;
}

/// f * Delta^0 : X cone -> Y cone.
inline SimplicialMap cone_map(const SimplicialMap& f)
{
    const SimplicialSet& X = f.source();
    const SimplicialSet& Y = f.target();
    const Cone cx = right_cone(X), cy = right_cone(Y);
    const int D = X.dim_bound();
    std::vector<std::vector<int>> lv(D + 1);
    for (int n = 0; n <= D; ++n) {
        for (int x = 0; x < X.count(n); ++x)
            lv[n].push_back(cone_simplex(Y, n, n, f(n, x)));
        for (int i = n - 1; i >= 0; --i)
            for (int x = 0; x < X.count(i); ++x)
                lv[n].push_back(cone_simplex(Y, n, i, f(i, x)));
        lv[n].push_back(cone_simplex(Y, n, -1, 0));
    }
    return SimplicialMap(cx.object, cy.object, std::move(lv));
}

/// Re-truncation: drops simplices above D', or adds only degenerate simplices
/// (the skeletal extension) when D' exceeds the current bound.
inline SimplicialSet retruncate(const SimplicialSet& X, int D2)
{
    const int D = X.dim_bound();
    if (D2 <= D) {
        std::vector<int> counts(X.counts().begin(), X.counts().begin() + D2 + 1);
        std::vector<std::vector<SimplicialSet::Table>> faces(D2 + 1), degens(D2 + 1);
        for (int n = 1; n <= D2; ++n)
            for (int i = 0; i <= n; ++i)
                faces[n].push_back(X.face_table(n, i));
        for (int n = 0; n < D2; ++n)
            for (int j = 0; j <= n; ++j)
                degens[n].push_back(X.degeneracy_table(n, j));
        return SimplicialSet(D2, std::move(counts), std::move(faces), std::move(degens));
    }
    // Keys: dimension <= D: {x}. Above: {k, x, epi values...} for x nondegenerate in X_k.
    std::vector<std::vector<std::vector<int>>> keys(D2 + 1);
    for (int n = 0; n <= D; ++n)
        for (int x = 0; x < X.count(n); ++x)
            keys[n].push_back({x});
    for (int n = D + 1; n <= D2; ++n)
        for (int k = 0; k <= D; ++k)
            for (int x : X.nondegenerate(k))
                for (const MonotoneMap& e : enumerate_monotone(n, k))
                    if (e.is_surjective()) {
                        std::vector<int> key{k, x};
                        key.insert(key.end(), e.values().begin(), e.values().end());
                        keys[n].push_back(std::move(key));
                    }
    // Normal form of X(p)(x) for x nondegenerate in X_k and p : [n] -> [k].
    auto normal = [&](int n, const MonotoneMap& p, int x) -> std::vector<int> {
        if (n <= D)
            return {X.act(p, x)};
        auto [epi, mono] = epi_mono_factorize(p);
        const int y = X.act(mono, x);
        auto [e2, root] = X.ez_normalize(mono.dom(), y);
        const MonotoneMap total = compose(e2, epi);
        std::vector<int> key{root.dim, root.index};
        key.insert(key.end(), total.values().begin(), total.values().end());
        return key;
    };
    auto decode = [&](int n, const std::vector<int>& key) -> std::pair<MonotoneMap, SimplexRef> {
        if (n <= D) {
            auto [e, r] = X.ez_normalize(n, key[0]);
            return {e, r};
        }
        return {MonotoneMap(key[0], std::vector<int>(key.begin() + 2, key.end())),
                SimplexRef{key[0], key[1]}};
    };
    auto face_of = [&](int n, int i, const std::vector<int>& key) {
        if (n <= D)
            return std::vector<int>{X.face(n, i, key[0])};
        auto [e, r] = decode(n, key);
        return normal(n - 1, compose(e, face(n, i)), r.index);
    };
    auto degeneracy_of = [&](int n, int j, const std::vector<int>& key) {
        if (n < D)
            return std::vector<int>{X.degeneracy(n, j, key[0])};
        auto [e, r] = decode(n, key);
        return normal(n + 1, compose(e, degeneracy(n, j)), r.index);
    };
    return build_from_keys(D2, keys, face_of, degeneracy_of);
}

/// Re-truncation of a map (see retruncate).
inline SimplicialMap retruncate(const SimplicialMap& f, int D2)
{
    const SimplicialSet X = retruncate(f.source(), D2);
    const SimplicialSet Y = retruncate(f.target(), D2);
    const int D = f.source().dim_bound();
    std::vector<std::vector<int>> lv(D2 + 1);
    for (int n = 0; n <= std::min(D, D2); ++n)
        lv[n] = f.levels()[n];
    if (D2 > D) {
        // Simplices above D are determined by their faces down to dimension D;
        // extend through the search engine with everything below pinned.
        std::vector<std::vector<int>> fixed(D2 + 1);
        for (int n = 0; n <= D2; ++n)
            fixed[n].assign(X.count(n), -1);
        for (int n = 0; n <= D; ++n)
            fixed[n] = f.levels()[n];
        ExtensionProblem p{X, Y, fixed, {}, false};
        ExtensionResult r = find_extension(p, 10'000'000);
        if (!r.map)
            throw std::logic_error("retruncate: map does not extend");
        return *r.map;
    }
    return SimplicialMap(X, Y, std::move(lv));
}

} // namespace sset

namespace sset {

/// Ordered simplicial complex on vertices 0..v-1 given by its facets, truncated
/// at D. k-simplices are weakly increasing vertex sequences spanning a face.
inline SimplicialSet from_simplicial_complex(int vertices, const std::vector<std::vector<int>>& facets,
                                             int D)
{
    std::set<std::vector<int>> faces;
    for (auto f : facets) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        for (int v : f)
            if (v < 0 || v >= vertices)
                throw std::invalid_argument("from_simplicial_complex: vertex out of range");
        const int k = static_cast<int>(f.size());
        for (int mask = 1; mask < (1 << k); ++mask) {
            std::vector<int> sub;
            for (int b = 0; b < k; ++b)
                if (mask & (1 << b))
                    sub.push_back(f[b]);
            faces.insert(sub);
        }
    }
    for (int v = 0; v < vertices; ++v)
        faces.insert({v});
    std::vector<std::vector<std::vector<int>>> keys(D + 1);
    for (const auto& f : faces) {
        const int top = static_cast<int>(f.size()) - 1;
        for (int k = top; k <= D; ++k)
            for (const MonotoneMap& e : enumerate_monotone(k, top))
                if (e.is_surjective()) {
                    std::vector<int> key;
                    for (int t : e.values())
                        key.push_back(f[t]);
                    keys[k].push_back(std::move(key));
                }
    }
    for (auto& level : keys)
        std::sort(level.begin(), level.end());
    auto face_of = [](int, int i, std::vector<int> key) {
        key.erase(key.begin() + i);
        return key;
    };
    auto degeneracy_of = [](int, int j, std::vector<int> key) {
        key.insert(key.begin() + j, key[j]);
        return key;
    };
    return build_from_keys(D, keys, face_of, degeneracy_of);
}

} // namespace sset
