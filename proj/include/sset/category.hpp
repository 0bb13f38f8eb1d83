#pragma once

// Finite categories given by explicit composition tables, functors, natural
// transformations and the nerve.

#include "simplicial_set.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace sset {

class FiniteCategory {
public:
    struct Morphism {
        int src = 0;
        int tgt = 0;
        friend bool operator==(const Morphism&, const Morphism&) = default;
    };

    FiniteCategory() = default;

    /// compose[g][f] is the id of g . f, or -1 when tgt(f) != src(g).
    FiniteCategory(int objects, std::vector<Morphism> morphisms, std::vector<int> identities,
                   std::vector<std::vector<int>> compose)
        : objects_(objects), morphisms_(std::move(morphisms)), identities_(std::move(identities)),
          compose_(std::move(compose))
    {
        validate();
    }

    int num_objects() const { return objects_; }
    int num_morphisms() const { return static_cast<int>(morphisms_.size()); }
    int src(int m) const { return morphisms_.at(m).src; }
    int tgt(int m) const { return morphisms_.at(m).tgt; }
    int identity(int x) const { return identities_.at(x); }
    const std::vector<Morphism>& morphisms() const { return morphisms_; }
    const std::vector<int>& identities() const { return identities_; }

    /// g . f
    int compose(int g, int f) const
    {
        const int r = compose_.at(g).at(f);
        if (r < 0)
            throw std::invalid_argument("FiniteCategory::compose: morphisms not composable");
        return r;
    }

    bool is_identity(int m) const { return identities_[src(m)] == m; }

    std::vector<int> hom(int a, int b) const
    {
        std::vector<int> out;
        for (int m = 0; m < num_morphisms(); ++m)
            if (src(m) == a && tgt(m) == b)
                out.push_back(m);
        return out;
    }

    std::optional<int> inverse(int m) const
    {
        for (int g : hom(tgt(m), src(m)))
            if (compose(g, m) == identity(src(m)) && compose(m, g) == identity(tgt(m)))
                return g;
        return std::nullopt;
    }

    bool is_iso(int m) const { return inverse(m).has_value(); }

    void validate() const
    {
        const int M = num_morphisms();
        if (static_cast<int>(identities_.size()) != objects_)
            throw ValidationError("category: one identity per object required");
        if (static_cast<int>(compose_.size()) != M)
            throw ValidationError("category: composition table has wrong size");
        for (const auto& m : morphisms_)
            if (m.src < 0 || m.src >= objects_ || m.tgt < 0 || m.tgt >= objects_)
                throw ValidationError("category: morphism endpoint out of range");
        for (int x = 0; x < objects_; ++x) {
            const int e = identities_[x];
            if (e < 0 || e >= M || src(e) != x || tgt(e) != x)
                throw ValidationError("category: bad identity for object " + std::to_string(x));
        }
        for (int g = 0; g < M; ++g) {
            if (static_cast<int>(compose_[g].size()) != M)
                throw ValidationError("category: composition table has wrong size");
            for (int f = 0; f < M; ++f) {
                const int r = compose_[g][f];
                if (tgt(f) != src(g)) {
                    if (r != -1)
                        throw ValidationError("category: composite defined for non-composable pair");
                    continue;
                }
                if (r < 0 || r >= M || src(r) != src(f) || tgt(r) != tgt(g))
                    throw ValidationError("category: composite " + std::to_string(g) + "." +
                                          std::to_string(f) + " has wrong endpoints");
            }
        }
        for (int f = 0; f < M; ++f) {
            if (compose_[f][identities_[src(f)]] != f || compose_[identities_[tgt(f)]][f] != f)
                throw ValidationError("category: unit law fails for morphism " + std::to_string(f));
        }
        for (int f = 0; f < M; ++f)
            for (int g = 0; g < M; ++g) {
                if (tgt(f) != src(g))
                    continue;
                for (int h = 0; h < M; ++h) {
                    if (tgt(g) != src(h))
                        continue;
                    if (compose_[h][compose_[g][f]] != compose_[compose_[h][g]][f])
                        throw ValidationError("category: associativity fails at (" +
                                              std::to_string(h) + "," + std::to_string(g) + "," +
                                              std::to_string(f) + ")");
                }
            }
    }

    const std::vector<std::vector<int>>& composition_table() const { return compose_; }

    friend bool operator==(const FiniteCategory&, const FiniteCategory&) = default;

private:
    int objects_ = 0;
    std::vector<Morphism> morphisms_;
    std::vector<int> identities_;
    std::vector<std::vector<int>> compose_;
};

/// The poset on 0..n-1 given by a reflexive, transitive relation leq[a][b].
/// Morphisms are listed identities first, then the pairs a < b in lexicographic order.
inline FiniteCategory poset_category(const std::vector<std::vector<bool>>& leq)
{
    const int n = static_cast<int>(leq.size());
    std::vector<FiniteCategory::Morphism> mor;
    std::vector<std::vector<int>> id_of(n, std::vector<int>(n, -1));
    for (int a = 0; a < n; ++a) {
        if (!leq[a][a])
            throw std::invalid_argument("poset_category: relation not reflexive");
        id_of[a][a] = static_cast<int>(mor.size());
        mor.push_back({a, a});
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && leq[a][b]) {
                if (leq[b][a])
                    throw std::invalid_argument("poset_category: relation not antisymmetric");
                id_of[a][b] = static_cast<int>(mor.size());
                mor.push_back({a, b});
            }
    std::vector<int> ids(n);
    for (int a = 0; a < n; ++a)
        ids[a] = id_of[a][a];
    const int M = static_cast<int>(mor.size());
    std::vector<std::vector<int>> comp(M, std::vector<int>(M, -1));
    for (int g = 0; g < M; ++g)
        for (int f = 0; f < M; ++f)
            if (mor[f].tgt == mor[g].src) {
                const int r = id_of[mor[f].src][mor[g].tgt];
                if (r < 0)
                    throw std::invalid_argument("poset_category: relation not transitive");
                comp[g][f] = r;
            }
    return FiniteCategory(n, std::move(mor), std::move(ids), std::move(comp));
}

/// The totally ordered category [n] = {0 < 1 < ... < n}.
inline FiniteCategory ordinal_category(int n)
{
    std::vector<std::vector<bool>> leq(n + 1, std::vector<bool>(n + 1));
    for (int a = 0; a <= n; ++a)
        for (int b = a; b <= n; ++b)
            leq[a][b] = true;
    return poset_category(leq);
}

inline FiniteCategory terminal_category() { return ordinal_category(0); }

inline FiniteCategory arrow_category() { return ordinal_category(1); }

inline FiniteCategory discrete_category(int n)
{
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
    for (int a = 0; a < n; ++a)
        leq[a][a] = true;
    return poset_category(leq);
}

/// The contractible groupoid on n objects: exactly one morphism between any two.
/// Morphism a -> b has id a*n + b.
inline FiniteCategory indiscrete_category(int n)
{
    std::vector<FiniteCategory::Morphism> mor;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            mor.push_back({a, b});
    std::vector<int> ids(n);
    for (int a = 0; a < n; ++a)
        ids[a] = a * n + a;
    const int M = n * n;
    std::vector<std::vector<int>> comp(M, std::vector<int>(M, -1));
    for (int g = 0; g < M; ++g)
        for (int f = 0; f < M; ++f)
            if (mor[f].tgt == mor[g].src)
                comp[g][f] = mor[f].src * n + mor[g].tgt;
    return FiniteCategory(n, std::move(mor), std::move(ids), std::move(comp));
}

/// Two objects with a pair of mutually inverse isomorphisms.
inline FiniteCategory iso_pair_category() { return indiscrete_category(2); }

/// The cyclic group Z/k as a one-object category; morphism g is the residue g.
inline FiniteCategory cyclic_group_category(int k)
{
    if (k < 1)
        throw std::invalid_argument("cyclic_group_category: order must be positive");
    std::vector<FiniteCategory::Morphism> mor(k, {0, 0});
    std::vector<std::vector<int>> comp(k, std::vector<int>(k));
    for (int g = 0; g < k; ++g)
        for (int f = 0; f < k; ++f)
            comp[g][f] = (g + f) % k;
    return FiniteCategory(1, std::move(mor), {0}, std::move(comp));
}

/// Morphism (f, g) has id f * |B.morphisms| + g; object (a, b) has id a * |B.objects| + b.
inline FiniteCategory product_category(const FiniteCategory& A, const FiniteCategory& B)
{
    const int nb = B.num_objects();
    const int mb = B.num_morphisms();
    std::vector<FiniteCategory::Morphism> mor;
    for (int f = 0; f < A.num_morphisms(); ++f)
        for (int g = 0; g < mb; ++g)
            mor.push_back({A.src(f) * nb + B.src(g), A.tgt(f) * nb + B.tgt(g)});
    std::vector<int> ids(A.num_objects() * nb);
    for (int a = 0; a < A.num_objects(); ++a)
        for (int b = 0; b < nb; ++b)
            ids[a * nb + b] = A.identity(a) * mb + B.identity(b);
    const int M = static_cast<int>(mor.size());
    std::vector<std::vector<int>> comp(M, std::vector<int>(M, -1));
    for (int g = 0; g < M; ++g)
        for (int f = 0; f < M; ++f)
            if (mor[f].tgt == mor[g].src)
                comp[g][f] = A.compose(g / mb, f / mb) * mb + B.compose(g % mb, f % mb);
    return FiniteCategory(A.num_objects() * nb, std::move(mor), std::move(ids), std::move(comp));
}

inline FiniteCategory opposite_category(const FiniteCategory& C)
{
    std::vector<FiniteCategory::Morphism> mor;
    for (const auto& m : C.morphisms())
        mor.push_back({m.tgt, m.src});
    const int M = C.num_morphisms();
    std::vector<std::vector<int>> comp(M, std::vector<int>(M, -1));
    for (int g = 0; g < M; ++g)
        for (int f = 0; f < M; ++f)
            if (mor[f].tgt == mor[g].src)
                comp[g][f] = C.compose(f, g);
    return FiniteCategory(C.num_objects(), std::move(mor), C.identities(), std::move(comp));
}

/// Object and morphism tables of a functor between finite categories.
struct Functor {
    std::vector<int> on_objects;
    std::vector<int> on_morphisms;
    friend bool operator==(const Functor&, const Functor&) = default;
};

inline void validate_functor(const FiniteCategory& A, const FiniteCategory& B, const Functor& F)
{
    if (static_cast<int>(F.on_objects.size()) != A.num_objects() ||
        static_cast<int>(F.on_morphisms.size()) != A.num_morphisms())
        throw ValidationError("functor: table sizes do not match the source category");
    for (int x : F.on_objects)
        if (x < 0 || x >= B.num_objects())
            throw ValidationError("functor: object image out of range");
    for (int m = 0; m < A.num_morphisms(); ++m) {
        const int fm = F.on_morphisms[m];
        if (fm < 0 || fm >= B.num_morphisms())
            throw ValidationError("functor: morphism image out of range");
        if (B.src(fm) != F.on_objects[A.src(m)] || B.tgt(fm) != F.on_objects[A.tgt(m)])
            throw ValidationError("functor: morphism " + std::to_string(m) +
                                  " sent to a morphism with wrong endpoints");
    }
    for (int x = 0; x < A.num_objects(); ++x)
        if (F.on_morphisms[A.identity(x)] != B.identity(F.on_objects[x]))
            throw ValidationError("functor: identity of object " + std::to_string(x) +
                                  " not preserved");
    for (int g = 0; g < A.num_morphisms(); ++g)
        for (int f = 0; f < A.num_morphisms(); ++f)
            if (A.tgt(f) == A.src(g) &&
                F.on_morphisms[A.compose(g, f)] !=
                    B.compose(F.on_morphisms[g], F.on_morphisms[f]))
                throw ValidationError("functor: composite " + std::to_string(g) + "." +
                                      std::to_string(f) + " not preserved");
}

inline bool is_functor(const FiniteCategory& A, const FiniteCategory& B, const Functor& F)
{
    try {
        validate_functor(A, B, F);
        return true;
    } catch (const ValidationError&) {
        return false;
    }
}

inline Functor identity_functor(const FiniteCategory& A)
{
    Functor F;
    F.on_objects.resize(A.num_objects());
    F.on_morphisms.resize(A.num_morphisms());
    std::iota(F.on_objects.begin(), F.on_objects.end(), 0);
    std::iota(F.on_morphisms.begin(), F.on_morphisms.end(), 0);
    return F;
}

/// G after F.
inline Functor compose(const Functor& G, const Functor& F)
{
    Functor H;
    for (int x : F.on_objects)
        H.on_objects.push_back(G.on_objects.at(x));
    for (int m : F.on_morphisms)
        H.on_morphisms.push_back(G.on_morphisms.at(m));
    return H;
}

/// Components eta_x : F(x) -> G(x), indexed by objects of the source.
struct NaturalTransformation {
    std::vector<int> components;
    friend bool operator==(const NaturalTransformation&, const NaturalTransformation&) = default;
};

inline bool is_natural(const FiniteCategory& A, const FiniteCategory& B, const Functor& F,
                       const Functor& G, const NaturalTransformation& eta)
{
    if (static_cast<int>(eta.components.size()) != A.num_objects())
        return false;
    for (int x = 0; x < A.num_objects(); ++x) {
        const int c = eta.components[x];
        if (c < 0 || c >= B.num_morphisms() || B.src(c) != F.on_objects[x] ||
            B.tgt(c) != G.on_objects[x])
            return false;
    }
    for (int m = 0; m < A.num_morphisms(); ++m) {
        const int a = A.src(m), b = A.tgt(m);
        if (B.compose(G.on_morphisms[m], eta.components[a]) !=
            B.compose(eta.components[b], F.on_morphisms[m]))
            return false;
    }
    return true;
}

inline bool is_natural_iso(const FiniteCategory& A, const FiniteCategory& B, const Functor& F,
                           const Functor& G, const NaturalTransformation& eta)
{
    if (!is_natural(A, B, F, G, eta))
        return false;
    return std::all_of(eta.components.begin(), eta.components.end(),
                       [&](int c) { return B.is_iso(c); });
}

/// Backtracking search for a natural isomorphism F => G.
inline std::optional<NaturalTransformation> find_natural_iso(const FiniteCategory& A,
                                                             const FiniteCategory& B,
                                                             const Functor& F, const Functor& G)
{
    const int n = A.num_objects();
    std::vector<std::vector<int>> choices(n);
    for (int x = 0; x < n; ++x)
        for (int c : B.hom(F.on_objects[x], G.on_objects[x]))
            if (B.is_iso(c))
                choices[x].push_back(c);
    NaturalTransformation eta{std::vector<int>(n, -1)};
    auto consistent = [&](int upto) {
        for (int m = 0; m < A.num_morphisms(); ++m) {
            const int a = A.src(m), b = A.tgt(m);
            if (a > upto || b > upto)
                continue;
            if (B.compose(G.on_morphisms[m], eta.components[a]) !=
                B.compose(eta.components[b], F.on_morphisms[m]))
                return false;
        }
        return true;
    };
    std::function<bool(int)> rec = [&](int x) {
        if (x == n)
            return true;
        for (int c : choices[x]) {
            eta.components[x] = c;
            if (consistent(x) && rec(x + 1))
                return true;
        }
        eta.components[x] = -1;
        return false;
    };
    if (rec(0))
        return eta;
    return std::nullopt;
}

/// Nerve truncated at D. Vertex x is object x and edge m is morphism m; higher
/// simplices are composable chains (f_1, ..., f_n) in lexicographic order.
inline SimplicialSet nerve(const FiniteCategory& C, int D)
{
    std::vector<std::vector<std::vector<int>>> keys(D + 1);
    for (int x = 0; x < C.num_objects(); ++x)
        keys[0].push_back({x});
    if (D >= 1)
        for (int m = 0; m < C.num_morphisms(); ++m)
            keys[1].push_back({m});
    for (int n = 2; n <= D; ++n)
        for (const auto& chain : keys[n - 1])
            for (int m = 0; m < C.num_morphisms(); ++m)
                if (C.src(m) == C.tgt(chain.back())) {
                    auto next = chain;
                    next.push_back(m);
                    keys[n].push_back(std::move(next));
                }
    // Order chains lexicographically so indices do not depend on construction order.
    for (int n = 2; n <= D; ++n)
        std::sort(keys[n].begin(), keys[n].end());
    auto face_of = [&](int n, int i, const std::vector<int>& key) -> std::vector<int> {
        if (n == 1)
            return {i == 0 ? C.tgt(key[0]) : C.src(key[0])};
        std::vector<int> out;
        if (i == 0)
            out.assign(key.begin() + 1, key.end());
        else if (i == n)
            out.assign(key.begin(), key.end() - 1);
        else {
            for (int k = 0; k < n; ++k) {
                if (k == i - 1)
                    out.push_back(C.compose(key[i], key[i - 1]));
                else if (k != i)
                    out.push_back(key[k]);
            }
        }
        return out;
    };
    auto degeneracy_of = [&](int n, int j, const std::vector<int>& key) -> std::vector<int> {
        if (n == 0)
            return {C.identity(key[0])};
        const int vertex = j < n ? C.src(key[j]) : C.tgt(key[n - 1]);
        std::vector<int> out = key;
        out.insert(out.begin() + j, C.identity(vertex));
        return out;
    };
    return build_from_keys(D, keys, face_of, degeneracy_of);
}

/// The morphisms along the spine of a nerve simplex.
inline std::vector<int> nerve_chain(const SimplicialSet& N, int n, int x)
{
    std::vector<int> out;
    for (int k = 1; k <= n; ++k)
        out.push_back(N.act(MonotoneMap(n, {k - 1, k}), x));
    return out;
}

/// The simplicial map nerve(A) -> nerve(B) induced by a functor.
inline SimplicialMap nerve_map(const SimplicialSet& NA, const SimplicialSet& NB, const Functor& F)
{
    const int D = NA.dim_bound();
    std::vector<std::unordered_map<std::vector<int>, int, VectorHash>> index(D + 1);
    for (int n = 2; n <= D; ++n)
        for (int y = 0; y < NB.count(n); ++y)
            index[n].emplace(nerve_chain(NB, n, y), y);
    std::vector<std::vector<int>> lv(D + 1);
    for (int n = 0; n <= D; ++n)
        for (int x = 0; x < NA.count(n); ++x) {
            if (n == 0)
                lv[0].push_back(F.on_objects.at(x));
            else if (n == 1)
                lv[1].push_back(F.on_morphisms.at(x));
            else {
                std::vector<int> chain;
                for (int m : nerve_chain(NA, n, x))
                    chain.push_back(F.on_morphisms.at(m));
                lv[n].push_back(index[n].at(chain));
            }
        }
    return SimplicialMap(NA, NB, std::move(lv));
}

} // namespace sset
