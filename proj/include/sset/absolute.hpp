#pragma once

// Split squares and the squares they force to be (co)cartesian.
//
//   A  -d->  B  -s->  A
//   |i       |j       |i
//   A' -d'-> B' -s'-> A'
//
// with s d = id and s' d' = id. If j is mono the left square is a pullback,
// if j is epi the right square is a pushout; split j makes them absolute.

#include "category.hpp"
#include "constructions.hpp"
#include "simplex_category.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace sset {

/// A full subcategory of Delta/K as a finite category, with lookup tables.
class SimplexCategoryTable {
public:
    SimplexCategoryTable() = default;

    /// Full subcategory on the given objects of J (all objects when empty).
    explicit SimplexCategoryTable(const SimplexCategory& J, std::vector<int> objects = {})
        : objects_(std::move(objects))
    {
        if (objects_.empty())
            for (int b = 0; b < J.num_objects(); ++b)
                objects_.push_back(b);
        std::set<int> seen(objects_.begin(), objects_.end());
        if (seen.size() != objects_.size())
            throw std::invalid_argument("SimplexCategoryTable: repeated object");
        const int k = static_cast<int>(objects_.size());
        std::vector<FiniteCategory::Morphism> mor;
        std::vector<int> ids(k, -1);
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
                for (const MonotoneMap& p : J.morphisms(objects_[a], objects_[b])) {
                    const int m = static_cast<int>(mor.size());
                    mor.push_back({a, b});
                    maps_.push_back(p);
                    lookup_.emplace(key(a, b, p), m);
                    if (a == b && p == MonotoneMap::identity(p.dom()))
                        ids[a] = m;
                }
        const int M = static_cast<int>(mor.size());
        std::vector<std::vector<int>> comp(M, std::vector<int>(M, -1));
        for (int g = 0; g < M; ++g)
            for (int f = 0; f < M; ++f)
                if (mor[f].tgt == mor[g].src)
                    comp[g][f] = lookup_.at(key(mor[f].src, mor[g].tgt, compose(maps_[g], maps_[f])));
        category_ = FiniteCategory(k, std::move(mor), std::move(ids), std::move(comp));
    }

    const FiniteCategory& category() const { return category_; }
    int object_of(int simplex_object) const
    {
        for (std::size_t a = 0; a < objects_.size(); ++a)
            if (objects_[a] == simplex_object)
                return static_cast<int>(a);
        throw std::out_of_range("SimplexCategoryTable: object not in the subcategory");
    }
    const MonotoneMap& map_of(int m) const { return maps_.at(m); }
    int morphism(int a, int b, const MonotoneMap& p) const
    {
        auto it = lookup_.find(key(object_of(a), object_of(b), p));
        if (it == lookup_.end())
            throw std::invalid_argument("SimplexCategoryTable: not a morphism of the category of simplices");
        return it->second;
    }

private:
    static std::tuple<int, int, std::vector<int>> key(int a, int b, const MonotoneMap& p)
    {
        return {a, b, std::vector<int>(p.values().begin(), p.values().end())};
    }

    std::vector<int> objects_;
    FiniteCategory category_;
    std::vector<MonotoneMap> maps_;
    std::map<std::tuple<int, int, std::vector<int>>, int> lookup_;
};

/// Morphism ids of the two-row diagram above.
struct SplitDiagram {
    int d = 0, s = 0;   ///< top row
    int i = 0, j = 0;   ///< verticals A -> A', B -> B'
    int d2 = 0, s2 = 0; ///< bottom row
};

enum class SquareKind { LeftPullback, RightPushout };

struct SquareCertificate {
    bool certified = false;
    SquareKind kind = SquareKind::LeftPullback;
    std::optional<int> splitting; ///< j' with j' j = id (pullback) or j j' = id (pushout)
    std::vector<std::string> failures;
};

/// Checks the retraction equations, commutativity and that j splits.
inline SquareCertificate check_absolute_square(const FiniteCategory& C, const SplitDiagram& q, SquareKind kind)
{
    SquareCertificate out;
    out.kind = kind;
    auto fail = [&](std::string why) { out.failures.push_back(std::move(why)); };
    auto eq = [&](int g, int f, int h) { return C.tgt(f) == C.src(g) && C.compose(g, f) == h; };
    const int A = C.src(q.d), B = C.tgt(q.d), A2 = C.src(q.d2), B2 = C.tgt(q.d2);
    if (C.src(q.s) != B || C.tgt(q.s) != A || C.src(q.s2) != B2 || C.tgt(q.s2) != A2 || C.src(q.i) != A ||
        C.tgt(q.i) != A2 || C.src(q.j) != B || C.tgt(q.j) != B2) {
        fail("morphisms do not form the diagram");
        return out;
    }
    if (!eq(q.s, q.d, C.identity(A)))
        fail("s . d is not the identity");
    if (!eq(q.s2, q.d2, C.identity(A2)))
        fail("s' . d' is not the identity");
    if (C.compose(q.j, q.d) != C.compose(q.d2, q.i))
        fail("left square does not commute");
    if (C.compose(q.i, q.s) != C.compose(q.s2, q.j))
        fail("right square does not commute");
    if (kind == SquareKind::LeftPullback) {
        for (int r : C.hom(B2, B))
            if (C.compose(r, q.j) == C.identity(B)) {
                out.splitting = r;
                break;
            }
        if (!out.splitting)
            fail("j is not a split monomorphism");
    } else {
        for (int r : C.hom(B2, B))
            if (C.compose(q.j, r) == C.identity(B2)) {
                out.splitting = r;
                break;
            }
        if (!out.splitting)
            fail("j is not a split epimorphism");
    }
    out.certified = out.failures.empty();
    return out;
}

/// Whether P -p1-> X, P -p2-> Y over X -f-> S <-g- Y is a pullback in C.
inline bool is_pullback(const FiniteCategory& C, int p1, int p2, int f, int g)
{
    const int P = C.src(p1);
    for (int Z = 0; Z < C.num_objects(); ++Z)
        for (int u : C.hom(Z, C.tgt(p1)))
            for (int v : C.hom(Z, C.tgt(p2))) {
                if (C.compose(f, u) != C.compose(g, v))
                    continue;
                int found = 0;
                for (int r : C.hom(Z, P))
                    found += C.compose(p1, r) == u && C.compose(p2, r) == v;
                if (found != 1)
                    return false;
            }
    return true;
}

/// Whether X -i1-> Q <-i2- Y under S -f-> X, S -g-> Y is a pushout in C.
inline bool is_pushout(const FiniteCategory& C, int i1, int i2, int f, int g)
{
    const int Q = C.tgt(i1);
    for (int Z = 0; Z < C.num_objects(); ++Z)
        for (int u : C.hom(C.src(i1), Z))
            for (int v : C.hom(C.src(i2), Z)) {
                if (C.compose(u, f) != C.compose(v, g))
                    continue;
                int found = 0;
                for (int r : C.hom(Q, Z))
                    found += C.compose(r, i1) == u && C.compose(r, i2) == v;
                if (found != 1)
                    return false;
            }
    return true;
}

/// Whether the square of the diagram named by kind is (co)cartesian after applying F.
inline bool square_preserved(const FiniteCategory& D, const Functor& F, const SplitDiagram& q, SquareKind kind)
{
    const auto& m = F.on_morphisms;
    if (kind == SquareKind::LeftPullback)
        return is_pullback(D, m[q.d], m[q.i], m[q.j], m[q.d2]);
    return is_pushout(D, m[q.i], m[q.s2], m[q.s], m[q.j]);
}

/// The subcategory generated by some morphisms, with the inclusion on ids.
struct GeneratedSubcategory {
    FiniteCategory category;
    std::vector<int> objects;   ///< ambient object of each object
    std::vector<int> morphisms; ///< ambient morphism of each morphism
    int local(int ambient_morphism) const
    {
        auto it = std::find(morphisms.begin(), morphisms.end(), ambient_morphism);
        if (it == morphisms.end())
            throw std::invalid_argument("GeneratedSubcategory: morphism not in the subcategory");
        return static_cast<int>(it - morphisms.begin());
    }
};

inline GeneratedSubcategory generated_subcategory(const FiniteCategory& C, const std::vector<int>& gens)
{
    std::vector<char> in(C.num_morphisms(), 0);
    std::set<int> objs;
    for (int g : gens) {
        in[g] = 1;
        objs.insert(C.src(g));
        objs.insert(C.tgt(g));
    }
    for (int x : objs)
        in[C.identity(x)] = 1;
    for (bool grew = true; grew;) {
        grew = false;
        for (int g = 0; g < C.num_morphisms(); ++g)
            for (int f = 0; f < C.num_morphisms(); ++f)
                if (in[g] && in[f] && C.tgt(f) == C.src(g) && !in[C.compose(g, f)])
                    in[C.compose(g, f)] = grew = true;
    }
    GeneratedSubcategory out;
    out.objects.assign(objs.begin(), objs.end());
    auto local_object = [&](int x) {
        return static_cast<int>(std::find(out.objects.begin(), out.objects.end(), x) - out.objects.begin());
    };
    std::vector<int> local(C.num_morphisms(), -1);
    std::vector<FiniteCategory::Morphism> mor;
    for (int m = 0; m < C.num_morphisms(); ++m)
        if (in[m]) {
            local[m] = static_cast<int>(mor.size());
            out.morphisms.push_back(m);
            mor.push_back({local_object(C.src(m)), local_object(C.tgt(m))});
        }
    std::vector<int> ids;
    for (int x : out.objects)
        ids.push_back(local[C.identity(x)]);
    const int M = static_cast<int>(mor.size());
    std::vector<std::vector<int>> comp(M, std::vector<int>(M, -1));
    for (int g = 0; g < M; ++g)
        for (int f = 0; f < M; ++f)
            if (mor[f].tgt == mor[g].src)
                comp[g][f] = local[C.compose(out.morphisms[g], out.morphisms[f])];
    out.category = FiniteCategory(static_cast<int>(out.objects.size()), std::move(mor), std::move(ids), std::move(comp));
    return out;
}

struct AbsoluteSquare {
    SimplexCategoryTable ambient; ///< full subcategory on the objects involved
    SplitDiagram diagram;
    SquareCertificate certificate;

    /// The subcategory generated by the diagram and the splitting of j, with
    /// the diagram in its own morphism ids.
    std::pair<GeneratedSubcategory, SplitDiagram> generated() const
    {
        const SplitDiagram& q = diagram;
        std::vector<int> gens{q.d, q.s, q.i, q.j, q.d2, q.s2};
        if (certificate.splitting)
            gens.push_back(*certificate.splitting);
        GeneratedSubcategory G = generated_subcategory(ambient.category(), gens);
        const SplitDiagram local{G.local(q.d), G.local(q.s), G.local(q.i), G.local(q.j), G.local(q.d2), G.local(q.s2)};
        return {std::move(G), local};
    }
};

/// The pushout of the two degeneracies s_i, s_j out of (n, sigma), i < j, where
/// sigma is the double degeneracy of tau in K_{n-2}:
///
///   (n-1, s_i) -d_i-> (n, sigma)    -s_i-> (n-1, s_i)
///       |s_{j-1}         |s_j                 |s_{j-1}
///   (n-2, tau) -d_i-> (n-1, s_i tau) -s_i-> (n-2, tau)
inline AbsoluteSquare absolute_pushout_in_delta(const SimplicialSet& K, int n, int tau, int i, int j)
{
    if (n < 2 || n > K.dim_bound())
        throw std::invalid_argument("absolute_pushout_in_delta: need 2 <= n <= dim bound");
    if (!(0 <= i && i < j && j <= n - 1))
        throw std::invalid_argument("absolute_pushout_in_delta: need 0 <= i < j <= n-1");
    const SimplexCategory J(K);
    const int sij = tau;
    const int si = K.degeneracy(n - 2, j - 1, sij);    // (n-1) top corners
    const int bottom_mid = K.degeneracy(n - 2, i, sij); // (n-1) bottom middle
    const int sigma = K.degeneracy(n - 1, i, si);
    std::vector<int> objs;
    for (int o : {J.id(n - 1, si), J.id(n, sigma), J.id(n - 2, sij), J.id(n - 1, bottom_mid)})
        if (std::find(objs.begin(), objs.end(), o) == objs.end())
            objs.push_back(o);
    AbsoluteSquare out{SimplexCategoryTable(J, objs), {}, {}};
    const auto& T = out.ambient;
    const int A = J.id(n - 1, si), Bo = J.id(n, sigma), A2 = J.id(n - 2, sij), B2 = J.id(n - 1, bottom_mid);
    out.diagram.d = T.morphism(A, Bo, face(n, i));
    out.diagram.s = T.morphism(Bo, A, degeneracy(n - 1, i));
    out.diagram.i = T.morphism(A, A2, degeneracy(n - 2, j - 1));
    out.diagram.j = T.morphism(Bo, B2, degeneracy(n - 1, j));
    out.diagram.d2 = T.morphism(A2, B2, face(n - 1, i));
    out.diagram.s2 = T.morphism(B2, A2, degeneracy(n - 2, i));
    out.certificate = check_absolute_square(T.category(), out.diagram, SquareKind::RightPushout);
    return out;
}

/// A pullback instance in Delta: rows d_i, s_i over verticals d_j and d_{j+1},
/// i < j <= n. The vertical d_{j+1} is split by s_j, so the left square is absolute.
///
///   [n-1] -d_i-> [n]   -s_i-> [n-1]
///     |d_j        |d_{j+1}      |d_j
///   [n]   -d_i-> [n+1] -s_i-> [n]
inline AbsoluteSquare absolute_pullback_in_delta(int n, int i, int j)
{
    if (!(n >= 1 && 0 <= i && i < j && j <= n))
        throw std::invalid_argument("absolute_pullback_in_delta: need 0 <= i < j <= n");
    const SimplexCategory J(point(n + 1));
    const int a = J.id(n - 1, 0), b = J.id(n, 0), c = J.id(n + 1, 0);
    AbsoluteSquare out{SimplexCategoryTable(J, {a, b, c}), {}, {}};
    const auto& T = out.ambient;
    out.diagram.d = T.morphism(a, b, face(n, i));
    out.diagram.s = T.morphism(b, a, degeneracy(n - 1, i));
    out.diagram.i = T.morphism(a, b, face(n, j));
    out.diagram.j = T.morphism(b, c, face(n + 1, j + 1));
    out.diagram.d2 = T.morphism(b, c, face(n + 1, i));
    out.diagram.s2 = T.morphism(c, b, degeneracy(n, i));
    out.certificate = check_absolute_square(T.category(), out.diagram, SquareKind::LeftPullback);
    return out;
}

} // namespace sset
