#pragma once

// Homotopy category of a quasi-category, equivalence edges, connected
// components, contractibility certificates and horn-expansion certificates.

#include "category.hpp"
#include "homology.hpp"
#include "lifting.hpp"

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace sset {

/// Thrown when an operation needs a quasi-category and gets something else.
class NotQuasiCategory : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// X^op: same simplices, faces d_i and degeneracies s_j renumbered as d_{n-i}, s_{n-j}.
inline SimplicialSet opposite(const SimplicialSet& X)
{
    const int D = X.dim_bound();
    std::vector<std::vector<SimplicialSet::Table>> faces(D + 1), degens(D + 1);
    for (int n = 1; n <= D; ++n)
        for (int i = 0; i <= n; ++i)
            faces[n].push_back(X.face_table(n, n - i));
    for (int n = 0; n < D; ++n)
        for (int j = 0; j <= n; ++j)
            degens[n].push_back(X.degeneracy_table(n, n - j));
    return SimplicialSet(D, X.counts(), std::move(faces), std::move(degens));
}

inline SimplicialMap opposite(const SimplicialMap& f)
{
    return SimplicialMap(opposite(f.source()), opposite(f.target()), f.levels());
}

/// Component label of every vertex; labels are the smallest vertex of the component.
inline std::vector<int> connected_components(const SimplicialSet& X)
{
    detail::UnionFind uf(X.count(0));
    if (X.dim_bound() >= 1)
        for (int e = 0; e < X.count(1); ++e)
            uf.unite(X.face(1, 0, e), X.face(1, 1, e));
    std::vector<int> out(X.count(0));
    for (int v = 0; v < X.count(0); ++v)
        out[v] = uf.find(v);
    return out;
}

inline int pi0_count(const SimplicialSet& X)
{
    const auto c = connected_components(X);
    int n = 0;
    for (int v = 0; v < X.count(0); ++v)
        n += c[v] == v;
    return n;
}

inline bool pi0_connected(const SimplicialSet& X, int x, int y)
{
    const auto c = connected_components(X);
    return c.at(x) == c.at(y);
}

/// Whether f induces a bijection on connected components.
inline bool pi0_bijective(const SimplicialMap& f)
{
    const auto cs = connected_components(f.source());
    const auto ct = connected_components(f.target());
    std::map<int, int> image;
    for (int v = 0; v < f.source().count(0); ++v) {
        const int t = ct[f(0, v)];
        auto [it, inserted] = image.emplace(cs[v], t);
        if (!inserted && it->second != t)
            return false;
    }
    std::map<int, int> back;
    for (auto [s, t] : image)
        if (!back.emplace(t, s).second)
            return false;
    for (int v = 0; v < f.target().count(0); ++v)
        if (!back.count(ct[v]))
            return false;
    return true;
}

struct HomotopyCategory {
    FiniteCategory category;
    std::vector<int> edge_class; ///< morphism of every edge of C
};

/// Objects are vertices; morphisms are edges up to homotopy; composition is
/// read off from 2-simplices. Requires a quasi-category with D >= 2; the
/// construction checks well-definedness of composition as it goes.
inline HomotopyCategory homotopy_category(const SimplicialSet& C, bool check_quasi = true,
                                          std::int64_t budget = default_lift_budget)
{
    if (C.dim_bound() < 2)
        throw std::invalid_argument("homotopy_category: needs dimension bound >= 2");
    if (check_quasi && is_quasi_category(C, C.dim_bound(), budget) != Verdict::True)
        throw NotQuasiCategory("homotopy_category: input is not a quasi-category up to its bound");
    const int E = C.count(1);
    detail::UnionFind uf(E);
    for (int s = 0; s < C.count(2); ++s) {
        const int d0 = C.face(2, 0, s);
        if (d0 == C.degeneracy(0, 0, C.face(1, 0, d0)))
            uf.unite(C.face(2, 2, s), C.face(2, 1, s));
    }
    std::vector<int> cls(E, -1), rep;
    for (int e = 0; e < E; ++e) {
        const int r = uf.find(e);
        if (cls[r] < 0) {
            cls[r] = static_cast<int>(rep.size());
            rep.push_back(r);
        }
        cls[e] = cls[r];
    }
    const int M = static_cast<int>(rep.size());
    std::vector<FiniteCategory::Morphism> mor(M);
    for (int m = 0; m < M; ++m)
        mor[m] = {C.face(1, 1, rep[m]), C.face(1, 0, rep[m])};
    std::vector<int> ids(C.count(0));
    for (int v = 0; v < C.count(0); ++v)
        ids[v] = cls[C.degeneracy(0, 0, v)];
    std::vector<std::vector<int>> comp(M, std::vector<int>(M, -1));
    for (int s = 0; s < C.count(2); ++s) {
        const int f = cls[C.face(2, 2, s)], g = cls[C.face(2, 0, s)], h = cls[C.face(2, 1, s)];
        int& slot = comp[g][f];
        if (slot >= 0 && slot != h)
            throw NotQuasiCategory("homotopy_category: composition is not well defined");
        slot = h;
    }
    for (int g = 0; g < M; ++g)
        for (int f = 0; f < M; ++f)
            if (mor[f].tgt == mor[g].src && comp[g][f] < 0)
                throw NotQuasiCategory("homotopy_category: composable pair without a composite");
    try {
        return {FiniteCategory(C.count(0), std::move(mor), std::move(ids), std::move(comp)), cls};
    } catch (const ValidationError& e) {
        throw NotQuasiCategory(std::string("homotopy_category: ") + e.what());
    }
}

/// Edges whose homotopy class is invertible.
inline std::vector<char> equivalence_edges(const SimplicialSet& C, bool check_quasi = true)
{
    const HomotopyCategory h = homotopy_category(C, check_quasi);
    std::vector<char> out(C.count(1));
    for (int e = 0; e < C.count(1); ++e)
        out[e] = h.category.is_iso(h.edge_class[e]);
    return out;
}

/// C with its equivalences marked.
inline MarkedSimplicialSet natural(const SimplicialSet& C, bool check_quasi = true)
{
    return MarkedSimplicialSet(C, equivalence_edges(C, check_quasi));
}

// ---------------------------------------------------------------------------
// Contractibility certificates

struct ContractibilityCertificate {
    enum class Kind { TerminalObjectNerve, ExtraDegeneracy, HomologyPlusPi1, Unknown };
    Kind kind = Kind::Unknown;
    std::string detail;
    // TerminalObjectNerve
    std::optional<FiniteCategory> category;
    std::optional<SimplicialMap> comparison; ///< X -> nerve(category), an isomorphism
    int object = -1;
    bool initial = false;
    // ExtraDegeneracy: retraction of the right cone of X (or of X^op) onto X
    std::optional<SimplicialMap> retraction;
    bool on_opposite = false;
    // HomologyPlusPi1 / Unknown
    std::vector<HomologyGroup> reduced;
    int tietze_moves = 0;

    bool certified() const { return kind != Kind::Unknown; }
};

inline const char* to_string(ContractibilityCertificate::Kind k)
{
    switch (k) {
    case ContractibilityCertificate::Kind::TerminalObjectNerve:
        return "TerminalObjectNerve";
    case ContractibilityCertificate::Kind::ExtraDegeneracy:
        return "ExtraDegeneracy";
    case ContractibilityCertificate::Kind::HomologyPlusPi1:
        return "HomologyPlusPi1";
    default:
        return "Unknown";
    }
}

/// Comparison X -> nerve(hX) sending a simplex to the classes of its spine, if
/// that is an isomorphism.
inline std::optional<SimplicialMap> nerve_comparison(const SimplicialSet& X, const HomotopyCategory& h)
{
    const int D = X.dim_bound();
    const SimplicialSet N = nerve(h.category, D);
    std::vector<std::unordered_map<std::vector<int>, int, VectorHash>> index(D + 1);
    for (int n = 2; n <= D; ++n)
        for (int y = 0; y < N.count(n); ++y)
            index[n].emplace(nerve_chain(N, n, y), y);
    std::vector<std::vector<int>> lv(D + 1);
    for (int n = 0; n <= D; ++n)
        for (int x = 0; x < X.count(n); ++x) {
            if (n == 0) {
                lv[0].push_back(x);
                continue;
            }
            if (n == 1) {
                lv[1].push_back(h.edge_class[x]);
                continue;
            }
            std::vector<int> chain;
            for (int e : nerve_chain(X, n, x))
                chain.push_back(h.edge_class[e]);
            auto it = index[n].find(chain);
            if (it == index[n].end())
                return std::nullopt;
            lv[n].push_back(it->second);
        }
    SimplicialMap m(X, N, std::move(lv));
    if (!m.is_valid() || !m.is_iso())
        return std::nullopt;
    return m;
}

namespace detail {

using Word = std::vector<int>; // letters g+1 or -(g+1)

inline Word free_reduce(const Word& w)
{
    Word out;
    for (int l : w) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    while (out.size() >= 2 && out.front() == -out.back()) {
        out.erase(out.begin());
        out.pop_back();
    }
    return out;
}

inline Word invert(const Word& w)
{
    Word out(w.rbegin(), w.rend());
    for (int& l : out)
        l = -l;
    return out;
}

/// Bounded Tietze simplification; true when every generator was eliminated.
inline bool tietze_trivial(int generators, std::vector<Word> relations, int budget, int& moves)
{
    std::vector<char> alive(generators, 1);
    int remaining = generators;
    moves = 0;
    while (remaining > 0) {
        if (moves >= budget)
            return false;
        for (auto& r : relations)
            r = free_reduce(r);
        relations.erase(std::remove_if(relations.begin(), relations.end(),
                                       [](const Word& r) { return r.empty(); }),
                        relations.end());
        bool progressed = false;
        for (std::size_t ri = 0; ri < relations.size() && !progressed; ++ri) {
            const Word& r = relations[ri];
            std::map<int, int> occurrences;
            for (int l : r)
                ++occurrences[std::abs(l)];
            for (auto [g, count] : occurrences) {
                if (count != 1)
                    continue;
                // r = u g^e v, so g^e = u^-1 v^-1.
                std::size_t pos = 0;
                while (std::abs(r[pos]) != g)
                    ++pos;
                const Word u(r.begin(), r.begin() + pos), v(r.begin() + pos + 1, r.end());
                Word value = invert(u);
                const Word vi = invert(v);
                value.insert(value.end(), vi.begin(), vi.end());
                if (r[pos] < 0)
                    value = invert(value);
                std::vector<Word> next;
                for (std::size_t rj = 0; rj < relations.size(); ++rj) {
                    if (rj == ri)
                        continue;
                    Word w;
                    for (int l : relations[rj]) {
                        if (std::abs(l) != g)
                            w.push_back(l);
                        else if (l > 0)
                            w.insert(w.end(), value.begin(), value.end());
                        else {
                            const Word iv = invert(value);
                            w.insert(w.end(), iv.begin(), iv.end());
                        }
                    }
                    next.push_back(free_reduce(w));
                }
                relations = std::move(next);
                alive[g - 1] = 0;
                --remaining;
                ++moves;
                progressed = true;
                break;
            }
        }
        if (!progressed)
            return false;
    }
    return true;
}

} // namespace detail

/// Fundamental group presentation from a spanning forest of the 1-skeleton;
/// reports whether bounded Tietze moves reduce it to the trivial group.
inline bool pi1_trivial(const SimplicialSet& X, int budget, int& moves)
{
    moves = 0;
    if (X.dim_bound() < 1)
        return true;
    detail::UnionFind uf(X.count(0));
    std::vector<int> letter(X.count(1), 0);
    int gens = 0;
    for (int e : X.nondegenerate(1)) {
        const int a = X.face(1, 1, e), b = X.face(1, 0, e);
        if (uf.find(a) != uf.find(b))
            uf.unite(a, b);
        else
            letter[e] = ++gens;
    }
    std::vector<detail::Word> rels;
    if (X.dim_bound() >= 2)
        for (int s : X.nondegenerate(2)) {
            detail::Word w;
            if (letter[X.face(2, 2, s)])
                w.push_back(letter[X.face(2, 2, s)]);
            if (letter[X.face(2, 0, s)])
                w.push_back(letter[X.face(2, 0, s)]);
            if (letter[X.face(2, 1, s)])
                w.push_back(-letter[X.face(2, 1, s)]);
            rels.push_back(std::move(w));
        }
    return detail::tietze_trivial(gens, std::move(rels), budget, moves);
}

struct ContractibilityOptions {
    std::int64_t retraction_budget = 100'000;
    int tietze_budget = 10'000;
};

/// Certificate of (D-truncated) weak contractibility, trying the strategies in order.
inline ContractibilityCertificate contractibility(const SimplicialSet& X,
                                                  const ContractibilityOptions& opt = {})
{
    using Kind = ContractibilityCertificate::Kind;
    ContractibilityCertificate cert;
    if (X.count(0) == 0) {
        cert.detail = "empty simplicial set";
        return cert;
    }
    // (a) nerve of a category with a terminal or initial object
    if (X.dim_bound() >= 2) {
        try {
            HomotopyCategory h = homotopy_category(X, false);
            if (auto cmp = nerve_comparison(X, h)) {
                const FiniteCategory& C = h.category;
                for (int t = 0; t < C.num_objects(); ++t) {
                    bool terminal = true, initial = true;
                    for (int x = 0; x < C.num_objects(); ++x) {
                        terminal = terminal && C.hom(x, t).size() == 1;
                        initial = initial && C.hom(t, x).size() == 1;
                    }
                    if (terminal || initial) {
                        cert.kind = Kind::TerminalObjectNerve;
                        cert.category = C;
                        cert.comparison = std::move(cmp);
                        cert.object = t;
                        cert.initial = !terminal;
                        cert.detail = std::string("nerve of a category with ") +
                                      (terminal ? "terminal" : "initial") + " object " +
                                      std::to_string(t);
                        return cert;
                    }
                }
            }
        } catch (const NotQuasiCategory&) {
        }
    }
    // (b) retraction of a cone onto X
    for (bool op : {false, true}) {
        const SimplicialSet Y = op ? opposite(X) : X;
        const Cone cone = right_cone(Y);
        const int D = Y.dim_bound();
        std::vector<std::vector<int>> fixed(D + 1);
        for (int n = 0; n <= D; ++n) {
            fixed[n].assign(cone.object.count(n), -1);
            for (int y = 0; y < Y.count(n); ++y)
                fixed[n][cone.inclusion(n, y)] = y;
        }
        ExtensionProblem p{cone.object, Y, fixed, {}, false};
        ExtensionResult r = find_extension(p, opt.retraction_budget);
        if (r.map) {
            cert.kind = Kind::ExtraDegeneracy;
            cert.retraction = std::move(r.map);
            cert.on_opposite = op;
            cert.detail = std::string("retraction of the ") + (op ? "left" : "right") +
                          " cone onto X, cone point to vertex " +
                          std::to_string((*cert.retraction)(0, cone.cone_point));
            return cert;
        }
    }
    // (c) reduced homology below D and a trivial edge-path group
    bool acyclic = true;
    for (int k = 0; k < X.dim_bound(); ++k) {
        HomologyGroup h = reduced_homology(X, k);
        cert.reduced.push_back(h);
        if (h.betti != 0 || !h.torsion.empty())
            acyclic = false;
    }
    if (X.dim_bound() == 0 && X.count(0) != 1)
        acyclic = false;
    if (acyclic && X.dim_bound() >= 1 && pi0_count(X) == 1) {
        int moves = 0;
        if (pi1_trivial(X, opt.tietze_budget, moves)) {
            cert.kind = Kind::HomologyPlusPi1;
            cert.tietze_moves = moves;
            cert.detail = "reduced homology vanishes below D and the edge-path group is trivial after " +
                          std::to_string(moves) + " Tietze moves";
            return cert;
        }
        cert.tietze_moves = moves;
        cert.detail = "reduced homology vanishes below D but the edge-path group was not shown trivial";
        return cert;
    }
    if (X.dim_bound() == 0 && X.count(0) == 1) {
        cert.kind = Kind::HomologyPlusPi1;
        cert.detail = "a single vertex";
        return cert;
    }
    cert.detail = "obstruction:";
    for (std::size_t k = 0; k < cert.reduced.size(); ++k)
        if (cert.reduced[k].betti != 0 || !cert.reduced[k].torsion.empty()) {
            std::ostringstream os;
            os << " reduced H_" << k << " = " << cert.reduced[k];
            cert.detail += os.str();
        }
    return cert;
}

/// Re-checks a certificate against X from scratch.
inline bool revalidate(const ContractibilityCertificate& cert, const SimplicialSet& X,
                       int tietze_budget = 10'000)
{
    using Kind = ContractibilityCertificate::Kind;
    switch (cert.kind) {
    case Kind::TerminalObjectNerve: {
        if (!cert.category || !cert.comparison)
            return false;
        const FiniteCategory& C = *cert.category;
        try {
            C.validate();
        } catch (const ValidationError&) {
            return false;
        }
        if (!(cert.comparison->source() == X) ||
            !(cert.comparison->target() == nerve(C, X.dim_bound())) || !cert.comparison->is_valid() ||
            !cert.comparison->is_iso())
            return false;
        for (int x = 0; x < C.num_objects(); ++x) {
            const auto hom = cert.initial ? C.hom(cert.object, x) : C.hom(x, cert.object);
            if (hom.size() != 1)
                return false;
        }
        return true;
    }
    case Kind::ExtraDegeneracy: {
        if (!cert.retraction)
            return false;
        const SimplicialSet Y = cert.on_opposite ? opposite(X) : X;
        const Cone cone = right_cone(Y);
        if (!(cert.retraction->source() == cone.object) || !(cert.retraction->target() == Y) ||
            !cert.retraction->is_valid())
            return false;
        return compose(*cert.retraction, cone.inclusion) == SimplicialMap::identity(Y);
    }
    case Kind::HomologyPlusPi1: {
        if (X.dim_bound() == 0)
            return X.count(0) == 1;
        for (int k = 0; k < X.dim_bound(); ++k) {
            const HomologyGroup h = reduced_homology(X, k);
            if (h.betti != 0 || !h.torsion.empty())
                return false;
        }
        int moves = 0;
        return pi0_count(X) == 1 && pi1_trivial(X, tietze_budget, moves);
    }
    default:
        return false;
    }
}

// ---------------------------------------------------------------------------
// Horn-expansion certificates for monomorphisms

struct HornStep {
    int dim = 0;     ///< dimension n of the attached simplex
    int simplex = 0; ///< the attached n-simplex of the target
    int horn = 0;    ///< k: the face d_k is attached together with it
};

struct AnodyneCertificate {
    std::vector<HornStep> steps;
    bool complete = false;
    /// Nondegenerate simplices of the target left unattached (only possible at the top dimension).
    std::vector<SimplexRef> leftover;
    std::string fallback; ///< justification when the expansion is incomplete
};

namespace detail {

inline std::vector<std::vector<char>> image_flags(const SimplicialMap& i)
{
    const SimplicialSet& B = i.target();
    std::vector<std::vector<char>> in(B.dim_bound() + 1);
    for (int n = 0; n <= B.dim_bound(); ++n) {
        in[n].assign(B.count(n), 0);
        for (int a = 0; a < i.source().count(n); ++a)
            in[n][i(n, a)] = 1;
    }
    return in;
}

/// Whether adding y together with d_k y to the subcomplex `in` is an elementary horn expansion.
inline bool horn_step_ok(const SimplicialSet& B, const std::vector<std::vector<char>>& in, int n, int y,
                         int k)
{
    if (n < 1 || B.is_degenerate(n, y) || in[n][y])
        return false;
    const int f = B.face(n, k, y);
    if (B.is_degenerate(n - 1, f) || in[n - 1][f])
        return false;
    for (int i = 0; i <= n; ++i)
        if (i != k && !in[n - 1][B.face(n, i, y)])
            return false;
    return true;
}

inline void add_with_degeneracies(const SimplicialSet& B, std::vector<std::vector<char>>& in, int n, int y)
{
    std::vector<SimplexRef> stack{{n, y}};
    while (!stack.empty()) {
        SimplexRef r = stack.back();
        stack.pop_back();
        in[r.dim][r.index] = 1;
        if (r.dim < B.dim_bound())
            for (int j = 0; j <= r.dim; ++j)
                stack.push_back({r.dim + 1, B.degeneracy(r.dim, j, r.index)});
    }
}

} // namespace detail

/// Greedy search for a sequence of horn pushouts building the target of i from its image.
inline AnodyneCertificate horn_expansion(const SimplicialMap& i)
{
    if (!i.is_mono())
        throw std::invalid_argument("horn_expansion: map is not a monomorphism");
    const SimplicialSet& B = i.target();
    auto in = detail::image_flags(i);
    AnodyneCertificate cert;
    bool progress = true;
    while (progress) {
        progress = false;
        for (int n = 1; n <= B.dim_bound() && !progress; ++n)
            for (int y : B.nondegenerate(n)) {
                for (int k = 0; k <= n; ++k)
                    if (detail::horn_step_ok(B, in, n, y, k)) {
                        cert.steps.push_back({n, y, k});
                        detail::add_with_degeneracies(B, in, n - 1, B.face(n, k, y));
                        detail::add_with_degeneracies(B, in, n, y);
                        progress = true;
                        break;
                    }
                if (progress)
                    break;
            }
    }
    for (int n = 0; n <= B.dim_bound(); ++n)
        for (int y : B.nondegenerate(n))
            if (!in[n][y])
                cert.leftover.push_back({n, y});
    cert.complete = cert.leftover.empty();
    return cert;
}

/// Replays the steps; true when each is a valid elementary expansion and
/// (for complete certificates) the whole target is reached.
inline bool replay(const AnodyneCertificate& cert, const SimplicialMap& i)
{
    const SimplicialSet& B = i.target();
    auto in = detail::image_flags(i);
    for (const HornStep& s : cert.steps) {
        if (!detail::horn_step_ok(B, in, s.dim, s.simplex, s.horn))
            return false;
        detail::add_with_degeneracies(B, in, s.dim - 1, B.face(s.dim, s.horn, s.simplex));
        detail::add_with_degeneracies(B, in, s.dim, s.simplex);
    }
    std::vector<SimplexRef> left;
    for (int n = 0; n <= B.dim_bound(); ++n)
        for (int y : B.nondegenerate(n))
            if (!in[n][y])
                left.push_back({n, y});
    return left == cert.leftover && cert.complete == left.empty();
}

/// The assertable shadow of being anodyne at bound D: a monomorphism inducing
/// a bijection on components whose relative homology vanishes below D.
inline bool anodyne_shadow(const SimplicialMap& i)
{
    if (!i.is_mono() || !pi0_bijective(i))
        return false;
    for (int k = 0; k < i.target().dim_bound(); ++k) {
        const HomologyGroup h = relative_homology(i, k);
        if (h.betti != 0 || !h.torsion.empty())
            return false;
    }
    return true;
}

/// Pushout of Delta^n along an attaching map Lambda^n_k -> X.
inline Pushout attach_horn(const SimplicialMap& attaching, int n, int k)
{
    const SimplicialMap h = horn_inclusion(n, k, attaching.target().dim_bound());
    if (!(attaching.source() == h.source()))
        throw std::invalid_argument("attach_horn: attaching map is not defined on the horn");
    return pushout(attaching, h);
}

} // namespace sset
