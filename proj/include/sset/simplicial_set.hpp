#pragma once

// Finite simplicial sets truncated at a dimension bound D, together with
// simplicial maps between them and subcomplexes.
//
// Simplices are stored explicitly in every dimension 0..D (degenerate ones
// included), so faces and degeneracies are plain table lookups.

#include "delta.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sset {

/// Raised when a table violates a simplicial identity or a map fails to commute.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SimplexRef {
    int dim = 0;
    int index = 0;
    friend bool operator==(const SimplexRef&, const SimplexRef&) = default;
    friend auto operator<=>(const SimplexRef&, const SimplexRef&) = default;
};

struct VectorHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept
    {
        std::size_t h = v.size() * 0x9e3779b97f4a7c15ULL;
        for (int x : v)
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

/// Face and degeneracy tables of a D-truncated simplicial set.
///
/// faces(n, i)[x] is d_i x for x in X_n (1 <= n <= D), and degeneracies(n, j)[x]
/// is s_j x in X_{n+1} for x in X_n (0 <= n < D). Copies share the immutable
/// tables.
class SimplicialSet {
public:
    using Table = std::vector<int>;

    SimplicialSet() : SimplicialSet(0, {0}, {}, {}) {}

    /// faces[n][i] for n = 1..D (faces[0] unused and empty); degens[n][j] for n = 0..D-1.
    SimplicialSet(int dim_bound, std::vector<int> counts, std::vector<std::vector<Table>> faces,
                  std::vector<std::vector<Table>> degens)
    {
        if (dim_bound < 0)
            throw std::invalid_argument("SimplicialSet: negative dimension bound");
        if (static_cast<int>(counts.size()) != dim_bound + 1)
            throw std::invalid_argument("SimplicialSet: counts must have D+1 entries");
        faces.resize(dim_bound + 1);
        degens.resize(dim_bound + 1);
        for (int n = 1; n <= dim_bound; ++n) {
            if (static_cast<int>(faces[n].size()) != n + 1)
                throw std::invalid_argument("SimplicialSet: dimension " + std::to_string(n) +
                                            " needs " + std::to_string(n + 1) + " face tables");
            for (int i = 0; i <= n; ++i) {
                if (static_cast<int>(faces[n][i].size()) != counts[n])
                    throw std::invalid_argument("SimplicialSet: face table size mismatch");
                for (int v : faces[n][i])
                    if (v < 0 || v >= counts[n - 1])
                        throw std::invalid_argument("SimplicialSet: face index out of range");
            }
        }
        for (int n = 0; n < dim_bound; ++n) {
            if (static_cast<int>(degens[n].size()) != n + 1)
                throw std::invalid_argument("SimplicialSet: dimension " + std::to_string(n) +
                                            " needs " + std::to_string(n + 1) +
                                            " degeneracy tables");
            for (int j = 0; j <= n; ++j) {
                if (static_cast<int>(degens[n][j].size()) != counts[n])
                    throw std::invalid_argument("SimplicialSet: degeneracy table size mismatch");
                for (int v : degens[n][j])
                    if (v < 0 || v >= counts[n + 1])
                        throw std::invalid_argument(
                            "SimplicialSet: degeneracy index out of range");
            }
        }
        auto d = std::make_shared<Data>();
        d->dim_bound = dim_bound;
        d->counts = std::move(counts);
        d->faces = std::move(faces);
        d->degens = std::move(degens);
        d->degenerate.resize(dim_bound + 1);
        for (int n = 0; n <= dim_bound; ++n)
            d->degenerate[n].assign(d->counts[n], 0);
        for (int n = 0; n < dim_bound; ++n)
            for (int j = 0; j <= n; ++j)
                for (int x = 0; x < d->counts[n]; ++x)
                    d->degenerate[n + 1][d->degens[n][j][x]] = 1;
        data_ = std::move(d);
    }

    static SimplicialSet empty(int dim_bound)
    {
        std::vector<std::vector<Table>> faces(dim_bound + 1), degens(dim_bound + 1);
        for (int n = 1; n <= dim_bound; ++n)
            faces[n].assign(n + 1, Table{});
        for (int n = 0; n < dim_bound; ++n)
            degens[n].assign(n + 1, Table{});
        return SimplicialSet(dim_bound, std::vector<int>(dim_bound + 1, 0), std::move(faces),
                             std::move(degens));
    }

    int dim_bound() const { return data_->dim_bound; }
    int count(int n) const { return data_->counts.at(n); }
    const std::vector<int>& counts() const { return data_->counts; }
    int total() const { return std::accumulate(counts().begin(), counts().end(), 0); }

    int face(int n, int i, int x) const { return data_->faces[n][i][x]; }
    int degeneracy(int n, int j, int x) const { return data_->degens[n][j][x]; }
    const Table& face_table(int n, int i) const { return data_->faces.at(n).at(i); }
    const Table& degeneracy_table(int n, int j) const { return data_->degens.at(n).at(j); }

    bool is_degenerate(int n, int x) const { return data_->degenerate[n][x] != 0; }

    std::vector<int> nondegenerate(int n) const
    {
        std::vector<int> out;
        for (int x = 0; x < count(n); ++x)
            if (!is_degenerate(n, x))
                out.push_back(x);
        return out;
    }

    std::vector<int> nondegenerate_counts() const
    {
        std::vector<int> out(dim_bound() + 1);
        for (int n = 0; n <= dim_bound(); ++n)
            out[n] = static_cast<int>(nondegenerate(n).size());
        return out;
    }

    /// The contravariant action X(p) : X_{p.cod} -> X_{p.dom}.
    int act(const MonotoneMap& p, int x) const
    {
        if (p.dom() > dim_bound() || p.cod() > dim_bound())
            throw std::invalid_argument("act: map leaves the dimension bound");
        if (x < 0 || x >= count(p.cod()))
            throw std::invalid_argument("act: simplex index out of range");
        for (const Generator& g : generator_word(p)) {
            if (g.kind == Generator::Kind::Face)
                x = face(g.n, g.index, x);
            else
                x = degeneracy(g.n, g.index, x);
        }
        return x;
    }

    /// Unique (epi, nondegenerate) pair with X(epi)(nd) = x.
    std::pair<MonotoneMap, SimplexRef> ez_normalize(int n, int x) const
    {
        MonotoneMap epi = MonotoneMap::identity(n);
        int dim = n;
        bool reduced = true;
        while (reduced && dim > 0) {
            reduced = false;
            for (int j = 0; j < dim; ++j) {
                const int below = face(dim, j, x);
                if (degeneracy(dim - 1, j, below) == x) {
                    // x = s_j(below), so X(epi)(x) = X(s^{dim-1}_j . epi)(below).
                    epi = compose(sset::degeneracy(dim - 1, j), epi);
                    x = below;
                    --dim;
                    reduced = true;
                    break;
                }
            }
        }
        return {epi, SimplexRef{dim, x}};
    }

    /// The vertices of x in order.
    std::vector<int> vertices(int n, int x) const
    {
        std::vector<int> out(n + 1);
        for (int k = 0; k <= n; ++k)
            out[k] = act(MonotoneMap(n, {k}), x);
        return out;
    }

    /// Throws ValidationError naming the first violated identity.
    void validate() const
    {
        const int D = dim_bound();
        auto fail = [](const std::string& what) { throw ValidationError(what); };
        for (int n = 2; n <= D; ++n)
            for (int j = 1; j <= n; ++j)
                for (int i = 0; i < j; ++i)
                    for (int x = 0; x < count(n); ++x)
                        if (face(n - 1, i, face(n, j, x)) != face(n - 1, j - 1, face(n, i, x)))
                            fail("face identity d_i d_j = d_{j-1} d_i fails at (n,i,j)=(" +
                                 std::to_string(n) + "," + std::to_string(i) + "," +
                                 std::to_string(j) + ") on simplex " + std::to_string(x));
        for (int n = 0; n + 2 <= D; ++n)
            for (int j = 0; j <= n; ++j)
                for (int i = 0; i <= j; ++i)
                    for (int x = 0; x < count(n); ++x)
                        if (degeneracy(n + 1, i, degeneracy(n, j, x)) !=
                            degeneracy(n + 1, j + 1, degeneracy(n, i, x)))
                            fail("degeneracy identity s_i s_j = s_{j+1} s_i fails at (n,i,j)=(" +
                                 std::to_string(n) + "," + std::to_string(i) + "," +
                                 std::to_string(j) + ") on simplex " + std::to_string(x));
        for (int n = 0; n < D; ++n)
            for (int j = 0; j <= n; ++j)
                for (int i = 0; i <= n + 1; ++i)
                    for (int x = 0; x < count(n); ++x) {
                        const int lhs = face(n + 1, i, degeneracy(n, j, x));
                        int rhs;
                        if (i == j || i == j + 1)
                            rhs = x;
                        else if (n == 0)
                            continue;
                        else if (i < j)
                            rhs = degeneracy(n - 1, j - 1, face(n, i, x));
                        else
                            rhs = degeneracy(n - 1, j, face(n, i - 1, x));
                        if (lhs != rhs)
                            fail("mixed identity d_i s_j fails at (n,i,j)=(" + std::to_string(n) +
                                 "," + std::to_string(i) + "," + std::to_string(j) +
                                 ") on simplex " + std::to_string(x));
                    }
    }

    friend bool operator==(const SimplicialSet& a, const SimplicialSet& b)
    {
        if (a.data_ == b.data_)
            return true;
        return a.data_->dim_bound == b.data_->dim_bound && a.data_->counts == b.data_->counts &&
               a.data_->faces == b.data_->faces && a.data_->degens == b.data_->degens;
    }

private:
    struct Data {
        int dim_bound = 0;
        std::vector<int> counts;
        std::vector<std::vector<Table>> faces;
        std::vector<std::vector<Table>> degens;
        std::vector<std::vector<char>> degenerate;
    };
    std::shared_ptr<const Data> data_;
};

/// Builds a simplicial set whose n-simplices are labelled by integer vectors.
/// `face_of(n, i, key)` and `degeneracy_of(n, j, key)` must return keys already
/// present in the neighbouring dimension.
template <class FaceFn, class DegenFn>
SimplicialSet build_from_keys(int dim_bound, const std::vector<std::vector<std::vector<int>>>& keys,
                              FaceFn face_of, DegenFn degeneracy_of)
{
    std::vector<std::unordered_map<std::vector<int>, int, VectorHash>> index(dim_bound + 1);
    std::vector<int> counts(dim_bound + 1);
    for (int n = 0; n <= dim_bound; ++n) {
        counts[n] = static_cast<int>(keys[n].size());
        for (int x = 0; x < counts[n]; ++x)
            if (!index[n].emplace(keys[n][x], x).second)
                throw std::invalid_argument("build_from_keys: duplicate key in dimension " +
                                            std::to_string(n));
    }
    auto lookup = [&](int n, const std::vector<int>& key) {
        auto it = index[n].find(key);
        if (it == index[n].end())
            throw std::logic_error("build_from_keys: missing key in dimension " +
                                   std::to_string(n));
        return it->second;
    };
    std::vector<std::vector<SimplicialSet::Table>> faces(dim_bound + 1), degens(dim_bound + 1);
    for (int n = 1; n <= dim_bound; ++n) {
        faces[n].assign(n + 1, SimplicialSet::Table(counts[n]));
        for (int i = 0; i <= n; ++i)
            for (int x = 0; x < counts[n]; ++x)
                faces[n][i][x] = lookup(n - 1, face_of(n, i, keys[n][x]));
    }
    for (int n = 0; n < dim_bound; ++n) {
        degens[n].assign(n + 1, SimplicialSet::Table(counts[n]));
        for (int j = 0; j <= n; ++j)
            for (int x = 0; x < counts[n]; ++x)
                degens[n][j][x] = lookup(n + 1, degeneracy_of(n, j, keys[n][x]));
    }
    return SimplicialSet(dim_bound, std::move(counts), std::move(faces), std::move(degens));
}

/// Level maps f_n : X_n -> Y_n commuting with all faces and degeneracies.
class SimplicialMap {
public:
    SimplicialMap() = default;

    SimplicialMap(SimplicialSet source, SimplicialSet target, std::vector<std::vector<int>> levels)
        : source_(std::move(source)), target_(std::move(target)), levels_(std::move(levels))
    {
        if (source_.dim_bound() != target_.dim_bound())
            throw std::invalid_argument("SimplicialMap: dimension bounds differ");
        if (static_cast<int>(levels_.size()) != source_.dim_bound() + 1)
            throw std::invalid_argument("SimplicialMap: wrong number of levels");
        for (int n = 0; n <= source_.dim_bound(); ++n) {
            if (static_cast<int>(levels_[n].size()) != source_.count(n))
                throw std::invalid_argument("SimplicialMap: level size mismatch in dimension " +
                                            std::to_string(n));
            for (int y : levels_[n])
                if (y < 0 || y >= target_.count(n))
                    throw std::invalid_argument("SimplicialMap: value out of range in dimension " +
                                                std::to_string(n));
        }
    }

    static SimplicialMap identity(const SimplicialSet& x)
    {
        std::vector<std::vector<int>> lv(x.dim_bound() + 1);
        for (int n = 0; n <= x.dim_bound(); ++n) {
            lv[n].resize(x.count(n));
            std::iota(lv[n].begin(), lv[n].end(), 0);
        }
        return SimplicialMap(x, x, std::move(lv));
    }

    const SimplicialSet& source() const { return source_; }
    const SimplicialSet& target() const { return target_; }
    int operator()(int n, int x) const { return levels_[n][x]; }
    const std::vector<std::vector<int>>& levels() const { return levels_; }

    bool is_mono() const
    {
        for (int n = 0; n <= source_.dim_bound(); ++n) {
            std::vector<char> seen(target_.count(n), 0);
            for (int y : levels_[n]) {
                if (seen[y])
                    return false;
                seen[y] = 1;
            }
        }
        return true;
    }

    bool is_epi() const
    {
        for (int n = 0; n <= source_.dim_bound(); ++n) {
            std::vector<char> seen(target_.count(n), 0);
            for (int y : levels_[n])
                seen[y] = 1;
            for (char c : seen)
                if (!c)
                    return false;
        }
        return true;
    }

    bool is_iso() const { return is_mono() && is_epi(); }

    void validate() const
    {
        const int D = source_.dim_bound();
        for (int n = 1; n <= D; ++n)
            for (int i = 0; i <= n; ++i)
                for (int x = 0; x < source_.count(n); ++x)
                    if (levels_[n - 1][source_.face(n, i, x)] != target_.face(n, i, levels_[n][x]))
                        throw ValidationError("map does not commute with d_" + std::to_string(i) +
                                              " on simplex (" + std::to_string(n) + "," +
                                              std::to_string(x) + ")");
        for (int n = 0; n < D; ++n)
            for (int j = 0; j <= n; ++j)
                for (int x = 0; x < source_.count(n); ++x)
                    if (levels_[n + 1][source_.degeneracy(n, j, x)] !=
                        target_.degeneracy(n, j, levels_[n][x]))
                        throw ValidationError("map does not commute with s_" + std::to_string(j) +
                                              " on simplex (" + std::to_string(n) + "," +
                                              std::to_string(x) + ")");
    }

    bool is_valid() const
    {
        try {
            validate();
            return true;
        } catch (const ValidationError&) {
            return false;
        }
    }

    friend bool operator==(const SimplicialMap& a, const SimplicialMap& b)
    {
        return a.levels_ == b.levels_ && a.source_ == b.source_ && a.target_ == b.target_;
    }

private:
    SimplicialSet source_;
    SimplicialSet target_;
    std::vector<std::vector<int>> levels_;
};

/// g after f.
inline SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f)
{
    if (!(f.target() == g.source()))
        throw std::invalid_argument("compose: maps are not composable");
    std::vector<std::vector<int>> lv(f.source().dim_bound() + 1);
    for (int n = 0; n <= f.source().dim_bound(); ++n) {
        lv[n].resize(f.source().count(n));
        for (int x = 0; x < f.source().count(n); ++x)
            lv[n][x] = g(n, f(n, x));
    }
    return SimplicialMap(f.source(), g.target(), std::move(lv));
}

/// Membership flags of a subcomplex of a fixed ambient simplicial set.
class Subcomplex {
public:
    Subcomplex() = default;

    explicit Subcomplex(SimplicialSet ambient, bool full = false) : ambient_(std::move(ambient))
    {
        members_.resize(ambient_.dim_bound() + 1);
        for (int n = 0; n <= ambient_.dim_bound(); ++n)
            members_[n].assign(ambient_.count(n), full ? 1 : 0);
    }

    /// Smallest subcomplex containing the given simplices.
    static Subcomplex generated_by(const SimplicialSet& ambient, const std::vector<SimplexRef>& gens)
    {
        Subcomplex s(ambient);
        for (const SimplexRef& g : gens)
            s.add_closure(g.dim, g.index);
        return s;
    }

    const SimplicialSet& ambient() const { return ambient_; }
    bool contains(int n, int x) const { return members_[n][x] != 0; }
    int count(int n) const
    {
        return static_cast<int>(std::count(members_[n].begin(), members_[n].end(), 1));
    }

    /// Adds x and everything it generates (faces downward, degeneracies upward).
    void add_closure(int n, int x)
    {
        std::vector<SimplexRef> stack{{n, x}};
        while (!stack.empty()) {
            SimplexRef r = stack.back();
            stack.pop_back();
            if (members_[r.dim][r.index])
                continue;
            members_[r.dim][r.index] = 1;
            if (r.dim > 0)
                for (int i = 0; i <= r.dim; ++i)
                    stack.push_back({r.dim - 1, ambient_.face(r.dim, i, r.index)});
            if (r.dim < ambient_.dim_bound())
                for (int j = 0; j <= r.dim; ++j)
                    stack.push_back({r.dim + 1, ambient_.degeneracy(r.dim, j, r.index)});
        }
    }

    bool is_closed() const
    {
        for (int n = 0; n <= ambient_.dim_bound(); ++n)
            for (int x = 0; x < ambient_.count(n); ++x) {
                if (!members_[n][x])
                    continue;
                if (n > 0)
                    for (int i = 0; i <= n; ++i)
                        if (!members_[n - 1][ambient_.face(n, i, x)])
                            return false;
                if (n < ambient_.dim_bound())
                    for (int j = 0; j <= n; ++j)
                        if (!members_[n + 1][ambient_.degeneracy(n, j, x)])
                            return false;
            }
        return true;
    }

    /// The subcomplex as a simplicial set, with its inclusion into the ambient.
    SimplicialMap inclusion() const
    {
        const int D = ambient_.dim_bound();
        std::vector<std::vector<int>> old_of_new(D + 1), new_of_old(D + 1);
        std::vector<int> counts(D + 1);
        for (int n = 0; n <= D; ++n) {
            new_of_old[n].assign(ambient_.count(n), -1);
            for (int x = 0; x < ambient_.count(n); ++x)
                if (members_[n][x]) {
                    new_of_old[n][x] = static_cast<int>(old_of_new[n].size());
                    old_of_new[n].push_back(x);
                }
            counts[n] = static_cast<int>(old_of_new[n].size());
        }
        std::vector<std::vector<SimplicialSet::Table>> faces(D + 1), degens(D + 1);
        for (int n = 1; n <= D; ++n) {
            faces[n].assign(n + 1, SimplicialSet::Table(counts[n]));
            for (int i = 0; i <= n; ++i)
                for (int x = 0; x < counts[n]; ++x) {
                    const int f = new_of_old[n - 1][ambient_.face(n, i, old_of_new[n][x])];
                    if (f < 0)
                        throw std::invalid_argument("Subcomplex: not closed under faces");
                    faces[n][i][x] = f;
                }
        }
        for (int n = 0; n < D; ++n) {
            degens[n].assign(n + 1, SimplicialSet::Table(counts[n]));
            for (int j = 0; j <= n; ++j)
                for (int x = 0; x < counts[n]; ++x) {
                    const int s = new_of_old[n + 1][ambient_.degeneracy(n, j, old_of_new[n][x])];
                    if (s < 0)
                        throw std::invalid_argument("Subcomplex: not closed under degeneracies");
                    degens[n][j][x] = s;
                }
        }
        SimplicialSet sub(D, std::move(counts), std::move(faces), std::move(degens));
        return SimplicialMap(std::move(sub), ambient_, std::move(old_of_new));
    }

    SimplicialSet as_sset() const { return inclusion().source(); }

    Subcomplex unite(const Subcomplex& other) const
    {
        check_same_ambient(other);
        Subcomplex out = *this;
        for (int n = 0; n <= ambient_.dim_bound(); ++n)
            for (int x = 0; x < ambient_.count(n); ++x)
                out.members_[n][x] = members_[n][x] || other.members_[n][x];
        return out;
    }

    Subcomplex intersect(const Subcomplex& other) const
    {
        check_same_ambient(other);
        Subcomplex out = *this;
        for (int n = 0; n <= ambient_.dim_bound(); ++n)
            for (int x = 0; x < ambient_.count(n); ++x)
                out.members_[n][x] = members_[n][x] && other.members_[n][x];
        return out;
    }

    bool contains(const Subcomplex& other) const
    {
        check_same_ambient(other);
        for (int n = 0; n <= ambient_.dim_bound(); ++n)
            for (int x = 0; x < ambient_.count(n); ++x)
                if (other.members_[n][x] && !members_[n][x])
                    return false;
        return true;
    }

    friend bool operator==(const Subcomplex& a, const Subcomplex& b)
    {
        return a.ambient_ == b.ambient_ && a.members_ == b.members_;
    }

    const std::vector<std::vector<char>>& members() const { return members_; }

private:
    void check_same_ambient(const Subcomplex& other) const
    {
        if (!(ambient_ == other.ambient_))
            throw std::invalid_argument("Subcomplex: arguments live in different ambients");
        if (!is_closed() || !other.is_closed())
            throw std::invalid_argument("Subcomplex: argument is not a subcomplex");
    }

    SimplicialSet ambient_;
    std::vector<std::vector<char>> members_;
};

/// Image of a map as a subcomplex of its target.
inline Subcomplex image(const SimplicialMap& f)
{
    Subcomplex s(f.target());
    for (int n = 0; n <= f.source().dim_bound(); ++n)
        for (int x = 0; x < f.source().count(n); ++x)
            s.add_closure(n, f(n, x));
    return s;
}

inline std::string describe_counts(const std::vector<int>& c)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k)
        os << (k ? "," : "") << c[k];
    os << ')';
    return os.str();
}

} // namespace sset
