#pragma once

// Backtracking search for simplicial maps X -> Y extending a partial assignment.
//
// A map is determined by its values on nondegenerate simplices, so the search
// assigns those in dimension order. Candidates for an n-simplex are looked up
// by the tuple of already assigned face values.

#include "simplicial_set.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <unordered_map>
#include <vector>

namespace sset {

enum class SearchStatus { Found, NoSolution, Exhausted };

/// Three-valued verdict used wherever a search budget applies.
enum class Verdict { False, True, Unknown };

inline const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::True:
        return "true";
    case Verdict::False:
        return "false";
    default:
        return "unknown";
    }
}

inline Verdict verdict_and(Verdict a, Verdict b)
{
    if (a == Verdict::False || b == Verdict::False)
        return Verdict::False;
    if (a == Verdict::Unknown || b == Verdict::Unknown)
        return Verdict::Unknown;
    return Verdict::True;
}

/// Thrown when an enumeration exceeds its budget and there is no three-valued outlet.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, std::int64_t budget)
        : std::runtime_error(what + " (budget " + std::to_string(budget) + ")"), budget_(budget)
    {
    }
    std::int64_t budget() const { return budget_; }

private:
    std::int64_t budget_;
};

/// Candidate lists of Y_n keyed by face tuples, built lazily per dimension.
class FaceIndex {
public:
    explicit FaceIndex(SimplicialSet target) : target_(std::move(target))
    {
        tables_.resize(target_.dim_bound() + 1);
        built_.assign(target_.dim_bound() + 1, false);
    }

    const std::vector<int>& candidates(int n, const std::vector<int>& faces)
    {
        if (n == 0) {
            if (all_vertices_.empty() && target_.count(0) > 0) {
                all_vertices_.resize(target_.count(0));
                std::iota(all_vertices_.begin(), all_vertices_.end(), 0);
            }
            return all_vertices_;
        }
        build(n);
        auto it = tables_[n].find(faces);
        return it == tables_[n].end() ? empty_ : it->second;
    }

    const SimplicialSet& target() const { return target_; }

private:
    void build(int n)
    {
        if (built_[n])
            return;
        std::vector<int> key(n + 1);
        for (int y = 0; y < target_.count(n); ++y) {
            for (int i = 0; i <= n; ++i)
                key[i] = target_.face(n, i, y);
            tables_[n][key].push_back(y);
        }
        built_[n] = true;
    }

    SimplicialSet target_;
    std::vector<std::unordered_map<std::vector<int>, std::vector<int>, VectorHash>> tables_;
    std::vector<bool> built_;
    std::vector<int> all_vertices_;
    std::vector<int> empty_;
};

struct ExtensionProblem {
    SimplicialSet source;
    SimplicialSet target;
    /// fixed[n][x] >= 0 pins the value of x; empty means nothing is pinned.
    std::vector<std::vector<int>> fixed;
    /// Extra condition on the value y of a nondegenerate simplex x of dimension n.
    std::function<bool(int n, int x, int y)> admissible;
    /// Require nondegenerate simplices to go to distinct nondegenerate simplices.
    bool injective = false;
};

struct ExtensionResult {
    SearchStatus status = SearchStatus::NoSolution;
    std::optional<SimplicialMap> map;
    std::int64_t steps = 0;
};

namespace detail {

class ExtensionSearch {
public:
    ExtensionSearch(const ExtensionProblem& p, std::int64_t budget)
        : p_(p), budget_(budget), index_(p.target)
    {
        const SimplicialSet& X = p_.source;
        const int D = X.dim_bound();
        if (p_.target.dim_bound() != D)
            throw std::invalid_argument("extension search: dimension bounds differ");
        value_.resize(D + 1);
        for (int n = 0; n <= D; ++n)
            value_[n].assign(X.count(n), -1);
        derived_.resize(D + 1);
        for (int n = 0; n <= D; ++n)
            derived_[n].resize(X.count(n));
        // Every degenerate simplex is recorded under its nondegenerate root with
        // the generator word that carries the root's value to it.
        for (int n = 0; n <= D; ++n)
            for (int x = 0; x < X.count(n); ++x) {
                if (!X.is_degenerate(n, x))
                    continue;
                auto [epi, root] = X.ez_normalize(n, x);
                derived_[root.dim][root.index].push_back({n, x, generator_word(epi)});
            }
        build_order();
        if (p_.injective) {
            used_.resize(D + 1);
            for (int n = 0; n <= D; ++n)
                used_[n].assign(p_.target.count(n), 0);
        }
    }

    /// Calls visit for every solution until it returns false.
    SearchStatus run(const std::function<bool(const std::vector<std::vector<int>>&)>& visit)
    {
        visit_ = &visit;
        found_any_ = false;
        stopped_ = false;
        exhausted_ = false;
        rec(0);
        if (exhausted_)
            return SearchStatus::Exhausted;
        return found_any_ ? SearchStatus::Found : SearchStatus::NoSolution;
    }

    std::int64_t steps() const { return steps_; }

private:
    struct Derived {
        int dim;
        int index;
        std::vector<Generator> word;
    };

    // Vertices in index order; after each one, every simplex whose faces are
    // all determined, so that constraints from higher simplices prune early.
    void build_order()
    {
        const SimplicialSet& X = p_.source;
        const int D = X.dim_bound();
        std::vector<std::vector<int>> missing(D + 1);
        std::vector<std::vector<std::vector<std::pair<int, int>>>> dependents(D + 1);
        for (int n = 0; n <= D; ++n) {
            missing[n].assign(X.count(n), 0);
            dependents[n].resize(X.count(n));
        }
        for (int n = 1; n <= D; ++n)
            for (int x : X.nondegenerate(n)) {
                std::vector<SimplexRef> roots;
                for (int i = 0; i <= n; ++i) {
                    const SimplexRef r = X.ez_normalize(n - 1, X.face(n, i, x)).second;
                    if (std::find(roots.begin(), roots.end(), r) == roots.end())
                        roots.push_back(r);
                }
                missing[n][x] = static_cast<int>(roots.size());
                for (const SimplexRef& r : roots)
                    dependents[r.dim][r.index].push_back({n, x});
            }
        std::priority_queue<std::pair<int, int>, std::vector<std::pair<int, int>>, std::greater<>> ready;
        auto schedule = [&](int n, int x) {
            order_.push_back({n, x});
            for (auto [m, t] : dependents[n][x])
                if (--missing[m][t] == 0)
                    ready.push({m, t});
        };
        for (int v = 0; v < X.count(0); ++v) {
            schedule(0, v);
            while (!ready.empty()) {
                auto [m, t] = ready.top();
                ready.pop();
                schedule(m, t);
            }
        }
    }

    void assign(int n, int x, int y)
    {
        value_[n][x] = y;
        for (const Derived& d : derived_[n][x]) {
            int v = y;
            for (const Generator& g : d.word)
                v = g.kind == Generator::Kind::Face ? p_.target.face(g.n, g.index, v)
                                                    : p_.target.degeneracy(g.n, g.index, v);
            value_[d.dim][d.index] = v;
        }
    }

    void rec(std::size_t pos)
    {
        if (stopped_ || exhausted_)
            return;
        if (pos == order_.size()) {
            found_any_ = true;
            if (!(*visit_)(value_))
                stopped_ = true;
            return;
        }
        const auto [n, x] = order_[pos];
        const SimplicialSet& X = p_.source;
        std::vector<int> faces;
        if (n > 0) {
            faces.resize(n + 1);
            for (int i = 0; i <= n; ++i)
                faces[i] = value_[n - 1][X.face(n, i, x)];
        }
        const int pinned = p_.fixed.empty() ? -1 : p_.fixed[n][x];
        auto try_value = [&](int y) {
            if (++steps_ > budget_) {
                exhausted_ = true;
                return;
            }
            if (pinned >= 0 && n > 0)
                for (int i = 0; i <= n; ++i)
                    if (p_.target.face(n, i, y) != faces[i])
                        return;
            if (p_.injective && (p_.target.is_degenerate(n, y) || used_[n][y]))
                return;
            if (p_.admissible && !p_.admissible(n, x, y))
                return;
            if (p_.injective)
                used_[n][y] = 1;
            assign(n, x, y);
            rec(pos + 1);
            if (p_.injective)
                used_[n][y] = 0;
        };
        if (pinned >= 0) {
            try_value(pinned);
            return;
        }
        const std::vector<int> cands = index_.candidates(n, faces);
        for (int y : cands) {
            try_value(y);
            if (stopped_ || exhausted_)
                return;
        }
    }

    const ExtensionProblem& p_;
    std::int64_t budget_;
    FaceIndex index_;
    std::vector<std::vector<int>> value_;
    std::vector<std::vector<std::vector<Derived>>> derived_;
    std::vector<std::pair<int, int>> order_;
    std::vector<std::vector<char>> used_;
    const std::function<bool(const std::vector<std::vector<int>>&)>* visit_ = nullptr;
    std::int64_t steps_ = 0;
    bool found_any_ = false;
    bool stopped_ = false;
    bool exhausted_ = false;
};

} // namespace detail

/// First solution in search order, re-verified before return.
inline ExtensionResult find_extension(const ExtensionProblem& problem, std::int64_t budget)
{
    detail::ExtensionSearch search(problem, budget);
    ExtensionResult result;
    std::optional<SimplicialMap> candidate;
    const SearchStatus status = search.run([&](const std::vector<std::vector<int>>& levels) {
        SimplicialMap m(problem.source, problem.target, levels);
        if (!m.is_valid())
            return true;
        if (!problem.fixed.empty())
            for (int n = 0; n <= problem.source.dim_bound(); ++n)
                for (int x = 0; x < problem.source.count(n); ++x)
                    if (problem.fixed[n][x] >= 0 && m(n, x) != problem.fixed[n][x])
                        return true;
        candidate = std::move(m);
        return false;
    });
    result.steps = search.steps();
    if (candidate) {
        result.status = SearchStatus::Found;
        result.map = std::move(candidate);
    } else {
        result.status = status == SearchStatus::Exhausted ? SearchStatus::Exhausted
                                                          : SearchStatus::NoSolution;
    }
    return result;
}

/// Visits every solution in search order. Returns Exhausted if the budget ran out first.
inline SearchStatus enumerate_extensions(const ExtensionProblem& problem, std::int64_t budget,
                                         const std::function<bool(const SimplicialMap&)>& visit)
{
    detail::ExtensionSearch search(problem, budget);
    bool any = false;
    const SearchStatus status = search.run([&](const std::vector<std::vector<int>>& levels) {
        SimplicialMap m(problem.source, problem.target, levels);
        if (!m.is_valid())
            return true;
        if (!problem.fixed.empty())
            for (int n = 0; n <= problem.source.dim_bound(); ++n)
                for (int x = 0; x < problem.source.count(n); ++x)
                    if (problem.fixed[n][x] >= 0 && m(n, x) != problem.fixed[n][x])
                        return true;
        any = true;
        return visit(m);
    });
    if (status == SearchStatus::Exhausted)
        return status;
    return any ? SearchStatus::Found : SearchStatus::NoSolution;
}

/// All simplicial maps X -> Y in search order; throws BudgetExceeded.
inline std::vector<SimplicialMap> all_maps(const SimplicialSet& X, const SimplicialSet& Y,
                                           std::int64_t budget = 10'000'000)
{
    std::vector<SimplicialMap> out;
    ExtensionProblem p{X, Y, {}, {}, false};
    if (enumerate_extensions(p, budget, [&](const SimplicialMap& m) {
            out.push_back(m);
            return true;
        }) == SearchStatus::Exhausted)
        throw BudgetExceeded("all_maps: enumeration budget exceeded", budget);
    return out;
}

/// An isomorphism X -> Y if one exists.
inline std::optional<SimplicialMap> find_isomorphism(const SimplicialSet& X, const SimplicialSet& Y,
                                                     std::int64_t budget = 10'000'000)
{
    if (X.dim_bound() != Y.dim_bound() || X.counts() != Y.counts() ||
        X.nondegenerate_counts() != Y.nondegenerate_counts())
        return std::nullopt;
    ExtensionProblem p{X, Y, {}, {}, true};
    ExtensionResult r = find_extension(p, budget);
    if (r.status == SearchStatus::Exhausted)
        throw BudgetExceeded("find_isomorphism: search budget exceeded", budget);
    if (r.map && r.map->is_iso())
        return r.map;
    return std::nullopt;
}

} // namespace sset
