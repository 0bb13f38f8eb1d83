#pragma once

// Lifting problems
//
//     A --u--> X
//     |        |
//     i        p
//     v        v
//     B --v--> S
//
// solved by search for h : B -> X with h i = u and p h = v, plus the horn and
// boundary predicates built on top.

#include "marked.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sset {

struct LiftingProblem {
    SimplicialMap left;   ///< i : A -> B, a monomorphism
    SimplicialMap right;  ///< p : X -> S
    SimplicialMap top;    ///< u : A -> X
    SimplicialMap bottom; ///< v : B -> S
    /// Optional markings on B and X; a lift must send marked edges to marked edges.
    std::vector<char> left_marks;
    std::vector<char> right_marks;
};

struct LiftResult {
    SearchStatus status = SearchStatus::NoSolution;
    std::optional<SimplicialMap> lift;
    std::int64_t steps = 0;
};

inline void check_lifting_problem(const LiftingProblem& p)
{
    if (!p.left.is_mono())
        throw std::invalid_argument("lifting problem: left map is not a monomorphism");
    if (!(compose(p.right, p.top) == compose(p.bottom, p.left)))
        throw std::invalid_argument("lifting problem: square does not commute");
}

inline LiftResult solve_lift(const LiftingProblem& prob, std::int64_t budget)
{
    check_lifting_problem(prob);
    const SimplicialSet& B = prob.left.target();
    const SimplicialSet& X = prob.right.source();
    const int D = B.dim_bound();
    std::vector<std::vector<int>> fixed(D + 1);
    for (int n = 0; n <= D; ++n) {
        fixed[n].assign(B.count(n), -1);
        for (int a = 0; a < prob.left.source().count(n); ++a)
            fixed[n][prob.left(n, a)] = prob.top(n, a);
    }
    const bool marked = !prob.left_marks.empty();
    ExtensionProblem ext{B, X, std::move(fixed),
                         [&](int n, int b, int y) {
                             if (prob.right(n, y) != prob.bottom(n, b))
                                 return false;
                             if (marked && n == 1 && prob.left_marks[b] && !prob.right_marks[y])
                                 return false;
                             return true;
                         },
                         false};
    ExtensionResult r = find_extension(ext, budget);
    LiftResult out{r.status, std::nullopt, r.steps};
    if (r.map) {
        // Re-verify both triangles before handing the lift out.
        if (!(compose(*r.map, prob.left) == prob.top) || !(compose(prob.right, *r.map) == prob.bottom))
            throw std::logic_error("solve_lift: search returned an invalid lift");
        out.lift = std::move(r.map);
    }
    return out;
}

/// Marked variant; markings come from the marked sets.
inline LiftResult solve_marked_lift(const MarkedMap& left, const MarkedMap& right, const SimplicialMap& top,
                                    const SimplicialMap& bottom, std::int64_t budget)
{
    LiftingProblem prob{left.map(), right.map(), top, bottom, left.target().marked(),
                        right.source().marked()};
    if (prob.left_marks.empty() && left.target().underlying().dim_bound() >= 1)
        prob.left_marks.assign(left.target().underlying().count(1), 0);
    return solve_lift(prob, budget);
}

struct RlpReport {
    Verdict verdict = Verdict::True;
    std::string failure; ///< description of the first failing square
    std::int64_t squares = 0;
    std::int64_t steps = 0;
};

/// RLP of p : X -> S against i : A -> B over all commutative squares.
/// Markings are honoured when the marked-set arguments are supplied.
inline RlpReport check_rlp(const SimplicialMap& i, const SimplicialMap& p, std::int64_t budget,
                           const MarkedSimplicialSet* a_marked = nullptr,
                           const MarkedSimplicialSet* b_marked = nullptr,
                           const MarkedSimplicialSet* x_marked = nullptr,
                           const MarkedSimplicialSet* s_marked = nullptr)
{
    RlpReport rep;
    const SimplicialSet& A = i.source();
    const SimplicialSet& B = i.target();
    const SimplicialSet& X = p.source();
    const SimplicialSet& S = p.target();
    auto edge_ok = [](const MarkedSimplicialSet* src, const MarkedSimplicialSet* tgt, int n, int x,
                      int y) { return !(src && tgt && n == 1 && src->is_marked(x) && !tgt->is_marked(y)); };
    ExtensionProblem bottoms{B, S, {}, [&](int n, int x, int y) { return edge_ok(b_marked, s_marked, n, x, y); },
                             false};
    std::int64_t remaining = budget;
    auto spend = [&](std::int64_t s) {
        rep.steps += s;
        remaining -= s;
    };
    bool exhausted = false;
    const SearchStatus outer = enumerate_extensions(bottoms, remaining, [&](const SimplicialMap& v) {
        const SimplicialMap vi = compose(v, i);
        ExtensionProblem tops{A, X, {},
                              [&](int n, int a, int y) {
                                  return p(n, y) == vi(n, a) && edge_ok(a_marked, x_marked, n, a, y);
                              },
                              false};
        const SearchStatus inner = enumerate_extensions(tops, remaining, [&](const SimplicialMap& u) {
            ++rep.squares;
            LiftingProblem prob{i, p, u, v, {}, {}};
            if (b_marked && x_marked) {
                prob.left_marks = b_marked->marked();
                prob.right_marks = x_marked->marked();
            }
            LiftResult r = solve_lift(prob, remaining);
            spend(r.steps);
            if (r.status == SearchStatus::Exhausted || remaining <= 0) {
                exhausted = true;
                return false;
            }
            if (r.status == SearchStatus::NoSolution) {
                rep.verdict = Verdict::False;
                rep.failure = "no lift for square #" + std::to_string(rep.squares);
                return false;
            }
            return true;
        });
        if (inner == SearchStatus::Exhausted)
            exhausted = true;
        return rep.verdict != Verdict::False && !exhausted;
    });
    if (outer == SearchStatus::Exhausted)
        exhausted = true;
    if (rep.verdict != Verdict::False && exhausted) {
        rep.verdict = Verdict::Unknown;
        rep.failure = "budget of " + std::to_string(budget) + " search steps exhausted";
    }
    return rep;
}

enum class HornKind { Inner, All, Boundary };

/// RLP of p against horns (or boundaries) of dimension up to D.
inline RlpReport check_horns(const SimplicialMap& p, int D, HornKind kind, std::int64_t budget)
{
    const int B = p.source().dim_bound();
    if (D > B)
        throw std::invalid_argument("horn check: D exceeds the dimension bound " + std::to_string(B));
    RlpReport total;
    std::int64_t remaining = budget;
    auto run = [&](const SimplicialMap& i, const std::string& what) {
        RlpReport r = check_rlp(i, p, remaining);
        remaining -= r.steps;
        total.steps += r.steps;
        total.squares += r.squares;
        if (r.verdict == Verdict::False) {
            total.verdict = Verdict::False;
            total.failure = what + ": " + r.failure;
            return false;
        }
        if (r.verdict == Verdict::Unknown) {
            total.verdict = Verdict::Unknown;
            total.failure = what + ": " + r.failure;
            return false;
        }
        return true;
    };
    if (kind == HornKind::Boundary) {
        for (int n = 0; n <= D; ++n)
            if (!run(boundary_inclusion(n, B), "boundary of dimension " + std::to_string(n)))
                return total;
        return total;
    }
    for (int n = kind == HornKind::Inner ? 2 : 1; n <= D; ++n)
        for (int k = 0; k <= n; ++k) {
            if (kind == HornKind::Inner && (k == 0 || k == n))
                continue;
            if (!run(horn_inclusion(n, k, B),
                     "horn " + std::to_string(n) + "," + std::to_string(k)))
                return total;
        }
    return total;
}

inline constexpr std::int64_t default_lift_budget = 10'000'000;

inline Verdict is_quasi_category(const SimplicialSet& X, int D, std::int64_t budget = default_lift_budget)
{
    return check_horns(to_point(X), D, HornKind::Inner, budget).verdict;
}

inline Verdict is_kan_complex(const SimplicialSet& X, int D, std::int64_t budget = default_lift_budget)
{
    return check_horns(to_point(X), D, HornKind::All, budget).verdict;
}

inline Verdict is_inner_fibration(const SimplicialMap& p, int D, std::int64_t budget = default_lift_budget)
{
    return check_horns(p, D, HornKind::Inner, budget).verdict;
}

inline Verdict is_kan_fibration(const SimplicialMap& p, int D, std::int64_t budget = default_lift_budget)
{
    return check_horns(p, D, HornKind::All, budget).verdict;
}

inline Verdict is_trivial_fibration(const SimplicialMap& p, int D, std::int64_t budget = default_lift_budget)
{
    return check_horns(p, D, HornKind::Boundary, budget).verdict;
}

/// RLP of the marked map p against every generator and every attaching square.
inline RlpReport check_rlp_marked(const MarkedMap& p, const std::vector<MarkedGenerator>& generators,
                                  std::int64_t budget)
{
    RlpReport total;
    std::int64_t remaining = budget;
    for (const MarkedGenerator& g : generators) {
        RlpReport r = check_rlp(g.map.map(), p.map(), remaining, &g.map.source(), &g.map.target(),
                                &p.source(), &p.target());
        remaining -= r.steps;
        total.steps += r.steps;
        total.squares += r.squares;
        if (r.verdict != Verdict::True) {
            total.verdict = r.verdict;
            total.failure = g.label + ": " + r.failure;
            return total;
        }
    }
    return total;
}

} // namespace sset
