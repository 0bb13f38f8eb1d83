#pragma once

// Integer matrices, Smith normal form and homology of normalized chains.

#include "simplicial_set.hpp"

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sset {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols, 0) {}

    static IntMatrix identity(int n)
    {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::int64_t& operator()(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
    std::int64_t operator()(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::int64_t> data_;
};

namespace detail {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer matrix arithmetic overflowed 64 bits");
    return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer matrix arithmetic overflowed 64 bits");
    return r;
}

} // namespace detail

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product: shape mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0)
                continue;
            for (int j = 0; j < b.cols(); ++j)
                c(i, j) = detail::checked_add(c(i, j), detail::checked_mul(a(i, k), b(k, j)));
        }
    return c;
}

/// U * M * V = D with D diagonal, each diagonal entry dividing the next.
struct SmithForm {
    IntMatrix diagonal;
    IntMatrix U, U_inverse;
    IntMatrix V, V_inverse;

    /// Nonzero diagonal entries in order.
    std::vector<std::int64_t> invariant_factors() const
    {
        std::vector<std::int64_t> out;
        for (int i = 0; i < std::min(diagonal.rows(), diagonal.cols()); ++i)
            if (diagonal(i, i) != 0)
                out.push_back(diagonal(i, i));
        return out;
    }

    int rank() const { return static_cast<int>(invariant_factors().size()); }
};

/// Without transforms only the diagonal is computed and U, V and their inverses are left empty.
inline SmithForm smith_normal_form(const IntMatrix& M, bool transforms = true)
{
    using detail::checked_add;
    using detail::checked_mul;
    const int R = M.rows(), C = M.cols();
    SmithForm s{M, {}, {}, {}, {}};
    if (transforms) {
        s.U = s.U_inverse = IntMatrix::identity(R);
        s.V = s.V_inverse = IntMatrix::identity(C);
    }
    IntMatrix& A = s.diagonal;

    // row_i += c * row_j
    auto row_add = [&](int i, int j, std::int64_t c) {
        if (c == 0)
            return;
        for (int k = 0; k < C; ++k)
            A(i, k) = checked_add(A(i, k), checked_mul(c, A(j, k)));
        if (!transforms)
            return;
        for (int k = 0; k < R; ++k)
            s.U(i, k) = checked_add(s.U(i, k), checked_mul(c, s.U(j, k)));
        for (int k = 0; k < R; ++k)
            s.U_inverse(k, j) = checked_add(s.U_inverse(k, j), checked_mul(-c, s.U_inverse(k, i)));
    };
    auto row_swap = [&](int i, int j) {
        if (i == j)
            return;
        for (int k = 0; k < C; ++k)
            std::swap(A(i, k), A(j, k));
        if (!transforms)
            return;
        for (int k = 0; k < R; ++k)
            std::swap(s.U(i, k), s.U(j, k));
        for (int k = 0; k < R; ++k)
            std::swap(s.U_inverse(k, i), s.U_inverse(k, j));
    };
    auto row_negate = [&](int i) {
        for (int k = 0; k < C; ++k)
            A(i, k) = -A(i, k);
        if (!transforms)
            return;
        for (int k = 0; k < R; ++k)
            s.U(i, k) = -s.U(i, k);
        for (int k = 0; k < R; ++k)
            s.U_inverse(k, i) = -s.U_inverse(k, i);
    };
    // col_j += c * col_i
    auto col_add = [&](int j, int i, std::int64_t c) {
        if (c == 0)
            return;
        for (int k = 0; k < R; ++k)
            A(k, j) = checked_add(A(k, j), checked_mul(c, A(k, i)));
        if (!transforms)
            return;
        for (int k = 0; k < C; ++k)
            s.V(k, j) = checked_add(s.V(k, j), checked_mul(c, s.V(k, i)));
        for (int k = 0; k < C; ++k)
            s.V_inverse(i, k) = checked_add(s.V_inverse(i, k), checked_mul(-c, s.V_inverse(j, k)));
    };
    auto col_swap = [&](int i, int j) {
        if (i == j)
            return;
        for (int k = 0; k < R; ++k)
            std::swap(A(k, i), A(k, j));
        if (!transforms)
            return;
        for (int k = 0; k < C; ++k)
            std::swap(s.V(k, i), s.V(k, j));
        for (int k = 0; k < C; ++k)
            std::swap(s.V_inverse(i, k), s.V_inverse(j, k));
    };

    for (int t = 0; t < std::min(R, C); ++t) {
        while (true) {
            // Smallest nonzero entry of the remaining block becomes the pivot.
            int pr = -1, pc = -1;
            for (int i = t; i < R; ++i)
                for (int j = t; j < C; ++j)
                    if (A(i, j) != 0 && (pr < 0 || std::llabs(A(i, j)) < std::llabs(A(pr, pc)))) {
                        pr = i;
                        pc = j;
                    }
            if (pr < 0)
                return s;
            row_swap(t, pr);
            col_swap(t, pc);
            bool clean = true;
            for (int i = t + 1; i < R; ++i) {
                row_add(i, t, -(A(i, t) / A(t, t)));
                if (A(i, t) != 0)
                    clean = false;
            }
            for (int j = t + 1; j < C; ++j) {
                col_add(j, t, -(A(t, j) / A(t, t)));
                if (A(t, j) != 0)
                    clean = false;
            }
            if (!clean)
                continue;
            int bad = -1;
            for (int i = t + 1; i < R && bad < 0; ++i)
                for (int j = t + 1; j < C; ++j)
                    if (A(i, j) % A(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad >= 0) {
                row_add(t, bad, 1);
                continue;
            }
            if (A(t, t) < 0)
                row_negate(t);
            break;
        }
    }
    return s;
}

/// Boundary matrix of the normalized chains in degree k (rows: (k-1)-simplices,
/// columns: k-simplices), restricted to nondegenerate simplices accepted by keep.
template <class Keep>
IntMatrix boundary_matrix(const SimplicialSet& X, int k, Keep keep, std::vector<int>* rows_out = nullptr,
                          std::vector<int>* cols_out = nullptr)
{
    std::vector<int> rows, cols;
    if (k >= 1)
        for (int x : X.nondegenerate(k - 1))
            if (keep(k - 1, x))
                rows.push_back(x);
    for (int x : X.nondegenerate(k))
        if (keep(k, x))
            cols.push_back(x);
    std::vector<int> row_of(k >= 1 ? X.count(k - 1) : 0, -1);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
        row_of[rows[r]] = r;
    IntMatrix M(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    if (k >= 1)
        for (int c = 0; c < static_cast<int>(cols.size()); ++c)
            for (int i = 0; i <= k; ++i) {
                const int f = X.face(k, i, cols[c]);
                if (row_of[f] >= 0)
                    M(row_of[f], c) += (i % 2 == 0) ? 1 : -1;
            }
    if (rows_out)
        *rows_out = rows;
    if (cols_out)
        *cols_out = cols;
    return M;
}

inline IntMatrix boundary_matrix(const SimplicialSet& X, int k)
{
    return boundary_matrix(X, k, [](int, int) { return true; });
}

struct HomologyGroup {
    int betti = 0;
    std::vector<std::int64_t> torsion;
    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const HomologyGroup& h)
{
    os << "Z^" << h.betti;
    for (auto t : h.torsion)
        os << " + Z/" << t;
    return os;
}

/// Raised for homology queries at or above the truncation dimension.
class TruncationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

template <class Keep>
HomologyGroup homology_of(const SimplicialSet& X, int k, Keep keep)
{
    if (k < 0)
        throw std::invalid_argument("homology: negative degree");
    if (k >= X.dim_bound())
        throw TruncationError("homology: degree " + std::to_string(k) +
                              " is not below the truncation dimension " +
                              std::to_string(X.dim_bound()) +
                              "; boundaries from dimension D+1 are missing");
    const IntMatrix dk = boundary_matrix(X, k, keep);
    const IntMatrix dk1 = boundary_matrix(X, k + 1, keep);
    const int rank_k = k == 0 ? 0 : smith_normal_form(dk, false).rank();
    const SmithForm s1 = smith_normal_form(dk1, false);
    HomologyGroup h;
    h.betti = dk.cols() - rank_k - s1.rank();
    for (auto d : s1.invariant_factors())
        if (d > 1)
            h.torsion.push_back(d);
    return h;
}

inline HomologyGroup homology(const SimplicialSet& X, int k)
{
    return homology_of(X, k, [](int, int) { return true; });
}

/// Homology of X relative to the image of a monomorphism A -> X.
inline HomologyGroup relative_homology(const SimplicialMap& inclusion, int k)
{
    if (!inclusion.is_mono())
        throw std::invalid_argument("relative_homology: map is not a monomorphism");
    const SimplicialSet& X = inclusion.target();
    std::vector<std::vector<char>> in_a(X.dim_bound() + 1);
    for (int n = 0; n <= X.dim_bound(); ++n) {
        in_a[n].assign(X.count(n), 0);
        for (int a = 0; a < inclusion.source().count(n); ++a)
            in_a[n][inclusion(n, a)] = 1;
    }
    return homology_of(X, k, [&](int n, int x) { return !in_a[n][x]; });
}

/// Reduced homology in degree 0 is the betti number minus one (when X is nonempty).
inline HomologyGroup reduced_homology(const SimplicialSet& X, int k)
{
    HomologyGroup h = homology(X, k);
    if (k == 0 && X.count(0) > 0)
        --h.betti;
    return h;
}

} // namespace sset
