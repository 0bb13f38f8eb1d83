#pragma once

// Arithmetic in the simplex category: monotone maps [n] -> [m], the face and
// degeneracy generators, and the epi-mono normal form.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sset {

/// A weakly increasing map [dom] -> [cod], stored as its dense value table.
class MonotoneMap {
public:
    MonotoneMap() : cod_(0), values_{0} {}

    MonotoneMap(int cod, std::vector<int> values) : cod_(cod), values_(std::move(values))
    {
        if (values_.empty())
            throw std::invalid_argument("MonotoneMap: empty value table");
        for (std::size_t k = 0; k < values_.size(); ++k) {
            if (values_[k] < 0 || values_[k] > cod_)
                throw std::invalid_argument("MonotoneMap: value out of range [0," +
                                            std::to_string(cod_) + "]");
            if (k > 0 && values_[k] < values_[k - 1])
                throw std::invalid_argument("MonotoneMap: values not weakly increasing");
        }
    }

    static MonotoneMap identity(int n)
    {
        std::vector<int> v(n + 1);
        for (int k = 0; k <= n; ++k)
            v[k] = k;
        return MonotoneMap(n, std::move(v));
    }

    int dom() const { return static_cast<int>(values_.size()) - 1; }
    int cod() const { return cod_; }
    int operator()(int k) const { return values_.at(k); }
    std::span<const int> values() const { return values_; }

    bool is_injective() const
    {
        return std::adjacent_find(values_.begin(), values_.end()) == values_.end();
    }

    bool is_surjective() const
    {
        return values_.front() == 0 && values_.back() == cod_ &&
               std::adjacent_find(values_.begin(), values_.end(),
                                  [](int a, int b) { return b > a + 1; }) == values_.end();
    }

    bool is_identity() const { return dom() == cod_ && is_injective(); }

    friend bool operator==(const MonotoneMap&, const MonotoneMap&) = default;
    friend auto operator<=>(const MonotoneMap&, const MonotoneMap&) = default;

private:
    int cod_;
    std::vector<int> values_;
};

inline std::ostream& operator<<(std::ostream& os, const MonotoneMap& f)
{
    os << '(';
    for (int k = 0; k <= f.dom(); ++k)
        os << (k ? "," : "") << f(k);
    return os << "):[" << f.dom() << "]->[" << f.cod() << ']';
}

/// g after f.
inline MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f)
{
    if (f.cod() != g.dom())
        throw std::invalid_argument("compose: codomain [" + std::to_string(f.cod()) +
                                    "] does not match domain [" + std::to_string(g.dom()) + "]");
    std::vector<int> v(f.dom() + 1);
    for (int k = 0; k <= f.dom(); ++k)
        v[k] = g(f(k));
    return MonotoneMap(g.cod(), std::move(v));
}

/// d^n_i : [n-1] -> [n], the injection skipping i.
inline MonotoneMap face(int n, int i)
{
    if (n < 1)
        throw std::invalid_argument("face: n must be >= 1");
    if (i < 0 || i > n)
        throw std::invalid_argument("face: index " + std::to_string(i) + " out of range for n=" +
                                    std::to_string(n));
    std::vector<int> v(n);
    for (int k = 0; k < n; ++k)
        v[k] = k < i ? k : k + 1;
    return MonotoneMap(n, std::move(v));
}

/// s^n_j : [n+1] -> [n], the surjection hitting j twice.
inline MonotoneMap degeneracy(int n, int j)
{
    if (n < 0)
        throw std::invalid_argument("degeneracy: n must be >= 0");
    if (j < 0 || j > n)
        throw std::invalid_argument("degeneracy: index " + std::to_string(j) +
                                    " out of range for n=" + std::to_string(n));
    std::vector<int> v(n + 2);
    for (int k = 0; k <= n + 1; ++k)
        v[k] = k <= j ? k : k - 1;
    return MonotoneMap(n, std::move(v));
}

struct EpiMono {
    MonotoneMap epi;
    MonotoneMap mono;
};

/// The unique factorization f = mono . epi through [|image| - 1].
inline EpiMono epi_mono_factorize(const MonotoneMap& f)
{
    std::vector<int> image;
    std::vector<int> epi(f.dom() + 1);
    for (int k = 0; k <= f.dom(); ++k) {
        if (image.empty() || image.back() != f(k))
            image.push_back(f(k));
        epi[k] = static_cast<int>(image.size()) - 1;
    }
    const int r = static_cast<int>(image.size()) - 1;
    return {MonotoneMap(r, std::move(epi)), MonotoneMap(f.cod(), std::move(image))};
}

/// All monotone maps [n] -> [m] in lexicographic order; there are C(n+m+1, n+1).
inline std::vector<MonotoneMap> enumerate_monotone(int n, int m)
{
    std::vector<MonotoneMap> out;
    if (n < 0 || m < 0)
        return out;
    std::vector<int> v(n + 1, 0);
    while (true) {
        out.emplace_back(m, v);
        int k = n;
        while (k >= 0 && v[k] == m)
            --k;
        if (k < 0)
            break;
        ++v[k];
        for (int t = k + 1; t <= n; ++t)
            v[t] = v[k];
    }
    return out;
}

/// Section of a surjection choosing the minimal preimage of every value.
inline MonotoneMap canonical_section(const MonotoneMap& s)
{
    if (!s.is_surjective())
        throw std::invalid_argument("canonical_section: map is not surjective");
    std::vector<int> v(s.cod() + 1, -1);
    for (int k = s.dom(); k >= 0; --k)
        v[s(k)] = k;
    return MonotoneMap(s.dom(), std::move(v));
}

/// A generator of the simplex category: d^n_i or s^n_j.
struct Generator {
    enum class Kind { Face, Degeneracy };
    Kind kind;
    int n;
    int index;

    MonotoneMap map() const { return kind == Kind::Face ? face(n, index) : degeneracy(n, index); }
    friend bool operator==(const Generator&, const Generator&) = default;
};

/// Writes f = g_1 . g_2 . ... . g_k with faces to the left of degeneracies.
/// The word is returned as [g_1, ..., g_k]; an identity yields the empty word.
inline std::vector<Generator> generator_word(const MonotoneMap& f)
{
    auto [epi, mono] = epi_mono_factorize(f);
    std::vector<Generator> faces;
    std::vector<int> m(mono.values().begin(), mono.values().end());
    int cod = mono.cod();
    // Peel off the largest missing value each time: mono = d^cod_i . mono'.
    while (static_cast<int>(m.size()) - 1 < cod) {
        int missing = cod;
        for (int k = static_cast<int>(m.size()) - 1; k >= 0 && m[k] == missing; --k)
            --missing;
        faces.push_back({Generator::Kind::Face, cod, missing});
        for (int& x : m)
            if (x > missing)
                --x;
        --cod;
    }
    std::vector<Generator> degens;
    std::vector<int> e(epi.values().begin(), epi.values().end());
    // Peel off the first repeat each time: e = e' . s^{n-1}_j.
    while (true) {
        auto it = std::adjacent_find(e.begin(), e.end());
        if (it == e.end())
            break;
        const int j = static_cast<int>(it - e.begin());
        const int n = static_cast<int>(e.size()) - 1;
        degens.push_back({Generator::Kind::Degeneracy, n - 1, j});
        e.erase(e.begin() + j + 1);
    }
    // degens were collected as e = e' . s_a, e' = e'' . s_b, ... so e = ... s_b . s_a.
    std::reverse(degens.begin(), degens.end());
    faces.insert(faces.end(), degens.begin(), degens.end());
    return faces;
}

/// Evaluates a generator word back into a monotone map.
inline MonotoneMap evaluate_word(const std::vector<Generator>& word, int dom)
{
    MonotoneMap acc = MonotoneMap::identity(dom);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        acc = compose(it->map(), acc);
    return acc;
}

} // namespace sset
