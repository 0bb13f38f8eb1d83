#include "sset/delta.hpp"

#include <catch_amalgamated.hpp>

using namespace sset;

namespace {

long long binomial(int n, int k)
{
    long long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

MonotoneMap mm(int cod, std::vector<int> v) { return MonotoneMap(cod, std::move(v)); }

} // namespace

TEST_CASE("compose evaluates pointwise")
{
    CHECK(compose(MonotoneMap::identity(2), MonotoneMap::identity(2)) == MonotoneMap::identity(2));
    CHECK(compose(mm(1, {0, 0, 1}), MonotoneMap::identity(2)) == mm(1, {0, 0, 1}));
    CHECK(compose(mm(1, {0, 1}), mm(1, {0, 0})) == mm(1, {0, 0}));
    CHECK_THROWS_AS(compose(mm(1, {0, 1}), mm(2, {0, 2})), std::invalid_argument);
}

TEST_CASE("generators")
{
    CHECK(face(1, 0) == mm(1, {1}));
    CHECK(face(2, 1) == mm(2, {0, 2}));
    CHECK(degeneracy(0, 0) == mm(0, {0, 0}));
    CHECK(degeneracy(1, 1) == mm(1, {0, 1, 1}));
    CHECK(compose(degeneracy(1, 0), face(2, 0)) == MonotoneMap::identity(1));
    CHECK_THROWS_AS(face(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(degeneracy(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(mm(1, {1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(mm(1, {0, 2}), std::invalid_argument);
}

TEST_CASE("epi-mono factorization examples")
{
    auto [e1, m1] = epi_mono_factorize(MonotoneMap::identity(2));
    CHECK(e1 == MonotoneMap::identity(2));
    CHECK(m1 == MonotoneMap::identity(2));
    auto [e2, m2] = epi_mono_factorize(mm(1, {0, 0, 1}));
    CHECK(e2 == mm(1, {0, 0, 1}));
    CHECK(m2 == MonotoneMap::identity(1));
    auto [e3, m3] = epi_mono_factorize(mm(2, {0, 2}));
    CHECK(e3 == MonotoneMap::identity(1));
    CHECK(m3 == mm(2, {0, 2}));
}

TEST_CASE("enumerate_monotone counts are binomial")
{
    CHECK(enumerate_monotone(0, 1) == std::vector<MonotoneMap>{mm(1, {0}), mm(1, {1})});
    CHECK(enumerate_monotone(1, 1) ==
          std::vector<MonotoneMap>{mm(1, {0, 0}), mm(1, {0, 1}), mm(1, {1, 1})});
    CHECK(enumerate_monotone(2, 1).size() == 4);
    for (int n = 0; n <= 5; ++n)
        for (int m = 0; m <= 5; ++m) {
            const auto all = enumerate_monotone(n, m);
            CHECK(static_cast<long long>(all.size()) == binomial(n + m + 1, n + 1));
            CHECK(std::is_sorted(all.begin(), all.end()));
        }
}

TEST_CASE("canonical sections")
{
    CHECK(canonical_section(mm(1, {0, 0, 1})) == mm(2, {0, 2}));
    CHECK(canonical_section(MonotoneMap::identity(3)) == MonotoneMap::identity(3));
    CHECK(canonical_section(mm(0, {0, 0})) == mm(1, {0}));
    CHECK_THROWS_AS(canonical_section(mm(2, {0, 2})), std::invalid_argument);
    for (int n = 0; n <= 4; ++n)
        for (int m = 0; m <= n; ++m)
            for (const auto& s : enumerate_monotone(n, m))
                if (s.is_surjective())
                    CHECK(compose(s, canonical_section(s)) == MonotoneMap::identity(m));
}

TEST_CASE("simplicial identities up to n = 6")
{
    for (int n = 2; n <= 6; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                CHECK(compose(face(n, j), face(n - 1, i)) == compose(face(n, i), face(n - 1, j - 1)));
    for (int n = 0; n <= 6; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                CHECK(compose(degeneracy(n, j), degeneracy(n + 1, i)) ==
                      compose(degeneracy(n, i), degeneracy(n + 1, j + 1)));
    for (int n = 1; n <= 6; ++n)
        for (int i = 0; i <= n - 1; ++i) {
            CHECK(compose(degeneracy(n - 1, i), face(n, i)) == MonotoneMap::identity(n - 1));
            CHECK(compose(degeneracy(n - 1, i), face(n, i + 1)) == MonotoneMap::identity(n - 1));
        }
}

TEST_CASE("factorizations are unique and words reconstruct maps")
{
    for (int n = 0; n <= 4; ++n)
        for (int m = 0; m <= 4; ++m)
            for (const auto& f : enumerate_monotone(n, m)) {
                int found = 0;
                for (int r = 0; r <= std::min(n, m); ++r)
                    for (const auto& e : enumerate_monotone(n, r))
                        if (e.is_surjective())
                            for (const auto& mo : enumerate_monotone(r, m))
                                if (mo.is_injective() && compose(mo, e) == f)
                                    ++found;
                CHECK(found == 1);
                auto [e, mo] = epi_mono_factorize(f);
                CHECK(e.is_surjective());
                CHECK(mo.is_injective());
                CHECK(compose(mo, e) == f);
                CHECK(evaluate_word(generator_word(f), n) == f);
            }
}
