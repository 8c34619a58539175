#include <doctest.h>

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "constructions.hpp"
#include "grids.hpp"
#include "pda.hpp"

using namespace pda;
using testgrid::make;

namespace {

// -- local reference helpers, no shared code with the library ------------

std::int64_t nCr(int n, int k) {
    if (k < 0 || k > n || n < 0)
        return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - i + 1) / i;
    return r;
}

std::int64_t powi(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

std::vector<int> bits_to_elems(unsigned mask) {
    std::vector<int> v;
    for (int x = 1; mask; ++x, mask >>= 1)
        if (mask & 1u)
            v.push_back(x);
    return v;
}

std::int64_t colex(const std::vector<int>& elems) {
    std::int64_t r = 1;
    for (std::size_t i = 0; i < elems.size(); ++i)
        r += nCr(elems[i] - 1, static_cast<int>(i) + 1);
    return r;
}

// expected grid of the disjoint-subset scheme, built from bitmask
// enumeration: cell (rank A, rank B) = rank(A u B) iff A and B are disjoint
Pda reference_scheme1(int n, int a, int b) {
    const int rows = static_cast<int>(nCr(n, a));
    const int cols = static_cast<int>(nCr(n, b));
    const int syms = static_cast<int>(nCr(n, a + b));
    std::vector<Cell> grid(static_cast<std::size_t>(rows) * cols);
    for (unsigned am = 0; am < (1u << n); ++am) {
        if (__builtin_popcount(am) != a)
            continue;
        for (unsigned bm = 0; bm < (1u << n); ++bm) {
            if (__builtin_popcount(bm) != b || (am & bm))
                continue;
            const std::int64_t row = colex(bits_to_elems(am));
            const std::int64_t col = colex(bits_to_elems(bm));
            const std::int64_t sym = colex(bits_to_elems(am | bm));
            grid[static_cast<std::size_t>(row - 1) * cols + (col - 1)] =
                Cell::sym(static_cast<int>(sym));
        }
    }
    return Pda(rows, cols, syms, std::move(grid));
}

// expected grid of the q-ary scheme, built by enumerating every candidate
// (row vector, column pair, symbol vector) triple against the three edge
// conditions: c agrees with a off delta, a = c + c_extra + 1 on delta,
// and b = c on delta
Pda reference_scheme2(int q, int m, int t) {
    const int rows = static_cast<int>(powi(q, m));
    const int cols = static_cast<int>(nCr(m, t) * powi(q, t));
    const int syms = static_cast<int>(powi(q, m) * powi(q - 1, t));

    const auto digits = [](std::int64_t value, int len, int radix) {
        std::vector<int> d(static_cast<std::size_t>(len));
        for (int i = len - 1; i >= 0; --i) {
            d[static_cast<std::size_t>(i)] = static_cast<int>(value % radix);
            value /= radix;
        }
        return d;
    };

    // delta-sets in colex-rank order: position block*q^t hosts the block
    std::vector<std::vector<int>> deltas(static_cast<std::size_t>(nCr(m, t)));
    for (unsigned mask = 0; mask < (1u << m); ++mask)
        if (__builtin_popcount(mask) == t) {
            const auto elems = bits_to_elems(mask);
            deltas[static_cast<std::size_t>(colex(elems) - 1)] = elems;
        }

    std::vector<Cell> grid(static_cast<std::size_t>(rows) * cols);
    std::vector<char> cell_used(grid.size(), 0);
    for (std::int64_t aval = 0; aval < rows; ++aval) {
        const auto a = digits(aval, m, q);
        for (std::size_t di = 0; di < deltas.size(); ++di) {
            const auto& delta = deltas[di];
            for (std::int64_t bval = 0; bval < powi(q, t); ++bval) {
                const auto bvec = digits(bval, t, q);
                const std::int64_t col = static_cast<std::int64_t>(di) * powi(q, t) + bval + 1;
                for (std::int64_t cval = 0; cval < syms; ++cval) {
                    // first m digits base q, last t digits base q-1
                    const auto chead = digits(cval / powi(q - 1, t), m, q);
                    const auto ctail = digits(cval % powi(q - 1, t), t, q - 1);
                    bool edge = true;
                    std::vector<char> on_delta(static_cast<std::size_t>(m) + 1, 0);
                    for (int j = 0; j < t && edge; ++j) {
                        const int d = delta[static_cast<std::size_t>(j)];
                        on_delta[static_cast<std::size_t>(d)] = 1;
                        edge = a[static_cast<std::size_t>(d - 1)] ==
                                   (chead[static_cast<std::size_t>(d - 1)] +
                                    ctail[static_cast<std::size_t>(j)] + 1) % q &&
                               bvec[static_cast<std::size_t>(j)] ==
                                   chead[static_cast<std::size_t>(d - 1)];
                    }
                    for (int i = 1; i <= m && edge; ++i)
                        if (!on_delta[static_cast<std::size_t>(i)])
                            edge = a[static_cast<std::size_t>(i - 1)] ==
                                   chead[static_cast<std::size_t>(i - 1)];
                    if (!edge)
                        continue;
                    const std::size_t idx =
                        static_cast<std::size_t>(aval) * cols + static_cast<std::size_t>(col - 1);
                    REQUIRE(!cell_used[idx]); // at most one symbol per cell
                    cell_used[idx] = 1;
                    grid[idx] = Cell::sym(static_cast<int>(cval + 1));
                }
            }
        }
    }
    return Pda(rows, cols, syms, std::move(grid));
}

void check_params(const Pda& p, std::int64_t users, std::int64_t division, std::int64_t stars,
                  std::int64_t symbols, std::int64_t reg) {
    const PdaParams pr = params(p);
    CHECK(pr.users == users);
    CHECK(pr.division == division);
    CHECK(pr.stars_per_column == stars);
    CHECK(pr.symbols == symbols);
    REQUIRE(pr.regularity.has_value());
    CHECK(*pr.regularity == reg);
}

int column_integers(const Pda& p, int k) {
    return p.rows() - p.column_star_count(k);
}

} // namespace

TEST_CASE("smallest subset construction is the 2x2 exchange array") {
    CHECK(scheme1({2, 1, 1}) == make(1, "* 1 / 1 *"));
}

TEST_CASE("singleton subset construction on four points, frozen grid") {
    // rows/columns are singletons {1}..{4}; symbols are the colex-ranked
    // pairs {1,2},{1,3},{2,3},{1,4},{2,4},{3,4}
    const Pda p = scheme1({4, 1, 1});
    CHECK(p == make(6, "* 1 2 4 / 1 * 3 5 / 2 3 * 6 / 4 5 6 *"));
    CHECK(validate(p).valid());
    check_params(p, 4, 4, 1, 6, 2);
}

TEST_CASE("subset construction matches the bitmask reference on a sweep") {
    for (int n = 2; n <= 6; ++n)
        for (int a = 1; a < n; ++a)
            for (int b = 1; a + b <= n; ++b) {
                const Pda p = scheme1({n, a, b});
                CHECK(p == reference_scheme1(n, a, b));
                CHECK(validate(p).valid());
                check_params(p, nCr(n, b), nCr(n, a), nCr(n, a) - nCr(n - b, a), nCr(n, a + b),
                             nCr(a + b, a));
                for (int k = 1; k <= p.cols(); ++k)
                    CHECK(column_integers(p, k) == nCr(n - b, a));
                // uncoded-vs-coded rate ratio
                const PdaParams pr = params(p);
                const Rational uncoded(pr.users * (pr.division - pr.stars_per_column),
                                       pr.division);
                CHECK(uncoded / pr.rate == Rational(nCr(a + b, a)));
            }
}

TEST_CASE("subset construction boundary cases") {
    CHECK(params(scheme1({4, 2, 2})).symbols == 1); // n = a+b
    CHECK_THROWS_AS(scheme1({3, 2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(scheme1({3, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(scheme1({0, 1, 1}), std::invalid_argument);
}

TEST_CASE("smallest q-ary construction, frozen grid") {
    CHECK(scheme2({2, 1, 1}) == make(2, "* 2 / 1 *"));
    check_params(scheme2({2, 1, 1}), 2, 2, 1, 2, 1);
}

TEST_CASE("q-ary construction matches the condition-by-condition reference") {
    for (const auto& [q, m, t] : std::vector<std::tuple<int, int, int>>{
             {2, 1, 1}, {2, 2, 1}, {2, 2, 2}, {2, 3, 1}, {2, 3, 2}, {3, 1, 1}, {3, 2, 1},
             {3, 2, 2}}) {
        const Pda p = scheme2({q, m, t});
        CHECK(p == reference_scheme2(q, m, t));
        CHECK(validate(p).valid());
        check_params(p, nCr(m, t) * powi(q, t), powi(q, m),
                     powi(q, m) - powi(q, m - t) * powi(q - 1, t),
                     powi(q, m) * powi(q - 1, t), nCr(m, t));
        for (int k = 1; k <= p.cols(); ++k)
            CHECK(column_integers(p, k) == powi(q, m - t) * powi(q - 1, t));
        CHECK(params(p).rate == Rational(powi(q - 1, t)));
    }
}

TEST_CASE("q-ary construction rejects out-of-range parameters") {
    CHECK_THROWS_AS(scheme2({1, 2, 1}), std::invalid_argument); // q too small
    CHECK_THROWS_AS(scheme2({2, 2, 3}), std::invalid_argument); // t > m
    CHECK_THROWS_AS(scheme2({2, 2, 0}), std::invalid_argument);
}

TEST_CASE("uncoded prefetch scheme is the b=1 subset construction") {
    CHECK(ali_niesen(2, 1) == make(1, "* 1 / 1 *"));
    CHECK(ali_niesen(4, 1) == scheme1({4, 1, 1}));
    check_params(ali_niesen(4, 2), 4, 6, 3, 4, 3);
    CHECK(validate(ali_niesen(4, 2)).valid());
    CHECK_THROWS_AS(ali_niesen(4, 0), std::invalid_argument);
    CHECK_THROWS_AS(ali_niesen(4, 4), std::invalid_argument);
    CHECK_THROWS_AS(ali_niesen(1, 1), std::invalid_argument);
}

TEST_CASE("row/symbol swap of the 2x2 exchange array") {
    const Pda dual = dualize(make(1, "* 1 / 1 *"));
    CHECK(dual == make(2, "2 1"));
    const PdaParams pr = params(dual);
    CHECK(pr.users == 2);
    CHECK(pr.division == 1);
    CHECK(pr.stars_per_column == 0);
    CHECK(pr.symbols == 2);
}

TEST_CASE("row/symbol swap of the 4x2 array, frozen") {
    const Pda dual = dualize(make(2, "* 1 / 1 * / * 2 / 2 *"));
    CHECK(dual == make(4, "2 1 / 4 3"));
    CHECK(validate(dual).valid());
}

TEST_CASE("the swap is an involution") {
    for (const Pda& p : {make(2, "* 1 / 1 * / * 2 / 2 *"), scheme1({4, 1, 1}),
                         scheme2({2, 2, 1}), scheme2({3, 1, 1}), ali_niesen(4, 2)})
        CHECK(dualize(dualize(p)) == p);
}

TEST_CASE("swapped q-ary arrays hit the reciprocal rate") {
    for (const auto& [q, m, t] : std::vector<std::tuple<int, int, int>>{
             {2, 2, 1}, {3, 1, 1}, {3, 2, 1}, {2, 3, 2}}) {
        const Pda dual = dualize(scheme2({q, m, t}));
        CHECK(validate(dual).valid());
        const PdaParams pr = params(dual);
        CHECK(pr.users == nCr(m, t) * powi(q, t));
        CHECK(pr.division == powi(q, m) * powi(q - 1, t));
        CHECK(pr.stars_per_column ==
              powi(q, m) * powi(q - 1, t) - powi(q, m - t) * powi(q - 1, t));
        CHECK(pr.symbols == powi(q, m));
        CHECK(pr.rate == Rational(1, powi(q - 1, t)));
    }
}

TEST_CASE("the swap refuses invalid or all-star-row inputs") {
    CHECK_THROWS_AS(dualize(make(2, "2 1 / 1 * / * 2 / 2 *")), std::invalid_argument);
    // valid array, but row 1 has no integer to become a symbol
    CHECK_THROWS_AS(dualize(make(2, "* * / 1 2")), std::invalid_argument);
}

TEST_CASE("swap parameters follow the star-count identity on general inputs") {
    for (const Pda& p : {scheme1({5, 2, 1}), scheme1({5, 1, 2}), ali_niesen(5, 3)}) {
        const PdaParams before = params(p);
        const Pda dual = dualize(p);
        CHECK(validate(dual).valid());
        const PdaParams after = params(dual);
        CHECK(after.users == before.users);
        CHECK(after.division == before.symbols);
        CHECK(after.stars_per_column ==
              before.symbols - (before.division - before.stars_per_column));
        CHECK(after.symbols == before.division);
    }
}
