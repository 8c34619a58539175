#include "constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "combinatorics.hpp"

namespace pda {

namespace {

std::size_t checked_grid_size(std::int64_t rows, std::int64_t cols) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("construction: empty grid");
    const __int128 cells = __int128(rows) * cols;
    if (cells > (__int128(1) << 31))
        throw std::invalid_argument("construction: grid would exceed 2^31 cells");
    return static_cast<std::size_t>(cells);
}

} // namespace

Pda scheme1(const Scheme1Params& p) {
    if (p.n < 1 || p.a < 1 || p.b < 1)
        throw std::invalid_argument("scheme1: n, a, b must be positive");
    if (p.a + p.b > p.n)
        throw std::invalid_argument("scheme1: requires a + b <= n (got a=" +
                                    std::to_string(p.a) + ", b=" + std::to_string(p.b) +
                                    ", n=" + std::to_string(p.n) + ")");

    const std::int64_t rows = binomial(p.n, p.a);
    const std::int64_t cols = binomial(p.n, p.b);
    const std::int64_t symbols = binomial(p.n, p.a + p.b);
    std::vector<Cell> grid(checked_grid_size(rows, cols));

    std::vector<int> in_a(static_cast<std::size_t>(p.n) + 1, 0);
    std::vector<int> united(static_cast<std::size_t>(p.a + p.b));
    for_each_subset(p.n, p.a, [&](std::span<const int> sa) {
        const std::int64_t row = colex_rank(sa);
        for (int x : sa)
            in_a[static_cast<std::size_t>(x)] = 1;
        for_each_subset(p.n, p.b, [&](std::span<const int> sb) {
            for (int x : sb)
                if (in_a[static_cast<std::size_t>(x)])
                    return; // not disjoint: cell stays a star
            const std::int64_t col = colex_rank(sb);
            united.assign(sa.begin(), sa.end());
            united.insert(united.end(), sb.begin(), sb.end());
            std::sort(united.begin(), united.end());
            const std::int64_t sym = colex_rank(united);
            grid[static_cast<std::size_t>(row - 1) * cols + (col - 1)] =
                Cell::sym(static_cast<int>(sym));
        });
        for (int x : sa)
            in_a[static_cast<std::size_t>(x)] = 0;
    });

    // Every (a+b)-subset arises from C(a+b,a) disjoint pairs, so the rank
    // labels 1..C(n,a+b) are all used; the constructor re-checks that.
    return Pda(static_cast<int>(rows), static_cast<int>(cols), static_cast<int>(symbols),
               std::move(grid));
}

Pda scheme2(const Scheme2Params& p) {
    if (p.q < 1 || p.m < 1 || p.t < 1)
        throw std::invalid_argument("scheme2: q, m, t must be positive");
    if (p.t > p.m)
        throw std::invalid_argument("scheme2: requires t <= m (got t=" + std::to_string(p.t) +
                                    ", m=" + std::to_string(p.m) + ")");
    if (p.q < 2)
        throw std::invalid_argument("scheme2: requires q >= 2 (the symbol part is empty at q=1)");

    const std::int64_t rows = ipow(p.q, p.m);                        // q^m
    const std::int64_t qt = ipow(p.q, p.t);                          // q^t
    const std::int64_t cols = binomial(p.m, p.t) * qt;               // C(m,t) q^t
    const std::int64_t symbols = rows * ipow(p.q - 1, p.t);          // q^m (q-1)^t
    std::vector<Cell> grid(checked_grid_size(rows, cols));

    std::vector<int> row_digits(static_cast<std::size_t>(p.m));  // a_1..a_m
    std::vector<int> col_digits(static_cast<std::size_t>(p.t));  // b_{delta_1}..b_{delta_t}
    std::vector<int> sym_digits(static_cast<std::size_t>(p.m + p.t));

    for_each_subset(p.m, p.t, [&](std::span<const int> delta_lex) {
        // Column blocks are ordered by colex rank of the delta-set.
        const std::int64_t block = (colex_rank(delta_lex) - 1) * qt;
        std::vector<int> delta(delta_lex.begin(), delta_lex.end());

        for (std::int64_t bval = 0; bval < qt; ++bval) {
            std::int64_t rem = bval;
            for (int j = p.t - 1; j >= 0; --j) {
                col_digits[static_cast<std::size_t>(j)] = static_cast<int>(rem % p.q);
                rem /= p.q;
            }
            const std::int64_t col = block + bval + 1;

            for (std::int64_t aval = 0; aval < rows; ++aval) {
                rem = aval;
                for (int i = p.m - 1; i >= 0; --i) {
                    row_digits[static_cast<std::size_t>(i)] = static_cast<int>(rem % p.q);
                    rem /= p.q;
                }
                // Edge iff a and b differ on every chosen coordinate; the
                // symbol is then determined by the three edge conditions.
                bool ok = true;
                for (int j = 0; j < p.t && ok; ++j)
                    ok = row_digits[static_cast<std::size_t>(delta[static_cast<std::size_t>(j)] - 1)] !=
                         col_digits[static_cast<std::size_t>(j)];
                if (!ok)
                    continue;
                for (int i = 0; i < p.m; ++i)
                    sym_digits[static_cast<std::size_t>(i)] = row_digits[static_cast<std::size_t>(i)];
                for (int j = 0; j < p.t; ++j) {
                    const int d = delta[static_cast<std::size_t>(j)] - 1;
                    const int a_d = row_digits[static_cast<std::size_t>(d)];
                    const int b_d = col_digits[static_cast<std::size_t>(j)];
                    sym_digits[static_cast<std::size_t>(d)] = b_d; // c_delta = b_delta
                    // a_delta = c_delta + c_{m+j} + 1 in Z_q
                    sym_digits[static_cast<std::size_t>(p.m + j)] =
                        ((a_d - b_d - 1) % p.q + p.q) % p.q;
                }
                std::int64_t sym = 0;
                for (int i = 0; i < p.m; ++i)
                    sym = sym * p.q + sym_digits[static_cast<std::size_t>(i)];
                for (int j = 0; j < p.t; ++j)
                    sym = sym * (p.q - 1) + sym_digits[static_cast<std::size_t>(p.m + j)];
                grid[static_cast<std::size_t>(aval) * cols + (col - 1)] =
                    Cell::sym(static_cast<int>(sym + 1));
            }
        }
    });

    return Pda(static_cast<int>(rows), static_cast<int>(cols), static_cast<int>(symbols),
               std::move(grid));
}

Pda ali_niesen(int users, int t) {
    if (users < 2 || t < 1 || t > users - 1)
        throw std::invalid_argument("ali_niesen: requires 1 <= t <= K-1 (got K=" +
                                    std::to_string(users) + ", t=" + std::to_string(t) + ")");
    return scheme1({users, t, 1});
}

Pda dualize(const Pda& p) {
    const ValidationReport report = validate(p);
    if (!report.valid())
        throw std::invalid_argument("dualize: input is not a valid PDA: " +
                                    describe(report.violations.front()));
    for (int j = 1; j <= p.rows(); ++j) {
        bool has_integer = false;
        for (int k = 1; k <= p.cols() && !has_integer; ++k)
            has_integer = p.at(j, k).is_sym();
        if (!has_integer)
            throw std::invalid_argument("dualize: row " + std::to_string(j) +
                                        " is all stars and would leave symbol " +
                                        std::to_string(j) + " unused in the dual");
    }

    // Q[s,k] = j iff p[j,k] = s; single-valued by C2.
    const int cols = p.cols();
    std::vector<Cell> grid(checked_grid_size(p.symbol_count(), cols));
    for (int j = 1; j <= p.rows(); ++j)
        for (int k = 1; k <= cols; ++k) {
            const Cell& c = p.at(j, k);
            if (c.is_sym())
                grid[static_cast<std::size_t>(c.sym_id() - 1) * cols + (k - 1)] = Cell::sym(j);
        }
    return Pda(p.symbol_count(), cols, p.rows(), std::move(grid));
}

} // namespace pda
