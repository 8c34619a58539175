#include "pda.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace pda {

Pda::Pda(int rows, int cols, int symbols, std::vector<Cell> grid)
    : rows_(rows), cols_(cols), symbols_(symbols), grid_(std::move(grid)) {
    if (rows_ < 1 || cols_ < 1)
        throw std::invalid_argument("Pda: need at least one row and one column");
    if (symbols_ < 0)
        throw std::invalid_argument("Pda: negative symbol count");
    if (grid_.size() != static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_))
        throw std::invalid_argument("Pda: grid size does not match dimensions");
    std::vector<char> seen(static_cast<std::size_t>(symbols_) + 1, 0);
    for (const Cell& c : grid_) {
        if (c.is_star())
            continue;
        if (c.sym_id() > symbols_)
            throw std::invalid_argument("Pda: symbol id " + std::to_string(c.sym_id()) +
                                        " exceeds declared count " + std::to_string(symbols_));
        seen[static_cast<std::size_t>(c.sym_id())] = 1;
    }
    for (int s = 1; s <= symbols_; ++s) {
        if (!seen[static_cast<std::size_t>(s)])
            throw std::invalid_argument("Pda: symbol " + std::to_string(s) +
                                        " is declared but never appears");
    }
}

Pda Pda::with_compacted_symbols(int rows, int cols, std::vector<Cell> grid) {
    std::unordered_map<int, int> relabel;
    int next = 1;
    int max_label = 0;
    for (const Cell& c : grid) {
        if (c.is_star())
            continue;
        max_label = std::max(max_label, c.sym_id());
        if (relabel.emplace(c.sym_id(), next).second)
            ++next;
    }
    const int symbols = next - 1;
    // the used labels form 1..S exactly iff the largest equals the count;
    // only then is the grid left untouched
    if (max_label != symbols) {
        for (Cell& c : grid) {
            if (c.is_sym())
                c = Cell::sym(relabel.at(c.sym_id()));
        }
    }
    return Pda(rows, cols, symbols, std::move(grid));
}

const Cell& Pda::at(int row, int col) const {
    if (row < 1 || row > rows_ || col < 1 || col > cols_)
        throw std::out_of_range("Pda::at: cell (" + std::to_string(row) + "," +
                                std::to_string(col) + ") outside " + std::to_string(rows_) +
                                "x" + std::to_string(cols_) + " grid");
    return grid_[static_cast<std::size_t>(row - 1) * cols_ + (col - 1)];
}

int Pda::column_star_count(int col) const {
    int n = 0;
    for (int j = 1; j <= rows_; ++j)
        n += at(j, col).is_star();
    return n;
}

int Pda::integer_cell_count() const {
    int n = 0;
    for (const Cell& c : grid_)
        n += c.is_sym();
    return n;
}

std::vector<CellRef> Pda::cells_of_symbol(int s) const {
    if (s < 1 || s > symbols_)
        throw std::out_of_range("Pda: symbol " + std::to_string(s) + " outside 1.." +
                                std::to_string(symbols_));
    std::vector<CellRef> out;
    for (int j = 1; j <= rows_; ++j)
        for (int k = 1; k <= cols_; ++k)
            if (at(j, k).sym_id() == s)
                out.push_back({j, k});
    return out;
}

namespace {

// Groups the integer cells by symbol, each list in row-major order.
std::vector<std::vector<CellRef>> symbol_classes(const Pda& p) {
    std::vector<std::vector<CellRef>> classes(static_cast<std::size_t>(p.symbol_count()) + 1);
    for (int j = 1; j <= p.rows(); ++j)
        for (int k = 1; k <= p.cols(); ++k) {
            const Cell& c = p.at(j, k);
            if (c.is_sym())
                classes[static_cast<std::size_t>(c.sym_id())].push_back({j, k});
        }
    return classes;
}

} // namespace

ValidationReport validate(const Pda& p) {
    ValidationReport report;
    const int rows = p.rows();
    const int cols = p.cols();

    // C1: every column carries the same number of stars as column 1.
    std::vector<C1Violation> c1;
    const int expected = p.column_star_count(1);
    for (int k = 2; k <= cols; ++k) {
        const int stars = p.column_star_count(k);
        if (stars != expected)
            c1.push_back({k, stars, expected});
    }

    // C2: no repeated integer within a row or a column. All offending
    // pairs are enumerated.
    std::vector<C2Violation> c2;
    for (int j = 1; j <= rows; ++j)
        for (int k1 = 1; k1 <= cols; ++k1) {
            const Cell& a = p.at(j, k1);
            if (!a.is_sym())
                continue;
            for (int k2 = k1 + 1; k2 <= cols; ++k2)
                if (p.at(j, k2) == a)
                    c2.push_back({a.sym_id(), {j, k1}, {j, k2}});
        }
    for (int k = 1; k <= cols; ++k)
        for (int j1 = 1; j1 <= rows; ++j1) {
            const Cell& a = p.at(j1, k);
            if (!a.is_sym())
                continue;
            for (int j2 = j1 + 1; j2 <= rows; ++j2)
                if (p.at(j2, k) == a)
                    c2.push_back({a.sym_id(), {j1, k}, {j2, k}});
        }

    // C3: for equal integers at (j1,k1) and (j2,k2) with distinct rows and
    // columns, both opposite corners must be stars. Each occupied corner is
    // its own witness.
    std::vector<C3Violation> c3;
    const auto classes = symbol_classes(p);
    for (int s = 1; s <= p.symbol_count(); ++s) {
        const auto& cells = classes[static_cast<std::size_t>(s)];
        for (std::size_t i = 0; i < cells.size(); ++i)
            for (std::size_t l = i + 1; l < cells.size(); ++l) {
                const CellRef a = cells[i];
                const CellRef b = cells[l];
                if (a.row == b.row || a.col == b.col)
                    continue; // C2 territory
                for (const CellRef corner : {CellRef{a.row, b.col}, CellRef{b.row, a.col}}) {
                    const Cell& c = p.at(corner.row, corner.col);
                    if (!c.is_star())
                        c3.push_back({s, a, b, corner, c.sym_id()});
                }
            }
    }

    std::sort(c2.begin(), c2.end(), [](const C2Violation& x, const C2Violation& y) {
        return std::tie(x.a, x.b, x.symbol) < std::tie(y.a, y.b, y.symbol);
    });
    std::sort(c3.begin(), c3.end(), [](const C3Violation& x, const C3Violation& y) {
        return std::tie(x.a, x.b, x.corner) < std::tie(y.a, y.b, y.corner);
    });

    report.c1_ok = c1.empty();
    report.c2_ok = c2.empty();
    report.c3_ok = c3.empty();
    report.violations.reserve(c1.size() + c2.size() + c3.size());
    for (auto& v : c1)
        report.violations.emplace_back(v);
    for (auto& v : c2)
        report.violations.emplace_back(v);
    for (auto& v : c3)
        report.violations.emplace_back(v);
    return report;
}

PdaParams params(const Pda& p) {
    const int z = p.column_star_count(1);
    for (int k = 2; k <= p.cols(); ++k)
        if (p.column_star_count(k) != z)
            throw std::invalid_argument(
                "params: C1 fails (column " + std::to_string(k) + " has " +
                std::to_string(p.column_star_count(k)) + " stars, column 1 has " +
                std::to_string(z) + "); Z is undefined");

    PdaParams out;
    out.users = p.cols();
    out.division = p.rows();
    out.stars_per_column = z;
    out.symbols = p.symbol_count();
    out.rate = Rational(p.symbol_count(), p.rows());
    out.mem_ratio = Rational(z, p.rows());

    if (p.symbol_count() > 0) {
        std::vector<int> counts(static_cast<std::size_t>(p.symbol_count()) + 1, 0);
        for (const Cell& c : p.grid())
            if (c.is_sym())
                ++counts[static_cast<std::size_t>(c.sym_id())];
        const int g = counts[1];
        if (std::all_of(counts.begin() + 1, counts.end(), [&](int n) { return n == g; }))
            out.regularity = g;
    }
    return out;
}

namespace {

std::string cell_str(const CellRef& c) {
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

} // namespace

std::string describe(const Violation& v) {
    return std::visit(
        [](const auto& w) -> std::string {
            using T = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<T, C1Violation>) {
                return "C1: column " + std::to_string(w.column) + " has " +
                       std::to_string(w.stars) + " stars, column 1 has " +
                       std::to_string(w.expected_stars);
            } else if constexpr (std::is_same_v<T, C2Violation>) {
                const char* where = w.a.row == w.b.row ? "row" : "column";
                return "C2: symbol " + std::to_string(w.symbol) + " repeats in a " + where +
                       " at " + cell_str(w.a) + " and " + cell_str(w.b);
            } else {
                return "C3: symbol " + std::to_string(w.symbol) + " at " + cell_str(w.a) +
                       " and " + cell_str(w.b) + " but corner " + cell_str(w.corner) +
                       " holds symbol " + std::to_string(w.corner_symbol) + " instead of *";
            }
        },
        v);
}

} // namespace pda
