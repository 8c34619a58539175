#include "oracles.hpp"

namespace pda {

std::optional<BlackburnWitness> check_blackburn(const Pda& p) {
    const int rows = p.rows();
    const int cols = p.cols();

    // Flatten the filled cells in row-major order and compare all pairs.
    std::vector<CellRef> filled;
    for (int j = 1; j <= rows; ++j)
        for (int k = 1; k <= cols; ++k)
            if (p.at(j, k).is_sym())
                filled.push_back({j, k});

    for (std::size_t i = 0; i < filled.size(); ++i)
        for (std::size_t l = i + 1; l < filled.size(); ++l) {
            const CellRef a = filled[i];
            const CellRef b = filled[l];
            if (p.at(a.row, a.col) != p.at(b.row, b.col))
                continue;
            const int s = p.at(a.row, a.col).sym_id();
            BlackburnWitness w;
            w.symbol = s;
            w.a = a;
            w.b = b;
            if (a.row == b.row) {
                w.kind = BlackburnDefect::RepeatInRow;
                return w;
            }
            if (a.col == b.col) {
                w.kind = BlackburnDefect::RepeatInColumn;
                return w;
            }
            if (!p.at(a.row, b.col).is_star()) {
                w.kind = BlackburnDefect::CornerOccupied;
                w.corner = {a.row, b.col};
                return w;
            }
            if (!p.at(b.row, a.col).is_star()) {
                w.kind = BlackburnDefect::CornerOccupied;
                w.corner = {b.row, a.col};
                return w;
            }
        }

    // Regular property: every column holds as many symbols as column 1.
    int first = 0;
    for (int j = 1; j <= rows; ++j)
        first += p.at(j, 1).is_sym();
    for (int k = 2; k <= cols; ++k) {
        int n = 0;
        for (int j = 1; j <= rows; ++j)
            n += p.at(j, k).is_sym();
        if (n != first) {
            BlackburnWitness w;
            w.kind = BlackburnDefect::UnevenColumnFill;
            w.column = k;
            w.filled = n;
            w.expected_filled = first;
            return w;
        }
    }
    return std::nullopt;
}

std::optional<ColoringWitness> check_strong_coloring(const Pda& p) {
    // Bipartite graph on row vertices and column vertices; integer cell
    // (j,k) is an edge colored by its symbol.
    for (int s = 1; s <= p.symbol_count(); ++s) {
        const auto cls = p.cells_of_symbol(s);
        for (std::size_t i = 0; i < cls.size(); ++i)
            for (std::size_t l = i + 1; l < cls.size(); ++l) {
                const CellRef a = cls[i];
                const CellRef b = cls[l];
                ColoringWitness w;
                w.color = s;
                w.a = a;
                w.b = b;
                if (a.row == b.row || a.col == b.col)
                    return w; // class is not even a matching
                // Induced: no graph edge may join the two matchings' endpoints.
                if (p.at(a.row, b.col).is_sym()) {
                    w.joining = CellRef{a.row, b.col};
                    return w;
                }
                if (p.at(b.row, a.col).is_sym()) {
                    w.joining = CellRef{b.row, a.col};
                    return w;
                }
            }
    }
    return std::nullopt;
}

} // namespace pda
