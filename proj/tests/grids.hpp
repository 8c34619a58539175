#pragma once

// grid builders shared by the test suites

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pda.hpp"

namespace testgrid {

// grid from tokens like "* 1 / 1 * / * 2 / 2 *" (rows separated by /)
inline pda::Pda make(int symbols, const std::string& text) {
    std::vector<pda::Cell> grid;
    int cols = 0, rows = 0, row_cells = 0;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok == "/") {
            if (cols == 0)
                cols = row_cells;
            ++rows;
            row_cells = 0;
            continue;
        }
        grid.push_back(tok == "*" ? pda::Cell::star() : pda::Cell::sym(std::stoi(tok)));
        ++row_cells;
    }
    if (row_cells > 0) {
        if (cols == 0)
            cols = row_cells;
        ++rows;
    }
    return pda::Pda(rows, cols, symbols, std::move(grid));
}

// uniform cells over {star, 1..max_sym}; labels compacted so the result
// satisfies the type invariants whatever was drawn
inline pda::Pda random_grid(std::mt19937& rng, int rows, int cols, int max_sym) {
    std::uniform_int_distribution<int> cell(0, max_sym);
    std::vector<pda::Cell> grid;
    grid.reserve(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
    for (int i = 0; i < rows * cols; ++i) {
        const int v = cell(rng);
        grid.push_back(v == 0 ? pda::Cell::star() : pda::Cell::sym(v));
    }
    return pda::Pda::with_compacted_symbols(rows, cols, std::move(grid));
}

// every 3x3 grid over {star, 1, 2}, labels compacted
template <typename Fn>
void for_each_3x3(Fn&& fn) {
    for (int code = 0; code < 19683; ++code) { // 3^9
        int v = code;
        std::vector<pda::Cell> grid;
        grid.reserve(9);
        for (int i = 0; i < 9; ++i) {
            const int c = v % 3;
            v /= 3;
            grid.push_back(c == 0 ? pda::Cell::star() : pda::Cell::sym(c));
        }
        fn(pda::Pda::with_compacted_symbols(3, 3, std::move(grid)));
    }
}

} // namespace testgrid
