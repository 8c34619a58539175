#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rational.hpp"

namespace pda {

/// One cell of a placement delivery array: either the placement marker
/// (star) or a delivery symbol id in 1..S.
class Cell {
public:
    constexpr Cell() = default;

    static constexpr Cell star() { return Cell{}; }
    static Cell sym(int id) {
        if (id < 1)
            throw std::invalid_argument("Cell: symbol ids are positive");
        Cell c;
        c.id_ = id;
        return c;
    }

    constexpr bool is_star() const { return id_ == 0; }
    constexpr bool is_sym() const { return id_ != 0; }
    constexpr int sym_id() const { return id_; } // 0 for star

    friend constexpr bool operator==(Cell, Cell) = default;

private:
    std::int32_t id_ = 0;
};

/// 1-based grid coordinate (row in 1..F, col in 1..K). All indices in this
/// library are 1-based, matching the text formats and edge-list exports.
struct CellRef {
    int row = 0;
    int col = 0;
    friend constexpr auto operator<=>(const CellRef&, const CellRef&) = default;
};

/// An F x K array over {star} + {1..S}. Construction enforces the shape
/// invariants (S >= 0, ids in range, every id in 1..S used at least once);
/// the C1-C3 constraints are checked separately by validate().
class Pda {
public:
    /// `grid` is row-major with rows*cols cells. Throws std::invalid_argument
    /// if dimensions or the symbol alphabet are inconsistent.
    Pda(int rows, int cols, int symbols, std::vector<Cell> grid);

    /// Builds a Pda from a raw grid whose symbol labels may have gaps:
    /// used labels are compacted to 1..S in first-occurrence row-major order.
    /// Already-contiguous grids are left untouched.
    static Pda with_compacted_symbols(int rows, int cols, std::vector<Cell> grid);

    int rows() const { return rows_; }       // F
    int cols() const { return cols_; }       // K
    int symbol_count() const { return symbols_; } // S

    const Cell& at(int row, int col) const;  // 1-based
    const std::vector<Cell>& grid() const { return grid_; }

    int column_star_count(int col) const;
    int integer_cell_count() const;

    /// Cells holding symbol s, in row-major order.
    std::vector<CellRef> cells_of_symbol(int s) const;

    friend bool operator==(const Pda&, const Pda&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    int symbols_ = 0;
    std::vector<Cell> grid_;
};

/// Derived quantities of a PDA whose columns all carry the same star count.
struct PdaParams {
    std::int64_t users = 0;            // K
    std::int64_t division = 0;         // F
    std::int64_t stars_per_column = 0; // Z
    std::int64_t symbols = 0;          // S
    Rational rate;                     // S/F
    Rational mem_ratio;                // Z/F
    std::optional<std::int64_t> regularity; // g, present iff every symbol occurs exactly g times

    friend bool operator==(const PdaParams&, const PdaParams&) = default;
};

// Constraint violations. Each witness carries enough coordinates to be
// re-checked against the grid.

/// Column `column` has `stars` stars while column 1 has `expected_stars`.
struct C1Violation {
    int column = 0;
    int stars = 0;
    int expected_stars = 0;
    friend bool operator==(const C1Violation&, const C1Violation&) = default;
};

/// Cells a and b (same row or same column) both hold `symbol`.
struct C2Violation {
    int symbol = 0;
    CellRef a, b;
    friend bool operator==(const C2Violation&, const C2Violation&) = default;
};

/// Cells a and b (distinct rows and columns) both hold `symbol`, but the
/// opposite corner holds `corner_symbol` instead of a star.
struct C3Violation {
    int symbol = 0;
    CellRef a, b;
    CellRef corner;
    int corner_symbol = 0;
    friend bool operator==(const C3Violation&, const C3Violation&) = default;
};

using Violation = std::variant<C1Violation, C2Violation, C3Violation>;

struct ValidationReport {
    bool c1_ok = false;
    bool c2_ok = false;
    bool c3_ok = false;
    std::vector<Violation> violations;

    bool valid() const { return c1_ok && c2_ok && c3_ok; }

    friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

/// Checks C1 (equal star count per column), C2 (no repeated integer within
/// a row or column) and C3 (equal integers force star opposite corners).
/// Witness enumeration is exhaustive and deterministically ordered:
/// C1 witnesses by column, then C2 and C3 witnesses by their cell
/// coordinates in row-major order (first cell, second cell, corner).
ValidationReport validate(const Pda& pda);

/// Derived parameters; requires C1 so that Z is well defined.
/// Throws std::invalid_argument when columns disagree on star count.
PdaParams params(const Pda& pda);

std::string describe(const Violation& v);

} // namespace pda
