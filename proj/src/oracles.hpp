#pragma once

#include <optional>
#include <string>

#include "pda.hpp"

namespace pda {

// Independent re-formulations of the C1-C3 constraints, used to
// cross-validate the validator. Both checkers are deliberately written as
// plain brute-force scans with no shared code with validate().

enum class BlackburnDefect {
    RepeatInRow,     // Latin property broken along a row
    RepeatInColumn,  // Latin property broken along a column
    CornerOccupied,  // Blackburn property broken (an opposite corner is filled)
    UnevenColumnFill // regular property broken (columns disagree on fill count)
};

struct BlackburnWitness {
    BlackburnDefect kind = BlackburnDefect::RepeatInRow;
    int symbol = 0;      // 0 for UnevenColumnFill
    CellRef a, b;        // the offending cell pair
    CellRef corner;      // the occupied corner (CornerOccupied only)
    int column = 0;      // UnevenColumnFill only
    int filled = 0;
    int expected_filled = 0;
};

/// Treats the array as a partial Latin square: absent iff no symbol repeats
/// in a row or column, every equal-symbol pair has both opposite corners
/// blank, and all columns carry the same number of filled cells.
std::optional<BlackburnWitness> check_blackburn(const Pda& pda);

struct ColoringWitness {
    int color = 0;                    // the symbol whose class fails
    CellRef a, b;                     // two same-colored bipartite edges, as (row,col) cells
    std::optional<CellRef> joining;   // edge joining their endpoints; absent when a and b touch
};

/// Views integer cells as colored edges of a bipartite graph on the row and
/// column vertex sets; absent iff every color class is an induced matching.
/// Covers C2 and C3; C1 corresponds to the separate column-degree check.
std::optional<ColoringWitness> check_strong_coloring(const Pda& pda);

} // namespace pda
