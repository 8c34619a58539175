#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pda.hpp"
#include "rational.hpp"

namespace pda {

struct ParsedPda {
    Pda array;
    // Non-fatal header/grid disagreements (e.g. the declared Z does not
    // match the actual star counts).
    std::vector<std::string> warnings;
};

/// Parses the text format: a header `PDA v1 K=<K> F=<F> Z=<Z> S=<S>`
/// followed by F lines of K whitespace-separated tokens, each `*` or an
/// integer in 1..S. Every symbol in 1..S must appear somewhere. Throws
/// std::invalid_argument with a line-numbered message on malformed input.
ParsedPda parse_pda(const std::string& text);

/// Canonical form: single-space separated tokens, one row per line,
/// trailing newline. parse_pda(serialize_pda(p)) reproduces p exactly,
/// and serialize_pda(parse_pda(t).array) == t for canonical t.
std::string serialize_pda(const Pda& p);

/// Edge-list text for the derived tripartite hypergraph: header
/// `HG F K S`, then one `j k s` line per integer cell, sorted.
std::string export_hypergraph_text(const Pda& p);

/// One line per condition (ok/FAIL) followed by one line per witness.
std::string render_report(const ValidationReport& r);

/// `(K,F,Z,S)=(...)` plus rate, memory ratio and regularity lines.
std::string render_params(const PdaParams& p);

/// One row of closed-form parameters for the `table` subcommand.
struct TableRow {
    std::vector<std::int64_t> inputs; // scheme parameters, canonical order
    std::int64_t users = 0;           // K
    Rational mem;                     // M/N
    std::int64_t division = 0;        // F
    Rational rate;                    // R
};

/// Evaluates the closed forms for one scheme over a parameter grid.
/// `scheme` is one of s1 (keys n,a,b), s2 / s2dual (keys q,m,t), an
/// (keys K,t). Each assignment is `key=value` or `key=lo..hi`; every key
/// must be given exactly once. Combinations violating the scheme's
/// constraints are skipped; throws std::invalid_argument if nothing
/// remains (or on unknown scheme/key, duplicate or missing key, bad
/// syntax).
std::vector<TableRow> table_rows(const std::string& scheme,
                                 const std::vector<std::string>& assignments);

/// Renders table_rows as aligned columns: the scheme parameters, then
/// K, M/N, F, R. Fractions print as `p/q`; with decimal=true, M/N and R
/// print as doubles instead.
std::string render_table(const std::string& scheme,
                         const std::vector<std::string>& assignments, bool decimal);

} // namespace pda
