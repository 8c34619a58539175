#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "pda.hpp"

namespace pda {

/// One edge of a 3-partite 3-uniform hypergraph: a row vertex (1..F),
/// a column vertex (1..K) and a symbol vertex (1..S).
struct Edge {
    int row = 0;
    int col = 0;
    int sym = 0;
    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// A 3-partite 3-uniform hypergraph with declared part sizes (isolated
/// vertices are allowed). Edges are kept sorted lexicographically and
/// duplicate-free.
class TripartiteHypergraph {
public:
    TripartiteHypergraph(int part_f, int part_k, int part_s, std::vector<Edge> edges);

    int part_f() const { return part_f_; }
    int part_k() const { return part_k_; }
    int part_s() const { return part_s_; }
    const std::vector<Edge>& edges() const { return edges_; }

    friend bool operator==(const TripartiteHypergraph&, const TripartiteHypergraph&) = default;

private:
    int part_f_ = 0;
    int part_k_ = 0;
    int part_s_ = 0;
    std::vector<Edge> edges_;
};

enum class DefectKind {
    NotLinear,      // two edges share at least two vertices
    NotSixThreeFree // three edges spanned by at most six vertices
};

/// Offending edges together with the vertices they span, listed per part.
struct PropertyWitness {
    DefectKind kind = DefectKind::NotLinear;
    std::vector<Edge> edges;
    std::vector<int> rows, cols, syms;
};

/// Edge (j,k,s) present iff pda[j,k] holds symbol s.
TripartiteHypergraph pda_to_hypergraph(const Pda& pda);

/// Inverse of pda_to_hypergraph. Requires the hypergraph to be
/// single-valued ((j,k) covered by at most one edge) and every symbol
/// vertex to be used; throws std::invalid_argument otherwise.
Pda hypergraph_to_pda(const TripartiteHypergraph& h);

/// First (lexicographically minimal) pair of distinct edges sharing two
/// vertices, or absent when the hypergraph is linear.
std::optional<PropertyWitness> check_linear(const TripartiteHypergraph& h);

/// Brute-force triple scan: first triple of edges spanned by at most six
/// vertices, or absent. This is the trusted oracle; O(|E|^3).
std::optional<PropertyWitness> check_63_free(const TripartiteHypergraph& h);

/// Fast path valid only for linear hypergraphs: in a linear hypergraph any
/// three edges on six vertices take two vertices from each part, with two
/// edges sharing a symbol and the third occupying a crossing (row,col)
/// cell. Scans symbol classes pairwise instead of all triples.
std::optional<PropertyWitness> check_63_free_linear(const TripartiteHypergraph& h);

/// Edge count per column vertex; index k-1 holds the degree of k.
std::vector<int> column_degrees(const TripartiteHypergraph& h);

/// Self-test of the PDA <-> hypergraph equivalence: returns whether
/// validate(pda) and the hypergraph-side checks (linear, (6,3)-free,
/// constant column degree) reach the same verdict.
bool equivalence_check(const Pda& pda);

} // namespace pda
