#include "hypergraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace pda {

namespace {

void sorted_unique(std::vector<int>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

PropertyWitness make_witness(DefectKind kind, std::vector<Edge> edges) {
    PropertyWitness w;
    w.kind = kind;
    std::sort(edges.begin(), edges.end());
    for (const Edge& e : edges) {
        w.rows.push_back(e.row);
        w.cols.push_back(e.col);
        w.syms.push_back(e.sym);
    }
    w.edges = std::move(edges);
    sorted_unique(w.rows);
    sorted_unique(w.cols);
    sorted_unique(w.syms);
    return w;
}

int shared_vertices(const Edge& a, const Edge& b) {
    return (a.row == b.row) + (a.col == b.col) + (a.sym == b.sym);
}

int distinct3(int x, int y, int z) {
    if (x == y)
        return y == z ? 1 : 2;
    return (x == z || y == z) ? 2 : 3;
}

} // namespace

TripartiteHypergraph::TripartiteHypergraph(int part_f, int part_k, int part_s,
                                           std::vector<Edge> edges)
    : part_f_(part_f), part_k_(part_k), part_s_(part_s), edges_(std::move(edges)) {
    if (part_f_ < 0 || part_k_ < 0 || part_s_ < 0)
        throw std::invalid_argument("TripartiteHypergraph: negative part size");
    for (const Edge& e : edges_) {
        if (e.row < 1 || e.row > part_f_ || e.col < 1 || e.col > part_k_ || e.sym < 1 ||
            e.sym > part_s_)
            throw std::invalid_argument("TripartiteHypergraph: edge (" + std::to_string(e.row) +
                                        "," + std::to_string(e.col) + "," + std::to_string(e.sym) +
                                        ") outside part ranges");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("TripartiteHypergraph: duplicate edge");
}

TripartiteHypergraph pda_to_hypergraph(const Pda& p) {
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(p.integer_cell_count()));
    for (int j = 1; j <= p.rows(); ++j)
        for (int k = 1; k <= p.cols(); ++k) {
            const Cell& c = p.at(j, k);
            if (c.is_sym())
                edges.push_back({j, k, c.sym_id()});
        }
    return TripartiteHypergraph(p.rows(), p.cols(), p.symbol_count(), std::move(edges));
}

Pda hypergraph_to_pda(const TripartiteHypergraph& h) {
    std::vector<Cell> grid(static_cast<std::size_t>(h.part_f()) * h.part_k());
    std::vector<char> used(static_cast<std::size_t>(h.part_s()) + 1, 0);
    for (const Edge& e : h.edges()) {
        Cell& cell = grid[static_cast<std::size_t>(e.row - 1) * h.part_k() + (e.col - 1)];
        if (cell.is_sym())
            throw std::invalid_argument(
                "hypergraph_to_pda: cell (" + std::to_string(e.row) + "," +
                std::to_string(e.col) + ") covered by symbols " +
                std::to_string(cell.sym_id()) + " and " + std::to_string(e.sym));
        cell = Cell::sym(e.sym);
        used[static_cast<std::size_t>(e.sym)] = 1;
    }
    for (int s = 1; s <= h.part_s(); ++s)
        if (!used[static_cast<std::size_t>(s)])
            throw std::invalid_argument("hypergraph_to_pda: symbol vertex " + std::to_string(s) +
                                        " lies in no edge");
    return Pda(h.part_f(), h.part_k(), h.part_s(), std::move(grid));
}

std::optional<PropertyWitness> check_linear(const TripartiteHypergraph& h) {
    const auto& edges = h.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            if (shared_vertices(edges[i], edges[j]) >= 2)
                return make_witness(DefectKind::NotLinear, {edges[i], edges[j]});
    return std::nullopt;
}

std::optional<PropertyWitness> check_63_free(const TripartiteHypergraph& h) {
    const auto& edges = h.edges();
    const std::size_t n = edges.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const Edge& a = edges[i];
                const Edge& b = edges[j];
                const Edge& c = edges[k];
                const int span = distinct3(a.row, b.row, c.row) +
                                 distinct3(a.col, b.col, c.col) +
                                 distinct3(a.sym, b.sym, c.sym);
                if (span <= 6)
                    return make_witness(DefectKind::NotSixThreeFree, {a, b, c});
            }
    return std::nullopt;
}

std::optional<PropertyWitness> check_63_free_linear(const TripartiteHypergraph& h) {
    // Cell map (row,col) -> edge index; single-valued under linearity.
    std::unordered_map<std::int64_t, std::size_t> cell_to_edge;
    const auto& edges = h.edges();
    const auto key = [&](int row, int col) {
        return static_cast<std::int64_t>(row) * (h.part_k() + 1) + col;
    };
    for (std::size_t i = 0; i < edges.size(); ++i)
        cell_to_edge.emplace(key(edges[i].row, edges[i].col), i);

    std::vector<std::vector<std::size_t>> by_symbol(static_cast<std::size_t>(h.part_s()) + 1);
    for (std::size_t i = 0; i < edges.size(); ++i)
        by_symbol[static_cast<std::size_t>(edges[i].sym)].push_back(i);

    std::optional<PropertyWitness> best;
    for (int s = 1; s <= h.part_s(); ++s) {
        const auto& cls = by_symbol[static_cast<std::size_t>(s)];
        for (std::size_t i = 0; i < cls.size(); ++i)
            for (std::size_t j = i + 1; j < cls.size(); ++j) {
                const Edge& a = edges[cls[i]];
                const Edge& b = edges[cls[j]];
                // Under linearity a and b differ in both row and column.
                for (const auto& [row, col] : {std::pair{a.row, b.col}, std::pair{b.row, a.col}}) {
                    const auto it = cell_to_edge.find(key(row, col));
                    if (it == cell_to_edge.end())
                        continue;
                    auto w = make_witness(DefectKind::NotSixThreeFree,
                                          {a, b, edges[it->second]});
                    if (!best || w.edges < best->edges)
                        best = std::move(w);
                }
            }
    }
    return best;
}

std::vector<int> column_degrees(const TripartiteHypergraph& h) {
    std::vector<int> deg(static_cast<std::size_t>(h.part_k()), 0);
    for (const Edge& e : h.edges())
        ++deg[static_cast<std::size_t>(e.col - 1)];
    return deg;
}

bool equivalence_check(const Pda& p) {
    const bool array_valid = validate(p).valid();

    const TripartiteHypergraph h = pda_to_hypergraph(p);
    const auto degrees = column_degrees(h);
    const bool constant_degree =
        std::all_of(degrees.begin(), degrees.end(), [&](int d) { return d == degrees[0]; });
    const bool hypergraph_valid =
        constant_degree && !check_linear(h) && !check_63_free(h);

    return array_valid == hypergraph_valid;
}

} // namespace pda
