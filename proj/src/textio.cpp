#include "textio.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

#include "combinatorics.hpp"
#include "hypergraph.hpp"

namespace pda {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            if (!cur.empty() && cur.back() == '\r')
                cur.pop_back();
            lines.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty())
        lines.push_back(std::move(cur));
    return lines;
}

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream in(line);
    std::string t;
    while (in >> t)
        toks.push_back(t);
    return toks;
}

[[noreturn]] void parse_fail(int line, const std::string& what) {
    throw std::invalid_argument("parse error, line " + std::to_string(line) + ": " + what);
}

std::int64_t parse_int(const std::string& s, int line, const std::string& what) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        parse_fail(line, what + ": '" + s + "' is not an integer");
    return value;
}

// Header fields arrive as `K=12`; returns the value after checking the key.
std::int64_t header_field(const std::string& tok, const char* key, int line) {
    const std::string prefix = std::string(key) + "=";
    if (tok.rfind(prefix, 0) != 0)
        parse_fail(line, "expected '" + prefix + "<int>', found '" + tok + "'");
    return parse_int(tok.substr(prefix.size()), line, std::string("value of ") + key);
}

} // namespace

ParsedPda parse_pda(const std::string& text) {
    const auto lines = split_lines(text);
    if (lines.empty())
        parse_fail(1, "empty input, expected the header 'PDA v1 K=.. F=.. Z=.. S=..'");

    const auto header = split_tokens(lines[0]);
    if (header.size() != 6 || header[0] != "PDA" || header[1] != "v1")
        parse_fail(1, "malformed header, expected 'PDA v1 K=.. F=.. Z=.. S=..'");
    const std::int64_t users = header_field(header[2], "K", 1);
    const std::int64_t division = header_field(header[3], "F", 1);
    const std::int64_t declared_z = header_field(header[4], "Z", 1);
    const std::int64_t symbols = header_field(header[5], "S", 1);

    if (division < 1)
        parse_fail(1, "F must be >= 1, got " + std::to_string(division));
    if (users < 1)
        parse_fail(1, "K must be >= 1, got " + std::to_string(users));
    if (symbols < 0)
        parse_fail(1, "S must be >= 0, got " + std::to_string(symbols));
    if (declared_z < 0 || declared_z > division)
        parse_fail(1, "Z must lie in 0..F, got " + std::to_string(declared_z));
    if (users > 100000 || division > 100000 || users * division > std::int64_t{1} << 31)
        parse_fail(1, "grid of " + std::to_string(users * division) + " cells is too large");

    const int rows = static_cast<int>(division);
    const int cols = static_cast<int>(users);
    const int n_syms = static_cast<int>(symbols);

    std::vector<Cell> grid;
    grid.reserve(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
    std::vector<char> used(static_cast<std::size_t>(n_syms) + 1, 0);

    for (int j = 1; j <= rows; ++j) {
        const int line_no = 1 + j;
        if (static_cast<std::size_t>(line_no) > lines.size())
            parse_fail(line_no, "missing row " + std::to_string(j) + " of " + std::to_string(rows));
        const auto toks = split_tokens(lines[static_cast<std::size_t>(line_no - 1)]);
        if (toks.size() != static_cast<std::size_t>(cols))
            parse_fail(line_no, "expected " + std::to_string(cols) + " tokens, found " +
                                    std::to_string(toks.size()));
        for (const auto& t : toks) {
            if (t == "*") {
                grid.push_back(Cell::star());
                continue;
            }
            const std::int64_t id = parse_int(t, line_no, "cell");
            if (id < 1 || id > symbols)
                parse_fail(line_no, "symbol " + std::to_string(id) + " out of range 1.." +
                                        std::to_string(symbols));
            grid.push_back(Cell::sym(static_cast<int>(id)));
            used[static_cast<std::size_t>(id)] = 1;
        }
    }

    for (std::size_t i = static_cast<std::size_t>(rows) + 1; i < lines.size(); ++i)
        if (!split_tokens(lines[i]).empty())
            parse_fail(static_cast<int>(i) + 1, "unexpected content after row " +
                                                    std::to_string(rows));

    for (int s = 1; s <= n_syms; ++s)
        if (!used[static_cast<std::size_t>(s)])
            throw std::invalid_argument("parse error: symbol " + std::to_string(s) +
                                        " is declared in the header but never appears");

    ParsedPda out{Pda(rows, cols, n_syms, std::move(grid)), {}};

    int first_col_stars = out.array.column_star_count(1);
    bool even = true;
    for (int k = 2; k <= cols; ++k)
        even = even && out.array.column_star_count(k) == first_col_stars;
    if (!even)
        out.warnings.push_back("column star counts are uneven; header Z left unchecked");
    else if (first_col_stars != declared_z)
        out.warnings.push_back("header Z=" + std::to_string(declared_z) +
                               " disagrees with the grid (" + std::to_string(first_col_stars) +
                               " stars per column)");
    return out;
}

std::string serialize_pda(const Pda& p) {
    std::string out = "PDA v1 K=" + std::to_string(p.cols()) + " F=" + std::to_string(p.rows()) +
                      " Z=" + std::to_string(p.column_star_count(1)) +
                      " S=" + std::to_string(p.symbol_count()) + "\n";
    for (int j = 1; j <= p.rows(); ++j) {
        for (int k = 1; k <= p.cols(); ++k) {
            if (k > 1)
                out += ' ';
            const Cell& c = p.at(j, k);
            out += c.is_star() ? "*" : std::to_string(c.sym_id());
        }
        out += '\n';
    }
    return out;
}

std::string export_hypergraph_text(const Pda& p) {
    const TripartiteHypergraph h = pda_to_hypergraph(p);
    std::string out = "HG " + std::to_string(h.part_f()) + " " + std::to_string(h.part_k()) +
                      " " + std::to_string(h.part_s()) + "\n";
    for (const Edge& e : h.edges())
        out += std::to_string(e.row) + " " + std::to_string(e.col) + " " +
               std::to_string(e.sym) + "\n";
    return out;
}

std::string render_report(const ValidationReport& r) {
    const auto line = [](const char* what, bool ok) {
        return std::string(what) + ": " + (ok ? "ok" : "FAIL") + "\n";
    };
    std::string out;
    out += line("C1 equal star count per column", r.c1_ok);
    out += line("C2 no repeated symbol in a row or column", r.c2_ok);
    out += line("C3 equal symbols face stars at crossing cells", r.c3_ok);
    for (const Violation& v : r.violations)
        out += "  " + describe(v) + "\n";
    out += r.valid() ? "valid\n" : "invalid\n";
    return out;
}

std::string render_params(const PdaParams& p) {
    std::string out = "(K,F,Z,S)=(" + std::to_string(p.users) + "," + std::to_string(p.division) +
                      "," + std::to_string(p.stars_per_column) + "," + std::to_string(p.symbols) +
                      ")\n";
    out += "rate R=" + p.rate.str() + "\n";
    out += "memory M/N=" + p.mem_ratio.str() + "\n";
    if (p.regularity)
        out += "regular: g=" + std::to_string(*p.regularity) + "\n";
    else
        out += "not regular\n";
    return out;
}

namespace {

struct Range {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
};

std::int64_t table_int(const std::string& s, const std::string& what) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("table: " + what + ": '" + s + "' is not an integer");
    return value;
}

// Accepts `key=value` and `key=lo..hi` assignments for the given keys and
// returns the ranges in key order.
std::vector<Range> parse_ranges(const std::vector<std::string>& keys,
                                const std::vector<std::string>& assignments) {
    std::map<std::string, Range> seen;
    for (const auto& a : assignments) {
        const auto eq = a.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("table: expected key=value, got '" + a + "'");
        const std::string key = a.substr(0, eq);
        const std::string val = a.substr(eq + 1);
        if (std::find(keys.begin(), keys.end(), key) == keys.end())
            throw std::invalid_argument("table: unknown parameter '" + key + "'");
        if (seen.count(key))
            throw std::invalid_argument("table: parameter '" + key + "' given twice");
        Range r;
        const auto dots = val.find("..");
        if (dots == std::string::npos) {
            r.lo = r.hi = table_int(val, key);
        } else {
            r.lo = table_int(val.substr(0, dots), key);
            r.hi = table_int(val.substr(dots + 2), key);
            if (r.lo > r.hi)
                throw std::invalid_argument("table: empty range '" + a + "'");
        }
        seen.emplace(key, r);
    }
    std::vector<Range> out;
    for (const auto& k : keys) {
        const auto it = seen.find(k);
        if (it == seen.end())
            throw std::invalid_argument("table: missing parameter '" + k + "'");
        out.push_back(it->second);
    }
    return out;
}

void walk(const std::vector<Range>& ranges, std::size_t i, std::vector<std::int64_t>& vals,
          const std::function<void(const std::vector<std::int64_t>&)>& fn) {
    if (i == ranges.size()) {
        fn(vals);
        return;
    }
    for (std::int64_t v = ranges[i].lo; v <= ranges[i].hi; ++v) {
        vals.push_back(v);
        walk(ranges, i + 1, vals, fn);
        vals.pop_back();
    }
}

std::string fmt_value(const Rational& r, bool decimal) {
    if (!decimal)
        return r.str();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", r.to_double());
    return buf;
}

} // namespace

std::vector<TableRow> table_rows(const std::string& scheme,
                                 const std::vector<std::string>& assignments) {
    std::vector<std::string> keys;
    if (scheme == "s1")
        keys = {"n", "a", "b"};
    else if (scheme == "s2" || scheme == "s2dual")
        keys = {"q", "m", "t"};
    else if (scheme == "an")
        keys = {"K", "t"};
    else
        throw std::invalid_argument("table: unknown scheme '" + scheme +
                                    "' (expected s1, s2, s2dual or an)");

    const auto ranges = parse_ranges(keys, assignments);

    std::vector<TableRow> rows;
    std::vector<std::int64_t> vals;
    walk(ranges, 0, vals, [&](const std::vector<std::int64_t>& v) {
        TableRow row;
        row.inputs = v;
        if (scheme == "s1") {
            const auto [n, a, b] = std::tuple{v[0], v[1], v[2]};
            if (a < 1 || b < 1 || a + b > n)
                return;
            const std::int64_t f = binomial(static_cast<int>(n), static_cast<int>(a));
            row.users = binomial(static_cast<int>(n), static_cast<int>(b));
            row.division = f;
            row.mem = Rational(f - binomial(static_cast<int>(n - b), static_cast<int>(a)), f);
            row.rate = Rational(binomial(static_cast<int>(n), static_cast<int>(a + b)), f);
        } else if (scheme == "s2" || scheme == "s2dual") {
            const auto [q, m, t] = std::tuple{v[0], v[1], v[2]};
            if (q < 2 || m < 1 || t < 1 || t > m)
                return;
            const std::int64_t qm = ipow(q, static_cast<int>(m));
            const std::int64_t uncached = ipow(q, static_cast<int>(m - t)) *
                                          ipow(q - 1, static_cast<int>(t));
            const std::int64_t syms = qm * ipow(q - 1, static_cast<int>(t));
            row.users = binomial(static_cast<int>(m), static_cast<int>(t)) *
                        ipow(q, static_cast<int>(t));
            if (scheme == "s2") {
                row.division = qm;
                row.mem = Rational(qm - uncached, qm);
                row.rate = Rational(syms, qm);
            } else { // swap the roles of rows and symbols
                row.division = syms;
                row.mem = Rational(syms - uncached, syms);
                row.rate = Rational(qm, syms);
            }
        } else { // an
            const auto [users, t] = std::tuple{v[0], v[1]};
            if (users < 2 || t < 1 || t > users - 1)
                return;
            const std::int64_t f = binomial(static_cast<int>(users), static_cast<int>(t));
            row.users = users;
            row.division = f;
            row.mem = Rational(binomial(static_cast<int>(users - 1), static_cast<int>(t - 1)), f);
            row.rate = Rational(binomial(static_cast<int>(users), static_cast<int>(t + 1)), f);
        }
        rows.push_back(std::move(row));
    });

    if (rows.empty())
        throw std::invalid_argument("table: no valid parameter combinations in the given ranges");
    return rows;
}

std::string render_table(const std::string& scheme,
                         const std::vector<std::string>& assignments, bool decimal) {
    std::vector<std::string> keys;
    if (scheme == "s1")
        keys = {"n", "a", "b"};
    else if (scheme == "s2" || scheme == "s2dual")
        keys = {"q", "m", "t"};
    else if (scheme == "an")
        keys = {"K", "t"};
    // unknown schemes fall through to table_rows, which throws

    const auto rows = table_rows(scheme, assignments);

    std::vector<std::string> header = keys;
    header.insert(header.end(), {"K", "M/N", "F", "R"});

    std::vector<std::vector<std::string>> body;
    for (const TableRow& r : rows) {
        std::vector<std::string> line;
        for (std::int64_t v : r.inputs)
            line.push_back(std::to_string(v));
        line.push_back(std::to_string(r.users));
        line.push_back(fmt_value(r.mem, decimal));
        line.push_back(std::to_string(r.division));
        line.push_back(fmt_value(r.rate, decimal));
        body.push_back(std::move(line));
    }

    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto& line : body)
            width[c] = std::max(width[c], line[c].size());
    }

    std::string out;
    const auto emit = [&](const std::vector<std::string>& line) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            if (c > 0)
                out += "  ";
            out.append(width[c] - line[c].size(), ' ');
            out += line[c];
        }
        out += '\n';
    };
    emit(header);
    for (const auto& line : body)
        emit(line);
    return out;
}

} // namespace pda
