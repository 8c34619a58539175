// Command-line front end over the C library interface.
//
// stdout carries data (arrays, edge lists, reports, tables); diagnostics
// and warnings go to stderr. Exit code 0 means success; `verify` exits 0
// only when the array satisfies all three constraints.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pda/pda.h"

namespace {

struct ArrayDeleter {
    void operator()(pda_array* p) const { pda_free(p); }
};
struct ReportDeleter {
    void operator()(pda_report* r) const { pda_report_free(r); }
};
struct StringDeleter {
    void operator()(char* s) const { pda_string_free(s); }
};

using ArrayPtr = std::unique_ptr<pda_array, ArrayDeleter>;
using ReportPtr = std::unique_ptr<pda_report, ReportDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

[[noreturn]] void die(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    std::exit(1);
}

[[noreturn]] void die_api(const char* what) {
    die(std::string(what) + ": " + pda_last_error());
}

std::string read_input(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            die("cannot open '" + path + "'");
        ss << in.rdbuf();
    }
    return ss.str();
}

void write_output(const std::string& path, const char* data) {
    if (path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        die("cannot open '" + path + "' for writing");
    out << data;
    if (!out)
        die("short write to '" + path + "'");
}

// Parses and frees the source text; warnings go to stderr.
ArrayPtr load_array(const std::string& path) {
    const std::string text = read_input(path);
    pda_array* raw = nullptr;
    char* warn = nullptr;
    if (pda_parse(text.c_str(), &raw, &warn) != PDA_OK)
        die_api("parse");
    if (warn) {
        std::cerr << "warning: " << warn;
        pda_string_free(warn);
    }
    return ArrayPtr(raw);
}

int parse_int(const std::string& s, const std::string& what) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        die(what + ": '" + s + "' is not an integer");
    return value;
}

// construct takes scheme parameters as positional key=value tokens; every
// key must be present exactly once.
std::map<std::string, int> parse_kv(const std::vector<std::string>& keys,
                                    const std::vector<std::string>& tokens) {
    std::map<std::string, int> out;
    for (const auto& tok : tokens) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos)
            die("expected key=value, got '" + tok + "'");
        const std::string key = tok.substr(0, eq);
        if (std::find(keys.begin(), keys.end(), key) == keys.end())
            die("unknown parameter '" + key + "'");
        if (out.count(key))
            die("parameter '" + key + "' given twice");
        out[key] = parse_int(tok.substr(eq + 1), key);
    }
    for (const auto& key : keys)
        if (!out.count(key))
            die("missing parameter '" + key + "'");
    return out;
}

std::vector<int> parse_demand(const std::string& csv) {
    std::vector<int> out;
    std::string item;
    std::istringstream in(csv);
    while (std::getline(in, item, ','))
        out.push_back(parse_int(item, "demand entry"));
    if (out.empty())
        die("demand list is empty");
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"placement delivery array toolkit"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "build an array from a scheme");
    std::string c_scheme;
    construct->add_option("--scheme", c_scheme, "s1 (subsets), s2 (q-ary), an (uncoded prefetch)")
        ->required()
        ->check(CLI::IsMember({"s1", "s2", "an"}));
    std::vector<std::string> c_params;
    construct->add_option("params", c_params,
                          "scheme parameters: s1 takes n= a= b=, s2 takes q= m= t=, an takes K= t=");
    std::string c_out = "-";
    construct->add_option("--out", c_out, "output file (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "check the three array constraints");
    std::string v_file;
    verify->add_option("file", v_file, "array file, or - for stdin")->required();

    // dualize
    auto* dualize = app.add_subcommand("dualize", "swap the roles of rows and symbols");
    std::string d_file;
    dualize->add_option("file", d_file, "array file, or - for stdin")->required();
    std::string d_out = "-";
    dualize->add_option("--out", d_out, "output file (default stdout)");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "run placement, delivery and decoding");
    std::string sim_file;
    simulate->add_option("file", sim_file, "array file, or - for stdin")->required();
    int sim_files = 0;
    simulate->add_option("--files", sim_files, "number of server files")->required();
    std::uint64_t sim_seed = 0;
    simulate->add_option("--seed", sim_seed, "file content seed (default 0)");
    std::size_t sim_bytes = 64;
    simulate->add_option("--bytes", sim_bytes, "length of each file in bytes (default 64)");
    std::string sim_demand;
    auto* demand_opt =
        simulate->add_option("--demand", sim_demand, "comma-separated file ids, one per user");
    bool sim_all = false;
    simulate->add_flag("--all-demands", sim_all, "sweep every demand vector")
        ->excludes(demand_opt);

    // export-hypergraph
    auto* exporth = app.add_subcommand("export-hypergraph", "print the derived edge list");
    std::string h_file;
    exporth->add_option("file", h_file, "array file, or - for stdin")->required();
    std::string h_out = "-";
    exporth->add_option("--out", h_out, "output file (default stdout)");

    // table
    auto* table = app.add_subcommand("table", "closed-form parameter rows for a scheme");
    std::string t_scheme;
    table->add_option("--scheme", t_scheme, "s1, s2, s2dual or an")
        ->required()
        ->check(CLI::IsMember({"s1", "s2", "s2dual", "an"}));
    std::vector<std::string> t_params;
    table->add_option("params", t_params, "key=value or key=lo..hi, one per scheme parameter");
    bool t_decimal = false;
    table->add_flag("--decimal", t_decimal, "print M/N and R as decimals instead of fractions");

    CLI11_PARSE(app, argc, argv);

    if (app.got_subcommand(construct)) {
        pda_array* raw = nullptr;
        pda_status st = PDA_OK;
        if (c_scheme == "s1") {
            const auto kv = parse_kv({"n", "a", "b"}, c_params);
            st = pda_construct_subsets(kv.at("n"), kv.at("a"), kv.at("b"), &raw);
        } else if (c_scheme == "s2") {
            const auto kv = parse_kv({"q", "m", "t"}, c_params);
            st = pda_construct_qary(kv.at("q"), kv.at("m"), kv.at("t"), &raw);
        } else {
            const auto kv = parse_kv({"K", "t"}, c_params);
            st = pda_construct_uncoded(kv.at("K"), kv.at("t"), &raw);
        }
        if (st != PDA_OK)
            die_api("construct");
        ArrayPtr arr(raw);
        char* text = nullptr;
        if (pda_serialize(arr.get(), &text) != PDA_OK)
            die_api("serialize");
        StringPtr owned(text);
        write_output(c_out, text);
        return 0;
    }

    if (app.got_subcommand(verify)) {
        ArrayPtr arr = load_array(v_file);
        pda_report* raw = nullptr;
        if (pda_validate(arr.get(), &raw) != PDA_OK)
            die_api("validate");
        ReportPtr report(raw);
        char* text = nullptr;
        if (pda_report_render(report.get(), &text) != PDA_OK)
            die_api("render");
        StringPtr owned(text);
        std::cout << text;
        char* params = nullptr;
        if (pda_params_render(arr.get(), &params) == PDA_OK) {
            StringPtr owned_params(params);
            std::cout << params;
        } else {
            std::cerr << "note: " << pda_last_error() << "\n";
        }
        return pda_report_valid(report.get()) == 1 ? 0 : 1;
    }

    if (app.got_subcommand(dualize)) {
        ArrayPtr arr = load_array(d_file);
        pda_array* raw = nullptr;
        if (pda_dualize(arr.get(), &raw) != PDA_OK)
            die_api("dualize");
        ArrayPtr dual(raw);
        char* text = nullptr;
        if (pda_serialize(dual.get(), &text) != PDA_OK)
            die_api("serialize");
        StringPtr owned(text);
        write_output(d_out, text);
        return 0;
    }

    if (app.got_subcommand(simulate)) {
        ArrayPtr arr = load_array(sim_file);
        char* text = nullptr;
        pda_status st;
        if (sim_all) {
            st = pda_simulate_all(arr.get(), sim_files, sim_bytes, sim_seed, &text);
        } else if (!sim_demand.empty()) {
            const std::vector<int> d = parse_demand(sim_demand);
            if (static_cast<int>(d.size()) != pda_cols(arr.get()))
                die("demand lists " + std::to_string(d.size()) + " files for " +
                    std::to_string(pda_cols(arr.get())) + " users");
            st = pda_simulate(arr.get(), sim_files, sim_bytes, sim_seed, d.data(), &text);
        } else {
            st = pda_simulate(arr.get(), sim_files, sim_bytes, sim_seed, nullptr, &text);
        }
        if (st != PDA_OK)
            die_api("simulate");
        StringPtr owned(text);
        std::cout << text;
        return 0;
    }

    if (app.got_subcommand(exporth)) {
        ArrayPtr arr = load_array(h_file);
        char* text = nullptr;
        if (pda_export_hypergraph(arr.get(), &text) != PDA_OK)
            die_api("export-hypergraph");
        StringPtr owned(text);
        write_output(h_out, text);
        return 0;
    }

    if (app.got_subcommand(table)) {
        std::vector<const char*> args;
        args.reserve(t_params.size());
        for (const auto& s : t_params)
            args.push_back(s.c_str());
        char* text = nullptr;
        if (pda_table(t_scheme.c_str(), args.data(), args.size(), t_decimal ? 1 : 0, &text) !=
            PDA_OK)
            die_api("table");
        StringPtr owned(text);
        std::cout << text;
        return 0;
    }

    return 1; // unreachable: require_subcommand(1)
}
