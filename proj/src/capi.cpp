// The shared library is built with hidden visibility; only this interface
// is exported.
#define PDA_API __attribute__((visibility("default")))
#include "pda/pda.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>
#include <utility>

#include "constructions.hpp"
#include "pda.hpp"
#include "sim.hpp"
#include "textio.hpp"

struct pda_array {
    pda::Pda impl;
};

struct pda_report {
    pda::ValidationReport impl;
};

namespace {

thread_local std::string g_last_error;

pda_status fail(pda_status st, const std::string& msg) {
    g_last_error = msg;
    return st;
}

// Returned strings cross the C boundary, so they are malloc-backed and
// released by pda_string_free.
char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
pda_status guard(pda_status on_invalid_argument, Fn&& fn) {
    try {
        return fn();
    } catch (const std::bad_alloc&) {
        return fail(PDA_ERR_NOMEM, "out of memory");
    } catch (const std::invalid_argument& e) {
        return fail(on_invalid_argument, e.what());
    } catch (const std::exception& e) {
        return fail(PDA_ERR_INTERNAL, e.what());
    }
}

template <typename Fn>
pda_status guard(Fn&& fn) {
    return guard(PDA_ERR_ARGUMENT, std::forward<Fn>(fn));
}

pda_status make_array(pda::Pda value, pda_array** out) {
    *out = new pda_array{std::move(value)};
    return PDA_OK;
}

// Demands sweep lexicographically; keep --all-demands from running forever.
constexpr double kMaxDemandVectors = 1 << 20;

} // namespace

extern "C" {

const char* pda_last_error(void) {
    return g_last_error.c_str();
}

pda_status pda_construct_subsets(int n, int a, int b, pda_array** out) {
    if (!out)
        return fail(PDA_ERR_ARGUMENT, "out is NULL");
    return guard([&] { return make_array(pda::scheme1({n, a, b}), out); });
}

pda_status pda_construct_qary(int q, int m, int t, pda_array** out) {
    if (!out)
        return fail(PDA_ERR_ARGUMENT, "out is NULL");
    return guard([&] { return make_array(pda::scheme2({q, m, t}), out); });
}

pda_status pda_construct_uncoded(int users, int t, pda_array** out) {
    if (!out)
        return fail(PDA_ERR_ARGUMENT, "out is NULL");
    return guard([&] { return make_array(pda::ali_niesen(users, t), out); });
}

pda_status pda_dualize(const pda_array* in, pda_array** out) {
    if (!in || !out)
        return fail(PDA_ERR_ARGUMENT, "in/out is NULL");
    const pda::ValidationReport report = pda::validate(in->impl);
    if (!report.valid())
        return fail(PDA_ERR_INVALID_PDA,
                    "dualize needs a valid array: " + pda::describe(report.violations.front()));
    return guard([&] { return make_array(pda::dualize(in->impl), out); });
}

pda_status pda_parse(const char* text, pda_array** out, char** warnings) {
    if (!text || !out)
        return fail(PDA_ERR_ARGUMENT, "text/out is NULL");
    return guard(PDA_ERR_PARSE, [&] {
        pda::ParsedPda parsed = pda::parse_pda(text);
        if (warnings) {
            if (parsed.warnings.empty()) {
                *warnings = nullptr;
            } else {
                std::string joined;
                for (const auto& w : parsed.warnings) {
                    joined += w;
                    joined += '\n';
                }
                *warnings = dup_string(joined);
            }
        }
        return make_array(std::move(parsed.array), out);
    });
}

pda_status pda_serialize(const pda_array* p, char** out) {
    if (!p || !out)
        return fail(PDA_ERR_ARGUMENT, "p/out is NULL");
    return guard([&] {
        *out = dup_string(pda::serialize_pda(p->impl));
        return PDA_OK;
    });
}

pda_status pda_export_hypergraph(const pda_array* p, char** out) {
    if (!p || !out)
        return fail(PDA_ERR_ARGUMENT, "p/out is NULL");
    return guard([&] {
        *out = dup_string(pda::export_hypergraph_text(p->impl));
        return PDA_OK;
    });
}

int pda_rows(const pda_array* p) {
    return p ? p->impl.rows() : -1;
}

int pda_cols(const pda_array* p) {
    return p ? p->impl.cols() : -1;
}

int pda_symbols(const pda_array* p) {
    return p ? p->impl.symbol_count() : -1;
}

int pda_cell(const pda_array* p, int row, int col) {
    if (!p || row < 1 || row > p->impl.rows() || col < 1 || col > p->impl.cols())
        return -1;
    return p->impl.at(row, col).sym_id();
}

pda_status pda_validate(const pda_array* p, pda_report** out) {
    if (!p || !out)
        return fail(PDA_ERR_ARGUMENT, "p/out is NULL");
    return guard([&] {
        *out = new pda_report{pda::validate(p->impl)};
        return PDA_OK;
    });
}

int pda_report_valid(const pda_report* r) {
    return r ? (r->impl.valid() ? 1 : 0) : -1;
}

pda_status pda_report_render(const pda_report* r, char** out) {
    if (!r || !out)
        return fail(PDA_ERR_ARGUMENT, "r/out is NULL");
    return guard([&] {
        *out = dup_string(pda::render_report(r->impl));
        return PDA_OK;
    });
}

pda_status pda_params(const pda_array* p, pda_params_view* out) {
    if (!p || !out)
        return fail(PDA_ERR_ARGUMENT, "p/out is NULL");
    return guard([&] {
        const pda::PdaParams v = pda::params(p->impl);
        out->users = v.users;
        out->division = v.division;
        out->stars_per_column = v.stars_per_column;
        out->symbols = v.symbols;
        out->rate_num = v.rate.num();
        out->rate_den = v.rate.den();
        out->mem_num = v.mem_ratio.num();
        out->mem_den = v.mem_ratio.den();
        out->regularity = v.regularity.value_or(0);
        return PDA_OK;
    });
}

pda_status pda_params_render(const pda_array* p, char** out) {
    if (!p || !out)
        return fail(PDA_ERR_ARGUMENT, "p/out is NULL");
    return guard([&] {
        *out = dup_string(pda::render_params(pda::params(p->impl)));
        return PDA_OK;
    });
}

static pda_status simulate_impl(const pda_array* p, int n_files, size_t file_len, uint64_t seed,
                                const int* demand, bool all_demands, char** out) {
    if (!p || !out)
        return fail(PDA_ERR_ARGUMENT, "p/out is NULL");
    const pda::ValidationReport report = pda::validate(p->impl);
    if (!report.valid())
        return fail(PDA_ERR_INVALID_PDA,
                    "simulate needs a valid array: " + pda::describe(report.violations.front()));
    return guard([&] {
        const pda::Pda& arr = p->impl;
        const pda::FileLibrary lib =
            pda::FileLibrary::seeded(n_files, file_len, arr.rows(), seed);
        std::string text;
        if (all_demands) {
            if (std::pow(static_cast<double>(n_files), arr.cols()) > kMaxDemandVectors)
                throw std::invalid_argument("too many demand vectors to sweep (limit " +
                                            std::to_string(static_cast<long>(kMaxDemandVectors)) +
                                            ")");
            pda::for_each_demand(n_files, arr.cols(), [&](const pda::Demand& d) {
                text += pda::run_end_to_end(arr, lib, d).summary();
                text += '\n';
            });
        } else {
            pda::Demand d;
            d.files.reserve(static_cast<std::size_t>(arr.cols()));
            for (int k = 1; k <= arr.cols(); ++k)
                d.files.push_back(demand ? demand[k - 1] : (k - 1) % n_files + 1);
            text += pda::run_end_to_end(arr, lib, d).summary();
            text += '\n';
        }
        *out = dup_string(text);
        return PDA_OK;
    });
}

pda_status pda_simulate(const pda_array* p, int n_files, size_t file_len, uint64_t seed,
                        const int* demand, char** out) {
    return simulate_impl(p, n_files, file_len, seed, demand, false, out);
}

pda_status pda_simulate_all(const pda_array* p, int n_files, size_t file_len, uint64_t seed,
                            char** out) {
    return simulate_impl(p, n_files, file_len, seed, nullptr, true, out);
}

pda_status pda_table(const char* scheme, const char* const* assignments, size_t n_assignments,
                     int decimal, char** out) {
    if (!scheme || !out || (n_assignments > 0 && !assignments))
        return fail(PDA_ERR_ARGUMENT, "scheme/assignments/out is NULL");
    return guard([&] {
        std::vector<std::string> args;
        args.reserve(n_assignments);
        for (size_t i = 0; i < n_assignments; ++i) {
            if (!assignments[i])
                throw std::invalid_argument("assignment " + std::to_string(i) + " is NULL");
            args.emplace_back(assignments[i]);
        }
        *out = dup_string(pda::render_table(scheme, args, decimal != 0));
        return PDA_OK;
    });
}

void pda_free(pda_array* p) {
    delete p;
}

void pda_report_free(pda_report* r) {
    delete r;
}

void pda_string_free(char* s) {
    std::free(s);
}

} // extern "C"
