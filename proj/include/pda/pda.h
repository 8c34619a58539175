/* C interface to the placement delivery array library.
 *
 * All objects returned through out-parameters are heap-allocated and owned
 * by the caller: pda_array* via pda_free, pda_report* via pda_report_free,
 * char* via pda_string_free. Functions returning pda_status leave their
 * out-parameters untouched on failure and record a message retrievable
 * with pda_last_error() (thread-local, valid until the next failing call
 * on the same thread).
 *
 * Indices are 1-based throughout: rows 1..F, columns 1..K, symbols 1..S.
 */
#ifndef PDA_PDA_H
#define PDA_PDA_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef PDA_API
#define PDA_API
#endif

typedef enum pda_status {
    PDA_OK = 0,
    PDA_ERR_ARGUMENT = 1,    /* invalid parameter or precondition */
    PDA_ERR_PARSE = 2,       /* malformed text input */
    PDA_ERR_INVALID_PDA = 3, /* operation needs an array satisfying C1-C3 */
    PDA_ERR_NOMEM = 4,
    PDA_ERR_INTERNAL = 5
} pda_status;

typedef struct pda_array pda_array;   /* immutable F x K array */
typedef struct pda_report pda_report; /* validation outcome */

PDA_API const char* pda_last_error(void);

/* Construction ------------------------------------------------------- */

/* Rows are the a-subsets of {1..n}, columns the b-subsets, and disjoint
 * pairs deliver their union. Requires a,b >= 1 and a+b <= n. */
PDA_API pda_status pda_construct_subsets(int n, int a, int b, pda_array** out);

/* Rows are q-ary length-m vectors, columns pick t coordinates and target
 * values. Requires q >= 2 and 1 <= t <= m. */
PDA_API pda_status pda_construct_qary(int q, int m, int t, pda_array** out);

/* Classical uncoded-prefetching scheme: the b=1 subset construction with
 * K = users. Requires 1 <= t <= users-1. */
PDA_API pda_status pda_construct_uncoded(int users, int t, pda_array** out);

/* The S x K array with Q[s,k] = j iff in[j,k] = s. Requires a valid input
 * whose every row holds at least one integer. */
PDA_API pda_status pda_dualize(const pda_array* in, pda_array** out);

/* Text I/O ------------------------------------------------------------ */

/* Parses the `PDA v1 ...` text format. If warnings is non-NULL it receives
 * either NULL (no warnings) or a newline-separated string. */
PDA_API pda_status pda_parse(const char* text, pda_array** out, char** warnings);
PDA_API pda_status pda_serialize(const pda_array* p, char** out);

/* Edge list of the derived tripartite hypergraph (`HG F K S` header,
 * one `j k s` line per integer cell, sorted). */
PDA_API pda_status pda_export_hypergraph(const pda_array* p, char** out);

/* Shape and cells ------------------------------------------------------ */

PDA_API int pda_rows(const pda_array* p);    /* F */
PDA_API int pda_cols(const pda_array* p);    /* K */
PDA_API int pda_symbols(const pda_array* p); /* S */

/* Value at 1-based (row, col): 0 for the placement marker, the symbol id
 * otherwise; -1 if the coordinates are out of range. */
PDA_API int pda_cell(const pda_array* p, int row, int col);

/* Validation and parameters ------------------------------------------- */

PDA_API pda_status pda_validate(const pda_array* p, pda_report** out);
PDA_API int pda_report_valid(const pda_report* r); /* 1, 0, or -1 on NULL */
PDA_API pda_status pda_report_render(const pda_report* r, char** out);

typedef struct pda_params_view {
    int64_t users;            /* K */
    int64_t division;         /* F */
    int64_t stars_per_column; /* Z */
    int64_t symbols;          /* S */
    int64_t rate_num, rate_den;
    int64_t mem_num, mem_den;
    int64_t regularity; /* g when every symbol occurs g times, else 0 */
} pda_params_view;

/* Requires equal star counts per column (C1) so that Z is well defined. */
PDA_API pda_status pda_params(const pda_array* p, pda_params_view* out);
PDA_API pda_status pda_params_render(const pda_array* p, char** out);

/* Simulation ----------------------------------------------------------- */

/* Runs placement, delivery and per-user decoding over a library of n_files
 * random files of file_len bytes generated from seed. demand holds K
 * entries in 1..n_files, or is NULL for the default demand where user k
 * requests ((k-1) mod n_files) + 1. The result is one summary line:
 * `users_ok=<0/1 per user> S=<S> rate=<S>/<F> cache_bytes=<int>`. */
PDA_API pda_status pda_simulate(const pda_array* p, int n_files, size_t file_len,
                                uint64_t seed, const int* demand, char** out);

/* Same, over every demand vector in lexicographic order, one line each. */
PDA_API pda_status pda_simulate_all(const pda_array* p, int n_files, size_t file_len,
                                    uint64_t seed, char** out);

/* Parameter tables ------------------------------------------------------ */

/* Closed-form parameter rows. scheme is one of "s1" (keys n,a,b), "s2" or
 * "s2dual" (keys q,m,t), "an" (keys K,t); assignments are strings like
 * "q=2" or "m=2..10", one per key. Out-of-range combinations are skipped.
 * Columns: the scheme keys, then K, M/N, F, R; fractions print as `p/q`
 * unless decimal is nonzero. */
PDA_API pda_status pda_table(const char* scheme, const char* const* assignments,
                             size_t n_assignments, int decimal, char** out);

/* Destruction ----------------------------------------------------------- */

PDA_API void pda_free(pda_array* p);
PDA_API void pda_report_free(pda_report* r);
PDA_API void pda_string_free(char* s);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PDA_PDA_H */
