#pragma once

#include "pda.hpp"

namespace pda {

/// Disjoint-subset construction: rows are the a-subsets of {1..n}, columns
/// the b-subsets, symbols the (a+b)-subsets, and cell (A,B) holds A union B
/// whenever A and B are disjoint. Requires n >= a + b, a,b >= 1.
struct Scheme1Params {
    int n = 0;
    int a = 0;
    int b = 0;
};

/// Extended q-ary sequence construction: rows are the q-ary length-m
/// vectors, columns the (delta-set, values) pairs, symbols the length-(m+t)
/// vectors whose last t coordinates avoid q-1. Requires q >= 2, 1 <= t <= m.
struct Scheme2Params {
    int q = 0;
    int m = 0;
    int t = 0;
};

/// Parameters: (K,F,Z,S) = (C(n,b), C(n,a), C(n,a)-C(n-b,a), C(n,a+b)),
/// C(a+b,a)-regular. Rows, columns and symbols are indexed by the
/// colexicographic rank of the underlying subsets.
Pda scheme1(const Scheme1Params& p);

/// Parameters: (K,F,Z,S) = (C(m,t)q^t, q^m, q^m-q^(m-t)(q-1)^t,
/// q^m(q-1)^t), C(m,t)-regular. Rows are indexed by the base-q value of
/// (a_1..a_m) plus one; columns by (colex rank of the delta-set, then
/// base-q value of the chosen coordinates); symbols by the mixed-radix
/// value of (c_1..c_m, c_{m+1}..c_{m+t}) with radices (q,..,q,q-1,..,q-1).
Pda scheme2(const Scheme2Params& p);

/// The classical uncoded-prefetching scheme as the b=1 instance of
/// scheme1: parameters (K, C(K,t), C(K-1,t-1), C(K,t+1)). Requires
/// 1 <= t <= users-1.
Pda ali_niesen(int users, int t);

/// Swaps the roles of rows and symbols: the S x K array with
/// Q[s,k] = j iff pda[j,k] = s. Requires a valid input PDA in which every
/// row holds at least one integer; the result has parameters
/// (K, S, S-(F-Z), F). Applying dualize twice returns the original array.
Pda dualize(const Pda& pda);

} // namespace pda
