#pragma once

#include "quiverdt/quiver.hpp"

namespace quiverdt {

/// One partition per vertex, parts weakly decreasing.
using Multipartition = std::vector<std::vector<int>>;

/// All partitions of exactly n, in deterministic order.
std::vector<std::vector<int>> partitions_of(int n);

/// All multipartitions for r vertices with total size <= bound.
std::vector<Multipartition> enumerate_multipartitions(int r, int bound);

/// Hua's generating series r(q) = Σ_λ ∏_k q^{-T(λ_k)}/(q^{-1})_{λ_k-λ_{k+1}} x^{λ_k}.
Series hua_series(const Quiver& q, int bound);

struct KacEntry {
    Laurent a;                // a_α(q), stored in v with q = v^2
    bool in_N_of_q = false;
};

struct KacResult {
    std::map<DimVector, KacEntry> entries;
};

/// Kac polynomials from Hua's formula: r(q) = Exp(Σ a_α x^α/(q-1)).
KacResult kac_polynomials(const Quiver& q, int bound);

/// Refined Hua series s over level variables x_{ki}, weight(x_{ki}) = k,
/// variables ordered (k,i) with k major.
Series refined_series(const Quiver& q, int levels, int bound);

struct RefinedEntry {
    RatFunc b;
    bool laurent_in_q = false;  // element of Z[q^{±1}] (up to rational coefficients: Laurent in q)
    bool positive = false;      // element of N[q]
};

struct RefinedResult {
    int r = 0;
    int levels = 0;
    int bound = 0;
    std::map<DimVector, RefinedEntry> entries;  // key: γ over variables (k,i)
};

/// b_γ = coefficients of (q-1)Log(s). For quivers with enough loops every
/// b_γ must land in N[q]; that is checked and a failure throws.
RefinedResult refined_invariants(const Quiver& q, int levels, int bound);

/// Collapse b_γ onto Kac polynomials via x_{ki} = x_i^k:
/// a_α = Σ_{γ : Σ_k k·γ_k = α} b_γ. Requires levels >= bound.
KacResult refined_to_kac(const RefinedResult& refined);

}  // namespace quiverdt
