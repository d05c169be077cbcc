#pragma once

#include "quiverdt/quiver.hpp"

namespace quiverdt {

/// ∏_i (q^{±1})_{α_i}.
Laurent q_pochhammer_vec(const DimVector& a, bool inverse);

/// Generating series of all representations:
/// coefficient of x^α is (-v)^{-T(α)} / (q^{-1})_α. Carries the antisymmetry
/// twist of Q so it can be fed to the quantum-torus product.
Series build_A(const Quiver& q, int bound);

struct DTEntry {
    Laurent omega;      // Ω_α as a Laurent polynomial in v
    Laurent omega_neg;  // Ω_α(-v)
    bool positive = false;   // omega_neg ∈ N[v]
    bool integral = false;   // omega ∈ Z[v^{±1}]
};

struct DTResult {
    std::map<DimVector, DTEntry> entries;
};

/// Ω defined by A = Exp(Ω/(q-1)); requires a symmetric quiver.
DTResult dt_invariants(const Quiver& q, int bound);

struct SlopeStratum {
    Rat slope_value;
    Series series;  // 1 + Σ_{μ(α)=μ} A^θ_α x^α
    std::map<DimVector, DTEntry> omega;  // filled by dt_theta
};

/// Semistable series per slope, by the Harder-Narasimhan recursion; strata
/// sorted by descending slope.
std::vector<SlopeStratum> hn_factorization(const Quiver& q, const Stability& st, int bound);

/// DT invariants per slope stratum. Each stratum must satisfy ⟨α,β⟩ = 0 for
/// all pairs of dimension vectors appearing in it.
std::vector<SlopeStratum> dt_theta(const Quiver& q, const Stability& st, int bound);

/// Absolutely θ-stable counting polynomials S_α for one slope, solved from
/// A_μ ∘ T Exp(Σ S_α x^α/(1-q)) = 1.
std::map<DimVector, Laurent> stable_counts(const Quiver& q, const Stability& st,
                                           const Rat& slope_value, int bound);

/// Ω_α(-v) evaluated at v = 1 (q = 1).
std::map<DimVector, Rat> classical_dt(const DTResult& result);

struct TransferEntry {
    RatFunc value;
    bool in_N_of_q = false;       // polynomial in q with non-negative integer coefficients
    bool integral_half = false;   // element of Z[q^{±1/2}]
};

struct TransferResult {
    std::map<DimVector, TransferEntry> entries;
};

/// b defined by Exp(Σ b_α x^α/(q-1)) = T̄ Exp(Σ a_α x^α/(q-1)) with
/// T̄ x^α = q^{α^t C α} x^α; C must have non-negative entries.
TransferResult plethystic_transfer(const IntMatrix& C, const std::map<DimVector, Laurent>& a,
                                   int bound);

/// Same with ordinary exp/log and x^α/α! normalization.
TransferResult exp_transfer(const IntMatrix& C, const std::map<DimVector, Laurent>& a,
                            int bound);

}  // namespace quiverdt
