#pragma once

#include <string>

#include "quiverdt/series.hpp"

namespace quiverdt {

/// Quiver stored as an arrow-multiplicity matrix: arrows[i][j] is the number
/// of arrows i -> j, loops on the diagonal.
struct Quiver {
    int r = 0;
    IntMatrix arrows;

    static Quiver loop_quiver(int g);  // one vertex, g loops
    /// Two vertices, `loops` loops on each, `k` arrows in each direction.
    static Quiver two_vertex(int loops, int k);

    /// Euler-Ringel form χ(α,β) = Σ α_i β_i - Σ m_{ij} α_i β_j.
    long euler_form(const DimVector& a, const DimVector& b) const;
    /// Tits form T(α) = χ(α,α).
    long tits_form(const DimVector& a) const;
    /// ⟨α,β⟩ = χ(α,β) - χ(β,α).
    long antisym_form(const DimVector& a, const DimVector& b) const;

    bool is_symmetric() const;
    /// At least one loop at every vertex; equivalently the Euler matrix has
    /// only non-positive entries.
    bool has_enough_loops() const;

    /// Matrix E with χ(α,β) = α^t E β, i.e. E = I - arrows.
    IntMatrix euler_matrix() const;
    /// Matrix of ⟨-,-⟩, i.e. E - E^t.
    IntMatrix antisym_matrix() const;

    void validate() const;
};

struct Stability {
    std::vector<Rat> theta;
};

/// μ_θ(α) = θ·α / Σ α_i; α must be nonzero.
Rat slope(const Stability& st, const DimVector& a);

/// Parses {"vertices": r, "arrow_matrix": [[...]], "theta": ["1", "-1/2", ...]}.
/// theta is optional; when present it is returned in `st`.
Quiver quiver_from_json_text(const std::string& text, std::optional<Stability>* st = nullptr);
std::string quiver_to_json_text(const Quiver& q, const std::optional<Stability>& st = std::nullopt);

}  // namespace quiverdt
