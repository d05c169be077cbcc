#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "quiverdt/ratfunc.hpp"

namespace quiverdt {

using DimVector = std::vector<int>;
using IntMatrix = std::vector<std::vector<int>>;

DimVector dim_add(const DimVector& a, const DimVector& b);
DimVector dim_sub(const DimVector& a, const DimVector& b);
DimVector dim_scale(const DimVector& a, int n);
bool dim_is_zero(const DimVector& a);
int dim_total(const DimVector& a);

/// α^t C α (C need not be symmetric).
long quadratic_form(const IntMatrix& C, const DimVector& a);
/// α^t C β.
long bilinear_form(const IntMatrix& C, const DimVector& a, const DimVector& b);

/// Weighted truncation: only monomials x^α with Σ w_i α_i <= bound are kept.
struct Grading {
    std::vector<int> weights;
    int bound = 0;

    static Grading uniform(int nvars, int bound);
    int weight(const DimVector& a) const;
    bool fits(const DimVector& a) const { return weight(a) <= bound; }
    bool operator==(const Grading& o) const = default;
};

/// Truncated multivariate power series over RatFunc. Immutable once built;
/// carries an optional antisymmetric twist matrix for the quantum-torus
/// product. Terms are held in lexicographic key order for determinism.
class Series {
public:
    explicit Series(Grading grading, std::optional<IntMatrix> twist = std::nullopt);

    static Series unit(Grading grading, std::optional<IntMatrix> twist = std::nullopt);

    const Grading& grading() const { return grading_; }
    const std::optional<IntMatrix>& twist() const { return twist_; }
    const std::map<DimVector, RatFunc>& terms() const { return coeff_; }

    RatFunc coeff(const DimVector& a) const;
    RatFunc constant_term() const;
    /// Silently drops zero coefficients and monomials past the bound.
    void set(const DimVector& a, const RatFunc& c);
    void add_to(const DimVector& a, const RatFunc& c);

    bool operator==(const Series& o) const {
        return grading_ == o.grading_ && coeff_ == o.coeff_;
    }

private:
    Grading grading_;
    std::map<DimVector, RatFunc> coeff_;
    std::optional<IntMatrix> twist_;
};

Series add(const Series& f, const Series& g);
Series sub(const Series& f, const Series& g);
Series mul(const Series& f, const Series& g);
Series scale(const Series& f, const RatFunc& c);

/// x^α ∘ x^β = (-v)^{⟨α,β⟩} x^{α+β}; both operands must carry the same twist.
Series twisted_mul(const Series& f, const Series& g);
/// Inverse of f (constant term 1) under twisted_mul.
Series twisted_inverse(const Series& f);

/// ψ_n: v ↦ v^n on coefficients, x^α ↦ x^{nα} (overweight monomials drop).
Series adams(const Series& f, int n);

int mobius(int n);

/// Exp(f) = exp(Σ_{n≥1} ψ_n(f)/n); f must have zero constant term.
Series plethystic_exp(const Series& f);
/// Log(f) = Σ_{n≥1} μ(n)/n ψ_n(log f); f must have constant term 1.
Series plethystic_log(const Series& f);

/// Ordinary exp/log by truncated Taylor series on the nilpotent part.
Series ordinary_exp(const Series& f);
Series ordinary_log(const Series& f);

/// x^α ↦ base^{α^t C α} x^α with base q or -v.
struct DiagonalOperator {
    enum class Base { Q, NegV };
    IntMatrix matrix;
    Base base = Base::Q;
};
Series apply_diagonal(const DiagonalOperator& op, const Series& f);

/// Collapse level variables x_{ki} (k-th variable block of size r, weight k)
/// onto x_i via x_{ki} = x_i^k. Weight-preserving, so the bound carries over.
Series specialize_levels(const Series& f, int r);

/// Multiply (or divide) every coefficient by q - 1 = v^2 - 1.
enum class ScaleDirection { Multiply, Divide };
Series scale_by_q_minus_1(const Series& f, ScaleDirection dir);

/// All α ≥ 0 with weight(α) <= bound, in lexicographic order.
std::vector<DimVector> enumerate_dim_vectors(const Grading& grading);

}  // namespace quiverdt
