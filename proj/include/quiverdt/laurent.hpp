#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quiverdt/rational.hpp"

namespace quiverdt {

/// Sparse Laurent polynomial in the variable v, with q = v^2.
/// Exponents may be negative; zero coefficients are never stored.
class Laurent {
public:
    Laurent() = default;

    static Laurent zero() { return {}; }
    static Laurent one() { return monomial(0, 1); }
    static Laurent monomial(int exp, Rat coeff);

    /// (q^{±1})_n = ∏_{k=1}^n (1 - q^{±k}), as a Laurent polynomial in v.
    static Laurent q_pochhammer(int n, bool inverse = false);

    bool is_zero() const { return coeff_.empty(); }
    bool is_one() const;

    const std::map<int, Rat>& terms() const { return coeff_; }
    Rat coeff(int exp) const;

    int min_exp() const;  // throws on zero
    int max_exp() const;

    Laurent operator-() const;
    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator*(const Laurent& o) const;
    Laurent operator*(const Rat& c) const;
    bool operator==(const Laurent& o) const { return coeff_ == o.coeff_; }

    /// v ↦ v^n (n ≠ 0; negative n flips the exponents).
    Laurent substitute_pow(int n) const;
    /// v ↦ -v.
    Laurent substitute_neg_v() const;

    /// Value at v = value. Negative exponents at value = 0 are a pole.
    Rat eval(const Rat& value) const;
    /// Value at q = value; requires all exponents even.
    Rat eval_q(const Rat& value) const;

    bool is_polynomial() const;          // no negative exponents
    bool is_polynomial_in_q() const;     // all exponents even and >= 0
    bool is_laurent_in_q() const;        // all exponents even
    bool has_integer_coeffs() const;
    bool has_nonneg_integer_coeffs() const;

    std::string to_string() const;    // powers of v
    std::string to_q_string() const;  // powers of q, halves printed q^{k/2}

private:
    std::map<int, Rat> coeff_;
    void add_term(int exp, const Rat& c);
    friend struct LaurentOps;
};

/// Monic gcd of the polynomial parts (unit factors v^k stripped first).
Laurent laurent_gcd(const Laurent& a, const Laurent& b);

/// Exact division; throws if the division leaves a remainder.
Laurent laurent_divexact(const Laurent& a, const Laurent& b);

}  // namespace quiverdt
