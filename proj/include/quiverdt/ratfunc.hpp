#pragma once

#include <optional>

#include "quiverdt/laurent.hpp"

namespace quiverdt {

/// Rational function in v in normal form: the denominator is an ordinary
/// polynomial in v with constant term exactly 1, coprime to the polynomial
/// part of the numerator. Equality is componentwise on normal forms.
class RatFunc {
public:
    RatFunc() = default;  // zero
    RatFunc(const Laurent& num);
    RatFunc(const Laurent& num, const Laurent& den);

    static RatFunc zero() { return {}; }
    static RatFunc one() { return RatFunc(Laurent::one()); }
    static RatFunc from_int(long n) { return RatFunc(Laurent::monomial(0, Rat(n))); }
    static RatFunc monomial(int exp, Rat coeff = 1) { return RatFunc(Laurent::monomial(exp, coeff)); }
    /// q^k = v^{2k}.
    static RatFunc q_power(int k) { return monomial(2 * k); }

    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc operator*(const Rat& c) const;
    RatFunc inverse() const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    /// v ↦ v^n on numerator and denominator, renormalized.
    RatFunc substitute_pow(int n) const;
    RatFunc substitute_neg_v() const;

    Rat eval(const Rat& value) const;    // at v = value; pole -> error
    Rat eval_q(const Rat& value) const;  // at q = value; requires even powers only

    /// The numerator, if the normalized denominator is 1.
    std::optional<Laurent> as_laurent() const;

    std::string to_string() const;

private:
    Laurent num_;                  // zero, or unit v^k times a poly coprime to den_
    Laurent den_ = Laurent::one();
    void normalize();
};

}  // namespace quiverdt
