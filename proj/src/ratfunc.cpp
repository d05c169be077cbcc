#include "quiverdt/ratfunc.hpp"

namespace quiverdt {

RatFunc::RatFunc(const Laurent& num) : num_(num) {}

RatFunc::RatFunc(const Laurent& num, const Laurent& den) : num_(num), den_(den) {
    normalize();
}

void RatFunc::normalize() {
    if (den_.is_zero()) throw std::domain_error("division by zero");
    if (num_.is_zero()) {
        den_ = Laurent::one();
        return;
    }
    // Shift the denominator to a polynomial with nonzero constant term.
    int k = den_.min_exp();
    if (k != 0) {
        // x/(v^k p) = (x v^{-k})/p
        Laurent shift = Laurent::monomial(-k, 1);
        num_ = num_ * shift;
        den_ = den_ * shift;
    }
    // Cancel the common polynomial factor (the unit v^m of num is untouched).
    Laurent g = laurent_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = laurent_divexact(num_, g);
        den_ = laurent_divexact(den_, g);
    }
    // Constant term of den must be 1.
    Rat c0 = den_.coeff(0);
    Rat inv = Rat(1) / c0;
    num_ = num_ * inv;
    den_ = den_ * inv;
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    if (is_zero() || o.is_zero()) return zero();
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero");
    if (is_zero()) return zero();
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::operator*(const Rat& c) const {
    if (c == 0) return zero();
    RatFunc r;
    r.num_ = num_ * c;
    r.den_ = den_;
    return r;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::substitute_pow(int n) const {
    return RatFunc(num_.substitute_pow(n), den_.substitute_pow(n));
}

RatFunc RatFunc::substitute_neg_v() const {
    return RatFunc(num_.substitute_neg_v(), den_.substitute_neg_v());
}

Rat RatFunc::eval(const Rat& value) const {
    Rat d = den_.eval(value);
    if (d == 0) throw std::domain_error("pole at evaluation point");
    return num_.eval(value) / d;
}

Rat RatFunc::eval_q(const Rat& value) const {
    Rat d = den_.eval_q(value);
    if (d == 0) throw std::domain_error("pole at evaluation point");
    return num_.eval_q(value) / d;
}

std::optional<Laurent> RatFunc::as_laurent() const {
    if (den_.is_one()) return num_;
    return std::nullopt;
}

std::string RatFunc::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace quiverdt
