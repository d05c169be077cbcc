#include "quiverdt/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace quiverdt {

void Laurent::add_term(int exp, const Rat& c) {
    if (c == 0) return;
    auto it = coeff_.find(exp);
    if (it == coeff_.end()) {
        coeff_.emplace(exp, c);
    } else {
        it->second += c;
        if (it->second == 0) coeff_.erase(it);
    }
}

Laurent Laurent::monomial(int exp, Rat coeff) {
    Laurent f;
    f.add_term(exp, coeff);
    return f;
}

bool Laurent::is_one() const {
    return coeff_.size() == 1 && coeff_.begin()->first == 0 && coeff_.begin()->second == 1;
}

Rat Laurent::coeff(int exp) const {
    auto it = coeff_.find(exp);
    return it == coeff_.end() ? Rat(0) : it->second;
}

int Laurent::min_exp() const {
    if (is_zero()) throw std::domain_error("min_exp of zero polynomial");
    return coeff_.begin()->first;
}

int Laurent::max_exp() const {
    if (is_zero()) throw std::domain_error("max_exp of zero polynomial");
    return coeff_.rbegin()->first;
}

Laurent Laurent::operator-() const {
    Laurent r;
    for (auto& [e, c] : coeff_) r.coeff_.emplace(e, -c);
    return r;
}

Laurent Laurent::operator+(const Laurent& o) const {
    Laurent r = *this;
    for (auto& [e, c] : o.coeff_) r.add_term(e, c);
    return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
    Laurent r = *this;
    for (auto& [e, c] : o.coeff_) r.add_term(e, -c);
    return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
    Laurent r;
    for (auto& [e1, c1] : coeff_)
        for (auto& [e2, c2] : o.coeff_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

Laurent Laurent::operator*(const Rat& c) const {
    Laurent r;
    if (c == 0) return r;
    for (auto& [e, a] : coeff_) r.coeff_.emplace(e, a * c);
    return r;
}

Laurent Laurent::substitute_pow(int n) const {
    if (n == 0) throw std::domain_error("substitute_pow requires n != 0");
    Laurent r;
    for (auto& [e, c] : coeff_) r.coeff_.emplace(e * n, c);
    return r;
}

Laurent Laurent::substitute_neg_v() const {
    Laurent r;
    for (auto& [e, c] : coeff_) r.coeff_.emplace(e, (e % 2 != 0) ? Rat(-c) : c);
    return r;
}

namespace {
Rat rat_pow(const Rat& base, int exp) {
    if (exp == 0) return 1;
    if (exp < 0) {
        if (base == 0) throw std::domain_error("pole at evaluation point");
        Rat inv = Rat(1) / base;
        return rat_pow(inv, -exp);
    }
    Rat r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}
}  // namespace

Rat Laurent::eval(const Rat& value) const {
    Rat r = 0;
    for (auto& [e, c] : coeff_) r += c * rat_pow(value, e);
    return r;
}

Rat Laurent::eval_q(const Rat& value) const {
    Rat r = 0;
    for (auto& [e, c] : coeff_) {
        if (e % 2 != 0) throw std::domain_error("odd power of v; not a function of q");
        r += c * rat_pow(value, e / 2);
    }
    return r;
}

bool Laurent::is_polynomial() const {
    return coeff_.empty() || coeff_.begin()->first >= 0;
}

bool Laurent::is_polynomial_in_q() const {
    for (auto& [e, c] : coeff_)
        if (e < 0 || e % 2 != 0) return false;
    return true;
}

bool Laurent::is_laurent_in_q() const {
    for (auto& [e, c] : coeff_)
        if (e % 2 != 0) return false;
    return true;
}

bool Laurent::has_integer_coeffs() const {
    for (auto& [e, c] : coeff_)
        if (!is_integer(c)) return false;
    return true;
}

bool Laurent::has_nonneg_integer_coeffs() const {
    for (auto& [e, c] : coeff_)
        if (!is_integer(c) || c < 0) return false;
    return true;
}

Laurent Laurent::q_pochhammer(int n, bool inverse) {
    if (n < 0) throw std::domain_error("q_pochhammer requires n >= 0");
    Laurent r = one();
    for (int k = 1; k <= n; ++k) {
        int e = inverse ? -2 * k : 2 * k;
        r = r * (one() - monomial(e, 1));
    }
    return r;
}

namespace {

// Dense polynomial in v over Rat, lowest degree first.
using Dense = std::vector<Rat>;

Dense to_dense(const Laurent& f, int shift) {
    Dense d(f.max_exp() - shift + 1, Rat(0));
    for (auto& [e, c] : f.terms()) d[e - shift] = c;
    return d;
}

void trim(Dense& d) {
    while (!d.empty() && d.back() == 0) d.pop_back();
}

// Remainder of a by b (b nonzero), in place on a copy.
Dense poly_rem(Dense a, const Dense& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rat f = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        trim(a);
    }
    return a;
}

Laurent from_dense(const Dense& d, int shift = 0) {
    Laurent f;
    for (size_t i = 0; i < d.size(); ++i)
        if (d[i] != 0) f = f + Laurent::monomial(int(i) + shift, d[i]);
    return f;
}

}  // namespace

Laurent laurent_gcd(const Laurent& a, const Laurent& b) {
    if (a.is_zero()) return b.is_zero() ? Laurent::zero() : laurent_gcd(b, a);
    if (b.is_zero()) {
        Dense d = to_dense(a, a.min_exp());
        Rat lead = d.back();
        for (auto& c : d) c /= lead;
        return from_dense(d);
    }
    Dense x = to_dense(a, a.min_exp());
    Dense y = to_dense(b, b.min_exp());
    while (!y.empty()) {
        Dense r = poly_rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    Rat lead = x.back();
    for (auto& c : x) c /= lead;
    return from_dense(x);
}

Laurent laurent_divexact(const Laurent& a, const Laurent& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    if (a.is_zero()) return Laurent::zero();
    int shift = a.min_exp() - b.min_exp();
    Dense x = to_dense(a, a.min_exp());
    Dense y = to_dense(b, b.min_exp());
    Dense q(x.size(), Rat(0));
    while (x.size() >= y.size() && !x.empty()) {
        Rat f = x.back() / y.back();
        size_t off = x.size() - y.size();
        q[off] = f;
        for (size_t i = 0; i < y.size(); ++i) x[off + i] -= f * y[i];
        trim(x);
    }
    if (!x.empty()) throw std::domain_error("inexact polynomial division");
    trim(q);
    return from_dense(q, shift);
}

namespace {
std::string coeff_prefix(const Rat& c, bool first, bool unit_ok) {
    std::string s;
    Rat a = c;
    if (c < 0) {
        s += first ? "-" : " - ";
        a = -c;
    } else if (!first) {
        s += " + ";
    }
    if (a != 1 || !unit_ok) s += rat_to_string(a) + "*";
    return s;
}
}  // namespace

std::string Laurent::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [e, c] : coeff_) {
        out << coeff_prefix(c, first, e != 0);
        if (e == 0) {
            if (c == 1 || c == -1) out << "1";
        } else if (e == 1) {
            out << "v";
        } else {
            out << "v^" << e;
        }
        first = false;
    }
    return out.str();
}

std::string Laurent::to_q_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [e, c] : coeff_) {
        out << coeff_prefix(c, first, e != 0);
        if (e == 0) {
            if (c == 1 || c == -1) out << "1";
        } else if (e == 2) {
            out << "q";
        } else if (e % 2 == 0) {
            out << "q^" << e / 2;
        } else {
            out << "q^" << e << "/2";
        }
        first = false;
    }
    return out.str();
}

}  // namespace quiverdt
