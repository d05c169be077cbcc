#include "quiverdt/series.hpp"

#include <stdexcept>

namespace quiverdt {

DimVector dim_add(const DimVector& a, const DimVector& b) {
    DimVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

DimVector dim_sub(const DimVector& a, const DimVector& b) {
    DimVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

DimVector dim_scale(const DimVector& a, int n) {
    DimVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * n;
    return r;
}

bool dim_is_zero(const DimVector& a) {
    for (int x : a)
        if (x != 0) return false;
    return true;
}

int dim_total(const DimVector& a) {
    int s = 0;
    for (int x : a) s += x;
    return s;
}

long bilinear_form(const IntMatrix& C, const DimVector& a, const DimVector& b) {
    if (C.size() != a.size() || C.size() != b.size())
        throw std::invalid_argument("matrix/vector dimension mismatch");
    long s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) s += long(C[i][j]) * a[i] * b[j];
    return s;
}

long quadratic_form(const IntMatrix& C, const DimVector& a) {
    return bilinear_form(C, a, a);
}

Grading Grading::uniform(int nvars, int bound) {
    return Grading{std::vector<int>(nvars, 1), bound};
}

int Grading::weight(const DimVector& a) const {
    if (a.size() != weights.size()) throw std::invalid_argument("dimension vector length mismatch");
    int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += weights[i] * a[i];
    return s;
}

Series::Series(Grading grading, std::optional<IntMatrix> twist)
    : grading_(std::move(grading)), twist_(std::move(twist)) {}

Series Series::unit(Grading grading, std::optional<IntMatrix> twist) {
    Series s(std::move(grading), std::move(twist));
    s.set(DimVector(s.grading_.weights.size(), 0), RatFunc::one());
    return s;
}

RatFunc Series::coeff(const DimVector& a) const {
    auto it = coeff_.find(a);
    return it == coeff_.end() ? RatFunc::zero() : it->second;
}

RatFunc Series::constant_term() const {
    return coeff(DimVector(grading_.weights.size(), 0));
}

void Series::set(const DimVector& a, const RatFunc& c) {
    if (c.is_zero() || !grading_.fits(a)) {
        coeff_.erase(a);
        return;
    }
    coeff_[a] = c;
}

void Series::add_to(const DimVector& a, const RatFunc& c) {
    if (!grading_.fits(a)) return;
    set(a, coeff(a) + c);
}

namespace {
void check_gradings(const Series& f, const Series& g) {
    if (!(f.grading() == g.grading()))
        throw std::invalid_argument("series grading mismatch");
}

std::optional<IntMatrix> merged_twist(const Series& f, const Series& g) {
    if (f.twist() == g.twist()) return f.twist();
    return std::nullopt;
}
}  // namespace

Series add(const Series& f, const Series& g) {
    check_gradings(f, g);
    Series out(f.grading(), merged_twist(f, g));
    for (auto& [a, c] : f.terms()) out.set(a, c);
    for (auto& [a, c] : g.terms()) out.add_to(a, c);
    return out;
}

Series sub(const Series& f, const Series& g) {
    check_gradings(f, g);
    Series out(f.grading(), merged_twist(f, g));
    for (auto& [a, c] : f.terms()) out.set(a, c);
    for (auto& [a, c] : g.terms()) out.add_to(a, -c);
    return out;
}

Series mul(const Series& f, const Series& g) {
    check_gradings(f, g);
    Series out(f.grading(), merged_twist(f, g));
    const int bound = f.grading().bound;
    for (auto& [a, ca] : f.terms()) {
        int wa = f.grading().weight(a);
        for (auto& [b, cb] : g.terms()) {
            if (wa + g.grading().weight(b) > bound) continue;
            out.add_to(dim_add(a, b), ca * cb);
        }
    }
    return out;
}

Series scale(const Series& f, const RatFunc& c) {
    Series out(f.grading(), f.twist());
    for (auto& [a, ca] : f.terms()) out.set(a, ca * c);
    return out;
}

Series twisted_mul(const Series& f, const Series& g) {
    check_gradings(f, g);
    if (!f.twist() || !g.twist() || !(*f.twist() == *g.twist()))
        throw std::invalid_argument("twisted_mul requires matching twist matrices");
    const IntMatrix& L = *f.twist();
    Series out(f.grading(), f.twist());
    const int bound = f.grading().bound;
    for (auto& [a, ca] : f.terms()) {
        int wa = f.grading().weight(a);
        for (auto& [b, cb] : g.terms()) {
            if (wa + g.grading().weight(b) > bound) continue;
            long e = bilinear_form(L, a, b);
            // (-v)^e
            RatFunc factor = RatFunc::monomial(int(e), (e % 2 != 0) ? Rat(-1) : Rat(1));
            out.add_to(dim_add(a, b), ca * cb * factor);
        }
    }
    return out;
}

Series twisted_inverse(const Series& f) {
    if (!(f.constant_term() == RatFunc::one()))
        throw std::invalid_argument("twisted_inverse requires constant term 1");
    Series n = sub(f, Series::unit(f.grading(), f.twist()));
    Series b = Series::unit(f.grading(), f.twist());
    for (int k = 0; k < f.grading().bound; ++k)
        b = sub(Series::unit(f.grading(), f.twist()), twisted_mul(n, b));
    return b;
}

Series adams(const Series& f, int n) {
    if (n < 1) throw std::invalid_argument("adams operation requires n >= 1");
    Series out(f.grading(), f.twist());
    for (auto& [a, c] : f.terms()) out.set(dim_scale(a, n), c.substitute_pow(n));
    return out;
}

int mobius(int n) {
    if (n < 1) throw std::invalid_argument("mobius requires n >= 1");
    int primes = 0;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            ++primes;
        }
    }
    if (n > 1) ++primes;
    return primes % 2 == 0 ? 1 : -1;
}

Series ordinary_exp(const Series& f) {
    if (!f.constant_term().is_zero())
        throw std::invalid_argument("exp requires zero constant term");
    Series acc = Series::unit(f.grading(), f.twist());
    Series power = Series::unit(f.grading(), f.twist());
    // f is nilpotent within the truncation: f^k = 0 for k > bound.
    for (int k = 1; k <= f.grading().bound; ++k) {
        power = scale(mul(power, f), RatFunc::one() * rat(1, k));
        acc = add(acc, power);
    }
    return acc;
}

Series ordinary_log(const Series& f) {
    if (!(f.constant_term() == RatFunc::one()))
        throw std::invalid_argument("log requires constant term 1");
    Series u = sub(f, Series::unit(f.grading(), f.twist()));
    Series acc(f.grading(), f.twist());
    Series power = Series::unit(f.grading(), f.twist());
    for (int k = 1; k <= f.grading().bound; ++k) {
        power = mul(power, u);
        acc = add(acc, scale(power, RatFunc::one() * rat(k % 2 == 0 ? -1 : 1, k)));
    }
    return acc;
}

Series plethystic_exp(const Series& f) {
    if (!f.constant_term().is_zero())
        throw std::invalid_argument("Exp requires augmentation-ideal input");
    Series g(f.grading(), f.twist());
    // ψ_n raises weight by a factor n, so n > bound contributes nothing.
    for (int n = 1; n <= f.grading().bound; ++n)
        g = add(g, scale(adams(f, n), RatFunc::one() * rat(1, n)));
    return ordinary_exp(g);
}

Series plethystic_log(const Series& f) {
    if (!(f.constant_term() == RatFunc::one()))
        throw std::invalid_argument("Log requires constant term 1");
    Series h = ordinary_log(f);
    Series acc(f.grading(), f.twist());
    for (int n = 1; n <= f.grading().bound; ++n) {
        int mu = mobius(n);
        if (mu == 0) continue;
        acc = add(acc, scale(adams(h, n), RatFunc::one() * rat(mu, n)));
    }
    return acc;
}

Series apply_diagonal(const DiagonalOperator& op, const Series& f) {
    if (op.matrix.size() != f.grading().weights.size())
        throw std::invalid_argument("diagonal operator dimension mismatch");
    Series out(f.grading(), f.twist());
    for (auto& [a, c] : f.terms()) {
        long e = quadratic_form(op.matrix, a);
        RatFunc factor = op.base == DiagonalOperator::Base::Q
                             ? RatFunc::q_power(int(e))
                             : RatFunc::monomial(int(e), (e % 2 != 0) ? Rat(-1) : Rat(1));
        out.set(a, c * factor);
    }
    return out;
}

Series specialize_levels(const Series& f, int r) {
    const auto& w = f.grading().weights;
    if (r < 1 || w.size() % r != 0)
        throw std::invalid_argument("level variable count is not a multiple of r");
    int nlevels = int(w.size()) / r;
    for (int k = 1; k <= nlevels; ++k)
        for (int i = 0; i < r; ++i)
            if (w[(k - 1) * r + i] != k)
                throw std::invalid_argument("weight mismatch: x_{ki} must have weight k");
    Series out(Grading::uniform(r, f.grading().bound));
    for (auto& [g, c] : f.terms()) {
        DimVector a(r, 0);
        for (int k = 1; k <= nlevels; ++k)
            for (int i = 0; i < r; ++i) a[i] += k * g[(k - 1) * r + i];
        out.add_to(a, c);
    }
    return out;
}

Series scale_by_q_minus_1(const Series& f, ScaleDirection dir) {
    RatFunc qm1(Laurent::monomial(2, 1) - Laurent::one());
    return scale(f, dir == ScaleDirection::Multiply ? qm1 : qm1.inverse());
}

namespace {
void enum_rec(const Grading& g, DimVector& cur, size_t idx, int remaining,
              std::vector<DimVector>& out) {
    if (idx == cur.size()) {
        out.push_back(cur);
        return;
    }
    int maxv = remaining / g.weights[idx];
    for (int v = 0; v <= maxv; ++v) {
        cur[idx] = v;
        enum_rec(g, cur, idx + 1, remaining - v * g.weights[idx], out);
    }
    cur[idx] = 0;
}
}  // namespace

std::vector<DimVector> enumerate_dim_vectors(const Grading& grading) {
    std::vector<DimVector> out;
    DimVector cur(grading.weights.size(), 0);
    enum_rec(grading, cur, 0, grading.bound, out);
    return out;
}

}  // namespace quiverdt
