#include "quiverdt/dt.hpp"

#include <algorithm>

namespace quiverdt {

Laurent q_pochhammer_vec(const DimVector& a, bool inverse) {
    Laurent r = Laurent::one();
    for (int n : a) r = r * Laurent::q_pochhammer(n, inverse);
    return r;
}

Series build_A(const Quiver& q, int bound) {
    if (bound < 1) throw std::invalid_argument("bound must be >= 1");
    q.validate();
    Grading grading = Grading::uniform(q.r, bound);
    Series a(grading, q.antisym_matrix());
    for (const DimVector& al : enumerate_dim_vectors(grading)) {
        long t = q.tits_form(al);
        Laurent num = Laurent::monomial(int(-t), (t % 2 != 0) ? Rat(-1) : Rat(1));
        a.set(al, RatFunc(num, q_pochhammer_vec(al, true)));
    }
    return a;
}

namespace {

DTEntry make_dt_entry(const RatFunc& value) {
    auto l = value.as_laurent();
    if (!l)
        throw std::domain_error("DT invariant is not a Laurent polynomial: " + value.to_string());
    DTEntry e;
    e.omega = *l;
    e.omega_neg = l->substitute_neg_v();
    e.positive = e.omega_neg.has_nonneg_integer_coeffs();
    e.integral = e.omega.has_integer_coeffs();
    return e;
}

std::map<DimVector, DTEntry> omega_from_series(const Series& a_series) {
    Series om = scale_by_q_minus_1(plethystic_log(a_series), ScaleDirection::Multiply);
    std::map<DimVector, DTEntry> out;
    for (auto& [al, c] : om.terms()) out.emplace(al, make_dt_entry(c));
    return out;
}

}  // namespace

DTResult dt_invariants(const Quiver& q, int bound) {
    if (!q.is_symmetric())
        throw std::invalid_argument(
            "DT invariants require a symmetric quiver (per-slope definition applies otherwise)");
    DTResult r;
    r.entries = omega_from_series(build_A(q, bound));
    return r;
}

namespace {

// Enumerates ordered tuples (β_1,...,β_s), s >= 2, of nonzero vectors summing
// to α with strictly decreasing slopes, and hands each tuple to cb.
void decompositions(const Stability& st, const DimVector& remaining,
                    std::optional<Rat> prev_slope, std::vector<DimVector>& acc,
                    const std::function<void(const std::vector<DimVector>&)>& cb) {
    // Candidate next parts: 0 < β <= remaining componentwise.
    std::vector<DimVector> parts;
    DimVector cur(remaining.size(), 0);
    std::function<void(size_t)> gen = [&](size_t i) {
        if (i == cur.size()) {
            if (!dim_is_zero(cur)) parts.push_back(cur);
            return;
        }
        for (int v = 0; v <= remaining[i]; ++v) {
            cur[i] = v;
            gen(i + 1);
        }
        cur[i] = 0;
    };
    gen(0);
    for (const DimVector& b : parts) {
        Rat mu = slope(st, b);
        if (prev_slope && !(mu < *prev_slope)) continue;
        acc.push_back(b);
        DimVector rest = dim_sub(remaining, b);
        if (dim_is_zero(rest)) {
            if (acc.size() >= 2) cb(acc);
        } else {
            decompositions(st, rest, mu, acc, cb);
        }
        acc.pop_back();
    }
}

class HNSolver {
public:
    HNSolver(const Quiver& q, const Stability& st, int bound)
        : q_(q), st_(st), a_(build_A(q, bound)) {}

    const Series& full_series() const { return a_; }

    RatFunc semistable_coeff(const DimVector& al) {
        auto it = memo_.find(al);
        if (it != memo_.end()) return it->second;
        RatFunc res = a_.coeff(al);
        std::vector<DimVector> acc;
        decompositions(st_, al, std::nullopt, acc, [&](const std::vector<DimVector>& parts) {
            RatFunc term = RatFunc::one();
            for (const DimVector& b : parts) term = term * semistable_coeff(b);
            long tw = 0;
            for (size_t i = 0; i < parts.size(); ++i)
                for (size_t j = i + 1; j < parts.size(); ++j)
                    tw += q_.antisym_form(parts[i], parts[j]);
            // (-v)^tw from the ordered quantum-torus product
            res = res - term * RatFunc::monomial(int(tw), (tw % 2 != 0) ? Rat(-1) : Rat(1));
        });
        memo_.emplace(al, res);
        return res;
    }

private:
    Quiver q_;
    Stability st_;
    Series a_;
    std::map<DimVector, RatFunc> memo_;
};

}  // namespace

std::vector<SlopeStratum> hn_factorization(const Quiver& q, const Stability& st, int bound) {
    if (bound < 1) throw std::invalid_argument("bound must be >= 1");
    if (int(st.theta.size()) != q.r)
        throw std::invalid_argument("stability parameter length mismatch");
    HNSolver solver(q, st, bound);
    const Series& a = solver.full_series();
    std::map<Rat, Series, std::greater<Rat>> by_slope;
    for (auto& [al, c] : a.terms()) {
        if (dim_is_zero(al)) continue;
        RatFunc ss = solver.semistable_coeff(al);
        if (ss.is_zero()) continue;
        Rat mu = slope(st, al);
        auto it = by_slope.find(mu);
        if (it == by_slope.end())
            it = by_slope.emplace(mu, Series::unit(a.grading(), a.twist())).first;
        it->second.set(al, ss);
    }
    std::vector<SlopeStratum> out;
    for (auto& [mu, s] : by_slope) out.push_back(SlopeStratum{mu, s, {}});
    return out;
}

std::vector<SlopeStratum> dt_theta(const Quiver& q, const Stability& st, int bound) {
    std::vector<SlopeStratum> strata = hn_factorization(q, st, bound);
    for (SlopeStratum& stratum : strata) {
        // The per-slope definition needs ⟨α,β⟩ = 0 inside the stratum.
        std::vector<DimVector> keys;
        for (auto& [al, c] : stratum.series.terms())
            if (!dim_is_zero(al)) keys.push_back(al);
        for (size_t i = 0; i < keys.size(); ++i)
            for (size_t j = i; j < keys.size(); ++j)
                if (q.antisym_form(keys[i], keys[j]) != 0)
                    throw std::domain_error(
                        "stratum violates the vanishing-antisymmetry condition at the pair (" +
                        std::to_string(i) + "," + std::to_string(j) + ")");
        stratum.omega = omega_from_series(stratum.series);
    }
    return strata;
}

std::map<DimVector, Laurent> stable_counts(const Quiver& q, const Stability& st,
                                           const Rat& slope_value, int bound) {
    std::vector<SlopeStratum> strata = hn_factorization(q, st, bound);
    const SlopeStratum* target = nullptr;
    for (const auto& s : strata)
        if (s.slope_value == slope_value) target = &s;
    if (!target) return {};
    Series b = twisted_inverse(target->series);
    DiagonalOperator t_inv{q.euler_matrix(), DiagonalOperator::Base::NegV};
    for (auto& row : t_inv.matrix)
        for (auto& x : row) x = -x;
    Series tb = apply_diagonal(t_inv, b);
    // Σ S_α x^α = (1-q) Log(T^{-1} A^{-1})
    Series s_series = scale(scale_by_q_minus_1(plethystic_log(tb), ScaleDirection::Multiply),
                            -RatFunc::one());
    std::map<DimVector, Laurent> out;
    for (auto& [al, c] : s_series.terms()) {
        auto l = c.as_laurent();
        if (!l || !l->is_polynomial_in_q() || !l->has_integer_coeffs())
            throw std::domain_error("stable count is not a polynomial in q: " + c.to_string());
        out.emplace(al, *l);
    }
    return out;
}

std::map<DimVector, Rat> classical_dt(const DTResult& result) {
    std::map<DimVector, Rat> out;
    for (auto& [al, e] : result.entries) out.emplace(al, e.omega_neg.eval(Rat(1)));
    return out;
}

namespace {

void check_transfer_input(const IntMatrix& C, const std::map<DimVector, Laurent>& a) {
    for (const auto& row : C) {
        if (row.size() != C.size()) throw std::invalid_argument("C must be square");
        for (int x : row)
            if (x < 0) throw std::invalid_argument("transfer matrix C must have non-negative entries");
    }
    for (auto& [al, v] : a) {
        if (al.size() != C.size()) throw std::invalid_argument("dimension vector length mismatch");
        if (dim_is_zero(al)) throw std::invalid_argument("transfer input must have no constant term");
    }
}

TransferEntry make_transfer_entry(const RatFunc& value) {
    TransferEntry e;
    e.value = value;
    auto l = value.as_laurent();
    e.in_N_of_q = l && l->is_polynomial_in_q() && l->has_nonneg_integer_coeffs();
    e.integral_half = l && l->has_integer_coeffs();
    return e;
}

}  // namespace

TransferResult plethystic_transfer(const IntMatrix& C, const std::map<DimVector, Laurent>& a,
                                   int bound) {
    check_transfer_input(C, a);
    Grading grading = Grading::uniform(int(C.size()), bound);
    Series f(grading);
    for (auto& [al, v] : a) f.set(al, RatFunc(v));
    Series e = plethystic_exp(scale_by_q_minus_1(f, ScaleDirection::Divide));
    Series te = apply_diagonal(DiagonalOperator{C, DiagonalOperator::Base::Q}, e);
    Series bs = scale_by_q_minus_1(plethystic_log(te), ScaleDirection::Multiply);
    TransferResult out;
    for (auto& [al, c] : bs.terms()) out.entries.emplace(al, make_transfer_entry(c));
    return out;
}

TransferResult exp_transfer(const IntMatrix& C, const std::map<DimVector, Laurent>& a,
                            int bound) {
    check_transfer_input(C, a);
    Grading grading = Grading::uniform(int(C.size()), bound);
    auto factorial = [](const DimVector& al) {
        Rat f = 1;
        for (int x : al)
            for (int k = 2; k <= x; ++k) f *= k;
        return f;
    };
    Series f(grading);
    for (auto& [al, v] : a) f.set(al, RatFunc(v) * (Rat(1) / factorial(al)));
    Series e = ordinary_exp(scale_by_q_minus_1(f, ScaleDirection::Divide));
    Series te = apply_diagonal(DiagonalOperator{C, DiagonalOperator::Base::Q}, e);
    Series bs = scale_by_q_minus_1(ordinary_log(te), ScaleDirection::Multiply);
    TransferResult out;
    for (auto& [al, c] : bs.terms())
        out.entries.emplace(al, make_transfer_entry(c * factorial(al)));
    return out;
}

}  // namespace quiverdt
