#include "quiverdt/kac.hpp"

#include "quiverdt/dt.hpp"

namespace quiverdt {

namespace {
void partitions_rec(int n, int maxpart, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<std::vector<int>> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of requires n >= 0");
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

std::vector<Multipartition> enumerate_multipartitions(int r, int bound) {
    // Per-vertex partitions of every size up to the bound, then products
    // across vertices filtered by total size.
    std::vector<std::vector<std::vector<int>>> by_size(bound + 1);
    for (int n = 0; n <= bound; ++n) by_size[n] = partitions_of(n);
    std::vector<Multipartition> out;
    Multipartition cur(r);
    std::function<void(int, int)> rec = [&](int vertex, int remaining) {
        if (vertex == r) {
            out.push_back(cur);
            return;
        }
        for (int n = 0; n <= remaining; ++n)
            for (const auto& p : by_size[n]) {
                cur[vertex] = p;
                rec(vertex + 1, remaining - n);
            }
        cur[vertex].clear();
    };
    rec(0, bound);
    return out;
}

namespace {
// λ_k = vector of k-th parts (1-based k), zero-padded.
DimVector level_vector(const Multipartition& mp, int k) {
    DimVector v(mp.size(), 0);
    for (size_t i = 0; i < mp.size(); ++i)
        if (int(mp[i].size()) >= k) v[i] = mp[i][k - 1];
    return v;
}
}  // namespace

Series hua_series(const Quiver& q, int bound) {
    if (bound < 1) throw std::invalid_argument("bound must be >= 1");
    q.validate();
    Series s(Grading::uniform(q.r, bound));
    for (const Multipartition& mp : enumerate_multipartitions(q.r, bound)) {
        int maxlen = 0;
        DimVector total(q.r, 0);
        for (int i = 0; i < q.r; ++i) {
            maxlen = std::max<int>(maxlen, int(mp[i].size()));
            for (int p : mp[i]) total[i] += p;
        }
        long qexp = 0;
        Laurent den = Laurent::one();
        for (int k = 1; k <= maxlen; ++k) {
            DimVector lk = level_vector(mp, k);
            DimVector lk1 = level_vector(mp, k + 1);
            qexp += -q.tits_form(lk);
            den = den * q_pochhammer_vec(dim_sub(lk, lk1), true);
        }
        s.add_to(total, RatFunc(Laurent::monomial(int(2 * qexp), 1), den));
    }
    return s;
}

namespace {
KacEntry make_kac_entry(const RatFunc& value) {
    auto l = value.as_laurent();
    if (!l || !l->is_polynomial_in_q() || !l->has_integer_coeffs())
        throw std::domain_error("Kac coefficient is not an integer polynomial in q: " +
                                value.to_string());
    KacEntry e;
    e.a = *l;
    e.in_N_of_q = l->has_nonneg_integer_coeffs();
    return e;
}
}  // namespace

KacResult kac_polynomials(const Quiver& q, int bound) {
    Series om = scale_by_q_minus_1(plethystic_log(hua_series(q, bound)),
                                   ScaleDirection::Multiply);
    KacResult out;
    for (auto& [al, c] : om.terms()) out.entries.emplace(al, make_kac_entry(c));
    return out;
}

Series refined_series(const Quiver& q, int levels, int bound) {
    if (levels < 1) throw std::invalid_argument("levels must be >= 1");
    if (bound < 1) throw std::invalid_argument("bound must be >= 1");
    q.validate();
    std::vector<int> weights(size_t(levels) * q.r);
    for (int k = 1; k <= levels; ++k)
        for (int i = 0; i < q.r; ++i) weights[(k - 1) * q.r + i] = k;
    Grading grading{weights, bound};
    Series s(grading);
    for (const DimVector& g : enumerate_dim_vectors(grading)) {
        // γ_k = λ_k - λ_{k+1}; the exponent uses λ_k = Σ_{l >= k} γ_l.
        long qexp = 0;
        Laurent den = Laurent::one();
        for (int k = 1; k <= levels; ++k) {
            DimVector lam_k(q.r, 0);
            for (int l = k; l <= levels; ++l)
                for (int i = 0; i < q.r; ++i) lam_k[i] += g[(l - 1) * q.r + i];
            qexp += -q.tits_form(lam_k);
            DimVector gk(g.begin() + (k - 1) * q.r, g.begin() + k * q.r);
            den = den * q_pochhammer_vec(gk, true);
        }
        s.add_to(g, RatFunc(Laurent::monomial(int(2 * qexp), 1), den));
    }
    return s;
}

RefinedResult refined_invariants(const Quiver& q, int levels, int bound) {
    Series b = scale_by_q_minus_1(plethystic_log(refined_series(q, levels, bound)),
                                  ScaleDirection::Multiply);
    RefinedResult out;
    out.r = q.r;
    out.levels = levels;
    out.bound = bound;
    bool enough = q.has_enough_loops();
    for (auto& [g, c] : b.terms()) {
        RefinedEntry e;
        e.b = c;
        auto l = c.as_laurent();
        e.laurent_in_q = l && l->is_laurent_in_q();
        e.positive = l && l->is_polynomial_in_q() && l->has_nonneg_integer_coeffs();
        if (enough && !e.positive)
            throw std::domain_error("refined coefficient outside N[q] for an enough-loops quiver: " +
                                    c.to_string());
        out.entries.emplace(g, e);
    }
    return out;
}

KacResult refined_to_kac(const RefinedResult& refined) {
    if (refined.levels < refined.bound)
        throw std::invalid_argument("refined_to_kac needs levels >= bound");
    std::map<DimVector, RatFunc> acc;
    for (auto& [g, e] : refined.entries) {
        DimVector al(refined.r, 0);
        for (int k = 1; k <= refined.levels; ++k)
            for (int i = 0; i < refined.r; ++i) al[i] += k * g[(k - 1) * refined.r + i];
        auto it = acc.find(al);
        if (it == acc.end())
            acc.emplace(al, e.b);
        else
            it->second = it->second + e.b;
    }
    KacResult out;
    for (auto& [al, c] : acc) {
        if (c.is_zero()) continue;
        out.entries.emplace(al, make_kac_entry(c));
    }
    return out;
}

}  // namespace quiverdt
