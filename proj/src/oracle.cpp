#include "quiverdt/oracle.hpp"

#include <deque>
#include <set>

#include "quiverdt/dt.hpp"

namespace quiverdt {
namespace oracle {

FMat FMat::identity(int n) {
    FMat m = zeros(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

FMat fmat_mul(const FMat& a, const FMat& b, int p) {
    if (a.cols != b.rows) throw std::invalid_argument("matrix shape mismatch");
    FMat r = FMat::zeros(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            int av = a.at(i, k);
            if (!av) continue;
            for (int j = 0; j < b.cols; ++j)
                r.at(i, j) = uint8_t((r.at(i, j) + av * b.at(k, j)) % p);
        }
    return r;
}

namespace {
int inv_mod(int a, int p) {
    a %= p;
    for (int x = 1; x < p; ++x)
        if (a * x % p == 1) return x;
    throw std::domain_error("not invertible mod p");
}
}  // namespace

std::optional<FMat> fmat_inverse(const FMat& a, int p) {
    if (a.rows != a.cols) return std::nullopt;
    int n = a.rows;
    FMat m = a;
    FMat inv = FMat::identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (m.at(r, col)) {
                pivot = r;
                break;
            }
        if (pivot < 0) return std::nullopt;
        if (pivot != col)
            for (int c = 0; c < n; ++c) {
                std::swap(m.e[size_t(pivot) * n + c], m.e[size_t(col) * n + c]);
                std::swap(inv.e[size_t(pivot) * n + c], inv.e[size_t(col) * n + c]);
            }
        int f = inv_mod(m.at(col, col), p);
        for (int c = 0; c < n; ++c) {
            m.at(col, c) = uint8_t(m.at(col, c) * f % p);
            inv.at(col, c) = uint8_t(inv.at(col, c) * f % p);
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            int g = m.at(r, col);
            if (!g) continue;
            for (int c = 0; c < n; ++c) {
                m.at(r, c) = uint8_t((m.at(r, c) + (p - g) * m.at(col, c)) % p);
                inv.at(r, c) = uint8_t((inv.at(r, c) + (p - g) * inv.at(col, c)) % p);
            }
        }
    }
    return inv;
}

long gl_order(const DimVector& alpha, int p) {
    long total = 1;
    for (int d : alpha) {
        long pd = 1;
        for (int i = 0; i < d; ++i) pd *= p;
        long pk = 1;
        for (int k = 0; k < d; ++k) {
            total *= (pd - pk);
            pk *= p;
        }
    }
    return total;
}

namespace {

struct Arrow {
    int src, dst;
};

struct Context {
    const Quiver& q;
    DimVector alpha;
    int p;
    long cap;
    std::vector<Arrow> arrows;
    long entries = 0;  // total matrix entries across arrows
    long npoints = 1;  // p^entries

    Context(const Quiver& quiver, const DimVector& a, int prime, long cap_)
        : q(quiver), alpha(a), p(prime), cap(cap_) {
        q.validate();
        if (int(a.size()) != q.r) throw std::invalid_argument("dimension vector length mismatch");
        for (int i = 0; i < q.r; ++i)
            for (int j = 0; j < q.r; ++j)
                for (int m = 0; m < q.arrows[i][j]; ++m) arrows.push_back(Arrow{i, j});
        for (const Arrow& ar : arrows) entries += long(alpha[ar.dst]) * alpha[ar.src];
        for (long i = 0; i < entries; ++i) {
            npoints *= p;
            if (npoints > cap)
                throw std::domain_error("representation space exceeds the cap; need at least " +
                                        std::to_string(npoints));
        }
    }

    Rep decode(long idx) const {
        Rep rep;
        for (const Arrow& ar : arrows) {
            FMat m = FMat::zeros(alpha[ar.dst], alpha[ar.src]);
            for (auto& x : m.e) {
                x = uint8_t(idx % p);
                idx /= p;
            }
            rep.push_back(std::move(m));
        }
        return rep;
    }

    long encode(const Rep& rep) const {
        long idx = 0;
        long base = 1;
        for (const FMat& m : rep)
            for (uint8_t x : m.e) {
                idx += x * base;
                base *= p;
            }
        return idx;
    }
};

struct Generator {
    int vertex;
    FMat g, ginv;
};

// A small generating set of GL_α(F_p): per vertex, a cyclic permutation, a
// transvection, and a scalar by a generator of F_p^* in the first slot.
std::vector<Generator> gl_generators(const DimVector& alpha, int p) {
    std::vector<Generator> gens;
    auto add = [&](int v, FMat g) {
        auto inv = fmat_inverse(g, p);
        gens.push_back(Generator{v, g, *inv});
    };
    for (size_t v = 0; v < alpha.size(); ++v) {
        int d = alpha[v];
        if (d == 0) continue;
        if (p > 2) {
            // primitive root mod p by search
            int g = 2;
            for (; g < p; ++g) {
                int x = g % p, ord = 1;
                while (x != 1) {
                    x = x * g % p;
                    ++ord;
                }
                if (ord == p - 1) break;
            }
            FMat m = FMat::identity(d);
            m.at(0, 0) = uint8_t(g);
            add(int(v), m);
        }
        if (d >= 2) {
            FMat t = FMat::identity(d);
            t.at(0, 1) = 1;
            add(int(v), t);
            FMat perm = FMat::zeros(d, d);
            for (int i = 0; i < d; ++i) perm.at((i + 1) % d, i) = 1;
            add(int(v), perm);
        }
    }
    return gens;
}

Rep act(const Context& ctx, const Generator& gen, const Rep& rep) {
    Rep out = rep;
    for (size_t a = 0; a < ctx.arrows.size(); ++a) {
        const Arrow& ar = ctx.arrows[a];
        if (ar.dst == gen.vertex) out[a] = fmat_mul(gen.g, out[a], ctx.p);
        if (ar.src == gen.vertex) out[a] = fmat_mul(out[a], gen.ginv, ctx.p);
    }
    return out;
}

// Nullspace dimension and basis of the intertwiner system: φ_j M_a = M_a φ_i.
// Unknowns are the entries of the φ_i, vertex blocks concatenated.
std::vector<std::vector<uint8_t>> endomorphism_basis(const Context& ctx, const Rep& rep) {
    int p = ctx.p;
    std::vector<int> offset(ctx.alpha.size() + 1, 0);
    for (size_t i = 0; i < ctx.alpha.size(); ++i)
        offset[i + 1] = offset[i] + ctx.alpha[i] * ctx.alpha[i];
    int nunk = offset.back();
    std::vector<std::vector<uint8_t>> rows;
    for (size_t a = 0; a < ctx.arrows.size(); ++a) {
        const Arrow& ar = ctx.arrows[a];
        const FMat& m = rep[a];
        int di = ctx.alpha[ar.src], dj = ctx.alpha[ar.dst];
        for (int r = 0; r < dj; ++r)
            for (int c = 0; c < di; ++c) {
                std::vector<uint8_t> row(nunk, 0);
                // (φ_j M)_rc: φ_j[r,k] M[k,c]
                for (int k = 0; k < dj; ++k) {
                    int idx = offset[ar.dst] + r * dj + k;
                    row[idx] = uint8_t((row[idx] + m.at(k, c)) % p);
                }
                // -(M φ_i)_rc: M[r,k] φ_i[k,c]
                for (int k = 0; k < di; ++k) {
                    int idx = offset[ar.src] + k * di + c;
                    row[idx] = uint8_t((row[idx] + p - m.at(r, k) % p) % p);
                }
                rows.push_back(std::move(row));
            }
    }
    // Gaussian elimination; then read off the nullspace from free columns.
    int nrows = int(rows.size());
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < nunk && rank < nrows; ++col) {
        int pr = -1;
        for (int r = rank; r < nrows; ++r)
            if (rows[r][col]) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(rows[rank], rows[pr]);
        int f = inv_mod(rows[rank][col], p);
        for (int c = 0; c < nunk; ++c) rows[rank][c] = uint8_t(rows[rank][c] * f % p);
        for (int r = 0; r < nrows; ++r) {
            if (r == rank || !rows[r][col]) continue;
            int g = rows[r][col];
            for (int c = 0; c < nunk; ++c)
                rows[r][c] = uint8_t((rows[r][c] + (p - g) * rows[rank][c]) % p);
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(nunk, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<uint8_t>> basis;
    for (int free = 0; free < nunk; ++free) {
        if (is_pivot[free]) continue;
        std::vector<uint8_t> v(nunk, 0);
        v[free] = 1;
        for (int r = 0; r < rank; ++r) {
            int c = pivot_col[r];
            v[c] = uint8_t((p - rows[r][free] % p) % p);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Unpack a solution vector into per-vertex square matrices.
std::vector<FMat> unpack_endo(const Context& ctx, const std::vector<uint8_t>& v) {
    std::vector<FMat> phi;
    int off = 0;
    for (int d : ctx.alpha) {
        FMat m = FMat::zeros(d, d);
        for (int i = 0; i < d * d; ++i) m.e[i] = v[off + i];
        off += d * d;
        phi.push_back(std::move(m));
    }
    return phi;
}

// Subspaces of F_p^d as RREF row bases.
std::vector<std::vector<std::vector<uint8_t>>> subspaces(int d, int p) {
    // Enumerate spans of every subset of vectors via canonical RREF form.
    long nvec = 1;
    for (int i = 0; i < d; ++i) nvec *= p;
    auto rref = [&](std::vector<std::vector<uint8_t>> rows) {
        int rank = 0;
        for (int col = 0; col < d && rank < int(rows.size()); ++col) {
            int pr = -1;
            for (int r = rank; r < int(rows.size()); ++r)
                if (rows[r][col]) {
                    pr = r;
                    break;
                }
            if (pr < 0) continue;
            std::swap(rows[rank], rows[pr]);
            int f = inv_mod(rows[rank][col], p);
            for (int c = 0; c < d; ++c) rows[rank][c] = uint8_t(rows[rank][c] * f % p);
            for (int r = 0; r < int(rows.size()); ++r) {
                if (r == rank || !rows[r][col]) continue;
                int g = rows[r][col];
                for (int c = 0; c < d; ++c)
                    rows[r][c] = uint8_t((rows[r][c] + (p - g) * rows[rank][c]) % p);
            }
            ++rank;
        }
        rows.resize(rank);
        return rows;
    };
    std::vector<std::vector<std::vector<uint8_t>>> out;
    std::set<std::vector<std::vector<uint8_t>>> seen;
    // Grow subspaces one generator at a time, starting from {0}.
    std::deque<std::vector<std::vector<uint8_t>>> queue;
    queue.push_back({});
    seen.insert({});
    while (!queue.empty()) {
        auto base = queue.front();
        queue.pop_front();
        out.push_back(base);
        for (long code = 1; code < nvec; ++code) {
            std::vector<uint8_t> vec(d);
            long x = code;
            for (int i = 0; i < d; ++i) {
                vec[i] = uint8_t(x % p);
                x /= p;
            }
            auto rows = base;
            rows.push_back(vec);
            auto canon = rref(rows);
            if (seen.insert(canon).second) queue.push_back(canon);
        }
    }
    return out;
}

// Is w in the row space given by an RREF basis?
bool in_span(const std::vector<std::vector<uint8_t>>& basis, std::vector<uint8_t> w, int p) {
    int d = int(w.size());
    for (const auto& b : basis) {
        int lead = -1;
        for (int c = 0; c < d; ++c)
            if (b[c]) {
                lead = c;
                break;
            }
        if (lead < 0) continue;
        int f = w[lead];
        if (!f) continue;
        for (int c = 0; c < d; ++c) w[c] = uint8_t((w[c] + (p - f) * b[c] % p) % p);
    }
    for (uint8_t x : w)
        if (x) return false;
    return true;
}

void classify(const Context& ctx, RepClass& cls) {
    auto basis = endomorphism_basis(ctx, cls.representative);
    cls.end_dim = int(basis.size());
    long end_size = 1;
    for (int i = 0; i < cls.end_dim; ++i) {
        end_size *= ctx.p;
        if (end_size > ctx.cap) throw std::domain_error("endomorphism ring too large to enumerate");
    }
    // Walk End(M): count units, find nontrivial idempotents.
    long units = 0;
    bool nontrivial_idem = false;
    for (long code = 0; code < end_size; ++code) {
        long x = code;
        std::vector<uint8_t> v(basis.empty() ? 0 : basis[0].size(), 0);
        for (int b = 0; b < cls.end_dim; ++b) {
            int c = int(x % ctx.p);
            x /= ctx.p;
            if (c)
                for (size_t i = 0; i < v.size(); ++i)
                    v[i] = uint8_t((v[i] + c * basis[b][i]) % ctx.p);
        }
        auto phi = unpack_endo(ctx, v);
        bool is_unit = true, is_idem = true, is_zero = true, is_id = true;
        for (size_t i = 0; i < phi.size(); ++i) {
            if (phi[i].rows == 0) continue;
            if (!fmat_inverse(phi[i], ctx.p)) is_unit = false;
            if (!(fmat_mul(phi[i], phi[i], ctx.p) == phi[i])) is_idem = false;
            FMat z = FMat::zeros(phi[i].rows, phi[i].cols);
            if (!(phi[i] == z)) is_zero = false;
            if (!(phi[i] == FMat::identity(phi[i].rows))) is_id = false;
        }
        if (is_unit) ++units;
        if (is_idem && !is_zero && !is_id) nontrivial_idem = true;
    }
    cls.indecomposable = !nontrivial_idem;
    // For an indecomposable M, End is local and its non-units are the maximal
    // ideal; absolute indecomposability means the residue field is F_p.
    long radical = end_size - units;
    if (!cls.indecomposable)
        cls.absolutely_indecomposable = false;
    else if (radical == 0)  // End is a field; F_p exactly when end_dim == 1
        cls.absolutely_indecomposable = end_size == ctx.p;
    else
        cls.absolutely_indecomposable = end_size == ctx.p * radical;
    // Simplicity: no proper nonzero invariant graded subspace.
    std::vector<std::vector<std::vector<std::vector<uint8_t>>>> per_vertex;
    for (int d : ctx.alpha) per_vertex.push_back(subspaces(d, ctx.p));
    bool found_proper = false;
    std::vector<int> pick(ctx.alpha.size(), 0);
    std::function<void(size_t)> rec = [&](size_t v) {
        if (found_proper) return;
        if (v == ctx.alpha.size()) {
            int total_dim = 0, full_dim = 0;
            for (size_t i = 0; i < pick.size(); ++i) {
                total_dim += int(per_vertex[i][pick[i]].size());
                full_dim += ctx.alpha[i];
            }
            if (total_dim == 0 || total_dim == full_dim) return;
            for (size_t a = 0; a < ctx.arrows.size(); ++a) {
                const Arrow& ar = ctx.arrows[a];
                const auto& ui = per_vertex[ar.src][pick[ar.src]];
                const auto& uj = per_vertex[ar.dst][pick[ar.dst]];
                for (const auto& u : ui) {
                    std::vector<uint8_t> img(ctx.alpha[ar.dst], 0);
                    for (int r = 0; r < ctx.alpha[ar.dst]; ++r) {
                        int s = 0;
                        for (int c = 0; c < ctx.alpha[ar.src]; ++c)
                            s += cls.representative[a].at(r, c) * u[c];
                        img[r] = uint8_t(s % ctx.p);
                    }
                    if (!in_span(uj, img, ctx.p)) return;  // not invariant
                }
            }
            found_proper = true;
            return;
        }
        for (size_t s = 0; s < per_vertex[v].size(); ++s) {
            pick[v] = int(s);
            rec(v + 1);
        }
    };
    rec(0);
    cls.simple = !found_proper && dim_total(ctx.alpha) > 0;
    cls.absolutely_simple = cls.simple && cls.end_dim == 1;
}

}  // namespace

std::vector<RepClass> enumerate_classes(const Quiver& q, const DimVector& alpha, int p,
                                        long cap) {
    Context ctx(q, alpha, p, cap);
    long glsize = gl_order(alpha, p);
    std::vector<Generator> gens = gl_generators(alpha, p);
    std::vector<bool> visited(size_t(ctx.npoints), false);
    std::vector<RepClass> classes;
    for (long seed = 0; seed < ctx.npoints; ++seed) {
        if (visited[size_t(seed)]) continue;
        // BFS over the group action from the seed point.
        std::deque<long> queue{seed};
        visited[size_t(seed)] = true;
        long orbit = 0;
        while (!queue.empty()) {
            long cur = queue.front();
            queue.pop_front();
            ++orbit;
            Rep rep = ctx.decode(cur);
            for (const Generator& g : gens) {
                long nxt = ctx.encode(act(ctx, g, rep));
                if (!visited[size_t(nxt)]) {
                    visited[size_t(nxt)] = true;
                    queue.push_back(nxt);
                }
            }
        }
        RepClass cls;
        cls.representative = ctx.decode(seed);
        cls.orbit_size = orbit;
        cls.aut_size = glsize / orbit;
        classify(ctx, cls);
        classes.push_back(std::move(cls));
    }
    return classes;
}

bool burnside_check(const Quiver& q, const DimVector& alpha, int p, long cap) {
    std::vector<RepClass> classes = enumerate_classes(q, alpha, p, cap);
    Rat lhs = 0;
    for (const RepClass& c : classes) lhs += rat(1, c.aut_size);
    RatFunc formula(Laurent::monomial(int(-2 * q.tits_form(alpha)), 1),
                    q_pochhammer_vec(alpha, true));
    return lhs == formula.eval_q(Rat(p));
}

long count_kac(const Quiver& q, const DimVector& alpha, int p, long cap) {
    long n = 0;
    for (const RepClass& c : enumerate_classes(q, alpha, p, cap))
        if (c.absolutely_indecomposable) ++n;
    return n;
}

long count_simple(const Quiver& q, const DimVector& alpha, int p, long cap) {
    long n = 0;
    for (const RepClass& c : enumerate_classes(q, alpha, p, cap))
        if (c.absolutely_simple) ++n;
    return n;
}

}  // namespace oracle
}  // namespace quiverdt
