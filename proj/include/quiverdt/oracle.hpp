#pragma once

#include <cstdint>

#include "quiverdt/quiver.hpp"

namespace quiverdt {
namespace oracle {

/// Dense matrix over F_p, entries reduced mod p.
struct FMat {
    int rows = 0, cols = 0;
    std::vector<uint8_t> e;  // row-major

    static FMat zeros(int r, int c) { return FMat{r, c, std::vector<uint8_t>(size_t(r) * c, 0)}; }
    static FMat identity(int n);
    uint8_t& at(int r, int c) { return e[size_t(r) * cols + c]; }
    uint8_t at(int r, int c) const { return e[size_t(r) * cols + c]; }
    bool operator==(const FMat& o) const = default;
};

FMat fmat_mul(const FMat& a, const FMat& b, int p);
/// Inverse, or nullopt if singular.
std::optional<FMat> fmat_inverse(const FMat& a, int p);

/// A representation: one matrix per arrow, shape α_dst × α_src.
using Rep = std::vector<FMat>;

struct RepClass {
    Rep representative;      // smallest encoding in the orbit
    long orbit_size = 0;
    long aut_size = 0;
    int end_dim = 0;         // dim_{F_p} End(M)
    bool indecomposable = false;
    bool absolutely_indecomposable = false;
    bool simple = false;
    bool absolutely_simple = false;
};

constexpr long kDefaultCap = 1 << 20;

/// All GL_α(F_p)-orbits of representations, with endomorphism statistics and
/// (absolute) indecomposability/simplicity flags.
std::vector<RepClass> enumerate_classes(const Quiver& q, const DimVector& alpha, int p,
                                        long cap = kDefaultCap);

/// Σ_{[M]} 1/#Aut M  ==  q^{-T(α)}/(q^{-1})_α at q = p, exactly.
bool burnside_check(const Quiver& q, const DimVector& alpha, int p, long cap = kDefaultCap);

/// Number of absolutely indecomposable classes (the Kac count a_α(p)).
long count_kac(const Quiver& q, const DimVector& alpha, int p, long cap = kDefaultCap);
/// Number of absolutely simple classes (the θ=0 stable count S_α(p)).
long count_simple(const Quiver& q, const DimVector& alpha, int p, long cap = kDefaultCap);

long gl_order(const DimVector& alpha, int p);

}  // namespace oracle
}  // namespace quiverdt
