#pragma once

#include <map>
#include <string>
#include <vector>

#include "breather/g_function.hpp"
#include "breather/parallel.hpp"
#include "breather/rational.hpp"

namespace breather {

// Coefficient of e^{-(2l+1)xi} cos((2s+1)tau) in the sinh-Gordon expansion:
// b_ls(r) = 8 sum_{s<=j<=l} r^{2j+1} C(2j+1, j-s), r = eps/sqrt(1-eps^2).
struct ShgCoefficient {
    int l = 0;
    int s = 0;
    std::map<int, Rational> r_powers;  // power of r -> nonnegative integer coefficient
};
ShgCoefficient shg_b(int l, int s);

// abar_ls(eps) = b_ls(eps) * (sqrt(1-eps^2)/8)^{2l+1}; exact rational, >= 0.
Rational shg_abar(int l, int s, const Rational& eps);

struct DominationEntry {
    int l = 0;
    int s = 0;
    Rational a_abs;  // |a_ls(eps)| from the series with u1 = eps
    Rational abar;   // sinh-Gordon majorant value
};
struct DominationReport {
    Rational eps;
    int L = 0;
    std::vector<DominationEntry> entries;
    bool all_dominated = false;
};

// Exact term-by-term check |a_ls| <= abar_ls for l <= L. Requires g odd,
// numeric, with |g_m| <= 1/m! (rescale first otherwise) and 0 < eps < 1.
DominationReport dominate(const GSpec& g, const Rational& eps, int L,
                          par::Exec exec = par::default_exec());

// Smallest xi with |(eps/sqrt(1-eps^2)) / sinh(xi - a(eps))| < 1 beyond it,
// a(eps) = log(sqrt(1-eps^2)/8); closed form a + asinh(r).
double convergence_xi_min(double eps);

struct HGapResult {
    bool ok = false;
    bool degenerate = false;  // eps == 0 makes the bound vacuous
    Rational max_h;           // largest (least negative) h over the checked cells
    explicit operator bool() const { return ok; }
};
// h(2l+1, 2s+1) <= -8 eps^2 over 1 <= l <= L, 0 <= s <= l, exact arithmetic.
HGapResult h_gap_check(int L, const Rational& eps);

std::string domination_dump(const DominationReport& r);

}  // namespace breather
