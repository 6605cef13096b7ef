#pragma once

#include <map>
#include <string>
#include <vector>

#include "breather/factored_rational.hpp"
#include "breather/g_function.hpp"
#include "breather/harmonic_poly.hpp"

namespace breather {

enum class ExpNormalization { unit, eps };  // u1 = cos(tau) or u1 = eps cos(tau)

// Coefficient u_l of e^{-l xi}: harmonics q <= l, q = l (mod 2), entries
// rational in w with factored denominators.
struct ExpCoefficient {
    int l = 0;
    HarmonicPoly<FactoredRational> harmonics;
};

// The formal solution sum_l u_l(tau, eps) e^{-l xi}. Coefficients are stored
// with u1 = amplitude * cos(tau); under the eps normalization every u_l
// additionally carries an implicit global factor eps^l (amplitude covariance),
// folded in by evaluation and dumping.
struct ExpSeries {
    GSpec g;
    ExpNormalization norm = ExpNormalization::unit;
    Rational u1_amplitude = Rational(1);
    std::vector<ExpCoefficient> coeffs;  // coeffs[i] is u_{i+1}

    int max_l() const { return static_cast<int>(coeffs.size()); }
    const ExpCoefficient& at(int l) const;
    // Numeric value of the (l,q) coefficient at w = eps^2, including the
    // eps^l prefactor under the eps normalization.
    Rational value_at(int l, int q, const Rational& eps) const;
};

// Symbolic caps (3 symbols, l <= 9) guard against runaway runs; override to lift.
ExpSeries expand_exp(const GSpec& g, int L, ExpNormalization norm = ExpNormalization::unit,
                     const Rational& u1_amplitude = Rational(1), bool override_caps = false);

// Display label for eps at w0 = eps^2 (e.g. "1/2", "i", "i/sqrt(2)", "i*sqrt(3/7)").
std::string eps_label_of(const Rational& w0);

// Candidate pole locations from h(l,q) = 0 with 2 <= l <= L, 0 <= q < l,
// q = l (mod 2), q != 1; deduplicated by w0 with provenance.
struct PoleCandidate {
    Rational w0;
    std::string eps_label;
    std::vector<std::pair<int, int>> provenance;  // (l,q) with this root
};
std::vector<PoleCandidate> pole_candidates(int L);

struct PoleCondition {
    int l = 0;
    int q = 0;
    Rational w0;
    std::string eps_label;
    int order = 0;
    ParamPoly condition;  // primitive integer form, positive leading coefficient
};

// Residue condition of the (l,q) coefficient at w0; empty when there is no pole,
// otherwise the leading Laurent coefficient as one PoleCondition.
std::vector<PoleCondition> residue_conditions(const ExpSeries& s, int l, int q,
                                              const Rational& w0);

// Every (l, q, w0) with a genuine pole, Table-style order: l, then q, then w0
// ascending. When bound is nonnegative only |w0| <= bound rows are kept.
std::vector<PoleCondition> conditions_report(const ExpSeries& s,
                                             const Rational& bound = Rational(-1));

// The unique coefficient sequence (indices 2..L) for which the greedy
// pole-cancellation succeeds, derived by solving each new residue condition;
// checked against the closed form sgn(g3)^m (6|g3|)^m / (2m+1)! and against a
// pole-free expansion.
std::map<int, Rational> forced_coefficients(const Rational& g3, int L);

struct SurvivingPole {
    int l = 0;
    int q = 0;
    Rational w0;
    int order = 0;
};
struct DegenerateWPole {
    int l = 0;
    int q = 0;
    int w_pow = 0;
    int net_eps_power = 0;  // l - 2*w_pow under the eps normalization
};
struct ExceptionalReport {
    Rational bound;
    std::vector<SurvivingPole> poles;          // |w0| <= bound, after cancellation
    std::vector<DegenerateWPole> degenerate;   // w = 0 view of the q = 1 divisions
    bool clean = false;                        // no poles and no negative net powers
};
// Requires a fully numeric GSpec.
ExceptionalReport exceptional_check(const ExpSeries& s, const Rational& bound);

// Defect of the scaled equation (1-eps^2) u_tt - eps^2 u_xx + u + sum g_m u^m
// at the e^{-l xi} coefficient; identically zero for l <= max_l.
HarmonicPoly<FactoredRational> exp_residual_order(const ExpSeries& s, int l);

std::string exp_dump(const ExpSeries& s);
std::string conditions_dump(const std::vector<PoleCondition>& rows);

}  // namespace breather
