#pragma once

#include <map>
#include <string>
#include <utility>

#include "breather/param_poly.hpp"

namespace breather {

// The divisor h(l,q) = (1 - q^2) - (l^2 - q^2) w as a polynomial in w.
// Identically zero only for l = q = 1.
ParamPoly h_factor(int l, int q);

// Unique root of h(l,q) in w, defined for l != q: (1 - q^2) / (l^2 - q^2).
Rational h_root(int l, int q);

// Rational function of w with g-symbolic numerator and a factored denominator
// content * w^k * prod h(l,q); rational content lives in the numerator.
// Factor keys keep pole provenance: (l,q) with q != 1, l != q. Divisions by
// h(l,1) = -(l^2-1) w land in the w power; h(q,q) is a nonzero constant.
class FactoredRational {
public:
    using FactorKey = std::pair<int, int>;

    FactoredRational() = default;
    FactoredRational(ParamPoly num) : num_(std::move(num)) {}
    FactoredRational(const Rational& c) : num_(c) {}
    FactoredRational(int c) : num_(Rational(c)) {}

    bool is_zero() const { return num_.is_zero(); }
    const ParamPoly& numerator() const { return num_; }
    int w_power() const { return w_pow_; }
    const std::map<FactorKey, int>& factors() const { return factors_; }
    bool denominator_trivial() const { return w_pow_ == 0 && factors_.empty(); }
    ParamPoly denominator_expanded() const;

    FactoredRational& operator+=(const FactoredRational& o);
    FactoredRational& operator-=(const FactoredRational& o);
    friend FactoredRational operator+(FactoredRational a, const FactoredRational& b) { a += b; return a; }
    friend FactoredRational operator-(FactoredRational a, const FactoredRational& b) { a -= b; return a; }
    friend FactoredRational operator*(const FactoredRational& a, const FactoredRational& b);
    friend FactoredRational operator-(const FactoredRational& a);
    FactoredRational scaled(const Rational& c) const;
    FactoredRational times_poly(const ParamPoly& p) const;
    friend FactoredRational operator/(const FactoredRational& a, int d) { return a.scaled(Rational(1, d)); }

    // Divides the value by h(l,q); requires (l,q) != (1,1).
    FactoredRational divided_by_h(int l, int q) const;

    // Equality of values by cross-multiplication.
    friend bool operator==(const FactoredRational& a, const FactoredRational& b);

    std::string str() const;

private:
    ParamPoly num_;
    int w_pow_ = 0;
    std::map<FactorKey, int> factors_;

    friend FactoredRational rf_cancel(FactoredRational x);
};

// Cancels every denominator factor (and w power) dividing the numerator;
// value preserving and idempotent.
FactoredRational rf_cancel(FactoredRational x);

// Laurent data of a canceled x at w = w0: order (pole multiplicity minus the
// numerator's vanishing order, g-coefficients treated exactly) and the leading
// coefficient as a primitive integer polynomial in the g symbols.
struct LaurentLead {
    int order = 0;
    ParamPoly lead;
};
LaurentLead laurent_lead(const FactoredRational& x, const Rational& w0);

// Exact evaluation at w = w0 under the given g bindings; substitutes, re-cancels,
// then evaluates. Throws PoleAtEvaluationPoint naming the vanishing factor.
Rational eval_w(const FactoredRational& x, const Rational& w0,
                const std::map<int, Rational>& g_bindings);

}  // namespace breather
