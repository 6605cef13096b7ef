#pragma once

#include <map>
#include <string>

#include "breather/rational.hpp"

namespace breather {

// Polynomial sum_p c_p S^p in the soliton profile S(xi) = sqrt(2/lambda)/cosh(xi).
class SechPoly {
public:
    SechPoly() = default;
    SechPoly(const Rational& c) { add(0, c); }
    SechPoly(int c) : SechPoly(Rational(c)) {}
    static SechPoly monomial(int p, const Rational& c);
    static SechPoly s(int p = 1) { return monomial(p, Rational(1)); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }
    int lowest_power() const { return c_.empty() ? -1 : c_.begin()->first; }
    Rational coeff(int p) const;
    const std::map<int, Rational>& coeffs() const { return c_; }

    void add(int p, const Rational& c);

    SechPoly& operator+=(const SechPoly& o);
    SechPoly& operator-=(const SechPoly& o);
    friend SechPoly operator+(SechPoly a, const SechPoly& b) { a += b; return a; }
    friend SechPoly operator-(SechPoly a, const SechPoly& b) { a -= b; return a; }
    friend SechPoly operator*(const SechPoly& a, const SechPoly& b);
    friend SechPoly operator-(const SechPoly& a);
    SechPoly scaled(const Rational& c) const;
    friend SechPoly operator*(const SechPoly& a, const Rational& c) { return a.scaled(c); }
    friend SechPoly operator/(const SechPoly& a, int d) { return a.scaled(Rational(1, d)); }

    friend bool operator==(const SechPoly& a, const SechPoly& b) { return a.c_ == b.c_; }

    // All stored powers have this parity (vacuously true when zero).
    bool powers_have_parity(int parity) const;
    bool divisible_by_s() const { return c_.empty() || c_.begin()->first >= 1; }
    // Range form of the secular right-hand side: S^3 P(S^2), odd powers >= 3 only.
    bool is_range_form() const;

    std::string str() const;

private:
    std::map<int, Rational> c_;
};

// d^2/dxi^2 on S-polynomials: S^p -> p^2 S^p - p(p+1)(lambda/2) S^(p+2).
SechPoly sech_dxx(const SechPoly& p, const Rational& lambda);

// L = d^2/dxi^2 - 1 + 3 lambda S^2: S^p -> (p^2-1) S^p + (3 - p(p+1)/2) lambda S^(p+2).
SechPoly apply_L(const SechPoly& p, const Rational& lambda);

// Unique even decaying solution of L sigma = rhs for rhs = S^3 P(S^2);
// back-substitution from the highest power down, sigma = S Q(S^2).
SechPoly invert_L(const SechPoly& rhs, const Rational& lambda);

}  // namespace breather
