#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "breather/rational.hpp"

namespace breather {

// Variable ids used throughout the symbolic kernel: 0 is w = eps^2, m >= 2 is g_m.
constexpr int kVarW = 0;

// Power product over {w} u {g_2, g_3, ...}; factors sorted by variable id, exponents > 0.
class Monomial {
public:
    Monomial() = default;
    static Monomial var(int id, unsigned exp = 1);

    bool is_one() const { return f_.empty(); }
    unsigned grade() const;
    unsigned exponent(int id) const;
    Monomial times(const Monomial& o) const;
    // Removes exp powers of id; requires exponent(id) >= exp.
    Monomial without(int id, unsigned exp) const;

    const std::vector<std::pair<int, unsigned>>& factors() const { return f_; }

    // Graded order, ties broken lexicographically (w before g_2 before g_3, ...).
    // Returns true when a precedes b, i.e. a is the "larger" monomial.
    static bool precedes(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.f_ == b.f_; }

private:
    std::vector<std::pair<int, unsigned>> f_;
};

struct MonomialFirst {
    bool operator()(const Monomial& a, const Monomial& b) const { return Monomial::precedes(a, b); }
};

// Sparse polynomial in w and the symbolic g_m, exact rational coefficients,
// terms kept in the canonical (graded-lex, leading first) order.
class ParamPoly {
public:
    using TermMap = std::map<Monomial, Rational, MonomialFirst>;

    ParamPoly() = default;
    ParamPoly(const Rational& c) { add_term(Monomial(), c); }
    ParamPoly(int c) : ParamPoly(Rational(c)) {}
    static ParamPoly variable(int id, unsigned exp = 1);
    static ParamPoly w(unsigned exp = 1) { return variable(kVarW, exp); }
    static ParamPoly g(int m) { return variable(m); }

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // requires is_constant()
    const TermMap& terms() const { return t_; }
    unsigned degree_w() const;
    unsigned total_degree() const;
    unsigned degree_in(int id) const;
    bool depends_on(int id) const { return degree_in(id) > 0; }

    void add_term(const Monomial& m, const Rational& c);

    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { a += b; return a; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { a -= b; return a; }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
    friend ParamPoly operator-(const ParamPoly& a);
    ParamPoly& operator*=(const ParamPoly& o) { *this = *this * o; return *this; }
    ParamPoly scaled(const Rational& c) const;
    ParamPoly pow(unsigned e) const;

    friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.t_ == b.t_; }

    // Coefficients as a dense vector in w: result[d] is a g-only polynomial.
    std::vector<ParamPoly> w_coefficients() const;
    static ParamPoly from_w_coefficients(const std::vector<ParamPoly>& c);

    // Substitute w := w0, leaving the g symbols free.
    ParamPoly eval_w(const Rational& w0) const;
    // Substitute g bindings (g_m -> value); unbound symbols throw.
    Rational eval(const Rational& w0, const std::map<int, Rational>& g_bindings) const;
    // Substitute the g bindings only, leaving w free; unbound symbols stay symbolic.
    ParamPoly bind_g(const std::map<int, Rational>& g_bindings) const;

    bool divisible_by_w() const;
    ParamPoly divided_by_w() const;
    // Exact division by (w - w0); empty when the remainder is nonzero.
    std::optional<ParamPoly> divided_by_w_minus(const Rational& w0) const;
    // Exact division by c0 + c1*w; empty when not divisible.
    std::optional<ParamPoly> divided_by_w_linear(const Rational& c0, const Rational& c1) const;
    // Multiplicity of the root w0, treating g-coefficient polynomials exactly.
    unsigned vanishing_order_at(const Rational& w0) const;

    // gcd of numerators over lcm of denominators; zero polynomial has content 0.
    Rational content() const;
    // Integer coefficients, gcd 1, leading (first) coefficient positive.
    ParamPoly primitive_normalized() const;
    Rational leading_coefficient() const;

    std::string str() const;

private:
    TermMap t_;
};

std::ostream& operator<<(std::ostream& os, const ParamPoly& p);

std::string monomial_str(const Monomial& m);

}  // namespace breather
