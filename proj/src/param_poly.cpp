#include "breather/param_poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace breather {

Monomial Monomial::var(int id, unsigned exp) {
    Monomial m;
    if (exp > 0) m.f_.push_back({id, exp});
    return m;
}

unsigned Monomial::grade() const {
    unsigned g = 0;
    for (const auto& [id, e] : f_) g += e;
    return g;
}

unsigned Monomial::exponent(int id) const {
    for (const auto& [v, e] : f_)
        if (v == id) return e;
    return 0;
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial r;
    auto a = f_.begin();
    auto b = o.f_.begin();
    while (a != f_.end() || b != o.f_.end()) {
        if (b == o.f_.end() || (a != f_.end() && a->first < b->first)) {
            r.f_.push_back(*a++);
        } else if (a == f_.end() || b->first < a->first) {
            r.f_.push_back(*b++);
        } else {
            r.f_.push_back({a->first, a->second + b->second});
            ++a;
            ++b;
        }
    }
    return r;
}

Monomial Monomial::without(int id, unsigned exp) const {
    Monomial r;
    for (const auto& [v, e] : f_) {
        if (v != id) {
            r.f_.push_back({v, e});
        } else {
            if (e < exp) throw InternalError("monomial division underflow");
            if (e > exp) r.f_.push_back({v, e - exp});
        }
    }
    return r;
}

bool Monomial::precedes(const Monomial& a, const Monomial& b) {
    const unsigned ga = a.grade(), gb = b.grade();
    if (ga != gb) return ga > gb;
    auto i = a.f_.begin();
    auto j = b.f_.begin();
    while (i != a.f_.end() && j != b.f_.end()) {
        if (i->first != j->first) return i->first < j->first;  // the other misses this var
        if (i->second != j->second) return i->second > j->second;
        ++i;
        ++j;
    }
    return i != a.f_.end();
}

ParamPoly ParamPoly::variable(int id, unsigned exp) {
    ParamPoly p;
    p.add_term(Monomial::var(id, exp), Rational(1));
    return p;
}

bool ParamPoly::is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one());
}

Rational ParamPoly::constant_value() const {
    if (t_.empty()) return Rational(0);
    if (!is_constant()) throw InternalError("constant_value on non-constant polynomial");
    return t_.begin()->second;
}

unsigned ParamPoly::degree_w() const {
    return degree_in(kVarW);
}

unsigned ParamPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : t_) d = std::max(d, m.grade());
    return d;
}

unsigned ParamPoly::degree_in(int id) const {
    unsigned d = 0;
    for (const auto& [m, c] : t_) d = std::max(d, m.exponent(id));
    return d;
}

void ParamPoly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly r;
    for (const auto& [ma, ca] : a.t_)
        for (const auto& [mb, cb] : b.t_) r.add_term(ma.times(mb), ca * cb);
    return r;
}

ParamPoly operator-(const ParamPoly& a) {
    ParamPoly r;
    for (const auto& [m, c] : a.t_) r.t_.emplace(m, -c);
    return r;
}

ParamPoly ParamPoly::scaled(const Rational& c) const {
    ParamPoly r;
    if (c.is_zero()) return r;
    for (const auto& [m, v] : t_) r.t_.emplace(m, v * c);
    return r;
}

ParamPoly ParamPoly::pow(unsigned e) const {
    ParamPoly r(Rational(1));
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
}

std::vector<ParamPoly> ParamPoly::w_coefficients() const {
    std::vector<ParamPoly> out(degree_w() + 1);
    for (const auto& [m, c] : t_) {
        const unsigned d = m.exponent(kVarW);
        out[d].add_term(m.without(kVarW, d), c);
    }
    return out;
}

ParamPoly ParamPoly::from_w_coefficients(const std::vector<ParamPoly>& c) {
    ParamPoly r;
    for (unsigned d = 0; d < c.size(); ++d) {
        for (const auto& [m, v] : c[d].terms()) r.add_term(m.times(Monomial::var(kVarW, d)), v);
    }
    return r;
}

ParamPoly ParamPoly::eval_w(const Rational& w0) const {
    ParamPoly r;
    for (const auto& [m, c] : t_) {
        const unsigned d = m.exponent(kVarW);
        r.add_term(m.without(kVarW, d), c * w0.pow(d));
    }
    return r;
}

Rational ParamPoly::eval(const Rational& w0, const std::map<int, Rational>& g_bindings) const {
    Rational acc(0);
    for (const auto& [m, c] : t_) {
        Rational term = c;
        for (const auto& [id, e] : m.factors()) {
            if (id == kVarW) {
                term *= w0.pow(e);
            } else {
                auto it = g_bindings.find(id);
                if (it == g_bindings.end())
                    throw Error("unbound symbol g" + std::to_string(id) + " in evaluation");
                term *= it->second.pow(e);
            }
        }
        acc += term;
    }
    return acc;
}

ParamPoly ParamPoly::bind_g(const std::map<int, Rational>& g_bindings) const {
    ParamPoly r;
    for (const auto& [m, c] : t_) {
        Rational scale = c;
        Monomial rest;
        for (const auto& [id, e] : m.factors()) {
            auto it = id == kVarW ? g_bindings.end() : g_bindings.find(id);
            if (id != kVarW && it != g_bindings.end()) {
                scale *= it->second.pow(e);
            } else {
                rest = rest.times(Monomial::var(id, e));
            }
        }
        r.add_term(rest, scale);
    }
    return r;
}

bool ParamPoly::divisible_by_w() const {
    if (t_.empty()) return true;
    for (const auto& [m, c] : t_)
        if (m.exponent(kVarW) == 0) return false;
    return true;
}

ParamPoly ParamPoly::divided_by_w() const {
    ParamPoly r;
    for (const auto& [m, c] : t_) r.add_term(m.without(kVarW, 1), c);
    return r;
}

std::optional<ParamPoly> ParamPoly::divided_by_w_minus(const Rational& w0) const {
    if (is_zero()) return ParamPoly();
    const auto a = w_coefficients();
    const int deg = static_cast<int>(a.size()) - 1;
    if (deg < 1) return std::nullopt;
    // Synthetic division: quotient b[deg-1..0], remainder a[0] + w0*b[0].
    std::vector<ParamPoly> b(static_cast<size_t>(deg));
    b[deg - 1] = a[deg];
    for (int d = deg - 1; d >= 1; --d) b[d - 1] = a[d] + b[d].scaled(w0);
    ParamPoly rem = a[0] + b[0].scaled(w0);
    if (!rem.is_zero()) return std::nullopt;
    return from_w_coefficients(b);
}

std::optional<ParamPoly> ParamPoly::divided_by_w_linear(const Rational& c0, const Rational& c1) const {
    if (c1.is_zero()) {
        if (c0.is_zero()) throw InternalError("division by the zero linear factor");
        return scaled(Rational(1) / c0);
    }
    auto q = divided_by_w_minus(-c0 / c1);
    if (!q) return std::nullopt;
    return q->scaled(Rational(1) / c1);
}

unsigned ParamPoly::vanishing_order_at(const Rational& w0) const {
    unsigned order = 0;
    ParamPoly cur = *this;
    while (!cur.is_zero()) {
        auto q = cur.divided_by_w_minus(w0);
        if (!q) break;
        cur = *q;
        ++order;
    }
    return order;
}

Rational ParamPoly::content() const {
    mpz_class num_gcd(0), den_lcm(1);
    for (const auto& [m, c] : t_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.numerator().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
    }
    mpq_class q(num_gcd, den_lcm);
    q.canonicalize();
    return Rational(q);
}

ParamPoly ParamPoly::primitive_normalized() const {
    if (is_zero()) return *this;
    Rational c = content();
    if (leading_coefficient().sign() < 0) c = -c;
    return scaled(Rational(1) / c);
}

Rational ParamPoly::leading_coefficient() const {
    if (is_zero()) return Rational(0);
    return t_.begin()->second;
}

std::string monomial_str(const Monomial& m) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [id, e] : m.factors()) {
        if (!first) os << "*";
        first = false;
        if (id == kVarW)
            os << "w";
        else
            os << "g" << id;
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

std::string ParamPoly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : t_) {
        const Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (m.is_one()) {
            os << a.str();
        } else {
            if (!(a == Rational(1))) os << a.str() << "*";
            os << monomial_str(m);
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const ParamPoly& p) {
    return os << p.str();
}

}  // namespace breather
