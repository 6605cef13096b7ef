#include "breather/factored_rational.hpp"

#include <sstream>

#include "breather/errors.hpp"

namespace breather {

ParamPoly h_factor(int l, int q) {
    if (l < 1 || q < 0) throw Error("h_factor requires l >= 1, q >= 0");
    ParamPoly p(Rational(1 - static_cast<long>(q) * q));
    p -= ParamPoly::w().scaled(Rational(static_cast<long>(l) * l - static_cast<long>(q) * q));
    return p;
}

Rational h_root(int l, int q) {
    if (l == q) throw InternalError("h(l,l) is constant and has no root");
    return Rational(1 - static_cast<long>(q) * q, static_cast<long>(l) * l - static_cast<long>(q) * q);
}

ParamPoly FactoredRational::denominator_expanded() const {
    ParamPoly d(Rational(1));
    if (w_pow_ > 0) d = ParamPoly::w(static_cast<unsigned>(w_pow_));
    for (const auto& [key, mult] : factors_) {
        const ParamPoly h = h_factor(key.first, key.second);
        for (int i = 0; i < mult; ++i) d *= h;
    }
    return d;
}

FactoredRational& FactoredRational::operator+=(const FactoredRational& o) {
    // Common denominator: per-key max multiplicity, max w power.
    ParamPoly left = num_;
    ParamPoly right = o.num_;
    const int wp = std::max(w_pow_, o.w_pow_);
    for (int i = w_pow_; i < wp; ++i) left *= ParamPoly::w();
    for (int i = o.w_pow_; i < wp; ++i) right *= ParamPoly::w();
    std::map<FactorKey, int> merged = factors_;
    for (const auto& [key, mult] : o.factors_) {
        auto [it, inserted] = merged.try_emplace(key, mult);
        if (!inserted) it->second = std::max(it->second, mult);
    }
    for (const auto& [key, mult] : merged) {
        const ParamPoly h = h_factor(key.first, key.second);
        auto ia = factors_.find(key);
        auto ib = o.factors_.find(key);
        const int ma = ia == factors_.end() ? 0 : ia->second;
        const int mb = ib == o.factors_.end() ? 0 : ib->second;
        for (int i = ma; i < mult; ++i) left *= h;
        for (int i = mb; i < mult; ++i) right *= h;
    }
    num_ = left + right;
    w_pow_ = wp;
    factors_ = std::move(merged);
    *this = rf_cancel(std::move(*this));
    return *this;
}

FactoredRational& FactoredRational::operator-=(const FactoredRational& o) {
    return *this += -o;
}

FactoredRational operator*(const FactoredRational& a, const FactoredRational& b) {
    FactoredRational r;
    r.num_ = a.num_ * b.num_;
    r.w_pow_ = a.w_pow_ + b.w_pow_;
    r.factors_ = a.factors_;
    for (const auto& [key, mult] : b.factors_) r.factors_[key] += mult;
    return rf_cancel(std::move(r));
}

FactoredRational operator-(const FactoredRational& a) {
    FactoredRational r = a;
    r.num_ = -r.num_;
    return r;
}

FactoredRational FactoredRational::scaled(const Rational& c) const {
    FactoredRational r = *this;
    r.num_ = r.num_.scaled(c);
    if (r.num_.is_zero()) return FactoredRational();
    return r;
}

FactoredRational FactoredRational::times_poly(const ParamPoly& p) const {
    FactoredRational r = *this;
    r.num_ = r.num_ * p;
    return rf_cancel(std::move(r));
}

FactoredRational FactoredRational::divided_by_h(int l, int q) const {
    if (l == 1 && q == 1) throw InternalError("division by the identically zero factor h(1,1)");
    FactoredRational r = *this;
    if (r.is_zero()) return r;
    if (l == q) {
        // h(q,q) = 1 - q^2, a nonzero constant.
        return r.scaled(Rational(1) / Rational(1 - static_cast<long>(q) * q));
    }
    if (q == 1) {
        // h(l,1) = -(l^2 - 1) w.
        r.num_ = r.num_.scaled(Rational(-1, static_cast<long>(l) * l - 1));
        r.w_pow_ += 1;
        return rf_cancel(std::move(r));
    }
    r.factors_[{l, q}] += 1;
    return rf_cancel(std::move(r));
}

FactoredRational rf_cancel(FactoredRational x) {
    if (x.num_.is_zero()) {
        x.w_pow_ = 0;
        x.factors_.clear();
        return x;
    }
    while (x.w_pow_ > 0 && x.num_.divisible_by_w()) {
        x.num_ = x.num_.divided_by_w();
        --x.w_pow_;
    }
    for (auto it = x.factors_.begin(); it != x.factors_.end();) {
        const auto [l, q] = it->first;
        const Rational c0(1 - static_cast<long>(q) * q);
        const Rational c1(-(static_cast<long>(l) * l - static_cast<long>(q) * q));
        while (it->second > 0) {
            auto quo = x.num_.divided_by_w_linear(c0, c1);
            if (!quo) break;
            x.num_ = std::move(*quo);
            --it->second;
        }
        it = it->second == 0 ? x.factors_.erase(it) : std::next(it);
    }
    return x;
}

bool operator==(const FactoredRational& a, const FactoredRational& b) {
    return a.numerator() * b.denominator_expanded() == b.numerator() * a.denominator_expanded();
}

LaurentLead laurent_lead(const FactoredRational& x_in, const Rational& w0) {
    const FactoredRational x = rf_cancel(x_in);
    if (x.is_zero()) return {0, ParamPoly()};

    int pole_mult = (w0.is_zero() ? x.w_power() : 0);
    Rational norm(1);
    if (!w0.is_zero()) norm *= w0.pow(x.w_power());
    for (const auto& [key, mult] : x.factors()) {
        const auto [l, q] = key;
        if (h_root(l, q) == w0) {
            pole_mult += mult;
            // h(l,q) = -(l^2-q^2)(w - w0)
            norm *= Rational(-(static_cast<long>(l) * l - static_cast<long>(q) * q)).pow(mult);
        } else {
            norm *= h_factor(l, q).eval(w0, {}).pow(mult);
        }
    }

    ParamPoly reduced = x.numerator();
    int vanish = 0;
    while (true) {
        auto quo = reduced.divided_by_w_minus(w0);
        if (!quo) break;
        reduced = std::move(*quo);
        ++vanish;
    }

    LaurentLead out;
    out.order = pole_mult - vanish;
    out.lead = reduced.eval_w(w0).scaled(Rational(1) / norm).primitive_normalized();
    return out;
}

Rational eval_w(const FactoredRational& x, const Rational& w0,
                const std::map<int, Rational>& g_bindings) {
    // Substitute first: bindings can create cancellations the symbolic form lacks.
    ParamPoly num = x.numerator().bind_g(g_bindings);
    int w_pow = x.w_power();
    std::map<FactoredRational::FactorKey, int> factors = x.factors();
    while (w_pow > 0 && num.divisible_by_w()) {
        num = num.divided_by_w();
        --w_pow;
    }
    for (auto& [key, mult] : factors) {
        const auto [l, q] = key;
        const Rational c0(1 - static_cast<long>(q) * q);
        const Rational c1(-(static_cast<long>(l) * l - static_cast<long>(q) * q));
        while (mult > 0) {
            auto quo = num.divided_by_w_linear(c0, c1);
            if (!quo) break;
            num = std::move(*quo);
            --mult;
        }
    }

    Rational den(1);
    if (w_pow > 0) {
        if (w0.is_zero())
            throw PoleAtEvaluationPoint(0, 1, "evaluation at w=0 with a residual w^" +
                                                  std::to_string(w_pow) + " denominator");
        den *= w0.pow(w_pow);
    }
    for (const auto& [key, mult] : factors) {
        if (mult == 0) continue;
        const auto [l, q] = key;
        const Rational hv = h_factor(l, q).eval(w0, {});
        if (hv.is_zero())
            throw PoleAtEvaluationPoint(l, q, "evaluation hits the pole of h(" + std::to_string(l) +
                                                  "," + std::to_string(q) + ") at w=" + w0.str());
        den *= hv.pow(mult);
    }
    return num.eval(w0, g_bindings) / den;
}

std::string FactoredRational::str() const {
    if (denominator_trivial()) return num_.str();
    std::ostringstream os;
    os << "(" << num_.str() << ") / (";
    bool first = true;
    if (w_pow_ > 0) {
        os << (w_pow_ == 1 ? "w" : "w^" + std::to_string(w_pow_));
        first = false;
    }
    for (const auto& [key, mult] : factors_) {
        if (!first) os << " * ";
        first = false;
        os << "h(" << key.first << "," << key.second << ")";
        if (mult > 1) os << "^" << mult;
    }
    os << ")";
    return os.str();
}

}  // namespace breather
