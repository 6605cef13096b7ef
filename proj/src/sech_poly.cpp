#include "breather/sech_poly.hpp"

#include <sstream>

#include "breather/errors.hpp"

namespace breather {

SechPoly SechPoly::monomial(int p, const Rational& c) {
    SechPoly r;
    r.add(p, c);
    return r;
}

Rational SechPoly::coeff(int p) const {
    auto it = c_.find(p);
    return it == c_.end() ? Rational(0) : it->second;
}

void SechPoly::add(int p, const Rational& c) {
    if (p < 0) throw InternalError("negative S power");
    if (c.is_zero()) return;
    auto [it, inserted] = c_.try_emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) c_.erase(it);
    }
}

SechPoly& SechPoly::operator+=(const SechPoly& o) {
    for (const auto& [p, c] : o.c_) add(p, c);
    return *this;
}

SechPoly& SechPoly::operator-=(const SechPoly& o) {
    for (const auto& [p, c] : o.c_) add(p, -c);
    return *this;
}

SechPoly operator*(const SechPoly& a, const SechPoly& b) {
    SechPoly r;
    for (const auto& [pa, ca] : a.c_)
        for (const auto& [pb, cb] : b.c_) r.add(pa + pb, ca * cb);
    return r;
}

SechPoly operator-(const SechPoly& a) {
    SechPoly r;
    for (const auto& [p, c] : a.c_) r.c_.emplace(p, -c);
    return r;
}

SechPoly SechPoly::scaled(const Rational& c) const {
    SechPoly r;
    if (c.is_zero()) return r;
    for (const auto& [p, v] : c_) r.c_.emplace(p, v * c);
    return r;
}

bool SechPoly::powers_have_parity(int parity) const {
    for (const auto& [p, c] : c_)
        if (p % 2 != parity % 2) return false;
    return true;
}

bool SechPoly::is_range_form() const {
    for (const auto& [p, c] : c_)
        if (p < 3 || p % 2 == 0) return false;
    return true;
}

std::string SechPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : c_) {
        const Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (p == 0) {
            os << a.str();
        } else {
            if (!(a == Rational(1))) os << a.str() << "*";
            os << (p == 1 ? "S" : "S^" + std::to_string(p));
        }
    }
    return os.str();
}

SechPoly sech_dxx(const SechPoly& f, const Rational& lambda) {
    SechPoly r;
    for (const auto& [p, c] : f.coeffs()) {
        r.add(p, c * Rational(static_cast<long>(p) * p));
        r.add(p + 2, -c * lambda * Rational(static_cast<long>(p) * (p + 1), 2));
    }
    return r;
}

SechPoly apply_L(const SechPoly& f, const Rational& lambda) {
    SechPoly r;
    for (const auto& [p, c] : f.coeffs()) {
        r.add(p, c * Rational(static_cast<long>(p) * p - 1));
        r.add(p + 2, c * lambda * (Rational(3) - Rational(static_cast<long>(p) * (p + 1), 2)));
    }
    return r;
}

SechPoly invert_L(const SechPoly& rhs, const Rational& lambda) {
    if (rhs.is_zero()) return SechPoly();
    if (!rhs.is_range_form())
        throw NotInRangeForm("invert_L right-hand side is not of the form S^3 P(S^2): " + rhs.str());
    if (lambda.is_zero() || lambda.sign() < 0) throw Error("invert_L requires lambda > 0");
    const int top = rhs.degree();
    SechPoly sigma;
    // Match coefficients of S^p downward; sigma has degree top - 2 and odd powers only.
    for (int p = top; p >= 3; p -= 2) {
        // rhs_p = sigma_p (p^2 - 1) + sigma_{p-2} (3 - (p-2)(p-1)/2) lambda
        const Rational want = rhs.coeff(p) - sigma.coeff(p) * Rational(static_cast<long>(p) * p - 1);
        const Rational factor =
            (Rational(3) - Rational(static_cast<long>(p - 2) * (p - 1), 2)) * lambda;
        if (factor.is_zero()) throw InternalError("invert_L hit a vanishing pivot");
        sigma.add(p - 2, want / factor);
    }
    if (!(apply_L(sigma, lambda) == rhs))
        throw InternalError("invert_L verification failed");
    return sigma;
}

}  // namespace breather
