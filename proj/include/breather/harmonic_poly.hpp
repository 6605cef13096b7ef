#pragma once

#include <map>
#include <sstream>
#include <string>

#include "breather/errors.hpp"

namespace breather {

template <class C>
bool coeff_is_zero(const C& c) {
    return c.is_zero();
}
inline bool coeff_is_zero(double c) {
    return c == 0.0;
}

// Finite cosine series sum_q c_q cos(q tau), q >= 0, no zero coefficients stored.
template <class C>
class HarmonicPoly {
public:
    HarmonicPoly() = default;

    static HarmonicPoly harmonic(int q, C c) {
        HarmonicPoly p;
        p.add(q, std::move(c));
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int max_harmonic() const { return c_.empty() ? -1 : c_.rbegin()->first; }

    C coeff(int q) const {
        auto it = c_.find(q);
        return it == c_.end() ? C{} : it->second;
    }
    bool has(int q) const { return c_.find(q) != c_.end(); }

    void add(int q, const C& c) {
        if (q < 0) throw InternalError("negative harmonic index");
        if (coeff_is_zero(c)) return;
        auto [it, inserted] = c_.try_emplace(q, c);
        if (!inserted) {
            it->second = it->second + c;
            if (coeff_is_zero(it->second)) c_.erase(it);
        }
    }
    void set(int q, const C& c) {
        c_.erase(q);
        add(q, c);
    }

    HarmonicPoly& operator+=(const HarmonicPoly& o) {
        for (const auto& [q, c] : o.c_) add(q, c);
        return *this;
    }
    friend HarmonicPoly operator+(HarmonicPoly a, const HarmonicPoly& b) { a += b; return a; }

    template <class S>
    HarmonicPoly scaled(const S& s) const {
        HarmonicPoly r;
        for (const auto& [q, c] : c_) r.add(q, c * s);
        return r;
    }

    const std::map<int, C>& coeffs() const { return c_; }

    friend bool operator==(const HarmonicPoly& a, const HarmonicPoly& b) { return a.c_ == b.c_; }

private:
    std::map<int, C> c_;
};

// Product in the cosine basis: cos a * cos b = (cos(a+b) + cos(a-b)) / 2.
template <class C>
HarmonicPoly<C> cos_mul(const HarmonicPoly<C>& a, const HarmonicPoly<C>& b) {
    HarmonicPoly<C> r;
    for (const auto& [qa, ca] : a.coeffs()) {
        for (const auto& [qb, cb] : b.coeffs()) {
            const C half = (ca * cb) / 2;
            r.add(qa + qb, half);
            r.add(qa >= qb ? qa - qb : qb - qa, half);
        }
    }
    return r;
}

template <class C>
HarmonicPoly<C> harmonic_pow(const HarmonicPoly<C>& a, int m) {
    if (m < 1) throw Error("harmonic_pow requires exponent >= 1");
    HarmonicPoly<C> r = a;
    for (int i = 1; i < m; ++i) r = cos_mul(r, a);
    return r;
}

// True when only harmonics of the given parity (q mod 2) appear.
template <class C>
bool harmonics_have_parity(const HarmonicPoly<C>& a, int parity) {
    for (const auto& [q, c] : a.coeffs())
        if (q % 2 != parity % 2) return false;
    return true;
}

template <class C>
std::string harmonic_str(const HarmonicPoly<C>& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [q, c] : a.coeffs()) {
        if (!first) os << "  +  ";
        first = false;
        os << "(" << c.str() << ")";
        if (q == 1)
            os << "*cos(t)";
        else if (q > 1)
            os << "*cos(" << q << "t)";
    }
    return os.str();
}

}  // namespace breather
