#pragma once

#include <map>
#include <set>
#include <string>

#include "breather/rational.hpp"

namespace breather {

// Fully numeric nonlinearity g(u) = u + sum_{m>=2} g_m u^m; g_1 = 1 is implicit.
struct GNumeric {
    std::map<int, Rational> coeffs;  // m >= 2; absent means 0
    std::string name;

    Rational g(int m) const {
        if (m == 1) return Rational(1);
        auto it = coeffs.find(m);
        return it == coeffs.end() ? Rational(0) : it->second;
    }
    int max_m() const { return coeffs.empty() ? 1 : coeffs.rbegin()->first; }
    bool is_odd() const {
        for (const auto& [m, c] : coeffs)
            if (m % 2 == 0 && !c.is_zero()) return false;
        return true;
    }
};

// Nonlinearity with a mix of fixed numeric coefficients and free symbols g_m.
struct GSpec {
    std::map<int, Rational> numeric;  // m >= 2
    std::set<int> symbolic;           // m >= 2, disjoint from numeric
    int max_m = 1;
    std::string name;

    bool is_symbolic(int m) const { return symbolic.count(m) > 0; }
    Rational numeric_g(int m) const {
        if (m == 1) return Rational(1);
        auto it = numeric.find(m);
        return it == numeric.end() ? Rational(0) : it->second;
    }
    bool is_zero_coeff(int m) const {
        return m >= 2 && !is_symbolic(m) && numeric_g(m).is_zero();
    }
    bool is_odd() const {
        for (const auto& [m, c] : numeric)
            if (m % 2 == 0 && !c.is_zero()) return false;
        for (int m : symbolic)
            if (m % 2 == 0) return false;
        return true;
    }
    void validate() const;
};

// Odd nonlinearity for the H^s solver: coefficients g_3, g_5, ...
struct GOdd {
    std::map<int, Rational> coeffs;  // odd m >= 3
    std::string name;

    Rational g(int m) const {
        auto it = coeffs.find(m);
        return it == coeffs.end() ? Rational(0) : it->second;
    }
    int max_m() const { return coeffs.empty() ? 1 : coeffs.rbegin()->first; }
};

// Presets: sine g_{2m+1} = (-1)^m/(2m+1)!; sinh 1/(2m+1)!;
// phi4 g2 = 3/2, g3 = 1/2; linear has no coefficients.
GNumeric preset_sine(int max_m);
GNumeric preset_sinh(int max_m);
GNumeric preset_phi4();
GNumeric preset_linear();
GNumeric preset_by_name(const std::string& name, int max_m);

GSpec to_gspec(const GNumeric& g, int max_m);
GOdd to_godd(const GNumeric& g);  // throws when g is not odd

// alpha * g(u/alpha): coefficient m scales by alpha^(1-m).
GNumeric rescaled(const GNumeric& g, const Rational& alpha);

}  // namespace breather
