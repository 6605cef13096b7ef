#include "breather/g_function.hpp"

#include "breather/errors.hpp"

namespace breather {

void GSpec::validate() const {
    for (int m : symbolic) {
        if (m < 2) throw Error("symbolic coefficient index must be >= 2");
        if (numeric.count(m)) throw Error("g" + std::to_string(m) + " is both numeric and symbolic");
        if (m > max_m) throw Error("symbolic g" + std::to_string(m) + " beyond max_m");
    }
    for (const auto& [m, c] : numeric)
        if (m < 2) throw Error("numeric coefficient index must be >= 2");
}

GNumeric preset_sine(int max_m) {
    GNumeric g;
    g.name = "sine";
    for (int m = 3; m <= max_m; m += 2) {
        const int k = (m - 1) / 2;
        Rational c = Rational(1) / factorial(m);
        if (k % 2 == 1) c = -c;
        g.coeffs[m] = c;
    }
    return g;
}

GNumeric preset_sinh(int max_m) {
    GNumeric g;
    g.name = "sinh";
    for (int m = 3; m <= max_m; m += 2) g.coeffs[m] = Rational(1) / factorial(m);
    return g;
}

GNumeric preset_phi4() {
    GNumeric g;
    g.name = "phi4";
    g.coeffs[2] = Rational(3, 2);
    g.coeffs[3] = Rational(1, 2);
    return g;
}

GNumeric preset_linear() {
    GNumeric g;
    g.name = "linear";
    return g;
}

GNumeric preset_by_name(const std::string& name, int max_m) {
    if (name == "sine") return preset_sine(max_m);
    if (name == "sinh") return preset_sinh(max_m);
    if (name == "phi4") return preset_phi4();
    if (name == "linear") return preset_linear();
    throw Error("unknown preset '" + name + "' (sine, sinh, phi4, linear, custom)");
}

GSpec to_gspec(const GNumeric& g, int max_m) {
    GSpec s;
    s.name = g.name;
    s.max_m = max_m;
    for (const auto& [m, c] : g.coeffs)
        if (m <= max_m && !c.is_zero()) s.numeric[m] = c;
    return s;
}

GOdd to_godd(const GNumeric& g) {
    if (!g.is_odd()) throw Error("preset '" + g.name + "' is not odd");
    GOdd o;
    o.name = g.name;
    for (const auto& [m, c] : g.coeffs)
        if (!c.is_zero()) o.coeffs[m] = c;
    return o;
}

GNumeric rescaled(const GNumeric& g, const Rational& alpha) {
    if (alpha.is_zero()) throw Error("rescaling with alpha = 0");
    GNumeric r;
    r.name = g.name;
    for (const auto& [m, c] : g.coeffs) {
        const Rational v = c * alpha.pow(1 - m);
        if (!v.is_zero()) r.coeffs[m] = v;
    }
    return r;
}

}  // namespace breather
