#include "breather/majorant.hpp"

#include <cmath>
#include <sstream>

#include "breather/errors.hpp"
#include "breather/exp_series.hpp"

namespace breather {

ShgCoefficient shg_b(int l, int s) {
    if (s > l || s < 0 || l < 0) throw Error("shg_b requires 0 <= s <= l");
    ShgCoefficient b;
    b.l = l;
    b.s = s;
    for (int j = s; j <= l; ++j) {
        const Rational c = Rational(8) * binomial(2 * j + 1, j - s);
        b.r_powers[2 * j + 1] = c;
    }
    return b;
}

Rational shg_abar(int l, int s, const Rational& eps) {
    if (!(eps > Rational(0)) || !(eps < Rational(1)))
        throw Error("shg_abar requires 0 < eps < 1");
    const ShgCoefficient b = shg_b(l, s);
    const Rational one_minus = Rational(1) - eps * eps;
    Rational acc(0);
    // r^{2j+1} (sqrt(1-eps^2)/8)^{2l+1} = eps^{2j+1} (1-eps^2)^{l-j} / 8^{2l+1}.
    for (const auto& [power, c] : b.r_powers) {
        const int j = (power - 1) / 2;
        acc += c * eps.pow(power) * one_minus.pow(l - j);
    }
    return acc / Rational(8).pow(2 * l + 1);
}

DominationReport dominate(const GSpec& g, const Rational& eps, int L, par::Exec exec) {
    if (!g.symbolic.empty()) throw Error("dominate requires a fully numeric g");
    if (!g.is_odd()) throw Error("dominate requires an odd g");
    if (!(eps > Rational(0)) || !(eps < Rational(1))) throw Error("dominate requires 0 < eps < 1");
    for (const auto& [m, c] : g.numeric) {
        if (c.abs() > Rational(1) / factorial(m))
            throw Error("dominate requires |g_m| <= 1/m! (rescale with alpha first); violated at m=" +
                        std::to_string(m));
    }

    const ExpSeries series = expand_exp(g, 2 * L + 1, ExpNormalization::eps);

    std::vector<std::pair<int, int>> cells;
    for (int l = 0; l <= L; ++l)
        for (int s = 0; s <= l; ++s) cells.push_back({l, s});

    auto entry = [&](std::size_t i) -> DominationEntry {
        const auto [l, s] = cells[i];
        DominationEntry e;
        e.l = l;
        e.s = s;
        e.a_abs = series.value_at(2 * l + 1, 2 * s + 1, eps).abs();
        e.abar = shg_abar(l, s, eps);
        return e;
    };
    DominationReport rep;
    rep.eps = eps;
    rep.L = L;
    rep.entries = par::map_indexed<DominationEntry>(cells.size(), entry, exec);
    rep.all_dominated = true;
    for (const auto& e : rep.entries)
        if (e.a_abs > e.abar) rep.all_dominated = false;
    return rep;
}

double convergence_xi_min(double eps) {
    if (!(eps > 0.0) || !(eps < 1.0)) throw Error("convergence_xi_min requires 0 < eps < 1");
    const double root = std::sqrt(1.0 - eps * eps);
    const double a = std::log(root / 8.0);
    const double r = eps / root;
    return a + std::asinh(r);
}

HGapResult h_gap_check(int L, const Rational& eps) {
    if (eps.sign() < 0 || !(eps < Rational(1))) throw Error("h_gap_check requires 0 <= eps < 1");
    HGapResult res;
    res.degenerate = eps.is_zero();
    const Rational w = eps * eps;
    bool first = true;
    for (int l = 1; l <= L; ++l) {
        for (int s = 0; s <= l; ++s) {
            const long lo = 2L * l + 1, qo = 2L * s + 1;
            const Rational h = Rational(1 - qo * qo) - w * Rational(lo * lo - qo * qo);
            if (first || h > res.max_h) res.max_h = h;
            first = false;
        }
    }
    res.ok = !first && res.max_h <= Rational(-8) * w;
    return res;
}

std::string domination_dump(const DominationReport& r) {
    std::ostringstream os;
    os << "domination eps=" << r.eps.str() << " L=" << r.L
       << " verdict=" << (r.all_dominated ? "dominated" : "NOT-dominated") << "\n";
    os << "l s |a_ls| abar_ls ratio\n";
    for (const auto& e : r.entries) {
        os << e.l << " " << e.s << " " << e.a_abs.str() << " " << e.abar.str() << " ";
        if (e.abar.is_zero())
            os << (e.a_abs.is_zero() ? "0/0" : "inf");
        else
            os << (e.a_abs / e.abar).str();
        os << "\n";
    }
    return os.str();
}

}  // namespace breather
