#include "breather/exp_series.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "breather/detail/partitions.hpp"
#include "breather/errors.hpp"
#include "breather/parallel.hpp"

namespace breather {

namespace {

using detail::Partition;
using detail::composition_count;
using detail::partitions_of;

using HPoly = HarmonicPoly<FactoredRational>;

bool is_perfect_square(const mpz_class& z) {
    return sgn(z) >= 0 && mpz_perfect_square_p(z.get_mpz_t()) != 0;
}

std::string sqrt_str(const Rational& m) {
    // String for sqrt(p/q) of a positive rational, collapsing perfect squares.
    const mpz_class p = m.numerator(), q = m.denominator();
    if (is_perfect_square(p) && is_perfect_square(q)) {
        mpz_class sp, sq;
        mpz_sqrt(sp.get_mpz_t(), p.get_mpz_t());
        mpz_sqrt(sq.get_mpz_t(), q.get_mpz_t());
        mpq_class r(sp, sq);
        r.canonicalize();
        return Rational(r).str();
    }
    return "sqrt(" + m.str() + ")";
}

}  // namespace

std::string eps_label_of(const Rational& w0) {
    if (w0.is_zero()) return "0";
    if (w0.sign() > 0) return sqrt_str(w0);
    const Rational m = -w0;
    if (m == Rational(1)) return "i";
    const std::string s = sqrt_str(m);
    if (m.numerator() == 1) {
        // 1/sqrt(q) forms print as i/...
        const std::string inv = sqrt_str(Rational(1) / m);
        return "i/" + inv;
    }
    return "i*" + s;
}

const ExpCoefficient& ExpSeries::at(int l) const {
    if (l < 1 || l > max_l()) throw Error("exp order out of range");
    return coeffs[static_cast<size_t>(l - 1)];
}

Rational ExpSeries::value_at(int l, int q, const Rational& eps) const {
    const FactoredRational c = at(l).harmonics.coeff(q);
    std::map<int, Rational> bindings = g.numeric;
    Rational v = eval_w(c, eps * eps, bindings);
    if (norm == ExpNormalization::eps) v *= eps.pow(l);
    return v;
}

ExpSeries expand_exp(const GSpec& g, int L, ExpNormalization norm, const Rational& u1_amplitude,
                     bool override_caps) {
    g.validate();
    if (L < 1) throw Error("expand_exp requires L >= 1");
    if (!override_caps && !g.symbolic.empty()) {
        if (g.symbolic.size() > 3)
            throw Error("symbolic runs cap at 3 parameters (pass --force to override)");
        if (L > 9) throw Error("symbolic runs cap at l <= 9 (pass --force to override)");
    }
    ExpSeries s;
    s.g = g;
    s.norm = norm;
    s.u1_amplitude = u1_amplitude;

    ExpCoefficient u1;
    u1.l = 1;
    u1.harmonics.set(1, FactoredRational(u1_amplitude));
    s.coeffs.push_back(std::move(u1));

    for (int l = 2; l <= L; ++l) {
        const auto parts = partitions_of(l);
        auto term = [&](std::size_t i) -> HPoly {
            const Partition& p = parts[i];
            const int m = p.count;
            if (m > g.max_m) return {};
            const bool symbolic = g.is_symbolic(m);
            if (!symbolic && g.numeric_g(m).is_zero() && m != 1) return {};
            HPoly prod;
            bool started = false;
            for (const auto& [part, mult] : p.parts) {
                const HPoly& u = s.at(part).harmonics;
                if (u.is_zero()) return {};
                const HPoly powed = harmonic_pow(u, mult);
                prod = started ? cos_mul(prod, powed) : powed;
                started = true;
            }
            const Rational count = composition_count(p);
            if (symbolic) {
                const ParamPoly gm = ParamPoly::g(m).scaled(-count);
                HPoly out;
                for (const auto& [q, c] : prod.coeffs()) out.add(q, c.times_poly(gm));
                return out;
            }
            return prod.scaled(FactoredRational(-count * g.numeric_g(m)));
        };
        const auto slots = par::map_indexed<HPoly>(parts.size(), term);
        HPoly rhs;
        for (const auto& t : slots) rhs += t;

        ExpCoefficient ul;
        ul.l = l;
        for (const auto& [q, c] : rhs.coeffs()) {
            if (q > l || (q + l) % 2 != 0)
                throw InternalError("harmonic outside the Theorem 2 index set at l=" +
                                    std::to_string(l) + " q=" + std::to_string(q));
            ul.harmonics.set(q, rf_cancel(c.divided_by_h(l, q)));
        }
        s.coeffs.push_back(std::move(ul));
    }
    return s;
}

std::vector<PoleCandidate> pole_candidates(int L) {
    std::map<Rational, std::vector<std::pair<int, int>>> by_root;
    for (int l = 2; l <= L; ++l) {
        for (int q = l % 2; q < l; q += 2) {
            if (q == 1) continue;
            by_root[h_root(l, q)].push_back({l, q});
        }
    }
    std::vector<PoleCandidate> out;
    for (const auto& [w0, prov] : by_root) {
        PoleCandidate c;
        c.w0 = w0;
        c.eps_label = eps_label_of(w0);
        c.provenance = prov;
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<PoleCondition> residue_conditions(const ExpSeries& s, int l, int q,
                                              const Rational& w0) {
    const FactoredRational c = s.at(l).harmonics.coeff(q);
    const LaurentLead lead = laurent_lead(c, w0);
    if (lead.order <= 0) return {};
    PoleCondition pc;
    pc.l = l;
    pc.q = q;
    pc.w0 = w0;
    pc.eps_label = eps_label_of(w0);
    pc.order = lead.order;
    pc.condition = lead.lead;
    return {pc};
}

std::vector<PoleCondition> conditions_report(const ExpSeries& s, const Rational& bound) {
    std::vector<PoleCondition> rows;
    for (int l = 2; l <= s.max_l(); ++l) {
        for (const auto& [q, c] : s.at(l).harmonics.coeffs()) {
            std::set<Rational> roots;
            for (const auto& [key, mult] : c.factors()) roots.insert(h_root(key.first, key.second));
            for (const Rational& w0 : roots) {
                if (bound.sign() >= 0 && w0.abs() > bound) continue;
                auto found = residue_conditions(s, l, q, w0);
                rows.insert(rows.end(), found.begin(), found.end());
            }
        }
    }
    std::sort(rows.begin(), rows.end(), [](const PoleCondition& a, const PoleCondition& b) {
        if (a.l != b.l) return a.l < b.l;
        if (a.q != b.q) return a.q < b.q;
        return a.w0 < b.w0;
    });
    return rows;
}

namespace {

Rational solve_linear_condition(const ParamPoly& cond, int m) {
    Rational c0(0), c1(0);
    for (const auto& [mono, coeff] : cond.terms()) {
        if (mono.is_one()) {
            c0 = coeff;
        } else if (mono == Monomial::var(m)) {
            c1 = coeff;
        } else {
            throw InternalError("forced-coefficient condition is not linear in g" +
                                std::to_string(m) + ": " + cond.str());
        }
    }
    if (c1.is_zero())
        throw InternalError("forced-coefficient condition does not involve g" + std::to_string(m));
    return -c0 / c1;
}

}  // namespace

std::map<int, Rational> forced_coefficients(const Rational& g3, int L) {
    std::map<int, Rational> out;
    if (L >= 3) out[3] = g3;
    for (int l = 2; l <= L; ++l) {
        if (l == 3) continue;
        GSpec g;
        g.max_m = l;
        g.symbolic = {l};
        for (const auto& [m, c] : out)
            if (m < l && !c.is_zero()) g.numeric[m] = c;
        const ExpSeries s = expand_exp(g, l, ExpNormalization::unit, Rational(1), true);
        const int q = (l % 2 == 0) ? 0 : 3;
        const Rational w0 = h_root(l, q);
        const auto conds = residue_conditions(s, l, q, w0);
        if (conds.empty())
            throw InternalError("expected a residue condition fixing g" + std::to_string(l));
        out[l] = solve_linear_condition(conds.front().condition, l);
    }

    // Closed form: even coefficients vanish, g_{2m+1} = sgn(g3)^m (6|g3|)^m / (2m+1)!.
    const Rational alpha2 = Rational(6) * g3.abs();
    for (const auto& [m, c] : out) {
        Rational expect(0);
        if (m % 2 == 1) {
            const int k = (m - 1) / 2;
            expect = alpha2.pow(k) / factorial(m);
            if (g3.sign() < 0 && k % 2 == 1) expect = -expect;
        }
        if (!(c == expect))
            throw InternalError("greedy cancellation disagrees with the closed form at m=" +
                                std::to_string(m) + ": got " + c.str() + ", expected " +
                                expect.str());
    }

    // The forced sequence must leave no pole of modulus <= 1/2 anywhere.
    GSpec check;
    check.max_m = L;
    for (const auto& [m, c] : out)
        if (!c.is_zero()) check.numeric[m] = c;
    const ExpSeries s = expand_exp(check, L, ExpNormalization::unit, Rational(1), true);
    const ExceptionalReport rep = exceptional_check(s, Rational(1, 2));
    if (!rep.clean)
        throw InternalError("forced coefficients left a surviving pole of modulus <= 1/2");
    return out;
}

ExceptionalReport exceptional_check(const ExpSeries& s, const Rational& bound) {
    if (!s.g.symbolic.empty()) throw Error("exceptional_check requires a fully numeric g");
    ExceptionalReport rep;
    rep.bound = bound;
    bool net_ok = true;
    for (int l = 2; l <= s.max_l(); ++l) {
        for (const auto& [q, c] : s.at(l).harmonics.coeffs()) {
            std::set<Rational> roots;
            for (const auto& [key, mult] : c.factors()) roots.insert(h_root(key.first, key.second));
            for (const Rational& w0 : roots) {
                if (w0.abs() > bound) continue;
                const LaurentLead lead = laurent_lead(c, w0);
                if (lead.order <= 0) continue;
                rep.poles.push_back({l, q, w0, lead.order});
            }
            if (c.w_power() > 0) {
                DegenerateWPole d;
                d.l = l;
                d.q = q;
                d.w_pow = c.w_power();
                d.net_eps_power = l - 2 * c.w_power();
                if (d.net_eps_power < 0) net_ok = false;
                rep.degenerate.push_back(d);
            }
        }
    }
    rep.clean = rep.poles.empty() && net_ok;
    return rep;
}

HarmonicPoly<FactoredRational> exp_residual_order(const ExpSeries& s, int l) {
    if (l < 1 || l > s.max_l()) throw Error("residual order out of range");
    HPoly defect;
    // M_l on cos(q tau) multiplies by h(l,q).
    for (const auto& [q, c] : s.at(l).harmonics.coeffs())
        defect.add(q, c.times_poly(h_factor(l, q)));
    if (l >= 2) {
        const auto parts = partitions_of(l);
        for (const Partition& p : parts) {
            const int m = p.count;
            if (m > s.g.max_m) continue;
            const bool symbolic = s.g.is_symbolic(m);
            if (!symbolic && s.g.numeric_g(m).is_zero()) continue;
            HPoly prod;
            bool started = false;
            for (const auto& [part, mult] : p.parts) {
                const HPoly powed = harmonic_pow(s.at(part).harmonics, mult);
                prod = started ? cos_mul(prod, powed) : powed;
                started = true;
            }
            const Rational count = composition_count(p);
            if (symbolic) {
                const ParamPoly gm = ParamPoly::g(m).scaled(count);
                for (const auto& [q, c] : prod.coeffs()) defect.add(q, c.times_poly(gm));
            } else {
                defect += prod.scaled(FactoredRational(count * s.g.numeric_g(m)));
            }
        }
    }
    return defect;
}

std::string exp_dump(const ExpSeries& s) {
    std::ostringstream os;
    os << "exp-series L=" << s.max_l()
       << " normalization=" << (s.norm == ExpNormalization::unit ? "unit" : "eps")
       << " u1=" << s.u1_amplitude.str() << "\n";
    for (const auto& u : s.coeffs) {
        const std::string pre =
            s.norm == ExpNormalization::eps ? "eps^" + std::to_string(u.l) + " * " : "";
        if (u.harmonics.is_zero()) {
            os << "u[" << u.l << "] = 0\n";
            continue;
        }
        for (const auto& [q, c] : u.harmonics.coeffs())
            os << "u[" << u.l << "] q=" << q << ": " << pre << c.str() << "\n";
    }
    return os.str();
}

std::string conditions_dump(const std::vector<PoleCondition>& rows) {
    std::ostringstream os;
    for (const auto& r : rows) {
        os << "l=" << r.l << " q=" << r.q << " w0=" << r.w0.str() << " eps=" << r.eps_label
           << " order=" << r.order << " condition: " << r.condition.str() << " = 0\n";
    }
    return os.str();
}

}  // namespace breather
