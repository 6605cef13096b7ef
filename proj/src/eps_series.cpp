#include "breather/eps_series.hpp"

#include <algorithm>
#include <sstream>

#include "breather/detail/partitions.hpp"
#include "breather/errors.hpp"

namespace breather {

Rational lambda_of(const GNumeric& g) {
    const Rational g2 = g.g(2), g3 = g.g(3);
    const Rational lambda = Rational(5, 6) * g2 * g2 - Rational(3, 4) * g3;
    if (!(lambda > Rational(0)))
        throw LambdaNotPositive("lambda = (5/6) g2^2 - (3/4) g3 = " + lambda.str() +
                                " is not positive; no decaying eps-series exists");
    return lambda;
}

SigmaPoly::SigmaPoly(SechPoly free) {
    if (!free.is_zero()) t_.emplace(std::vector<int>{}, std::move(free));
}

SigmaPoly SigmaPoly::sigma(int k) {
    SigmaPoly p;
    p.t_.emplace(std::vector<int>{k}, SechPoly(1));
    return p;
}

bool SigmaPoly::sigma_free() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty());
}

SechPoly SigmaPoly::free_part() const {
    auto it = t_.find({});
    return it == t_.end() ? SechPoly() : it->second;
}

SechPoly SigmaPoly::linear_part(int k) const {
    auto it = t_.find(std::vector<int>{k});
    return it == t_.end() ? SechPoly() : it->second;
}

bool SigmaPoly::depends_on(int k) const {
    for (const auto& [key, c] : t_)
        if (std::find(key.begin(), key.end(), k) != key.end()) return true;
    return false;
}

std::vector<int> SigmaPoly::sigma_indices() const {
    std::vector<int> out;
    for (const auto& [key, c] : t_)
        for (int k : key)
            if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
    std::sort(out.begin(), out.end());
    return out;
}

SigmaPoly& SigmaPoly::operator+=(const SigmaPoly& o) {
    for (const auto& [key, c] : o.t_) {
        auto [it, inserted] = t_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    return *this;
}

SigmaPoly operator-(const SigmaPoly& a) {
    SigmaPoly r;
    for (const auto& [key, c] : a.t_) r.t_.emplace(key, -c);
    return r;
}

SigmaPoly operator*(const SigmaPoly& a, const SigmaPoly& b) {
    SigmaPoly r;
    for (const auto& [ka, ca] : a.t_) {
        for (const auto& [kb, cb] : b.t_) {
            std::vector<int> key = ka;
            key.insert(key.end(), kb.begin(), kb.end());
            std::sort(key.begin(), key.end());
            if (key.size() > 2)
                throw InternalError("sigma-degree above 2 in series assembly");
            const SechPoly prod = ca * cb;
            if (prod.is_zero()) continue;
            auto [it, inserted] = r.t_.try_emplace(std::move(key), prod);
            if (!inserted) {
                it->second += prod;
                if (it->second.is_zero()) r.t_.erase(it);
            }
        }
    }
    return r;
}

SigmaPoly SigmaPoly::scaled(const Rational& c) const {
    SigmaPoly r;
    if (c.is_zero()) return r;
    for (const auto& [key, v] : t_) r.t_.emplace(key, v.scaled(c));
    return r;
}

SigmaPoly SigmaPoly::substituted(int k, const SechPoly& value) const {
    SigmaPoly r;
    for (const auto& [key, c] : t_) {
        SechPoly coeff = c;
        std::vector<int> rest;
        for (int idx : key) {
            if (idx == k)
                coeff = coeff * value;
            else
                rest.push_back(idx);
        }
        if (coeff.is_zero()) continue;
        SigmaPoly term;
        term.t_.emplace(std::move(rest), std::move(coeff));
        r += term;
    }
    return r;
}

std::string SigmaPoly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : t_) {
        if (!first) os << " + ";
        first = false;
        if (key.empty()) {
            os << c.str();
            continue;
        }
        const bool unit = (c == SechPoly(1));
        if (!unit) os << "(" << c.str() << ")*";
        bool inner_first = true;
        for (int k : key) {
            if (!inner_first) os << "*";
            inner_first = false;
            os << "sigma_" << k;
        }
    }
    return os.str();
}

const EpsCoefficient& EpsSeries::at(int k) const {
    if (k < 1 || k > max_order()) throw Error("eps order out of range");
    return orders[static_cast<size_t>(k - 1)];
}

EpsCoefficient& EpsSeries::at(int k) {
    if (k < 1 || k > max_order()) throw Error("eps order out of range");
    return orders[static_cast<size_t>(k - 1)];
}

SechPoly EpsSeries::a(int k, int q) const {
    const SigmaPoly c = at(k).harmonics.coeff(q);
    if (!c.sigma_free())
        throw Error("a(" + std::to_string(k) + "," + std::to_string(q) +
                    ") still depends on a pending sigma");
    return c.free_part();
}

std::vector<int> EpsSeries::pending_orders() const {
    std::vector<int> out;
    for (const auto& o : orders)
        if (o.pending_sigma) out.push_back(o.k);
    return out;
}

namespace {

using detail::Partition;
using detail::composition_count;
using detail::partitions_of;

using HPoly = HarmonicPoly<SigmaPoly>;

// - sum_{m'} g_{m'} * (products of total order m); the nonlinear part of the
// right-hand side of the order-m equation.
HPoly assemble_products(const EpsSeries& s, const GNumeric& g, int m) {
    const auto parts = partitions_of(m);
    auto term = [&](std::size_t i) -> HPoly {
        const Partition& p = parts[i];
        const Rational gm = g.g(p.count);
        if (gm.is_zero()) return {};
        HPoly prod;
        bool started = false;
        for (const auto& [part, mult] : p.parts) {
            const HPoly& v = s.at(part).harmonics;
            if (v.is_zero()) return {};
            const HPoly powed = harmonic_pow(v, mult);
            prod = started ? cos_mul(prod, powed) : powed;
            started = true;
        }
        return prod.scaled(SigmaPoly(-gm * composition_count(p)));
    };
    const auto slots = par::map_indexed<HPoly>(parts.size(), term);
    HPoly rhs;
    for (const auto& t : slots) rhs += t;
    return rhs;
}

void check_resolved(const EpsSeries& s, int k) {
    const EpsCoefficient& v = s.at(k);
    for (const auto& [q, c] : v.harmonics.coeffs()) {
        if (!c.sigma_free())
            throw InternalError("order " + std::to_string(k) + " not sigma-free after resolution");
        const SechPoly a = c.free_part();
        if ((k + q) % 2 == 1)
            throw InternalError("a_kq nonzero for odd k+q at k=" + std::to_string(k) +
                                " q=" + std::to_string(q));
        if (!a.powers_have_parity(k % 2))
            throw InternalError("S-power parity violation at k=" + std::to_string(k));
        if (!a.divisible_by_s())
            throw InternalError("a_kq not divisible by S at k=" + std::to_string(k));
        if (a.degree() > k)
            throw InternalError("deg a_kq exceeds k at k=" + std::to_string(k));
        if (q > k) throw InternalError("harmonic above order at k=" + std::to_string(k));
    }
}

// One induction step: computes v_m from orders < m, resolving sigma_{m-2}.
void append_order(EpsSeries& s, const GNumeric& g, int m) {
    HPoly rhs = assemble_products(s, g, m);

    if (m >= 3) {
        // Delta v_{m-2} = v_xx - q^2 v per harmonic; the pending cos(tau) slot
        // contributes the (sigma'' - sigma) backbone of L, handled analytically
        // in the secular condition below.
        const EpsCoefficient& vm2 = s.at(m - 2);
        for (const auto& [q, c] : vm2.harmonics.coeffs()) {
            if (q == 1 && vm2.pending_sigma) {
                if (!(c == SigmaPoly::sigma(m - 2)))
                    throw InternalError("pending slot of order " + std::to_string(m - 2) +
                                        " is not the bare sigma symbol");
                continue;
            }
            if (!c.sigma_free())
                throw InternalError("Delta hit a sigma-carrying coefficient at order " +
                                    std::to_string(m - 2));
            const SechPoly f = c.free_part();
            SechPoly d = sech_dxx(f, s.lambda);
            d -= f.scaled(Rational(static_cast<long>(q) * q));
            rhs.add(q, SigmaPoly(d));
        }
    }

    // Secular condition on the cos(tau) coefficient.
    const SigmaPoly r1 = rhs.coeff(1);
    if (m == 2) {
        if (!r1.is_zero()) throw InternalError("unexpected cos(tau) term at order 2");
    } else if (m == 3) {
        if (!r1.sigma_free() || !r1.free_part().is_zero())
            throw InternalError(
                "cos(tau) coefficient at order 3 does not vanish (S''-S+lambda S^3 != 0?)");
    } else {
        for (int idx : r1.sigma_indices())
            if (idx != m - 2)
                throw InternalError("foreign sigma_" + std::to_string(idx) +
                                    " in the secular condition at order " + std::to_string(m));
        const SechPoly lin = r1.linear_part(m - 2);
        const SechPoly expected = SechPoly::monomial(2, Rational(3) * s.lambda);
        if (!(lin == expected))
            throw InternalError("secular operator is not L: sigma coefficient " + lin.str() +
                                " instead of 3*lambda*S^2 at order " + std::to_string(m));
        const SechPoly minus_r = -r1.free_part();
        SechPoly sigma_val;
        try {
            sigma_val = invert_L(minus_r, s.lambda);
        } catch (const NotInRangeForm& e) {
            throw InternalError("secular right-hand side not of range form at order " +
                                std::to_string(m) + ": " + e.what());
        }

        // Substitute sigma_{m-2} everywhere it is still symbolic.
        EpsCoefficient& vm2 = s.at(m - 2);
        HPoly subst;
        for (const auto& [q, c] : vm2.harmonics.coeffs()) subst.add(q, c.substituted(m - 2, sigma_val));
        vm2.harmonics = subst;
        vm2.pending_sigma = false;
        EpsCoefficient& vm1 = s.at(m - 1);
        HPoly subst1;
        for (const auto& [q, c] : vm1.harmonics.coeffs()) subst1.add(q, c.substituted(m - 2, sigma_val));
        vm1.harmonics = subst1;
        HPoly subst_rhs;
        for (const auto& [q, c] : rhs.coeffs()) subst_rhs.add(q, c.substituted(m - 2, sigma_val));
        rhs = subst_rhs;
        if (!rhs.coeff(1).is_zero())
            throw InternalError("secular condition did not clear cos(tau) at order " +
                                std::to_string(m));
        check_resolved(s, m - 2);
    }

    // v_m: divide the q != 1 harmonics by (1 - q^2); cos(tau) slot becomes sigma_m.
    EpsCoefficient vm;
    vm.k = m;
    vm.pending_sigma = true;
    for (const auto& [q, c] : rhs.coeffs()) {
        if (q == 1) continue;
        if ((q + m) % 2 == 1)
            throw InternalError("harmonic parity violation assembling order " + std::to_string(m));
        if (q > m) throw InternalError("harmonic above order assembling " + std::to_string(m));
        vm.harmonics.set(q, c / (1 - q * q));
    }
    vm.harmonics.set(1, SigmaPoly::sigma(m));
    s.orders.push_back(std::move(vm));
}

}  // namespace

EpsSeries eps_init(const GNumeric& g, int sign) {
    if (sign != 1 && sign != -1) throw Error("sign must be +1 or -1");
    EpsSeries s;
    s.lambda = lambda_of(g);
    s.sign = sign;
    EpsCoefficient v1;
    v1.k = 1;
    v1.pending_sigma = false;
    v1.harmonics.set(1, SigmaPoly(SechPoly::monomial(1, Rational(sign))));
    s.orders.push_back(std::move(v1));
    append_order(s, g, 2);
    append_order(s, g, 3);
    return s;
}

EpsSeries eps_extend(EpsSeries series, const GNumeric& g) {
    if (series.max_order() < 3) throw Error("eps_extend requires a series initialized to order 3");
    if (!(series.lambda == lambda_of(g)))
        throw Error("series lambda does not match the supplied g");
    append_order(series, g, series.max_order() + 1);
    return series;
}

EpsSeries eps_series_to_order(const GNumeric& g, int sign, int order) {
    if (order < 1) throw Error("order must be >= 1");
    EpsSeries s = eps_init(g, sign);
    while (s.max_order() < std::max(order, 3)) s = eps_extend(std::move(s), g);
    return s;
}

HarmonicPoly<SigmaPoly> eps_residual_order(const EpsSeries& s, const GNumeric& g, int j) {
    if (j < 1 || j > s.max_order()) throw Error("residual order out of range");
    HPoly defect;
    // (v_j)_tt + v_j contributes (1 - q^2) per harmonic; the q = 1 slot drops.
    for (const auto& [q, c] : s.at(j).harmonics.coeffs())
        defect.add(q, c.scaled(Rational(1 - static_cast<long>(q) * q)));
    if (j >= 3) {
        const EpsCoefficient& v = s.at(j - 2);
        if (v.pending_sigma)
            throw Error("residual at order " + std::to_string(j) + " needs sigma_" +
                        std::to_string(j - 2) + " resolved (extend two orders further)");
        for (const auto& [q, c] : v.harmonics.coeffs()) {
            if (!c.sigma_free()) throw InternalError("unresolved coefficient under Delta");
            const SechPoly f = c.free_part();
            SechPoly d = sech_dxx(f, s.lambda);
            d -= f.scaled(Rational(static_cast<long>(q) * q));
            defect.add(q, -SigmaPoly(d));
        }
    }
    defect += assemble_products(s, g, j).scaled(SigmaPoly(Rational(-1)));
    return defect;
}

std::string eps_dump(const EpsSeries& s) {
    std::ostringstream os;
    os << "eps-series lambda=" << s.lambda.str() << " sign=" << (s.sign > 0 ? "+1" : "-1")
       << " orders=" << s.max_order() << "\n";
    for (const auto& o : s.orders) {
        if (o.harmonics.is_zero()) {
            os << "v[" << o.k << "] = 0\n";
            continue;
        }
        for (const auto& [q, c] : o.harmonics.coeffs()) {
            os << "v[" << o.k << "] q=" << q << ": " << c.str();
            if (q == 1 && o.pending_sigma) os << " [pending]";
            os << "\n";
        }
    }
    return os.str();
}

}  // namespace breather
