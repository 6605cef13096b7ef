#pragma once

#include <map>
#include <string>
#include <vector>

#include "breather/g_function.hpp"
#include "breather/harmonic_poly.hpp"
#include "breather/parallel.hpp"
#include "breather/sech_poly.hpp"

namespace breather {

// lambda := (5/6) g2^2 - (3/4) g3; throws LambdaNotPositive when not positive.
Rational lambda_of(const GNumeric& g);

// Polynomial in the not-yet-determined secular amplitudes sigma_k, with
// S-polynomial coefficients. Keys are sorted multisets of sigma indices; the
// empty key holds the sigma-free part. The recursion never needs degree > 2
// (a sigma_2^2 term appears exactly once, assembling order 4).
class SigmaPoly {
public:
    SigmaPoly() = default;
    SigmaPoly(SechPoly free);
    SigmaPoly(const Rational& c) : SigmaPoly(SechPoly(c)) {}
    SigmaPoly(int c) : SigmaPoly(SechPoly(c)) {}
    static SigmaPoly sigma(int k);

    bool is_zero() const { return t_.empty(); }
    bool sigma_free() const;
    SechPoly free_part() const;
    SechPoly linear_part(int k) const;
    bool depends_on(int k) const;
    std::vector<int> sigma_indices() const;

    SigmaPoly& operator+=(const SigmaPoly& o);
    friend SigmaPoly operator+(SigmaPoly a, const SigmaPoly& b) { a += b; return a; }
    friend SigmaPoly operator-(const SigmaPoly& a);
    friend SigmaPoly operator*(const SigmaPoly& a, const SigmaPoly& b);
    SigmaPoly scaled(const Rational& c) const;
    friend SigmaPoly operator*(const SigmaPoly& a, const Rational& c) { return a.scaled(c); }
    friend SigmaPoly operator/(const SigmaPoly& a, int d) { return a.scaled(Rational(1, d)); }

    SigmaPoly substituted(int k, const SechPoly& value) const;

    friend bool operator==(const SigmaPoly& a, const SigmaPoly& b) { return a.t_ == b.t_; }

    std::string str() const;

private:
    std::map<std::vector<int>, SechPoly> t_;
};

// v_k = sum_q a_kq cos(q tau). While pending, the cos(tau) slot is the bare
// symbol sigma_k; the most recent order also carries sigma_{k-1}-linear parts.
struct EpsCoefficient {
    int k = 0;
    HarmonicPoly<SigmaPoly> harmonics;
    bool pending_sigma = false;
};

struct EpsSeries {
    Rational lambda;
    int sign = +1;
    std::vector<EpsCoefficient> orders;  // orders[i] is v_{i+1}

    int max_order() const { return static_cast<int>(orders.size()); }
    const EpsCoefficient& at(int k) const;
    EpsCoefficient& at(int k);
    // Resolved coefficient a_kq as a plain S-polynomial; throws while a
    // pending sigma still enters it.
    SechPoly a(int k, int q) const;
    std::vector<int> pending_orders() const;
};

// Orders 1..3 with sigma_2, sigma_3 pending (the closed forms of the first
// three coefficients fall out of the generic step).
EpsSeries eps_init(const GNumeric& g, int sign);

// Appends order m = max+1 (requires max >= 3): assembles the right-hand side
// over all products of total order m, resolves sigma_{m-2} from the secular
// condition, and divides the q != 1 harmonics by (1 - q^2).
EpsSeries eps_extend(EpsSeries series, const GNumeric& g);

EpsSeries eps_series_to_order(const GNumeric& g, int sign, int order);

// Coefficient of eps^j after substituting the partial sum into
// v_tt + v - eps^2 (v_tt + v_xx) + sum_m g_m v^m; vanishes identically for
// every constructed order (pending sigmas enter linearly and cancel).
HarmonicPoly<SigmaPoly> eps_residual_order(const EpsSeries& s, const GNumeric& g, int j);

std::string eps_dump(const EpsSeries& s);

}  // namespace breather
