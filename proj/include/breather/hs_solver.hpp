#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "breather/g_function.hpp"
#include "breather/parallel.hpp"

namespace breather {

// |u|_s^2 = sum_j |u_j|^2 (1+j^2)^s for coefficients of cos((j0 + i*jstep) tau).
double sobolev_norm(std::span<const double> c, double s, int j0 = 0, int jstep = 1);

// Truncated odd-harmonic pair (u, v); index i holds the coefficient of cos((2i+1) tau).
struct StateVector {
    double eps = 0.0;
    double s = 2.0;
    int J = 9;  // odd truncation limit
    std::vector<double> u, v;

    static StateVector zero(double eps, double s, int J);
    int modes() const { return (J + 1) / 2; }
    double u_at(int j) const { return u[static_cast<size_t>((j - 1) / 2)]; }
    double v_at(int j) const { return v[static_cast<size_t>((j - 1) / 2)]; }
    void set_u(int j, double val) { u[static_cast<size_t>((j - 1) / 2)] = val; }
    void set_v(int j, double val) { v[static_cast<size_t>((j - 1) / 2)] = val; }
};

double x_norm(const StateVector& U);

struct Decomposition {
    double a = 0.0;  // U_- = [a, -a] cos(tau)
    double b = 0.0;  // U_+ = [b,  b] cos(tau)
    std::vector<std::array<double, 2>> blocks;  // [u_j, v_j] for j = 3, 5, ...
};
Decomposition decompose(const StateVector& U);
StateVector recompose(const Decomposition& d, double eps, double s, int J);

// omega_j = sqrt((1-eps^2) j^2 - 1); throws SpectralGapViolated when j >= 3
// and the radicand is not positive.
double omega_j(int j, double eps);
// min over odd 3 <= j <= J of omega_j^2 / (1+j^2).
double spectral_kappa(double eps, int J);

double propagate_minus(double amp, double xi);
double propagate_plus(double amp, double xi);
std::array<double, 2> propagate_block(const std::array<double, 2>& uv, int j, double xi,
                                      double eps);

// F(U) = [0; g3 u^3 + g5 eps^2 u^5 + ...], odd harmonics, truncated above J.
StateVector nonlinearity(const StateVector& U, const GOdd& g);

struct SolverConfig {
    double eps = 0.3;
    double s = 2.0;
    double beta = 0.5;
    double a = 0.05;
    int J = 9;
    double Xi = 12.0;
    int N = 1200;
    int max_iter = 200;
    double tol = 1e-10;
    void validate() const;
};

struct Trajectory {
    double Xi = 0.0;
    int N = 0;
    double beta = 0.0;
    std::vector<StateVector> states;  // N+1 states on the uniform grid

    double dxi() const { return Xi / N; }
    double xi(int k) const { return dxi() * k; }
    static Trajectory zero(const SolverConfig& cfg);
};

double y_norm(const Trajectory& T);
double y_distance(const Trajectory& A, const Trajectory& B);

// One application of the integral operator M: analytic per-block propagation,
// composite trapezoid on the grid, closed-form tail under F ~ F(Xi) e^{-3 beta (s-Xi)}.
Trajectory apply_M(const Trajectory& T, double a, const GOdd& g, const SolverConfig& cfg,
                   par::Exec exec = par::default_exec());

struct SolveDiagnostics {
    int iterations = 0;
    double a_used = 0.0;
    bool converged = false;
    std::vector<double> distances;          // per-iteration Y-distance
    std::vector<double> contraction_ratios;
    int amplitude_halvings = 0;
    double leading_decay_slope = 0.0;       // fit of log a-mode over [2, Xi-2]
    double xnorm_decay_slope = 0.0;
};
struct SolveResult {
    Trajectory trajectory;
    SolveDiagnostics diagnostics;
};

// Picard iteration U <- M(U) from zero; halves the seed amplitude on
// NoContraction down to 1e-6 before giving up.
SolveResult solve_fixed_point(const GOdd& g, SolverConfig cfg,
                              par::Exec exec = par::default_exec());

// Max over interior grid points of || (U_{k+1}-U_{k-1})/(2 dxi) - A U_k - F(U_k) ||_X.
double residual(const Trajectory& T, const GOdd& g, par::Exec exec = par::default_exec());

// Least-squares slope of log |(u1 - v1)/2| against xi on [xi_lo, xi_hi].
double leading_mode_slope(const Trajectory& T, double xi_lo, double xi_hi);
double xnorm_slope(const Trajectory& T, double xi_lo, double xi_hi);

struct TranslationReport {
    double lambda = 0.0;
    double distance = 0.0;  // sup over the window of ||U1(.+lambda) - U2||_X
    double a_first = 0.0;
    double a_second = 0.0;
};
// Solves with a and with a * e^{-lambda}, then compares the shifted
// trajectories on [xi_lo, xi_hi] (clipped to the overlap).
TranslationReport translation_experiment(const GOdd& g, const SolverConfig& cfg, double lambda,
                                         double xi_lo, double xi_hi,
                                         par::Exec exec = par::default_exec());

struct ProductCheckReport {
    double s = 0.0;
    int trials = 0;
    double bound = 0.0;      // 2^{s+1} sqrt(1 + 2 zeta(2s))
    double max_ratio = 0.0;  // observed |uv|_s / (|u|_s |v|_s)
    bool ok = false;
};
// Random trigonometric polynomials, harmonics <= 64, coefficients uniform in [-1,1].
ProductCheckReport product_constant_check(double s, int trials, unsigned long seed = 20097,
                                          par::Exec exec = par::default_exec());

// eps = sqrt(1 - (2 pi / T)^2); throws NoBreatherRegime for T <= 2 pi.
double eps_of_period(double T);

}  // namespace breather
