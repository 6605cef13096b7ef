#pragma once

#include <stdexcept>
#include <string>

namespace breather {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Theorem 1 hypothesis lambda = (5/6) g2^2 - (3/4) g3 is not positive.
struct LambdaNotPositive : Error {
    using Error::Error;
};

// Right-hand side handed to the Schroedinger inverse is not of the form S^3 P(S^2).
struct NotInRangeForm : Error {
    using Error::Error;
};

// Exact evaluation hit a vanishing denominator factor h(l,q) (or a w power at w=0).
struct PoleAtEvaluationPoint : Error {
    int l = 0;
    int q = 0;
    PoleAtEvaluationPoint(int l_, int q_, const std::string& what) : Error(what), l(l_), q(q_) {}
};

// omega_j^2 = (1-eps^2) j^2 - 1 failed to be positive for some stored harmonic.
struct SpectralGapViolated : Error {
    using Error::Error;
};

// Fixed-point iteration stopped contracting (seed amplitude too large).
struct NoContraction : Error {
    using Error::Error;
};

// The improper-integral tail estimate beyond Xi exceeds the requested tolerance.
struct DomainTooShort : Error {
    using Error::Error;
};

// Period T <= 2*pi admits no breather parameterization.
struct NoBreatherRegime : Error {
    using Error::Error;
};

// Violation of an induction invariant the construction guarantees; indicates a bug.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace breather
