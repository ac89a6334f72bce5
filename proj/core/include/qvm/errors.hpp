// Copyright (c) 2026, the qvm project developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace qvm {

/// Base class for all qvm runtime failures.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A point came closer to a vortex (or two wave components came closer)
/// than the configured minimum separation.
struct SingularityError : Error {
    using Error::Error;
};

/// All vortex positions coincide with the encoding reference point c0.
struct DegenerateEncodingError : Error {
    using Error::Error;
};

/// |sum of conjugate amplitudes| fell below the denominator guard in c(t).
struct DenominatorError : Error {
    using Error::Error;
};

/// Integrated wave-state norm drifted away from 1 beyond tolerance.
struct NormDriftError : Error {
    using Error::Error;
};

/// A random-sampling request rounded down to zero frames.
struct EmptySampleError : Error {
    using Error::Error;
};

/// Training set smaller than the N_p^2 identifiability bound.
struct InsufficientDataError : Error {
    using Error::Error;
};

/// Optimizer ran out of iterations before reaching tolerance.
struct NonConvergenceError : Error {
    using Error::Error;
};

/// Qubit or matrix index out of range.
struct IndexError : Error {
    using Error::Error;
};

/// A dense gate matrix failed the unitarity check.
struct NonUnitaryError : Error {
    using Error::Error;
};

/// A temporal block's raw weight deviated from 1/N_t.
struct BlockWeightError : Error {
    using Error::Error;
};

/// Operand dimensions do not match.
struct DimensionError : Error {
    using Error::Error;
};

/// Top two eigenvalues too close for a well-defined dominant eigenvector.
struct DegenerateSpectrumError : Error {
    using Error::Error;
};

/// Post-selection hit a branch of (near) zero probability.
struct ZeroProbabilityError : Error {
    using Error::Error;
};

/// Twirling requested on a circuit without any CZ gate.
struct NoTwirlableGateError : Error {
    using Error::Error;
};

/// Malformed configuration or input file.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace qvm
