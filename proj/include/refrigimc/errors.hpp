/* Error types shared across the toolkit.
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <stdexcept>
#include <string>

namespace refrigimc {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Steady-state evaluation hit a denominator too small to trust.
class IllConditionedGain : public Error {
public:
    explicit IllConditionedGain(const std::string& msg) : Error(msg) {}
};

/// A transformation produced a zero (or unusable) denominator.
class DegenerateDenominator : public Error {
public:
    explicit DegenerateDenominator(const std::string& msg) : Error(msg) {}
};

/// Gain matrix determinant is below the invertibility threshold.
class SingularGainMatrix : public Error {
public:
    explicit SingularGainMatrix(const std::string& msg) : Error(msg) {}
};

/// Both candidate pairings are equidistant from a relative gain of 1.
class AmbiguousPairing : public Error {
public:
    explicit AmbiguousPairing(const std::string& msg) : Error(msg) {}
};

/// Step-response data has not settled enough to fit.
class NotSettled : public Error {
public:
    explicit NotSettled(const std::string& msg) : Error(msg) {}
};

/// Step-response data is below the noise floor.
class DegenerateFit : public Error {
public:
    explicit DegenerateFit(const std::string& msg) : Error(msg) {}
};

/// Plant has a zero (or pole) outside the open left half-plane.
class NonMinimumPhase : public Error {
public:
    explicit NonMinimumPhase(const std::string& msg) : Error(msg) {}
};

/// Requested controller would not be a proper rational function.
class ImproperResult : public Error {
public:
    explicit ImproperResult(const std::string& msg) : Error(msg) {}
};

/// Plant steady-state gain is zero; tuning rules are undefined.
class ZeroGainPlant : public Error {
public:
    explicit ZeroGainPlant(const std::string& msg) : Error(msg) {}
};

/// Requested integration window lies outside the signal span.
class WindowOutOfRange : public Error {
public:
    explicit WindowOutOfRange(const std::string& msg) : Error(msg) {}
};

/// A baseline index needed as a ratio denominator is zero.
class ZeroBaselineIndex : public Error {
public:
    explicit ZeroBaselineIndex(const std::string& msg) : Error(msg) {}
};

/// Every grid point of a sweep diverged.
class AllUnstable : public Error {
public:
    explicit AllUnstable(const std::string& msg) : Error(msg) {}
};

/// Configuration or input file problem; message names the offender.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

}  // namespace refrigimc
