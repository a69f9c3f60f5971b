#pragma once

#include <stdexcept>
#include <string>

namespace bruns {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Career figures are inconsistent with the per-ball model (e.g. r/avg > 1).
class InvalidStats : public Error {
public:
    using Error::Error;
};

/// Variance came out negative beyond the cancellation guard.
class NumericalInstability : public Error {
public:
    using Error::Error;
};

/// A (wickets, balls) pair that is not a legal terminal innings state.
class InvalidState : public Error {
public:
    using Error::Error;
};

/// Reward-to-risk ratio requested for a zero-variance innings distribution.
class DegenerateRisk : public Error {
public:
    using Error::Error;
};

/// Player file has content but no recognizable header row.
class MissingHeader : public Error {
public:
    using Error::Error;
};

/// Player file is empty.
class EmptyFile : public Error {
public:
    using Error::Error;
};

} // namespace bruns
