#ifndef DJCM_ERRORS_HPP
#define DJCM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace djcm {

/// Malformed arguments: bad quantum numbers, dimension mismatches, broken
/// preconditions. Distinct from legal zeros returned by selection rules.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The Fock truncation cannot represent the requested state to the required
/// accuracy (coherent-state norm deficit above threshold).
class CutoffTooSmall : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The frequency table is not commensurate, so no finite common period of
/// all sin(chi t) and sin(lambda t) zeros exists.
class NoFinitePeriod : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A density-matrix invariant (trace, Hermiticity, positivity) was violated
/// mid-trajectory. Carries the time of the first violation.
class IntegrationDiverged : public std::runtime_error {
public:
    IntegrationDiverged(const std::string& what, double t)
        : std::runtime_error(what), t_fail(t) {}
    double t_fail;
};

} // namespace djcm

#endif
