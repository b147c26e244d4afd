#pragma once

#include <stdexcept>
#include <string>

namespace rivw {

// Error taxonomy. Each class maps to a distinct process exit code in the CLI
// (see tools/); library code throws, the CLI translates.

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct format_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct pipeline_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct insufficient_instruments_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct degenerate_instruments_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Quadrature ran out of subdivisions; carries the best error estimate seen.
struct convergence_error : std::runtime_error {
    convergence_error(const std::string& msg, double estimate, double error_estimate)
        : std::runtime_error(msg), estimate(estimate), error_estimate(error_estimate) {}
    double estimate;
    double error_estimate;
};

}  // namespace rivw
