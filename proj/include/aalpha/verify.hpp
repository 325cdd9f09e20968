#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aalpha/report.hpp"

namespace aalpha {

struct VerifyOptions {
    long trials = 200;
    std::uint64_t seed = 1;
};

inline const std::vector<std::string>& verifySuiteNames() {
    static const std::vector<std::string> names = {"lemmas", "closed-forms", "perron",
                                                   "quotient", "shifts"};
    return names;
}

// Deterministic given the options. Unknown names throw InvalidInputError;
// "all" runs every suite in order.
CheckReport runVerifySuite(const std::string& name, const VerifyOptions& opts);

// Randomized edge-shift growth trials, exposed separately so callers can pick
// their own trial counts. Each valid trial asserts a strict spectral-radius
// increase of more than 1e-9.
CheckReport runSingleShiftTrials(long trials, std::uint64_t seed);
CheckReport runBlockShiftTrials(long trials, std::uint64_t seed);

}  // namespace aalpha
