#pragma once

#include <string>
#include <vector>

namespace aalpha {

// One checked claim. For strict inequalities margin = lhs - rhs and pass means
// margin exceeds the strictness floor; for equality-style claims margin is the
// absolute deviation and pass means it is within tolerance (the claim text
// says which reading applies). Exploratory records are reported but never
// counted as failures.
struct CheckRecord {
    std::string context;
    std::string claim;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    bool pass = false;
    bool exploratory = false;
};

struct CheckReport {
    std::vector<CheckRecord> records;

    bool allPass() const {
        for (const auto& r : records)
            if (!r.exploratory && !r.pass) return false;
        return true;
    }
    int failures() const {
        int c = 0;
        for (const auto& r : records)
            if (!r.exploratory && !r.pass) ++c;
        return c;
    }
    void append(const CheckReport& other) {
        records.insert(records.end(), other.records.begin(), other.records.end());
    }
};

}  // namespace aalpha
