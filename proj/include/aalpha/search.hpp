#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "aalpha/graph.hpp"
#include "aalpha/quotient.hpp"
#include "aalpha/report.hpp"
#include "aalpha/spectra.hpp"

namespace aalpha {

enum class SearchMode { exhaustive, criticalClass };

struct SearchParams {
    int n;
    int k;  // >= 2
    int d;  // >= 2
    Alpha alpha;
    SearchMode mode = SearchMode::criticalClass;
};

struct SearchStats {
    std::uint64_t visited = 0;  // exhaustive: 2^C(n,2); critical: composition count
    std::uint64_t connectedPass = 0;
    std::uint64_t diameterPass = 0;
    std::uint64_t kConnectedPass = 0;
    std::uint64_t evaluated = 0;       // full eigensolves
    std::uint64_t prunedByBound = 0;   // degree-bound or Collatz-Wielandt skip
};

struct SearchReport {
    double bestLambda = 0.0;
    std::vector<std::string> bestGraphs;  // graph6, isomorphism-deduplicated
    JoinSpec predictedSpec;
    bool matchesPrediction = false;
    bool withinTheoremScope = false;  // nMid >= 2k
    // Lower bound on the gap between the maximum and the best non-maximal
    // value: bound-pruned graphs contribute their certified upper bounds.
    double runnerUpGap = 0.0;
    SearchStats stats;
    // critical-class mode only
    std::vector<std::pair<std::vector<int>, double>> compositionTable;
    std::vector<std::vector<int>> bestCompositions;  // canonical (lex-min vs reversal)
};

// Interior composition (k,...,k, n-2-(d-2)k, k,...,k) with the oversized cell
// at index floor(d/2), wrapped in unit end cells. Throws InfeasibleError when
// n < (d-1)k + 2.
JoinSpec predictedExtremal(int n, int k, int d);

// All (n_1,...,n_{d-1}) with n_i >= k and sum n-2, as unit-end JoinSpecs.
std::vector<JoinSpec> enumerateCriticalClass(int n, int k, int d);

SearchReport searchCriticalClass(const SearchParams& p);

// Scans all 2^C(n,2) labeled graphs (n <= 7) with connectivity, diameter and
// k-connectivity filters plus certified spectral pruning against the predicted
// family's value.
SearchReport searchExhaustive(const SearchParams& p);

// theoremBounds.lower < lambda(predicted graph) < theoremBounds.upper;
// requires nMid >= 2k.
CheckReport verifyTheoremBoundsOnArgmax(const SearchParams& p);

namespace detail {

void forEachCriticalComposition(int n, int k, int d,
                                const std::function<void(std::span<const int>)>& fn);
std::vector<int> canonicalComposition(std::span<const int> comp);

}  // namespace detail

}  // namespace aalpha
