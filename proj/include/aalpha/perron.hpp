#pragma once

#include <string>
#include <vector>

#include "aalpha/graph.hpp"
#include "aalpha/quotient.hpp"
#include "aalpha/report.hpp"
#include "aalpha/spectra.hpp"

namespace aalpha {

// The family G(l, d-l) = K_1 v K_k v ... v K_k v K_{nMid} v K_k v ... v K_k v K_1
// with the oversized cell at position l. Order is 2 + (d-2)k + nMid.
struct GLDSpec {
    int d;
    int l;
    int k;
    int nMid;

    GLDSpec(int d, int l, int k, int nMid);

    JoinSpec realize() const;
    int order() const { return 2 + (d - 2) * k + nMid; }
    GLDSpec mirrored() const { return GLDSpec(d, d - l, k, nMid); }
    std::string describe() const;
};

// One Perron entry per cell (cells are equitable), normalized so the expanded
// full vector has unit Euclidean norm.
struct CellProfile {
    double lambda = 0.0;
    std::vector<double> values;
};

// Profile from the symmetrized quotient eigenvector (exact small problem),
// cross-checked against the full-graph Perron vector. Throws Error when the
// full vector disagrees within a cell by more than 1e-6 (solver failure).
CellProfile cellProfile(const GLDSpec& spec, Alpha a);

struct RecurrenceRoots {
    double t1;  // > 2
    double t2;  // in (0, 1), t1 * t2 = 1
};

// Roots of (1-alpha) k t^2 + (2 k alpha + k - 1 - lambda) t + (1-alpha) k = 0.
// Requires lambda > 3k - 1 (distinct positive roots) and rejects the boundary
// where the larger root does not exceed 2.
RecurrenceRoots recurrenceRoots(double lambda, int k, Alpha a);

// Strict Perron-profile inequalities for G(l, d-l), hypothesis l >= d-l+1:
//   (i)  x_0 < x_1 < ... < x_{l-1}  and  x_{l+1} > ... > x_{d-1} > x_d
//   (ii) nMid * x_l > k * x_{l-1}
//   (iii) x_d > x_0 and x_i < x_{d-i} for i = 1..d-l-1, when l >= d-l+2.
// Strictness floor 1e-9 after residual-1e-10 convergence.
CheckReport checkMonotonicity(const GLDSpec& spec, Alpha a);

// x_{d-i+1} < x_i for i = 1..d-l-1, hypothesis l >= d-l+2. Stated only for the
// maximal graph of the class, so every record here is exploratory.
CheckReport checkCrossInequalities(const GLDSpec& spec, Alpha a);

// Residuals of (1-alpha) k x_{i+1} + (2 k alpha + k - 1 - lambda) x_i
// + (1-alpha) k x_{i-1} on the rows where all three cells have size k
// (i in [2, l-2] and [l+2, d-2]); pass threshold 1e-7.
CheckReport checkRecurrenceResiduals(const GLDSpec& spec, Alpha a);

}  // namespace aalpha
