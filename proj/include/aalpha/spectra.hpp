#pragma once

#include <span>
#include <vector>

#include "aalpha/errors.hpp"
#include "aalpha/graph.hpp"

namespace aalpha {

// Weight of the degree part in A_alpha = alpha*D + (1-alpha)*A. Restricted to
// [0,1): every strict-monotonicity result this library checks needs alpha < 1.
struct Alpha {
    double value;

    explicit Alpha(double v) : value(v) {
        if (!(v >= 0.0 && v < 1.0))
            throw InvalidInputError("alpha must lie in [0,1), got " + std::to_string(v));
    }
};

struct SpectralResult {
    double lambda = 0.0;
    std::vector<double> perron;  // positive entries, unit Euclidean norm
    double residual = 0.0;       // ||A_alpha x - lambda x||_2
    long iterations = 0;
};

class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, SpectralResult best)
        : Error(what), best_(std::move(best)) {}
    const SpectralResult& best() const { return best_; }

private:
    SpectralResult best_;
};

// Dense A_alpha(g); diagnostic/small-scale use, the solver itself is matrix-free.
std::vector<std::vector<double>> aAlphaMatrix(const Graph& g, Alpha a);

// Largest eigenvalue and Perron vector of A_alpha(g) by power iteration on
// A_alpha + I (the shift keeps bipartite alpha=0 cases aperiodic). Converged
// when ||A_alpha x - lambda x|| <= tol * max(1, lambda).
SpectralResult spectralRadius(const Graph& g, Alpha a, double tol = 1e-10,
                              long maxIterations = 200000);

// x^T A_alpha x / x^T x through the degree/edge sums; no matrix is built.
double rayleighQuotient(const Graph& g, Alpha a, std::span<const double> x);

struct DegreeBounds {
    double lower;  // 2|E|/|V|
    double upper;  // max over adjacent ordered pairs of alpha*d(u) + (1-alpha)*d(v)
};
DegreeBounds degreeBounds(const Graph& g, Alpha a);

// (alpha*(D+1) + sqrt(alpha^2 (D+1)^2 + 4 D (1-2 alpha))) / 2; attained exactly
// by the star K_{1,D}.
double deltaLowerBound(int maxDegree, Alpha a);

namespace detail {

struct PowerOutcome {
    double lambda = 0.0;    // Rayleigh estimate of the converged iterate
    double residual = 0.0;
    long iterations = 0;
    bool converged = false;
    bool stoppedEarly = false;  // certified upperBound fell below stopBelow
    // Collatz-Wielandt bound: valid upper bound on the true spectral radius
    // for any positive iterate, converged or not.
    double upperBound = 0.0;
};

// Core iteration over raw neighborhood masks; writes the unit Perron vector
// into vecOut when non-null and converged.
PowerOutcome powerIterate(int n, const std::uint64_t* adj, double alpha, double tol,
                          long maxIterations, double stopBelow, double* vecOut);

}  // namespace detail

}  // namespace aalpha
