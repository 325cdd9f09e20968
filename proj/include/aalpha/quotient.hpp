#pragma once

#include <span>
#include <vector>

#include "aalpha/graph.hpp"
#include "aalpha/spectra.hpp"

namespace aalpha {

// Equitable-partition quotient of a sequential join of cliques. Tridiagonal:
// row i has diagonal alpha*d_i + (1-alpha)*(n_i - 1) with
// d_i = n_{i-1} + n_i - 1 + n_{i+1} (missing neighbors count 0), and
// off-diagonal (i, i+-1) = (1-alpha) * n_{i+-1}. Its largest eigenvalue equals
// the spectral radius of the realized join.
struct QuotientMatrix {
    std::vector<int> cellSizes;
    std::vector<double> diag;   // length d+1
    std::vector<double> upper;  // entry (i, i+1)
    std::vector<double> lower;  // entry (i+1, i)

    int dim() const { return static_cast<int>(diag.size()); }
    double entry(int i, int j) const;
};

QuotientMatrix quotientMatrix(const JoinSpec& spec, Alpha a);

// Largest eigenvalue after the diagonal similarity S = diag(sqrt(n_i)), which
// makes the matrix symmetric tridiagonal; computed by Sturm-count bisection.
double quotientSpectralRadius(const JoinSpec& spec, Alpha a);

// Monic characteristic polynomial det(xI - B) of the 3-cell quotient, with the
// root bracket [max diagonal of B, n1+n2+n3-1] carried along.
struct CubicCoefficients {
    double c3 = 1.0;
    double c2 = 0.0;
    double c1 = 0.0;
    double c0 = 0.0;
    double bracketLo = 0.0;
    double bracketHi = 0.0;

    double eval(double x) const { return ((c3 * x + c2) * x + c1) * x + c0; }
};

CubicCoefficients cubicJoin(int n1, int n2, int n3, Alpha a);
double largestRoot(const CubicCoefficients& f);

// lambda of K_{n1} v K_{n2} v K_{n1}:
// ((n1+n2-2) + alpha(2 n1+n2) + g) / 2,
// g = sqrt((2 n1+n2)^2 a^2 - 2(2 n1^2+5 n1 n2+n2^2) a + n1^2+6 n1 n2+n2^2).
double symmetricJoinLambda(int n1, int n2, Alpha a);

// lambda of K_k v K_k v K_k: (3 alpha + 2 + sqrt(9 alpha^2 - 16 alpha + 8))/2 * k - 1.
double tripleEqualLambda(int k, Alpha a);

// lambda of K_{n1} v K_{n2} v K_{n2} v K_{n1}, from the symmetry-folded 2x2
// eigensystem. Specializes at n1 = n2 = k to
// (2 alpha + 3 + sqrt(4 alpha^2 - 8 alpha + 5))/2 * k - 1.
double quadJoinLambda(int n1, int n2, Alpha a);

struct TheoremBounds {
    double lower;
    double upper;  // nMid + 2k - 1
};
// Sandwich bounds on the extremal spectral radius; requires nMid >= 2k, k >= 2.
TheoremBounds theoremBounds(int nMid, int k, Alpha a);

namespace detail {

// Largest eigenvalue of a symmetric tridiagonal matrix by bisection with
// Sturm sign counts: exact bracketing, no iterative-convergence uncertainty.
double tridiagLargestEigenvalue(std::span<const double> diag, std::span<const double> off);

// Unit eigenvector for an eigenvalue computed to machine precision, by inverse
// iteration with a partially pivoted tridiagonal solve.
std::vector<double> tridiagTopEigenvector(std::span<const double> diag,
                                          std::span<const double> off, double lambda);

// Allocation-free quotient radius used by the composition sweeps.
double joinLambda(std::span<const int> parts, double alpha);

}  // namespace detail

}  // namespace aalpha
