#include "aalpha/quotient.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace aalpha {

namespace {

constexpr int kMaxCells = Graph::kMaxVertices;

// diag/off of the symmetrized quotient: S B S^-1 with S = diag(sqrt(n_i)) has
// off-diagonals (1-alpha) sqrt(n_i n_{i+1}).
int fillSymmetrized(std::span<const int> parts, double alpha, double* diag, double* off) {
    int cells = static_cast<int>(parts.size());
    for (int i = 0; i < cells; ++i) {
        int prev = i > 0 ? parts[i - 1] : 0;
        int next = i + 1 < cells ? parts[i + 1] : 0;
        int deg = prev + parts[i] - 1 + next;
        diag[i] = alpha * deg + (1.0 - alpha) * (parts[i] - 1);
        if (i + 1 < cells)
            off[i] = (1.0 - alpha) * std::sqrt(static_cast<double>(parts[i]) * parts[i + 1]);
    }
    return cells;
}

}  // namespace

namespace detail {

// Number of eigenvalues below x, from the signs of the LDL^T pivots of T - xI.
static int sturmCountBelow(std::span<const double> diag, std::span<const double> off, double x) {
    int m = static_cast<int>(diag.size());
    int count = 0;
    double d = diag[0] - x;
    if (d < 0) ++count;
    for (int i = 1; i < m; ++i) {
        if (d == 0.0) d = 1e-300;
        d = (diag[i] - x) - off[i - 1] * off[i - 1] / d;
        if (d < 0) ++count;
    }
    return count;
}

double tridiagLargestEigenvalue(std::span<const double> diag, std::span<const double> off) {
    int m = static_cast<int>(diag.size());
    if (m == 1) return diag[0];
    double lo = diag[0], hi;
    for (int i = 0; i < m; ++i) lo = std::max(lo, diag[i]);  // lambda_max >= max diag
    hi = lo;
    for (int i = 0; i < m; ++i) {
        double g = diag[i];
        if (i > 0) g += std::abs(off[i - 1]);
        if (i + 1 < m) g += std::abs(off[i]);
        hi = std::max(hi, g);
    }
    hi += 1e-12 * std::max(1.0, std::abs(hi));
    const double eps = 4.0 * std::numeric_limits<double>::epsilon();
    while (hi - lo > eps * std::max(1.0, std::abs(hi))) {
        double mid = 0.5 * (lo + hi);
        if (sturmCountBelow(diag, off, mid) == m)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<double> tridiagTopEigenvector(std::span<const double> diag,
                                          std::span<const double> off, double lambda) {
    int m = static_cast<int>(diag.size());
    std::vector<double> y(m, 1.0 / std::sqrt(static_cast<double>(m)));
    if (m == 1) return y;

    double scale = std::max(1.0, std::abs(lambda));
    // inverse iteration on T - (lambda + eps) I; the tiny offset guards the
    // exactly singular shift, and the dimensions here are single digits so a
    // dense partial-pivot solve is plenty
    double shift = lambda + 1e-13 * scale;
    for (int round = 0; round < 3; ++round) {
        std::vector<std::vector<double>> a(m, std::vector<double>(m, 0.0));
        for (int i = 0; i < m; ++i) {
            a[i][i] = diag[i] - shift;
            if (i + 1 < m) {
                a[i][i + 1] = off[i];
                a[i + 1][i] = off[i];
            }
        }
        std::vector<double> rhs = y;
        for (int col = 0; col < m; ++col) {
            int piv = col;
            for (int r = col + 1; r < m; ++r)
                if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
            std::swap(a[col], a[piv]);
            std::swap(rhs[col], rhs[piv]);
            double p = a[col][col];
            if (p == 0.0) p = a[col][col] = 1e-300;
            for (int r = col + 1; r < m; ++r) {
                double f = a[r][col] / p;
                if (f == 0.0) continue;
                for (int c = col; c < m; ++c) a[r][c] -= f * a[col][c];
                rhs[r] -= f * rhs[col];
            }
        }
        for (int i = m - 1; i >= 0; --i) {
            double v = rhs[i];
            for (int c = i + 1; c < m; ++c) v -= a[i][c] * rhs[c];
            rhs[i] = v / a[i][i];
        }
        double nrm = 0.0;
        for (double v : rhs) nrm += v * v;
        nrm = std::sqrt(nrm);
        for (int i = 0; i < m; ++i) y[i] = rhs[i] / nrm;
    }
    double sum = 0.0;
    for (double v : y) sum += v;
    if (sum < 0)
        for (auto& v : y) v = -v;

    // residual check: the vector must satisfy the eigenequation tightly
    double res = 0.0;
    for (int i = 0; i < m; ++i) {
        double t = (diag[i] - lambda) * y[i];
        if (i > 0) t += off[i - 1] * y[i - 1];
        if (i + 1 < m) t += off[i] * y[i + 1];
        res += t * t;
    }
    if (std::sqrt(res) > 1e-9 * scale)
        throw Error("tridiagTopEigenvector: inverse iteration failed to converge");
    return y;
}

double joinLambda(std::span<const int> parts, double alpha) {
    std::array<double, kMaxCells> diag, off;
    int cells = fillSymmetrized(parts, alpha, diag.data(), off.data());
    return tridiagLargestEigenvalue(std::span<const double>(diag.data(), cells),
                                    std::span<const double>(off.data(), cells - 1));
}

}  // namespace detail

double QuotientMatrix::entry(int i, int j) const {
    if (i == j) return diag[i];
    if (j == i + 1) return upper[i];
    if (i == j + 1) return lower[j];
    return 0.0;
}

QuotientMatrix quotientMatrix(const JoinSpec& spec, Alpha a) {
    spec.validate();
    int cells = static_cast<int>(spec.parts.size());
    QuotientMatrix q;
    q.cellSizes = spec.parts;
    q.diag.resize(cells);
    q.upper.resize(cells - 1);
    q.lower.resize(cells - 1);
    for (int i = 0; i < cells; ++i) {
        int prev = i > 0 ? spec.parts[i - 1] : 0;
        int next = i + 1 < cells ? spec.parts[i + 1] : 0;
        int deg = prev + spec.parts[i] - 1 + next;
        q.diag[i] = a.value * deg + (1.0 - a.value) * (spec.parts[i] - 1);
        if (i + 1 < cells) q.upper[i] = (1.0 - a.value) * next;
        if (i > 0) q.lower[i - 1] = (1.0 - a.value) * prev;
    }
    return q;
}

double quotientSpectralRadius(const JoinSpec& spec, Alpha a) {
    spec.validate();
    return detail::joinLambda(spec.parts, a.value);
}

CubicCoefficients cubicJoin(int n1, int n2, int n3, Alpha a) {
    if (n1 < 1 || n2 < 1 || n3 < 1) throw InvalidInputError("cubicJoin: cells must be >= 1");
    QuotientMatrix b = quotientMatrix(JoinSpec{n1, n2, n3}, a);
    double a0 = b.diag[0], a1 = b.diag[1], a2 = b.diag[2];
    double p01 = b.upper[0] * b.lower[0];  // (0,1)*(1,0)
    double p12 = b.upper[1] * b.lower[1];

    CubicCoefficients f;
    f.c3 = 1.0;
    f.c2 = -(a0 + a1 + a2);
    f.c1 = a0 * a1 + a0 * a2 + a1 * a2 - p01 - p12;
    f.c0 = -(a0 * a1 * a2 - a0 * p12 - a2 * p01);
    f.bracketLo = std::max({a0, a1, a2});
    f.bracketHi = static_cast<double>(n1 + n2 + n3 - 1);
    return f;
}

double largestRoot(const CubicCoefficients& f) {
    // The largest root sits in (bracketLo, bracketHi]: the quotient's Perron
    // value exceeds its max diagonal, the middle root does not, and the top
    // end is the complete graph's value.
    double lo = f.bracketLo, hi = f.bracketHi;
    while (hi - lo > 1e-12) {
        double mid = 0.5 * (lo + hi);
        if (f.eval(mid) > 0.0)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

double symmetricJoinLambda(int n1, int n2, Alpha a) {
    if (n1 < 1 || n2 < 1) throw InvalidInputError("symmetricJoinLambda: cells must be >= 1");
    double al = a.value, m1 = n1, m2 = n2;
    double g = std::sqrt((2 * m1 + m2) * (2 * m1 + m2) * al * al -
                         2 * (2 * m1 * m1 + 5 * m1 * m2 + m2 * m2) * al + m1 * m1 +
                         6 * m1 * m2 + m2 * m2);
    return 0.5 * ((m1 + m2 - 2) + al * (2 * m1 + m2) + g);
}

double tripleEqualLambda(int k, Alpha a) {
    if (k < 1) throw InvalidInputError("tripleEqualLambda: k must be >= 1");
    double al = a.value;
    return (3 * al + 2 + std::sqrt(9 * al * al - 16 * al + 8)) / 2.0 * k - 1.0;
}

double quadJoinLambda(int n1, int n2, Alpha a) {
    if (n1 < 1 || n2 < 1) throw InvalidInputError("quadJoinLambda: cells must be >= 1");
    // symmetry-folded eigensystem of K_{n1} v K_{n2} v K_{n2} v K_{n1}
    double al = a.value;
    double a11 = n1 - 1 + al * n2;
    double a12 = (1 - al) * n2;
    double a21 = (1 - al) * n1;
    double a22 = al * n1 + 2.0 * n2 - 1;
    double half = 0.5 * (a11 - a22);
    return 0.5 * (a11 + a22) + std::sqrt(half * half + a12 * a21);
}

TheoremBounds theoremBounds(int nMid, int k, Alpha a) {
    if (k < 2) throw OutOfScopeError("theoremBounds: requires k >= 2");
    if (nMid < 2 * k)
        throw OutOfScopeError("theoremBounds: requires nMid >= 2k (got nMid = " +
                              std::to_string(nMid) + ", k = " + std::to_string(k) + ")");
    double al = a.value, M = nMid + 2.0 * k;
    TheoremBounds b;
    b.lower = 0.5 * (al * M + std::sqrt(al * al * (M + 1) * (M + 1) + 4.0 * M * (1 - 2 * al)));
    b.upper = M - 1;
    return b;
}

}  // namespace aalpha
