#include "aalpha/spectra.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>

namespace aalpha {

namespace detail {

PowerOutcome powerIterate(int n, const std::uint64_t* adj, double alpha, double tol,
                          long maxIterations, double stopBelow, double* vecOut) {
    std::array<double, Graph::kMaxVertices> x{}, y{};
    std::array<int, Graph::kMaxVertices> deg{};

    double norm2 = 0.0;
    for (int v = 0; v < n; ++v) {
        deg[v] = std::popcount(adj[v]);
        x[v] = deg[v] + 1.0;  // positive start: cannot be orthogonal to the Perron direction
        norm2 += x[v] * x[v];
    }
    double inv = 1.0 / std::sqrt(norm2);
    for (int v = 0; v < n; ++v) x[v] *= inv;

    PowerOutcome out;
    out.upperBound = std::numeric_limits<double>::infinity();
    double oneMinus = 1.0 - alpha;

    for (long iter = 1; iter <= maxIterations; ++iter) {
        double rho = 0.0;
        double cwMax = 0.0;
        for (int v = 0; v < n; ++v) {
            double sum = 0.0;
            std::uint64_t nb = adj[v];
            while (nb) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                sum += x[u];
            }
            double yv = alpha * deg[v] * x[v] + oneMinus * sum;
            y[v] = yv;
            rho += x[v] * yv;
            cwMax = std::max(cwMax, yv / x[v]);  // Collatz-Wielandt ratio, x stays positive
        }
        out.upperBound = std::min(out.upperBound, cwMax);

        double res2 = 0.0;
        for (int v = 0; v < n; ++v) {
            double r = y[v] - rho * x[v];
            res2 += r * r;
        }
        double res = std::sqrt(res2);
        out.lambda = rho;
        out.residual = res;
        out.iterations = iter;

        if (res <= tol * std::max(1.0, rho)) {
            out.converged = true;
            if (vecOut)
                for (int v = 0; v < n; ++v) vecOut[v] = x[v];
            return out;
        }
        if (out.upperBound < stopBelow) {
            out.stoppedEarly = true;
            return out;
        }

        // next iterate of A_alpha + I
        norm2 = 0.0;
        for (int v = 0; v < n; ++v) {
            x[v] += y[v];
            norm2 += x[v] * x[v];
        }
        inv = 1.0 / std::sqrt(norm2);
        for (int v = 0; v < n; ++v) x[v] *= inv;
    }
    if (vecOut)
        for (int v = 0; v < n; ++v) vecOut[v] = x[v];
    return out;
}

}  // namespace detail

std::vector<std::vector<double>> aAlphaMatrix(const Graph& g, Alpha a) {
    int n = g.n();
    std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
    for (int v = 0; v < n; ++v) {
        m[v][v] = a.value * g.degree(v);
        std::uint64_t nb = g.neighborMask(v);
        while (nb) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            m[v][u] = 1.0 - a.value;
        }
    }
    return m;
}

SpectralResult spectralRadius(const Graph& g, Alpha a, double tol, long maxIterations) {
    if (!isConnected(g)) throw DisconnectedError("spectralRadius: disconnected input");

    std::vector<double> vec(g.n());
    auto out = detail::powerIterate(g.n(), g.adjData(), a.value, tol, maxIterations,
                                    -std::numeric_limits<double>::infinity(), vec.data());

    SpectralResult res;
    res.lambda = out.lambda;
    res.residual = out.residual;
    res.iterations = out.iterations;
    res.perron = std::move(vec);
    if (!res.perron.empty() && res.perron[0] < 0)
        for (auto& v : res.perron) v = -v;

    if (!out.converged)
        throw ConvergenceError("spectralRadius: no convergence after " +
                                   std::to_string(maxIterations) + " iterations (residual " +
                                   std::to_string(out.residual) + ")",
                               res);
    return res;
}

double rayleighQuotient(const Graph& g, Alpha a, std::span<const double> x) {
    if (static_cast<int>(x.size()) != g.n())
        throw InvalidInputError("rayleighQuotient: vector length " + std::to_string(x.size()) +
                                " != n = " + std::to_string(g.n()));
    double nrm2 = 0.0;
    for (double v : x) nrm2 += v * v;
    if (nrm2 == 0.0) throw InvalidInputError("rayleighQuotient: zero vector");

    double degTerm = 0.0;
    for (int v = 0; v < g.n(); ++v) degTerm += g.degree(v) * x[v] * x[v];
    double edgeTerm = 0.0;
    for (auto [u, v] : g.edges()) edgeTerm += x[u] * x[v];
    return (a.value * degTerm + 2.0 * (1.0 - a.value) * edgeTerm) / nrm2;
}

DegreeBounds degreeBounds(const Graph& g, Alpha a) {
    int m = g.edgeCount();
    if (m == 0) throw InvalidInputError("degreeBounds: edgeless input");
    DegreeBounds b;
    b.lower = 2.0 * m / g.n();
    b.upper = 0.0;
    for (auto [u, v] : g.edges()) {
        double du = g.degree(u), dv = g.degree(v);
        b.upper = std::max({b.upper, a.value * du + (1.0 - a.value) * dv,
                            a.value * dv + (1.0 - a.value) * du});
    }
    return b;
}

double deltaLowerBound(int maxDegree, Alpha a) {
    if (maxDegree < 1) throw InvalidInputError("deltaLowerBound: need maxDegree >= 1");
    double D = maxDegree, al = a.value;
    double inner = al * al * (D + 1) * (D + 1) + 4.0 * D * (1.0 - 2.0 * al);
    double bound = 0.5 * (al * (D + 1) + std::sqrt(inner));
    // consequences stated alongside the bound; violations would mean a broken formula
    if (al <= 0.5 && bound < al * (D + 1) - 1e-12)
        throw Error("deltaLowerBound: internal consistency failure (alpha <= 1/2)");
    if (al >= 0.5 && al > 0.0 &&
        bound < al * D + (1.0 - al) * (1.0 - al) / al - 1e-12)
        throw Error("deltaLowerBound: internal consistency failure (alpha >= 1/2)");
    return bound;
}

}  // namespace aalpha
