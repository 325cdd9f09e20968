#pragma once

// Test-side oracles, independent of the library's solver paths: a dense Jacobi
// eigensolver, adjacency-list BFS, and max-flow vertex connectivity.

#include <algorithm>
#include <cmath>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "aalpha/graph.hpp"
#include "aalpha/rng.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<double>>;

inline Matrix denseAdjacency(const aalpha::Graph& g) {
    int n = g.n();
    Matrix a(n, std::vector<double>(n, 0.0));
    for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1.0;
    return a;
}

inline Matrix denseAalpha(const aalpha::Graph& g, double alpha) {
    Matrix a = denseAdjacency(g);
    int n = g.n();
    for (int i = 0; i < n; ++i) {
        double deg = 0;
        for (int j = 0; j < n; ++j) deg += a[i][j];
        for (int j = 0; j < n; ++j) a[i][j] *= (1.0 - alpha);
        a[i][i] = alpha * deg;
    }
    return a;
}

inline Matrix denseSignlessLaplacian(const aalpha::Graph& g) {
    Matrix a = denseAdjacency(g);
    int n = g.n();
    for (int i = 0; i < n; ++i) {
        double deg = 0;
        for (int j = 0; j < n; ++j) deg += a[i][j];
        a[i][i] = deg;
    }
    return a;
}

// Cyclic Jacobi; returns eigenvalues ascending, optionally the eigenvectors
// as columns of *vecs.
inline std::vector<double> jacobiEigenvalues(Matrix a, Matrix* vecs = nullptr) {
    int n = static_cast<int>(a.size());
    Matrix v(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) v[i][i] = 1.0;

    double scale = 1e-30;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) scale = std::max(scale, std::abs(a[i][j]));

    for (int sweep = 0; sweep < 200; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
        if (std::sqrt(off) < 1e-14 * scale * n) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < 1e-300) continue;
                double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int i = 0; i < n; ++i) {
                    double aip = a[i][p], aiq = a[i][q];
                    a[i][p] = c * aip - s * aiq;
                    a[i][q] = s * aip + c * aiq;
                }
                for (int i = 0; i < n; ++i) {
                    double api = a[p][i], aqi = a[q][i];
                    a[p][i] = c * api - s * aqi;
                    a[q][i] = s * api + c * aqi;
                }
                for (int i = 0; i < n; ++i) {
                    double vip = v[i][p], viq = v[i][q];
                    v[i][p] = c * vip - s * viq;
                    v[i][q] = s * vip + c * viq;
                }
            }
    }
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) { return a[x][x] < a[y][y]; });
    std::vector<double> evals(n);
    for (int i = 0; i < n; ++i) evals[i] = a[order[i]][order[i]];
    if (vecs) {
        vecs->assign(n, std::vector<double>(n, 0.0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) (*vecs)[i][j] = v[i][order[j]];
    }
    return evals;
}

inline double largestEigenvalue(const Matrix& a) {
    auto evals = jacobiEigenvalues(a);
    return evals.back();
}

// Largest eigenvalue plus its (sign-normalized) eigenvector.
inline std::pair<double, std::vector<double>> largestEigenpair(const Matrix& a) {
    Matrix vecs;
    auto evals = jacobiEigenvalues(a, &vecs);
    int n = static_cast<int>(a.size());
    std::vector<double> v(n);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        v[i] = vecs[i][n - 1];
        sum += v[i];
    }
    if (sum < 0)
        for (auto& x : v) x = -x;
    return {evals.back(), v};
}

inline int bfsDistance(const aalpha::Graph& g, int s, int t) {
    int n = g.n();
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : g.edges()) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> dist(n, -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : adj[u])
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    return dist[t];
}

inline std::optional<int> diameterByBfs(const aalpha::Graph& g) {
    int best = 0;
    for (int s = 0; s < g.n(); ++s)
        for (int t = s + 1; t < g.n(); ++t) {
            int d = bfsDistance(g, s, t);
            if (d < 0) return std::nullopt;
            best = std::max(best, d);
        }
    return best;
}

// Vertex connectivity by vertex-split max-flow (Menger). Small n only.
inline int mengerConnectivity(const aalpha::Graph& g) {
    int n = g.n();
    if (n == 1) return 0;
    bool isComplete = g.edgeCount() == n * (n - 1) / 2;
    if (isComplete) return n - 1;

    auto maxFlow = [&](int src, int dst) {
        // node 2w = w_in, 2w+1 = w_out
        int big = 1000;
        std::vector<std::vector<int>> cap(2 * n, std::vector<int>(2 * n, 0));
        for (int w = 0; w < n; ++w) cap[2 * w][2 * w + 1] = (w == src || w == dst) ? big : 1;
        for (auto [u, v] : g.edges()) {
            cap[2 * u + 1][2 * v] = big;
            cap[2 * v + 1][2 * u] = big;
        }
        int s = 2 * src + 1, t = 2 * dst, flow = 0;
        for (;;) {
            std::vector<int> prev(2 * n, -1);
            std::queue<int> q;
            q.push(s);
            prev[s] = s;
            while (!q.empty() && prev[t] < 0) {
                int u = q.front();
                q.pop();
                for (int w = 0; w < 2 * n; ++w)
                    if (prev[w] < 0 && cap[u][w] > 0) {
                        prev[w] = u;
                        q.push(w);
                    }
            }
            if (prev[t] < 0) break;
            for (int w = t; w != s; w = prev[w]) {
                cap[prev[w]][w] -= 1;
                cap[w][prev[w]] += 1;
            }
            ++flow;
        }
        return flow;
    };

    int best = n;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.hasEdge(u, v)) best = std::min(best, maxFlow(u, v));
    return best;
}

// Random spanning tree plus independent extras; always connected.
inline aalpha::Graph randomConnectedGraph(aalpha::Rng& rng, int n, double p) {
    aalpha::Graph::Builder tree(n);
    for (int v = 1; v < n; ++v) tree.addEdge(v, rng.range(0, v - 1));
    aalpha::Graph t = tree.build();
    aalpha::Graph::Builder full(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (t.hasEdge(i, j) || rng.unit() < p) full.addEdge(i, j);
    return full.build();
}

inline aalpha::Graph relabel(const aalpha::Graph& g, const std::vector<int>& perm) {
    aalpha::Graph::Builder b(g.n());
    for (auto [u, v] : g.edges()) b.addEdge(perm[u], perm[v]);
    return b.build();
}

inline aalpha::Graph cycleGraph(int n) {
    aalpha::Graph::Builder b(n);
    for (int i = 0; i < n; ++i) b.addEdge(i, (i + 1) % n);
    return b.build();
}

inline aalpha::Graph star(int leaves) {
    aalpha::Graph::Builder b(leaves + 1);
    for (int i = 1; i <= leaves; ++i) b.addEdge(0, i);
    return b.build();
}

}  // namespace oracle
