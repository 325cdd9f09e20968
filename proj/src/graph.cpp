#include "aalpha/graph.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <map>
#include <numeric>
#include <sstream>

namespace aalpha {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

void checkVertex(int v, int n) {
    if (v < 0 || v >= n)
        throw InvalidInputError("vertex " + std::to_string(v) + " out of range [0," +
                                std::to_string(n) + ")");
}

std::string pairName(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
    if (n < 1) throw InvalidInputError("invalid order: graph needs n >= 1");
    if (n > kMaxVertices)
        throw UnsupportedError("graph order " + std::to_string(n) + " exceeds the " +
                               std::to_string(kMaxVertices) + "-vertex limit");
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) {
        checkVertex(u, n);
        checkVertex(v, n);
        if (u == v) throw InvalidInputError("self-loop at vertex " + std::to_string(u));
        addEdgeUnchecked(u, v);
    }
}

void Graph::addEdgeUnchecked(int u, int v) {
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
}

Graph Graph::fromEdgeMask(int n, std::uint64_t mask) {
    Graph g(n);
    int b = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++b)
            if (mask >> b & 1) g.addEdgeUnchecked(i, j);
    return g;
}

std::pair<int, int> Graph::pairAt(int n, int b) {
    int idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++idx)
            if (idx == b) return {i, j};
    throw InvalidInputError("edge bit out of range");
}

int Graph::edgeCount() const {
    int twice = 0;
    for (auto w : adj_) twice += std::popcount(w);
    return twice / 2;
}

int Graph::degree(int v) const {
    checkVertex(v, n_);
    return std::popcount(adj_[v]);
}

int Graph::maxDegree() const {
    int best = 0;
    for (auto w : adj_) best = std::max(best, std::popcount(w));
    return best;
}

bool Graph::hasEdge(int u, int v) const {
    checkVertex(u, n_);
    checkVertex(v, n_);
    return (adj_[u] >> v) & 1;
}

std::uint64_t Graph::vertexMask() const {
    return n_ == 64 ? ~std::uint64_t{0} : (bit(n_) - 1);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        std::uint64_t higher = adj_[u] >> (u + 1);
        while (higher) {
            int v = u + 1 + std::countr_zero(higher);
            out.emplace_back(u, v);
            higher &= higher - 1;
        }
    }
    return out;
}

Graph::Builder::Builder(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0)), 0) {
    Graph check(n);  // order validation
    (void)check;
}

Graph::Builder& Graph::Builder::addEdge(int u, int v) {
    checkVertex(u, n_);
    checkVertex(v, n_);
    if (u == v) throw InvalidInputError("self-loop at vertex " + std::to_string(u));
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
    return *this;
}

Graph Graph::Builder::build() const { return Graph(n_, adj_); }

int JoinSpec::order() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

void JoinSpec::validate() const {
    if (parts.empty()) throw InvalidInputError("invalid join spec: no cells");
    for (int p : parts)
        if (p < 1) throw InvalidInputError("invalid join spec: cell size " + std::to_string(p));
}

std::vector<int> JoinSpec::cellStarts() const {
    std::vector<int> starts(parts.size() + 1, 0);
    for (std::size_t i = 0; i < parts.size(); ++i) starts[i + 1] = starts[i] + parts[i];
    return starts;
}

ShiftMove ShiftMove::of(const std::vector<int>& u, const std::vector<int>& v,
                        const std::vector<int>& w) {
    ShiftMove m;
    for (int x : u) m.source |= bit(x);
    for (int x : v) m.target |= bit(x);
    for (int x : w) m.moved |= bit(x);
    return m;
}

Graph complete(int n) {
    Graph::Builder b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) b.addEdge(i, j);
    return b.build();
}

Graph path(int n) {
    Graph::Builder b(n);
    for (int i = 0; i + 1 < n; ++i) b.addEdge(i, i + 1);
    return b.build();
}

Graph sequentialJoin(const JoinSpec& spec) {
    spec.validate();
    Graph::Builder b(spec.order());
    auto starts = spec.cellStarts();
    int cells = static_cast<int>(spec.parts.size());
    for (int c = 0; c < cells; ++c) {
        for (int i = starts[c]; i < starts[c + 1]; ++i)
            for (int j = i + 1; j < starts[c + 1]; ++j) b.addEdge(i, j);
        if (c + 1 < cells)
            for (int i = starts[c]; i < starts[c + 1]; ++i)
                for (int j = starts[c + 1]; j < starts[c + 2]; ++j) b.addEdge(i, j);
    }
    return b.build();
}

namespace detail {

std::uint64_t reachable(int n, const std::uint64_t* adj, int start, std::uint64_t removed) {
    std::uint64_t seen = bit(start);
    std::uint64_t frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= adj[v];
        }
        next &= ~seen & ~removed;
        seen |= next;
        frontier = next;
    }
    (void)n;
    return seen;
}

bool connectedBits(int n, const std::uint64_t* adj) {
    std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : (bit(n) - 1);
    return reachable(n, adj, 0, 0) == all;
}

int eccentricity(int n, const std::uint64_t* adj, int v) {
    std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : (bit(n) - 1);
    std::uint64_t seen = bit(v);
    std::uint64_t frontier = seen;
    int dist = 0;
    while (seen != all) {
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f) {
            int u = std::countr_zero(f);
            f &= f - 1;
            next |= adj[u];
        }
        next &= ~seen;
        if (!next) return -1;
        seen |= next;
        frontier = next;
        ++dist;
    }
    return dist;
}

std::optional<int> diameterBits(int n, const std::uint64_t* adj) {
    int best = 0;
    for (int v = 0; v < n; ++v) {
        int e = eccentricity(n, adj, v);
        if (e < 0) return std::nullopt;
        best = std::max(best, e);
    }
    return best;
}

bool kConnectedBits(int n, const std::uint64_t* adj, int k) {
    std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : (bit(n) - 1);
    // all removal sets of size 0 .. k-1
    for (int size = 0; size < k; ++size) {
        if (size == 0) {
            if (reachable(n, adj, 0, 0) != all) return false;
            continue;
        }
        if (size >= n) return false;
        // Gosper's hack over size-subsets of n bits
        std::uint64_t subset = bit(size) - 1;
        std::uint64_t limit = bit(n);
        while (subset < limit) {
            std::uint64_t kept = all & ~subset;
            int start = std::countr_zero(kept);
            if (reachable(n, adj, start, subset) != kept) return false;
            std::uint64_t c = subset & -subset;
            std::uint64_t r = subset + c;
            subset = (((r ^ subset) >> 2) / c) | r;
        }
    }
    return true;
}

}  // namespace detail

bool isConnected(const Graph& g) { return detail::connectedBits(g.n(), g.adjData()); }

std::optional<int> diameter(const Graph& g) {
    if (g.n() == 1) return 0;
    return detail::diameterBits(g.n(), g.adjData());
}

bool isKConnected(const Graph& g, int k) {
    if (g.n() > 12)
        throw UnsupportedError("isKConnected supports n <= 12, got n = " + std::to_string(g.n()));
    if (k < 1 || k >= g.n())
        throw InvalidInputError("invalid parameter: need 1 <= k <= n-1, got k = " +
                                std::to_string(k) + " with n = " + std::to_string(g.n()));
    return detail::kConnectedBits(g.n(), g.adjData(), k);
}

Graph applyShift(const Graph& g, const ShiftMove& move) {
    std::uint64_t all = g.vertexMask();
    const std::uint64_t u = move.source, v = move.target, w = move.moved;
    if ((u | v | w) & ~all) throw InvalidInputError("invalid move: vertex out of range");
    if (!u || !v) throw InvalidInputError("invalid move: empty source or target set");
    if (u & v) throw InvalidInputError("invalid move: source and target sets intersect");
    if (w & (u | v))
        throw InvalidInputError("invalid move: moved set intersects source or target");
    if (!w) throw InvalidInputError("invalid move: empty moved set");
    if (std::popcount(u) != std::popcount(v))
        throw InvalidInputError("invalid move: |U| != |V|");

    for (std::uint64_t us = u; us;) {
        int a = std::countr_zero(us);
        us &= us - 1;
        std::uint64_t missing = w & ~g.neighborMask(a);
        if (missing)
            throw InvalidInputError("invalid move: missing edge " +
                                    pairName(a, std::countr_zero(missing)));
    }
    for (std::uint64_t vs = v; vs;) {
        int a = std::countr_zero(vs);
        vs &= vs - 1;
        std::uint64_t present = w & g.neighborMask(a);
        if (present)
            throw InvalidInputError("invalid move: edge already present " +
                                    pairName(a, std::countr_zero(present)));
    }

    Graph::Builder b(g.n());
    for (auto [x, y] : g.edges()) {
        bool uw = ((u >> x & 1) && (w >> y & 1)) || ((u >> y & 1) && (w >> x & 1));
        if (!uw) b.addEdge(x, y);
    }
    for (std::uint64_t vs = v; vs;) {
        int a = std::countr_zero(vs);
        vs &= vs - 1;
        for (std::uint64_t ws = w; ws;) {
            int c = std::countr_zero(ws);
            ws &= ws - 1;
            b.addEdge(a, c);
        }
    }
    return b.build();
}

Graph parseGraph6(std::string_view text) {
    // strip an optional trailing newline, as emitted by common tooling
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty()) throw ParseError("graph6: empty input", 0);
    unsigned char h = static_cast<unsigned char>(text[0]);
    if (h == 126) throw UnsupportedError("graph6: long-form header (n >= 63) not supported");
    if (h < 63 || h > 125) throw ParseError("graph6: malformed header byte", 0);
    int n = h - 63;
    if (n < 1) throw ParseError("graph6: order 0 not representable", 0);
    int bits = n * (n - 1) / 2;
    std::size_t body = (static_cast<std::size_t>(bits) + 5) / 6;
    if (text.size() != 1 + body)
        throw ParseError("graph6: expected " + std::to_string(1 + body) + " bytes, got " +
                             std::to_string(text.size()),
                         std::min(text.size(), 1 + body));

    Graph::Builder b(n);
    int bitIndex = 0;
    int col = 1, row = 0;  // upper triangle, column-major
    for (std::size_t i = 1; i < text.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw ParseError("graph6: body byte out of range", i);
        int value = c - 63;
        for (int s = 5; s >= 0; --s, ++bitIndex) {
            int on = (value >> s) & 1;
            if (bitIndex < bits) {
                if (on) b.addEdge(row, col);
                if (++row == col) {
                    row = 0;
                    ++col;
                }
            } else if (on) {
                throw ParseError("graph6: nonzero padding bit", i);
            }
        }
    }
    return b.build();
}

std::string emitGraph6(const Graph& g) {
    int n = g.n();
    if (n > 62) throw UnsupportedError("graph6: n >= 63 needs the long form, not supported");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int acc = 0, accBits = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.hasEdge(row, col) ? 1 : 0);
            if (++accBits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                accBits = 0;
            }
        }
    if (accBits > 0) out.push_back(static_cast<char>((acc << (6 - accBits)) + 63));
    return out;
}

Graph parseEdgeList(std::istream& in) {
    int n = 0;
    long m = 0;
    if (!(in >> n >> m)) throw ParseError("edge list: missing 'n m' header", 0);
    if (n < 1) throw InvalidInputError("edge list: invalid order " + std::to_string(n));
    Graph::Builder b(n);
    for (long i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v))
            throw ParseError("edge list: expected " + std::to_string(m) + " edges, got " +
                                 std::to_string(i),
                             0);
        b.addEdge(u, v);
    }
    return b.build();
}

std::string emitEdgeList(const Graph& g) {
    std::ostringstream out;
    auto es = g.edges();
    out << g.n() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
    return out.str();
}

namespace {

// Joint color refinement: signatures are matched across both graphs so the
// resulting color ids are directly comparable.
std::pair<std::vector<int>, std::vector<int>> refineJointly(const Graph& g1, const Graph& g2) {
    int n = g1.n();
    std::vector<int> c1(n), c2(n);
    for (int v = 0; v < n; ++v) c1[v] = g1.degree(v);
    for (int v = 0; v < n; ++v) c2[v] = g2.degree(v);

    for (int round = 0; round < n; ++round) {
        std::map<std::vector<int>, int> ids;
        auto signature = [&](const Graph& g, const std::vector<int>& c, int v) {
            std::vector<int> sig{c[v]};
            std::uint64_t nb = g.neighborMask(v);
            while (nb) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                sig.push_back(c[u]);
            }
            std::sort(sig.begin() + 1, sig.end());
            return sig;
        };
        std::vector<std::vector<int>> sigs1(n), sigs2(n);
        for (int v = 0; v < n; ++v) sigs1[v] = signature(g1, c1, v);
        for (int v = 0; v < n; ++v) sigs2[v] = signature(g2, c2, v);
        for (int v = 0; v < n; ++v) ids.emplace(sigs1[v], 0);
        for (int v = 0; v < n; ++v) ids.emplace(sigs2[v], 0);
        int next = 0;
        for (auto& [sig, id] : ids) id = next++;
        std::vector<int> n1(n), n2(n);
        for (int v = 0; v < n; ++v) n1[v] = ids[sigs1[v]];
        for (int v = 0; v < n; ++v) n2[v] = ids[sigs2[v]];
        if (n1 == c1 && n2 == c2) break;
        c1 = std::move(n1);
        c2 = std::move(n2);
    }
    return {c1, c2};
}

bool extendMapping(const Graph& g1, const Graph& g2, const std::vector<int>& order,
                   std::size_t pos, std::vector<int>& map, std::uint64_t& used,
                   const std::vector<int>& c1, const std::vector<int>& c2) {
    if (pos == order.size()) return true;
    int v = order[pos];
    for (int w = 0; w < g2.n(); ++w) {
        if ((used >> w) & 1) continue;
        if (c2[w] != c1[v]) continue;
        bool ok = true;
        for (std::size_t i = 0; i < pos && ok; ++i) {
            int a = order[i];
            if (g1.hasEdge(v, a) != g2.hasEdge(w, map[a])) ok = false;
        }
        if (!ok) continue;
        map[v] = w;
        used |= std::uint64_t{1} << w;
        if (extendMapping(g1, g2, order, pos + 1, map, used, c1, c2)) return true;
        used &= ~(std::uint64_t{1} << w);
    }
    return false;
}

}  // namespace

bool areIsomorphic(const Graph& g1, const Graph& g2) {
    if (g1.n() > 12 || g2.n() > 12)
        throw UnsupportedError("areIsomorphic supports n <= 12");
    if (g1.n() != g2.n() || g1.edgeCount() != g2.edgeCount()) return false;
    int n = g1.n();

    auto [c1, c2] = refineJointly(g1, g2);
    std::vector<int> h1 = c1, h2 = c2;
    std::sort(h1.begin(), h1.end());
    std::sort(h2.begin(), h2.end());
    if (h1 != h2) return false;

    // rarest colors first keeps the backtracking shallow
    std::vector<int> classSize(n + 1, 0);
    for (int v = 0; v < n; ++v) ++classSize[c1[v]];
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (classSize[c1[a]] != classSize[c1[b]]) return classSize[c1[a]] < classSize[c1[b]];
        if (c1[a] != c1[b]) return c1[a] < c1[b];
        return a < b;
    });

    std::vector<int> map(n, -1);
    std::uint64_t used = 0;
    return extendMapping(g1, g2, order, 0, map, used, c1, c2);
}

}  // namespace aalpha
