#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aalpha/errors.hpp"

namespace aalpha {

// Undirected simple graph on {0, ..., n-1}. Adjacency is one 64-bit
// neighborhood mask per vertex, which keeps BFS, degree and shift operations
// at a handful of word instructions during enumeration. Immutable after
// construction; all free functions below are pure.
class Graph {
public:
    static constexpr int kMaxVertices = 64;

    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    // Bit b of `mask` is the edge pairAt(n, b), pairs ordered
    // (0,1),(0,2),...,(0,n-1),(1,2),... Used by the labeled enumeration.
    static Graph fromEdgeMask(int n, std::uint64_t mask);
    static std::pair<int, int> pairAt(int n, int bit);

    int n() const { return n_; }
    int edgeCount() const;
    int degree(int v) const;
    int maxDegree() const;
    bool hasEdge(int u, int v) const;
    std::uint64_t neighborMask(int v) const { return adj_[v]; }
    const std::uint64_t* adjData() const { return adj_.data(); }
    std::uint64_t vertexMask() const;
    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

    class Builder {
    public:
        explicit Builder(int n);
        Builder& addEdge(int u, int v);
        Graph build() const;

    private:
        int n_;
        std::vector<std::uint64_t> adj_;
    };

private:
    explicit Graph(int n);
    Graph(int n, std::vector<std::uint64_t> adj) : n_(n), adj_(std::move(adj)) {}
    void addEdgeUnchecked(int u, int v);

    int n_;
    std::vector<std::uint64_t> adj_;
};

// Cell sizes (n_0, ..., n_d) of a sequential join of cliques
// K_{n_0} v K_{n_1} v ... v K_{n_d}.
struct JoinSpec {
    std::vector<int> parts;

    JoinSpec() = default;
    JoinSpec(std::initializer_list<int> p) : parts(p) {}
    explicit JoinSpec(std::vector<int> p) : parts(std::move(p)) {}

    int d() const { return static_cast<int>(parts.size()) - 1; }
    int order() const;
    void validate() const;
    // First vertex of each cell, plus the total order as a sentinel.
    std::vector<int> cellStarts() const;

    friend bool operator==(const JoinSpec&, const JoinSpec&) = default;
};

// Vertex sets of a Kelmans-type edge shift, as bitmasks: the W-side edges are
// detached from U and reattached to V.
struct ShiftMove {
    std::uint64_t source = 0;  // U
    std::uint64_t target = 0;  // V
    std::uint64_t moved = 0;   // W

    static ShiftMove of(const std::vector<int>& u, const std::vector<int>& v,
                        const std::vector<int>& w);
};

Graph complete(int n);
Graph path(int n);
Graph sequentialJoin(const JoinSpec& spec);

bool isConnected(const Graph& g);
// nullopt marks a disconnected graph; diameter of K_1 is 0.
std::optional<int> diameter(const Graph& g);
// Definition-level check: removing every vertex subset of size < k leaves a
// connected graph. Supported for n <= 12 only.
bool isKConnected(const Graph& g, int k);
Graph applyShift(const Graph& g, const ShiftMove& move);

Graph parseGraph6(std::string_view text);
std::string emitGraph6(const Graph& g);
// Text format "n m\nu v\n..." with 0-based vertices.
Graph parseEdgeList(std::istream& in);
std::string emitEdgeList(const Graph& g);

// Degree-sequence + color-refinement pruning with a backtracking permutation
// search; supported for n <= 12.
bool areIsomorphic(const Graph& g1, const Graph& g2);

namespace detail {

// BFS closure of `start` within ~removed.
std::uint64_t reachable(int n, const std::uint64_t* adj, int start, std::uint64_t removed);
bool connectedBits(int n, const std::uint64_t* adj);
// -1 when some vertex is unreachable from v.
int eccentricity(int n, const std::uint64_t* adj, int v);
std::optional<int> diameterBits(int n, const std::uint64_t* adj);
// Assumes the graph is connected; checks all removals of < k vertices.
bool kConnectedBits(int n, const std::uint64_t* adj, int k);

}  // namespace detail

}  // namespace aalpha
