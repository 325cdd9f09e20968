#include "aalpha/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

namespace aalpha {

namespace {

constexpr double kTieBand = 1e-9;
// Retention bar sits below the predicted family's value by more than the
// solver's eigenvalue error, so the final tie set can never lose a member.
constexpr double kBarSlack = 1e-7;

void validateParams(int n, int k, int d) {
    if (k < 2) throw InvalidInputError("search: connectivity parameter k must be >= 2");
    if (d < 2) throw InvalidInputError("search: diameter d must be >= 2");
    if (n < 2) throw InvalidInputError("search: order n must be >= 2");
}

bool feasible(int n, int k, int d) { return n >= (d - 1) * k + 2; }

int threadCount() {
    if (const char* env = std::getenv("AALPHA_THREADS")) {
        int t = std::atoi(env);
        if (t >= 1) return std::min(t, 64);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(std::min(hw, 16u));
}

std::string compName(std::span<const int> comp) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < comp.size(); ++i) os << (i ? "," : "") << comp[i];
    os << ")";
    return os.str();
}

}  // namespace

namespace detail {

void forEachCriticalComposition(int n, int k, int d,
                                const std::function<void(std::span<const int>)>& fn) {
    int slots = d - 1, total = n - 2;
    if (slots < 1 || total < slots * k) return;
    std::vector<int> comp(static_cast<std::size_t>(slots));
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == slots - 1) {
            comp[pos] = remaining;
            fn(comp);
            return;
        }
        int maxHere = remaining - k * (slots - pos - 1);
        for (int v = k; v <= maxHere; ++v) {
            comp[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    rec(rec, 0, total);
}

std::vector<int> canonicalComposition(std::span<const int> comp) {
    std::vector<int> fwd(comp.begin(), comp.end());
    std::vector<int> rev(comp.rbegin(), comp.rend());
    return std::min(fwd, rev);
}

}  // namespace detail

JoinSpec predictedExtremal(int n, int k, int d) {
    validateParams(n, k, d);
    if (!feasible(n, k, d))
        throw InfeasibleError("infeasible class: need n >= (d-1)k+2 = " +
                              std::to_string((d - 1) * k + 2) + ", got n = " + std::to_string(n));
    int nMid = n - 2 - (d - 2) * k;
    std::vector<int> parts(static_cast<std::size_t>(d) + 1, k);
    parts.front() = 1;
    parts.back() = 1;
    parts[d / 2] = nMid;
    return JoinSpec(std::move(parts));
}

std::vector<JoinSpec> enumerateCriticalClass(int n, int k, int d) {
    validateParams(n, k, d);
    std::vector<JoinSpec> out;
    detail::forEachCriticalComposition(n, k, d, [&](std::span<const int> comp) {
        std::vector<int> parts;
        parts.reserve(comp.size() + 2);
        parts.push_back(1);
        parts.insert(parts.end(), comp.begin(), comp.end());
        parts.push_back(1);
        out.emplace_back(std::move(parts));
    });
    return out;
}

SearchReport searchCriticalClass(const SearchParams& p) {
    validateParams(p.n, p.k, p.d);
    SearchReport rep;
    rep.predictedSpec = predictedExtremal(p.n, p.k, p.d);
    int nMid = rep.predictedSpec.parts[p.d / 2];
    rep.withinTheoremScope = nMid >= 2 * p.k;

    double best = -std::numeric_limits<double>::infinity();
    std::vector<int> parts(static_cast<std::size_t>(p.d) + 1);
    parts.front() = 1;
    parts.back() = 1;
    detail::forEachCriticalComposition(p.n, p.k, p.d, [&](std::span<const int> comp) {
        std::copy(comp.begin(), comp.end(), parts.begin() + 1);
        double lambda = detail::joinLambda(parts, p.alpha.value);
        rep.compositionTable.emplace_back(std::vector<int>(comp.begin(), comp.end()), lambda);
        best = std::max(best, lambda);
    });
    rep.stats.visited = rep.compositionTable.size();
    rep.stats.evaluated = rep.compositionTable.size();
    if (rep.compositionTable.empty())
        throw InfeasibleError("searchCriticalClass: no compositions for these parameters");

    double runnerUp = -std::numeric_limits<double>::infinity();
    for (const auto& [comp, lambda] : rep.compositionTable) {
        if (lambda >= best - kTieBand) {
            auto canon = detail::canonicalComposition(comp);
            if (std::find(rep.bestCompositions.begin(), rep.bestCompositions.end(), canon) ==
                rep.bestCompositions.end())
                rep.bestCompositions.push_back(canon);
        } else {
            runnerUp = std::max(runnerUp, lambda);
        }
    }
    std::sort(rep.bestCompositions.begin(), rep.bestCompositions.end());
    rep.bestLambda = best;
    rep.runnerUpGap = std::isfinite(runnerUp) ? best - runnerUp : 0.0;

    std::vector<int> interior(rep.predictedSpec.parts.begin() + 1,
                              rep.predictedSpec.parts.end() - 1);
    auto predictedCanon = detail::canonicalComposition(interior);
    rep.matchesPrediction =
        std::find(rep.bestCompositions.begin(), rep.bestCompositions.end(), predictedCanon) !=
        rep.bestCompositions.end();

    if (p.n <= 62)
        for (const auto& comp : rep.bestCompositions) {
            std::vector<int> ps;
            ps.push_back(1);
            ps.insert(ps.end(), comp.begin(), comp.end());
            ps.push_back(1);
            rep.bestGraphs.push_back(emitGraph6(sequentialJoin(JoinSpec(std::move(ps)))));
        }
    return rep;
}

namespace {

struct ShardResult {
    SearchStats stats;
    std::vector<std::pair<std::uint64_t, double>> candidates;  // lambda >= bar
    double bestBelowBar = -std::numeric_limits<double>::infinity();
    double prunedUpper = -std::numeric_limits<double>::infinity();
};

void scanShard(int n, int k, int d, double alpha, double bar, std::uint64_t lo, std::uint64_t hi,
               const std::pair<int, int>* pairs, ShardResult& out) {
    std::array<std::uint64_t, 8> adj;
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
        ++out.stats.visited;
        adj.fill(0);
        std::uint64_t m = mask;
        while (m) {
            int b = std::countr_zero(m);
            m &= m - 1;
            auto [i, j] = pairs[b];
            adj[i] |= std::uint64_t{1} << j;
            adj[j] |= std::uint64_t{1} << i;
        }

        if (!detail::connectedBits(n, adj.data())) continue;
        ++out.stats.connectedPass;

        int maxEcc = 0;
        bool diamOk = true;
        for (int v = 0; v < n && diamOk; ++v) {
            int e = detail::eccentricity(n, adj.data(), v);
            if (e > d) diamOk = false;
            maxEcc = std::max(maxEcc, e);
        }
        if (!diamOk || maxEcc != d) continue;
        ++out.stats.diameterPass;

        if (!detail::kConnectedBits(n, adj.data(), k)) continue;
        ++out.stats.kConnectedPass;

        // cheap certified upper bound first
        double upper = 0.0;
        for (int v = 0; v < n; ++v) {
            double dv = std::popcount(adj[v]);
            std::uint64_t nb = adj[v];
            while (nb) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                double du = std::popcount(adj[u]);
                upper = std::max(upper, alpha * dv + (1.0 - alpha) * du);
            }
        }
        if (upper < bar) {
            ++out.stats.prunedByBound;
            out.prunedUpper = std::max(out.prunedUpper, upper);
            continue;
        }

        auto pw = detail::powerIterate(n, adj.data(), alpha, 1e-11, 200000, bar, nullptr);
        if (pw.converged) {
            ++out.stats.evaluated;
            if (pw.lambda >= bar)
                out.candidates.emplace_back(mask, pw.lambda);
            else
                out.bestBelowBar = std::max(out.bestBelowBar, pw.lambda);
        } else if (pw.stoppedEarly || pw.upperBound < bar) {
            ++out.stats.prunedByBound;
            out.prunedUpper = std::max(out.prunedUpper, std::min(pw.upperBound, bar));
        } else {
            throw ConvergenceError(
                "searchExhaustive: eigensolve did not converge on mask " + std::to_string(mask),
                SpectralResult{pw.lambda, {}, pw.residual, pw.iterations});
        }
    }
}

}  // namespace

SearchReport searchExhaustive(const SearchParams& p) {
    validateParams(p.n, p.k, p.d);
    if (p.n > 7)
        throw UnsupportedError("searchExhaustive supports n <= 7, got n = " + std::to_string(p.n));

    SearchReport rep;
    rep.predictedSpec = predictedExtremal(p.n, p.k, p.d);
    int nMid = rep.predictedSpec.parts[p.d / 2];
    rep.withinTheoremScope = nMid >= 2 * p.k;

    const int edgeBits = p.n * (p.n - 1) / 2;
    const std::uint64_t total = std::uint64_t{1} << edgeBits;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < p.n; ++i)
        for (int j = i + 1; j < p.n; ++j) pairs.emplace_back(i, j);

    const double bar = quotientSpectralRadius(rep.predictedSpec, p.alpha) - kBarSlack;

    // shards over the leading edge bits; workers pull shard indices
    const int shardBits = std::min(12, edgeBits);
    const std::uint64_t shardCount = std::uint64_t{1} << shardBits;
    const std::uint64_t shardLen = total >> shardBits;
    std::vector<ShardResult> results(shardCount);
    std::atomic<std::uint64_t> nextShard{0};
    std::exception_ptr failure;
    std::mutex failureLock;

    int threads = static_cast<int>(
        std::min<std::uint64_t>(static_cast<std::uint64_t>(threadCount()), shardCount));
    auto worker = [&] {
        for (;;) {
            std::uint64_t s = nextShard.fetch_add(1);
            if (s >= shardCount) return;
            try {
                scanShard(p.n, p.k, p.d, p.alpha.value, bar, s * shardLen, (s + 1) * shardLen,
                          pairs.data(), results[s]);
            } catch (...) {
                std::lock_guard<std::mutex> g(failureLock);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    std::vector<std::pair<std::uint64_t, double>> candidates;
    double bestBelowBar = -std::numeric_limits<double>::infinity();
    double prunedUpper = -std::numeric_limits<double>::infinity();
    for (const auto& r : results) {
        rep.stats.visited += r.stats.visited;
        rep.stats.connectedPass += r.stats.connectedPass;
        rep.stats.diameterPass += r.stats.diameterPass;
        rep.stats.kConnectedPass += r.stats.kConnectedPass;
        rep.stats.evaluated += r.stats.evaluated;
        rep.stats.prunedByBound += r.stats.prunedByBound;
        candidates.insert(candidates.end(), r.candidates.begin(), r.candidates.end());
        bestBelowBar = std::max(bestBelowBar, r.bestBelowBar);
        prunedUpper = std::max(prunedUpper, r.prunedUpper);
    }

    if (rep.stats.kConnectedPass == 0) {
        // feasible parameters always realize the predicted family, so this is
        // the defensive empty-class report
        rep.bestLambda = 0.0;
        return rep;
    }

    double best = -std::numeric_limits<double>::infinity();
    for (const auto& [mask, lambda] : candidates) best = std::max(best, lambda);
    if (!std::isfinite(best))
        throw Error("searchExhaustive: internal error, predicted family not found in scan");
    rep.bestLambda = best;

    double runnerUp = std::max(bestBelowBar, prunedUpper);
    std::sort(candidates.begin(), candidates.end());
    Graph predictedGraph = sequentialJoin(rep.predictedSpec);
    std::vector<Graph> reps;
    std::vector<std::vector<int>> repDegrees;
    for (const auto& [mask, lambda] : candidates) {
        if (lambda < best - kTieBand) {
            runnerUp = std::max(runnerUp, lambda);
            continue;
        }
        Graph g = Graph::fromEdgeMask(p.n, mask);
        std::vector<int> degs(p.n);
        for (int v = 0; v < p.n; ++v) degs[v] = g.degree(v);
        std::sort(degs.begin(), degs.end());
        bool known = false;
        for (std::size_t i = 0; i < reps.size() && !known; ++i)
            if (repDegrees[i] == degs && areIsomorphic(reps[i], g)) known = true;
        if (!known) {
            reps.push_back(g);
            repDegrees.push_back(std::move(degs));
            rep.bestGraphs.push_back(emitGraph6(g));
        }
    }
    rep.runnerUpGap = std::isfinite(runnerUp) ? best - runnerUp : 0.0;

    rep.matchesPrediction = false;
    for (const auto& g : reps)
        if (areIsomorphic(g, predictedGraph)) rep.matchesPrediction = true;
    return rep;
}

CheckReport verifyTheoremBoundsOnArgmax(const SearchParams& p) {
    JoinSpec predicted = predictedExtremal(p.n, p.k, p.d);
    int nMid = predicted.parts[p.d / 2];
    if (nMid < 2 * p.k)
        throw OutOfScopeError("verifyTheoremBoundsOnArgmax: nMid = " + std::to_string(nMid) +
                              " < 2k = " + std::to_string(2 * p.k));
    TheoremBounds tb = theoremBounds(nMid, p.k, p.alpha);
    double lambda = spectralRadius(sequentialJoin(predicted), p.alpha).lambda;

    std::ostringstream ctx;
    ctx << "n=" << p.n << " k=" << p.k << " d=" << p.d << " alpha=" << p.alpha.value
        << " predicted=" << compName(predicted.parts);

    CheckReport rep;
    CheckRecord lo;
    lo.context = ctx.str();
    lo.claim = "theorem lower bound < lambda";
    lo.lhs = tb.lower;
    lo.rhs = lambda;
    lo.margin = lambda - tb.lower;
    lo.pass = lo.margin > kTieBand;
    rep.records.push_back(lo);

    CheckRecord hi;
    hi.context = ctx.str();
    hi.claim = "lambda < theorem upper bound (nMid+2k-1)";
    hi.lhs = lambda;
    hi.rhs = tb.upper;
    hi.margin = tb.upper - lambda;
    hi.pass = hi.margin > kTieBand;
    rep.records.push_back(hi);
    return rep;
}

}  // namespace aalpha
