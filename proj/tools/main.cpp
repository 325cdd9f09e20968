#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "aalpha/graph.hpp"
#include "aalpha/jsonio.hpp"
#include "aalpha/perron.hpp"
#include "aalpha/quotient.hpp"
#include "aalpha/search.hpp"
#include "aalpha/spectra.hpp"
#include "aalpha/verify.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

// exit codes: 0 ok / 2 input error / 3 claim mismatch / 4 infeasible / 5 usage
enum ExitCode { kOk = 0, kInputError = 2, kMismatch = 3, kInfeasible = 4, kUsage = 5 };

std::string fmt(double v) { return aalpha::Json::formatDouble(v); }

std::vector<double> parseAlphaList(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        double v = std::stod(item, &used);
        if (used != item.size())
            throw aalpha::InvalidInputError("bad alpha value: " + item);
        aalpha::Alpha check(v);  // range check
        out.push_back(v);
    }
    if (out.empty()) throw aalpha::InvalidInputError("no alpha values given");
    return out;
}

std::vector<int> parseIntList(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    return out;
}

aalpha::Graph loadGraph(const std::string& graph6, const std::string& edgesFile) {
    if (!graph6.empty() && !edgesFile.empty())
        throw aalpha::InvalidInputError("give either --graph6 or --edges, not both");
    if (!graph6.empty()) return aalpha::parseGraph6(graph6);
    if (!edgesFile.empty()) {
        std::ifstream in(edgesFile);
        if (!in) throw aalpha::InvalidInputError("cannot open " + edgesFile);
        return aalpha::parseEdgeList(in);
    }
    throw aalpha::InvalidInputError("no graph given: use --graph6 or --edges");
}

aalpha::Json checksToJson(const aalpha::CheckReport& rep) {
    auto arr = aalpha::Json::array();
    for (const auto& r : rep.records) {
        auto o = aalpha::Json::object();
        o.set("context", r.context)
            .set("claim", r.claim)
            .set("lhs", r.lhs)
            .set("rhs", r.rhs)
            .set("margin", r.margin)
            .set("pass", r.pass);
        if (r.exploratory) o.set("exploratory", true);
        arr.push(std::move(o));
    }
    return arr;
}

void printChecksText(const aalpha::CheckReport& rep) {
    for (const auto& r : rep.records) {
        const char* tag = r.exploratory ? "note" : (r.pass ? "pass" : "FAIL");
        std::cout << "[" << tag << "] " << r.claim;
        if (!r.context.empty()) std::cout << "  @ " << r.context;
        std::cout << "  lhs=" << fmt(r.lhs) << " rhs=" << fmt(r.rhs)
                  << " margin=" << fmt(r.margin) << "\n";
    }
    int expl = 0;
    for (const auto& r : rep.records) expl += r.exploratory ? 1 : 0;
    std::cout << rep.records.size() << " records, " << rep.failures() << " failures, " << expl
              << " informational\n";
}

void emitJson(const std::string& command, aalpha::Json params, aalpha::Json results,
              aalpha::Json checks) {
    auto root = aalpha::Json::object();
    root.set("command", command)
        .set("params", std::move(params))
        .set("results", std::move(results))
        .set("checks", std::move(checks))
        .set("version", kVersion);
    std::cout << root.dump() << "\n";
}

int runLambda(const std::string& graph6, const std::string& edgesFile,
              const std::vector<double>& alphas, double tol, bool json) {
    aalpha::Graph g = loadGraph(graph6, edgesFile);
    auto results = aalpha::Json::array();
    for (double al : alphas) {
        auto res = aalpha::spectralRadius(g, aalpha::Alpha(al), tol);
        if (json) {
            auto o = aalpha::Json::object();
            o.set("alpha", al)
                .set("lambda", res.lambda)
                .set("residual", res.residual)
                .set("iterations", res.iterations);
            auto pv = aalpha::Json::array();
            for (double x : res.perron) pv.push(x);
            o.set("perron", std::move(pv));
            results.push(std::move(o));
        } else {
            std::cout << "alpha=" << fmt(al) << "  lambda=" << fmt(res.lambda)
                      << "  residual=" << fmt(res.residual) << "  iterations=" << res.iterations
                      << "\n";
        }
    }
    if (json) {
        auto params = aalpha::Json::object();
        params.set("n", g.n()).set("m", g.edgeCount()).set("tol", tol);
        emitJson("lambda", std::move(params), std::move(results), aalpha::Json::array());
    }
    return kOk;
}

int runJoin(const std::vector<int>& parts, const std::vector<double>& alphas, bool full,
            bool json) {
    aalpha::JoinSpec spec{std::vector<int>(parts)};
    spec.validate();
    aalpha::Graph g = aalpha::sequentialJoin(spec);
    auto diam = aalpha::diameter(g);

    auto results = aalpha::Json::array();
    if (!json) {
        std::cout << "join order=" << g.n() << " edges=" << g.edgeCount() << " diameter="
                  << (diam ? std::to_string(*diam) : std::string("infinite")) << "\n";
    }
    for (double al : alphas) {
        double q = aalpha::quotientSpectralRadius(spec, aalpha::Alpha(al));
        double f = 0.0;
        if (full) f = aalpha::spectralRadius(g, aalpha::Alpha(al)).lambda;
        if (json) {
            auto o = aalpha::Json::object();
            o.set("alpha", al).set("lambda", q);
            if (full) o.set("fullLambda", f).set("difference", std::abs(q - f));
            results.push(std::move(o));
        } else {
            std::cout << "alpha=" << fmt(al) << "  lambda=" << fmt(q);
            if (full) std::cout << "  full=" << fmt(f) << "  diff=" << fmt(std::abs(q - f));
            std::cout << "\n";
        }
    }
    if (json) {
        auto params = aalpha::Json::object();
        auto pj = aalpha::Json::array();
        for (int p : parts) pj.push(p);
        params.set("parts", std::move(pj)).set("order", g.n());
        auto res = aalpha::Json::object();
        res.set("perAlpha", std::move(results));
        if (g.n() <= 62) res.set("graph6", aalpha::emitGraph6(g));
        if (diam) res.set("diameter", *diam);
        emitJson("join", std::move(params), std::move(res), aalpha::Json::array());
    }
    return kOk;
}

int runBounds(const std::string& graph6, const std::string& edgesFile,
              const std::vector<double>& alphas, int nMid, int k, bool json) {
    auto results = aalpha::Json::array();
    auto params = aalpha::Json::object();
    if (nMid > 0 || k > 0) {
        if (nMid <= 0 || k <= 0)
            throw aalpha::InvalidInputError("theorem bounds need both --nmid and --k");
        params.set("nMid", nMid).set("k", k);
        for (double al : alphas) {
            auto tb = aalpha::theoremBounds(nMid, k, aalpha::Alpha(al));
            if (json) {
                auto o = aalpha::Json::object();
                o.set("alpha", al).set("lower", tb.lower).set("upper", tb.upper);
                results.push(std::move(o));
            } else {
                std::cout << "alpha=" << fmt(al) << "  lower=" << fmt(tb.lower)
                          << "  upper=" << fmt(tb.upper) << "\n";
            }
        }
        if (json)
            emitJson("bounds", std::move(params), std::move(results), aalpha::Json::array());
        return kOk;
    }

    aalpha::Graph g = loadGraph(graph6, edgesFile);
    params.set("n", g.n()).set("m", g.edgeCount());
    for (double al : alphas) {
        aalpha::Alpha a(al);
        auto db = aalpha::degreeBounds(g, a);
        double delta = aalpha::deltaLowerBound(g.maxDegree(), a);
        double lam = aalpha::spectralRadius(g, a).lambda;
        if (json) {
            auto o = aalpha::Json::object();
            o.set("alpha", al)
                .set("lower", db.lower)
                .set("upper", db.upper)
                .set("deltaLower", delta)
                .set("lambda", lam);
            results.push(std::move(o));
        } else {
            std::cout << "alpha=" << fmt(al) << "  2m/n=" << fmt(db.lower)
                      << "  deltaLower=" << fmt(delta) << "  lambda=" << fmt(lam)
                      << "  upper=" << fmt(db.upper) << "\n";
        }
    }
    if (json) emitJson("bounds", std::move(params), std::move(results), aalpha::Json::array());
    return kOk;
}

std::string compString(const std::vector<int>& comp) {
    std::string s = "(";
    for (std::size_t i = 0; i < comp.size(); ++i)
        s += (i ? "," : "") + std::to_string(comp[i]);
    return s + ")";
}

int runSearch(int n, int k, int d, const std::vector<double>& alphas, const std::string& mode,
              const std::string& csvFile, bool json) {
    bool exhaustive = mode == "exhaustive";
    if (!exhaustive && mode != "critical")
        throw aalpha::InvalidInputError("mode must be 'exhaustive' or 'critical'");

    bool mismatchInScope = false;
    auto results = aalpha::Json::array();
    std::ofstream csv;
    if (!csvFile.empty()) {
        csv.open(csvFile);
        if (!csv) throw aalpha::InvalidInputError("cannot open " + csvFile);
        csv << "composition,lambda\n";
    }

    for (double al : alphas) {
        aalpha::SearchParams p{n, k, d, aalpha::Alpha(al),
                               exhaustive ? aalpha::SearchMode::exhaustive
                                          : aalpha::SearchMode::criticalClass};
        aalpha::SearchReport rep =
            exhaustive ? aalpha::searchExhaustive(p) : aalpha::searchCriticalClass(p);
        if (rep.withinTheoremScope && !rep.matchesPrediction) mismatchInScope = true;

        if (csv.is_open())
            for (const auto& [comp, lambda] : rep.compositionTable) {
                csv << "\"";
                for (std::size_t i = 0; i < comp.size(); ++i)
                    csv << (i ? "," : "") << comp[i];
                csv << "\"," << fmt(lambda) << "\n";
            }

        if (json) {
            auto o = aalpha::Json::object();
            o.set("alpha", al)
                .set("bestLambda", rep.bestLambda)
                .set("matchesPrediction", rep.matchesPrediction)
                .set("withinTheoremScope", rep.withinTheoremScope)
                .set("runnerUpGap", rep.runnerUpGap);
            auto bg = aalpha::Json::array();
            for (const auto& s : rep.bestGraphs) bg.push(s);
            o.set("bestGraphs", std::move(bg));
            auto pj = aalpha::Json::array();
            for (int x : rep.predictedSpec.parts) pj.push(x);
            o.set("predicted", std::move(pj));
            if (!rep.bestCompositions.empty()) {
                auto bc = aalpha::Json::array();
                for (const auto& comp : rep.bestCompositions) {
                    auto cj = aalpha::Json::array();
                    for (int x : comp) cj.push(x);
                    bc.push(std::move(cj));
                }
                o.set("bestCompositions", std::move(bc));
            }
            auto st = aalpha::Json::object();
            st.set("visited", rep.stats.visited)
                .set("connectedPass", rep.stats.connectedPass)
                .set("diameterPass", rep.stats.diameterPass)
                .set("kConnectedPass", rep.stats.kConnectedPass)
                .set("evaluated", rep.stats.evaluated)
                .set("prunedByBound", rep.stats.prunedByBound);
            o.set("stats", std::move(st));
            results.push(std::move(o));
        } else {
            std::cout << "alpha=" << fmt(al) << "  best lambda=" << fmt(rep.bestLambda)
                      << "  predicted=" << compString(rep.predictedSpec.parts)
                      << (rep.withinTheoremScope ? "" : "  [outside theorem scope]")
                      << "  matches=" << (rep.matchesPrediction ? "yes" : "NO") << "\n";
            if (!rep.bestCompositions.empty()) {
                std::cout << "  argmax compositions:";
                for (const auto& comp : rep.bestCompositions)
                    std::cout << " " << compString(comp);
                std::cout << "\n";
            }
            if (!rep.bestGraphs.empty()) {
                std::cout << "  argmax graph6:";
                for (const auto& s : rep.bestGraphs) std::cout << " " << s;
                std::cout << "\n";
            }
            std::cout << "  gap to runner-up >= " << fmt(rep.runnerUpGap) << "  visited="
                      << rep.stats.visited << " evaluated=" << rep.stats.evaluated
                      << " pruned=" << rep.stats.prunedByBound << "\n";
        }
    }

    if (json) {
        auto params = aalpha::Json::object();
        params.set("n", n).set("k", k).set("d", d).set("mode", mode);
        emitJson("search", std::move(params), std::move(results), aalpha::Json::array());
    }
    return mismatchInScope ? kMismatch : kOk;
}

int runVerify(const std::string& suite, long trials, std::uint64_t seed, bool json) {
    aalpha::VerifyOptions opts;
    opts.trials = trials;
    opts.seed = seed;
    aalpha::CheckReport rep = aalpha::runVerifySuite(suite, opts);
    if (json) {
        auto params = aalpha::Json::object();
        params.set("suite", suite).set("trials", trials).set("seed", seed);
        auto res = aalpha::Json::object();
        res.set("records", static_cast<long>(rep.records.size()))
            .set("failures", rep.failures())
            .set("allPass", rep.allPass());
        emitJson("verify", std::move(params), std::move(res), checksToJson(rep));
    } else {
        printChecksText(rep);
    }
    return rep.allPass() ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"A_alpha spectral radius toolkit: exact quotients, closed forms and "
                 "extremal search over k-connected graphs of given diameter"};
    app.require_subcommand(1);

    std::string graph6, edgesFile, alphaText = "0", partsText, mode = "critical";
    std::string suite = "all", csvFile;
    int n = 0, k = 0, d = 0, nMid = 0, kTheorem = 0;
    long trials = 200;
    std::uint64_t seed = 1;
    double tol = 1e-10;
    bool json = false, full = false;

    auto* lambdaCmd = app.add_subcommand("lambda", "spectral radius of a graph");
    lambdaCmd->add_option("--graph6", graph6, "graph6 string");
    lambdaCmd->add_option("--edges", edgesFile, "edge-list file: 'n m' then 'u v' lines");
    lambdaCmd->add_option("--alpha", alphaText, "alpha value or comma list")->required();
    lambdaCmd->add_option("--tol", tol, "residual tolerance");
    lambdaCmd->add_flag("--json", json, "JSON output");

    auto* joinCmd = app.add_subcommand("join", "spectral radius of a sequential join of cliques");
    joinCmd->add_option("--parts", partsText, "cell sizes, e.g. 1,2,4,2,1")->required();
    joinCmd->add_option("--alpha", alphaText, "alpha value or comma list")->required();
    joinCmd->add_flag("--full", full, "also solve the realized graph and report the difference");
    joinCmd->add_flag("--json", json, "JSON output");

    auto* boundsCmd = app.add_subcommand("bounds", "spectral bounds for a graph, or the "
                                                   "extremal-family sandwich bounds");
    boundsCmd->add_option("--graph6", graph6, "graph6 string");
    boundsCmd->add_option("--edges", edgesFile, "edge-list file");
    boundsCmd->add_option("--nmid", nMid, "oversized-cell size (with --k)");
    boundsCmd->add_option("--k", kTheorem, "connectivity (with --nmid)");
    boundsCmd->add_option("--alpha", alphaText, "alpha value or comma list")->required();
    boundsCmd->add_flag("--json", json, "JSON output");

    auto* searchCmd = app.add_subcommand("search", "extremal graph search");
    searchCmd->add_option("--n", n, "order")->required();
    searchCmd->add_option("--k", k, "connectivity >= 2")->required();
    searchCmd->add_option("--d", d, "diameter >= 2")->required();
    searchCmd->add_option("--alpha", alphaText, "alpha value or comma list")->required();
    searchCmd->add_option("--mode", mode, "exhaustive | critical");
    searchCmd->add_option("--csv", csvFile, "write (composition, lambda) table (critical mode)");
    searchCmd->add_flag("--json", json, "JSON output");

    auto* verifyCmd = app.add_subcommand("verify", "run a verification suite");
    verifyCmd->add_option("--suite", suite,
                          "lemmas | closed-forms | perron | quotient | shifts | all");
    verifyCmd->add_option("--trials", trials, "randomized trial count");
    verifyCmd->add_option("--seed", seed, "random seed");
    verifyCmd->add_flag("--json", json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (verifyCmd->parsed()) {
            bool known = suite == "all";
            for (const auto& s : aalpha::verifySuiteNames()) known = known || s == suite;
            if (!known) {
                std::cerr << "unknown suite: " << suite << "\n";
                return kUsage;
            }
            return runVerify(suite, trials, seed, json);
        }
        if (lambdaCmd->parsed())
            return runLambda(graph6, edgesFile, parseAlphaList(alphaText), tol, json);
        if (joinCmd->parsed())
            return runJoin(parseIntList(partsText), parseAlphaList(alphaText), full, json);
        if (boundsCmd->parsed())
            return runBounds(graph6, edgesFile, parseAlphaList(alphaText), nMid, kTheorem, json);
        if (searchCmd->parsed())
            return runSearch(n, k, d, parseAlphaList(alphaText), mode, csvFile, json);
    } catch (const aalpha::InfeasibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kUsage;
}
