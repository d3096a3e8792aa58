// qtflows: command-line front end for (q,t)-Ehrhart functions of flow
// polytopes of threshold graphs, spanning-tree and parking-function
// statistics, Tutte polynomials, theorem verification and conjecture scans.

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qtflows/flow.hpp"
#include "qtflows/graph.hpp"
#include "qtflows/poly.hpp"
#include "qtflows/tree.hpp"
#include "qtflows/verify.hpp"

namespace {

using namespace qtflows;

struct GraphOptions {
    std::string beta;
    std::string degrees;
    int complete = 0;
};

void add_graph_options(CLI::App* cmd, GraphOptions& opts) {
    auto* b = cmd->add_option("--beta", opts.beta, "binary construction sequence, e.g. 1010");
    auto* d = cmd->add_option("--degrees", opts.degrees, "reverse degree sequence, e.g. 4,3,2,2,1");
    auto* c = cmd->add_option("--complete", opts.complete, "complete graph on the given vertex count");
    b->excludes(d)->excludes(c);
    d->excludes(c);
}

std::vector<long> parse_csv(const std::string& s) {
    std::vector<long> out;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        out.push_back(std::stol(s.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return out;
}

ThresholdGraph build_graph(const GraphOptions& opts) {
    if (!opts.beta.empty()) {
        std::vector<int> beta;
        for (char ch : opts.beta) {
            if (ch != '0' && ch != '1') throw CLI::ValidationError("--beta must be a 0/1 string");
            beta.push_back(ch - '0');
        }
        return ThresholdGraph::from_binary(beta);
    }
    if (!opts.degrees.empty()) {
        std::vector<int> d;
        for (long x : parse_csv(opts.degrees)) d.push_back(static_cast<int>(x));
        return ThresholdGraph::from_degree_sequence(d);
    }
    if (opts.complete >= 2) return ThresholdGraph::complete(opts.complete - 1);
    throw CLI::ValidationError("exactly one of --beta, --degrees, --complete is required");
}

// Netflow in the graph's canonical labeling. With --beta input the vector is
// given in construction labels and gets permuted along the relabeling.
std::vector<long> build_netflow(const ThresholdGraph& g, const std::string& a_csv) {
    std::vector<long> a =
        a_csv.empty() ? std::vector<long>(g.n(), 1) : parse_csv(a_csv);
    if (static_cast<int>(a.size()) != g.n())
        throw CLI::ValidationError("--a must have length n = " + std::to_string(g.n()));
    const std::vector<int>& perm = g.beta_to_canonical();
    bool identity = true;
    for (int v = 0; v < g.num_vertices(); ++v) identity = identity && perm[v] == v;
    if (identity) return a;
    if (perm[0] != 0) {
        for (long x : a)
            if (x != a[0])
                throw CLI::ValidationError("relabeling moves the sink; only uniform --a is supported here");
        return a;
    }
    std::vector<long> out(g.n());
    for (int v = 1; v < g.num_vertices(); ++v) out[perm[v] - 1] = a[v - 1];
    return out;
}

nlohmann::json graph_json(const ThresholdGraph& g) {
    nlohmann::json j;
    j["beta"] = g.beta();
    j["degrees"] = g.degrees();
    j["bar_d"] = std::vector<int>(g.bar_d_sequence().begin() + 1, g.bar_d_sequence().end());
    return j;
}

nlohmann::json histogram_json(const std::map<long, long>& h) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, v] : h) j[std::to_string(k)] = v;
    return j;
}

int run_ehr(const GraphOptions& gopts, const std::string& a_csv, const std::string& spec,
            bool json) {
    const ThresholdGraph g = build_graph(gopts);
    const std::vector<long> a = build_netflow(g, a_csv);
    const QTPolynomial ehr = ehrhart_qt(g, a);
    std::string rendered;
    if (spec.empty()) {
        rendered = ehr.str();
    } else {
        SpecMode mode;
        if (spec == "t1")
            mode = SpecMode::t_one;
        else if (spec == "t0")
            mode = SpecMode::t_zero;
        else if (spec == "tqinv")
            mode = SpecMode::t_qinv;
        else
            throw CLI::ValidationError("--spec must be t1, t0 or tqinv");
        rendered = specialize(ehr, mode).str();
    }
    if (json) {
        nlohmann::json j;
        j["graph"] = graph_json(g);
        j["a"] = a;
        if (!spec.empty()) j["spec"] = spec;
        j["poly"] = rendered;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << rendered << "\n";
    }
    return 0;
}

int run_trees(const GraphOptions& gopts, const std::string& stat, bool json) {
    const ThresholdGraph g = build_graph(gopts);
    std::map<long, long> hist;
    for_each_spanning_tree(g, [&hist, &stat](const SpanningTree& t) {
        ++hist[stat == "kappa" ? kappa(t) : inv(t)];
    });
    nlohmann::json j;
    j[stat + "_histogram"] = histogram_json(hist);
    if (json) j["graph"] = graph_json(g);
    std::cout << j.dump() << "\n";
    return 0;
}

int run_parking(const GraphOptions& gopts, const std::string& stat, bool json) {
    const ThresholdGraph g = build_graph(gopts);
    std::map<long, long> hist;
    for (const ParkingFunction& p : enumerate_parking_functions(g))
        ++hist[stat == "pmaj" ? pmaj(p) : codeg(p)];
    nlohmann::json j;
    j[stat + "_histogram"] = histogram_json(hist);
    if (json) j["graph"] = graph_json(g);
    std::cout << j.dump() << "\n";
    return 0;
}

int run_tutte(const GraphOptions& gopts, const std::string& a_csv, const std::string& at) {
    const ThresholdGraph g = build_graph(gopts);
    Multigraph m = a_csv.empty() ? to_multigraph(g) : inflate(g, build_netflow(g, a_csv));
    QTPolynomial t = tutte(m);
    if (!at.empty()) {
        const std::vector<std::string> toks = [&at] {
            std::vector<std::string> v;
            size_t pos = 0;
            while (pos <= at.size()) {
                size_t comma = at.find(',', pos);
                if (comma == std::string::npos) comma = at.size();
                v.push_back(at.substr(pos, comma - pos));
                pos = comma + 1;
            }
            return v;
        }();
        if (toks.size() != 2) throw CLI::ValidationError("--at needs two values, e.g. 1,q");
        t = substitute(t, SlotValue::parse(toks[0]), SlotValue::parse(toks[1]));
    }
    std::cout << t.str() << "\n";
    return 0;
}

int run_tesler(const GraphOptions& gopts, const std::string& a_csv, bool list) {
    const ThresholdGraph g = build_graph(gopts);
    const std::vector<long> a = build_netflow(g, a_csv);
    long long count = 0;
    for_each_flow(g, a, [&count, list](const IntegerFlow& f) {
        ++count;
        if (!list) return;
        const auto b = flow_to_tesler(f);
        bool first = true;
        for (const auto& row : b)
            for (long v : row) {
                if (!first) std::cout << ' ';
                std::cout << v;
                first = false;
            }
        std::cout << "\n";
    });
    if (!list) std::cout << count << "\n";
    return 0;
}

int run_poset(int n, bool json) {
    const PosetPn poset(n);
    nlohmann::json j;
    j["n"] = n;
    j["elements"] = nlohmann::json::array();
    for (int i = 0; i < poset.size(); ++i) {
        nlohmann::json e;
        e["beta"] = poset.element(i).beta();
        e["degrees"] = poset.element(i).degrees();
        j["elements"].push_back(e);
    }
    j["covers"] = poset.covers();
    if (json) {
        std::cout << j.dump() << "\n";
    } else {
        std::cout << poset.size() << " elements, " << poset.covers().size() << " covers\n";
        for (const auto& [h, g] : poset.covers())
            std::cout << poset.element(h).beta_string() << " < " << poset.element(g).beta_string()
                      << "\n";
    }
    return 0;
}

int emit_report(VerificationReport report, bool json) {
    // stdout is byte-identical across runs for fixed arguments and seed;
    // wall-clock timing goes to stderr.
    std::cerr << report.theorem << ": " << report.elapsed_ms << " ms\n";
    report.elapsed_ms = 0;
    if (json) {
        std::cout << report.to_json() << "\n";
    } else {
        std::cout << report.theorem << ": " << (report.ok() ? "PASS" : "FAIL") << " ("
                  << report.instances << " instances, " << report.failures.size()
                  << " failures)\n";
        for (const auto& f : report.failures) {
            std::cout << "  failure: beta=[";
            for (size_t i = 0; i < f.beta.size(); ++i) std::cout << (i ? "," : "") << f.beta[i];
            std::cout << "] a=[";
            for (size_t i = 0; i < f.a.size(); ++i) std::cout << (i ? "," : "") << f.a[i];
            std::cout << "] lhs=" << f.lhs << " rhs=" << f.rhs << "\n";
        }
    }
    return report.ok() ? 0 : 1;
}

int scan_default_nmax() {
    if (const char* env = std::getenv("QTFLOWS_SCAN_NMAX")) return std::atoi(env);
    return 6;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"(q,t)-Ehrhart functions of flow polytopes of threshold graphs"};
    app.require_subcommand(1);

    GraphOptions gopts;
    std::string a_csv, spec, stat = "inv", pstat = "codeg", at, verify_which, scan_which;
    bool json = false, list = false;
    int poset_n = 3;
    int n_max = 5, k_max = 6, c_max = 6, la_max = 4, d_max = 4, z_max = 4;
    long a_max = 3;
    std::uint64_t seed = kDefaultSeed;

    auto* ehr = app.add_subcommand("ehr", "(q,t)-Ehrhart polynomial of the flow polytope");
    add_graph_options(ehr, gopts);
    ehr->add_option("--a", a_csv, "netflow vector, e.g. 1,2,1 (default all ones)");
    ehr->add_option("--spec", spec, "specialization: t1, t0 or tqinv");
    ehr->add_flag("--json", json);

    auto* trees = app.add_subcommand("trees", "spanning-tree statistic histogram");
    add_graph_options(trees, gopts);
    trees->add_option("--stat", stat)->check(CLI::IsMember({"inv", "kappa"}));
    trees->add_flag("--json", json);

    auto* parking = app.add_subcommand("parking", "G-parking-function statistic histogram");
    add_graph_options(parking, gopts);
    parking->add_option("--stat", pstat)->check(CLI::IsMember({"codeg", "pmaj"}));
    parking->add_flag("--json", json);

    auto* tutte_cmd = app.add_subcommand("tutte", "Tutte polynomial (of the inflation when --a given)");
    add_graph_options(tutte_cmd, gopts);
    tutte_cmd->add_option("--a", a_csv, "inflate edges by the netflow vector");
    tutte_cmd->add_option("--at", at, "evaluate at the pair, e.g. 1,q");

    auto* tesler = app.add_subcommand("tesler", "Tesler matrices of the integer flows");
    add_graph_options(tesler, gopts);
    tesler->add_option("--a", a_csv);
    tesler->add_flag("--list", list, "stream matrices row-major, one per line");

    auto* poset = app.add_subcommand("poset", "poset of connected threshold graphs");
    poset->add_option("--n", poset_n)->required();
    poset->add_flag("--json", json);

    auto* verify = app.add_subcommand("verify", "machine-check a theorem");
    verify->add_option("which", verify_which)
        ->required()
        ->check(CLI::IsMember({"t1", "t0", "qinv", "lemma-t0", "lemma-q"}));
    verify->add_option("--n-max", n_max);
    verify->add_option("--a-max", a_max);
    verify->add_option("--seed", seed);
    verify->add_option("--k-max", k_max);
    verify->add_option("--c-max", c_max);
    verify->add_option("--la-max", la_max, "lemma-q bound on a");
    verify->add_option("--d-max", d_max);
    verify->add_option("--z-max", z_max);
    verify->add_flag("--json", json);

    auto* scan = app.add_subcommand("scan", "conjecture scan over all connected threshold graphs");
    scan->add_option("which", scan_which)
        ->required()
        ->check(CLI::IsMember({"positivity", "k-minus-g", "poset"}));
    int scan_nmax = scan_default_nmax();
    scan->add_option("--n-max", scan_nmax);
    scan->add_flag("--json", json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(ehr)) return run_ehr(gopts, a_csv, spec, json);
        if (app.got_subcommand(trees)) return run_trees(gopts, stat, json);
        if (app.got_subcommand(parking)) return run_parking(gopts, pstat, json);
        if (app.got_subcommand(tutte_cmd)) return run_tutte(gopts, a_csv, at);
        if (app.got_subcommand(tesler)) return run_tesler(gopts, a_csv, list);
        if (app.got_subcommand(poset)) return run_poset(poset_n, json);
        if (app.got_subcommand(verify)) {
            VerificationReport report;
            if (verify_which == "t1")
                report = verify_t1(n_max, a_max, seed);
            else if (verify_which == "t0")
                report = verify_t0(n_max, a_max, seed);
            else if (verify_which == "qinv")
                report = verify_qinv(n_max, a_max, seed);
            else if (verify_which == "lemma-t0")
                report = verify_lemma_t0(k_max, c_max);
            else
                report = verify_lemma_q(la_max, d_max, z_max);
            return emit_report(report, json);
        }
        if (app.got_subcommand(scan)) {
            ScanKind kind = scan_which == "positivity" ? ScanKind::positivity
                            : scan_which == "k-minus-g" ? ScanKind::complete_minus_g
                                                        : ScanKind::poset_covers;
            return emit_report(scan_conjectures(kind, scan_nmax), json);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
