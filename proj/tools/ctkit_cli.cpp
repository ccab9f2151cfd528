#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ctkit/contraction.hpp"
#include "ctkit/gadgets.hpp"
#include "ctkit/induced.hpp"
#include "ctkit/io.hpp"
#include "ctkit/subdivision.hpp"
#include "suites.hpp"

using namespace ctkit;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailure = 1, kParse = 2, kPrecondition = 3, kDisagree = 4, kTimeout = 5 };

int exit_for(Errc c) {
    switch (c) {
    case Errc::Parse:
    case Errc::InvalidSpec:
    case Errc::InvalidFormula:
    case Errc::SelfLoop:
    case Errc::DuplicateEdge:
    case Errc::IndexOutOfRange: return kParse;
    case Errc::IsolatedVertex:
    case Errc::Undefined:
    case Errc::FlavorMismatch:
    case Errc::NotInClass:
    case Errc::NotSatisfying:
    case Errc::InvalidInput:
    case Errc::Capacity:
    case Errc::TooManyVariables: return kPrecondition;
    case Errc::Timeout: return kTimeout;
    case Errc::TheoryViolation: return kDisagree;
    default: return kFailure;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::Parse, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string digest(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL; // FNV-1a
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

struct Run {
    json report = json::object();
    int code = kOk;

    Graph load_graph(const std::string& path) {
        const std::string text = read_file(path);
        report["inputs"][path] = digest(text);
        std::istringstream in(text);
        return read_edge_list(in);
    }
    Formula load_formula(const std::string& path) {
        const std::string text = read_file(path);
        report["inputs"][path] = digest(text);
        return parse_formula(text);
    }
    void disagree(const std::string& what) {
        report["disagreements"].push_back(what);
        code = kDisagree;
    }
};

DomKind parse_kind(const std::string& s) {
    if (s == "total") return DomKind::Total;
    if (s == "semitotal") return DomKind::Semitotal;
    throw Error(Errc::Parse, "unknown kind '" + s + "'");
}

json ct_json(const CtResult& r) {
    json j{{"ct", r.value}, {"gamma", r.gamma}};
    if (!r.defined()) j["reason"] = r.reason;
    if (!r.cert.sequence.empty()) {
        j["sequence"] = json::array();
        for (auto [u, v] : r.cert.sequence) j["sequence"].push_back({u, v});
        j["final_set"] = to_json(r.cert.final_set);
    }
    if (r.cert.trigger) {
        j["trigger"] = to_json(*r.cert.trigger);
        j["witness"] = r.cert.witness;
        j["witness_kind"] = r.cert.witness_kind;
    }
    return j;
}

json labelled(const Graph& g, const VertexSet& s) {
    json out = json::array();
    s.for_each([&](int v) { out.push_back(g.label(v)); });
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Contraction-number toolkit"};
    app.require_subcommand(1);
    std::string file, kind_s = "total", method = "both", pattern, formula_path, gadget_kind, verify = "none", suite = "all";
    int k = 2;
    std::uint64_t seed = 20240611, budget_nodes = 100'000'000;
    double budget_seconds = 60.0;
    app.add_option("--seed", seed, "Seed for every random choice")->capture_default_str();
    app.add_option("--budget-nodes", budget_nodes, "Search node budget")->capture_default_str();
    app.add_option("--budget-seconds", budget_seconds, "Search time budget")->capture_default_str();

    auto* gamma_cmd = app.add_subcommand("gamma", "Minimum (semi)total dominating set");
    gamma_cmd->add_option("file", file, "Edge-list file")->required();
    gamma_cmd->add_option("--kind", kind_s)->check(CLI::IsMember({"total", "semitotal"}));

    auto* ct_cmd = app.add_subcommand("ct", "Contraction number");
    ct_cmd->add_option("file", file, "Edge-list file")->required();
    ct_cmd->add_option("--kind", kind_s)->check(CLI::IsMember({"total", "semitotal"}));
    ct_cmd->add_option("--method", method)->check(CLI::IsMember({"brute", "char", "both"}));

    auto* hfree_cmd = app.add_subcommand("hfree", "Test for an induced pattern");
    hfree_cmd->add_option("file", file, "Edge-list file")->required();
    hfree_cmd->add_option("--pattern", pattern, "Pattern such as P4+2P3")->required();

    auto* classify_cmd = app.add_subcommand("classify", "Complexity of k-Edge Contraction on H-free graphs");
    classify_cmd->add_option("--pattern", pattern)->required();
    classify_cmd->add_option("--kind", kind_s)->check(CLI::IsMember({"total", "semitotal"}));
    classify_cmd->add_option("--k", k)->check(CLI::IsMember({1, 2}));

    auto* gadget_cmd = app.add_subcommand("gadget", "Hardness constructions");
    gadget_cmd->require_subcommand(1);
    auto* build_cmd = gadget_cmd->add_subcommand("build", "Build the graph for a formula");
    build_cmd->add_option("--kind", gadget_kind)->required();
    build_cmd->add_option("--formula", formula_path)->required();
    build_cmd->add_option("--verify", verify, "none, cert or full")->check(CLI::IsMember({"none", "cert", "full"}));

    auto* sub_cmd = app.add_subcommand("subdivide", "4-subdivide every edge");
    sub_cmd->add_option("file", file, "Edge-list file")->required();
    bool check = false;
    sub_cmd->add_flag("--check", check, "Verify the gamma shift and the set transforms");

    auto* self_cmd = app.add_subcommand("selftest", "Run acceptance suites");
    self_cmd->add_option("--suite", suite, "Suite name or 'all'");
    std::string fixtures = CTKIT_FIXTURE_DIR;
    self_cmd->add_option("--fixtures", fixtures, "Fixture directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kParse;
    }

    Run run;
    std::string echo;
    for (int i = 0; i < argc; ++i) echo += (i ? " " : "") + std::string(argv[i]);
    run.report["command"] = echo;
    run.report["seed"] = seed;
    run.report["inputs"] = json::object();
    json& res = run.report["results"] = json::object();
    const Budget budget{budget_nodes, budget_seconds};
    const auto t0 = std::chrono::steady_clock::now();

    try {
        if (*gamma_cmd) {
            const Graph g = run.load_graph(file);
            const DomKind kind = parse_kind(kind_s);
            const VertexSet d = min_dom_set(g, kind, budget);
            res["gamma"] = d.count();
            run.report["certificates"]["set"] = to_json(d);
        } else if (*ct_cmd) {
            const Graph g = run.load_graph(file);
            const DomKind kind = parse_kind(kind_s);
            if (auto why = detail::ct_precondition(g)) throw Error(Errc::Undefined, *why);
            std::optional<CtResult> bf, ch;
            if (method != "char") bf = ct_bruteforce(g, kind, budget);
            if (method != "brute") ch = ct_characterization(g, kind, budget);
            const CtResult& any = bf ? *bf : *ch;
            if (!any.defined()) throw Error(Errc::Undefined, any.reason);
            res["ct"] = any.value;
            res["gamma"] = any.gamma;
            if (bf) run.report["certificates"]["brute"] = ct_json(*bf);
            if (ch) run.report["certificates"]["char"] = ct_json(*ch);
            if (bf && ch) {
                res["agree"] = bf->value == ch->value;
                if (bf->value != ch->value)
                    run.disagree("brute force " + std::to_string(bf->value) + " vs characterization " +
                                 std::to_string(ch->value) + " on " + suites::one_line(g));
            }
            if (bf && !replay_certificate(g, kind, *bf, budget)) run.disagree("brute-force certificate does not replay");
        } else if (*hfree_cmd) {
            const Graph g = run.load_graph(file);
            const auto hit = contains_induced(g, make_named_graph(pattern));
            res["pattern"] = pattern;
            res["free"] = !hit.has_value();
            if (hit) run.report["certificates"]["embedding"] = *hit;
        } else if (*classify_cmd) {
            const DichotomyVerdict v = classify_dichotomy(make_named_graph(pattern), parse_kind(kind_s), k);
            res["pattern"] = pattern;
            res["verdict"] = v.verdict == Complexity::Hard ? "hard" : "polynomial";
            res["justification"] = v.justification;
        } else if (*build_cmd) {
            const Formula f = run.load_formula(formula_path);
            const GadgetBundle b = build_gadget(parse_gadget_kind(gadget_kind), f);
            const auto sat = sat_bruteforce(f);
            res["kind"] = gadget_token(b.kind);
            res["satisfiable"] = sat.has_value();
            res["predicted"] = {{"vertices", b.predicted.vertex_count},
                                {"gamma_if_satisfiable", b.predicted.gamma_if_sat},
                                {"ct_if_satisfiable", b.predicted.ct_if_sat}};
            res["graphs"] = json::array();
            for (const Graph& g : b.graphs) res["graphs"].push_back(to_json(g));
            if (verify != "none" && sat) {
                json checks = json::array();
                for (const ClaimCheck& c : check_certificate(b, *sat)) {
                    checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
                    if (!c.ok) run.disagree(c.name);
                }
                res["certificate_checks"] = checks;
                run.report["certificates"]["set"] = labelled(b.graph(), certificate_from_assignment(b, *sat));
            }
            if (verify == "full") {
                json full = json::array();
                for (std::size_t i = 0; i < b.graphs.size(); ++i) {
                    const bool member = in_claimed_class(b, i);
                    if (!member) run.disagree("graph " + std::to_string(i) + " is not " + b.predicted.classes[i].name);
                    const int gm = gamma(b.graph(i), b.predicted.kind, budget);
                    const bool consistent = sat ? gm == b.predicted.gamma_if_sat : gm > b.predicted.gamma_if_sat;
                    if (!consistent)
                        run.disagree("graph " + std::to_string(i) + ": gamma " + std::to_string(gm) +
                                     (sat ? " differs from " : " does not exceed ") +
                                     std::to_string(b.predicted.gamma_if_sat));
                    full.push_back({{"class", b.predicted.classes[i].name}, {"in_class", member}, {"gamma", gm},
                                    {"gamma_consistent", consistent}});
                }
                for (const LocalClaim& c : local_claims(b)) {
                    const LocalReport rep = check_local_claim(b.graph(c.graph), b.predicted.kind, c);
                    if (!rep.holds) run.disagree(c.name + ": " + rep.detail);
                    res["local_claims"].push_back({{"name", c.name}, {"holds", rep.holds}, {"traces", rep.traces}});
                }
                res["full"] = full;
            }
        } else if (*sub_cmd) {
            const Graph g = run.load_graph(file);
            const Subdivision s = four_subdivide(g);
            res["graph"] = to_json(s.h);
            if (check) {
                const int gg = gamma(g, DomKind::Total, budget), gh = gamma(s.h, DomKind::Total, budget);
                res["gamma_g"] = gg;
                res["gamma_h"] = gh;
                if (gh != gg + 2 * g.m()) run.disagree("gamma_t(H) != gamma_t(G) + 2m");
                const VertexSet up = td_transform_up(g, s, min_dom_set(g, DomKind::Total, budget));
                const VertexSet down = td_transform_down(g, s, min_dom_set(s.h, DomKind::Total, budget));
                if (up.count() != gh || down.count() != gg) run.disagree("set transforms miss the minimum");
                run.report["certificates"]["up"] = to_json(up);
                run.report["certificates"]["down"] = to_json(down);
            }
        } else if (*self_cmd) {
            suites::Options opt{seed, fixtures};
            bool found = false;
            res["suites"] = json::array();
            for (std::size_t i = 0; i < suites::registry().size(); ++i) {
                if (suite != "all" && suites::registry()[i].first != suite) continue;
                found = true;
                const suites::Report r = suites::run_timed(i, opt);
                std::cerr << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.title << ": " << r.summary << '\n';
                res["suites"].push_back({{"id", r.id},
                                         {"name", suites::registry()[i].first},
                                         {"pass", r.pass},
                                         {"summary", r.summary},
                                         {"failures", r.failures},
                                         {"notes", r.notes}});
                if (!r.pass) run.code = kDisagree;
            }
            if (!found) throw Error(Errc::Parse, "unknown suite '" + suite + "'");
        }
    } catch (const Error& e) {
        run.report["error"] = {{"code", errc_name(e.code())}, {"message", e.what()}};
        run.code = exit_for(e.code());
        std::cerr << e.what() << '\n';
    }
    run.report["timings"]["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << run.report.dump(2) << '\n';
    return run.code;
}
