#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "asvote/figures.hpp"
#include "asvote/io.hpp"

using namespace asvote;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAxiomFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitBounds = 3;
constexpr int kExitUnknownId = 4;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct CliError {
    int code;
    std::string message;
};

Measure parse_measure(const std::string& s) {
    if (s == "margin") return Measure::margin;
    if (s == "ratio") return Measure::ratio;
    throw CliError{kExitParse, "unknown measure: " + s};
}

// Rules whose output depends on the profile only through the margin graph
// can be tallied from a graph file without a realizing profile.
Relation tally_graph(const std::string& ccr, const PairwiseGraph<long long>& g) {
    int n = g.n;
    if (ccr == "gillies") return gillies_covering(g);
    if (ccr == "split-cycle") {
        Relation r = split_cycle_strict(g);
        for (int i = 0; i < n; ++i) r.set(i, i);
        return r;
    }
    if (ccr == "ranked-pairs") {
        Relation locked = ranked_pairs_all(g);
        Relation r(n);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (x == y || !locked.has(y, x)) r.set(x, y);
        return r;
    }
    if (ccr == "majority") {
        Relation r(n);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (x == y || !g.edge(y, x)) r.set(x, y);
        return r;
    }
    if (ccr == "copeland") {
        std::array<int, 8> score{};
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (g.edge(x, y)) ++score[x];
                if (g.edge(y, x)) --score[x];
            }
        Relation r(n);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (score[x] >= score[y]) r.set(x, y);
        return r;
    }
    throw CliError{kExitParse, "rule '" + ccr + "' needs ballot-level input, not --graph"};
}

void print_diagnostics(const Profile& p, const std::string& ccr, Measure m) {
    const CandidateSet& names = *p.candidates();
    std::cout << "advantage/standard diagnostics (" << (m == Measure::margin ? "margin" : "ratio")
              << "):\n";
    for (int x = 0; x < p.num_candidates(); ++x)
        for (int y = 0; y < p.num_candidates(); ++y) {
            if (x == y) continue;
            Preprofile ctx = p.context(x, y);
            Rational adv = m == Measure::margin ? Rational(margin(p, x, y)) : ratio(p, x, y);
            Rational std_;
            if (ccr == "majority")
                std_ = m == Measure::margin ? Rational(0) : Rational(1);
            else if (ccr == "gillies")
                std_ = m == Measure::margin ? Rational(gillies_standard(ctx, x, y))
                                            : Rational(gillies_standard(ctx, x, y), 1);
            else if (ccr == "ranked-pairs")
                std_ = m == Measure::margin ? Rational(ranked_pairs_standard_margin(ctx, x, y))
                                            : ranked_pairs_standard_ratio(ctx, x, y);
            else if (ccr == "split-cycle")
                std_ = m == Measure::margin ? Rational(split_cycle_standard_margin(ctx, x, y))
                                            : split_cycle_standard_ratio(ctx, x, y);
            else
                return;
            auto str = [](const Rational& r) {
                std::string s = std::to_string(r.numerator());
                if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
                return s;
            };
            std::cout << "  " << names.names[x] << " vs " << names.names[y]
                      << ": advantage=" << str(adv) << " standard=" << str(std_)
                      << (adv > std_ ? "  (strict)" : "") << "\n";
        }
}

int run_tally(const std::string& input, const std::string& graph_path, const std::string& ccr,
              const std::string& measure, bool dot, bool diagnostics) {
    Measure m = parse_measure(measure);
    if (!graph_path.empty()) {
        CandidateSetPtr names;
        PairwiseGraph<long long> g = parse_margin_graph_json(slurp(graph_path), &names);
        if (dot) std::cout << margin_graph_to_dot(g, *names);
        std::cout << relation_to_text(tally_graph(ccr, g), *names);
        return kExitOk;
    }
    Profile p = parse_profile_json(slurp(input));
    std::optional<CCRHandle> handle = find_ccr(ccr);
    if (!handle) throw CliError{kExitParse, "unknown rule: " + ccr};
    if (handle->linear_only && !p.all_linear())
        throw CliError{kExitParse, "rule '" + ccr + "' requires linear ballots"};
    Relation r;
    if (ccr == "ranked-pairs")
        r = ranked_pairs_ccr(RankedPairsPolicy::complete_closure, p, m);
    else if (ccr == "ranked-pairs-pi")
        r = ranked_pairs_ccr(RankedPairsPolicy::pareto_indifference, p, m);
    else if (ccr == "split-cycle")
        r = split_cycle_ccr(p, m);
    else
        r = handle->evaluate(p);
    if (dot) std::cout << margin_graph_to_dot(margin_graph(p), *p.candidates());
    std::cout << relation_to_text(r, *p.candidates());
    if (diagnostics) print_diagnostics(p, ccr, m);
    return kExitOk;
}

Space make_space(int X, int V, bool linear, bool force) {
    if (X < 1 || X > kMaxCandidates || V < 1)
        throw CliError{kExitBounds, "need 1 <= X <= 8 and V >= 1"};
    std::uint64_t count = count_profiles(X, V, linear);
    if (count > 10'000'000) {
        std::cerr << "space has " << count << " profiles";
        if (!force) {
            std::cerr << "; pass --force to proceed\n";
            throw CliError{kExitBounds, "space too large without --force"};
        }
        std::cerr << " (forced)\n";
    }
    return Space::full(default_candidates(X), V, linear);
}

CCRHandle need_ccr(const std::string& name) {
    std::optional<CCRHandle> h = find_ccr(name);
    if (!h) throw CliError{kExitParse, "unknown rule: " + name};
    return *h;
}

struct NamedAxiom {
    std::string name;
    std::function<AxiomReport(const EvaluatedSpace&)> run;
};

std::vector<NamedAxiom> axiom_table() {
    std::vector<NamedAxiom> t;
    auto pairwise = [&](PairwiseAxiom a) {
        t.push_back({axiom_name(a), [a](const EvaluatedSpace& es) {
                         return check_pairwise_axiom(es, a);
                     }});
    };
    auto unary = [&](UnaryAxiom a) {
        t.push_back({axiom_name(a), [a](const EvaluatedSpace& es) {
                         return check_unary_axiom(es, a);
                     }});
    };
    pairwise(PairwiseAxiom::iia);
    pairwise(PairwiseAxiom::weak_iia);
    pairwise(PairwiseAxiom::pn_weak_iia);
    pairwise(PairwiseAxiom::pi_weak_iia);
    unary(UnaryAxiom::pareto);
    unary(UnaryAxiom::strong_pareto);
    unary(UnaryAxiom::pareto_indifference);
    unary(UnaryAxiom::sni);
    unary(UnaryAxiom::anonymity);
    unary(UnaryAxiom::neutrality);
    unary(UnaryAxiom::completeness);
    unary(UnaryAxiom::transitivity);
    unary(UnaryAxiom::acyclicity);
    unary(UnaryAxiom::negative_transitivity);
    t.push_back({"orderability", [](const EvaluatedSpace& es) {
                     return check_orderability(es).report;
                 }});
    return t;
}

int run_axioms(const std::string& ccr, int X, int V, bool linear, bool force,
               const std::vector<std::string>& axioms, bool all, bool powers, bool coalitions,
               bool json) {
    EvaluatedSpace es(need_ccr(ccr), make_space(X, V, linear, force));
    std::vector<NamedAxiom> table = axiom_table();
    std::vector<NamedAxiom> selected;
    if (all) {
        selected = table;
    } else {
        for (const std::string& name : axioms) {
            bool found = false;
            for (const NamedAxiom& a : table)
                if (a.name == name) {
                    selected.push_back(a);
                    found = true;
                }
            if (!found) throw CliError{kExitParse, "unknown axiom: " + name};
        }
    }
    bool all_hold = true;
    std::string json_out = "[";
    for (std::size_t i = 0; i < selected.size(); ++i) {
        AxiomReport rep = selected[i].run(es);
        all_hold = all_hold && rep.holds;
        if (json) {
            if (i) json_out += ",";
            json_out += axiom_report_to_json(rep, *es.space().candidates());
        } else {
            std::cout << rep.axiom << ": " << (rep.holds ? "holds" : "fails");
            if (rep.witness && !rep.witness->detail.empty())
                std::cout << "  [" << rep.witness->detail << "]";
            std::cout << "\n";
        }
    }
    if (json) std::cout << json_out << "]\n";
    auto voters = [&](auto&& container) {
        std::string s;
        for (int i : container) s += (s.empty() ? "" : ", ") + std::to_string(i);
        return s.empty() ? std::string("none") : s;
    };
    if (powers && !json) {
        std::cout << "dictators: " << voters(find_power_holders(es, PowerKind::dictator)) << "\n";
        std::cout << "inverse dictators: "
                  << voters(find_power_holders(es, PowerKind::inverse_dictator)) << "\n";
        std::cout << "weak dictators: "
                  << voters(find_power_holders(es, PowerKind::weak_dictator)) << "\n";
        std::cout << "vetoers: " << voters(find_power_holders(es, PowerKind::vetoer)) << "\n";
    }
    if (coalitions && !json) {
        for (auto [kind, label] :
             {std::pair{CoalitionKind::weakly_decisive, "weakly decisive"},
              std::pair{CoalitionKind::almost_weakly_decisive, "almost weakly decisive"}}) {
            std::cout << label << " coalitions:";
            for (std::uint32_t mask : find_decisive_coalitions(es, kind)) {
                std::cout << " {";
                bool first = true;
                for (int i = 0; i < V; ++i)
                    if (mask & (1u << i)) {
                        std::cout << (first ? "" : ",") << i;
                        first = false;
                    }
                std::cout << "}";
            }
            std::cout << "\n";
        }
    }
    return all_hold ? kExitOk : kExitAxiomFailure;
}

int run_rationalize(const std::string& ccr, int X, int V, bool linear, bool force, bool json) {
    EvaluatedSpace es(need_ccr(ccr), make_space(X, V, linear, force));
    try {
        Rationalization r = construct_rationalization(es);
        AxiomReport check = verify_rationalization(es, r);
        if (json) {
            std::cout << rationalization_to_json(r) << "\n";
        } else {
            std::cout << "rationalizable: advantage table has " << r.advantage.size()
                      << " entries, standard table has " << r.standard.size() << " entries\n";
            std::cout << "verification: " << (check.holds ? "passed" : "FAILED") << "\n";
        }
        return check.holds ? kExitOk : kExitAxiomFailure;
    } catch (const NotRationalizable& e) {
        std::cout << "not rationalizable: " << e.report.axiom << " fails";
        if (e.report.witness && !e.report.witness->detail.empty())
            std::cout << "  [" << e.report.witness->detail << "]";
        std::cout << "\n";
        return kExitAxiomFailure;
    }
}

int run_search(const std::string& ccr, int X, int V, bool linear, bool force,
               const std::string& axiom) {
    EvaluatedSpace es(need_ccr(ccr), make_space(X, V, linear, force));
    for (const NamedAxiom& a : axiom_table()) {
        if (a.name != axiom) continue;
        AxiomReport rep = a.run(es);
        if (rep.holds) {
            std::cout << axiom << " holds; no counterexample\n";
            return kExitAxiomFailure;
        }
        std::cout << "counterexample for " << axiom << ":\n";
        if (rep.witness) {
            for (const Profile& p : rep.witness->profiles)
                std::cout << profile_to_json(p) << "\n";
            if (!rep.witness->detail.empty()) std::cout << rep.witness->detail << "\n";
        }
        return kExitOk;
    }
    throw CliError{kExitParse, "unknown axiom: " + axiom};
}

int run_figures(const std::string& id, bool list) {
    if (list) {
        for (const std::string& i : figure_ids()) std::cout << i << "\n";
        return kExitOk;
    }
    std::optional<Figure> f = find_figure(id);
    if (!f) {
        std::cerr << "unknown dataset id: " << id << "\n";
        return kExitUnknownId;
    }
    std::cout << figure_report(*f);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"collective choice toolkit: tally elections, check axioms, build "
                 "advantage/standard rationalizations"};
    app.require_subcommand(1);

    std::string input, graph_path, ccr = "majority", measure = "margin", axiom, figure_id;
    std::vector<std::string> axiom_list;
    int X = 3, V = 2;
    bool dot = false, diagnostics = false, linear = false, force = false, all = false;
    bool powers = false, coalitions = false, json = false, list_ids = false;

    CLI::App* tally = app.add_subcommand("tally", "evaluate a rule on one election");
    tally->add_option("--input", input, "profile JSON file");
    tally->add_option("--graph", graph_path, "margin-graph JSON file (graph-determined rules)");
    tally->add_option("--ccr", ccr, "rule name")->required();
    tally->add_option("--measure", measure, "margin or ratio");
    tally->add_flag("--dot", dot, "print the margin graph in DOT format");
    tally->add_flag("--diagnostics", diagnostics, "per-pair advantage/standard table");

    CLI::App* ax = app.add_subcommand("axioms", "check axioms over a full profile space");
    ax->add_option("--ccr", ccr, "rule name")->required();
    ax->add_option("--X", X, "number of candidates")->required();
    ax->add_option("--V", V, "number of voters")->required();
    ax->add_flag("--linear", linear, "linear ballots only");
    ax->add_flag("--force", force, "proceed past the profile-count cap");
    ax->add_option("--axiom", axiom_list, "axiom name (repeatable)");
    ax->add_flag("--all", all, "check every axiom");
    ax->add_flag("--powers", powers, "report dictators, weak dictators, vetoers");
    ax->add_flag("--coalitions", coalitions, "report decisive coalitions");
    ax->add_flag("--json", json, "machine-readable output");

    CLI::App* rat = app.add_subcommand("rationalize",
                                       "build and verify an advantage/standard rationalization");
    rat->add_option("--ccr", ccr, "rule name")->required();
    rat->add_option("--X", X, "number of candidates")->required();
    rat->add_option("--V", V, "number of voters")->required();
    rat->add_flag("--linear", linear, "linear ballots only");
    rat->add_flag("--force", force, "proceed past the profile-count cap");
    rat->add_flag("--json", json, "print the full tables as JSON");

    CLI::App* search = app.add_subcommand("search", "find a counterexample to an axiom");
    search->add_option("--ccr", ccr, "rule name")->required();
    search->add_option("--X", X, "number of candidates")->required();
    search->add_option("--V", V, "number of voters")->required();
    search->add_flag("--linear", linear, "linear ballots only");
    search->add_flag("--force", force, "proceed past the profile-count cap");
    search->add_option("--axiom", axiom, "axiom name")->required();

    CLI::App* figs = app.add_subcommand("figures", "print a bundled dataset and its analysis");
    figs->add_option("id", figure_id, "dataset id");
    figs->add_flag("--list", list_ids, "list known dataset ids");

    CLI11_PARSE(app, argc, argv);

    try {
        if (tally->parsed()) {
            if (input.empty() == graph_path.empty())
                throw CliError{kExitParse, "give exactly one of --input or --graph"};
            return run_tally(input, graph_path, ccr, measure, dot, diagnostics);
        }
        if (ax->parsed())
            return run_axioms(ccr, X, V, linear, force, axiom_list, all, powers, coalitions,
                              json);
        if (rat->parsed()) return run_rationalize(ccr, X, V, linear, force, json);
        if (search->parsed()) return run_search(ccr, X, V, linear, force, axiom);
        if (figs->parsed()) {
            if (!list_ids && figure_id.empty())
                throw CliError{kExitParse, "give a dataset id or --list"};
            return run_figures(figure_id, list_ids);
        }
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitOk;
}
