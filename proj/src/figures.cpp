#include "asvote/figures.hpp"

#include "asvote/ccr.hpp"
#include "asvote/choice.hpp"

namespace asvote {

namespace {

Figure make_fig1() {
    Figure f;
    f.id = "fig1";
    f.title = "two profiles with the same restriction to (a, b)";
    f.candidates = default_candidates(3);
    f.profiles.emplace_back("left", make_profile(f.candidates, {{1, {{"a"}, {"b"}, {"c"}}},
                                                                {1, {{"b"}, {"a"}, {"c"}}},
                                                                {1, {{"a"}, {"b"}, {"c"}}}}));
    f.profiles.emplace_back("right", make_profile(f.candidates, {{1, {{"a"}, {"b"}, {"c"}}},
                                                                 {1, {{"b"}, {"c"}, {"a"}}},
                                                                 {1, {{"c"}, {"a"}, {"b"}}}}));
    return f;
}

Figure make_fig3() {
    Figure f;
    f.id = "fig3";
    f.title = "a majority graph with two cycles and a nonempty covering relation";
    f.candidates = default_candidates(4);
    PairwiseGraph<long long> g;
    g.n = 4;
    g.add(0, 1, 1);  // a -> b
    g.add(1, 2, 1);  // b -> c
    g.add(2, 3, 1);  // c -> d
    g.add(3, 0, 1);  // d -> a
    g.add(3, 1, 1);  // d -> b
    g.add(0, 2, 1);  // a -> c
    f.graph = g;
    return f;
}

Figure make_fig4() {
    Figure f;
    f.id = "fig4";
    f.title = "a profile whose covering relation is not negatively transitive";
    f.candidates = default_candidates(3);
    f.profiles.emplace_back("profile", make_profile(f.candidates, {{5, {{"a"}, {"b"}, {"c"}}},
                                                                   {2, {{"b"}, {"c"}, {"a"}}},
                                                                   {3, {{"c"}, {"a"}, {"b"}}}}));
    return f;
}

Figure make_fig5() {
    Figure f;
    f.id = "fig5";
    f.title = "a ranked-pairs example with one discarded cycle edge";
    f.candidates = default_candidates(3);
    f.profiles.emplace_back("profile", make_profile(f.candidates, {{4, {{"a"}, {"b"}, {"c"}}},
                                                                   {2, {{"b"}, {"c"}, {"a"}}},
                                                                   {3, {{"c"}, {"a"}, {"b"}}}}));
    return f;
}

Figure make_fig6() {
    Figure f;
    f.id = "fig6";
    f.title = "a margin graph with one 3-cycle";
    f.candidates = default_candidates(3);
    PairwiseGraph<long long> g;
    g.n = 3;
    g.add(0, 1, 3);  // a -> b
    g.add(1, 2, 3);  // b -> c
    g.add(2, 0, 1);  // c -> a
    f.graph = g;
    return f;
}

Figure make_fig7() {
    Figure f;
    f.id = "fig7";
    f.title = "a four-candidate margin graph comparing split-cycle, ranked-pairs and covering";
    f.candidates = default_candidates(4);
    PairwiseGraph<long long> g;
    g.n = 4;
    g.add(0, 2, 9);   // a -> c
    g.add(3, 1, 5);   // d -> b
    g.add(1, 0, 3);   // b -> a
    g.add(2, 1, 7);   // c -> b
    g.add(3, 2, 11);  // d -> c
    g.add(0, 3, 1);   // a -> d
    f.graph = g;
    f.note =
        "weights a->c=9 and d->b=5 are inferred from the documented lock-in "
        "order (d->c, a->c, c->b first, then a->d)";
    return f;
}

Figure make_ex38() {
    Figure f;
    f.id = "ex3.8";
    f.title = "four 43-voter profiles separating pairwise data from social preference";
    f.candidates = make_candidates({"x", "y", "z", "w"});
    auto col = [](int count, std::vector<std::string> order) {
        BallotGroup g;
        g.count = count;
        for (std::string& name : order) g.ranking.push_back({std::move(name)});
        return g;
    };
    // Seven ballot columns; the four profiles differ only in columns 2 and 7.
    auto build = [&](std::vector<std::string> c2, std::vector<std::string> c7) {
        return make_profile(f.candidates, {col(3, {"y", "x", "z", "w"}),
                                           col(2, std::move(c2)),
                                           col(9, {"y", "w", "z", "x"}),
                                           col(5, {"x", "z", "y", "w"}),
                                           col(9, {"x", "y", "w", "z"}),
                                           col(13, {"z", "x", "w", "y"}),
                                           col(2, std::move(c7))});
    };
    f.profiles.emplace_back("R", build({"y", "x", "z", "w"}, {"z", "x", "w", "y"}));
    f.profiles.emplace_back("R'", build({"y", "z", "x", "w"}, {"x", "z", "w", "y"}));
    f.profiles.emplace_back("S", build({"x", "z", "w", "y"}, {"y", "z", "x", "w"}));
    f.profiles.emplace_back("S'", build({"z", "x", "w", "y"}, {"y", "x", "z", "w"}));
    return f;
}

const std::vector<Figure>& all_figures() {
    static const std::vector<Figure> figs = {make_fig1(), make_fig3(), make_fig4(), make_fig5(),
                                             make_fig6(), make_fig7(), make_ex38()};
    return figs;
}

std::string strict_pairs(const Relation& r, const CandidateSet& names) {
    Relation p = r.strict();
    std::string out = "{";
    bool first = true;
    for (int x = 0; x < r.size(); ++x)
        for (int y = 0; y < r.size(); ++y)
            if (p.has(x, y)) {
                if (!first) out += ", ";
                out += names.names[x] + "P" + names.names[y];
                first = false;
            }
    return out + "}";
}

std::string subset_str(std::uint8_t mask, const CandidateSet& names) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < names.size(); ++i)
        if (mask & (1u << i)) {
            if (!first) out += ", ";
            out += names.names[i];
            first = false;
        }
    return out + "}";
}

std::string ranking_str(const WeakOrder& w, const CandidateSet& names) {
    std::string out;
    for (const std::vector<int>& level : w.levels()) {
        if (!out.empty()) out += " > ";
        for (std::size_t i = 0; i < level.size(); ++i) {
            if (i) out += " ~ ";
            out += names.names[level[i]];
        }
    }
    return out;
}

void append_profile(std::string& out, const Profile& p) {
    for (int v = 0; v < p.num_voters();) {
        int count = 1;
        while (v + count < p.num_voters() && p.ranking(v + count) == p.ranking(v)) ++count;
        out += "  " + std::to_string(count) + ": " +
               ranking_str(p.ranking(v), *p.candidates()) + "\n";
        v += count;
    }
}

void append_graph(std::string& out, const PairwiseGraph<long long>& g, const CandidateSet& names) {
    for (int x = 0; x < g.n; ++x)
        for (int y = 0; y < g.n; ++y)
            if (g.edge(x, y))
                out += "  " + names.names[x] + " -> " + names.names[y] + " (" +
                       std::to_string(g.weight[x][y]) + ")\n";
}

std::string verdict(const Relation& r, int x, int y, const CandidateSet& names) {
    bool xy = r.has(x, y), yx = r.has(y, x);
    const char* sym = xy && yx ? "I" : xy ? "P" : yx ? "p" : "N";
    if (sym[0] == 'p') return names.names[y] + "P" + names.names[x];
    return names.names[x] + sym + names.names[y];
}

}  // namespace

const std::vector<std::string>& figure_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const Figure& f : all_figures()) v.push_back(f.id);
        return v;
    }();
    return ids;
}

std::optional<Figure> find_figure(const std::string& id) {
    for (const Figure& f : all_figures())
        if (f.id == id) return f;
    return std::nullopt;
}

std::string figure_report(const Figure& f) {
    const CandidateSet& names = *f.candidates;
    std::string out = f.id + ": " + f.title + "\n";
    if (!f.note.empty()) out += "note: " + f.note + "\n";

    if (f.id == "fig1") {
        for (const auto& [name, p] : f.profiles) {
            out += name + " profile:\n";
            append_profile(out, p);
            out += "majority: " + strict_pairs(majority_ccr(p), names) + "\n";
        }
        return out;
    }
    if (f.id == "fig3") {
        out += "majority graph:\n";
        append_graph(out, *f.graph, names);
        out += "covering: " + strict_pairs(gillies_covering(*f.graph), names) + "\n";
        return out;
    }
    if (f.id == "fig4") {
        const Profile& p = f.profiles[0].second;
        out += "profile:\n";
        append_profile(out, p);
        out += "margin graph:\n";
        append_graph(out, margin_graph(p), names);
        Relation cov = gillies_covering_ccr(p);
        out += "covering: " + strict_pairs(cov, names) + "\n";
        ChoiceFunction c{cov, ChoiceFunction::Mode::maximal};
        out += "M({b, c}) = " + subset_str(c.choose(0b110), names) + "\n";
        out += "M({a, b, c}) = " + subset_str(c.choose(0b111), names) + "\n";
        AxiomReport beta = check_choice_condition(c, 3, ChoiceCondition::beta);
        out += "beta: " + std::string(beta.holds ? "holds" : "fails") + "\n";
        bool nt = check_property(cov.strict(), RelationProperty::negatively_transitive);
        out += "negative transitivity of strict part: " +
               std::string(nt ? "holds" : "fails") + "\n";
        return out;
    }
    if (f.id == "fig5") {
        const Profile& p = f.profiles[0].second;
        out += "profile:\n";
        append_profile(out, p);
        out += "margin graph:\n";
        append_graph(out, margin_graph(p), names);
        out += "ranked pairs locked: " +
               strict_pairs(ranked_pairs_all(margin_graph(p)), names) + "\n";
        return out;
    }
    if (f.id == "fig6") {
        out += "margin graph:\n";
        append_graph(out, *f.graph, names);
        out += "split cycle: " + strict_pairs(split_cycle_strict(*f.graph), names) + "\n";
        return out;
    }
    if (f.id == "fig7") {
        out += "margin graph:\n";
        append_graph(out, *f.graph, names);
        out += "split cycle: " + strict_pairs(split_cycle_strict(*f.graph), names) + "\n";
        out += "ranked pairs locked: " + strict_pairs(ranked_pairs_all(*f.graph), names) + "\n";
        out += "covering: " + strict_pairs(gillies_covering(*f.graph), names) + "\n";
        return out;
    }
    if (f.id == "ex3.8") {
        int x = names.index_of("x"), z = names.index_of("z");
        for (const auto& [name, p] : f.profiles) {
            out += name + " profile:\n";
            append_profile(out, p);
            out += "positive margins:\n";
            append_graph(out, margin_graph(p), names);
            out += "inversion scores:";
            for (int c = 0; c < names.size(); ++c)
                out += " " + names.names[c] + "=" + std::to_string(dodgson_score(p, c));
            out += "\n";
            out += "score rule on (x, z): " + verdict(dodgson_ccr(p), x, z, names) + "\n";
            out += "score+majority rule on (x, z): " +
                   verdict(majority_dodgson_ccr(p), x, z, names) + "\n";
        }
        return out;
    }
    return out;
}

}  // namespace asvote
