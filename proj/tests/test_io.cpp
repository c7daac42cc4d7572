#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cctype>

#include <json.hpp>

#include "asvote/figures.hpp"
#include "asvote/io.hpp"

using namespace asvote;
using nlohmann::json;

TEST_CASE("profile json round trip is canonical and idempotent") {
    std::string text = R"({"candidates":["a","b","c"],
        "ballots":[{"count":2,"ranking":[["a"],["b"],["c"]]},
                   {"count":1,"ranking":[["b","c"],["a"]]},
                   {"count":3,"ranking":[["a"],["b"],["c"]]}]})";
    Profile p = parse_profile_json(text);
    CHECK(p.num_voters() == 6);
    CHECK(p.num_candidates() == 3);
    CHECK(p.ranking(0).prefers(0, 1));
    CHECK(p.ranking(2).indifferent(1, 2));

    std::string once = profile_to_json(p);
    CHECK(once == profile_to_json(parse_profile_json(once)));
    // Adjacent equal ballots merge; the two separated identical groups do
    // not, preserving voter order.
    json j = json::parse(once);
    REQUIRE(j["ballots"].size() == 3);
    CHECK(j["ballots"][0]["count"] == 2);
    CHECK(j["ballots"][1]["count"] == 1);
    CHECK(j["ballots"][2]["count"] == 3);
}

TEST_CASE("profile json round trips every bundled election") {
    for (const std::string& id : figure_ids()) {
        Figure f = *find_figure(id);
        for (const auto& [name, p] : f.profiles) {
            Profile q = parse_profile_json(profile_to_json(p));
            CHECK(q == p);
        }
    }
}

TEST_CASE("profile parse errors carry the offending location") {
    auto expect_error = [](const std::string& text, const std::string& needle) {
        try {
            parse_profile_json(text);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_error("not json", "JSON");
    expect_error(R"({"ballots":[]})", "candidates");
    expect_error(R"({"candidates":[],"ballots":[]})", "candidates");
    expect_error(R"({"candidates":["a","a"],"ballots":[]})", "duplicate");
    expect_error(R"({"candidates":["a","b"],"ballots":[]})", "ballot");
    expect_error(R"({"candidates":["a","b"],"ballots":[{"count":0,"ranking":[["a"],["b"]]}]})",
                 "ballot 1");
    expect_error(R"({"candidates":["a","b"],"ballots":[{"count":1,"ranking":[["a"]]}]})", "");
    expect_error(R"({"candidates":["a","b"],"ballots":[{"count":1,"ranking":[["a"],["x"]]}]})",
                 "");
    expect_error(
        R"({"candidates":["a","b"],"ballots":[{"count":1,"ranking":[["a"],["b","a"]]}]})", "");
    expect_error(R"({"candidates":["a","b","c","d","e","f","g","h","i"],"ballots":[]})", "8");
}

TEST_CASE("margin graph json round trip and validation") {
    Figure f7 = *find_figure("fig7");
    const CandidateSet& names = *f7.candidates;
    std::string text = margin_graph_to_json(*f7.graph, names);
    CandidateSetPtr parsed_names;
    PairwiseGraph<long long> g = parse_margin_graph_json(text, &parsed_names);
    CHECK(*parsed_names == names);
    for (int i = 0; i < names.size(); ++i)
        for (int j = 0; j < names.size(); ++j) {
            CHECK(g.edge(i, j) == f7.graph->edge(i, j));
            if (g.edge(i, j)) CHECK(g.weight[i][j] == f7.graph->weight[i][j]);
        }

    auto bad = [](const std::string& t) {
        CHECK_THROWS_AS(parse_margin_graph_json(t), ParseError);
    };
    bad(R"({"nodes":["a","b"],"edges":[{"from":"a","to":"a","weight":1}]})");
    bad(R"({"nodes":["a","b"],"edges":[{"from":"a","to":"b","weight":0}]})");
    bad(R"({"nodes":["a","b"],"edges":[{"from":"a","to":"b","weight":-3}]})");
    bad(R"({"nodes":["a","b"],"edges":[{"from":"a","to":"x","weight":1}]})");
    bad(R"({"nodes":["a","b"],"edges":[{"from":"a","to":"b","weight":1},
                                       {"from":"b","to":"a","weight":2}]})");
}

TEST_CASE("margin graph dot output lists every weighted edge") {
    Figure f6 = *find_figure("fig6");
    std::string dot = margin_graph_to_dot(*f6.graph, *f6.candidates);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("\"a\" -> \"b\"") != std::string::npos);
    CHECK(dot.find("label=\"3\"") != std::string::npos);
    CHECK(dot.find("\"c\" -> \"a\"") != std::string::npos);
}

TEST_CASE("relation text groups strict, indifferent, incomparable pairs") {
    Relation r(3);
    r.set(0, 1);                // aPb
    r.set(0, 2), r.set(2, 0);   // aIc
    std::string text = relation_to_text(r, *default_candidates(3));
    CHECK(text.find("P: ab") != std::string::npos);
    CHECK(text.find("I: ac") != std::string::npos);
    CHECK(text.find("N: bc") != std::string::npos);
}

TEST_CASE("axiom report json carries the witness") {
    EvaluatedSpace es(*find_ccr("copeland"), Space::full(default_candidates(3), 2));
    AxiomReport rep = check_pairwise_axiom(es, PairwiseAxiom::weak_iia);
    REQUIRE_FALSE(rep.holds);
    json j = json::parse(axiom_report_to_json(rep, *es.space().candidates()));
    CHECK(j["axiom"] == "weak-iia");
    CHECK(j["verdict"] == "fails");
    REQUIRE(j.contains("witness"));
    CHECK(j["witness"]["profiles"].size() == 2);
    CHECK(j["witness"]["pair"].size() == 2);

    AxiomReport ok = check_pairwise_axiom(EvaluatedSpace(*find_ccr("majority"),
                                                         Space::full(default_candidates(3), 2)),
                                          PairwiseAxiom::iia);
    json jok = json::parse(axiom_report_to_json(ok, *default_candidates(3)));
    CHECK(jok["verdict"] == "holds");
    CHECK_FALSE(jok.contains("witness"));
}

TEST_CASE("rationalization json is valid and keyed per pair") {
    Space s = Space::full(default_candidates(3), 2);
    EvaluatedSpace es(*find_ccr("gillies"), s);
    Rationalization r = construct_rationalization(es);
    json j = json::parse(rationalization_to_json(r));
    CHECK(j["group"] == "integer-additive");
    CHECK(j["advantage"].size() == r.advantage.size());
    CHECK(j["standard"].size() == r.standard.size());
    // Keys are "x:y:" followed by the digest; values parse back as integers.
    for (const auto& [key, value] : j["advantage"].items()) {
        CHECK(key.size() >= 4);
        CHECK(std::isdigit(static_cast<unsigned char>(key[0])));
        CHECK(key[1] == ':');
        CHECK_NOTHROW(std::stoll(value.get<std::string>()));
    }
}

TEST_CASE("rationalization json renders rationals as fractions") {
    Rationalization r;
    r.group.kind = OrderedGroup::Kind::positive_rational_multiplicative;
    r.advantage[{0, 1, std::string(">\x3c", 2)}] = Rational(7, 3);
    r.standard[{0, 1, std::string("\x01\x02", 2)}] = Rational(2);
    json j = json::parse(rationalization_to_json(r));
    CHECK(j["group"] == "positive-rational-multiplicative");
    bool saw_fraction = false, saw_integer = false;
    for (const auto& [key, value] : j["advantage"].items())
        if (value == "7/3") saw_fraction = true;
    for (const auto& [key, value] : j["standard"].items())
        if (value == "2") saw_integer = true;
    CHECK(saw_fraction);
    CHECK(saw_integer);
}
