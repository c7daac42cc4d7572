#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "asvote/ccr.hpp"
#include "asvote/figures.hpp"
#include "oracles.hpp"

using namespace asvote;

namespace {

Profile fig_profile(const std::string& id, const std::string& name = "profile") {
    Figure f = *find_figure(id);
    for (const auto& [n, p] : f.profiles)
        if (n == name) return p;
    throw std::runtime_error("no profile " + name + " in " + id);
}

PairwiseGraph<long long> fig_graph(const std::string& id) {
    return *find_figure(id)->graph;
}

// Strict pairs of a relation as a set for compact equality checks.
std::set<std::pair<int, int>> strict_set(const Relation& r) {
    std::set<std::pair<int, int>> out;
    Relation p = r.strict();
    for (int i = 0; i < r.size(); ++i)
        for (int j = 0; j < r.size(); ++j)
            if (p.has(i, j)) out.insert({i, j});
    return out;
}

Profile unanimous_abc() {
    return make_profile(default_candidates(3), {{3, {{"a"}, {"b"}, {"c"}}}});
}

}  // namespace

TEST_CASE("majority rule") {
    Relation cyc = majority_ccr(fig_profile("fig1", "right"));
    CHECK(strict_set(cyc) == std::set<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 0}});
    Relation lin = majority_ccr(unanimous_abc());
    CHECK(strict_set(lin) == std::set<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}});
    Profile ind = make_profile(default_candidates(3), {{2, {{"a", "b", "c"}}}});
    Relation r = majority_ccr(ind);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(r.has(i, j));
}

TEST_CASE("unanimity rule") {
    Relation lin = unanimity_ccr(unanimous_abc());
    CHECK(strict_set(lin) == std::set<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}});
    Profile dissent = make_profile(default_candidates(2), {{2, {{"a"}, {"b"}}},
                                                           {1, {{"b"}, {"a"}}}});
    Relation r = unanimity_ccr(dissent);
    CHECK_FALSE(r.has(0, 1));
    CHECK_FALSE(r.has(1, 0));
    Profile tied_dissent = make_profile(default_candidates(2), {{2, {{"a"}, {"b"}}},
                                                                {1, {{"a", "b"}}}});
    CHECK(unanimity_ccr(tied_dissent).has(0, 1));
    CHECK_FALSE(unanimity_ccr(tied_dissent).has(1, 0));
}

TEST_CASE("dictatorship copies the dictator's ranking") {
    Profile p = fig_profile("fig1", "left");
    for (int i = 0; i < 3; ++i) {
        Relation r = dictatorship_ccr(i, p);
        CHECK(r == p.ranking(i).to_relation());
    }
}

TEST_CASE("copeland scores and relation") {
    Profile f5 = fig_profile("fig5");
    CHECK(copeland_score(f5, 0) == 0);
    CHECK(copeland_score(f5, 1) == 0);
    CHECK(copeland_score(f5, 2) == 0);
    Relation r5 = copeland_ccr(f5);
    CHECK(strict_set(r5).empty());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(r5.has(i, j));

    Profile f4 = fig_profile("fig4");
    CHECK(copeland_score(f4, 0) == 1);
    CHECK(copeland_score(f4, 1) == 0);
    CHECK(copeland_score(f4, 2) == -1);
    CHECK(strict_set(copeland_ccr(f4)) ==
          std::set<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}});
}

TEST_CASE("covering rule on the bundled graphs") {
    CHECK(strict_set(gillies_covering(fig_graph("fig3"))) ==
          std::set<std::pair<int, int>>{{0, 1}});
    Relation f4 = gillies_covering_ccr(fig_profile("fig4"));
    CHECK(strict_set(f4) == std::set<std::pair<int, int>>{{0, 1}});
    // b vs c and a vs c are noncomparable.
    CHECK(f4.noncomp().has(1, 2));
    CHECK(f4.noncomp().has(0, 2));
    CHECK(strict_set(gillies_covering(fig_graph("fig7"))) ==
          std::set<std::pair<int, int>>{{3, 2}});
}

TEST_CASE("covering is majority when the majority graph is acyclic") {
    Profile p = unanimous_abc();
    CHECK(strict_set(gillies_covering_ccr(p)) == strict_set(majority_ccr(p)));
}

TEST_CASE("covering relation transitivity on small spaces") {
    Space s = Space::full(default_candidates(3), 2);
    for (std::size_t i = 0; i < s.size(); ++i) {
        Relation r = gillies_covering_ccr(s.profile(i));
        CHECK(check_property(r, RelationProperty::transitive));
        CHECK(check_property(r.strict(), RelationProperty::transitive));
    }
}

TEST_CASE("ranked pairs locked sets") {
    TieBreaker t = TieBreaker::lexicographic(3);
    Relation f5 = ranked_pairs_locked(margin_graph(fig_profile("fig5")), t);
    CHECK(strict_set(f5) == std::set<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(strict_set(ranked_pairs_all(margin_graph(fig_profile("fig5")))) ==
          std::set<std::pair<int, int>>{{0, 1}, {1, 2}});

    // The four-candidate graph locks everything except the b->a cycle-maker.
    CHECK(strict_set(ranked_pairs_all(fig_graph("fig7"))) ==
          std::set<std::pair<int, int>>{{3, 2}, {3, 1}, {2, 1}, {0, 2}, {0, 3}});

    // Acyclic input: everything locks.
    PairwiseGraph<long long> acyc;
    acyc.n = 3;
    acyc.add(0, 1, 2);
    acyc.add(1, 2, 2);
    CHECK(strict_set(ranked_pairs_all(acyc)) ==
          std::set<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("ranked pairs tie-breaker intersection drops symmetric tied edges") {
    // a -> b and b -> a cannot both exist; instead use a tied 3-cycle where
    // the surviving pair depends on the tie-breaker.
    PairwiseGraph<long long> g;
    g.n = 3;
    g.add(0, 1, 3);
    g.add(1, 2, 3);
    g.add(2, 0, 3);
    Relation all = ranked_pairs_all(g);
    CHECK(strict_set(all).empty());  // every edge dies under some order
    Relation one = ranked_pairs_locked(g, TieBreaker::lexicographic(3));
    CHECK(strict_set(one).size() == 2);
    CHECK(check_property(one, RelationProperty::acyclic));
}

TEST_CASE("ranked pairs ccr policies") {
    Profile f5 = fig_profile("fig5");
    Relation closure = ranked_pairs_ccr(RankedPairsPolicy::complete_closure, f5);
    Relation pi = ranked_pairs_ccr(RankedPairsPolicy::pareto_indifference, f5);
    CHECK(strict_set(closure) == std::set<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(strict_set(pi) == std::set<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(check_property(closure, RelationProperty::complete));
    // a vs c: locked neither way; closure gives indifference, the
    // pareto-indifference policy gives noncomparability.
    CHECK(closure.has(0, 2));
    CHECK(closure.has(2, 0));
    CHECK(pi.noncomp().has(0, 2));

    Profile ind = make_profile(default_candidates(3), {{2, {{"a", "b", "c"}}}});
    Relation rpi = ranked_pairs_ccr(RankedPairsPolicy::pareto_indifference, ind);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(rpi.has(i, j));
}

TEST_CASE("split cycle on the bundled graphs") {
    CHECK(strict_set(split_cycle_strict(fig_graph("fig6"))) ==
          std::set<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(strict_set(split_cycle_strict(fig_graph("fig7"))) ==
          std::set<std::pair<int, int>>{{0, 2}, {2, 1}, {3, 1}, {3, 2}});
    // Acyclic majority graph: split cycle = majority strict relation.
    PairwiseGraph<long long> acyc = margin_graph(unanimous_abc());
    CHECK(strict_set(split_cycle_strict(acyc)) ==
          std::set<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}});
}

TEST_CASE("split cycle: ranked pairs adds exactly (a, d) on the 4-cycle graph") {
    auto sc = strict_set(split_cycle_strict(fig_graph("fig7")));
    auto rp = strict_set(ranked_pairs_all(fig_graph("fig7")));
    sc.insert({0, 3});
    CHECK(rp == sc);
}

TEST_CASE("split cycle cycle-based and path-based definitions agree") {
    // All margin graphs on <= 4 candidates with weights in {1, 3, 5}.
    for (int n = 2; n <= 4; ++n) {
        int pairs = n * (n - 1) / 2;
        long long total = 1;
        for (int i = 0; i < pairs; ++i) total *= 7;  // none, 2 dirs x 3 weights
        for (long long code = 0; code < total; ++code) {
            PairwiseGraph<long long> g;
            g.n = n;
            long long c = code;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    int v = static_cast<int>(c % 7);
                    c /= 7;
                    if (v == 0) continue;
                    int w = 2 * ((v - 1) % 3) + 1;
                    if (v <= 3)
                        g.add(i, j, w);
                    else
                        g.add(j, i, w);
                }
            Relation a = split_cycle_strict(g);
            Relation b = split_cycle_strict_paths(g);
            REQUIRE(a == b);
            CHECK(check_property(a, RelationProperty::acyclic));
        }
    }
}

TEST_CASE("split cycle weak part adds unanimous indifference") {
    Profile ind = make_profile(default_candidates(3), {{2, {{"a", "b", "c"}}}});
    Relation r = split_cycle_ccr(ind);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(r.has(i, j));
    Profile mixed = fig_profile("fig5");
    Relation m = split_cycle_ccr(mixed);
    CHECK(m.noncomp().has(0, 2));
}

TEST_CASE("inversion scores on the 43-voter profiles") {
    int x = 0, z = 2;
    Profile R = fig_profile("ex3.8", "R");
    CHECK(dodgson_score(R, x) == 3);
    CHECK(dodgson_score(R, z) == 4);
    Profile Rp = fig_profile("ex3.8", "R'");
    CHECK(dodgson_score(Rp, z) == 2);
    CHECK(dodgson_score(Rp, x) == 3);
    Profile S = fig_profile("ex3.8", "S");
    CHECK(dodgson_score(S, z) == 2);
    CHECK(dodgson_score(S, x) == 3);
    Profile Sp = fig_profile("ex3.8", "S'");
    CHECK(dodgson_score(Sp, x) == 3);
    CHECK(dodgson_score(Sp, z) == 4);
}

TEST_CASE("score rule verdicts") {
    int x = 0, z = 2;
    auto verdict = [&](const Relation& r) {
        bool xz = r.has(x, z), zx = r.has(z, x);
        return xz && !zx ? "xPz" : !xz && zx ? "zPx" : xz ? "xIz" : "xNz";
    };
    CHECK(verdict(dodgson_ccr(fig_profile("ex3.8", "R"))) == std::string("xPz"));
    CHECK(verdict(dodgson_ccr(fig_profile("ex3.8", "R'"))) == std::string("zPx"));
    CHECK(verdict(dodgson_ccr(fig_profile("ex3.8", "S"))) == std::string("zPx"));
    CHECK(verdict(dodgson_ccr(fig_profile("ex3.8", "S'"))) == std::string("xPz"));
    CHECK(verdict(majority_dodgson_ccr(fig_profile("ex3.8", "R"))) == std::string("xNz"));
    CHECK(verdict(majority_dodgson_ccr(fig_profile("ex3.8", "R'"))) == std::string("zPx"));
    CHECK(verdict(majority_dodgson_ccr(fig_profile("ex3.8", "S"))) == std::string("zPx"));
    CHECK(verdict(majority_dodgson_ccr(fig_profile("ex3.8", "S'"))) == std::string("xNz"));
}

TEST_CASE("score search equals breadth-first oracle on all 3x3 linear profiles") {
    Space s = Space::full(default_candidates(3), 3, true);
    for (std::size_t i = 0; i < s.size(); ++i) {
        Profile p = s.profile(i);
        for (int x = 0; x < 3; ++x)
            REQUIRE(dodgson_score(p, x) == oracle::dodgson_bfs(p, x));
    }
}

TEST_CASE("score search equals oracle on random 4-candidate instances") {
    std::mt19937 rng(20260826);
    const auto& linear = all_linear_orders(4);
    for (int trial = 0; trial < 50; ++trial) {
        int voters = 1 + static_cast<int>(rng() % 5);
        std::vector<WeakOrder> ballots;
        for (int v = 0; v < voters; ++v) ballots.push_back(linear[rng() % linear.size()]);
        Profile p(default_candidates(4), ballots);
        int x = static_cast<int>(rng() % 4);
        REQUIRE(dodgson_score(p, x) == oracle::dodgson_bfs(p, x));
    }
}

TEST_CASE("score is zero exactly for an existing strict majority winner") {
    Space s = Space::full(default_candidates(3), 3, true);
    for (std::size_t i = 0; i < s.size(); ++i) {
        Profile p = s.profile(i);
        for (int x = 0; x < 3; ++x) {
            bool condorcet = true;
            for (int y = 0; y < 3; ++y)
                if (y != x && margin(p, x, y) <= 0) condorcet = false;
            CHECK((dodgson_score(p, x) == 0) == condorcet);
        }
    }
}

TEST_CASE("score functions reject ballots with ties") {
    Profile tied = make_profile(default_candidates(3), {{1, {{"a", "b"}, {"c"}}}});
    CHECK_THROWS_AS(dodgson_score(tied, 0), std::invalid_argument);
    CHECK_THROWS_AS(dodgson_ccr(tied), std::invalid_argument);
}

TEST_CASE("near-unanimity rule matches its three defining clauses") {
    CandidateSetPtr c = default_candidates(3);
    // One deviant voter who swaps the top two of the common ballot x y z:
    // the social order is the majority ballot.
    Profile dev = make_profile(c, {{4, {{"a"}, {"b"}, {"c"}}}, {1, {{"b"}, {"a"}, {"c"}}}});
    CHECK(strict_set(baigent_witness_ccr(dev)) ==
          std::set<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}});

    // Two blocks splitting only on the bottom pair, larger block of size 3,
    // smaller of size 2: the larger block's ballot wins.
    Profile blocks = make_profile(c, {{3, {{"c"}, {"a"}, {"b"}}}, {2, {{"c"}, {"b"}, {"a"}}}});
    CHECK(strict_set(baigent_witness_ccr(blocks)) ==
          std::set<std::pair<int, int>>{{2, 0}, {2, 1}, {0, 1}});

    // Anything else: unanimity. |S2| = 1 block split is case (a) territory
    // only for top-two swaps; a bottom-pair single deviant is unanimity.
    Profile other = make_profile(c, {{3, {{"a"}, {"b"}, {"c"}}}, {2, {{"c"}, {"b"}, {"a"}}}});
    CHECK(baigent_witness_ccr(other) == unanimity_ccr(other));
}

TEST_CASE("registry covers the eight named rules and extras resolve") {
    std::vector<std::string> names;
    for (const CCRHandle& h : ccr_registry()) names.push_back(h.name);
    CHECK(names == std::vector<std::string>{"majority", "unanimity", "dictatorship",
                                            "copeland", "gillies", "ranked-pairs",
                                            "split-cycle", "baigent-witness"});
    for (const std::string& extra :
         {"dodgson", "majority-dodgson", "ranked-pairs-pi", "dictatorship-1"})
        CHECK(find_ccr(extra).has_value());
    CHECK_FALSE(find_ccr("no-such-rule").has_value());
    CHECK(find_ccr("dodgson")->linear_only);
    CHECK_FALSE(find_ccr("majority")->linear_only);

    // Determinism: same profile, same output.
    Profile p = fig_profile("fig5");
    for (const CCRHandle& h : ccr_registry()) CHECK(h.evaluate(p) == h.evaluate(p));
}

TEST_CASE("graph-determined rules depend only on the margin graph") {
    // Two different profiles with the same margin graph.
    CandidateSetPtr c = default_candidates(3);
    Profile p1 = make_profile(c, {{4, {{"a"}, {"b"}, {"c"}}},
                                  {2, {{"b"}, {"c"}, {"a"}}},
                                  {3, {{"c"}, {"a"}, {"b"}}}});
    // p1 plus one a > b > c ballot and its exact reverse: margins unchanged.
    Profile p2 = make_profile(c, {{5, {{"a"}, {"b"}, {"c"}}},
                                  {2, {{"b"}, {"c"}, {"a"}}},
                                  {3, {{"c"}, {"a"}, {"b"}}},
                                  {1, {{"c"}, {"b"}, {"a"}}}});
    REQUIRE(margin_graph(p1).adj == margin_graph(p2).adj);
    REQUIRE(margin_graph(p1).weight == margin_graph(p2).weight);
    CHECK(strict_set(split_cycle_ccr(p1)) == strict_set(split_cycle_ccr(p2)));
    CHECK(strict_set(ranked_pairs_ccr(RankedPairsPolicy::complete_closure, p1)) ==
          strict_set(ranked_pairs_ccr(RankedPairsPolicy::complete_closure, p2)));
    CHECK(strict_set(gillies_covering_ccr(p1)) == strict_set(gillies_covering_ccr(p2)));
}
