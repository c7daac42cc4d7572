#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "asvote/choice.hpp"
#include "asvote/figures.hpp"

using namespace asvote;

namespace {

Profile fig_profile(const std::string& id, const std::string& name = "profile") {
    Figure f = *find_figure(id);
    for (const auto& [n, p] : f.profiles)
        if (n == name) return p;
    throw std::runtime_error("no profile " + name + " in " + id);
}

ChoiceFunction maximal(Relation r) { return {std::move(r), ChoiceFunction::Mode::maximal}; }
ChoiceFunction greatest(Relation r) { return {std::move(r), ChoiceFunction::Mode::greatest}; }

constexpr std::uint8_t A = 1, B = 2, C = 4;

}  // namespace

TEST_CASE("maximal sets of the 10-voter majority relation") {
    Profile p = fig_profile("fig4");
    Relation r = find_ccr("majority")->evaluate(p);
    // a beats b, b beats c, a ties c.
    ChoiceFunction m = maximal(r);
    CHECK(m.choose(A | B | C) == A);
    CHECK(m.choose(B | C) == B);
    CHECK(m.choose(A | C) == (A | C));
    CHECK(m.choose(A | B) == A);
    CHECK(m.choose(A) == A);

    // Contraction from {a, c} to {a, b, c} drops c while keeping a: beta
    // fails, with exactly this subset pair as witness.
    AxiomReport rep = check_choice_condition(m, 3, ChoiceCondition::beta);
    CHECK_FALSE(rep.holds);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->detail.find("{0,2}") != std::string::npos);

    // The same relation fails negative transitivity of its strict part and
    // also path independence.
    CHECK_FALSE(check_property(r, RelationProperty::negatively_transitive));
    CHECK_FALSE(check_choice_condition(m, 3, ChoiceCondition::path_independence).holds);
}

TEST_CASE("covering output induces a path independent choice") {
    for (const char* id : {"fig3", "fig4", "fig5", "fig7"}) {
        Figure f = *find_figure(id);
        Relation r = f.graph ? gillies_covering(*f.graph)
                             : find_ccr("gillies")->evaluate(f.profiles.front().second);
        CHECK(check_property(r, RelationProperty::quasi_transitive));
        CHECK(check_choice_condition(maximal(r), r.size(), ChoiceCondition::path_independence)
                  .holds);
    }
}

TEST_CASE("quasi-transitive complete relations are path independent") {
    int checked = 0;
    for (std::uint32_t bits = 0; bits < (1u << 9); ++bits) {
        Relation r(3, (std::uint64_t{bits & 0x7} ) | (std::uint64_t{(bits >> 3) & 0x7} << 8) |
                          (std::uint64_t{(bits >> 6) & 0x7} << 16));
        if (!check_property(r, RelationProperty::complete)) continue;
        bool qt = check_property(r, RelationProperty::quasi_transitive);
        bool pi = check_choice_condition(maximal(r), 3, ChoiceCondition::path_independence).holds;
        CHECK(qt == pi);
        ++checked;
    }
    CHECK(checked > 0);
}

TEST_CASE("negatively transitive complete relations satisfy beta") {
    for (std::uint32_t bits = 0; bits < (1u << 9); ++bits) {
        Relation r(3, (std::uint64_t{bits & 0x7}) | (std::uint64_t{(bits >> 3) & 0x7} << 8) |
                          (std::uint64_t{(bits >> 6) & 0x7} << 16));
        if (!check_property(r, RelationProperty::complete)) continue;
        if (!check_property(r, RelationProperty::negatively_transitive)) continue;
        CHECK(check_choice_condition(maximal(r), 3, ChoiceCondition::beta).holds);
    }
}

TEST_CASE("maximal choice always satisfies the generalized condorcet axiom") {
    for (std::uint32_t bits = 0; bits < (1u << 9); ++bits) {
        Relation r(3, (std::uint64_t{bits & 0x7}) | (std::uint64_t{(bits >> 3) & 0x7} << 8) |
                          (std::uint64_t{(bits >> 6) & 0x7} << 16));
        CHECK(check_choice_condition(maximal(r), 3, ChoiceCondition::gca).holds);
    }
}

TEST_CASE("nonempty greatest choice everywhere forces reflexive completeness") {
    for (std::uint32_t bits = 0; bits < (1u << 9); ++bits) {
        Relation r(3, (std::uint64_t{bits & 0x7}) | (std::uint64_t{(bits >> 3) & 0x7} << 8) |
                          (std::uint64_t{(bits >> 6) & 0x7} << 16));
        ChoiceFunction g = greatest(r);
        bool nonempty = true;
        for (std::uint8_t s = 1; s < 8; ++s)
            if (g.choose(s) == 0) nonempty = false;
        if (nonempty) {
            CHECK(check_property(r, RelationProperty::reflexive));
            CHECK(check_property(r, RelationProperty::complete));
        }
        // And conversely for reflexive complete transitive relations.
        if (check_property(r, RelationProperty::reflexive) &&
            check_property(r, RelationProperty::complete) &&
            check_property(r, RelationProperty::transitive)) {
            for (std::uint8_t s = 1; s < 8; ++s) CHECK(g.choose(s) != 0);
        }
    }
}

TEST_CASE("cyclic strict part yields an empty maximal choice") {
    // a beats b beats c beats a.
    Relation r(3);
    r.set(0, 1), r.set(1, 2), r.set(2, 0);
    CHECK(maximal(r).choose(A | B | C) == 0);
    CHECK(maximal(r).choose(A | B) == A);
}

TEST_CASE("empty subset is rejected") {
    Relation r(3);
    CHECK_THROWS_AS(maximal(r).choose(0), std::invalid_argument);
    CHECK_THROWS_AS(greatest(r).choose(0), std::invalid_argument);
}

TEST_CASE("split cycle choice expands inconsistently on the 3-cycle graph") {
    Figure f6 = *find_figure("fig6");
    Relation r = split_cycle_strict(*f6.graph);
    ChoiceFunction m = maximal(r);
    CHECK(m.choose(A | B | C) == A);
    CHECK(m.choose(A | B) == A);
    // c survives against a alone but is excluded once b enters.
    CHECK((m.choose(A | C) & C) != 0);
    CHECK((m.choose(A | B | C) & C) == 0);
}
