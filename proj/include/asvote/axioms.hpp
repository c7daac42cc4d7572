#ifndef ASVOTE_AXIOMS_HPP
#define ASVOTE_AXIOMS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>

#include "asvote/ccr.hpp"

namespace asvote {

struct Witness {
    std::vector<Profile> profiles;  // one or two, depending on the axiom
    int x = -1;
    int y = -1;
    std::string detail;
};

struct AxiomReport {
    std::string axiom;
    bool holds = false;
    std::optional<Witness> witness;  // present iff !holds
};

// A CCR evaluated over every profile of a space, with the outputs cached.
class EvaluatedSpace {
public:
    EvaluatedSpace(CCRHandle f, Space space);

    const Space& space() const { return space_; }
    const CCRHandle& ccr() const { return f_; }
    int num_candidates() const { return space_.candidates()->size(); }
    Relation relation(std::size_t idx) const {
        return Relation(num_candidates(), cache_[idx]);
    }
    // Index of a profile within a full space (by per-voter ranking index);
    // linear scan for explicit spaces.
    std::size_t index_of(const Profile& p) const;

private:
    CCRHandle f_;
    Space space_;
    std::vector<std::uint64_t> cache_;
};

enum class PairwiseAxiom { iia, weak_iia, pn_weak_iia, pi_weak_iia };
enum class UnaryAxiom {
    pareto,
    strong_pareto,
    pareto_indifference,
    sni,
    anonymity,
    neutrality,
    completeness,
    transitivity,
    acyclicity,
    negative_transitivity,
};
enum class PowerKind { dictator, inverse_dictator, weak_dictator, vetoer };
enum class CoalitionKind { weakly_decisive, almost_weakly_decisive };

std::string axiom_name(PairwiseAxiom a);
std::string axiom_name(UnaryAxiom a);

// Same-restriction comparisons between profiles, per ordered pair.
AxiomReport check_pairwise_axiom(const EvaluatedSpace& es, PairwiseAxiom axiom);
// Profile-local (or, for SNI, existential) checks.
AxiomReport check_unary_axiom(const EvaluatedSpace& es, UnaryAxiom axiom);

std::set<int> find_power_holders(const EvaluatedSpace& es, PowerKind kind);
// Coalitions as voter bitmasks.
std::set<std::uint32_t> find_decisive_coalitions(const EvaluatedSpace& es, CoalitionKind kind);

// Per ordered pair (x, y): the winning restrictions and the dominance
// digraph whose acyclicity decides whether a strength ordering exists.
struct PairAnalysis {
    int x = -1;
    int y = -1;
    // Restrictions Q with some context making the evaluated CCR output xPy,
    // keyed canonically, in first-seen enumeration order.
    std::vector<PairRestriction> winners;
    std::vector<std::string> winner_keys;
    // Arc i -> j: a shared context where winners[i] yields xPy and
    // winners[j] does not, so any valid ordering must put j strictly below i.
    std::vector<std::pair<int, int>> arcs;
    bool acyclic = false;
    // When acyclic: winner indices from weakest to strongest (every arc goes
    // from later to earlier in this list). When cyclic: a witness cycle.
    std::vector<int> order_ascending;
    std::vector<int> cycle;
};

PairAnalysis analyze_pair(const EvaluatedSpace& es, int x, int y);

struct OrderabilityResult {
    AxiomReport report;
    std::vector<PairAnalysis> pairs;  // all ordered pairs, canonical order
};

OrderabilityResult check_orderability(const EvaluatedSpace& es);

}  // namespace asvote

#endif
