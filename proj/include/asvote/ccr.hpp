#ifndef ASVOTE_CCR_HPP
#define ASVOTE_CCR_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "asvote/margins.hpp"

namespace asvote {

// Strict total priority over ordered candidate pairs; earlier entries win
// ties between equal-weight edges.
struct TieBreaker {
    std::vector<std::pair<int, int>> priority;

    static TieBreaker lexicographic(int n);
};

// x f y iff margin(x, y) >= 0 (off the diagonal).
Relation majority_ccr(const Profile& p);
// x f y iff every voter weakly prefers x to y.
Relation unanimity_ccr(const Profile& p);
// Copies voter i's weak order.
Relation dictatorship_ccr(int i, const Profile& p);
// x f y iff copeland_score(x) >= copeland_score(y), where the score counts
// candidates x majority-beats minus candidates that majority-beat x.
Relation copeland_ccr(const Profile& p);
long long copeland_score(const Profile& p, int x);

// Covering: xPy when x majority-beats y and every majority-dominator of x
// also dominates y; xIy when x and y have identical dominator and dominated
// sets; all other pairs noncomparable.
Relation gillies_covering_ccr(const Profile& p);
Relation gillies_covering(const PairwiseGraph<long long>& g);

// Processes edges by descending weight (t as tiebreak), locking each edge
// whose addition keeps the locked set acyclic. Returns the locked edge set,
// not its transitive closure.
Relation ranked_pairs_locked(const PairwiseGraph<long long>& g, const TieBreaker& t);
Relation ranked_pairs_locked(const PairwiseGraph<Rational>& g, const TieBreaker& t);
// Intersection of locked sets over all tie-breakers (enumerated only within
// maximal equal-weight edge groups).
Relation ranked_pairs_all(const PairwiseGraph<long long>& g);
Relation ranked_pairs_all(const PairwiseGraph<Rational>& g);

enum class RankedPairsPolicy {
    complete_closure,     // x f y iff (y, x) is not locked
    pareto_indifference,  // x f y iff (x, y) locked or all voters indifferent
};
Relation ranked_pairs_ccr(RankedPairsPolicy policy, const Profile& p,
                          Measure m = Measure::margin);

// Strict part: xPy iff margin(x,y) > 0 and margin(x,y) exceeds the splitting
// weight of every positive-margin cycle through both x and y. Weak part adds
// unanimous indifference. The two overloads implement the cycle-based
// definition and the equivalent strongest-path formulation.
Relation split_cycle_ccr(const Profile& p, Measure m = Measure::margin);
Relation split_cycle_ccr_paths(const Profile& p, Measure m = Measure::margin);
Relation split_cycle_strict(const PairwiseGraph<long long>& g);
Relation split_cycle_strict(const PairwiseGraph<Rational>& g);
Relation split_cycle_strict_paths(const PairwiseGraph<long long>& g);
Relation split_cycle_strict_paths(const PairwiseGraph<Rational>& g);

// Minimum number of adjacent inversions making x the Condorcet winner.
// Throws std::invalid_argument on non-linear ballots.
long long dodgson_score(const Profile& p, int x);
// x f y iff score(x) <= score(y).
Relation dodgson_ccr(const Profile& p);
// x f y iff scores are equal, or score(x) <= score(y) and margin(x,y) > 0.
Relation majority_dodgson_ccr(const Profile& p);

// Transitive, anonymous, neutral, Pareto, weak-IIA rule that is not
// orderable: near-unanimous profiles with one top-two deviant elect the
// majority ballot; two-block profiles split on the bottom pair (larger
// block > 1 < smaller block) elect the larger block's ballot; otherwise
// unanimity. Total on all profiles with |X| >= 2.
Relation baigent_witness_ccr(const Profile& p);

struct CCRHandle {
    std::string name;
    std::function<Relation(const Profile&)> evaluate;
    bool linear_only = false;  // domain restricted to linear-ballot profiles
};

// The eight named rules: majority, unanimity, dictatorship (voter 0),
// copeland, gillies, ranked-pairs, split-cycle, baigent-witness.
const std::vector<CCRHandle>& ccr_registry();
// Lookup by name; extra registry-external names: dodgson, majority-dodgson,
// dictatorship-<i>, ranked-pairs-pi. Returns nullopt for unknown names.
std::optional<CCRHandle> find_ccr(const std::string& name);

}  // namespace asvote

#endif
