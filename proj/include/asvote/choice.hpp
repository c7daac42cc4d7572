#ifndef ASVOTE_CHOICE_HPP
#define ASVOTE_CHOICE_HPP

#include "asvote/axioms.hpp"

namespace asvote {

// Choice over nonempty candidate subsets (bitmasks) induced by a relation:
// maximal mode keeps elements not strictly beaten within the subset, greatest
// mode keeps elements weakly preferred to everything in the subset.
struct ChoiceFunction {
    enum class Mode { maximal, greatest };
    Relation base;
    Mode mode = Mode::maximal;

    // Throws std::invalid_argument on an empty subset. Maximal choice on a
    // cyclic strict part may legitimately return the empty set.
    std::uint8_t choose(std::uint8_t subset) const;
};

enum class ChoiceCondition { path_independence, beta, gca };

std::string condition_name(ChoiceCondition c);

// path_independence: C(Y1 u Y2) = C(C(Y1) u C(Y2)) for all nonempty Y1, Y2.
// beta: nonempty Y subset of Z and C(Y) meets C(Z) implies C(Y) subset of C(Z).
// gca (generalized Condorcet): x in Y and x in C({x, y}) for all y in Y
// implies x in C(Y).
AxiomReport check_choice_condition(const ChoiceFunction& c, int num_candidates,
                                   ChoiceCondition cond);

}  // namespace asvote

#endif
