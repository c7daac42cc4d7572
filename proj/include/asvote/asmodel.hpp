#ifndef ASVOTE_ASMODEL_HPP
#define ASVOTE_ASMODEL_HPP

#include <map>
#include <stdexcept>
#include <tuple>

#include "asvote/axioms.hpp"

namespace asvote {

// Totally ordered abelian group embedded in the rationals with their usual
// order: integers under addition, or positive rationals under multiplication.
struct OrderedGroup {
    enum class Kind { integer_additive, positive_rational_multiplicative };
    Kind kind = Kind::integer_additive;

    Rational identity() const {
        return kind == Kind::integer_additive ? Rational(0) : Rational(1);
    }
    Rational compose(const Rational& a, const Rational& b) const {
        return kind == Kind::integer_additive ? a + b : a * b;
    }
    Rational inverse(const Rational& a) const {
        return kind == Kind::integer_additive ? -a : Rational(1) / a;
    }
    bool contains(const Rational& a) const {
        return kind == Kind::integer_additive ? a.denominator() == 1 : a > 0;
    }
};

// Advantage keyed by (x, y, restriction key); standard by (x, y, context
// key). Keys are the canonical digests from PairRestriction/Preprofile.
struct Rationalization {
    OrderedGroup group;
    std::map<std::tuple<int, int, std::string>, Rational> advantage;
    std::map<std::tuple<int, int, std::string>, Rational> standard;
};

struct NotRationalizable : std::runtime_error {
    AxiomReport report;
    explicit NotRationalizable(AxiomReport r)
        : std::runtime_error("CCR is not rationalizable: " + r.axiom + " fails"),
          report(std::move(r)) {}
};

// Checks the sign-inversion and nonnegative-standard table conditions and
// the per-profile biconditional: strict social preference iff advantage
// exceeds standard. Throws std::out_of_range when a needed key is missing.
AxiomReport verify_rationalization(const EvaluatedSpace& es, const Rationalization& r);

// The canonical integer-valued rationalization: layer the winning
// restrictions of each ordered pair by the strength ordering, use the layer
// index as advantage, and per context the least layer index that wins there
// minus one as standard. Requires weak IIA and a strength ordering to exist;
// throws NotRationalizable with the failing report otherwise.
Rationalization construct_rationalization(const EvaluatedSpace& es);

// Standard for the covering rule: 0 when every candidate majority-preferred
// to x in the context is also majority-preferred to y, else |V|.
long long gillies_standard(const Preprofile& ctx, int x, int y);

// Standard for Ranked Pairs: the least k (minus one granularity step) whose
// k-weighted x -> y edge added to the context's graph gets locked.
long long ranked_pairs_standard_margin(const Preprofile& ctx, int x, int y);
Rational ranked_pairs_standard_ratio(const Preprofile& ctx, int x, int y);

// Standard for Split Cycle: the strongest path from y to x in the context
// (maximum over paths of the minimum edge weight), group identity if none.
long long split_cycle_standard_margin(const Preprofile& ctx, int x, int y);
Rational split_cycle_standard_ratio(const Preprofile& ctx, int x, int y);

// Closed-form rationalization tables materialized over a space.
Rationalization majority_rationalization(const Space& s);
Rationalization gillies_rationalization(const Space& s);
Rationalization ranked_pairs_rationalization(const Space& s, Measure m);
Rationalization split_cycle_rationalization(const Space& s, Measure m);

}  // namespace asvote

#endif
