#ifndef ASVOTE_RELATION_HPP
#define ASVOTE_RELATION_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace asvote {

// Everything works with candidate indices into a CandidateSet; the declared
// order is canonical for serialization and permutation indexing.
inline constexpr int kMaxCandidates = 8;

struct CandidateSet {
    std::vector<std::string> names;

    int size() const { return static_cast<int>(names.size()); }
    int index_of(std::string_view name) const {
        for (int i = 0; i < size(); ++i)
            if (names[i] == name) return i;
        return -1;
    }
    bool operator==(const CandidateSet&) const = default;
};

using CandidateSetPtr = std::shared_ptr<const CandidateSet>;

CandidateSetPtr make_candidates(std::vector<std::string> names);
// "a", "b", "c", ... for quick construction of small domains.
CandidateSetPtr default_candidates(int n);

// Dense binary relation on up to 8 candidates. Bit (i*8 + j) is set iff
// candidate i relates to candidate j. Membership over the diagonal is stored
// explicitly; reflexivity is a checkable property, not an assumption.
class Relation {
public:
    Relation() = default;
    explicit Relation(int n, std::uint64_t bits = 0) : n_(n), bits_(bits & domain_mask(n)) {}

    int size() const { return n_; }
    std::uint64_t bits() const { return bits_; }

    bool has(int i, int j) const { return (bits_ >> (i * 8 + j)) & 1u; }
    void set(int i, int j, bool v = true) {
        std::uint64_t m = std::uint64_t{1} << (i * 8 + j);
        bits_ = v ? (bits_ | m) : (bits_ & ~m);
    }

    bool operator==(const Relation&) const = default;

    // P / I / N decomposition. For every ordered pair of distinct candidates
    // exactly one of xPy, yPx, xIy, xNy holds.
    Relation strict() const;
    Relation indiff() const;
    Relation noncomp() const;

    static std::uint64_t domain_mask(int n);

private:
    int n_ = 0;
    std::uint64_t bits_ = 0;
};

enum class RelationProperty {
    reflexive,
    complete,
    transitive,
    acyclic,
    negatively_transitive,  // applied to the strict part P(r)
    quasi_transitive,       // transitivity of the strict part P(r)
};

bool check_property(const Relation& r, RelationProperty prop);

// Smallest transitive superset (Warshall on the bit matrix).
Relation transitive_closure(const Relation& r);

// Transitive and complete relation, i.e. a ranking with ties. Stored as a
// rank per candidate, rank 0 on top; ranks used contiguously from 0.
class WeakOrder {
public:
    WeakOrder() = default;
    // Throws std::invalid_argument if ranks are not contiguous from 0.
    explicit WeakOrder(const std::vector<int>& ranks);

    static WeakOrder from_ranks_unchecked(const std::array<std::uint8_t, 8>& ranks, int n);
    static std::optional<WeakOrder> from_relation(const Relation& r);

    int size() const { return n_; }
    int rank(int i) const { return ranks_[i]; }
    bool weakly_prefers(int i, int j) const { return ranks_[i] <= ranks_[j]; }
    bool prefers(int i, int j) const { return ranks_[i] < ranks_[j]; }
    bool indifferent(int i, int j) const { return ranks_[i] == ranks_[j]; }
    bool is_linear() const;

    Relation to_relation() const;
    // Ordered indifference classes, top class first.
    std::vector<std::vector<int>> levels() const;

    bool operator==(const WeakOrder&) const = default;

private:
    int n_ = 0;
    std::array<std::uint8_t, 8> ranks_{};
};

// All weak orders on n candidates, in lexicographic order of rank vectors.
// Cardinalities are the ordered Bell numbers: 1, 3, 13, 75, 541, ...
const std::vector<WeakOrder>& all_weak_orders(int n);
// The linear ones, in the same global order.
const std::vector<WeakOrder>& all_linear_orders(int n);

}  // namespace asvote

#endif
