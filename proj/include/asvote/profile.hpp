#ifndef ASVOTE_PROFILE_HPP
#define ASVOTE_PROFILE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "asvote/relation.hpp"

namespace asvote {

// Per-voter projection of a profile to one ordered candidate pair (x, y).
// Voter ballots are complete on {x, y}, so each voter shows exactly one of
// x over y, y over x, or a tie.
struct PairRestriction {
    enum Symbol : std::uint8_t { kXOverY = 0, kYOverX = 1, kTied = 2 };

    int x = 0;
    int y = 0;
    std::vector<std::uint8_t> sym;  // one Symbol per voter

    int supporters() const;  // voters with x over y
    int opposers() const;    // voters with y over x
    long long margin() const { return supporters() - opposers(); }

    PairRestriction reversed() const;
    // Canonical grouping key (does not include the pair itself).
    std::string key() const;

    bool operator==(const PairRestriction&) const = default;
};

// A function from voters to arbitrary binary relations on the candidates.
// Profiles with a pair deleted from every ballot land here.
struct Preprofile {
    int n = 0;                       // candidates
    std::vector<std::uint64_t> rel;  // per-voter relation bit masks

    int voters() const { return static_cast<int>(rel.size()); }
    bool has(int voter, int i, int j) const { return (rel[voter] >> (i * 8 + j)) & 1u; }
    bool strictly_prefers(int voter, int i, int j) const {
        return has(voter, i, j) && !has(voter, j, i);
    }
    std::string key() const;

    bool operator==(const Preprofile&) const = default;
};

// A weak order per voter over a common candidate set (universal domain).
class Profile {
public:
    Profile() = default;
    Profile(CandidateSetPtr cands, std::vector<WeakOrder> rankings);

    int num_candidates() const { return cands_->size(); }
    int num_voters() const { return static_cast<int>(rankings_.size()); }
    const CandidateSetPtr& candidates() const { return cands_; }
    const WeakOrder& ranking(int voter) const { return rankings_[voter]; }
    const std::vector<WeakOrder>& rankings() const { return rankings_; }

    bool all_linear() const;

    // R|_{x,y}; throws std::invalid_argument if x == y.
    PairRestriction restrict_to_pair(int x, int y) const;
    // R^{-x,y}: every ballot with the two ordered pairs on {x,y} deleted.
    // Context equality is the grouping key for same-context comparisons.
    Preprofile context(int x, int y) const;

    Profile permute_voters(std::span<const int> tau) const;   // R^tau(i) = R(tau(i))
    Profile permute_candidates(std::span<const int> pi) const;  // R^pi(i) = pi R(i)

    bool operator==(const Profile& o) const {
        return *cands_ == *o.cands_ && rankings_ == o.rankings_;
    }

private:
    CandidateSetPtr cands_;
    std::vector<WeakOrder> rankings_;
};

// Convenience for tests and bundled elections: ballots as (count, ranking
// levels by candidate name), e.g. {4, {{"a"}, {"b", "c"}}}.
struct BallotGroup {
    int count;
    std::vector<std::vector<std::string>> ranking;
};
Profile make_profile(const CandidateSetPtr& cands, const std::vector<BallotGroup>& ballots);

std::uint64_t count_weak_orders(int n);
// |O(X)|^|V| (or |L(X)|^|V| with linear_only), saturating at UINT64_MAX.
std::uint64_t count_profiles(int candidates, int voters, bool linear_only = false);

// Enumerated profile space: either the full space for (candidates, voters),
// in lexicographic order over per-voter weak-order indices, or an explicit
// list of profiles on a common candidate set.
class Space {
public:
    static Space full(CandidateSetPtr cands, int voters, bool linear_only = false);
    static Space of(std::vector<Profile> profiles);

    std::size_t size() const;
    Profile profile(std::size_t idx) const;
    const CandidateSetPtr& candidates() const { return cands_; }
    int voters() const { return voters_; }
    bool full_space() const { return full_; }
    bool linear_only() const { return linear_only_; }

private:
    CandidateSetPtr cands_;
    int voters_ = 0;
    bool full_ = false;
    bool linear_only_ = false;
    std::vector<Profile> list_;
};

}  // namespace asvote

#endif
