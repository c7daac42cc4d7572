#include "asvote/profile.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace asvote {

int PairRestriction::supporters() const {
    return static_cast<int>(std::count(sym.begin(), sym.end(), kXOverY));
}

int PairRestriction::opposers() const {
    return static_cast<int>(std::count(sym.begin(), sym.end(), kYOverX));
}

PairRestriction PairRestriction::reversed() const {
    PairRestriction out{y, x, sym};
    for (std::uint8_t& s : out.sym)
        if (s != kTied) s ^= 1u;
    return out;
}

std::string PairRestriction::key() const {
    return std::string(sym.begin(), sym.end());
}

std::string Preprofile::key() const {
    std::string out;
    out.reserve(rel.size() * 8);
    for (std::uint64_t m : rel)
        for (int b = 0; b < 8; ++b) out.push_back(static_cast<char>((m >> (b * 8)) & 0xffu));
    return out;
}

Profile::Profile(CandidateSetPtr cands, std::vector<WeakOrder> rankings)
    : cands_(std::move(cands)), rankings_(std::move(rankings)) {
    if (!cands_ || rankings_.empty())
        throw std::invalid_argument("profile needs a candidate set and at least one voter");
    for (const WeakOrder& w : rankings_)
        if (w.size() != cands_->size())
            throw std::invalid_argument("ballot domain does not match the candidate set");
}

bool Profile::all_linear() const {
    return std::all_of(rankings_.begin(), rankings_.end(),
                       [](const WeakOrder& w) { return w.is_linear(); });
}

PairRestriction Profile::restrict_to_pair(int x, int y) const {
    if (x == y) throw std::invalid_argument("pair restriction requires distinct candidates");
    PairRestriction out{x, y, {}};
    out.sym.reserve(rankings_.size());
    for (const WeakOrder& w : rankings_) {
        if (w.prefers(x, y))
            out.sym.push_back(PairRestriction::kXOverY);
        else if (w.prefers(y, x))
            out.sym.push_back(PairRestriction::kYOverX);
        else
            out.sym.push_back(PairRestriction::kTied);
    }
    return out;
}

Preprofile Profile::context(int x, int y) const {
    if (x == y) throw std::invalid_argument("context requires distinct candidates");
    Preprofile out{num_candidates(), {}};
    std::uint64_t erase = (std::uint64_t{1} << (x * 8 + y)) | (std::uint64_t{1} << (y * 8 + x));
    out.rel.reserve(rankings_.size());
    for (const WeakOrder& w : rankings_) out.rel.push_back(w.to_relation().bits() & ~erase);
    return out;
}

Profile Profile::permute_voters(std::span<const int> tau) const {
    if (static_cast<int>(tau.size()) != num_voters())
        throw std::invalid_argument("voter permutation size mismatch");
    std::vector<WeakOrder> out(rankings_.size());
    for (int i = 0; i < num_voters(); ++i) out[i] = rankings_[tau[i]];
    return Profile(cands_, std::move(out));
}

Profile Profile::permute_candidates(std::span<const int> pi) const {
    if (static_cast<int>(pi.size()) != num_candidates())
        throw std::invalid_argument("candidate permutation size mismatch");
    int n = num_candidates();
    std::vector<WeakOrder> out;
    out.reserve(rankings_.size());
    for (const WeakOrder& w : rankings_) {
        std::array<std::uint8_t, 8> ranks{};
        for (int c = 0; c < n; ++c) ranks[pi[c]] = static_cast<std::uint8_t>(w.rank(c));
        out.push_back(WeakOrder::from_ranks_unchecked(ranks, n));
    }
    return Profile(cands_, std::move(out));
}

Profile make_profile(const CandidateSetPtr& cands, const std::vector<BallotGroup>& ballots) {
    int n = cands->size();
    std::vector<WeakOrder> rankings;
    for (const BallotGroup& g : ballots) {
        if (g.count <= 0) throw std::invalid_argument("ballot count must be positive");
        std::vector<int> ranks(n, -1);
        for (std::size_t lvl = 0; lvl < g.ranking.size(); ++lvl)
            for (const std::string& name : g.ranking[lvl]) {
                int c = cands->index_of(name);
                if (c < 0) throw std::invalid_argument("unknown candidate: " + name);
                if (ranks[c] != -1) throw std::invalid_argument("candidate ranked twice: " + name);
                ranks[c] = static_cast<int>(lvl);
            }
        for (int c = 0; c < n; ++c)
            if (ranks[c] == -1)
                throw std::invalid_argument("candidate missing from ballot: " + cands->names[c]);
        WeakOrder w{ranks};
        for (int k = 0; k < g.count; ++k) rankings.push_back(w);
    }
    return Profile(cands, std::move(rankings));
}

std::uint64_t count_weak_orders(int n) {
    return all_weak_orders(n).size();
}

std::uint64_t count_profiles(int candidates, int voters, bool linear_only) {
    std::uint64_t base =
        linear_only ? all_linear_orders(candidates).size() : all_weak_orders(candidates).size();
    std::uint64_t out = 1;
    for (int i = 0; i < voters; ++i) {
        if (out > std::numeric_limits<std::uint64_t>::max() / base)
            return std::numeric_limits<std::uint64_t>::max();
        out *= base;
    }
    return out;
}

Space Space::full(CandidateSetPtr cands, int voters, bool linear_only) {
    if (voters < 1) throw std::invalid_argument("need at least one voter");
    Space s;
    s.cands_ = std::move(cands);
    s.voters_ = voters;
    s.full_ = true;
    s.linear_only_ = linear_only;
    return s;
}

Space Space::of(std::vector<Profile> profiles) {
    if (profiles.empty()) throw std::invalid_argument("explicit space must be nonempty");
    Space s;
    s.cands_ = profiles.front().candidates();
    s.voters_ = profiles.front().num_voters();
    for (const Profile& p : profiles)
        if (p.num_voters() != s.voters_ || !(*p.candidates() == *s.cands_))
            throw std::invalid_argument("profiles in a space must share candidates and voters");
    s.list_ = std::move(profiles);
    return s;
}

std::size_t Space::size() const {
    if (!full_) return list_.size();
    return count_profiles(cands_->size(), voters_, linear_only_);
}

Profile Space::profile(std::size_t idx) const {
    if (!full_) return list_.at(idx);
    const std::vector<WeakOrder>& alphabet =
        linear_only_ ? all_linear_orders(cands_->size()) : all_weak_orders(cands_->size());
    std::vector<WeakOrder> rankings(voters_);
    // Lexicographic: voter 0 is the most significant digit.
    for (int v = voters_ - 1; v >= 0; --v) {
        rankings[v] = alphabet[idx % alphabet.size()];
        idx /= alphabet.size();
    }
    return Profile(cands_, std::move(rankings));
}

}  // namespace asvote
