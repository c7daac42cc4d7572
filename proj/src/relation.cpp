#include "asvote/relation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace asvote {

CandidateSetPtr make_candidates(std::vector<std::string> names) {
    if (names.empty() || names.size() > kMaxCandidates)
        throw std::invalid_argument("candidate set must have 1..8 elements");
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j])
                throw std::invalid_argument("duplicate candidate identifier: " + names[i]);
    return std::make_shared<const CandidateSet>(CandidateSet{std::move(names)});
}

CandidateSetPtr default_candidates(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
    return make_candidates(std::move(names));
}

std::uint64_t Relation::domain_mask(int n) {
    std::uint64_t row = (n >= 8) ? 0xffu : ((std::uint64_t{1} << n) - 1);
    std::uint64_t m = 0;
    for (int i = 0; i < n; ++i) m |= row << (i * 8);
    return m;
}

namespace {

std::uint64_t transpose_bits(std::uint64_t bits, int n) {
    std::uint64_t t = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if ((bits >> (i * 8 + j)) & 1u) t |= std::uint64_t{1} << (j * 8 + i);
    return t;
}

}  // namespace

Relation Relation::strict() const {
    return Relation(n_, bits_ & ~transpose_bits(bits_, n_));
}

Relation Relation::indiff() const {
    return Relation(n_, bits_ & transpose_bits(bits_, n_));
}

Relation Relation::noncomp() const {
    std::uint64_t u = bits_ | transpose_bits(bits_, n_);
    return Relation(n_, ~u & domain_mask(n_));
}

Relation transitive_closure(const Relation& r) {
    int n = r.size();
    std::array<std::uint64_t, 8> row{};
    for (int i = 0; i < n; ++i) row[i] = (r.bits() >> (i * 8)) & 0xffu;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if ((row[i] >> k) & 1u) row[i] |= row[k];
    std::uint64_t bits = 0;
    for (int i = 0; i < n; ++i) bits |= row[i] << (i * 8);
    return Relation(n, bits);
}

bool check_property(const Relation& r, RelationProperty prop) {
    int n = r.size();
    switch (prop) {
        case RelationProperty::reflexive:
            for (int i = 0; i < n; ++i)
                if (!r.has(i, i)) return false;
            return true;
        case RelationProperty::complete:
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (!r.has(i, j) && !r.has(j, i)) return false;
            return true;
        case RelationProperty::transitive:
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (r.has(i, j))
                        for (int k = 0; k < n; ++k)
                            if (r.has(j, k) && !r.has(i, k)) return false;
            return true;
        case RelationProperty::acyclic: {
            Relation closure = transitive_closure(r.strict());
            for (int i = 0; i < n; ++i)
                if (closure.has(i, i)) return false;
            return true;
        }
        case RelationProperty::negatively_transitive: {
            Relation p = r.strict();
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < n; ++k)
                        if (!p.has(i, j) && !p.has(j, k) && p.has(i, k)) return false;
            return true;
        }
        case RelationProperty::quasi_transitive:
            return check_property(r.strict(), RelationProperty::transitive);
    }
    return false;
}

WeakOrder::WeakOrder(const std::vector<int>& ranks) {
    if (ranks.empty() || ranks.size() > kMaxCandidates)
        throw std::invalid_argument("weak order needs 1..8 candidates");
    n_ = static_cast<int>(ranks.size());
    int maxr = 0;
    for (int v : ranks) {
        if (v < 0 || v >= n_) throw std::invalid_argument("rank out of range");
        maxr = std::max(maxr, v);
    }
    for (int lvl = 0; lvl <= maxr; ++lvl)
        if (std::find(ranks.begin(), ranks.end(), lvl) == ranks.end())
            throw std::invalid_argument("ranks must be used contiguously from 0");
    for (int i = 0; i < n_; ++i) ranks_[i] = static_cast<std::uint8_t>(ranks[i]);
}

WeakOrder WeakOrder::from_ranks_unchecked(const std::array<std::uint8_t, 8>& ranks, int n) {
    WeakOrder w;
    w.n_ = n;
    w.ranks_ = ranks;
    return w;
}

std::optional<WeakOrder> WeakOrder::from_relation(const Relation& r) {
    if (!check_property(r, RelationProperty::transitive) ||
        !check_property(r, RelationProperty::complete))
        return std::nullopt;
    int n = r.size();
    std::vector<int> ranks(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (r.has(j, i) && !r.has(i, j)) ++ranks[i];  // j strictly above i
    // Strict dominator counts collapse ties onto the same rank; compress.
    std::vector<int> distinct(ranks.begin(), ranks.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int& v : ranks)
        v = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), v) - distinct.begin());
    return WeakOrder(ranks);
}

bool WeakOrder::is_linear() const {
    std::uint32_t seen = 0;
    for (int i = 0; i < n_; ++i) {
        if (seen & (1u << ranks_[i])) return false;
        seen |= 1u << ranks_[i];
    }
    return true;
}

Relation WeakOrder::to_relation() const {
    Relation r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (ranks_[i] <= ranks_[j]) r.set(i, j);
    return r;
}

std::vector<std::vector<int>> WeakOrder::levels() const {
    int maxr = 0;
    for (int i = 0; i < n_; ++i) maxr = std::max<int>(maxr, ranks_[i]);
    std::vector<std::vector<int>> out(maxr + 1);
    for (int i = 0; i < n_; ++i) out[ranks_[i]].push_back(i);
    return out;
}

namespace {

std::vector<WeakOrder> enumerate_weak_orders(int n) {
    std::vector<WeakOrder> out;
    std::array<std::uint8_t, 8> ranks{};
    // Lexicographic sweep over rank vectors, keeping those whose rank values
    // form a contiguous block {0..max}.
    auto valid = [&]() {
        int maxr = 0;
        std::uint32_t seen = 0;
        for (int i = 0; i < n; ++i) {
            seen |= 1u << ranks[i];
            maxr = std::max<int>(maxr, ranks[i]);
        }
        return seen == (1u << (maxr + 1)) - 1;
    };
    while (true) {
        if (valid()) out.push_back(WeakOrder::from_ranks_unchecked(ranks, n));
        int i = n - 1;
        while (i >= 0 && ranks[i] == n - 1) ranks[i--] = 0;
        if (i < 0) break;
        ++ranks[i];
    }
    return out;
}

}  // namespace

const std::vector<WeakOrder>& all_weak_orders(int n) {
    static std::map<int, std::vector<WeakOrder>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, enumerate_weak_orders(n)).first;
    return it->second;
}

const std::vector<WeakOrder>& all_linear_orders(int n) {
    static std::map<int, std::vector<WeakOrder>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) {
        std::vector<WeakOrder> lin;
        for (const WeakOrder& w : all_weak_orders(n))
            if (w.is_linear()) lin.push_back(w);
        it = cache.emplace(n, std::move(lin)).first;
    }
    return it->second;
}

}  // namespace asvote
