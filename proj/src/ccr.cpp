#include "asvote/ccr.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace asvote {

namespace {

bool all_indifferent(const Profile& p, int x, int y) {
    for (const WeakOrder& w : p.rankings())
        if (!w.indifferent(x, y)) return false;
    return true;
}

Relation identity_relation(int n) {
    Relation r(n);
    for (int i = 0; i < n; ++i) r.set(i, i);
    return r;
}

}  // namespace

TieBreaker TieBreaker::lexicographic(int n) {
    TieBreaker t;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y) t.priority.emplace_back(x, y);
    return t;
}

Relation majority_ccr(const Profile& p) {
    int n = p.num_candidates();
    Relation r = identity_relation(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y && margin(p, x, y) >= 0) r.set(x, y);
    return r;
}

Relation unanimity_ccr(const Profile& p) {
    int n = p.num_candidates();
    Relation r(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            bool all = true;
            for (const WeakOrder& w : p.rankings()) all = all && w.weakly_prefers(x, y);
            if (all) r.set(x, y);
        }
    return r;
}

Relation dictatorship_ccr(int i, const Profile& p) {
    if (i < 0 || i >= p.num_voters()) throw std::invalid_argument("dictator index out of range");
    return p.ranking(i).to_relation();
}

long long copeland_score(const Profile& p, int x) {
    long long s = 0;
    for (int y = 0; y < p.num_candidates(); ++y) {
        if (y == x) continue;
        long long m = margin(p, x, y);
        if (m > 0) ++s;
        if (m < 0) --s;
    }
    return s;
}

Relation copeland_ccr(const Profile& p) {
    int n = p.num_candidates();
    std::vector<long long> score(n);
    for (int x = 0; x < n; ++x) score[x] = copeland_score(p, x);
    Relation r(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (score[x] >= score[y]) r.set(x, y);
    return r;
}

Relation gillies_covering(const PairwiseGraph<long long>& g) {
    int n = g.n;
    // dominators[x]: bit v set when v majority-beats x; dominated[x]: x beats v.
    std::array<std::uint8_t, 8> dominators{}, dominated{};
    for (int x = 0; x < n; ++x) {
        dominated[x] = g.adj[x];
        for (int v = 0; v < n; ++v)
            if (g.edge(v, x)) dominators[x] |= std::uint8_t(1u << v);
    }
    Relation r(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            bool pcov = x != y && g.edge(x, y) && (dominators[x] & ~dominators[y]) == 0;
            bool icov = dominators[x] == dominators[y] && dominated[x] == dominated[y];
            if (pcov || icov) r.set(x, y);
        }
    return r;
}

Relation gillies_covering_ccr(const Profile& p) {
    return gillies_covering(margin_graph(p));
}

namespace {

// Does the locked set (adjacency rows) let src reach dst?
bool reaches(const std::array<std::uint8_t, 8>& adj, int n, int src, int dst) {
    std::uint8_t seen = std::uint8_t(1u << src);
    std::uint8_t frontier = seen;
    while (frontier) {
        std::uint8_t next = 0;
        for (int v = 0; v < n; ++v)
            if ((frontier >> v) & 1u) next |= adj[v];
        frontier = next & ~seen;
        seen |= next;
    }
    return (seen >> dst) & 1u;
}

template <typename W>
Relation lock_in_order(const PairwiseGraph<W>& g,
                       const std::vector<std::pair<int, int>>& order) {
    std::array<std::uint8_t, 8> locked{};
    for (auto [x, y] : order)
        if (!reaches(locked, g.n, y, x)) locked[x] |= std::uint8_t(1u << y);
    Relation r(g.n);
    for (int x = 0; x < g.n; ++x)
        for (int y = 0; y < g.n; ++y)
            if ((locked[x] >> y) & 1u) r.set(x, y);
    return r;
}

template <typename W>
std::vector<std::pair<int, int>> graph_edges_by_weight(const PairwiseGraph<W>& g) {
    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < g.n; ++x)
        for (int y = 0; y < g.n; ++y)
            if (g.edge(x, y)) edges.emplace_back(x, y);
    std::stable_sort(edges.begin(), edges.end(), [&](auto a, auto b) {
        return g.weight[a.first][a.second] > g.weight[b.first][b.second];
    });
    return edges;
}

template <typename W>
Relation ranked_pairs_locked_impl(const PairwiseGraph<W>& g, const TieBreaker& t) {
    std::vector<std::pair<int, int>> edges = graph_edges_by_weight(g);
    std::array<std::array<int, 8>, 8> rank{};
    for (std::size_t i = 0; i < t.priority.size(); ++i)
        rank[t.priority[i].first][t.priority[i].second] = static_cast<int>(i);
    std::stable_sort(edges.begin(), edges.end(), [&](auto a, auto b) {
        const W &wa = g.weight[a.first][a.second], &wb = g.weight[b.first][b.second];
        if (wa != wb) return wa > wb;
        return rank[a.first][a.second] < rank[b.first][b.second];
    });
    return lock_in_order(g, edges);
}

template <typename W>
Relation ranked_pairs_all_impl(const PairwiseGraph<W>& g) {
    std::vector<std::pair<int, int>> edges = graph_edges_by_weight(g);
    // Maximal runs of equal weight; orders across runs are forced.
    std::vector<std::pair<std::size_t, std::size_t>> groups;
    for (std::size_t i = 0; i < edges.size();) {
        std::size_t j = i + 1;
        while (j < edges.size() &&
               g.weight[edges[j].first][edges[j].second] ==
                   g.weight[edges[i].first][edges[i].second])
            ++j;
        groups.emplace_back(i, j);
        i = j;
    }
    std::uint64_t kept = Relation::domain_mask(g.n);
    auto sweep = [&](auto&& self, std::size_t gi) -> void {
        if (gi == groups.size()) {
            kept &= lock_in_order(g, edges).bits();
            return;
        }
        auto [b, e] = groups[gi];
        std::sort(edges.begin() + b, edges.begin() + e);
        do {
            self(self, gi + 1);
        } while (std::next_permutation(edges.begin() + b, edges.begin() + e));
    };
    sweep(sweep, 0);
    return Relation(g.n, kept);
}

}  // namespace

Relation ranked_pairs_locked(const PairwiseGraph<long long>& g, const TieBreaker& t) {
    return ranked_pairs_locked_impl(g, t);
}

Relation ranked_pairs_locked(const PairwiseGraph<Rational>& g, const TieBreaker& t) {
    return ranked_pairs_locked_impl(g, t);
}

Relation ranked_pairs_all(const PairwiseGraph<long long>& g) {
    return ranked_pairs_all_impl(g);
}

Relation ranked_pairs_all(const PairwiseGraph<Rational>& g) {
    return ranked_pairs_all_impl(g);
}

Relation ranked_pairs_ccr(RankedPairsPolicy policy, const Profile& p, Measure m) {
    int n = p.num_candidates();
    Relation locked = m == Measure::margin ? ranked_pairs_all(margin_graph(p))
                                           : ranked_pairs_all(ratio_graph(p));
    Relation r(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            bool in;
            if (policy == RankedPairsPolicy::complete_closure)
                in = !locked.has(y, x);
            else
                in = locked.has(x, y) || all_indifferent(p, x, y);
            if (in) r.set(x, y);
        }
    return r;
}

namespace {

template <typename W>
Relation split_cycle_strict_impl(const PairwiseGraph<W>& g) {
    std::vector<std::vector<int>> cycles = simple_cycles(g);
    Relation r(g.n);
    for (int x = 0; x < g.n; ++x)
        for (int y = 0; y < g.n; ++y) {
            if (!g.edge(x, y)) continue;
            bool ok = true;
            for (const std::vector<int>& c : cycles) {
                bool hasx = std::find(c.begin(), c.end(), x) != c.end();
                bool hasy = std::find(c.begin(), c.end(), y) != c.end();
                if (!hasx || !hasy) continue;
                std::vector<int> closed = c;
                closed.push_back(c.front());
                if (!(g.weight[x][y] > splitting_weight(g, closed))) {
                    ok = false;
                    break;
                }
            }
            if (ok) r.set(x, y);
        }
    return r;
}

template <typename W>
Relation split_cycle_strict_paths_impl(const PairwiseGraph<W>& g) {
    Relation r(g.n);
    for (int x = 0; x < g.n; ++x)
        for (int y = 0; y < g.n; ++y) {
            if (!g.edge(x, y)) continue;
            bool ok = true;
            for (const std::vector<int>& path : simple_paths(g, y, x))
                if (!(g.weight[x][y] > splitting_weight(g, path))) {
                    ok = false;
                    break;
                }
            if (ok) r.set(x, y);
        }
    return r;
}

Relation split_cycle_weak(const Profile& p, const Relation& strict) {
    int n = p.num_candidates();
    Relation r = strict;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (all_indifferent(p, x, y)) r.set(x, y);
    return r;
}

}  // namespace

Relation split_cycle_strict(const PairwiseGraph<long long>& g) {
    return split_cycle_strict_impl(g);
}

Relation split_cycle_strict(const PairwiseGraph<Rational>& g) {
    return split_cycle_strict_impl(g);
}

Relation split_cycle_strict_paths(const PairwiseGraph<long long>& g) {
    return split_cycle_strict_paths_impl(g);
}

Relation split_cycle_strict_paths(const PairwiseGraph<Rational>& g) {
    return split_cycle_strict_paths_impl(g);
}

Relation split_cycle_ccr(const Profile& p, Measure m) {
    Relation strict = m == Measure::margin ? split_cycle_strict(margin_graph(p))
                                           : split_cycle_strict(ratio_graph(p));
    return split_cycle_weak(p, strict);
}

Relation split_cycle_ccr_paths(const Profile& p, Measure m) {
    Relation strict = m == Measure::margin ? split_cycle_strict_paths(margin_graph(p))
                                           : split_cycle_strict_paths(ratio_graph(p));
    return split_cycle_weak(p, strict);
}

namespace {

struct DodgsonSearch {
    int n = 0;
    int x = 0;
    // Ballot types: candidates above x, nearest first, with multiplicity.
    std::vector<std::vector<int>> above;
    std::vector<int> mult;
    std::vector<long long> deficit;  // flips still needed per candidate
    long long best = 0;

    long long deficit_sum() const {
        long long s = 0;
        for (long long d : deficit) s += std::max(d, 0LL);
        return s;
    }

    // Voters of a type raise by non-increasing amounts; amounts chosen
    // voter-by-voter within the type, capped by the previous voter's amount.
    void dfs(std::size_t type, int left_in_type, int cap, long long cost) {
        if (cost + deficit_sum() >= best) return;
        if (deficit_sum() == 0) {
            best = cost;
            return;
        }
        if (type == above.size()) return;
        if (left_in_type == 0) {
            std::size_t next = type + 1;
            dfs(next, next < above.size() ? mult[next] : 0,
                next < above.size() ? static_cast<int>(above[next].size()) : 0, cost);
            return;
        }
        for (int k = std::min(cap, static_cast<int>(above[type].size())); k >= 0; --k) {
            for (int j = 0; j < k; ++j) --deficit[above[type][j]];
            dfs(type, left_in_type - 1, k, cost + k);
            for (int j = 0; j < k; ++j) ++deficit[above[type][j]];
            if (k == 0) break;
        }
    }
};

}  // namespace

long long dodgson_score(const Profile& p, int x) {
    if (!p.all_linear())
        throw std::invalid_argument("Dodgson scores are defined for linear ballots only");
    int n = p.num_candidates();
    DodgsonSearch s;
    s.n = n;
    s.x = x;
    std::map<std::vector<int>, int> types;
    long long worst = 0;
    for (const WeakOrder& w : p.rankings()) {
        std::vector<int> abv;
        for (int d = w.rank(x) - 1; d >= 0; --d)
            for (int c = 0; c < n; ++c)
                if (w.rank(c) == d) abv.push_back(c);
        worst += static_cast<long long>(abv.size());
        ++types[abv];
    }
    for (auto& [abv, count] : types) {
        s.above.push_back(abv);
        s.mult.push_back(count);
    }
    s.deficit.assign(n, 0);
    for (int y = 0; y < n; ++y) {
        if (y == x) continue;
        long long m = margin(p, x, y);
        if (m <= 0) s.deficit[y] = (-m) / 2 + 1;
    }
    if (s.deficit_sum() == 0) return 0;
    s.best = worst + 1;  // raising x to the top everywhere always succeeds
    s.dfs(0, s.mult.empty() ? 0 : s.mult[0],
          s.above.empty() ? 0 : static_cast<int>(s.above[0].size()), 0);
    return s.best;
}

Relation dodgson_ccr(const Profile& p) {
    int n = p.num_candidates();
    std::vector<long long> score(n);
    for (int x = 0; x < n; ++x) score[x] = dodgson_score(p, x);
    Relation r(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (score[x] <= score[y]) r.set(x, y);
    return r;
}

Relation majority_dodgson_ccr(const Profile& p) {
    int n = p.num_candidates();
    std::vector<long long> score(n);
    for (int x = 0; x < n; ++x) score[x] = dodgson_score(p, x);
    Relation r(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (score[x] == score[y] || (score[x] <= score[y] && margin(p, x, y) > 0))
                r.set(x, y);
    return r;
}

namespace {

// The two ballots of a two-value profile, with counts, ordered by count
// descending (count tie keeps first-occurrence order).
struct TwoBallots {
    WeakOrder big, small;
    int big_count = 0, small_count = 0;
};

std::optional<TwoBallots> split_two(const Profile& p) {
    TwoBallots t;
    for (const WeakOrder& w : p.rankings()) {
        if (t.big_count == 0 || w == t.big)
            t.big = w, ++t.big_count;
        else if (t.small_count == 0 || w == t.small)
            t.small = w, ++t.small_count;
        else
            return std::nullopt;
    }
    if (t.small_count == 0) return std::nullopt;
    if (t.small_count > t.big_count) std::swap(t.big, t.small), std::swap(t.big_count, t.small_count);
    return t;
}

// b == a with the candidates at rank positions r and r+1 swapped?
bool is_adjacent_swap(const WeakOrder& a, const WeakOrder& b, int r) {
    if (!a.is_linear() || !b.is_linear()) return false;
    for (int c = 0; c < a.size(); ++c) {
        int exp = a.rank(c);
        if (exp == r)
            exp = r + 1;
        else if (exp == r + 1)
            exp = r;
        if (b.rank(c) != exp) return false;
    }
    return true;
}

}  // namespace

Relation baigent_witness_ccr(const Profile& p) {
    int n = p.num_candidates();
    if (n >= 3) {
        if (std::optional<TwoBallots> t = split_two(p)) {
            // Near-unanimity with a single top-two deviant. At two voters the
            // deviant is ambiguous, so the pattern is only read at |V| >= 3.
            if (p.num_voters() >= 3 && t->small_count == 1 &&
                is_adjacent_swap(t->big, t->small, 0))
                return t->big.to_relation();
            // Two blocks split on the bottom pair, strictly larger block wins.
            if (t->big_count > t->small_count && t->small_count > 1 &&
                is_adjacent_swap(t->big, t->small, n - 2))
                return t->big.to_relation();
        }
    }
    return unanimity_ccr(p);
}

const std::vector<CCRHandle>& ccr_registry() {
    static const std::vector<CCRHandle> reg = {
        {"majority", majority_ccr},
        {"unanimity", unanimity_ccr},
        {"dictatorship", [](const Profile& p) { return dictatorship_ccr(0, p); }},
        {"copeland", copeland_ccr},
        {"gillies", gillies_covering_ccr},
        {"ranked-pairs",
         [](const Profile& p) { return ranked_pairs_ccr(RankedPairsPolicy::complete_closure, p); }},
        {"split-cycle", [](const Profile& p) { return split_cycle_ccr(p); }},
        {"baigent-witness", baigent_witness_ccr},
    };
    return reg;
}

std::optional<CCRHandle> find_ccr(const std::string& name) {
    for (const CCRHandle& h : ccr_registry())
        if (h.name == name) return h;
    if (name == "dodgson") return CCRHandle{name, dodgson_ccr, true};
    if (name == "majority-dodgson") return CCRHandle{name, majority_dodgson_ccr, true};
    if (name == "ranked-pairs-pi")
        return CCRHandle{name, [](const Profile& p) {
                             return ranked_pairs_ccr(RankedPairsPolicy::pareto_indifference, p);
                         }};
    if (name.starts_with("dictatorship-")) {
        int i = std::stoi(name.substr(13));
        return CCRHandle{name, [i](const Profile& p) { return dictatorship_ccr(i, p); }};
    }
    return std::nullopt;
}

}  // namespace asvote
