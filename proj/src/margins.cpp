#include "asvote/margins.hpp"

#include <algorithm>
#include <stdexcept>

namespace asvote {

namespace {

struct PairCount {
    long long s = 0;  // supporters of x over y
    long long o = 0;  // opposers
};

PairCount count_pair(const Profile& p, int x, int y) {
    PairCount c;
    for (const WeakOrder& w : p.rankings()) {
        if (w.prefers(x, y))
            ++c.s;
        else if (w.prefers(y, x))
            ++c.o;
    }
    return c;
}

PairCount count_pair(const Preprofile& p, int x, int y) {
    PairCount c;
    for (int v = 0; v < p.voters(); ++v) {
        if (p.strictly_prefers(v, x, y))
            ++c.s;
        else if (p.strictly_prefers(v, y, x))
            ++c.o;
    }
    return c;
}

Rational ratio_of(PairCount c, long long nv, bool count_refined = false) {
    if (c.s > 0 && c.o > 0) return Rational(c.s, c.o);
    if (c.s > 0) return Rational(count_refined ? nv + c.s : nv);
    if (c.o > 0) return Rational(1, count_refined ? nv + c.o : nv);
    return Rational(1);
}

}  // namespace

long long margin(const Profile& p, int x, int y) {
    PairCount c = count_pair(p, x, y);
    return c.s - c.o;
}

long long margin(const Preprofile& p, int x, int y) {
    PairCount c = count_pair(p, x, y);
    return c.s - c.o;
}

Rational ratio(const Profile& p, int x, int y, bool count_refined) {
    return ratio_of(count_pair(p, x, y), p.num_voters(), count_refined);
}

Rational ratio(const Preprofile& p, int x, int y, bool count_refined) {
    return ratio_of(count_pair(p, x, y), p.voters(), count_refined);
}

Rational ratio(const PairRestriction& q, int num_voters, bool count_refined) {
    return ratio_of({q.supporters(), q.opposers()}, num_voters, count_refined);
}

std::vector<Rational> ratio_value_set(int num_voters) {
    if (num_voters < 1) throw std::invalid_argument("need at least one voter");
    std::set<Rational> vals;
    for (long long s = 0; s <= num_voters; ++s)
        for (long long o = 0; s + o <= num_voters; ++o)
            vals.insert(ratio_of({s, o}, num_voters));
    return {vals.begin(), vals.end()};
}

Rational ratio_granularity(int num_voters) {
    std::vector<Rational> vals = ratio_value_set(num_voters);
    Rational gap = vals.back() - vals.front();
    for (std::size_t i = 1; i < vals.size(); ++i) gap = std::min(gap, vals[i] - vals[i - 1]);
    return gap;
}

namespace {

template <typename W, typename Measure>
PairwiseGraph<W> build_graph(int n, W one, Measure m) {
    PairwiseGraph<W> g;
    g.n = n;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            W w = m(x, y);
            if (one < w) g.add(x, y, w);
        }
    return g;
}

}  // namespace

PairwiseGraph<long long> margin_graph(const Profile& p) {
    return build_graph<long long>(p.num_candidates(), 0,
                                  [&](int x, int y) { return margin(p, x, y); });
}

PairwiseGraph<long long> margin_graph(const Preprofile& p) {
    return build_graph<long long>(p.n, 0, [&](int x, int y) { return margin(p, x, y); });
}

PairwiseGraph<Rational> ratio_graph(const Profile& p) {
    return build_graph<Rational>(p.num_candidates(), Rational(1),
                                 [&](int x, int y) { return ratio(p, x, y); });
}

PairwiseGraph<Rational> ratio_graph(const Preprofile& p) {
    return build_graph<Rational>(p.n, Rational(1), [&](int x, int y) { return ratio(p, x, y); });
}

namespace {

template <typename W>
void paths_dfs(const PairwiseGraph<W>& g, int cur, int dst, std::uint8_t visited,
               std::vector<int>& stack, std::vector<std::vector<int>>& out) {
    if (cur == dst) {
        out.push_back(stack);
        return;
    }
    for (int next = 0; next < g.n; ++next) {
        if (!g.edge(cur, next) || ((visited >> next) & 1u)) continue;
        stack.push_back(next);
        paths_dfs(g, next, dst, std::uint8_t(visited | (1u << next)), stack, out);
        stack.pop_back();
    }
}

}  // namespace

template <typename W>
std::vector<std::vector<int>> simple_paths(const PairwiseGraph<W>& g, int src, int dst) {
    if (src == dst) throw std::invalid_argument("paths require distinct endpoints");
    std::vector<std::vector<int>> out;
    std::vector<int> stack{src};
    paths_dfs(g, src, dst, std::uint8_t(1u << src), stack, out);
    return out;
}

template <typename W>
W splitting_weight(const PairwiseGraph<W>& g, const std::vector<int>& path) {
    if (path.size() < 2) throw std::invalid_argument("path needs at least one arc");
    W w = g.weight[path[0]][path[1]];
    for (std::size_t i = 1; i + 1 < path.size(); ++i)
        w = std::min(w, g.weight[path[i]][path[i + 1]]);
    return w;
}

template <typename W>
W max_split_over_paths(const PairwiseGraph<W>& g, int src, int dst, W empty_value) {
    std::vector<std::vector<int>> paths = simple_paths(g, src, dst);
    if (paths.empty()) return empty_value;
    W best = splitting_weight(g, paths[0]);
    for (std::size_t i = 1; i < paths.size(); ++i)
        best = std::max(best, splitting_weight(g, paths[i]));
    return best;
}

template <typename W>
std::vector<std::vector<int>> simple_cycles(const PairwiseGraph<W>& g) {
    std::vector<std::vector<int>> out;
    // Enumerate cycles from their smallest vertex: paths start -> start.
    for (int start = 0; start < g.n; ++start) {
        std::vector<std::vector<int>> paths;
        std::vector<int> stack{start};
        // A cycle is a path back into start using vertices >= start only.
        // start is left unvisited so the closing arc can reach it; the DFS
        // stops as soon as it does.
        std::uint8_t low = std::uint8_t((1u << start) - 1u);
        for (int next = start + 1; next < g.n; ++next) {
            if (!g.edge(start, next)) continue;
            stack.push_back(next);
            paths_dfs(g, next, start, std::uint8_t(low | (1u << next)), stack, paths);
            stack.pop_back();
        }
        for (std::vector<int>& p : paths) {
            p.pop_back();  // drop the repeated closing vertex
            out.push_back(std::move(p));
        }
    }
    return out;
}

template std::vector<std::vector<int>> simple_paths(const PairwiseGraph<long long>&, int, int);
template std::vector<std::vector<int>> simple_paths(const PairwiseGraph<Rational>&, int, int);
template long long splitting_weight(const PairwiseGraph<long long>&, const std::vector<int>&);
template Rational splitting_weight(const PairwiseGraph<Rational>&, const std::vector<int>&);
template long long max_split_over_paths(const PairwiseGraph<long long>&, int, int, long long);
template Rational max_split_over_paths(const PairwiseGraph<Rational>&, int, int, Rational);
template std::vector<std::vector<int>> simple_cycles(const PairwiseGraph<long long>&);
template std::vector<std::vector<int>> simple_cycles(const PairwiseGraph<Rational>&);

}  // namespace asvote
