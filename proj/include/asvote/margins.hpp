#ifndef ASVOTE_MARGINS_HPP
#define ASVOTE_MARGINS_HPP

#include <boost/rational.hpp>
#include <cstdint>
#include <set>
#include <vector>

#include "asvote/profile.hpp"

namespace asvote {

using Rational = boost::rational<long long>;

enum class Measure { margin, ratio };

// Margin(x, y) = #{voters with x over y} - #{voters with y over x}.
long long margin(const Profile& p, int x, int y);
long long margin(const Preprofile& p, int x, int y);

// Ratio(x, y): supporters/opposers when both are nonzero; |V| when there
// are supporters but no opposers; 1/|V| when there are opposers but no
// supporters; 1 when there are neither. With count_refined, the boundary
// cases use |V| + supporters (resp. 1 / (|V| + opposers)) instead.
Rational ratio(const Profile& p, int x, int y, bool count_refined = false);
Rational ratio(const Preprofile& p, int x, int y, bool count_refined = false);
Rational ratio(const PairRestriction& q, int num_voters, bool count_refined = false);

// Every value Ratio can take with num_voters voters, sorted ascending.
std::vector<Rational> ratio_value_set(int num_voters);
// Smallest gap between distinct values of the set above.
Rational ratio_granularity(int num_voters);

// Weighted digraph on the candidates with an arc x -> y for each pair where
// the measure strictly favors x over y (margin > 0, or ratio > 1).
template <typename W>
struct PairwiseGraph {
    int n = 0;
    // weight[x][y] is meaningful only when edge(x, y).
    std::array<std::array<W, 8>, 8> weight{};
    std::array<std::uint8_t, 8> adj{};  // bit j of adj[i]: edge i -> j

    bool edge(int x, int y) const { return (adj[x] >> y) & 1u; }
    void add(int x, int y, W w) {
        adj[x] |= std::uint8_t(1u << y);
        weight[x][y] = w;
    }
};

PairwiseGraph<long long> margin_graph(const Profile& p);
PairwiseGraph<long long> margin_graph(const Preprofile& p);
PairwiseGraph<Rational> ratio_graph(const Profile& p);
PairwiseGraph<Rational> ratio_graph(const Preprofile& p);

// Simple paths from src to dst along graph edges (each vertex at most once),
// as vertex sequences starting at src and ending at dst.
template <typename W>
std::vector<std::vector<int>> simple_paths(const PairwiseGraph<W>& g, int src, int dst);

// Splitting weight of a path or cycle given as a vertex sequence: the
// minimum arc weight along consecutive pairs (for a cycle, include the
// closing arc by appending the first vertex).
template <typename W>
W splitting_weight(const PairwiseGraph<W>& g, const std::vector<int>& path);

// Maximum over simple paths src -> dst of the path's splitting weight;
// empty_value when no path exists.
template <typename W>
W max_split_over_paths(const PairwiseGraph<W>& g, int src, int dst, W empty_value);

// All simple cycles through the graph, each as a vertex sequence without the
// repeated closing vertex, canonicalized to start at its smallest vertex.
template <typename W>
std::vector<std::vector<int>> simple_cycles(const PairwiseGraph<W>& g);

}  // namespace asvote

#endif
