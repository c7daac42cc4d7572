#ifndef ASVOTE_FIGURES_HPP
#define ASVOTE_FIGURES_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "asvote/margins.hpp"

namespace asvote {

// A bundled election: a named set of profiles, or a margin graph, or both.
// The ids are stable interface names used by the CLI `figures` subcommand
// and by the golden files under data/golden/.
struct Figure {
    std::string id;
    std::string title;
    CandidateSetPtr candidates;
    std::vector<std::pair<std::string, Profile>> profiles;
    std::optional<PairwiseGraph<long long>> graph;
    std::string note;
};

const std::vector<std::string>& figure_ids();
std::optional<Figure> find_figure(const std::string& id);

// Deterministic plain-text report: the election data plus the relations the
// dataset illustrates. Byte-compared against the golden files.
std::string figure_report(const Figure& f);

}  // namespace asvote

#endif
