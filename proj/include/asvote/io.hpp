#ifndef ASVOTE_IO_HPP
#define ASVOTE_IO_HPP

#include <string>

#include "asvote/asmodel.hpp"

namespace asvote {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// {"candidates":["a","b"],"ballots":[{"count":2,"ranking":[["a"],["b"]]}]}
// where ranking lists indifference classes from top to bottom.
Profile parse_profile_json(const std::string& text);
// Canonical form: ballots grouped in first-voter order, counts merged for
// adjacent equal ballots; serialize(parse(s)) is idempotent.
std::string profile_to_json(const Profile& p);

// {"nodes":["a","b"],"edges":[{"from":"a","to":"b","weight":5}]}
PairwiseGraph<long long> parse_margin_graph_json(const std::string& text,
                                                 CandidateSetPtr* names_out = nullptr);
std::string margin_graph_to_json(const PairwiseGraph<long long>& g, const CandidateSet& names);
std::string margin_graph_to_dot(const PairwiseGraph<long long>& g, const CandidateSet& names);

std::string relation_to_text(const Relation& r, const CandidateSet& names);

std::string axiom_report_to_json(const AxiomReport& rep, const CandidateSet& names);
std::string rationalization_to_json(const Rationalization& r);

}  // namespace asvote

#endif
