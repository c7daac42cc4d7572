#include "asvote/io.hpp"

#include <json.hpp>

namespace asvote {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON");
    return j;
}

std::string hex_digest(const std::string& raw) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(raw.size() * 2);
    for (unsigned char c : raw) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 0xf]);
    }
    return out;
}

std::string restriction_digest(const std::string& key) {
    std::string out;
    for (char c : key) out.push_back(c == 0 ? '>' : c == 1 ? '<' : '=');
    return out;
}

std::string rational_str(const Rational& r) {
    std::string out = std::to_string(r.numerator());
    if (r.denominator() != 1) out += "/" + std::to_string(r.denominator());
    return out;
}

json profile_json(const Profile& p) {
    json cand = json::array();
    for (const std::string& name : p.candidates()->names) cand.push_back(name);
    json ballots = json::array();
    for (int v = 0; v < p.num_voters(); ++v) {
        if (v > 0 && p.ranking(v) == p.ranking(v - 1)) {
            ballots.back()["count"] = ballots.back()["count"].get<int>() + 1;
            continue;
        }
        json levels = json::array();
        for (const std::vector<int>& level : p.ranking(v).levels()) {
            json names = json::array();
            for (int c : level) names.push_back(p.candidates()->names[c]);
            levels.push_back(names);
        }
        ballots.push_back({{"count", 1}, {"ranking", levels}});
    }
    return json{{"candidates", cand}, {"ballots", ballots}};
}

}  // namespace

Profile parse_profile_json(const std::string& text) {
    json j = parse(text);
    if (!j.is_object() || !j.contains("candidates") || !j.contains("ballots"))
        throw ParseError("expected an object with \"candidates\" and \"ballots\"");
    std::vector<std::string> names;
    for (const json& c : j["candidates"]) {
        if (!c.is_string()) throw ParseError("candidate names must be strings");
        names.push_back(c.get<std::string>());
    }
    if (names.empty() || names.size() > kMaxCandidates)
        throw ParseError("need between 1 and 8 candidates");
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t k = i + 1; k < names.size(); ++k)
            if (names[i] == names[k]) throw ParseError("duplicate candidate: " + names[i]);
    std::vector<BallotGroup> groups;
    int idx = 0;
    for (const json& b : j["ballots"]) {
        ++idx;
        std::string where = "ballot " + std::to_string(idx) + ": ";
        if (!b.is_object() || !b.contains("count") || !b.contains("ranking"))
            throw ParseError(where + "expected {\"count\", \"ranking\"}");
        if (!b["count"].is_number_integer() || b["count"].get<int>() < 1)
            throw ParseError(where + "count must be a positive integer");
        BallotGroup g;
        g.count = b["count"].get<int>();
        for (const json& level : b["ranking"]) {
            if (!level.is_array()) throw ParseError(where + "ranking levels must be arrays");
            std::vector<std::string> lv;
            for (const json& name : level) {
                if (!name.is_string()) throw ParseError(where + "candidate names must be strings");
                lv.push_back(name.get<std::string>());
            }
            g.ranking.push_back(std::move(lv));
        }
        groups.push_back(std::move(g));
    }
    if (groups.empty()) throw ParseError("need at least one ballot");
    try {
        return make_profile(make_candidates(names), groups);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::string profile_to_json(const Profile& p) {
    return profile_json(p).dump();
}

PairwiseGraph<long long> parse_margin_graph_json(const std::string& text,
                                                 CandidateSetPtr* names_out) {
    json j = parse(text);
    if (!j.is_object() || !j.contains("nodes") || !j.contains("edges"))
        throw ParseError("expected an object with \"nodes\" and \"edges\"");
    std::vector<std::string> names;
    for (const json& c : j["nodes"]) {
        if (!c.is_string()) throw ParseError("node names must be strings");
        names.push_back(c.get<std::string>());
    }
    if (names.empty() || names.size() > kMaxCandidates)
        throw ParseError("need between 1 and 8 nodes");
    CandidateSetPtr cands = make_candidates(names);
    PairwiseGraph<long long> g;
    g.n = cands->size();
    for (const json& e : j["edges"]) {
        if (!e.is_object() || !e.contains("from") || !e.contains("to") || !e.contains("weight"))
            throw ParseError("edges need \"from\", \"to\", \"weight\"");
        int x = cands->index_of(e["from"].get<std::string>());
        int y = cands->index_of(e["to"].get<std::string>());
        if (x < 0 || y < 0) throw ParseError("edge endpoint is not a listed node");
        if (x == y) throw ParseError("self-loops are not allowed");
        if (!e["weight"].is_number_integer() || e["weight"].get<long long>() <= 0)
            throw ParseError("edge weights must be positive integers");
        if (g.edge(x, y) || g.edge(y, x))
            throw ParseError("at most one edge per candidate pair");
        g.add(x, y, e["weight"].get<long long>());
    }
    if (names_out) *names_out = cands;
    return g;
}

std::string margin_graph_to_json(const PairwiseGraph<long long>& g, const CandidateSet& names) {
    json nodes = json::array();
    for (const std::string& n : names.names) nodes.push_back(n);
    json edges = json::array();
    for (int x = 0; x < g.n; ++x)
        for (int y = 0; y < g.n; ++y)
            if (g.edge(x, y))
                edges.push_back({{"from", names.names[x]},
                                 {"to", names.names[y]},
                                 {"weight", g.weight[x][y]}});
    return json{{"nodes", nodes}, {"edges", edges}}.dump();
}

std::string margin_graph_to_dot(const PairwiseGraph<long long>& g, const CandidateSet& names) {
    std::string out = "digraph margins {\n";
    for (const std::string& n : names.names) out += "  \"" + n + "\";\n";
    for (int x = 0; x < g.n; ++x)
        for (int y = 0; y < g.n; ++y)
            if (g.edge(x, y))
                out += "  \"" + names.names[x] + "\" -> \"" + names.names[y] + "\" [label=\"" +
                       std::to_string(g.weight[x][y]) + "\"];\n";
    out += "}\n";
    return out;
}

std::string relation_to_text(const Relation& r, const CandidateSet& names) {
    std::string p = "P:", i = "I:", n = "N:";
    for (int x = 0; x < r.size(); ++x)
        for (int y = 0; y < r.size(); ++y) {
            if (x == y) continue;
            std::string pair = " " + names.names[x] + names.names[y];
            if (r.has(x, y) && !r.has(y, x)) p += pair;
            if (x < y && r.has(x, y) && r.has(y, x)) i += pair;
            if (x < y && !r.has(x, y) && !r.has(y, x)) n += pair;
        }
    return p + "\n" + i + "\n" + n + "\n";
}

std::string axiom_report_to_json(const AxiomReport& rep, const CandidateSet& names) {
    json j{{"axiom", rep.axiom}, {"verdict", rep.holds ? "holds" : "fails"}};
    if (rep.witness) {
        json w;
        json profiles = json::array();
        for (const Profile& p : rep.witness->profiles) profiles.push_back(profile_json(p));
        w["profiles"] = profiles;
        if (rep.witness->x >= 0)
            w["pair"] = json::array({names.names[rep.witness->x], names.names[rep.witness->y]});
        w["detail"] = rep.witness->detail;
        j["witness"] = w;
    }
    return j.dump();
}

std::string rationalization_to_json(const Rationalization& r) {
    json j;
    j["group"] = r.group.kind == OrderedGroup::Kind::integer_additive
                     ? "integer-additive"
                     : "positive-rational-multiplicative";
    json adv = json::object(), std_ = json::object();
    for (const auto& [key, v] : r.advantage) {
        const auto& [x, y, digest] = key;
        adv[std::to_string(x) + ":" + std::to_string(y) + ":" + restriction_digest(digest)] =
            rational_str(v);
    }
    for (const auto& [key, v] : r.standard) {
        const auto& [x, y, digest] = key;
        std_[std::to_string(x) + ":" + std::to_string(y) + ":" + hex_digest(digest)] =
            rational_str(v);
    }
    j["advantage"] = adv;
    j["standard"] = std_;
    return j.dump();
}

}  // namespace asvote
