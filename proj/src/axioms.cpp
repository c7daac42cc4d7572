#include "asvote/axioms.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace asvote {

namespace {

// Pack a weak order's rank vector for table lookup.
std::uint64_t pack_ranks(const WeakOrder& w) {
    std::uint64_t k = 0;
    for (int i = 0; i < w.size(); ++i) k |= std::uint64_t(w.rank(i)) << (i * 8);
    return k;
}

int weak_order_index(int n, const WeakOrder& w) {
    static std::unordered_map<std::uint64_t, int> table[kMaxCandidates + 1];
    auto& t = table[n];
    if (t.empty()) {
        const std::vector<WeakOrder>& all = all_weak_orders(n);
        for (std::size_t i = 0; i < all.size(); ++i) t[pack_ranks(all[i])] = static_cast<int>(i);
    }
    return t.at(pack_ranks(w));
}

int linear_order_index(int n, const WeakOrder& w) {
    static std::unordered_map<std::uint64_t, int> table[kMaxCandidates + 1];
    auto& t = table[n];
    if (t.empty()) {
        const std::vector<WeakOrder>& all = all_linear_orders(n);
        for (std::size_t i = 0; i < all.size(); ++i) t[pack_ranks(all[i])] = static_cast<int>(i);
    }
    return t.at(pack_ranks(w));
}

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

Relation relabel(const Relation& r, std::span<const int> pi) {
    Relation out(r.size());
    for (int i = 0; i < r.size(); ++i)
        for (int j = 0; j < r.size(); ++j)
            if (r.has(i, j)) out.set(pi[i], pi[j]);
    return out;
}

}  // namespace

EvaluatedSpace::EvaluatedSpace(CCRHandle f, Space space) : f_(std::move(f)), space_(std::move(space)) {
    cache_.reserve(space_.size());
    for (std::size_t i = 0; i < space_.size(); ++i)
        cache_.push_back(f_.evaluate(space_.profile(i)).bits());
}

std::size_t EvaluatedSpace::index_of(const Profile& p) const {
    if (space_.full_space()) {
        int n = num_candidates();
        std::size_t base = space_.linear_only() ? all_linear_orders(n).size()
                                                : all_weak_orders(n).size();
        std::size_t idx = 0;
        for (int v = 0; v < p.num_voters(); ++v)
            idx = idx * base + (space_.linear_only() ? linear_order_index(n, p.ranking(v))
                                                     : weak_order_index(n, p.ranking(v)));
        return idx;
    }
    for (std::size_t i = 0; i < space_.size(); ++i)
        if (space_.profile(i) == p) return i;
    throw std::out_of_range("profile not in space");
}

std::string axiom_name(PairwiseAxiom a) {
    switch (a) {
        case PairwiseAxiom::iia: return "iia";
        case PairwiseAxiom::weak_iia: return "weak-iia";
        case PairwiseAxiom::pn_weak_iia: return "pn-weak-iia";
        case PairwiseAxiom::pi_weak_iia: return "pi-weak-iia";
    }
    return {};
}

std::string axiom_name(UnaryAxiom a) {
    switch (a) {
        case UnaryAxiom::pareto: return "pareto";
        case UnaryAxiom::strong_pareto: return "strong-pareto";
        case UnaryAxiom::pareto_indifference: return "pareto-indifference";
        case UnaryAxiom::sni: return "sni";
        case UnaryAxiom::anonymity: return "anonymity";
        case UnaryAxiom::neutrality: return "neutrality";
        case UnaryAxiom::completeness: return "completeness";
        case UnaryAxiom::transitivity: return "transitivity";
        case UnaryAxiom::acyclicity: return "acyclicity";
        case UnaryAxiom::negative_transitivity: return "negative-transitivity";
    }
    return {};
}

AxiomReport check_pairwise_axiom(const EvaluatedSpace& es, PairwiseAxiom axiom) {
    const Space& sp = es.space();
    int n = es.num_candidates();
    AxiomReport rep{axiom_name(axiom), true, std::nullopt};
    for (int x = 0; x < n && rep.holds; ++x)
        for (int y = 0; y < n && rep.holds; ++y) {
            if (x == y) continue;
            // Per restriction key: first profile seen, first xP-profile seen.
            struct Group {
                std::size_t rep_idx = SIZE_MAX;    // first profile in group
                std::size_t strict_idx = SIZE_MAX; // first with xPy
            };
            std::unordered_map<std::string, Group> groups;
            for (std::size_t i = 0; i < sp.size() && rep.holds; ++i) {
                Profile p = sp.profile(i);
                Group& g = groups[p.restrict_to_pair(x, y).key()];
                Relation r = es.relation(i);
                bool fxy = r.has(x, y), fyx = r.has(y, x);
                bool xp = fxy && !fyx;
                std::size_t bad = SIZE_MAX, strict_at = SIZE_MAX;
                switch (axiom) {
                    case PairwiseAxiom::iia:
                        if (g.rep_idx == SIZE_MAX)
                            g.rep_idx = i;
                        else if (es.relation(g.rep_idx).has(x, y) != fxy) {
                            bad = i;
                            strict_at = g.rep_idx;
                        }
                        break;
                    case PairwiseAxiom::weak_iia:
                        // xP under one profile forbids yP under another.
                        if (xp && g.rep_idx != SIZE_MAX) {
                            bad = g.rep_idx;  // earlier yP profile
                            strict_at = i;
                        }
                        if (fyx && !fxy) {
                            if (g.strict_idx != SIZE_MAX) {
                                bad = i;
                                strict_at = g.strict_idx;
                            }
                            if (g.rep_idx == SIZE_MAX) g.rep_idx = i;  // records a yP profile
                        }
                        if (xp && g.strict_idx == SIZE_MAX) g.strict_idx = i;
                        break;
                    case PairwiseAxiom::pn_weak_iia:
                        // xP somewhere forbids y f x anywhere in the group.
                        if (xp && g.rep_idx != SIZE_MAX) {
                            bad = g.rep_idx;
                            strict_at = i;
                        }
                        if (fyx) {
                            if (g.strict_idx != SIZE_MAX) {
                                bad = i;
                                strict_at = g.strict_idx;
                            }
                            if (g.rep_idx == SIZE_MAX) g.rep_idx = i;
                        }
                        if (xp && g.strict_idx == SIZE_MAX) g.strict_idx = i;
                        break;
                    case PairwiseAxiom::pi_weak_iia:
                        // xP somewhere forces x f y everywhere in the group.
                        if (xp && g.rep_idx != SIZE_MAX) {
                            bad = g.rep_idx;
                            strict_at = i;
                        }
                        if (!fxy) {
                            if (g.strict_idx != SIZE_MAX) {
                                bad = i;
                                strict_at = g.strict_idx;
                            }
                            if (g.rep_idx == SIZE_MAX) g.rep_idx = i;
                        }
                        if (xp && g.strict_idx == SIZE_MAX) g.strict_idx = i;
                        break;
                }
                if (bad != SIZE_MAX) {
                    rep.holds = false;
                    rep.witness = Witness{{sp.profile(strict_at), sp.profile(bad)}, x, y,
                                          "same restriction on the pair, incompatible verdicts"};
                }
            }
        }
    return rep;
}

AxiomReport check_unary_axiom(const EvaluatedSpace& es, UnaryAxiom axiom) {
    const Space& sp = es.space();
    int n = es.num_candidates();
    AxiomReport rep{axiom_name(axiom), true, std::nullopt};
    auto fail = [&](std::size_t i, int x, int y, const std::string& d) {
        rep.holds = false;
        rep.witness = Witness{{sp.profile(i)}, x, y, d};
    };

    if (axiom == UnaryAxiom::sni) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (x == y) continue;
                bool found = false;
                for (std::size_t i = 0; i < sp.size() && !found; ++i) {
                    Relation r = es.relation(i);
                    found = r.has(x, y) && !r.has(y, x);
                }
                if (!found) {
                    rep.holds = false;
                    rep.witness = Witness{{}, x, y, "no profile yields strict preference"};
                    return rep;
                }
            }
        return rep;
    }

    if (axiom == UnaryAxiom::anonymity || axiom == UnaryAxiom::neutrality) {
        bool voters = axiom == UnaryAxiom::anonymity;
        int V = sp.voters();
        for (std::size_t i = 0; i < sp.size() && rep.holds; ++i) {
            Profile p = sp.profile(i);
            Relation r = es.relation(i);
            if (voters) {
                // Adjacent transpositions generate all permutations; on a
                // full space every permuted profile is itself enumerated, so
                // pass over generators covers the whole group. Explicit
                // spaces get all permutations with direct evaluation.
                if (sp.full_space()) {
                    for (int k = 0; k + 1 < V && rep.holds; ++k) {
                        std::vector<int> tau(V);
                        std::iota(tau.begin(), tau.end(), 0);
                        std::swap(tau[k], tau[k + 1]);
                        Profile q = p.permute_voters(tau);
                        if (es.relation(es.index_of(q)) != r)
                            fail(i, -1, -1, "voter swap " + std::to_string(k) + "<->" +
                                                std::to_string(k + 1) + " changes the output");
                    }
                } else {
                    for (const std::vector<int>& tau : all_permutations(V)) {
                        if (es.ccr().evaluate(p.permute_voters(tau)) != r) {
                            fail(i, -1, -1, "voter permutation changes the output");
                            break;
                        }
                    }
                }
            } else {
                for (const std::vector<int>& pi : all_permutations(n)) {
                    Profile q = p.permute_candidates(pi);
                    Relation expect = relabel(r, pi);
                    Relation got = sp.full_space() ? es.relation(es.index_of(q))
                                                   : es.ccr().evaluate(q);
                    if (got != expect) {
                        fail(i, -1, -1, "candidate relabeling not mirrored in the output");
                        break;
                    }
                }
            }
        }
        return rep;
    }

    for (std::size_t i = 0; i < sp.size() && rep.holds; ++i) {
        Relation r = es.relation(i);
        Profile p = sp.profile(i);
        switch (axiom) {
            case UnaryAxiom::completeness:
                if (!check_property(r, RelationProperty::complete)) fail(i, -1, -1, "incomplete");
                break;
            case UnaryAxiom::transitivity:
                if (!check_property(r, RelationProperty::transitive))
                    fail(i, -1, -1, "intransitive");
                break;
            case UnaryAxiom::acyclicity:
                if (!check_property(r, RelationProperty::acyclic))
                    fail(i, -1, -1, "strict-preference cycle");
                break;
            case UnaryAxiom::negative_transitivity:
                if (!check_property(r, RelationProperty::negatively_transitive))
                    fail(i, -1, -1, "strict part not negatively transitive");
                break;
            default:
                for (int x = 0; x < n && rep.holds; ++x)
                    for (int y = 0; y < n && rep.holds; ++y) {
                        if (x == y) continue;
                        bool all_weak = true, all_strict = true, some_strict = false,
                             all_ind = true;
                        for (const WeakOrder& w : p.rankings()) {
                            all_weak = all_weak && w.weakly_prefers(x, y);
                            all_strict = all_strict && w.prefers(x, y);
                            some_strict = some_strict || w.prefers(x, y);
                            all_ind = all_ind && w.indifferent(x, y);
                        }
                        bool xp = r.has(x, y) && !r.has(y, x);
                        bool xi = r.has(x, y) && r.has(y, x);
                        if (axiom == UnaryAxiom::pareto && all_strict && !xp)
                            fail(i, x, y, "unanimous strict preference not respected");
                        if (axiom == UnaryAxiom::strong_pareto && all_weak && some_strict && !xp)
                            fail(i, x, y, "weakly unanimous preference not respected");
                        if (axiom == UnaryAxiom::pareto_indifference && all_ind && !xi)
                            fail(i, x, y, "unanimous indifference not respected");
                    }
        }
    }
    return rep;
}

std::set<int> find_power_holders(const EvaluatedSpace& es, PowerKind kind) {
    const Space& sp = es.space();
    int n = es.num_candidates();
    int V = sp.voters();
    std::vector<bool> ok(V, true);
    for (std::size_t i = 0; i < sp.size(); ++i) {
        Profile p = sp.profile(i);
        Relation r = es.relation(i);
        for (int v = 0; v < V; ++v) {
            if (!ok[v]) continue;
            for (int x = 0; x < n && ok[v]; ++x)
                for (int y = 0; y < n && ok[v]; ++y) {
                    if (x == y || !p.ranking(v).prefers(x, y)) continue;
                    bool xp = r.has(x, y) && !r.has(y, x);
                    bool yp = r.has(y, x) && !r.has(x, y);
                    switch (kind) {
                        case PowerKind::dictator: ok[v] = xp; break;
                        case PowerKind::inverse_dictator: ok[v] = yp; break;
                        case PowerKind::weak_dictator: ok[v] = r.has(x, y); break;
                        case PowerKind::vetoer: ok[v] = !yp; break;
                    }
                }
        }
    }
    std::set<int> out;
    for (int v = 0; v < V; ++v)
        if (ok[v]) out.insert(v);
    return out;
}

std::set<std::uint32_t> find_decisive_coalitions(const EvaluatedSpace& es, CoalitionKind kind) {
    const Space& sp = es.space();
    int n = es.num_candidates();
    int V = sp.voters();
    std::uint32_t top = (1u << V) - 1u;
    std::vector<bool> ok(top + 1, true);
    ok[0] = false;  // only nonempty coalitions
    for (std::size_t i = 0; i < sp.size(); ++i) {
        Profile p = sp.profile(i);
        Relation r = es.relation(i);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (x == y || r.has(x, y)) continue;
                // x f y fails here; any coalition whose hypothesis holds dies.
                std::uint32_t pro = 0, con = 0;
                for (int v = 0; v < V; ++v) {
                    if (p.ranking(v).prefers(x, y)) pro |= 1u << v;
                    if (p.ranking(v).prefers(y, x)) con |= 1u << v;
                }
                for (std::uint32_t c = 1; c <= top; ++c) {
                    if (!ok[c] || (c & ~pro) != 0) continue;
                    if (kind == CoalitionKind::almost_weakly_decisive && (~c & top & ~con) != 0)
                        continue;
                    ok[c] = false;
                }
            }
    }
    std::set<std::uint32_t> out;
    for (std::uint32_t c = 1; c <= top; ++c)
        if (ok[c]) out.insert(c);
    return out;
}

PairAnalysis analyze_pair(const EvaluatedSpace& es, int x, int y) {
    const Space& sp = es.space();
    PairAnalysis pa;
    pa.x = x;
    pa.y = y;
    // Pass 1: which restrictions win (yield xPy) in some context.
    std::unordered_map<std::string, int> winner_index;
    for (std::size_t i = 0; i < sp.size(); ++i) {
        Relation r = es.relation(i);
        if (!(r.has(x, y) && !r.has(y, x))) continue;
        Profile p = sp.profile(i);
        PairRestriction q = p.restrict_to_pair(x, y);
        std::string k = q.key();
        if (winner_index.emplace(k, static_cast<int>(pa.winners.size())).second) {
            pa.winners.push_back(q);
            pa.winner_keys.push_back(k);
        }
    }
    // Pass 2: per context, winners that yield P here vs winners that do not.
    struct CtxGroup {
        std::vector<int> yes, no;
    };
    std::unordered_map<std::string, CtxGroup> groups;
    for (std::size_t i = 0; i < sp.size(); ++i) {
        Profile p = sp.profile(i);
        auto it = winner_index.find(p.restrict_to_pair(x, y).key());
        if (it == winner_index.end()) continue;
        Relation r = es.relation(i);
        bool xp = r.has(x, y) && !r.has(y, x);
        CtxGroup& g = groups[p.context(x, y).key()];
        (xp ? g.yes : g.no).push_back(it->second);
    }
    std::set<std::pair<int, int>> arcs;
    for (auto& [key, g] : groups)
        for (int a : g.yes)
            for (int b : g.no) arcs.insert({a, b});
    pa.arcs.assign(arcs.begin(), arcs.end());

    // Kahn's algorithm; arc a -> b forces b strictly below a, so emit
    // vertices with no incoming arcs first when building the ascending list
    // from the bottom: compute a topological order of the arc digraph and
    // reverse it.
    int m = static_cast<int>(pa.winners.size());
    std::vector<int> outdeg(m, 0);
    std::vector<std::vector<int>> rev(m);
    for (auto [a, b] : pa.arcs) {
        ++outdeg[a];
        rev[b].push_back(a);
    }
    // Peel vertices with no outgoing arcs: they are weakest, go first.
    std::vector<int> queue;
    for (int v = 0; v < m; ++v)
        if (outdeg[v] == 0) queue.push_back(v);
    std::vector<int> order;
    for (std::size_t h = 0; h < queue.size(); ++h) {
        int v = queue[h];
        order.push_back(v);
        for (int u : rev[v])
            if (--outdeg[u] == 0) queue.push_back(u);
    }
    pa.acyclic = static_cast<int>(order.size()) == m;
    if (pa.acyclic) {
        pa.order_ascending = order;
    } else {
        // Walk arcs inside the residual vertex set until a vertex repeats.
        std::vector<bool> residual(m, true);
        for (int v : order) residual[v] = false;
        std::vector<std::vector<int>> fwd(m);
        for (auto [a, b] : pa.arcs)
            if (residual[a] && residual[b]) fwd[a].push_back(b);
        int start = 0;
        while (!residual[start]) ++start;
        std::vector<int> seen(m, -1);
        std::vector<int> walk;
        int cur = start;
        while (seen[cur] < 0) {
            seen[cur] = static_cast<int>(walk.size());
            walk.push_back(cur);
            cur = fwd[cur].front();
        }
        pa.cycle.assign(walk.begin() + seen[cur], walk.end());
    }
    return pa;
}

OrderabilityResult check_orderability(const EvaluatedSpace& es) {
    OrderabilityResult res;
    res.report = AxiomReport{"orderability", true, std::nullopt};
    int n = es.num_candidates();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            PairAnalysis pa = analyze_pair(es, x, y);
            if (!pa.acyclic && res.report.holds) {
                res.report.holds = false;
                res.report.witness =
                    Witness{{}, x, y,
                            "no transitive complete strength ordering of winning restrictions"};
            }
            res.pairs.push_back(std::move(pa));
        }
    return res;
}

}  // namespace asvote
