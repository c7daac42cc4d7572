#include "asvote/asmodel.hpp"

#include <algorithm>

namespace asvote {

namespace {

Rational lookup(const std::map<std::tuple<int, int, std::string>, Rational>& table, int x, int y,
                const std::string& key, const char* what) {
    auto it = table.find({x, y, key});
    if (it == table.end())
        throw std::out_of_range(std::string(what) + " table has no entry for a needed key");
    return it->second;
}

}  // namespace

AxiomReport verify_rationalization(const EvaluatedSpace& es, const Rationalization& r) {
    AxiomReport rep{"as-rationalizability", true, std::nullopt};
    const Space& sp = es.space();
    int n = es.num_candidates();
    const Rational e = r.group.identity();
    for (std::size_t i = 0; i < sp.size(); ++i) {
        Profile p = sp.profile(i);
        Relation rel = es.relation(i);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (x == y) continue;
                std::string qk = p.restrict_to_pair(x, y).key();
                std::string qk_rev = p.restrict_to_pair(y, x).key();
                std::string ck = p.context(x, y).key();
                Rational adv = lookup(r.advantage, x, y, qk, "advantage");
                Rational adv_rev = lookup(r.advantage, y, x, qk_rev, "advantage");
                Rational std_ = lookup(r.standard, x, y, ck, "standard");
                if (adv != r.group.inverse(adv_rev)) {
                    rep.holds = false;
                    rep.witness = Witness{{p}, x, y, "advantage is not sign-inverting"};
                    return rep;
                }
                if (std_ < e) {
                    rep.holds = false;
                    rep.witness = Witness{{p}, x, y, "standard below the group identity"};
                    return rep;
                }
                bool xp = rel.has(x, y) && !rel.has(y, x);
                if (xp != (adv > std_)) {
                    rep.holds = false;
                    rep.witness = Witness{{p}, x, y,
                                          xp ? "strict preference without advantage > standard"
                                             : "advantage > standard without strict preference"};
                    return rep;
                }
            }
    }
    return rep;
}

Rationalization construct_rationalization(const EvaluatedSpace& es) {
    AxiomReport wiia = check_pairwise_axiom(es, PairwiseAxiom::weak_iia);
    if (!wiia.holds) throw NotRationalizable(std::move(wiia));
    OrderabilityResult ord = check_orderability(es);
    if (!ord.report.holds) throw NotRationalizable(std::move(ord.report));

    Rationalization r;
    r.group.kind = OrderedGroup::Kind::integer_additive;
    const Space& sp = es.space();
    int n = es.num_candidates();

    // Layer indices per ordered pair: winner key -> 1-based strength index.
    std::map<std::pair<int, int>, std::map<std::string, int>> layer;
    for (const PairAnalysis& pa : ord.pairs) {
        std::map<std::string, int>& l = layer[{pa.x, pa.y}];
        for (std::size_t pos = 0; pos < pa.order_ascending.size(); ++pos)
            l[pa.winner_keys[pa.order_ascending[pos]]] = static_cast<int>(pos) + 1;
    }

    for (std::size_t i = 0; i < sp.size(); ++i) {
        Profile p = sp.profile(i);
        Relation rel = es.relation(i);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (x == y) continue;
                PairRestriction q = p.restrict_to_pair(x, y);
                const std::map<std::string, int>& fwd = layer[{x, y}];
                const std::map<std::string, int>& bwd = layer[{y, x}];
                int adv = 0;
                if (auto it = fwd.find(q.key()); it != fwd.end())
                    adv = it->second;
                else if (auto it2 = bwd.find(q.reversed().key()); it2 != bwd.end())
                    adv = -it2->second;
                r.advantage[{x, y, q.key()}] = Rational(adv);

                std::string ck = p.context(x, y).key();
                auto [sit, fresh] = r.standard.try_emplace({x, y, ck},
                                                           Rational(static_cast<long long>(fwd.size())));
                bool xp = rel.has(x, y) && !rel.has(y, x);
                if (xp && Rational(adv - 1) < sit->second) sit->second = Rational(adv - 1);
            }
    }
    return r;
}

long long gillies_standard(const Preprofile& ctx, int x, int y) {
    for (int v = 0; v < ctx.n; ++v) {
        if (v == x || v == y) continue;
        if (margin(ctx, v, x) > 0 && !(margin(ctx, v, y) > 0)) return ctx.voters();
    }
    return 0;
}

namespace {

template <typename W>
bool rp_locks_added_edge(PairwiseGraph<W> g, int x, int y, const W& k) {
    g.add(x, y, k);
    return ranked_pairs_all(g).has(x, y);
}

}  // namespace

long long ranked_pairs_standard_margin(const Preprofile& ctx, int x, int y) {
    PairwiseGraph<long long> g = margin_graph(ctx);
    long long maxw = 0;
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
            if (g.edge(a, b)) maxw = std::max(maxw, g.weight[a][b]);
    for (long long k = 1; k <= maxw + 1; ++k)
        if (rp_locks_added_edge(g, x, y, k)) return k - 1;
    return maxw;  // unreachable: k = maxw + 1 always locks
}

Rational ranked_pairs_standard_ratio(const Preprofile& ctx, int x, int y) {
    PairwiseGraph<Rational> g = ratio_graph(ctx);
    Rational m = ratio_granularity(ctx.voters());
    for (const Rational& k : ratio_value_set(ctx.voters())) {
        if (!(k > Rational(1))) continue;  // a weight of 1 is not an edge
        if (rp_locks_added_edge(g, x, y, k)) return k - m;
    }
    return Rational(ctx.voters());  // unreachable: the largest value locks
}

long long split_cycle_standard_margin(const Preprofile& ctx, int x, int y) {
    return max_split_over_paths(margin_graph(ctx), y, x, 0LL);
}

Rational split_cycle_standard_ratio(const Preprofile& ctx, int x, int y) {
    return max_split_over_paths(ratio_graph(ctx), y, x, Rational(1));
}

namespace {

template <typename AdvFn, typename StdFn>
Rationalization build_tables(const Space& sp, OrderedGroup::Kind kind, AdvFn adv, StdFn std_) {
    Rationalization r;
    r.group.kind = kind;
    int n = sp.candidates()->size();
    for (std::size_t i = 0; i < sp.size(); ++i) {
        Profile p = sp.profile(i);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (x == y) continue;
                PairRestriction q = p.restrict_to_pair(x, y);
                r.advantage.try_emplace({x, y, q.key()}, adv(p, x, y));
                Preprofile ctx = p.context(x, y);
                std::tuple<int, int, std::string> key{x, y, ctx.key()};
                if (!r.standard.contains(key)) r.standard.emplace(std::move(key), std_(ctx, x, y));
            }
    }
    return r;
}

Rational margin_adv(const Profile& p, int x, int y) {
    return Rational(margin(p, x, y));
}

Rational ratio_adv(const Profile& p, int x, int y) {
    return ratio(p, x, y);
}

}  // namespace

Rationalization majority_rationalization(const Space& s) {
    return build_tables(s, OrderedGroup::Kind::integer_additive, margin_adv,
                        [](const Preprofile&, int, int) { return Rational(0); });
}

Rationalization gillies_rationalization(const Space& s) {
    return build_tables(s, OrderedGroup::Kind::integer_additive, margin_adv,
                        [](const Preprofile& ctx, int x, int y) {
                            return Rational(gillies_standard(ctx, x, y));
                        });
}

Rationalization ranked_pairs_rationalization(const Space& s, Measure m) {
    if (m == Measure::margin)
        return build_tables(s, OrderedGroup::Kind::integer_additive, margin_adv,
                            [](const Preprofile& ctx, int x, int y) {
                                return Rational(ranked_pairs_standard_margin(ctx, x, y));
                            });
    return build_tables(s, OrderedGroup::Kind::positive_rational_multiplicative, ratio_adv,
                        ranked_pairs_standard_ratio);
}

Rationalization split_cycle_rationalization(const Space& s, Measure m) {
    if (m == Measure::margin)
        return build_tables(s, OrderedGroup::Kind::integer_additive, margin_adv,
                            [](const Preprofile& ctx, int x, int y) {
                                return Rational(split_cycle_standard_margin(ctx, x, y));
                            });
    return build_tables(s, OrderedGroup::Kind::positive_rational_multiplicative, ratio_adv,
                        split_cycle_standard_ratio);
}

}  // namespace asvote
