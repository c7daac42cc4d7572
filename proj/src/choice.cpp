#include "asvote/choice.hpp"

#include <stdexcept>

namespace asvote {

std::uint8_t ChoiceFunction::choose(std::uint8_t subset) const {
    if (subset == 0) throw std::invalid_argument("choice requires a nonempty subset");
    int n = base.size();
    std::uint8_t out = 0;
    for (int x = 0; x < n; ++x) {
        if (!((subset >> x) & 1u)) continue;
        bool keep = true;
        for (int y = 0; y < n && keep; ++y) {
            if (!((subset >> y) & 1u)) continue;
            if (mode == Mode::maximal)
                keep = !(base.has(y, x) && !base.has(x, y));
            else
                keep = base.has(x, y);
        }
        if (keep) out |= std::uint8_t(1u << x);
    }
    return out;
}

std::string condition_name(ChoiceCondition c) {
    switch (c) {
        case ChoiceCondition::path_independence: return "path-independence";
        case ChoiceCondition::beta: return "beta";
        case ChoiceCondition::gca: return "generalized-condorcet";
    }
    return {};
}

AxiomReport check_choice_condition(const ChoiceFunction& c, int num_candidates,
                                   ChoiceCondition cond) {
    AxiomReport rep{condition_name(cond), true, std::nullopt};
    std::uint8_t full = std::uint8_t((1u << num_candidates) - 1u);
    auto subset_str = [num_candidates](std::uint8_t s) {
        std::string out = "{";
        for (int i = 0; i < num_candidates; ++i)
            if ((s >> i) & 1u) out += std::to_string(i) + ",";
        if (out.back() == ',') out.pop_back();
        return out + "}";
    };
    auto fail = [&](std::uint8_t a, std::uint8_t b, const std::string& what) {
        rep.holds = false;
        rep.witness = Witness{{}, -1, -1, what + " for subsets " + subset_str(a) + ", " + subset_str(b)};
    };

    switch (cond) {
        case ChoiceCondition::path_independence:
            for (unsigned y1 = 1; y1 <= full && rep.holds; ++y1)
                for (unsigned y2 = 1; y2 <= full && rep.holds; ++y2) {
                    std::uint8_t lhs = c.choose(std::uint8_t(y1 | y2));
                    std::uint8_t inner = std::uint8_t(c.choose(std::uint8_t(y1)) | c.choose(std::uint8_t(y2)));
                    if (inner == 0 || c.choose(inner) != lhs)
                        fail(std::uint8_t(y1), std::uint8_t(y2), "C(Y1 u Y2) != C(C(Y1) u C(Y2))");
                }
            break;
        case ChoiceCondition::beta:
            for (unsigned y = 1; y <= full && rep.holds; ++y)
                for (unsigned z = 1; z <= full && rep.holds; ++z) {
                    if ((y & ~z) != 0) continue;  // need Y subset of Z
                    std::uint8_t cy = c.choose(std::uint8_t(y)), cz = c.choose(std::uint8_t(z));
                    if ((cy & cz) != 0 && (cy & ~cz) != 0)
                        fail(std::uint8_t(y), std::uint8_t(z), "C(Y) meets C(Z) but is not contained in it");
                }
            break;
        case ChoiceCondition::gca:
            for (unsigned y = 1; y <= full && rep.holds; ++y)
                for (int x = 0; x < num_candidates && rep.holds; ++x) {
                    if (!((y >> x) & 1u)) continue;
                    bool all_pairwise = true;
                    for (int v = 0; v < num_candidates && all_pairwise; ++v)
                        if ((y >> v) & 1u)
                            all_pairwise =
                                (c.choose(std::uint8_t((1u << x) | (1u << v))) >> x) & 1u;
                    if (all_pairwise && !((c.choose(std::uint8_t(y)) >> x) & 1u))
                        fail(std::uint8_t(y), std::uint8_t(1u << x), "pairwise winner excluded");
                }
            break;
    }
    return rep;
}

}  // namespace asvote
