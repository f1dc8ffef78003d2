#include "oml/effect.hpp"

#include <algorithm>
#include <functional>

namespace oml {

Effect zero_effect(std::size_t arity) { return Effect(arity, Rational(0)); }

Effect unit_effect(std::size_t arity) { return Effect(arity, Rational(1)); }

Effect complement_effect(const Effect& f) {
    Effect g(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) g[i] = Rational(1) - f[i];
    return g;
}

Effect add_effects(const Effect& f, const Effect& g) {
    if (f.size() != g.size()) fail(ErrorKind::dimension_mismatch, "effect arity");
    Effect s(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) s[i] = f[i] + g[i];
    return s;
}

bool effect_in_range(const Effect& f) {
    for (const auto& x : f)
        if (x < 0 || x > 1) return false;
    return true;
}

bool effect_leq(const Effect& f, const Effect& g) {
    if (f.size() != g.size()) fail(ErrorKind::dimension_mismatch, "effect arity");
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i] > g[i]) return false;
    return true;
}

bool effects_orthogonal(const Effect& f, const Effect& g) {
    if (f.size() != g.size()) fail(ErrorKind::dimension_mismatch, "effect arity");
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i] + g[i] > 1) return false;
    return true;
}

std::string effect_str(const Effect& f) {
    std::string out = "(";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out += ", ";
        out += to_string(f[i]);
    }
    return out + ")";
}

Effect element_effect(const std::vector<StateMeasure>& states, int element) {
    Effect f;
    f.reserve(states.size());
    for (const auto& m : states) f.push_back(m.value(element));
    return f;
}

bool EffectFamily::contains(const Effect& f) const {
    return std::binary_search(members.begin(), members.end(), f);
}

std::optional<std::size_t> EffectFamily::index_of(const Effect& f) const {
    const auto it = std::lower_bound(members.begin(), members.end(), f);
    if (it == members.end() || *it != f) return std::nullopt;
    return static_cast<std::size_t>(it - members.begin());
}

EffectFamily make_effect_family(std::string name, std::size_t arity,
                                std::vector<Effect> members) {
    if (arity == 0) fail(ErrorKind::bad_argument, "effect family needs at least one state");
    for (const auto& f : members) {
        if (f.size() != arity)
            fail(ErrorKind::bad_argument, "effect arity differs from the family's");
        if (!effect_in_range(f))
            fail(ErrorKind::not_an_effect, "values escape [0, 1]: " + effect_str(f));
    }
    members.push_back(zero_effect(arity));
    members.push_back(unit_effect(arity));
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    EffectFamily fam;
    fam.name = std::move(name);
    fam.arity = arity;
    fam.members = std::move(members);
    return fam;
}

EffectFamily logic_effect_family(const LogicPtr& logic,
                                 const std::vector<StateMeasure>& states) {
    if (!logic) fail(ErrorKind::bad_argument, "null logic");
    if (states.empty()) fail(ErrorKind::bad_argument, "effect family needs at least one state");
    for (const auto& m : states)
        if (!m.is_exact())
            fail(ErrorKind::bad_argument, "effect families are exact; approx state " + m.name());
    std::vector<Effect> members;
    members.reserve(static_cast<std::size_t>(logic->size()));
    for (int a = 0; a < logic->size(); ++a) members.push_back(element_effect(states, a));
    return make_effect_family(logic->name + " effects", states.size(), std::move(members));
}

CheckReport check_orthogonality_postulate(const EffectFamily& fam, int max_seq_len,
                                          bool member_complement) {
    if (max_seq_len < 1) fail(ErrorKind::bad_argument, "sequence length cap below 1");
    CheckReport r;
    r.check = "orthogonality-postulate";
    r.target = fam.name;
    r.stat("members", static_cast<long long>(fam.members.size()));
    r.stat("max-sequence-length", max_seq_len);
    r.note(member_complement ? "complements must lie inside the family"
                             : "complements may be any effect below the unit");

    const Effect unit = unit_effect(fam.arity);
    long long sequences = 0;

    // Depth-first multiset enumeration with non-decreasing member indices;
    // a branch dies as soon as the new pick breaks pairwise summability,
    // so only pairwise summable sequences are ever visited.
    std::vector<std::size_t> pick;
    Effect sum = zero_effect(fam.arity);
    std::function<void(std::size_t)> visit = [&](std::size_t from) {
        if (!pick.empty()) {
            ++sequences;
            bool summable;
            if (member_complement) {
                summable = effect_leq(sum, unit) && fam.contains(complement_effect(sum));
            } else {
                summable = effect_leq(sum, unit);
            }
            if (!summable) {
                std::string w;
                for (std::size_t i : pick) {
                    if (!w.empty()) w += " + ";
                    w += effect_str(fam.members[i]);
                }
                w += member_complement ? " has no complement in the family"
                                       : " exceeds the unit";
                r.witness(w);
            }
        }
        if (pick.size() == static_cast<std::size_t>(max_seq_len)) return;
        for (std::size_t i = from; i < fam.members.size(); ++i) {
            bool pairwise = true;
            for (std::size_t j : pick)
                if (!effects_orthogonal(fam.members[i], fam.members[j])) {
                    pairwise = false;
                    break;
                }
            if (!pairwise) continue;
            pick.push_back(i);
            Effect prev = sum;
            sum = add_effects(sum, fam.members[i]);
            visit(i);
            sum = std::move(prev);
            pick.pop_back();
        }
    };
    visit(0);
    r.stat("pairwise-summable-sequences", sequences);
    return r.finish();
}

namespace {

// Greatest lower bound of members i and j inside the family, if one exists.
std::optional<std::size_t> family_meet(const EffectFamily& fam, std::size_t i,
                                       std::size_t j) {
    std::vector<std::size_t> lower;
    for (std::size_t k = 0; k < fam.members.size(); ++k)
        if (effect_leq(fam.members[k], fam.members[i]) &&
            effect_leq(fam.members[k], fam.members[j]))
            lower.push_back(k);
    for (std::size_t k : lower) {
        bool greatest = true;
        for (std::size_t l : lower)
            if (!effect_leq(fam.members[l], fam.members[k])) {
                greatest = false;
                break;
            }
        if (greatest) return k;
    }
    return std::nullopt;
}

std::optional<std::size_t> family_join(const EffectFamily& fam, std::size_t i,
                                       std::size_t j) {
    std::vector<std::size_t> upper;
    for (std::size_t k = 0; k < fam.members.size(); ++k)
        if (effect_leq(fam.members[i], fam.members[k]) &&
            effect_leq(fam.members[j], fam.members[k]))
            upper.push_back(k);
    for (std::size_t k : upper) {
        bool least = true;
        for (std::size_t l : upper)
            if (!effect_leq(fam.members[k], fam.members[l])) {
                least = false;
                break;
            }
        if (least) return k;
    }
    return std::nullopt;
}

} // namespace

CheckReport check_proposition_structure(const EffectFamily& fam) {
    CheckReport r;
    r.check = "proposition-structure";
    r.target = fam.name;
    const auto& m = fam.members;
    r.stat("members", static_cast<long long>(m.size()));

    const Effect zero = zero_effect(fam.arity);
    const Effect unit = unit_effect(fam.arity);

    // complement membership and the complement laws
    std::vector<std::optional<std::size_t>> comp(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        comp[i] = fam.index_of(complement_effect(m[i]));
        if (!comp[i]) {
            r.witness("no complement in the family for " + effect_str(m[i]));
            continue;
        }
        const auto low = family_meet(fam, i, *comp[i]);
        if (!low || m[*low] != zero)
            r.witness("meet with the complement misses 0 at " + effect_str(m[i]));
        const auto high = family_join(fam, i, *comp[i]);
        if (!high || m[*high] != unit)
            r.witness("join with the complement misses e at " + effect_str(m[i]));
    }

    // orthomodular identity g = f v (g ^ f') for comparable members
    long long comparable = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (!comp[i]) continue;
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (i == j || !effect_leq(m[i], m[j])) continue;
            ++comparable;
            const auto rest = family_meet(fam, j, *comp[i]);
            if (!rest) {
                r.witness("no meet of " + effect_str(m[j]) + " with the complement of " +
                          effect_str(m[i]));
                continue;
            }
            const auto back = family_join(fam, i, *rest);
            if (!back || *back != j)
                r.witness("orthomodular identity fails at " + effect_str(m[i]) +
                          " <= " + effect_str(m[j]));
        }
    }
    r.stat("comparable-pairs", comparable);

    // orthogonal sums are least upper bounds
    long long summable = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            if (!effects_orthogonal(m[i], m[j])) continue;
            ++summable;
            const Effect s = add_effects(m[i], m[j]);
            const auto si = fam.index_of(s);
            if (!si) {
                r.witness("orthogonal sum escapes the family: " + effect_str(m[i]) +
                          " + " + effect_str(m[j]));
                continue;
            }
            const auto high = family_join(fam, i, j);
            if (!high || *high != *si)
                r.witness("orthogonal sum is not the least upper bound: " +
                          effect_str(m[i]) + " + " + effect_str(m[j]));
        }
    r.stat("summable-pairs", summable);
    return r.finish();
}

} // namespace oml
