#include "oml/filter.hpp"

#include <algorithm>
#include <map>

namespace oml {

std::optional<int> PureFamily::position_of(int fragment_element) const {
    for (std::size_t k = 0; k < atom_elements.size(); ++k)
        if (atom_elements[k] == fragment_element) return static_cast<int>(k);
    return std::nullopt;
}

PureFamily atom_state_family(Fragment f, const LogicPtr& logic) {
    if (!logic) fail(ErrorKind::bad_argument, "null logic");
    std::vector<int> atom_elements = f.atom_indices();
    std::vector<Vec> vectors;
    std::vector<StateMeasure> states;
    for (int a : atom_elements) {
        vectors.push_back(f.element(a).generator());
        states.push_back(atom_induced_state(f, logic, vectors.back()));
    }
    return PureFamily{std::move(f), logic, std::move(atom_elements), std::move(vectors),
                      std::move(states)};
}

bool operator==(const PureAction& x, const PureAction& y) {
    return x.intensity == y.intensity && x.target == y.target;
}

bool operator==(const Operation& x, const Operation& y) {
    return x.actions == y.actions;
}

Effect Operation::effect() const {
    Effect e;
    e.reserve(actions.size());
    for (const auto& act : actions) e.push_back(act.intensity);
    return e;
}

namespace {

bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& c) { return c.is_zero(); });
}

} // namespace

Operation luders_filter(const PureFamily& fam, int a) {
    const Fragment& f = fam.fragment;
    if (a < 0 || a >= f.size()) fail(ErrorKind::unknown_element, "no such fragment element");
    const SpacePtr& sp = f.space();

    Operation op;
    op.name = "filter(" + f.label(a) + ")";
    op.actions.reserve(fam.vectors.size());
    for (int k = 0; k < fam.size(); ++k) {
        const Vec& v = fam.vectors[static_cast<std::size_t>(k)];
        const Vec w = project(f.element(a), v);
        if (is_zero_vec(w)) {
            op.actions.push_back({Rational(0), -1});
            continue;
        }
        const Rational intensity = (sp->form(w, w) / sp->form(v, v)).as_rational();
        const auto hit = f.index_of(Subspace::line(sp, w));
        if (!hit)
            fail(ErrorKind::unknown_element,
                 "projected atom escapes the fragment: " + Subspace::line(sp, w).label());
        const auto pos = fam.position_of(*hit);
        if (!pos) fail(ErrorKind::unknown_element, "projected atom is not in the family");
        op.actions.push_back({intensity, *pos});
    }
    return op;
}

Operation compose(const Operation& later, const Operation& first) {
    if (later.actions.size() != first.actions.size())
        fail(ErrorKind::dimension_mismatch, "operations act on different families");
    Operation op;
    op.name = later.name + " after " + first.name;
    op.actions.reserve(first.actions.size());
    for (const auto& fa : first.actions) {
        if (fa.target < 0 || fa.intensity == 0) {
            op.actions.push_back({Rational(0), -1});
            continue;
        }
        const auto& la = later.actions[static_cast<std::size_t>(fa.target)];
        const Rational kept = fa.intensity * la.intensity;
        op.actions.push_back({kept, kept == 0 ? -1 : la.target});
    }
    return op;
}

std::vector<CheckReport> check_filter_axioms(const PureFamily& fam, int a) {
    const Fragment& f = fam.fragment;
    const Operation op = luders_filter(fam, a);
    const auto state_name = [&](int k) {
        return fam.states[static_cast<std::size_t>(k)].name();
    };

    std::vector<CheckReport> out;
    const auto fresh = [&](const char* check) {
        CheckReport r;
        r.check = check;
        r.target = op.name;
        r.stat("states", static_cast<long long>(fam.size()));
        return r;
    };

    // kept intensities are probabilities; annihilation is recorded exactly
    // when nothing is kept
    auto range = fresh("filter-intensity-range");
    for (int k = 0; k < fam.size(); ++k) {
        const auto& act = op.actions[static_cast<std::size_t>(k)];
        if (act.intensity < 0 || act.intensity > 1)
            range.witness(state_name(k) + " keeps intensity outside [0, 1]");
        if ((act.target < 0) != (act.intensity == 0) || act.target >= fam.size())
            range.witness(state_name(k) + " has an inconsistent annihilation record");
    }
    out.push_back(range.finish());

    // a state passing whole is left in place
    auto fixed = fresh("filter-fixed-points");
    for (int k = 0; k < fam.size(); ++k) {
        const auto& act = op.actions[static_cast<std::size_t>(k)];
        if (act.intensity == 1 && act.target != k)
            fixed.witness(state_name(k) + " is kept whole yet moved");
    }
    out.push_back(fixed.finish());

    const Operation twice = compose(op, op);

    auto idem = fresh("filter-idempotent-intensity");
    if (twice.effect() != op.effect())
        idem.witness("repeating the filter changes the kept intensities");
    out.push_back(idem.finish());

    auto repeat = fresh("filter-repeatability");
    if (!(twice == op)) repeat.witness("repeating the filter changes some action");
    out.push_back(repeat.finish());

    // the kept fraction equals the departing state's reading of the atom
    // it arrives at (computed on the state route, not the filter route)
    auto arrival = fresh("filter-arrival-intensity");
    for (int k = 0; k < fam.size(); ++k) {
        const auto& act = op.actions[static_cast<std::size_t>(k)];
        if (act.intensity == 0) continue;
        const int arrived = fam.atom_elements[static_cast<std::size_t>(act.target)];
        if (fam.states[static_cast<std::size_t>(k)].value(arrived) != act.intensity)
            arrival.witness(state_name(k) +
                            ": kept fraction differs from its reading of the arrival atom");
    }
    out.push_back(arrival.finish());

    auto ident = fresh("filter-identification");
    if (f.is_atom(a)) {
        const auto self = fam.position_of(a);
        if (!self) {
            ident.witness("atom " + f.label(a) + " has no state in the family");
        } else {
            for (int k = 0; k < fam.size(); ++k) {
                const bool whole = op.actions[static_cast<std::size_t>(k)].intensity == 1;
                if (whole != (k == *self))
                    ident.witness(state_name(k) +
                                  (whole ? " passes a foreign atom filter whole"
                                         : " does not pass its own filter whole"));
            }
        }
    } else {
        ident.note("element " + f.label(a) + " is not an atom; identification is vacuous");
    }
    out.push_back(ident.finish());

    // the complement's filter keeps exactly the complementary intensities
    auto comp = fresh("filter-complement");
    if (luders_filter(fam, f.ortho(a)).effect() != complement_effect(op.effect()))
        comp.witness("complement filter intensities are not complementary");
    out.push_back(comp.finish());

    // arrival atoms follow the Sasaki projection of the departure atoms
    auto transport = fresh("filter-support-transport");
    for (int k = 0; k < fam.size(); ++k) {
        const auto& act = op.actions[static_cast<std::size_t>(k)];
        const int from = fam.atom_elements[static_cast<std::size_t>(k)];
        const Subspace image = sasaki(f.element(a), f.element(from));
        if (act.intensity == 0) {
            if (!image.is_zero())
                transport.witness(state_name(k) + " is annihilated off a nonzero image");
            continue;
        }
        const auto idx = f.index_of(image);
        if (!idx || *idx != fam.atom_elements[static_cast<std::size_t>(act.target)])
            transport.witness(state_name(k) + " does not arrive on its projected image");
    }
    out.push_back(transport.finish());

    return out;
}

CheckReport check_projection_postulate(const PureFamily& fam) {
    const Fragment& f = fam.fragment;
    CheckReport r;
    r.check = "projection-postulate";
    r.target = f.name();
    r.stat("elements", static_cast<long long>(f.size()));
    r.stat("states", static_cast<long long>(fam.size()));

    std::map<Effect, int> measured;
    for (int a = 0; a < f.size(); ++a) {
        const Effect got = luders_filter(fam, a).effect();
        if (got != element_effect(fam.states, a))
            r.witness("element " + f.label(a) + " measures a different effect than its reading");
        const auto [it, fresh] = measured.emplace(got, a);
        if (!fresh)
            r.witness("elements " + f.label(it->second) + " and " + f.label(a) +
                      " measure the same effect");
    }
    return r.finish();
}

CheckReport check_eigenstate_ideality(const PureFamily& fam) {
    const Fragment& f = fam.fragment;
    CheckReport r;
    r.check = "eigenstate-ideality";
    r.target = f.name();

    std::vector<Operation> filters;
    filters.reserve(static_cast<std::size_t>(f.size()));
    for (int a = 0; a < f.size(); ++a) filters.push_back(luders_filter(fam, a));

    const auto commuting = [&](int a, int b) {
        return f.leq(a, b) || f.leq(b, a) || f.leq(a, f.ortho(b)) || f.leq(f.ortho(a), b);
    };

    long long pairs = 0;
    long long transitions = 0;
    for (int a = 0; a < f.size(); ++a)
        for (int b = 0; b < f.size(); ++b) {
            if (a == b || !commuting(a, b)) continue;
            ++pairs;
            for (int k = 0; k < fam.size(); ++k) {
                if (filters[static_cast<std::size_t>(b)].actions[static_cast<std::size_t>(k)]
                        .intensity != 1)
                    continue;
                const auto& moved =
                    filters[static_cast<std::size_t>(a)].actions[static_cast<std::size_t>(k)];
                if (moved.target < 0) continue;
                ++transitions;
                if (filters[static_cast<std::size_t>(b)]
                        .actions[static_cast<std::size_t>(moved.target)]
                        .intensity != 1)
                    r.witness("filter of " + f.label(a) + " moves " +
                              fam.states[static_cast<std::size_t>(k)].name() +
                              " off " + f.label(b));
            }
        }
    r.stat("commuting-pairs", pairs);
    r.stat("checked-transitions", transitions);
    return r.finish();
}

Observable observable_from_partition(const PureFamily& fam, const std::vector<int>& parts) {
    const Fragment& f = fam.fragment;
    if (parts.empty()) fail(ErrorKind::bad_argument, "empty partition");
    for (int e : parts)
        if (e < 0 || e >= f.size()) fail(ErrorKind::unknown_element, "no such fragment element");
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            if (!f.leq(parts[i], f.ortho(parts[j])))
                fail(ErrorKind::not_a_partition, "cells " + f.label(parts[i]) + " and " +
                                                     f.label(parts[j]) + " are not orthogonal");
    Subspace span = f.element(parts.front());
    for (std::size_t i = 1; i < parts.size(); ++i) span = join(span, f.element(parts[i]));
    if (!span.is_full()) fail(ErrorKind::not_a_partition, "cells do not span the space");

    Observable obs;
    obs.name = "partition{";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) obs.name += ", ";
        obs.name += f.label(parts[i]);
        obs.outcomes.push_back(f.label(parts[i]));
    }
    obs.name += "}";
    obs.elements = parts;
    return obs;
}

std::vector<Rational> outcome_distribution(const Observable& obs, const StateMeasure& state) {
    std::vector<Rational> dist;
    dist.reserve(obs.elements.size());
    for (int e : obs.elements) dist.push_back(state.value(e));
    return dist;
}

Instrument instrument_from_partition(const PureFamily& fam, const std::vector<int>& parts) {
    Instrument inst;
    inst.observable = observable_from_partition(fam, parts);
    inst.filters.reserve(parts.size());
    for (int e : parts) inst.filters.push_back(luders_filter(fam, e));
    return inst;
}

CheckReport check_instrument(const PureFamily& fam, const Instrument& inst) {
    if (inst.filters.size() != inst.observable.elements.size())
        fail(ErrorKind::bad_argument, "instrument filter count differs from outcome count");
    CheckReport r;
    r.check = "instrument";
    r.target = inst.observable.name;
    r.stat("outcomes", static_cast<long long>(inst.filters.size()));

    Effect total = zero_effect(static_cast<std::size_t>(fam.size()));
    for (std::size_t i = 0; i < inst.filters.size(); ++i) {
        const Effect got = inst.filters[i].effect();
        if (got != element_effect(fam.states, inst.observable.elements[i]))
            r.witness("outcome " + inst.observable.outcomes[i] +
                      " measures a different effect than its cell");
        total = add_effects(total, got);
    }
    if (total != unit_effect(static_cast<std::size_t>(fam.size())))
        r.witness("outcome effects do not resolve the unit");

    const Operation null_op{"", std::vector<PureAction>(
                                    static_cast<std::size_t>(fam.size()), {Rational(0), -1})};
    for (std::size_t i = 0; i < inst.filters.size(); ++i)
        for (std::size_t j = 0; j < inst.filters.size(); ++j) {
            if (i == j) continue;
            if (!(compose(inst.filters[i], inst.filters[j]) == null_op))
                r.witness("filters of outcomes " + inst.observable.outcomes[i] + " and " +
                          inst.observable.outcomes[j] + " do not annihilate each other");
        }
    return r.finish();
}

} // namespace oml
