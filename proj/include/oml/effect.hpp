#pragma once

/**
 * @file effect.hpp
 * @brief Effects over a finite family of pure states.
 *
 * An effect is an affine [0, 1]-valued function on the state space,
 * recorded here by its exact values at the listed pure states.  A
 * candidate family always contains the zero and unit effects.  Two
 * checkers probe a family: the orthogonality postulate (every pairwise
 * summable sequence is jointly summable) and the proposition structure
 * (pointwise order with f -> e - f is an orthocomplemented orthomodular
 * poset in which orthogonal sums are least upper bounds).
 */

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "oml/report.hpp"
#include "oml/state.hpp"

namespace oml {

/// Values at each pure state of an agreed family, in listed order.
using Effect = std::vector<Rational>;

Effect zero_effect(std::size_t arity);
Effect unit_effect(std::size_t arity);
Effect complement_effect(const Effect& f); ///< e - f
Effect add_effects(const Effect& f, const Effect& g);

bool effect_in_range(const Effect& f);             ///< all entries in [0, 1]
bool effect_leq(const Effect& f, const Effect& g); ///< pointwise
/// f and g are summable: f + g stays below the unit.
bool effects_orthogonal(const Effect& f, const Effect& g);

std::string effect_str(const Effect& f); ///< "(a, b, c)"

/// alpha -> alpha(element) across the listed states.  Exact states only.
Effect element_effect(const std::vector<StateMeasure>& states, int element);

/// A deduplicated, lexicographically sorted candidate set that always
/// contains the zero and unit effects.
struct EffectFamily {
    std::string name;
    std::size_t arity = 0;
    std::vector<Effect> members;

    bool contains(const Effect& f) const;
    std::optional<std::size_t> index_of(const Effect& f) const;
};

/// Validates ranges and lengths, augments with 0 and e, sorts, dedupes.
EffectFamily make_effect_family(std::string name, std::size_t arity,
                                std::vector<Effect> members);

/// The effects of every logic element across the listed exact states.
EffectFamily logic_effect_family(const LogicPtr& logic,
                                 const std::vector<StateMeasure>& states);

/// Sequences from the family (repetition allowed) are pairwise summable
/// when f_i + f_j <= e for every index pair i != j.  Each such sequence
/// of length at most max_seq_len must be jointly summable: some effect g
/// with g + sum f_i = e.  member_complement demands g inside the family;
/// with it false any g in [0, e] serves, so the test is sum f_i <= e.
CheckReport check_orthogonality_postulate(const EffectFamily& fam,
                                          int max_seq_len = 4,
                                          bool member_complement = true);

/// Order-theoretic shape of the family under pointwise order: every
/// member has its complement in the family, meets and joins with the
/// complement give 0 and e, the orthomodular identity holds, and the sum
/// of two summable members is their least upper bound.  Scans are
/// exhaustive over the family (quartic in its size): desk scale only.
CheckReport check_proposition_structure(const EffectFamily& fam);

} // namespace oml
