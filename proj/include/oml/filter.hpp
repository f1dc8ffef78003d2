#pragma once

/**
 * @file filter.hpp
 * @brief Projective filters acting on the pure states of a fragment.
 *
 * A PureFamily fixes one pure state per atom of a fragment, remembering
 * the generating vectors.  An Operation records what a measurement
 * operation does to each of those states: the intensity it keeps and the
 * pure state it lands on.  luders_filter builds the operation that
 * projects onto a fragment member.  Checkers verify the filter laws,
 * that operations pin down lattice elements (each element measures its
 * own effect, injectively), that filters of commuting elements preserve
 * each other's certain states, and that partitions of the space assemble
 * into observables and instruments with the expected statistics.
 */

#include <optional>
#include <string>
#include <vector>

#include "oml/effect.hpp"
#include "oml/fragment.hpp"
#include "oml/state.hpp"

namespace oml {

/// One pure state per atom of a fragment, in atom_indices order.
struct PureFamily {
    Fragment fragment;
    LogicPtr logic;
    std::vector<int> atom_elements;   ///< fragment index per position
    std::vector<Vec> vectors;         ///< the canonical atom generators
    std::vector<StateMeasure> states; ///< induced states, same order

    int size() const { return static_cast<int>(states.size()); }
    /// Position of a fragment atom in the family.
    std::optional<int> position_of(int fragment_element) const;
};

/// The family of atom-induced states of `f`.  `logic` must be compiled
/// from the same fragment.
PureFamily atom_state_family(Fragment f, const LogicPtr& logic);

/// Fate of one pure state under an operation: the intensity fraction
/// kept and the position of the resulting pure state.  target is -1
/// exactly when the state is annihilated (intensity zero).
struct PureAction {
    Rational intensity;
    int target = -1;
};

bool operator==(const PureAction& x, const PureAction& y);

/// An operation recorded by its action on every state of a PureFamily.
struct Operation {
    std::string name;
    std::vector<PureAction> actions;

    /// Intensity per input state: the effect this operation measures.
    Effect effect() const;
};

bool operator==(const Operation& x, const Operation& y);

/// The filter projecting onto fragment element `a`: each state vector
/// maps to its orthogonal projection, keeping the form fraction as
/// intensity.  Raises unknown_element if a projected line falls outside
/// the fragment (possible only on truncated fragments).
Operation luders_filter(const PureFamily& fam, int a);

/// later after first.  Annihilation and zero intensity propagate.
Operation compose(const Operation& later, const Operation& first);

/// Filter laws for the filter of fragment element `a`, one report per
/// law: intensity range, fixed points at intensity one, idempotent
/// intensity, repeatability, arrival intensity (the kept fraction equals
/// the arrived state's reading by the departing state), identification
/// of atoms by their own filters, complement filters, and support
/// transport along the Sasaki projection.
std::vector<CheckReport> check_filter_axioms(const PureFamily& fam, int a);

/// Every fragment element measures exactly its own effect, and distinct
/// elements measure distinct effects.
CheckReport check_projection_postulate(const PureFamily& fam);

/// Filters of commuting elements (comparable, orthogonal, or with
/// orthogonal complements) map each other's certain states to certain
/// states, when they do not annihilate them.
CheckReport check_eigenstate_ideality(const PureFamily& fam);

/// A measurement with one outcome per cell of an orthogonal partition.
struct Observable {
    std::string name;
    std::vector<std::string> outcomes; ///< cell labels
    std::vector<int> elements;         ///< fragment indices of the cells
};

/// Cells must be pairwise orthogonal members with full join.
Observable observable_from_partition(const PureFamily& fam,
                                     const std::vector<int>& parts);

/// Probability of each outcome in `state`.
std::vector<Rational> outcome_distribution(const Observable& obs,
                                           const StateMeasure& state);

/// An observable together with the filter applied on each outcome.
struct Instrument {
    Observable observable;
    std::vector<Operation> filters;
};

Instrument instrument_from_partition(const PureFamily& fam,
                                     const std::vector<int>& parts);

/// Outcome filters measure exactly the outcome effects, those effects
/// sum to the unit, and filters of distinct outcomes compose to the
/// null operation.
CheckReport check_instrument(const PureFamily& fam, const Instrument& inst);

} // namespace oml
