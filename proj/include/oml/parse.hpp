#pragma once

/**
 * @file parse.hpp
 * @brief Text formats for spaces, logics, states, symmetries and effects.
 *
 * All files share one family: `#` starts a comment, data comes as
 * `key = value` entries, and scalars use the syntax `p/q` for rationals
 * and `p/q + r/s*rt` over a quadratic field, where `rt` stands for the
 * square root declared by the header `rt2 = d`.  Standalone `rt` and
 * `-rt` are accepted, as is everything Scalar::str() prints.
 *
 * Formats:
 *   space:     field = Q | Q(rt); rt2 = d (quadratic only); dim = n;
 *              form = [[...], ...] (optional, identity by default).
 *              field/rt2/dim must precede form.
 *   logic:     logic = name (optional); elements = l1 l2 ...;
 *              bottom = l; top = l; leq = (a, b) ...; ortho = (a, a') ...
 *              leq is closed reflexively and transitively after parsing.
 *   state:     state = name (optional); approx = true|false (default
 *              false); tolerance = t (approx only, default 1e-9);
 *              values = {element: value, ...} with rational values in
 *              exact mode and decimals in approx mode.
 *   symmetry:  field/rt2 (optional, must agree with the space);
 *              matrix = [[...], ...]; aut = id | conj (default id;
 *              conj needs a quadratic field).
 *   atoms:     field/rt2 (optional, must agree); atoms = [[...], ...]
 *   effects:   arity = n (optional); effects = [[...], ...] with
 *              rational entries, one row per effect.
 *
 * A bare token immediately followed by `=` always starts the next key,
 * which is how unbracketed lists (elements) end.  Every syntax problem
 * raises parse_error with a "line:col:" prefix; semantic problems keep
 * their domain error kinds (malformed_table, not_hermitian, ...).
 */

#include <string>
#include <utility>
#include <vector>

#include "oml/effect.hpp"
#include "oml/logic.hpp"
#include "oml/space.hpp"
#include "oml/state.hpp"
#include "oml/symmetry.hpp"

namespace oml {

/// One scalar against a known field; the whole text must be consumed.
Scalar parse_scalar(const std::string& text, const Field& field);

/// Scalars separated by commas, optionally wrapped in [...] or (...).
Vec parse_vector(const std::string& text, const Field& field);

SpacePtr parse_space(const std::string& text);

FiniteLogic parse_logic(const std::string& text);

/// Needs the logic for element labels; every element must get a value.
StateMeasure parse_state(const std::string& text, const LogicPtr& logic);

/// Matrix entries are read in the space's field.
LinearSymmetry parse_symmetry(const std::string& text, const SpacePtr& space);

/// Atom generator vectors, one row each; rows may be empty ([]) free.
std::vector<Vec> parse_atom_vectors(const std::string& text, const SpacePtr& space);

/// Effect rows; all rows must share one arity.
std::vector<Effect> parse_effects(const std::string& text);

/// Whole-file slurp; parse_error when the file cannot be read.
std::string read_text_file(const std::string& path);

} // namespace oml
