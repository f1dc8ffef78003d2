#pragma once

/**
 * @file symmetry.hpp
 * @brief Semilinear symmetries of a Hermitian space and the lattice
 *        automorphisms they induce.
 *
 * A LinearSymmetry applies an invertible matrix after a field
 * automorphism of the coordinates.  Such a map sends lines to lines, so
 * it induces a map on atoms (induced_atom_map) which extends to whole
 * finite sublattices by joins (extend_atom_map).  verify_form_identity
 * recovers the multiplier rho with f(Su, Sv) = g(rho) g(f(u, v)) and
 * checks it exactly on samples.
 *
 * swap_symmetry builds the concrete unitary-style map exchanging two
 * equal-norm orthogonal vectors while fixing their sum, scaled by a
 * chosen lambda.  check_abundance asks whether every orthogonal atom
 * pair admits such a swap; check_regularity asks whether form values
 * are fixed by every field automorphism; check_swap_consistency replays
 * the multiplier bookkeeping g(rho) = lambda lambda* of a swapping
 * symmetry with a fixed superposition and derives equal-norm
 * representatives from it.  orbit_superposition_check expands an atom
 * orbit under a symmetry list and tests whether given atoms are
 * superpositions of orbit members.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oml/fragment.hpp"
#include "oml/space.hpp"

namespace oml {

/// An invertible map v -> S g(v) on a space, with g a field automorphism
/// applied coordinatewise before the matrix.
struct LinearSymmetry {
    SpacePtr space;
    Mat matrix;
    FieldAutomorphism aut;

    Vec apply(const Vec& v) const;
    Subspace apply(const Subspace& m) const; ///< image subspace
    std::string name() const;
};

/// Validates shape, field membership and invertibility.
LinearSymmetry make_symmetry(SpacePtr space, Mat matrix, FieldAutomorphism aut);
LinearSymmetry make_symmetry(SpacePtr space, Mat matrix); ///< identity automorphism
LinearSymmetry identity_symmetry(SpacePtr space);
LinearSymmetry scalar_symmetry(SpacePtr space, const Scalar& lambda); ///< lambda * identity

LinearSymmetry compose(const LinearSymmetry& later, const LinearSymmetry& first);
LinearSymmetry inverse(const LinearSymmetry& s);

/// A bijective, orthogonality-preserving map between two atom lists.
struct AtomMap {
    std::vector<Subspace> from;
    std::vector<Subspace> to; ///< images, same order

    std::optional<Subspace> image_of(const Subspace& p) const;
};

/// [v] -> [Sv] on the given atoms, canonicalized.  Raises identity_fails
/// if the images break orthogonality in either direction, which guards
/// the AtomMap invariant.
AtomMap induced_atom_map(const LinearSymmetry& s, const std::vector<Subspace>& atoms);

/// The multiplier recovered by verify_form_identity, when the sampled
/// pairs pin one down.
struct FormIdentityResult {
    CheckReport report;
    std::optional<Scalar> rho;
};

/// Determines rho from the first sample pair with f(u, v) != 0 and
/// verifies f(Su, Sv) = g(rho) g(f(u, v)) exactly on every pair.
/// Raises hypotheses_unmet when no sample pair has a nonvanishing form
/// value; identity violations are reported, not thrown.
FormIdentityResult verify_form_identity(const LinearSymmetry& s,
                                        const std::vector<std::pair<Vec, Vec>>& samples);

/// An automorphism of a finite lattice as a permutation of indices.
struct LatticeAutomorphism {
    std::vector<int> image;
    int operator()(int i) const { return image[static_cast<std::size_t>(i)]; }
};

/// Extends an atom map to the whole fragment: each element maps to the
/// join of the images of the atoms below it.  The map must cover every
/// fragment atom; extension_inconsistent when an element has no atoms
/// below it, an image escapes the fragment, or the result fails to be an
/// order- and ortho-preserving bijection.
LatticeAutomorphism extend_atom_map(const Fragment& f, const AtomMap& map);

/// Table variant: atom images given by label pairs, joins taken in the
/// table.  Same guarantees and failure modes as the geometric overload.
LatticeAutomorphism extend_atom_map(const FiniteLogic& l,
                                    const std::vector<std::pair<std::string, std::string>>& atom_images);

/// The map fixing span{x, y}-perp up to lambda and exchanging x and y:
/// u -> lambda (u + (gamma - delta)(y - x)) with gamma, delta the
/// coefficients of u along x and y.  Requires f(x, y) = 0, equal form
/// values, and lambda != 0; by construction it swaps [x] and [y] and
/// fixes [x + y].
LinearSymmetry swap_symmetry(const SpacePtr& space, const Vec& x, const Vec& y,
                             std::optional<Scalar> lambda = std::nullopt);

/// For every orthogonal pair among the atoms: attempts equal-norm
/// representatives and the swap built from them.  A pair with no such
/// representatives is witnessed with its norm ratio.  Rational spaces
/// only.
CheckReport check_abundance(const std::vector<Subspace>& atoms);

/// Form values must be fixed points of every field automorphism.
CheckReport check_regularity(const SpacePtr& space, const std::vector<Vec>& samples);

/// Replays the multiplier bookkeeping of a symmetry swapping the atoms
/// x and y with a fixed superposition: extracts lambda from the fixed
/// atom, verifies g(rho) = lambda lambda*, and confirms the rescaled
/// representatives have exactly equal form values.  hypotheses_unmet
/// when the symmetry does not swap the atoms or fixes no superposition.
CheckReport check_swap_consistency(const LinearSymmetry& s, const Subspace& x,
                                   const Subspace& y);

/// Expands the orbit of `base` under the symmetry list (closure under
/// every listed map), then tests each given atom for being a
/// superposition of two orbit members.  The verdict degrades to
/// truncated when the orbit exceeds `cap`.
CheckReport orbit_superposition_check(const std::vector<LinearSymmetry>& group,
                                      const Subspace& base,
                                      const std::vector<Subspace>& tests,
                                      std::size_t cap = 64);

} // namespace oml
