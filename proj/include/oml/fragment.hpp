#pragma once

/**
 * @file fragment.hpp
 * @brief Finite sublattices of the closed-subspace lattice of a space.
 *
 * Fragment::generate closes a set of subspaces under meet, join and
 * orthocomplement, up to a configurable element cap.  For generic
 * generators the full closure is infinite, so capped generation is the
 * normal case, flagged by truncated().
 *
 * FragmentLogic adapts a fragment to the checker interface.  Its law
 * primitives evaluate meets and joins geometrically in the ambient
 * space, so a law verdict never depends on whether an intermediate
 * subspace happened to land inside the fragment.
 */

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oml/logic.hpp"
#include "oml/space.hpp"

namespace oml {

class Fragment {
public:
    /// Close `generators` under meet, join and ortho; at most `cap` elements.
    /// Zero and the full space are always present (indices 0 and 1).
    static Fragment generate(SpacePtr space,
                             const std::vector<Subspace>& generators,
                             std::size_t cap = 512);

    const SpacePtr& space() const { return space_; }
    int size() const { return static_cast<int>(elements_.size()); }
    const Subspace& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
    const std::vector<Subspace>& elements() const { return elements_; }

    /// Index of a subspace in the fragment, if present.
    std::optional<int> index_of(const Subspace& s) const;

    int bottom() const { return 0; }
    int top() const { return 1; }
    bool leq(int i, int j) const { return leq_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    int ortho(int i) const { return ortho_[static_cast<std::size_t>(i)]; }
    bool is_atom(int i) const { return element(i).dim() == 1; }
    const std::vector<int>& atom_indices() const { return atoms_; }

    bool truncated() const { return truncated_; }
    std::size_t cap() const { return cap_; }

    std::string label(int i) const { return element(i).label(); }
    std::string name() const;

    /// Export as a finite table carrying the order restricted to the
    /// members.  The table's bounds are recomputed from that order, so on
    /// a truncated fragment they can disagree with the ambient lattice
    /// (a join can land on V because the true join was capped out).
    FiniteLogic to_logic() const;

private:
    explicit Fragment(SpacePtr space) : space_(std::move(space)) {}

    // Append s (and its ortho, if absent) unless the cap refuses.
    // Returns false exactly when the cap was hit.
    bool insert_pair(const Subspace& s);
    void rebuild_tables();

    SpacePtr space_;
    std::vector<Subspace> elements_;
    std::map<std::string, int> index_by_label_;
    std::vector<std::vector<bool>> leq_;
    std::vector<int> ortho_;
    std::vector<int> atoms_;
    std::size_t cap_ = 512;
    bool truncated_ = false;
};

/// Checker view of a fragment with geometric law semantics.
class FragmentLogic {
public:
    explicit FragmentLogic(const Fragment& f) : f_(&f) {}

    int size() const { return f_->size(); }
    std::string name() const { return f_->name(); }
    std::string label(int i) const { return f_->label(i); }
    int bottom() const { return f_->bottom(); }
    int top() const { return f_->top(); }
    bool leq(int i, int j) const { return f_->leq(i, j); }
    int ortho(int i) const { return f_->ortho(i); }
    bool is_atom(int i) const { return f_->is_atom(i); }

    LawResult complement_pair_law(int a) const;
    LawResult orthomodular_pair_law(int a, int b) const;
    LawResult covering_step_law(int a, int p) const;
    LawResult central_law(int c) const;
    LawResult disjoint_law(int a, int b) const;
    LawResult superposition_law(int q, int p1, int p2) const;

    const Fragment& fragment() const { return *f_; }

private:
    const Subspace& sub(int i) const { return f_->element(i); }
    const Fragment* f_;
};

} // namespace oml
