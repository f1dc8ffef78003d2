#pragma once

/**
 * @file logic.hpp
 * @brief Finite bounded posets with an orthocomplement, given by tables.
 *
 * Tables are deliberately permissive: construction validates only the
 * structural skeleton (a genuine partial order after closure, a total
 * involutive orthocomplement, known bounds).  Whether the table is an
 * ortholattice, orthomodular, atomic and so on is the checkers' business
 * (see checks.hpp); deliberately broken tables are loadable so the
 * checkers' failure paths can be demonstrated.
 *
 * Meets and joins are computed on demand as unique greatest lower /
 * least upper bounds within the table; absence is an empty optional,
 * never an error.
 */

#include <optional>
#include <string>
#include <vector>

#include "oml/error.hpp"

namespace oml {

/// Tri-state result of a law instance: it holds, it fails, or the data
/// needed to evaluate it (a meet or join) is missing from the table.
enum class LawResult { holds, fails, unavailable };

class FiniteLogic {
public:
    /// From generating relations: reflexive-transitive closure is applied
    /// to leq; ortho pairs are symmetrized.  malformed_table on cycles,
    /// on a non-involutive or partial ortho, and on unknown labels.
    static FiniteLogic from_relations(std::string name,
                                      std::vector<std::string> labels,
                                      const std::vector<std::pair<std::string, std::string>>& leq_pairs,
                                      const std::vector<std::pair<std::string, std::string>>& ortho_pairs,
                                      const std::string& bottom,
                                      const std::string& top);

    /// From complete tables (trusted callers: builders, fragment export).
    static FiniteLogic from_parts(std::string name,
                                  std::vector<std::string> labels,
                                  std::vector<std::vector<bool>> leq,
                                  std::vector<int> ortho,
                                  int bottom,
                                  int top);

    /// Boolean algebra of subsets of n atoms, n in [1, 5].
    static FiniteLogic boolean_algebra(int n_atoms);

    /// The six-element modular ortholattice with four atoms a, a', b, b'.
    static FiniteLogic mo2();

    /// The benzene-ring ortholattice 0 < a < b < 1, 0 < b' < a' < 1:
    /// an ortholattice that is not orthomodular.
    static FiniteLogic o6();

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& name() const { return name_; }
    const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
    std::optional<int> index_of(const std::string& label) const;

    int bottom() const { return bottom_; }
    int top() const { return top_; }
    bool leq(int i, int j) const {
        return leq_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    int ortho(int i) const { return ortho_[static_cast<std::size_t>(i)]; }

    std::optional<int> meet(int i, int j) const;
    std::optional<int> join(int i, int j) const;

    bool is_atom(int i) const;

    // Law primitives used by the generic checkers; table semantics.
    LawResult complement_pair_law(int a) const;
    LawResult orthomodular_pair_law(int a, int b) const; ///< assumes a <= b
    LawResult covering_step_law(int a, int p) const;     ///< p an atom
    LawResult central_law(int c) const;
    LawResult disjoint_law(int a, int b) const;
    LawResult superposition_law(int q, int p1, int p2) const; ///< q <= p1 v p2

private:
    FiniteLogic() = default;

    void build_tables() const;

    std::string name_;
    std::vector<std::string> labels_;
    std::vector<std::vector<bool>> leq_;
    std::vector<int> ortho_;
    int bottom_ = 0;
    int top_ = 0;

    mutable bool tables_built_ = false;
    mutable std::vector<std::vector<int>> meet_, join_; // -1 = absent
    mutable std::vector<bool> atom_;
};

} // namespace oml
