#pragma once

/**
 * @file state.hpp
 * @brief Probability measures on finite logics and their regularity
 *        properties.
 *
 * A LogicStructure is the order-and-orthogonality skeleton a measure
 * needs: bounds, order, orthocomplement, and the orthogonal-join triples
 * that generate additivity constraints.  Tables and fragments compile to
 * it by different routes: a table contributes the joins it stores, while
 * a fragment computes joins geometrically and keeps a triple only when
 * the join is itself a member.  A truncated fragment therefore never
 * manufactures a false additivity constraint.
 *
 * Measures are exact rational by default.  Approximate (double) mode
 * exists solely for states that cannot take rational values, carries an
 * explicit tolerance, and never mixes with exact states.
 */

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "oml/fragment.hpp"
#include "oml/logic.hpp"
#include "oml/report.hpp"

namespace oml {

struct LogicStructure {
    /// a and b orthogonal, a v b = c; a < b, neither is the bottom.
    struct OrthogonalJoin {
        int a, b, c;
    };

    std::string name;
    std::vector<std::string> labels;
    int bottom = 0;
    int top = 0;
    std::vector<std::vector<bool>> leq;
    std::vector<int> ortho;
    std::vector<OrthogonalJoin> ojoins;
    std::vector<int> atoms;
    bool truncated = false;

    int size() const { return static_cast<int>(labels.size()); }
    const std::string& label(int i) const { return labels.at(static_cast<std::size_t>(i)); }
};

using LogicPtr = std::shared_ptr<const LogicStructure>;

/// Table route: join triples come from the table; missing joins are skipped.
LogicPtr compile(const FiniteLogic& l);

/// Geometric route: joins are evaluated in the ambient space and recorded
/// only when the result is a fragment member.
LogicPtr compile(const Fragment& f);

class StateMeasure {
public:
    static StateMeasure exact(LogicPtr logic, std::vector<Rational> values,
                              std::string name = "state");
    static StateMeasure approx(LogicPtr logic, std::vector<double> values, double tolerance,
                               std::string name = "state");

    const LogicPtr& logic() const { return logic_; }
    const std::string& name() const { return name_; }
    bool is_exact() const { return exact_; }
    double tolerance() const { return tolerance_; } ///< 0 in exact mode

    /// Exact value; error in approx mode.
    const Rational& value(int i) const;
    /// The whole exact value vector; error in approx mode.
    const std::vector<Rational>& values() const;
    /// Value as double, in either mode.
    double value_d(int i) const;

    bool is_one_at(int i) const;
    bool is_zero_at(int i) const;
    /// value(i) <= value(j), up to tolerance in approx mode.
    bool leq_at(int i, int j) const;
    /// value(i) == value(j), up to tolerance in approx mode.
    bool equal_at(int i, int j) const;
    /// Same logic and same values (both tolerances honored in approx mode).
    bool same_values(const StateMeasure& o) const;

    StateMeasure renamed(std::string name) const;

private:
    StateMeasure() = default;

    LogicPtr logic_;
    std::string name_;
    bool exact_ = true;
    double tolerance_ = 0.0;
    std::vector<Rational> exact_values_;
    std::vector<double> approx_values_;
};

/// Bounds take 0 and 1, all values lie in [0, 1], and every recorded
/// orthogonal-join triple is exactly (or tolerance-) additive.
CheckReport validate_state(const StateMeasure& m);

/// The minimum of {a : m(a) = 1}, when that set has one.
std::optional<int> support(const StateMeasure& m);

/// For each state and each pair a, b with m(a) = m(b) = 1 there is a
/// member c <= a, c <= b with m(c) = 1.
CheckReport check_jauch_piron(const std::vector<StateMeasure>& states);

/// Every nonzero member is certain in some listed state.
CheckReport check_sufficiency(const LogicPtr& logic, const std::vector<StateMeasure>& states);

/// beta(support(alpha)) = 1 forces beta = alpha across the listed states.
CheckReport check_identification(const std::vector<StateMeasure>& states);

/// For alpha with alpha(a) != 0 there is a listed beta with beta(a) = 1
/// and alpha(support(beta)) = alpha(a).
CheckReport check_minimal_disturbance(const std::vector<StateMeasure>& states);

/// a <= b holds exactly when every listed state orders the values that way.
CheckReport check_order_determining(const LogicPtr& logic,
                                    const std::vector<StateMeasure>& states);

/// If some state is certain of a, and every state certain of a is also
/// certain of b, then a <= b.
CheckReport check_strong_ordering(const LogicPtr& logic,
                                  const std::vector<StateMeasure>& states);

/// The measure M -> f(v, P_M v)/f(v, v) on a fragment, evaluated exactly.
/// Every value must land in the rational part of the field.
StateMeasure atom_induced_state(const Fragment& f, const LogicPtr& logic, const Vec& v);

/// The measure M -> <v, P_M v>/<v, v> for a real vector v over a rational
/// fragment with the natural form, evaluated in doubles.  Additivity is
/// verified against the tolerance at construction.
StateMeasure extension_state(const Fragment& f, const LogicPtr& logic,
                             const std::vector<double>& v, double tolerance = 1e-9);

/// The dispersion-free measure on a fragment of Q^2 with the natural
/// form: an atom with canonical generator (1, t) gets 1 when t >= 0 and
/// 0 otherwise; (0, 1) gets 0.
StateMeasure anomalous_dim2_state(const Fragment& f, const LogicPtr& logic);

/// Pointwise convex combination of exact states on one logic.
StateMeasure convex_mix(const std::vector<StateMeasure>& states,
                        const std::vector<Rational>& weights);

} // namespace oml
