#pragma once

/**
 * @file checks.hpp
 * @brief Lattice-law checkers, generic over the logic model.
 *
 * The same checkers run against finite tables (FiniteLogic) and against
 * generated subspace fragments (FragmentLogic).  The two models answer
 * the law primitives differently: tables search for unique bounds within
 * the table and may answer "unavailable", fragments compute meets and
 * joins geometrically, where intermediate values need not belong to the
 * fragment.  Elements are addressed by index in both models.
 */

#include <concepts>
#include <string>
#include <utility>
#include <vector>

#include "oml/logic.hpp"
#include "oml/report.hpp"

namespace oml {

template <class L>
concept LogicLike = requires(const L& l, int i) {
    { l.size() } -> std::convertible_to<int>;
    { l.name() } -> std::convertible_to<std::string>;
    { l.label(i) } -> std::convertible_to<std::string>;
    { l.bottom() } -> std::convertible_to<int>;
    { l.top() } -> std::convertible_to<int>;
    { l.leq(i, i) } -> std::convertible_to<bool>;
    { l.ortho(i) } -> std::convertible_to<int>;
    { l.is_atom(i) } -> std::convertible_to<bool>;
    { l.complement_pair_law(i) } -> std::convertible_to<LawResult>;
    { l.orthomodular_pair_law(i, i) } -> std::convertible_to<LawResult>;
    { l.covering_step_law(i, i) } -> std::convertible_to<LawResult>;
    { l.central_law(i) } -> std::convertible_to<LawResult>;
    { l.disjoint_law(i, i) } -> std::convertible_to<LawResult>;
    { l.superposition_law(i, i, i) } -> std::convertible_to<LawResult>;
};

template <LogicLike L>
std::vector<int> atoms_of(const L& l) {
    std::vector<int> out;
    for (int i = 0; i < l.size(); ++i)
        if (l.is_atom(i)) out.push_back(i);
    return out;
}

/// Order axioms, bounds, involution, order reversal, complement laws.
template <LogicLike L>
CheckReport check_ortholattice(const L& l) {
    CheckReport r;
    r.check = "ortholattice";
    r.target = l.name();
    const int n = l.size();
    r.stat("elements", n);
    for (int a = 0; a < n; ++a) {
        if (!l.leq(a, a)) r.witness("not reflexive at " + l.label(a));
        if (!l.leq(l.bottom(), a)) r.witness("bottom not below " + l.label(a));
        if (!l.leq(a, l.top())) r.witness(l.label(a) + " not below top");
        if (l.ortho(l.ortho(a)) != a)
            r.witness("orthocomplement not involutive at " + l.label(a));
        switch (l.complement_pair_law(a)) {
        case LawResult::holds: break;
        case LawResult::fails:
            r.witness("complement laws fail at " + l.label(a));
            break;
        case LawResult::unavailable:
            r.witness("complement meet/join missing for " + l.label(a));
            r.note("some complement bounds are missing from the table");
            break;
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a != b && l.leq(a, b) && l.leq(b, a))
                r.witness("antisymmetry fails on (" + l.label(a) + ", " + l.label(b) + ")");
            if (l.leq(a, b) && !l.leq(l.ortho(b), l.ortho(a)))
                r.witness("order reversal fails on (" + l.label(a) + ", " + l.label(b) + ")");
        }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!l.leq(a, b)) continue;
            for (int c = 0; c < n; ++c)
                if (l.leq(b, c) && !l.leq(a, c))
                    r.witness("transitivity fails on (" + l.label(a) + ", " + l.label(b) +
                              ", " + l.label(c) + ")");
        }
    return r.finish();
}

/// a <= b implies b = a v (b ^ a-perp), checked over all comparable pairs.
template <LogicLike L>
CheckReport check_orthomodular(const L& l) {
    CheckReport r;
    r.check = "orthomodular";
    r.target = l.name();
    long long pairs = 0;
    for (int a = 0; a < l.size(); ++a)
        for (int b = 0; b < l.size(); ++b) {
            if (!l.leq(a, b)) continue;
            ++pairs;
            switch (l.orthomodular_pair_law(a, b)) {
            case LawResult::holds: break;
            case LawResult::fails:
                r.witness("(" + l.label(a) + ", " + l.label(b) + ")");
                break;
            case LawResult::unavailable:
                r.witness("(" + l.label(a) + ", " + l.label(b) + ") [bound missing]");
                r.note("orthomodular identity needs meets/joins the table lacks");
                break;
            }
        }
    r.stat("comparable-pairs", pairs);
    return r.finish();
}

/// Every nonzero element dominates an atom.
template <LogicLike L>
CheckReport check_atomicity(const L& l) {
    CheckReport r;
    r.check = "atomicity";
    r.target = l.name();
    const auto atoms = atoms_of(l);
    r.stat("atoms", static_cast<long long>(atoms.size()));
    for (int b = 0; b < l.size(); ++b) {
        if (b == l.bottom()) continue;
        bool found = false;
        for (int p : atoms)
            if (l.leq(p, b)) {
                found = true;
                break;
            }
        if (!found) r.witness(l.label(b) + " has no atom below it");
    }
    return r.finish();
}

/// For every element a and atom p: (a v p) ^ a-perp is an atom or bottom.
template <LogicLike L>
CheckReport check_covering_law(const L& l) {
    CheckReport r;
    r.check = "covering";
    r.target = l.name();
    const auto atoms = atoms_of(l);
    r.stat("atoms", static_cast<long long>(atoms.size()));
    for (int a = 0; a < l.size(); ++a)
        for (int p : atoms) {
            switch (l.covering_step_law(a, p)) {
            case LawResult::holds: break;
            case LawResult::fails:
                r.witness("a = " + l.label(a) + ", p = " + l.label(p));
                break;
            case LawResult::unavailable:
                r.witness("a = " + l.label(a) + ", p = " + l.label(p) + " [bound missing]");
                break;
            }
        }
    return r.finish();
}

/// Elements c with a = (a ^ c) v (a ^ c-perp) for every a.
template <LogicLike L>
std::vector<int> center_of(const L& l) {
    std::vector<int> out;
    for (int c = 0; c < l.size(); ++c)
        if (l.central_law(c) == LawResult::holds) out.push_back(c);
    return out;
}

/// Center = {bottom, top}.
template <LogicLike L>
CheckReport check_irreducible(const L& l) {
    CheckReport r;
    r.check = "irreducible";
    r.target = l.name();
    const auto c = center_of(l);
    r.stat("center-size", static_cast<long long>(c.size()));
    for (int x : c)
        if (x != l.bottom() && x != l.top())
            r.witness("central element " + l.label(x));
    return r.finish();
}

/// Unordered pairs with a ^ b = 0 but a not below b-perp.
template <LogicLike L>
std::vector<std::pair<int, int>> complementary_pairs(const L& l) {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < l.size(); ++a)
        for (int b = a + 1; b < l.size(); ++b) {
            if (l.disjoint_law(a, b) != LawResult::holds) continue;
            if (l.leq(a, l.ortho(b)) && l.leq(b, l.ortho(a))) continue;
            out.emplace_back(a, b);
        }
    return out;
}

/// Atoms q <= p1 v p2 other than p1, p2 themselves.
template <LogicLike L>
std::vector<int> superposition_atoms(const L& l, int p1, int p2) {
    if (!l.is_atom(p1) || !l.is_atom(p2))
        fail(ErrorKind::not_an_atom, l.label(p1) + " or " + l.label(p2));
    if (p1 == p2) fail(ErrorKind::bad_argument, "superposition needs distinct atoms");
    std::vector<int> out;
    for (int q : atoms_of(l)) {
        if (q == p1 || q == p2) continue;
        if (l.superposition_law(q, p1, p2) == LawResult::holds) out.push_back(q);
    }
    return out;
}

/// Every pair of distinct atoms admits a third atom under its join.
template <LogicLike L>
CheckReport check_superpositions_exist(const L& l) {
    CheckReport r;
    r.check = "superpositions-exist";
    r.target = l.name();
    const auto atoms = atoms_of(l);
    r.stat("atoms", static_cast<long long>(atoms.size()));
    for (std::size_t i = 0; i < atoms.size(); ++i)
        for (std::size_t j = i + 1; j < atoms.size(); ++j)
            if (superposition_atoms(l, atoms[i], atoms[j]).empty())
                r.witness("(" + l.label(atoms[i]) + ", " + l.label(atoms[j]) + ")");
    return r.finish();
}

} // namespace oml
