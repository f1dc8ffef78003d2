#pragma once

/**
 * @file suite.hpp
 * @brief Named check bundles behind the CLI `suite` verb.
 *
 * Each suite builds a fixed demonstration target and runs one module
 * family's checks end to end.  Sampling is driven entirely by the
 * configured seed, and reports come back in a fixed order, so machine
 * renderings of two runs with equal inputs are byte-identical.  The
 * suite names are opaque ids kept stable for scripting:
 *
 *   section5.4   lattice laws on a sublattice of Q^3 generated from
 *                five seeded random atoms, plus sampled orthomodularity
 *                of the ambient space and the induced atom states.
 *   theorem2     orthogonality postulate and order structure of an
 *                effect family; defaults to the full indicator family
 *                of the Boolean 2^3 logic, override via config.
 *   corollary1   irreducible atomistic orthomodular profile of a
 *                fragment generated from the standard atoms plus
 *                [(1,1,1)], with the support bijection between its
 *                atoms and their induced states.
 *   lemma-swap   swapping symmetries on the coordinate basis: swap
 *                construction and replay, abundance, regularity, and
 *                the form identity.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oml/effect.hpp"
#include "oml/report.hpp"

namespace oml {

struct SuiteConfig {
    std::uint64_t seed = 2024;
    int max_seq_len = 4;
    /// Replaces the default effect family of the `theorem2` suite.
    std::optional<std::vector<Effect>> effects;
};

const std::vector<std::string>& suite_names();

/// bad_argument on a name outside suite_names().
std::vector<CheckReport> run_suite(const std::string& name, const SuiteConfig& cfg = {});

} // namespace oml
