#pragma once

#include "irth/record.hpp"
#include "irth/rules.hpp"
#include "irth/scenario.hpp"

#include <vector>

namespace irth {

class SolverError : public std::runtime_error {
public:
    explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

/// Exact sum of explicit share fractions. Residue markers are a contract
/// violation here; the caller filters them first.
Fraction sum_shares(const std::vector<ShareValue>& shares);

struct BlockingResult {
    std::vector<RelativeMention> heirs;
    std::vector<RelativeMention> blocked;
};

/// Partitions the scenario's mentions into effective heirs and blocked
/// relatives. heirs + blocked always reconstitute the input multiset.
BlockingResult determine_blocking(const CaseScenario& scenario,
                                  const RuleTable& rules = RuleTable::standard());

/// Prescribed shares for the post-blocking heir set. Shares for a
/// multi-person category are collective (four daughters: one entry, 2/3).
std::vector<ShareEntry> assign_shares(const std::vector<RelativeMention>& heirs,
                                      const RuleTable& rules = RuleTable::standard());

/// The grandfather-with-siblings rule: best of head-count sharing (the
/// grandfather counts as a brother, sisters as half-heads), a third of the
/// remainder after fixed shares, and a sixth of the estate. Returns the
/// residue designation when no sibling shares with him, and throws when no
/// grandfather-line ascendant is present at all.
ShareValue grandfather_share(const std::vector<RelativeMention>& heirs,
                             const Fraction& fixed_total,
                             const Taxonomy& tax = Taxonomy::standard());

Adjustment detect_adjustment(const std::vector<ShareEntry>& shares);

/// Normalizes the share assignment into the integer-share distribution:
/// establishes the base denominator, applies the detected adjustment, and
/// multiplies the base until every per-individual share is integral.
PostTasil compute_tasil(const std::vector<ShareEntry>& shares, Adjustment adjustment);

/// The full five-stage pipeline over a parsed scenario.
SolutionRecord solve_case(const CaseScenario& scenario,
                          const RuleTable& rules = RuleTable::standard());

}  // namespace irth
