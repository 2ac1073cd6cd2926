#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "minregret/engine.hpp"
#include "minregret/problem.hpp"
#include "minregret/rng.hpp"
#include "minregret/types.hpp"

namespace minregret {

struct BruteForceResult {
    BinarySolution solution;
    std::int64_t cost = 0;
    std::size_t feasible_count = 0;
};

/// Ground-truth robust solver: evaluates the robustness cost of every
/// feasible solution and keeps the minimum, breaking ties toward the
/// lexicographically smallest solution. Independent of the decomposition
/// engine; tractable only while the feasible set enumerates within cap.
BruteForceResult brute_force_robust(const ProblemDefinition& problem,
                                    const IntervalCostVector& intervals,
                                    std::size_t cap = kDefaultEnumerationCap);

/// Integer scenario drawn coordinate-wise uniform from the intervals,
/// fully determined by the seed (see rng.hpp for the pinned generator).
Scenario sample_scenario(const IntervalCostVector& intervals, std::uint64_t seed);

/// Streaming variant sharing one generator across draws.
class ScenarioSampler {
public:
    explicit ScenarioSampler(std::uint64_t seed) : rng_(seed) {}

    Scenario next(const IntervalCostVector& intervals);

private:
    Xoshiro256StarStar rng_;
};

struct AuditCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Result of auditing a solver trace. Every check appears in the report,
/// pass or fail.
struct TraceAuditReport {
    std::vector<AuditCheck> checks;

    bool all_passed() const;
    const AuditCheck* find(std::string_view name) const;
};

/// Audits a trace independently of the engine that produced it: bound
/// monotonicity, the lower/upper sandwich, cut novelty and feasibility,
/// the stopping rule, recomputed robustness costs, and the iteration
/// bound. Structurally broken traces (dimension or numbering errors)
/// raise ValidationError naming the offending record.
TraceAuditReport check_trace(std::span<const IterationRecord> trace,
                             const ProblemDefinition& problem,
                             const IntervalCostVector& intervals,
                             std::size_t cap = kDefaultEnumerationCap);

}  // namespace minregret
