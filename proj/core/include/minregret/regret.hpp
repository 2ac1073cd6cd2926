#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "minregret/types.hpp"

namespace minregret {

/// One row of the master problem: the affine bound a fixed feasible
/// solution y imposes on the auxiliary variable rho, as a function of x.
///
/// Slopes are stored as nonnegative magnitudes; the sense flag decides the
/// sign, so evaluate(x) is constant + slope.x when minimizing and
/// constant - slope.x when maximizing. In both senses evaluate(x) equals
/// the cost of the generating y in the scenario induced by x.
struct AffineCutRow {
    std::int64_t constant = 0;
    std::vector<std::int64_t> slope;
    ObjectiveSense sense = ObjectiveSense::minimize;

    std::int64_t evaluate(const BinarySolution& x) const;
};

/// The scenario in which the regret of x is attained: when minimizing,
/// chosen variables get their upper cost and the rest their lower cost;
/// when maximizing, the rule is mirrored.
Scenario induced_scenario(const BinarySolution& x, const IntervalCostVector& intervals,
                          ObjectiveSense sense);

/// The scenario used to seed the solver: all-upper costs when minimizing,
/// all-lower when maximizing.
Scenario worst_case_scenario(const IntervalCostVector& intervals, ObjectiveSense sense);

/// Exact integer cost of x under scenario s.
std::int64_t scenario_cost(const Scenario& s, const BinarySolution& x);

/// Regret of x in scenario s given the optimal classical objective in s.
/// A negative result means opt_value was not optimal and raises an error.
std::int64_t regret(const BinarySolution& x, const Scenario& s, std::int64_t opt_value,
                    ObjectiveSense sense);

/// Regret of x in its induced scenario measured against the best solution
/// within gamma instead of the whole feasible set. With x feasible and
/// gamma a subset of the feasible set this lower-bounds the robustness
/// cost of x. gamma must be nonempty.
std::int64_t relaxed_robustness_cost(const BinarySolution& x,
                                     std::span<const BinarySolution> gamma,
                                     const IntervalCostVector& intervals,
                                     ObjectiveSense sense);

/// Builds the master-problem row generated by y.
AffineCutRow cut_row(const BinarySolution& y, const IntervalCostVector& intervals,
                     ObjectiveSense sense);

}  // namespace minregret
