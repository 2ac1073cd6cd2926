#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "minregret/master.hpp"
#include "minregret/problem.hpp"
#include "minregret/types.hpp"

namespace minregret {

/// One solver iteration: the master solution, the bounds derived from it,
/// and the cut generated when the run does not stop here. ub is empty
/// while the upper bound is still infinite.
struct IterationRecord {
    std::size_t psi = 0;
    BinarySolution x_bar;
    std::int64_t rho_bar = 0;
    std::int64_t lb = 0;
    std::int64_t robustness = 0;
    std::optional<std::int64_t> ub;
    std::optional<BinarySolution> cut_added;
    bool stopped = false;
};

using TraceSink = std::function<void(const IterationRecord&)>;

struct BendersOptions {
    MasterStrategy master = MasterStrategy::branch_and_bound;
    std::size_t max_iterations = 1'000'000;
    std::size_t enumeration_cap = kDefaultEnumerationCap;
};

struct BendersResult {
    BinarySolution robust_solution;
    std::int64_t robust_cost = 0;
    std::vector<IterationRecord> iterations;
    std::size_t oracle_calls = 0;
    std::chrono::nanoseconds master_time{0};
    std::chrono::nanoseconds separation_time{0};
};

/// Seeds the cut pool with the oracle optimum of the worst-case scenario,
/// the one cut that makes the first master problem bounded.
CutPool initialize(const ProblemDefinition& problem, const IntervalCostVector& intervals);

/// A solver run driven one iteration at a time. The problem and intervals
/// must outlive the run. Construction performs the initialization step.
class BendersRun {
public:
    BendersRun(const ProblemDefinition& problem, const IntervalCostVector& intervals,
               BendersOptions options = {});

    /// One master solve plus one separation solve. When the stopping test
    /// fails, the witness joins the pool as a new cut; a duplicate would
    /// contradict the convergence argument and raises InvariantError.
    IterationRecord step();

    bool finished() const noexcept { return finished_; }
    std::size_t iteration_count() const noexcept { return records_.size(); }
    const CutPool& pool() const noexcept { return pool_; }
    std::optional<std::int64_t> upper_bound() const noexcept { return ub_; }

    /// Best feasible solution seen so far (the incumbent); null until the
    /// first step completes. Gives an anytime answer for interrupted runs.
    const BinarySolution* incumbent() const noexcept;

    std::size_t oracle_calls() const noexcept { return oracle_calls_; }

    /// Final result; only valid once finished() is true.
    BendersResult result() const;

private:
    const ProblemDefinition& problem_;
    const IntervalCostVector& intervals_;
    BendersOptions options_;
    CutPool pool_;
    std::vector<IterationRecord> records_;
    std::optional<std::int64_t> ub_;
    std::optional<BinarySolution> incumbent_;
    std::size_t oracle_calls_ = 0;
    bool finished_ = false;
    std::chrono::nanoseconds master_time_{0};
    std::chrono::nanoseconds separation_time_{0};
};

/// Runs the full decomposition loop to proven optimality and returns the
/// robust solution with its robustness cost. Every iteration is also
/// emitted to the sink, in order, when one is given.
BendersResult benders_solve(const ProblemDefinition& problem, const IntervalCostVector& intervals,
                            const BendersOptions& options = {}, const TraceSink& sink = {});

}  // namespace minregret
