#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "minregret/problem.hpp"
#include "minregret/regret.hpp"
#include "minregret/types.hpp"

namespace minregret {

/// The ordered set of solutions whose rows currently constrain the master
/// problem. Inserting a duplicate generator is an invariant violation and
/// throws; rows are always derived from their generator on insertion.
class CutPool {
public:
    struct Entry {
        BinarySolution generator;
        AffineCutRow row;
    };

    CutPool() = default;

    void add(const BinarySolution& y, const IntervalCostVector& intervals, ObjectiveSense sense);
    bool contains(const BinarySolution& y) const { return index_.contains(y); }

    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    std::span<const Entry> entries() const noexcept { return entries_; }
    ObjectiveSense sense() const;  // PreconditionError when empty

    /// Tightest feasible value of rho at x: the minimum row value when
    /// minimizing, the maximum when maximizing.
    std::int64_t tightest_rho(const BinarySolution& x) const;

private:
    std::vector<Entry> entries_;
    std::unordered_set<BinarySolution> index_;
};

/// Relaxed robustness cost of x measured against the pool's generators.
std::int64_t relaxed_robustness_cost(const BinarySolution& x, const CutPool& pool,
                                     const IntervalCostVector& intervals);

struct MasterSolution {
    BinarySolution x;
    std::int64_t rho = 0;
    std::int64_t objective = 0;
};

enum class MasterStrategy { enumeration, branch_and_bound };

std::string_view to_string(MasterStrategy strategy);
MasterStrategy master_strategy_from_string(std::string_view text);  // "enum" or "bnb"

/// Solves the relaxed master problem exactly by scanning the whole
/// feasible set. The pool must be nonempty. Ties on the objective are
/// broken toward the lexicographically smallest solution.
MasterSolution solve_master_enum(const ProblemDefinition& problem,
                                 const IntervalCostVector& intervals, const CutPool& pool,
                                 std::size_t cap = kDefaultEnumerationCap);

/// Same contract and tie rule as solve_master_enum, via depth-first
/// branch-and-bound instead of enumeration.
MasterSolution solve_master_bnb(const ProblemDefinition& problem,
                                const IntervalCostVector& intervals, const CutPool& pool);

MasterSolution solve_master(MasterStrategy strategy, const ProblemDefinition& problem,
                            const IntervalCostVector& intervals, const CutPool& pool,
                            std::size_t cap = kDefaultEnumerationCap);

}  // namespace minregret
