#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "minregret/regret.hpp"
#include "minregret/types.hpp"

namespace minregret {

enum class ProblemKind { tabular, st_path, spanning_tree, knapsack };

std::string_view to_string(ProblemKind kind);
ProblemKind kind_from_string(std::string_view text);

/// An arbitrary finite feasible set given as an explicit list of solutions.
struct TabularStructure {
    std::vector<BinarySolution> solutions;
};

struct Arc {
    int from = 0;
    int to = 0;
};

/// Directed graph with one variable per arc; feasible solutions are the arc
/// sets that form a simple source-target path.
struct StPathStructure {
    int vertex_count = 0;
    std::vector<Arc> arcs;
    int source = 0;
    int target = 0;
};

struct Edge {
    int a = 0;
    int b = 0;
};

/// Connected undirected graph with one variable per edge; feasible
/// solutions are the edge sets that form a spanning tree.
struct SpanningTreeStructure {
    int vertex_count = 0;
    std::vector<Edge> edges;
};

/// 0-1 knapsack; feasible solutions are the item sets within capacity.
/// Always a maximization problem.
struct KnapsackStructure {
    std::vector<std::int64_t> weights;
    std::int64_t capacity = 0;
};

/// A classical 0-1 problem instance: the feasible set the robust solver
/// optimizes over, together with the exact oracle that solves it under a
/// fixed scenario. Factories validate every structural invariant
/// (including nonemptiness of the feasible set), so a live object is
/// always well-formed and immutable.
class ProblemDefinition {
public:
    static ProblemDefinition tabular(TabularStructure structure,
                                     ObjectiveSense sense = ObjectiveSense::minimize);
    static ProblemDefinition st_path(StPathStructure structure);
    static ProblemDefinition spanning_tree(SpanningTreeStructure structure);
    static ProblemDefinition knapsack(KnapsackStructure structure);

    ProblemKind kind() const noexcept { return kind_; }
    ObjectiveSense sense() const noexcept { return sense_; }
    std::size_t dimension() const noexcept { return n_; }

    const TabularStructure& tabular_structure() const;
    const StPathStructure& st_path_structure() const;
    const SpanningTreeStructure& spanning_tree_structure() const;
    const KnapsackStructure& knapsack_structure() const;

    /// Membership test for the feasible set.
    bool is_feasible(const BinarySolution& x) const;

private:
    using Structure =
        std::variant<TabularStructure, StPathStructure, SpanningTreeStructure, KnapsackStructure>;

    ProblemDefinition(ProblemKind kind, ObjectiveSense sense, std::size_t n, Structure structure);

    ProblemKind kind_;
    ObjectiveSense sense_;
    std::size_t n_;
    Structure structure_;
};

struct ClassicalSolution {
    BinarySolution solution;
    std::int64_t value = 0;
};

/// Solves the classical problem under scenario s exactly. Among optimal
/// solutions the lexicographically smallest bit vector is returned, so
/// repeated calls are bit-identical and independent implementations agree.
ClassicalSolution solve_classical(const ProblemDefinition& problem, const Scenario& s);

/// Robustness cost of a feasible x: its regret in the induced scenario,
/// together with the oracle optimum of that scenario (the witness).
struct RobustnessEvaluation {
    std::int64_t cost = 0;
    BinarySolution witness;
};

RobustnessEvaluation robustness_cost(const BinarySolution& x, const IntervalCostVector& intervals,
                                     const ProblemDefinition& problem);

/// Items an enumeration may yield before aborting with a size error.
inline constexpr std::size_t kDefaultEnumerationCap = std::size_t{1} << 22;

/// Visits every feasible solution exactly once, in lexicographic bit
/// order. Aborts with SizeCapError once more than cap solutions are found.
void enumerate_feasible(const ProblemDefinition& problem,
                        const std::function<void(const BinarySolution&)>& yield,
                        std::size_t cap = kDefaultEnumerationCap);

std::vector<BinarySolution> enumerate_feasible(const ProblemDefinition& problem,
                                               std::size_t cap = kDefaultEnumerationCap);

/// Safe-pruning hook for partial assignments: returns false only when no
/// completion of the fixing is feasible; true is always allowed.
bool partial_bound(const ProblemDefinition& problem, std::span<const std::size_t> fixed_zero,
                   std::span<const std::size_t> fixed_one);

}  // namespace minregret
