#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "minregret/problem.hpp"
#include "minregret/types.hpp"

namespace minregret {

inline constexpr int kInstanceFormatVersion = 1;

struct ParsedInstance {
    ProblemDefinition problem;
    IntervalCostVector intervals;
};

/// Parses and fully validates a JSON instance (see docs/formats.md).
/// Violations raise ValidationError with a field-path diagnostic; an empty
/// feasible set raises InfeasibleError.
ParsedInstance parse_instance_text(std::string_view json_text);
ParsedInstance parse_instance(const std::filesystem::path& path);

/// Canonical JSON serialization: sorted keys, two-space indent, trailing
/// newline. parse(instance_to_json(p)) reproduces p exactly.
std::string instance_to_json(const ParsedInstance& instance);

struct IntervalScheme {
    std::int64_t base_max = 10;
    std::int64_t width_max = 10;
};

struct TabularGenParams {
    std::size_t n = 6;
    std::size_t count = 8;
    ObjectiveSense sense = ObjectiveSense::minimize;
};

struct StPathGenParams {
    int rows = 3;
    int cols = 3;
};

struct SpanningTreeGenParams {
    int vertices = 5;
    int extra_edges = 2;
};

struct KnapsackGenParams {
    std::size_t n = 8;
    std::int64_t weight_max = 20;
};

// Deterministic instance generators: identical parameters and seed yield
// byte-identical JSON. Interval endpoints are drawn per variable as
// lower ~ U[0, base_max], width ~ U[0, width_max]; draw order is fixed and
// documented in docs/determinism.md.
std::string generate_instance(const TabularGenParams& params, const IntervalScheme& scheme,
                              std::uint64_t seed);
std::string generate_instance(const StPathGenParams& params, const IntervalScheme& scheme,
                              std::uint64_t seed);
std::string generate_instance(const SpanningTreeGenParams& params, const IntervalScheme& scheme,
                              std::uint64_t seed);
std::string generate_instance(const KnapsackGenParams& params, const IntervalScheme& scheme,
                              std::uint64_t seed);

}  // namespace minregret
