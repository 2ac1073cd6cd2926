#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "minregret/errors.hpp"

namespace minregret {

/// Total cost budget: instance validation keeps every scenario cost sum,
/// and therefore every intermediate value, within |x| <= 2^62 so that
/// 64-bit arithmetic stays exact with room for one extra addition.
inline constexpr std::int64_t kCostBudget = std::int64_t{1} << 62;

enum class ObjectiveSense { minimize, maximize };

std::string_view to_string(ObjectiveSense sense);
ObjectiveSense sense_from_string(std::string_view text);  // "min" or "max"

/// An n-bit candidate solution. Equality and ordering are bitwise
/// lexicographic, which is the canonical order used for tie-breaking
/// and cut-novelty checks everywhere in the library.
struct BinarySolution {
    std::vector<std::uint8_t> bits;

    BinarySolution() = default;
    explicit BinarySolution(std::vector<std::uint8_t> b);

    static BinarySolution zeros(std::size_t n);
    static BinarySolution from_string(std::string_view text);  // e.g. "0101"

    std::size_t size() const noexcept { return bits.size(); }
    bool test(std::size_t i) const { return bits[i] != 0; }
    void set(std::size_t i, bool value) { bits[i] = value ? 1 : 0; }

    std::string to_string() const;

    friend bool operator==(const BinarySolution&, const BinarySolution&) = default;
    friend auto operator<=>(const BinarySolution&, const BinarySolution&) = default;
};

/// One concrete cost vector drawn from the instance's intervals.
struct Scenario {
    std::vector<std::int64_t> costs;

    std::size_t size() const noexcept { return costs.size(); }
};

/// Per-variable cost intervals [lower_i, upper_i] with nonnegative
/// integer endpoints. Construction validates all invariants, so a live
/// object is always well-formed.
class IntervalCostVector {
public:
    IntervalCostVector(std::vector<std::int64_t> lower, std::vector<std::int64_t> upper);

    std::size_t size() const noexcept { return lower_.size(); }
    std::int64_t lower(std::size_t i) const { return lower_[i]; }
    std::int64_t upper(std::size_t i) const { return upper_[i]; }
    std::int64_t width(std::size_t i) const { return upper_[i] - lower_[i]; }
    const std::vector<std::int64_t>& lower() const noexcept { return lower_; }
    const std::vector<std::int64_t>& upper() const noexcept { return upper_; }
    std::int64_t upper_sum() const noexcept { return upper_sum_; }

    /// True when every interval is a single point (lower == upper).
    bool degenerate() const noexcept;

    bool contains(const Scenario& s) const;

private:
    std::vector<std::int64_t> lower_;
    std::vector<std::int64_t> upper_;
    std::int64_t upper_sum_ = 0;
};

}  // namespace minregret

template <>
struct std::hash<minregret::BinarySolution> {
    std::size_t operator()(const minregret::BinarySolution& x) const noexcept {
        // FNV-1a over the bit bytes.
        std::uint64_t h = 14695981039346656037ULL;
        for (std::uint8_t b : x.bits) {
            h ^= b;
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }
};
