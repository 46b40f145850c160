#pragma once

#include <compare>
#include <cstddef>
#include <string>

namespace tfcdr {

/// Non-negative multiple of 1/2, stored as twice its value.
///
/// Time levels of the two-level scheme live on the half-integer lattice
/// 0, 1/2, 1, 3/2, ...; so do the indices of the combined weight sequences.
class HalfIndex {
public:
    constexpr HalfIndex() = default;

    static constexpr HalfIndex from_twice(std::size_t twice) { return HalfIndex(twice); }
    /// The integer level i.
    static constexpr HalfIndex whole(std::size_t i) { return HalfIndex(2 * i); }
    /// The level i + 1/2.
    static constexpr HalfIndex half(std::size_t i) { return HalfIndex(2 * i + 1); }

    constexpr std::size_t twice() const { return twice_; }
    constexpr double value() const { return 0.5 * static_cast<double>(twice_); }
    constexpr bool is_whole() const { return twice_ % 2 == 0; }
    /// floor(value)
    constexpr std::size_t floor() const { return twice_ / 2; }

    constexpr HalfIndex next() const { return HalfIndex(twice_ + 1); }

    constexpr auto operator<=>(const HalfIndex&) const = default;

    std::string str() const {
        return is_whole() ? std::to_string(floor()) : std::to_string(floor()) + "+1/2";
    }

private:
    constexpr explicit HalfIndex(std::size_t twice) : twice_(twice) {}
    std::size_t twice_ = 0;
};

} // namespace tfcdr
