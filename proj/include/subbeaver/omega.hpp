#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

#include "subbeaver/beaver.hpp"
#include "subbeaver/natural.hpp"

namespace subbeaver {

/// numerator / 2^log2_denominator, kept in lowest terms (odd numerator, or 0/2^0).
class DyadicRational {
public:
    DyadicRational() = default;
    DyadicRational(Natural numerator, std::uint64_t log2_denominator);

    /// 2^-k
    static DyadicRational inverse_power(std::uint64_t k) { return {1, k}; }

    const Natural& numerator() const noexcept { return num_; }
    std::uint64_t log2_denominator() const noexcept { return log2_den_; }

    DyadicRational& operator+=(const DyadicRational& o);
    friend DyadicRational operator+(DyadicRational a, const DyadicRational& b) { return a += b; }

    friend bool operator==(const DyadicRational&, const DyadicRational&) = default;
    friend std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b);

    /// "num/2^k"
    std::string fraction() const;
    /// Decimal rendering to `digits` significant digits (truncated).
    std::string decimal(unsigned digits = 20) const;

private:
    Natural num_ = 0;
    std::uint64_t log2_den_ = 0;
};

struct OmegaResult {
    DyadicRational value;
    Tallies tallies;
};

/// Sum of 2^-|w| over shortlex-sorted evaluations with |w| <= max_len that halted in budget.
OmegaResult omega_from(std::span<const Evaluation> sorted, std::size_t max_len);

/// Lower approximation of the time-limited halting probability.
OmegaResult omega_lower(std::size_t max_len, const Budget& b, const EvalOptions& opts = {});

/// Kraft sum of all members of length <= max_len.
DyadicRational kraft_sum(std::size_t max_len);

}  // namespace subbeaver
