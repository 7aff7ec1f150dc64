#include "subbeaver/omega.hpp"

#include "subbeaver/enumeration.hpp"

namespace subbeaver {

DyadicRational::DyadicRational(Natural numerator, std::uint64_t log2_denominator)
    : num_(std::move(numerator)), log2_den_(log2_denominator) {
    if (num_ == 0) {
        log2_den_ = 0;
        return;
    }
    auto shift = std::min<std::uint64_t>(boost::multiprecision::lsb(num_), log2_den_);
    num_ >>= shift;
    log2_den_ -= shift;
}

DyadicRational& DyadicRational::operator+=(const DyadicRational& o) {
    std::uint64_t k = std::max(log2_den_, o.log2_den_);
    Natural sum = (num_ << (k - log2_den_)) + (o.num_ << (k - o.log2_den_));
    *this = DyadicRational(std::move(sum), k);
    return *this;
}

std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b) {
    std::uint64_t k = std::max(a.log2_den_, b.log2_den_);
    Natural x = a.num_ << (k - a.log2_den_);
    Natural y = b.num_ << (k - b.log2_den_);
    if (x < y) return std::strong_ordering::less;
    if (y < x) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string DyadicRational::fraction() const {
    return num_.str() + "/2^" + std::to_string(log2_den_);
}

std::string DyadicRational::decimal(unsigned digits) const {
    Natural whole = num_ >> log2_den_;
    Natural rem = num_ - (whole << log2_den_);
    std::string out = whole.str();
    unsigned significant = whole == 0 ? 0 : static_cast<unsigned>(out.size());
    if (rem == 0 || significant >= digits) return out;
    out += '.';
    // Long division by 2^k; leading zeros after the point are not significant.
    while (rem != 0 && significant < digits) {
        rem *= 10;
        Natural d = rem >> log2_den_;
        rem -= d << log2_den_;
        out += static_cast<char>('0' + d.convert_to<int>());
        if (significant > 0 || d != 0) ++significant;
    }
    return out;
}

OmegaResult omega_from(std::span<const Evaluation> sorted, std::size_t max_len) {
    OmegaResult r;
    for (const auto& e : sorted) {
        if (e.w.size() > max_len) break;
        ++r.tallies.total;
        if (e.value > 0) {
            ++r.tallies.halted;
            r.value += DyadicRational::inverse_power(e.w.size());
        } else {
            ++r.tallies.timed_out;
        }
    }
    return r;
}

OmegaResult omega_lower(std::size_t max_len, const Budget& b, const EvalOptions& opts) {
    auto evals = evaluate_all(max_len, b, opts);
    return omega_from(evals, max_len);
}

DyadicRational kraft_sum(std::size_t max_len) {
    // Count per length first; adding 2^-len one string at a time is needlessly slow.
    std::vector<std::uint64_t> per_len(max_len + 1, 0);
    for_each_lstring({max_len, {}}, [&](const BitString& w) { ++per_len[w.size()]; });
    DyadicRational sum;
    for (std::size_t len = 0; len <= max_len; ++len) {
        if (per_len[len]) sum += DyadicRational(per_len[len], len);
    }
    return sum;
}

}  // namespace subbeaver
