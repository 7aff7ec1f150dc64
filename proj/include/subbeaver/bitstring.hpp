#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

namespace subbeaver {

/// A finite bit string. Stored as ASCII '0'/'1' so that ordering and hashing
/// come for free and the text form is the storage form.
class BitString {
public:
    BitString() = default;

    /// Accepts only '0' and '1'; throws std::invalid_argument otherwise.
    static BitString from_ascii(std::string_view text);

    /// Parses the compact "len:hex" form (bits fill hex digits MSB first,
    /// trailing pad bits must be zero).
    static BitString from_compact(std::string_view text);

    /// ASCII if there is no ':', compact otherwise.
    static BitString from_text(std::string_view text);

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }
    bool operator[](std::size_t i) const noexcept { return bits_[i] == '1'; }

    void push_back(bool bit) { bits_.push_back(bit ? '1' : '0'); }
    void append(const BitString& other) { bits_ += other.bits_; }
    void append(std::string_view ascii) { bits_ += ascii; }
    void resize(std::size_t n) { bits_.resize(n); }

    BitString substr(std::size_t pos, std::size_t len = std::string::npos) const;
    bool starts_with(const BitString& prefix) const noexcept;

    const std::string& ascii() const noexcept { return bits_; }
    std::string compact() const;

    friend bool operator==(const BitString&, const BitString&) = default;

    /// Shortlex: shorter strings first, then lexicographic.
    friend std::strong_ordering operator<=>(const BitString& a, const BitString& b) noexcept {
        if (auto c = a.bits_.size() <=> b.bits_.size(); c != 0) return c;
        return a.bits_.compare(b.bits_) <=> 0;
    }

private:
    explicit BitString(std::string ascii) : bits_(std::move(ascii)) {}

    std::string bits_;
};

}  // namespace subbeaver

template <>
struct std::hash<subbeaver::BitString> {
    std::size_t operator()(const subbeaver::BitString& b) const noexcept {
        return std::hash<std::string>{}(b.ascii());
    }
};
