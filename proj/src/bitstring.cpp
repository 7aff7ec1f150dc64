#include "subbeaver/bitstring.hpp"

#include <charconv>
#include <stdexcept>

namespace subbeaver {

namespace {

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return -1;
}

}  // namespace

BitString BitString::from_ascii(std::string_view text) {
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bit string may only contain '0' and '1': " +
                                        std::string(text));
        }
    }
    return BitString(std::string(text));
}

BitString BitString::from_compact(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw std::invalid_argument("compact bit string needs 'len:hex': " + std::string(text));
    }
    std::size_t len = 0;
    auto len_text = text.substr(0, colon);
    auto [ptr, ec] = std::from_chars(len_text.data(), len_text.data() + len_text.size(), len);
    if (ec != std::errc{} || ptr != len_text.data() + len_text.size() || len_text.empty()) {
        throw std::invalid_argument("bad length in compact bit string: " + std::string(text));
    }
    auto hex = text.substr(colon + 1);
    if (hex.size() != (len + 3) / 4) {
        throw std::invalid_argument("hex digit count does not match length: " + std::string(text));
    }
    std::string bits;
    bits.reserve(hex.size() * 4);
    for (char c : hex) {
        int v = hex_value(c);
        if (v < 0) throw std::invalid_argument("bad hex digit in: " + std::string(text));
        for (int i = 3; i >= 0; --i) bits.push_back(((v >> i) & 1) ? '1' : '0');
    }
    if (bits.find('1', len) != std::string::npos) {
        throw std::invalid_argument("nonzero padding bits in: " + std::string(text));
    }
    bits.resize(len);
    return BitString(std::move(bits));
}

BitString BitString::from_text(std::string_view text) {
    return text.find(':') == std::string_view::npos ? from_ascii(text) : from_compact(text);
}

BitString BitString::substr(std::size_t pos, std::size_t len) const {
    return BitString(bits_.substr(pos, len));
}

bool BitString::starts_with(const BitString& prefix) const noexcept {
    return bits_.starts_with(prefix.bits_);
}

std::string BitString::compact() const {
    static constexpr char kDigits[] = "0123456789ABCDEF";
    std::string out = std::to_string(bits_.size());
    out.push_back(':');
    for (std::size_t i = 0; i < bits_.size(); i += 4) {
        int v = 0;
        for (std::size_t j = 0; j < 4; ++j) {
            v <<= 1;
            if (i + j < bits_.size() && bits_[i + j] == '1') v |= 1;
        }
        out.push_back(kDigits[v]);
    }
    return out;
}

}  // namespace subbeaver
