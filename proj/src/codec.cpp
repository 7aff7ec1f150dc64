#include "subbeaver/codec.hpp"

#include <cmath>
#include <stdexcept>

#include "subbeaver/errors.hpp"

namespace subbeaver {

namespace {

std::size_t bit_length(const Natural& n) {
    return n == 0 ? 0 : boost::multiprecision::msb(n) + 1;
}

void append_binary(BitString& out, const Natural& n, std::size_t width) {
    for (std::size_t i = width; i-- > 0;) out.push_back(boost::multiprecision::bit_test(n, i));
}

class Parser {
public:
    explicit Parser(const BitString& bits) : bits_(bits) {}

    std::size_t pos() const noexcept { return pos_; }

    LString lstring() {
        std::size_t start = pos_;
        if (read_bit("language tag") == false) {
            Program body = plain_body();
            return LString{bits_.substr(start, pos_ - start), PlainForm{std::move(body)}};
        }
        auto k = delta("argument count");
        // Every argument is at least 2 bits and the head at least 2.
        if (k > (remaining() / 2)) throw ParseError(pos_, "argument count exceeds remaining bits");
        std::size_t head_start = pos_;
        if (read_bit("head tag")) throw ParseError(head_start, "application head must be plain");
        ApplicationForm app;
        app.head = plain_body();
        app.head_bits = bits_.substr(head_start, pos_ - head_start);
        auto count = k.convert_to<std::size_t>();
        app.args.reserve(count);
        for (std::size_t i = 0; i < count; ++i) app.args.push_back(lstring());
        return LString{bits_.substr(start, pos_ - start), std::move(app)};
    }

private:
    std::size_t remaining() const noexcept { return bits_.size() - pos_; }

    bool read_bit(const char* what) {
        if (pos_ >= bits_.size()) throw ParseError(pos_, std::string("truncated ") + what);
        return bits_[pos_++];
    }

    Natural delta(const char* what) {
        if (pos_ >= bits_.size()) throw ParseError(pos_, std::string("truncated ") + what);
        auto d = delta_decode(bits_, pos_);
        pos_ += d.consumed;
        return std::move(d.value);
    }

    // Body of a Plain program after its '0' tag.
    Program plain_body() {
        Natural count = delta("instruction count") - 1;
        if (count > remaining() / 3) throw ParseError(pos_, "instruction count exceeds remaining bits");
        auto n = count.convert_to<std::size_t>();
        Program body;
        body.reserve(n);
        for (std::size_t i = 0; i < n; ++i) body.push_back(instruction());
        return body;
    }

    Instruction instruction() {
        if (remaining() < 3) throw ParseError(pos_, "truncated opcode");
        unsigned code = 0;
        for (int i = 0; i < 3; ++i) code = (code << 1) | (bits_[pos_++] ? 1u : 0u);
        Instruction ins{static_cast<Opcode>(code), 0};
        if (ins.op == Opcode::Lit) {
            ins.operand = delta("literal") - 1;
        } else if (has_operand(ins.op)) {
            ins.operand = delta("jump distance");
        }
        return ins;
    }

    const BitString& bits_;
    std::size_t pos_ = 0;
};

void describe_into(std::string& out, const LString& s, int depth) {
    std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
    if (s.is_plain()) {
        const auto& body = s.plain().body;
        out += indent + "Plain " + s.bits.ascii() + " (" + std::to_string(s.bits.size()) +
               " bits, " + std::to_string(body.size()) + " instructions) " + to_string(body) + "\n";
        return;
    }
    const auto& app = s.application();
    out += indent + "Application " + s.bits.ascii() + " (" + std::to_string(s.bits.size()) +
           " bits, k=" + std::to_string(app.args.size()) + ")\n";
    out += indent + "  head: Plain " + app.head_bits.ascii() + " " + to_string(app.head) + "\n";
    for (std::size_t i = 0; i < app.args.size(); ++i) {
        out += indent + "  arg " + std::to_string(i + 1) + " (rank " + rank(app.args[i].bits).str() +
               "):\n";
        describe_into(out, app.args[i], depth + 2);
    }
}

}  // namespace

BitString delta_encode(const Natural& n) {
    if (n <= 0) throw std::domain_error("delta code is defined for n >= 1");
    std::size_t len = bit_length(n);
    std::size_t len_len = bit_length(Natural(len));
    BitString out;
    for (std::size_t i = 1; i < len_len; ++i) out.push_back(false);
    append_binary(out, Natural(len), len_len);
    append_binary(out, n, len - 1);
    return out;
}

std::size_t delta_length(const Natural& n) {
    if (n <= 0) throw std::domain_error("delta code is defined for n >= 1");
    std::size_t len = bit_length(n);
    std::size_t len_len = bit_length(Natural(len));
    return (len - 1) + 2 * (len_len - 1) + 1;
}

DeltaDecoded delta_decode(const BitString& bits, std::size_t offset) {
    std::size_t pos = offset;
    std::size_t zeros = 0;
    while (pos < bits.size() && !bits[pos]) {
        ++zeros;
        ++pos;
    }
    if (pos >= bits.size()) throw ParseError(pos, "truncated delta code");
    if (zeros >= 64) throw ParseError(offset, "delta length prefix too long");
    if (bits.size() - pos < zeros + 1) throw ParseError(bits.size(), "truncated delta length");
    std::uint64_t len = 0;
    for (std::size_t i = 0; i <= zeros; ++i) len = (len << 1) | (bits[pos++] ? 1u : 0u);
    if (len - 1 > bits.size() - pos) throw ParseError(bits.size(), "truncated delta payload");
    Natural value = 1;
    for (std::uint64_t i = 1; i < len; ++i) {
        value <<= 1;
        if (bits[pos++]) value |= 1;
    }
    return {std::move(value), pos - offset};
}

Natural rank(const BitString& w) {
    Natural v = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
        v <<= 1;
        if (w[i]) v |= 1;
    }
    return v - 1;
}

BitString unrank(const Natural& k) {
    Natural v = k + 1;
    BitString out;
    append_binary(out, v, bit_length(v) - 1);
    return out;
}

LString parse(const BitString& bits) {
    Parser parser(bits);
    LString s = parser.lstring();
    if (parser.pos() != bits.size()) throw ParseError(parser.pos(), "trailing bits after sentence");
    return s;
}

bool is_member(const BitString& bits) noexcept {
    try {
        parse(bits);
        return true;
    } catch (const ParseError&) {
        return false;
    }
}

BitString encode_instructions(const Program& body) {
    BitString out;
    for (const auto& ins : body) {
        append_binary(out, Natural(static_cast<unsigned>(ins.op)), 3);
        if (ins.op == Opcode::Lit) {
            out.append(delta_encode(ins.operand + 1));
        } else if (has_operand(ins.op)) {
            out.append(delta_encode(ins.operand));
        }
    }
    return out;
}

BitString encode_plain(const Program& body) {
    BitString out;
    out.push_back(false);
    out.append(delta_encode(Natural(body.size()) + 1));
    out.append(encode_instructions(body));
    return out;
}

LString make_plain(const Program& body) {
    return LString{encode_plain(body), PlainForm{body}};
}

BitString compose(const LString& head, std::span<const LString> args) {
    if (!head.is_plain()) throw std::domain_error("compose: head must be a plain program");
    if (args.empty()) throw std::domain_error("compose: at least one argument is required");
    BitString out;
    out.push_back(true);
    out.append(delta_encode(Natural(args.size())));
    out.append(head.bits);
    for (const auto& a : args) out.append(a.bits);
    return out;
}

LString lit_program(const Natural& n) {
    return make_plain(Program{Instruction{Opcode::Lit, n}});
}

double lit_program_bound(const Natural& n) {
    double x = (n + 1).convert_to<double>();
    return LanguageConstants::kLiteralOverhead + std::log2(x) +
           (1.0 + LanguageConstants::kEpsilon) * std::log2(std::log2(x + 1.0) + 1.0);
}

std::string describe(const LString& s) {
    std::string out;
    describe_into(out, s, 0);
    return out;
}

}  // namespace subbeaver
