#pragma once

// Reference implementation used only by tests. It shares no code with the
// library: its own delta decoder, grammar check, rank formula and interpreter,
// written in the most direct way possible so it can serve as an oracle.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Nat = boost::multiprecision::cpp_int;

struct Ins {
    int op = 0;  // 0 LIT, 1 INC, 2 ADD, 3 MUL, 4 DUP, 5 SWP, 6 JZ, 7 JB
    Nat arg = 0;
};

struct Sentence {
    std::vector<Ins> body;          // the head's body for applications
    std::vector<std::string> args;  // argument bits, empty for plain programs
};

// Elias delta by definition: gamma(bit length) then the bits after the leading one.
inline std::string delta(std::uint64_t n) {
    std::string bin;
    for (std::uint64_t v = n; v; v >>= 1) bin.insert(bin.begin(), char('0' + (v & 1)));
    std::string len_bin;
    for (std::uint64_t v = bin.size(); v; v >>= 1) len_bin.insert(len_bin.begin(), char('0' + (v & 1)));
    return std::string(len_bin.size() - 1, '0') + len_bin + bin.substr(1);
}

// Position in shortlex order: 2^|w| - 1 strings are shorter, plus w's value.
inline Nat rank(const std::string& w) {
    Nat value = 0;
    for (char c : w) value = value * 2 + (c - '0');
    Nat shorter = (Nat(1) << w.size()) - 1;
    return shorter + value;
}

class Reader {
public:
    explicit Reader(const std::string& s) : s_(s) {}

    bool done() const { return i_ == s_.size(); }
    std::size_t pos() const { return i_; }

    std::optional<int> bit() {
        if (i_ >= s_.size()) return std::nullopt;
        return s_[i_++] - '0';
    }

    std::optional<Nat> delta() {
        std::size_t zeros = 0;
        while (i_ < s_.size() && s_[i_] == '0') ++zeros, ++i_;
        if (i_ >= s_.size() || zeros > 20) return std::nullopt;
        std::uint64_t len = 0;
        for (std::size_t k = 0; k <= zeros; ++k) {
            if (i_ >= s_.size()) return std::nullopt;
            len = len * 2 + (s_[i_++] - '0');
        }
        Nat v = 1;
        for (std::uint64_t k = 1; k < len; ++k) {
            if (i_ >= s_.size()) return std::nullopt;
            v = v * 2 + (s_[i_++] - '0');
        }
        return v;
    }

    bool plain_body(std::vector<Ins>& body) {
        auto count = delta();
        if (!count) return false;
        for (Nat c = 1; c < *count; ++c) {
            Ins ins;
            for (int k = 0; k < 3; ++k) {
                auto b = bit();
                if (!b) return false;
                ins.op = ins.op * 2 + *b;
            }
            if (ins.op == 0 || ins.op == 6 || ins.op == 7) {
                auto v = delta();
                if (!v) return false;
                ins.arg = ins.op == 0 ? *v - 1 : *v;
            }
            body.push_back(ins);
        }
        return true;
    }

    // One sentence; fills `out` when `out` is non-null (top level only).
    bool sentence(Sentence* out) {
        auto tag = bit();
        if (!tag) return false;
        std::vector<Ins> body;
        if (*tag == 0) {
            if (!plain_body(body)) return false;
            if (out) out->body = std::move(body);
            return true;
        }
        auto k = delta();
        if (!k) return false;
        auto head_tag = bit();
        if (!head_tag || *head_tag != 0) return false;
        if (!plain_body(body)) return false;
        std::vector<std::string> args;
        for (Nat a = 0; a < *k; ++a) {
            std::size_t start = i_;
            if (!sentence(nullptr)) return false;
            args.push_back(s_.substr(start, i_ - start));
        }
        if (out) {
            out->body = std::move(body);
            out->args = std::move(args);
        }
        return true;
    }

private:
    const std::string& s_;
    std::size_t i_ = 0;
};

inline std::optional<Sentence> parse(const std::string& s) {
    Reader r(s);
    Sentence out;
    if (!r.sentence(&out) || !r.done()) return std::nullopt;
    return out;
}

struct Outcome {
    bool halted = false;
    Nat output = 0;
    std::uint64_t steps = 0;
};

inline Outcome run(const Sentence& s, std::uint64_t fuel) {
    std::vector<Nat> st;
    for (std::size_t i = s.args.size(); i-- > 0;) st.push_back(rank(s.args[i]));
    auto pop = [&] {
        if (st.empty()) return Nat(0);
        Nat x = st.back();
        st.pop_back();
        return x;
    };
    long long pc = 0;
    const long long n = static_cast<long long>(s.body.size());
    std::uint64_t steps = 0;
    while (pc < n) {
        if (steps == fuel) return {false, 0, steps};
        const Ins& ins = s.body[pc];
        ++steps;
        long long next = pc + 1;
        if (ins.op == 0) {
            st.push_back(ins.arg);
        } else if (ins.op == 1) {
            st.push_back(pop() + 1);
        } else if (ins.op == 2) {
            Nat x = pop(), y = pop();
            st.push_back(x + y);
        } else if (ins.op == 3) {
            Nat x = pop(), y = pop();
            st.push_back(x * y);
        } else if (ins.op == 4) {
            Nat x = pop();
            st.push_back(x);
            st.push_back(x);
        } else if (ins.op == 5) {
            Nat x = pop(), y = pop();
            st.push_back(x);
            st.push_back(y);
        } else if (ins.op == 6) {
            if (pop() == 0) next = ins.arg >= n ? n : pc + 1 + ins.arg.convert_to<long long>();
        } else {
            next = ins.arg >= pc ? 0 : pc - ins.arg.convert_to<long long>();
        }
        pc = next;
    }
    return {true, st.empty() ? Nat(0) : st.back(), steps};
}

// Value of the time-bounded submachine under a constant budget.
inline Nat sub_run(const std::string& w, std::uint64_t fuel) {
    auto s = parse(w);
    Outcome o = run(*s, fuel);
    return o.halted ? o.output + 1 : Nat(0);
}

// Every member of length <= max_len, found by testing all bit strings; shortlex order.
inline std::vector<std::string> brute_force_members(std::size_t max_len) {
    std::vector<std::string> out;
    for (std::size_t len = 0; len <= max_len; ++len) {
        for (std::uint64_t v = 0; v < (std::uint64_t(1) << len); ++v) {
            std::string s(len, '0');
            for (std::size_t k = 0; k < len; ++k) s[k] = ((v >> (len - 1 - k)) & 1) ? '1' : '0';
            if (parse(s)) out.push_back(s);
        }
    }
    return out;
}

}  // namespace oracle
