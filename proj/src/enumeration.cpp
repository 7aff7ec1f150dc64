#include "subbeaver/enumeration.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "subbeaver/codec.hpp"

namespace subbeaver {

namespace {

int bit_width_u64(std::uint64_t n) { return 64 - __builtin_clzll(n); }

std::size_t delta_len_u64(std::uint64_t n) {
    std::size_t len = bit_width_u64(n);
    std::size_t len_len = bit_width_u64(len);
    return (len - 1) + 2 * (len_len - 1) + 1;
}

void append_delta_u64(std::string& out, std::uint64_t n) {
    int len = bit_width_u64(n);
    int len_len = bit_width_u64(static_cast<std::uint64_t>(len));
    out.append(static_cast<std::size_t>(len_len - 1), '0');
    for (int i = len_len - 1; i >= 0; --i) out.push_back(((len >> i) & 1) ? '1' : '0');
    for (int i = len - 2; i >= 0; --i) out.push_back(((n >> i) & 1) ? '1' : '0');
}

// Recursive descent over the grammar in continuation-passing style. `reserve_`
// counts bits that pending continuations will need at minimum, so branches
// that cannot fit are cut early.
class Generator {
public:
    using Cont = std::function<void()>;

    Generator(const EnumerationShard& shard, const std::function<void(const BitString&)>& visit)
        : max_len_(shard.max_len), prefix_(shard.prefix.ascii()), visit_(visit) {}

    void run() {
        lstring([this] {
            if (buf_.size() >= prefix_.size()) visit_(BitString::from_ascii(buf_));
        });
    }

private:
    std::size_t room() const {
        std::size_t used = buf_.size() + reserve_;
        return used >= max_len_ ? 0 : max_len_ - used;
    }

    // Appends `bits`; false (and nothing appended) if they would break the
    // prefix or overflow the length bound.
    bool push(std::string_view bits) {
        if (bits.size() > room()) return false;
        std::size_t start = buf_.size();
        for (std::size_t i = 0; i < bits.size(); ++i) {
            std::size_t at = start + i;
            if (at < prefix_.size() && prefix_[at] != bits[i]) return false;
        }
        buf_.append(bits);
        return true;
    }

    void pop_to(std::size_t size) { buf_.resize(size); }

    void with_delta(std::uint64_t n, const Cont& cont) {
        scratch_.clear();
        append_delta_u64(scratch_, n);
        std::size_t mark = buf_.size();
        if (push(scratch_)) {
            cont();
            pop_to(mark);
        }
    }

    void lstring(const Cont& cont) {
        plain(cont);
        application(cont);
    }

    void plain(const Cont& cont) {
        std::size_t mark = buf_.size();
        if (!push("0")) return;
        for (std::uint64_t n = 0; delta_len_u64(n + 1) + 3 * n <= room(); ++n) {
            with_delta(n + 1, [&] { instructions(n, cont); });
        }
        pop_to(mark);
    }

    void instructions(std::uint64_t n, const Cont& cont) {
        if (n == 0) {
            cont();
            return;
        }
        reserve_ += 3 * (n - 1);
        instruction([&] {
            reserve_ -= 3 * (n - 1);
            instructions(n - 1, cont);
            reserve_ += 3 * (n - 1);
        });
        reserve_ -= 3 * (n - 1);
    }

    void instruction(const Cont& cont) {
        static constexpr const char* kOpcodes[] = {"000", "001", "010", "011",
                                                   "100", "101", "110", "111"};
        for (int op = 0; op < 8; ++op) {
            std::size_t mark = buf_.size();
            if (!push(kOpcodes[op])) continue;
            bool operand = op == 0 || op == 6 || op == 7;
            if (!operand) {
                cont();
            } else {
                // LIT m is coded as delta(m + 1); jumps as delta(d), d >= 1.
                for (std::uint64_t v = 1; delta_len_u64(v) <= room(); ++v) {
                    with_delta(v, cont);
                }
            }
            pop_to(mark);
        }
    }

    void application(const Cont& cont) {
        std::size_t mark = buf_.size();
        if (!push("1")) return;
        // k arguments of >= 2 bits plus a head of >= 2 bits.
        for (std::uint64_t k = 1; delta_len_u64(k) + 2 + 2 * k <= room(); ++k) {
            with_delta(k, [&] {
                reserve_ += 2 * k;
                plain([&] {
                    reserve_ -= 2 * k;
                    args(k, cont);
                    reserve_ += 2 * k;
                });
                reserve_ -= 2 * k;
            });
        }
        pop_to(mark);
    }

    void args(std::uint64_t k, const Cont& cont) {
        if (k == 0) {
            cont();
            return;
        }
        reserve_ += 2 * (k - 1);
        lstring([&] {
            reserve_ -= 2 * (k - 1);
            args(k - 1, cont);
            reserve_ += 2 * (k - 1);
        });
        reserve_ -= 2 * (k - 1);
    }

    std::size_t max_len_;
    std::string prefix_;
    const std::function<void(const BitString&)>& visit_;
    std::string buf_;
    std::string scratch_;
    std::size_t reserve_ = 0;
};

}  // namespace

void for_each_lstring(const EnumerationShard& shard,
                      const std::function<void(const BitString&)>& visit) {
    Generator(shard, visit).run();
}

std::vector<BitString> enumerate_shard(const EnumerationShard& shard) {
    std::vector<BitString> out;
    for_each_lstring(shard, [&](const BitString& w) { out.push_back(w); });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BitString> enumerate_lstrings(std::size_t max_len) {
    return enumerate_shard({max_len, {}});
}

std::uint64_t count_valid(std::size_t max_len) {
    std::uint64_t n = 0;
    for_each_lstring({max_len, {}}, [&](const BitString&) { ++n; });
    return n;
}

std::vector<EnumerationShard> prefix_cover(std::size_t max_len, std::size_t min_shards) {
    std::deque<BitString> open{BitString{}};
    std::vector<BitString> leaves;
    while (!open.empty() && open.size() + leaves.size() < min_shards) {
        BitString p = std::move(open.front());
        open.pop_front();
        if (p.size() >= max_len || is_member(p)) {
            leaves.push_back(std::move(p));
            continue;
        }
        for (char bit : {'0', '1'}) {
            BitString child = p;
            child.append(std::string_view(&bit, 1));
            open.push_back(std::move(child));
        }
    }
    leaves.insert(leaves.end(), open.begin(), open.end());
    std::sort(leaves.begin(), leaves.end());
    std::vector<EnumerationShard> shards;
    shards.reserve(leaves.size());
    for (auto& p : leaves) shards.push_back({max_len, std::move(p)});
    return shards;
}

}  // namespace subbeaver
