#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "subbeaver/bitstring.hpp"
#include "subbeaver/natural.hpp"

namespace subbeaver {

/// One cached submachine evaluation.
struct RunRecord {
    BitString w;
    std::string budget_id;
    std::string vm_id;
    bool halted = false;
    Natural output = 0;  // the sub_run value (0 on timeout)
    std::uint64_t steps = 0;

    friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

/// `<len>:<hex>,<budget_id>,<vm_id>,<H|T>,<output>,<steps>` without newline.
std::string format_record(const RunRecord& r);

/// Inverse of format_record; throws std::invalid_argument.
RunRecord parse_record(std::string_view line);

/// In-memory set of run records keyed by (w, budget_id, vm_id), with a
/// line-oriented file form. Not internally synchronized: many concurrent
/// readers are fine, writers need exclusive access.
class Store {
public:
    struct Key {
        BitString w;
        std::string budget_id;
        std::string vm_id;

        friend auto operator<=>(const Key&, const Key&) = default;
        friend bool operator==(const Key&, const Key&) = default;
    };

    /// Reads a store file. A final line without a newline is treated as a
    /// torn write: it is dropped and a warning goes to `warn` (if non-null).
    /// Any other bad line throws LoadError; conflicting lines throw IntegrityError.
    static Store load(const std::filesystem::path& file, std::ostream* warn = nullptr);

    /// Set union of several store files; the result does not depend on their order.
    /// All records must share one vm_id (std::invalid_argument otherwise).
    static Store merge(std::span<const std::filesystem::path> shard_files, std::ostream* warn = nullptr);

    /// Idempotent; a different record under an existing key throws IntegrityError.
    /// Returns true if the record was new.
    bool put(const RunRecord& record);

    std::optional<RunRecord> get(const BitString& w, std::string_view budget_id,
                                 std::string_view vm_id) const;

    std::size_t size() const noexcept { return records_.size(); }
    std::vector<RunRecord> records() const;

    /// Rewrites `file` with every record in key order (compaction).
    void save(const std::filesystem::path& file) const;

    friend bool operator==(const Store& a, const Store& b) { return a.records_ == b.records_; }

private:
    struct Value {
        bool halted = false;
        Natural output = 0;
        std::uint64_t steps = 0;

        friend bool operator==(const Value&, const Value&) = default;
    };

    std::map<Key, Value> records_;
};

/// Appends records to `file` (creating it), one line each.
void append_records(const std::filesystem::path& file, std::span<const RunRecord> records);

/// RFC 3986 percent-encoding; unreserved characters pass through.
std::string percent_encode(std::string_view text);

/// `<dir>/<vm_id>/<percent-encoded budget_id>.runs`
std::filesystem::path cache_file(const std::filesystem::path& dir, std::string_view budget_id,
                                 std::string_view vm_id);

}  // namespace subbeaver
