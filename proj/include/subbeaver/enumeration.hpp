#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "subbeaver/bitstring.hpp"

namespace subbeaver {

/// The members of the language of length <= max_len that start with `prefix`.
struct EnumerationShard {
    std::size_t max_len = 0;
    BitString prefix;
};

/// Calls `visit` once for every member of the shard, in generation order
/// (not sorted). Generation follows the grammar and prunes on the prefix.
void for_each_lstring(const EnumerationShard& shard, const std::function<void(const BitString&)>& visit);

/// Members of the shard in shortlex order.
std::vector<BitString> enumerate_shard(const EnumerationShard& shard);

/// All members of length <= max_len in shortlex order.
std::vector<BitString> enumerate_lstrings(std::size_t max_len);

std::uint64_t count_valid(std::size_t max_len);

/// Disjoint shards whose union is the full enumeration. Splits prefixes
/// breadth-first until at least `min_shards` exist (or nothing is left to
/// split); a prefix that is itself a member is a leaf.
std::vector<EnumerationShard> prefix_cover(std::size_t max_len, std::size_t min_shards);

}  // namespace subbeaver
