#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace liecoh {

/// k-subsets of {0..n-1} as sorted index tuples in lexicographic order.
std::vector<std::vector<int>> subsets_lex(int n, int k);

std::uint32_t subset_mask(const std::vector<int>& subset);

/// Rank lookup keyed by bitmask, for the output of subsets_lex.
std::unordered_map<std::uint32_t, int> subset_ranks(const std::vector<std::vector<int>>& subsets);

}  // namespace liecoh
