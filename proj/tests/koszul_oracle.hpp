#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

// Dense brute-force Koszul homology used as a reference in tests. Knows
// nothing about the library's types.
namespace koszul_oracle {

struct Dims
{
    int chain = 0;
    int homology = 0;
};

// Base generators have the given weights; those flagged in killed_mask act
// by zero on the module. Returns (weight, index) -> dimensions for every
// weight 0..max_weight with a nonzero chain group.
std::map<std::pair<int, int>, Dims> homology(const std::vector<int>& weights, std::uint32_t killed_mask, long p,
                                             int max_weight);

}  // namespace koszul_oracle
