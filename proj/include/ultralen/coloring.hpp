#pragma once

#include <vector>

namespace ul::color {

// Vertices are 1..n on the cycle C_n (the wrap edge {1, n} included); colors
// are 0..s-1. Blocks partition 1..n' where n' is n rounded up to a multiple of
// s; vertices above n are isolated padding.
using Blocks = std::vector<std::vector<int>>;

struct ColoringStats {
  long long nodes = 0;
};

// Strong s-coloring: adjacent vertices differ, every block sees every color
// once. Throws SearchExhausted when the node budget runs out.
std::vector<int> strong_color_cycle(int n, const Blocks& blocks, int s, long long budget = 10000000,
                                    ColoringStats* stats = nullptr);
// Index 0 of the returned coloring is unused; color[v] for v = 1..n'.
bool verify_strong_coloring(int n, const Blocks& blocks, int s, const std::vector<int>& color);

// Every partition of 1..n into blocks of size s, in canonical order.
std::vector<Blocks> all_partitions(int n, int s);

struct PermutationSplit {
  int s = 3;
  std::vector<int> sigma;                 // sigma[k-1] = sigma(k)
  std::vector<std::vector<int>> vectors;  // v_1..v_s, entries a_{i,j}
};
// Splits (sigma(1), ..., sigma(n)) into s vectors with no two cyclically
// adjacent entries in the same vector and a_{i,j} = sigma(k) => |sj - k| <= s-1.
PermutationSplit partition_permutation(const std::vector<int>& sigma, int s = 3);
// Independent check of the three guarantees; returns an empty string when all hold.
const char* verify_split(const PermutationSplit& p);

}  // namespace ul::color
