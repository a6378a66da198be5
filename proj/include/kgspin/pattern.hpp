#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "kgspin/errors.hpp"
#include "kgspin/rational.hpp"

namespace kgspin {

// A k-tuple of unordered 2-subsets, entries over 1..n. Pairs stored sorted.
using PairTuple = std::vector<std::array<uint8_t, 2>>;

// Canonical representative of an S_n-orbit of a PairTuple: labels are
// exactly {1..s} in first-use order, minimised over the per-pair label
// orderings. A pattern is valid for a given n iff support() <= n.
struct Pattern {
  PairTuple pairs;

  int arity() const { return static_cast<int>(pairs.size()); }
  int support() const;

  bool operator==(const Pattern&) const = default;
  std::strong_ordering operator<=>(const Pattern& o) const {
    if (auto c = pairs.size() <=> o.pairs.size(); c != 0) return c;
    for (size_t i = 0; i < pairs.size(); ++i) {
      if (auto c = pairs[i][0] <=> o.pairs[i][0]; c != 0) return c;
      if (auto c = pairs[i][1] <=> o.pairs[i][1]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

  // Text form "({a,b},{c,d},...)".
  std::string str() const;
};

// Lexicographically least relabeling of t (see Pattern). Throws on a
// malformed pair (repeated point).
Pattern canonicalize(const PairTuple& t);

// All canonical patterns of arity k with support <= n, in increasing
// pattern order. Throws capacity_error past `cap` patterns.
std::vector<Pattern> enumerate_patterns(int k, int n,
                                        size_t cap = 50'000'000);

// Number of label permutations of {1..s} fixing the tuple slotwise.
long aut_size(const Pattern& p);

// n(n-1)...(n-s+1) / |aut(p)|; requires p valid for n.
Int orbit_size(const Pattern& p, int n);

}  // namespace kgspin
