#include "kgspin/pattern.hpp"

#include <algorithm>
#include <functional>

namespace kgspin {

int Pattern::support() const {
  int s = 0;
  for (const auto& p : pairs) s = std::max({s, int(p[0]), int(p[1])});
  return s;
}

std::string Pattern::str() const {
  std::string out = "(";
  for (size_t i = 0; i < pairs.size(); ++i) {
    if (i) out += ",";
    out += "{" + std::to_string(pairs[i][0]) + "," +
           std::to_string(pairs[i][1]) + "}";
  }
  return out + ")";
}

namespace {

// One relabeling branch: map old->new label, extended greedily.
struct Relabel {
  std::array<uint8_t, 33> map{};  // 0 = unassigned
  uint8_t next = 1;
  PairTuple out;
};

}  // namespace

Pattern canonicalize(const PairTuple& t) {
  for (const auto& p : t)
    if (p[0] == p[1] || p[0] == 0)
      throw invalid_parameter("malformed pair in tuple");

  std::vector<Relabel> branches(1);
  branches[0].out.reserve(t.size());
  for (const auto& pr : t) {
    std::vector<Relabel> next;
    next.reserve(branches.size() * 2);
    for (const auto& br : branches) {
      uint8_t ma = br.map[pr[0]], mb = br.map[pr[1]];
      auto emit = [&](uint8_t first, uint8_t second) {
        Relabel nb = br;
        uint8_t x = nb.map[first] ? nb.map[first] : (nb.map[first] = nb.next++);
        uint8_t y =
            nb.map[second] ? nb.map[second] : (nb.map[second] = nb.next++);
        nb.out.push_back({std::min(x, y), std::max(x, y)});
        next.push_back(std::move(nb));
      };
      if (ma && mb) {
        emit(pr[0], pr[1]);
      } else if (ma || mb) {
        emit(pr[0], pr[1]);  // the unmapped point gets the fresh label
      } else {
        emit(pr[0], pr[1]);  // branch on which point is labelled first
        emit(pr[1], pr[0]);
      }
    }
    // Keep only branches whose emitted prefix is minimal so far.
    PairTuple best;
    bool have = false;
    for (const auto& nb : next)
      if (!have || nb.out < best) {
        best = nb.out;
        have = true;
      }
    branches.clear();
    for (auto& nb : next)
      if (nb.out == best) branches.push_back(std::move(nb));
  }
  return Pattern{branches.front().out};
}

std::vector<Pattern> enumerate_patterns(int k, int n, size_t cap) {
  if (k < 0) throw invalid_parameter("enumerate_patterns: k must be >= 0");
  std::vector<Pattern> out;
  PairTuple cur;
  // Grow tuples whose labels follow first-use order, filter by canonicity.
  std::function<void(int)> rec = [&](int used) {
    if (static_cast<int>(cur.size()) == k) {
      Pattern p{cur};
      if (canonicalize(cur) == p) {
        out.push_back(std::move(p));
        if (out.size() > cap)
          throw capacity_error("pattern enumeration exceeded cap",
                               "arity " + std::to_string(k));
      }
      return;
    }
    // Next pair {a,b}: at most two fresh labels, fresh labels in order.
    for (int a = 1; a <= used + 1 && a <= n; ++a) {
      int bmax = (a == used + 1) ? used + 2 : used + 1;
      for (int b = a + 1; b <= bmax && b <= n; ++b) {
        cur.push_back({uint8_t(a), uint8_t(b)});
        rec(std::max({used, a, b}));
        cur.pop_back();
      }
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

long aut_size(const Pattern& p) {
  const int s = p.support();
  // Backtracking over images of labels 1..s preserving each slot's pair.
  std::vector<int> img(s + 1, 0);
  std::vector<char> taken(s + 1, 0);
  long count = 0;
  std::function<bool(const PairTuple&)> consistent = [&](const PairTuple& t) {
    for (const auto& pr : t) {
      int x = img[pr[0]], y = img[pr[1]];
      if (x && x != pr[0] && x != pr[1]) return false;
      if (y && y != pr[0] && y != pr[1]) return false;
      if (x && y && x == y) return false;
    }
    return true;
  };
  std::function<void(int)> rec = [&](int v) {
    if (v > s) {
      ++count;
      return;
    }
    for (int w = 1; w <= s; ++w) {
      if (taken[w]) continue;
      img[v] = w;
      taken[w] = 1;
      if (consistent(p.pairs)) rec(v + 1);
      img[v] = 0;
      taken[w] = 0;
    }
  };
  rec(1);
  return count;
}

Int orbit_size(const Pattern& p, int n) {
  const int s = p.support();
  if (s > n)
    throw invalid_parameter("pattern needs " + std::to_string(s) +
                            " points, invalid for n=" + std::to_string(n));
  Int falling = 1;
  for (int i = 0; i < s; ++i) falling *= n - i;
  return falling / aut_size(p);
}

}  // namespace kgspin
