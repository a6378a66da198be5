#pragma once

#include <map>

#include "kgspin/graph.hpp"
#include "kgspin/pattern.hpp"
#include "kgspin/spin_tensor.hpp"

namespace kgspin {

// Relationship of two pattern pairs; the three arity-2 orbits.
enum class PairRel { Equal, Share, Disjoint };
PairRel pair_rel(const std::array<uint8_t, 2>& x,
                 const std::array<uint8_t, 2>& y);

enum class TwoBox { I, J, A, T };
Rat two_box_value(TwoBox b, PairRel r);

// S_n-invariant function on V(KG(n,2))^arity stored in orbit coordinates:
// a map canonical-pattern -> value, absent = 0. Every stored key is valid
// for n and every stored value nonzero.
class InvariantTensor {
 public:
  InvariantTensor() = default;
  InvariantTensor(int arity, int n);

  int arity() const { return arity_; }
  int n() const { return n_; }
  const std::map<Pattern, Rat>& entries() const { return entries_; }

  Rat value(const Pattern& p) const;
  Rat value_at(const PairTuple& tuple) const;  // canonicalizes
  void set(const Pattern& p, const Rat& v);    // erases on zero
  void add_to(const Pattern& p, const Rat& v);

  bool is_zero() const { return entries_.empty(); }
  bool operator==(const InvariantTensor& o) const = default;

 private:
  int arity_ = 0, n_ = 0;
  std::map<Pattern, Rat> entries_;
};

InvariantTensor tensor_product(const InvariantTensor& f,
                               const InvariantTensor& g);
InvariantTensor apply_permutation(const InvariantTensor& f,
                                  const std::vector<int>& perm);
InvariantTensor permute_adjacent(const InvariantTensor& f, int k);
InvariantTensor rotate_fwd(const InvariantTensor& f);
InvariantTensor reverse(const InvariantTensor& f);
InvariantTensor merge(const InvariantTensor& f, int i);
InvariantTensor sum_out(const InvariantTensor& f, int i);
InvariantTensor split(const InvariantTensor& f, int i);
InvariantTensor hadamard_product(const InvariantTensor& f,
                                 const InvariantTensor& g);
Rat inner_product(const InvariantTensor& f, const InvariantTensor& g);
InvariantTensor add(const InvariantTensor& f, const InvariantTensor& g);
InvariantTensor scale(const InvariantTensor& f, const Rat& c);

// Multiplies f entrywise by B(x_i, x_j) for 1-based slots i != j.
InvariantTensor attach_two_box(const InvariantTensor& f, TwoBox b, int i,
                               int j);

// Conversions. to_dense requires C(n,2)^arity within the dense cap;
// symmetrize projects onto the invariants by group averaging.
SpinTensor to_dense(const InvariantTensor& f, const KneserGraph& g,
                    uint64_t cap = SpinTensor::kDefaultDenseCap);
InvariantTensor symmetrize(const SpinTensor& f, const KneserGraph& g);

}  // namespace kgspin
