#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "kgspin/errors.hpp"
#include "kgspin/rational.hpp"

namespace kgspin {

// Dense exact-rational function on X^arity for a spin set of size d.
// Entries are indexed by tuples in {0..d-1}^arity, x1 most significant.
// Immutable in spirit: all operations return new values.
class SpinTensor {
 public:
  static constexpr uint64_t kDefaultDenseCap = 100'000'000;

  SpinTensor() = default;
  SpinTensor(int arity, int d, uint64_t cap = kDefaultDenseCap);
  static SpinTensor scalar(const Rat& v, int d);

  int arity() const { return arity_; }
  int d() const { return d_; }
  uint64_t size() const { return values_.size(); }

  const Rat& at(const std::vector<int>& idx) const;
  Rat& at(const std::vector<int>& idx);
  const Rat& at_flat(uint64_t i) const { return values_[i]; }
  Rat& at_flat(uint64_t i) { return values_[i]; }

  uint64_t flatten(const std::vector<int>& idx) const;
  std::vector<int> unflatten(uint64_t flat) const;

  bool operator==(const SpinTensor& o) const = default;
  bool is_zero() const;

  // One line "i1 i2 ... ik<TAB>num/den" per nonzero entry, tuples in
  // lexicographic order.
  void dump(std::ostream& os) const;

 private:
  int arity_ = 0, d_ = 0;
  std::vector<Rat> values_;
};

SpinTensor tensor_product(const SpinTensor& f, const SpinTensor& g);
// Swaps arguments k and k+1 (1-based).
SpinTensor permute_adjacent(const SpinTensor& f, int k);
// result(x_1..x_{a-1}) = f(x_1,..,x_i,x_i,x_{i+1},..).
SpinTensor merge(const SpinTensor& f, int i);
// result = sum_y f(..,x_{i-1},y,x_i,..).
SpinTensor sum_out(const SpinTensor& f, int i);
// result(x_1..x_{a+2}) = delta(x_i,x_{i+1}) f(x_1,..,x_{i-1},x_{i+2},..).
SpinTensor split(const SpinTensor& f, int i);
SpinTensor hadamard_product(const SpinTensor& f, const SpinTensor& g);
Rat inner_product(const SpinTensor& f, const SpinTensor& g);

// Conveniences derived from the primitives.
SpinTensor apply_permutation(const SpinTensor& f,
                             const std::vector<int>& perm);  // slot j <- perm[j]
SpinTensor rotate_fwd(const SpinTensor& f);   // result(x1..xk) = f(x2..xk,x1)
SpinTensor reverse(const SpinTensor& f);      // result(x1..xk) = f(xk..x1)
SpinTensor add(const SpinTensor& f, const SpinTensor& g);
SpinTensor scale(const SpinTensor& f, const Rat& c);

}  // namespace kgspin
