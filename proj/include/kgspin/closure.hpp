#pragma once

#include <map>
#include <memory>
#include <optional>

#include "kgspin/boxes.hpp"

namespace kgspin {

struct ClosureConfig {
  int n = 5;
  int max_arity = 6;             // K
  long iteration_cap = 500'000;  // processed queue items
  bool move_split = true;
  bool move_reverse = true;
  bool move_attach = true;  // 2-box between cyclically adjacent legs
  bool move_pass = true;    // 2-box applied through one leg
  bool move_tensor = true;
  uint64_t dense_cap = SpinTensor::kDefaultDenseCap;  // dense backend only
};

using SparseVec = std::vector<std::pair<long, Int>>;  // sorted by coord

// Row-reduced exact integer basis over a fixed coordinate order, keeping
// the original (unreduced) rows for expressing members as combinations.
class Subspace {
 public:
  Subspace() = default;
  Subspace(int arity, long num_cols) : arity_(arity), num_cols_(num_cols) {}

  int arity() const { return arity_; }
  long num_cols() const { return num_cols_; }
  int dim() const { return static_cast<int>(rows_.size()); }

  // Inserts when independent; the vector is rescaled to a primitive
  // integer row first. Returns true on insertion.
  bool insert(SparseVec v, const std::string& expr);
  bool contains(SparseVec v) const;

  // Combination of the original inserted rows equal to the target.
  std::optional<std::vector<Rat>> express(const SparseVec& target) const;

  const std::vector<std::string>& expressions() const { return exprs_; }

 private:
  int arity_ = 0;
  long num_cols_ = 0;
  std::vector<SparseVec> rows_;  // reduced rows
  std::map<long, int> pivot_;    // leading col -> row index
  std::vector<SparseVec> original_;
  std::vector<std::string> exprs_;

  bool reduce(SparseVec& v) const;  // false when it vanishes
};

// Shared per-arity pattern order for one n: coordinates of invariant
// tensors are positions in this list.
class PatternIndex {
 public:
  explicit PatternIndex(int n) : n_(n) {}
  long num_cols(int arity);
  long index_of(int arity, const Pattern& p);
  SparseVec coords(const InvariantTensor& t);

 private:
  int n_;
  std::map<int, std::map<Pattern, long>> maps_;
};

struct ClosureResult {
  std::map<int, Subspace> spaces;  // arity -> basis
  bool converged = false;
  long processed = 0;
  // set when the run was asked to watch for the transposition
  bool found_r = false;
  std::vector<Rat> r_combination;  // over spaces[4]'s original rows
};

// Least fixpoint of the planar moves (tensor product, rotation, merge,
// sum_out, split and the derived attach/pass macros) from the seeds
// {1, I, J, A}, on the orbit backend. When watch_for_r is set the run
// stops as soon as the transposition lies in the arity-4 span.
ClosureResult run_closure(const ClosureConfig& cfg, bool watch_for_r = false);

// Dense-backend closure for cross-checking dimension sequences.
ClosureResult run_closure_dense(const ClosureConfig& cfg);

}  // namespace kgspin
