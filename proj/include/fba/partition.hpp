#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fba {

/// A set partition of {1..n}, kept in canonical form: every block sorted
/// ascending, blocks ordered by their minimum element.  Values are immutable
/// after construction; all operations below are pure.
class Partition {
 public:
  Partition(int n, std::vector<std::vector<int>> blocks);

  /// The one-block partition 1_n.
  static Partition full(int n);
  /// The all-singletons partition 0_n.
  static Partition singletons(int n);
  /// Parse the slash/comma text form, e.g. "1,3,4,7/2/5,6/8,9/10".
  static Partition parse(const std::string& text);

  int n() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }

  /// Index of the block containing element v (1-based element).
  int block_of(int v) const;

  /// Restricted growth string: rgs()[k] is the block label of element k+1,
  /// blocks numbered by first appearance.  Canonical and order-defining.
  std::vector<int> rgs() const;

  /// Text form "1,3/2" matching parse().
  std::string encode() const;

  bool operator==(const Partition& o) const;
  bool operator!=(const Partition& o) const { return !(*this == o); }
  /// Lexicographic order on the restricted growth string.
  bool operator<(const Partition& o) const;

  bool is_noncrossing() const;
  /// True iff the block is a contiguous range of integers.
  bool is_interval_block(int block_index) const;
  /// True iff another block has elements strictly below and above all of
  /// this block's elements.
  bool is_inner_block(int block_index) const;

  /// Reverse refinement order: every block of *this contained in a block
  /// of coarser.
  bool leq(const Partition& coarser) const;

  /// Restriction to a subset of the ground set, relabeled to {1..|subset|}.
  /// subset must be sorted, nonempty and within {1..n}.
  Partition restrict_to(const std::vector<int>& subset) const;

  /// Common refinement (blockwise intersections).
  Partition meet(const Partition& other) const;
  /// Finest common coarsening in the full partition lattice.
  Partition join(const Partition& other) const;

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_index_;  // element (1-based) -> block index

  void canonicalize_and_check();
};

/// Position type map chi : {1..n} -> {F, B}.
enum class Face : char { F = 'F', B = 'B' };

class ChiMap {
 public:
  explicit ChiMap(std::string s);
  static ChiMap all_free(int n) { return ChiMap(std::string(n, 'F')); }

  int n() const { return static_cast<int>(s_.size()); }
  Face at(int k) const;                 // 1-based
  bool is_boolean(int k) const { return at(k) == Face::B; }
  const std::string& str() const { return s_; }

  ChiMap restrict_to(const std::vector<int>& subset) const;

  bool operator==(const ChiMap& o) const { return s_ == o.s_; }

 private:
  std::string s_;
};

/// A word of indices, the combinatorial shadow of operator labels.
class IndexWord {
 public:
  explicit IndexWord(std::vector<int> values);
  int n() const { return static_cast<int>(values_.size()); }
  int at(int k) const;  // 1-based
  const std::vector<int>& values() const { return values_; }

  /// Partition grouping equal letters.
  Partition kernel() const;

 private:
  std::vector<int> values_;
};

/// All set partitions of {1..n}, in restricted-growth-string order.
std::vector<Partition> enumerate_partitions(int n);

/// All noncrossing partitions of {1..n}, sorted canonically.  Built by the
/// recursive first-block decomposition, not by filtering.
std::vector<Partition> enumerate_noncrossing(int n);

/// Catalan number C_n = |NC(n)|, memoized.
std::int64_t catalan(int n);

}  // namespace fba
