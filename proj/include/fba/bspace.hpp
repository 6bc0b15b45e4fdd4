#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fba/bmatrix.hpp"
#include "fba/partition.hpp"

namespace fba {

/// One slot of a moment query: a random-variable handle with an optional
/// coefficient multiplying it from the left.
struct WordEntry {
  int handle;
  std::optional<BMatrix> coeff;
};

/// A word c_1 a_1 c_2 a_2 ... c_n a_n t with coefficients interleaved and an
/// optional trailing coefficient.  Missing coefficients mean the identity.
struct Word {
  std::vector<WordEntry> entries;
  std::optional<BMatrix> trailing;

  static Word of(const std::vector<int>& handles);
  int size() const { return static_cast<int>(entries.size()); }
};

/// A noncommutative probability space with matrix-algebra coefficients:
/// an expectation functional over handle words, bilinear over coefficients.
/// Implementations must be pure and safe for concurrent use.
class BProbabilitySpace {
 public:
  virtual ~BProbabilitySpace() = default;
  virtual int bdim() const = 0;
  virtual BMatrix expect(const Word& w) const = 0;
};

/// Expectation of the plain product.
BMatrix phi_n(const BProbabilitySpace& space, const Word& w);

/// Indices of the interval blocks of p.
std::vector<int> interval_blocks(const Partition& p);

struct PeelState {
  Word word;
  Partition part;
};

/// Collapse one interval block: evaluate the block's sub-word and attach the
/// value as a left coefficient of the next entry (or as the trailing
/// coefficient when the block ends the word).
PeelState peel_block(const BProbabilitySpace& space, const PeelState& st, int block_index);

/// The partitioned moment functional: recursively collapse interval blocks
/// through the expectation.  p must be noncrossing.
BMatrix phi_partition(const BProbabilitySpace& space, const Word& w, const Partition& p);

/// Concrete space: handles are D x D complex matrices with D = d * env, the
/// coefficient algebra embedded as b (x) I, expectation the normalized
/// partial trace over the environment factor.
class MatrixModelSpace : public BProbabilitySpace {
 public:
  MatrixModelSpace(int d, int env) : d_(d), env_(env) {}

  /// Handle from a full D x D matrix (row-major, D = d*env).
  int add_handle(std::vector<Complex> entries);
  int handle_count() const { return static_cast<int>(handles_.size()); }

  int bdim() const override { return d_; }
  BMatrix expect(const Word& w) const override;

 private:
  int d_, env_;
  std::vector<std::vector<Complex>> handles_;
};

/// Table-backed space over precomputed moments of coefficient-free words.
/// Coefficients are handled when they are scalar multiples of the identity
/// (always the case for 1-dimensional coefficients); anything else cannot be
/// recovered from a plain moment table and raises an error.
class MomentTableSpace : public BProbabilitySpace {
 public:
  explicit MomentTableSpace(int d) : d_(d) {}

  void set(const std::vector<int>& handles, const BMatrix& value);
  bool has(const std::vector<int>& handles) const;

  int bdim() const override { return d_; }
  BMatrix expect(const Word& w) const override;

  std::string to_json() const;
  static MomentTableSpace from_json(const std::string& text);

 private:
  int d_;
  std::map<std::vector<int>, BMatrix> table_;
};

}  // namespace fba
