#pragma once

#include <string>
#include <vector>

#include "fba/bspace.hpp"
#include "fba/moebius.hpp"

namespace fba {

/// Partitioned moments of one word for every member of the lattice, sharing
/// nested sub-evaluations: the value over a block's span depends only on the
/// span and the partition restricted to it, so spans are memoized across
/// partitions.
class PhiTable {
 public:
  PhiTable(const BProbabilitySpace& space, const Word& w, const ChiMap& chi);

  const IncLattice& lattice() const { return *lattice_; }
  const BMatrix& at(int idx) const { return values_[idx]; }

 private:
  const IncLattice* lattice_;
  std::vector<BMatrix> values_;
};

/// Free-Boolean cumulant: Moebius-weighted sum of partitioned moments over
/// the down-set of pi.  pi must belong to the lattice of chi.
BMatrix cumulant(const BProbabilitySpace& space, const Word& w, const ChiMap& chi,
                 const Partition& pi);

/// Same value computed by recursive interval-block peeling with the
/// product-formula Moebius weights; an independent second implementation.
BMatrix cumulant_multiplicative(const BProbabilitySpace& space, const Word& w,
                                const ChiMap& chi, const Partition& pi);

/// Sum of cumulants over the whole lattice; equals the plain expectation.
BMatrix moments_from_cumulants(const BProbabilitySpace& space, const Word& w,
                               const ChiMap& chi);

/// The weighted-moment reconstruction for labeled words: with eps the kernel
/// of the pair labels, sum over sigma of (sum of mu(sigma,pi) over
/// sigma <= pi <= eps) times the partitioned moment.
BMatrix star_formula_rhs(const BProbabilitySpace& space, const Word& w, const ChiMap& chi,
                         const IndexWord& omega);

/// One random variable of a two-faced family: which pair it belongs to,
/// which face, and its handle in the backing space.
struct LabeledElement {
  int pair;
  Face face;
  int handle;
};

struct LabeledFamily {
  std::vector<LabeledElement> elements;
};

struct ResidualReport {
  double max_residual = 0;
  long long words_checked = 0;
  std::string worst_word;

  void feed(double r, const std::string& desc) {
    ++words_checked;
    if (r > max_residual) {
      max_residual = r;
      worst_word = desc;
    }
  }
};

/// Cumulants at the one-block partition over all mixed words (non-constant
/// pair labels) up to max_n letters; for an independent family every value
/// must vanish.
ResidualReport test_combinatorial_independence(const BProbabilitySpace& space,
                                               const LabeledFamily& family, int max_n);

/// Cumulants at every lattice element whose blocks are not all
/// label-constant, over words up to max_n letters.
ResidualReport vanishing_extension_check(const BProbabilitySpace& space,
                                         const LabeledFamily& family, int max_n);

/// Residual of the weighted-moment reconstruction against the plain
/// expectation over all words up to max_n letters.
ResidualReport star_formula_check(const BProbabilitySpace& space, const LabeledFamily& family,
                                  int max_n);

}  // namespace fba
