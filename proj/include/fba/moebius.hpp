#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "fba/inc.hpp"
#include "fba/partition.hpp"

namespace fba {

/// Indexed view of the interval-noncrossing family for one chi: canonical
/// element order, order relation, and Moebius values computed by recursive
/// inversion of the zeta function.  Immutable after construction except for
/// internal caches, which are guarded for concurrent readers.
class IncLattice {
 public:
  explicit IncLattice(const ChiMap& chi, int size_cap = kDefaultSizeCap);

  const ChiMap& chi() const { return chi_; }
  int size() const { return static_cast<int>(elems_.size()); }
  const std::vector<Partition>& elems() const { return elems_; }
  const Partition& elem(int i) const { return elems_[i]; }
  int index_of(const Partition& p) const;  // throws if p is not a member
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  bool leq(int i, int j) const;
  /// Moebius value mu(elem(i), elem(j)); 0 when incomparable.
  std::int64_t mu(int i, int j) const;
  /// Elements k with i <= k <= j.
  std::vector<int> interval(int i, int j) const;

 private:
  ChiMap chi_;
  std::vector<Partition> elems_;
  std::map<std::string, int> index_;
  std::vector<std::vector<bool>> leq_;   // leq_[i][j] = elem(i) <= elem(j)
  std::vector<int> topo_;                // indices sorted by block count descending
  int bottom_ = -1, top_ = -1;

  mutable std::map<int, std::vector<std::int64_t>> mu_rows_;
  mutable std::mutex mu_mutex_;
  const std::vector<std::int64_t>& mu_row(int i) const;
};

/// Shared per-chi lattice cache.
const IncLattice& lattice_for(const ChiMap& chi, int size_cap = kDefaultSizeCap);

/// An integer-valued function on comparable pairs of the lattice.
struct IncidenceFunction {
  ChiMap chi;
  std::map<std::pair<std::string, std::string>, std::int64_t> table;

  std::int64_t at(const Partition& sigma, const Partition& pi) const;
};

IncidenceFunction delta_function(const ChiMap& chi);
IncidenceFunction zeta_function(const ChiMap& chi);
/// Moebius function by recursive inversion: mu(s,s)=1 and
/// mu(s,p) = -sum of mu(s,r) over s <= r < p.
IncidenceFunction moebius_oracle(const ChiMap& chi);

/// Incidence convolution (f*g)(s,p) = sum over s <= r <= p of f(s,r)g(r,p).
IncidenceFunction convolve(const IncidenceFunction& f, const IncidenceFunction& g);

/// Moebius value from sigma to the one-block partition in the noncrossing
/// lattice of size n.
std::int64_t moebius_nc(const Partition& sigma, int n);

/// Product-formula evaluation of the Moebius function: over each segment and
/// each block of pi, the noncrossing Moebius value of sigma restricted to the
/// block-segment intersection.  Must agree with the inversion oracle.
std::int64_t moebius_product(const Partition& sigma, const Partition& pi, const ChiMap& chi);

}  // namespace fba
