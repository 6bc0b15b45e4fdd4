#pragma once

#include <cstdint>
#include <vector>

#include "fba/partition.hpp"

namespace fba {

/// Segment structure induced by the interior Boolean positions of chi.
/// Boundary points are chi^{-1}(B) within [2, n-1]; consecutive segments
/// share exactly their common endpoint.
struct IncContext {
  ChiMap chi;
  std::vector<int> boundary_points;            // l_1 < ... < l_{m-1}
  std::vector<std::pair<int, int>> segments;   // closed intervals [lo, hi]

  explicit IncContext(const ChiMap& c);
};

inline constexpr int kDefaultSizeCap = 12;

/// Membership test for interval-noncrossing partitions: noncrossing, and
/// every interior Boolean position trapped between two equivalent elements
/// belongs to their block.
bool is_inc(const Partition& p, const ChiMap& chi);

/// Number of interval-noncrossing partitions, as the product of Catalan
/// numbers over the segments.
std::int64_t inc_count(const ChiMap& chi);

/// All interval-noncrossing partitions, canonically sorted.  Built by gluing
/// per-segment noncrossing partitions; throws std::invalid_argument when
/// n exceeds the size cap.
std::vector<Partition> enumerate_inc(const ChiMap& chi, int size_cap = kDefaultSizeCap);

/// Per-segment restrictions of p, each relabeled to {1..segment size}.
/// A shared endpoint appears in both adjacent restrictions.
std::vector<Partition> decompose(const Partition& p, const IncContext& ctx);

/// Inverse of decompose: glue per-segment noncrossing partitions, merging
/// blocks through shared endpoints.
Partition compose(const std::vector<Partition>& parts, const IncContext& ctx);

/// Lattice meet/join within the interval-noncrossing family.
Partition inc_meet(const Partition& a, const Partition& b, const ChiMap& chi);
Partition inc_join(const Partition& a, const Partition& b, const ChiMap& chi);

/// Noncrossing closure: repeatedly merge crossing blocks.  The join of the
/// noncrossing lattice applied to an arbitrary partition.
Partition noncrossing_closure(const Partition& p);

/// Every element below p in the interval-noncrossing order.
std::vector<Partition> interval_down(const Partition& p, const ChiMap& chi,
                                     int size_cap = kDefaultSizeCap);

}  // namespace fba
