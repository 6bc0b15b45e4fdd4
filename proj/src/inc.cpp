#include "fba/inc.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fba {

IncContext::IncContext(const ChiMap& c) : chi(c) {
  int n = chi.n();
  for (int k = 2; k <= n - 1; ++k)
    if (chi.is_boolean(k)) boundary_points.push_back(k);
  int lo = 1;
  for (int l : boundary_points) {
    segments.emplace_back(lo, l);
    lo = l;
  }
  segments.emplace_back(lo, n);
}

bool is_inc(const Partition& p, const ChiMap& chi) {
  if (p.n() != chi.n()) throw std::invalid_argument("is_inc: mismatched sizes");
  if (!p.is_noncrossing()) return false;
  for (const auto& b : p.blocks()) {
    int lo = b.front(), hi = b.back();
    for (int w = lo + 1; w < hi; ++w)
      if (chi.is_boolean(w) && p.block_of(w) != p.block_of(lo)) return false;
  }
  return true;
}

std::int64_t inc_count(const ChiMap& chi) {
  IncContext ctx(chi);
  std::int64_t total = 1;
  for (auto [lo, hi] : ctx.segments) total *= catalan(hi - lo + 1);
  return total;
}

Partition compose(const std::vector<Partition>& parts, const IncContext& ctx) {
  if (parts.size() != ctx.segments.size())
    throw std::invalid_argument("compose: wrong number of segment partitions");
  int n = ctx.chi.n();
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (size_t si = 0; si < parts.size(); ++si) {
    auto [lo, hi] = ctx.segments[si];
    const Partition& part = parts[si];
    if (part.n() != hi - lo + 1)
      throw std::invalid_argument("compose: segment partition has wrong size");
    if (!part.is_noncrossing())
      throw std::invalid_argument("compose: segment partition is crossing");
    for (const auto& b : part.blocks())
      for (size_t i = 1; i < b.size(); ++i) {
        int a = lo + b[0] - 1, c = lo + b[i] - 1;
        parent[find(a)] = find(c);
      }
  }
  std::vector<std::vector<int>> groups(n + 1);
  for (int v = 1; v <= n; ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<int>> bs;
  for (auto& g : groups)
    if (!g.empty()) bs.push_back(std::move(g));
  return Partition(n, std::move(bs));
}

std::vector<Partition> decompose(const Partition& p, const IncContext& ctx) {
  if (p.n() != ctx.chi.n()) throw std::invalid_argument("decompose: mismatched sizes");
  if (!is_inc(p, ctx.chi)) throw std::invalid_argument("decompose: partition not interval-noncrossing");
  std::vector<Partition> out;
  out.reserve(ctx.segments.size());
  for (auto [lo, hi] : ctx.segments) {
    std::vector<int> subset(hi - lo + 1);
    std::iota(subset.begin(), subset.end(), lo);
    out.push_back(p.restrict_to(subset));
  }
  return out;
}

std::vector<Partition> enumerate_inc(const ChiMap& chi, int size_cap) {
  int n = chi.n();
  if (n > size_cap) throw std::invalid_argument("enumerate_inc: n exceeds size cap");
  IncContext ctx(chi);
  std::vector<std::vector<Partition>> per_segment;
  per_segment.reserve(ctx.segments.size());
  for (auto [lo, hi] : ctx.segments)
    per_segment.push_back(enumerate_noncrossing(hi - lo + 1));
  std::vector<Partition> out;
  std::vector<size_t> idx(per_segment.size(), 0);
  while (true) {
    std::vector<Partition> parts;
    parts.reserve(idx.size());
    for (size_t i = 0; i < idx.size(); ++i) parts.push_back(per_segment[i][idx[i]]);
    out.push_back(compose(parts, ctx));
    size_t k = idx.size();
    while (k > 0 && ++idx[k - 1] == per_segment[k - 1].size()) idx[--k] = 0;
    if (k == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Partition noncrossing_closure(const Partition& p) {
  Partition cur = p;
  for (;;) {
    bool merged = false;
    const auto& bs = cur.blocks();
    for (size_t i = 0; i < bs.size() && !merged; ++i)
      for (size_t j = i + 1; j < bs.size() && !merged; ++j) {
        // Blocks cross iff their elements interleave a<b<c<d with a,c in one
        // and b,d in the other.
        const auto& x = bs[i];
        const auto& y = bs[j];
        bool cross = false;
        for (int a : x)
          for (int c : x) {
            if (a >= c) continue;
            for (int b : y) {
              if (!(a < b && b < c)) continue;
              for (int d : y)
                if (d > c) cross = true;
            }
          }
        for (int a : y)
          for (int c : y) {
            if (a >= c) continue;
            for (int b : x) {
              if (!(a < b && b < c)) continue;
              for (int d : x)
                if (d > c) cross = true;
            }
          }
        if (cross) {
          std::vector<std::vector<int>> nb;
          std::vector<int> unioned = x;
          unioned.insert(unioned.end(), y.begin(), y.end());
          nb.push_back(unioned);
          for (size_t k = 0; k < bs.size(); ++k)
            if (k != i && k != j) nb.push_back(bs[k]);
          cur = Partition(cur.n(), std::move(nb));
          merged = true;
        }
      }
    if (!merged) return cur;
  }
}

namespace {

Partition require_inc(const Partition& p, const ChiMap& chi, const char* who) {
  if (!is_inc(p, chi))
    throw std::invalid_argument(std::string(who) + ": input not interval-noncrossing");
  return p;
}

}  // namespace

Partition inc_meet(const Partition& a, const Partition& b, const ChiMap& chi) {
  require_inc(a, chi, "inc_meet");
  require_inc(b, chi, "inc_meet");
  // Blockwise intersection stays interval-noncrossing and is the meet.
  return a.meet(b);
}

Partition inc_join(const Partition& a, const Partition& b, const ChiMap& chi) {
  require_inc(a, chi, "inc_join");
  require_inc(b, chi, "inc_join");
  IncContext ctx(chi);
  auto da = decompose(a, ctx);
  auto db = decompose(b, ctx);
  std::vector<Partition> joined;
  joined.reserve(da.size());
  for (size_t i = 0; i < da.size(); ++i)
    joined.push_back(noncrossing_closure(da[i].join(db[i])));
  return compose(joined, ctx);
}

std::vector<Partition> interval_down(const Partition& p, const ChiMap& chi, int size_cap) {
  require_inc(p, chi, "interval_down");
  std::vector<Partition> out;
  for (const auto& q : enumerate_inc(chi, size_cap))
    if (q.leq(p)) out.push_back(q);
  return out;
}

}  // namespace fba
