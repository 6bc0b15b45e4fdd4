#include "doctest.h"

#include <algorithm>
#include <set>

#include "fba/partition.hpp"

using namespace fba;

namespace {

// Independent quadruple-scan crossing test, straight from the definition.
bool oracle_noncrossing(const Partition& p) {
  int n = p.n();
  for (int v1 = 1; v1 <= n; ++v1)
    for (int w1 = v1 + 1; w1 <= n; ++w1)
      for (int v2 = w1 + 1; v2 <= n; ++v2)
        for (int w2 = v2 + 1; w2 <= n; ++w2)
          if (p.block_of(v1) == p.block_of(v2) && p.block_of(w1) == p.block_of(w2) &&
              p.block_of(v1) != p.block_of(w1))
            return false;
  return true;
}

// Independent set-partition generator: grow element by element.
void oracle_partitions_rec(int v, int n, std::vector<std::vector<int>>& acc,
                           std::vector<Partition>& out) {
  if (v > n) {
    out.emplace_back(n, acc);
    return;
  }
  size_t count = acc.size();  // recursion grows and restores acc
  for (size_t i = 0; i < count; ++i) {
    acc[i].push_back(v);
    oracle_partitions_rec(v + 1, n, acc, out);
    acc[i].pop_back();
  }
  acc.push_back({v});
  oracle_partitions_rec(v + 1, n, acc, out);
  acc.pop_back();
}

std::vector<Partition> oracle_partitions(int n) {
  std::vector<std::vector<int>> acc;
  std::vector<Partition> out;
  oracle_partitions_rec(1, n, acc, out);
  return out;
}

}  // namespace

TEST_CASE("partition construction and canonical form") {
  Partition p(7, {{5, 7}, {2}, {6}, {1, 4}, {3}});
  CHECK(p.encode() == "1,4/2/3/5,7/6");
  CHECK(p.block_count() == 5);
  CHECK(Partition::parse("5,7/2/6/1,4/3") == p);
  CHECK(Partition::parse(p.encode()) == p);

  CHECK_THROWS_AS(Partition(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(Partition(3, {{1, 2}}), std::invalid_argument);        // missing 3
  CHECK_THROWS_AS(Partition(3, {{1, 2}, {2, 3}}), std::invalid_argument);  // duplicate
  CHECK_THROWS_AS(Partition(3, {{1, 2, 3, 4}}), std::invalid_argument);  // out of range

  // n = 1 has a unique partition.
  CHECK(Partition::full(1) == Partition::singletons(1));
}

TEST_CASE("noncrossing predicate") {
  CHECK(Partition(7, {{1, 4}, {2}, {3}, {5, 7}, {6}}).is_noncrossing());
  CHECK_FALSE(Partition(4, {{1, 3}, {2, 4}}).is_noncrossing());
  CHECK(Partition::singletons(6).is_noncrossing());

  for (const auto& p : enumerate_partitions(6))
    CHECK(p.is_noncrossing() == oracle_noncrossing(p));
}

TEST_CASE("interval and inner blocks") {
  Partition p(8, {{1, 5, 8}, {2, 3, 4}, {6, 7}});
  CHECK(p.is_interval_block(p.block_of(2)));
  CHECK_FALSE(p.is_interval_block(p.block_of(1)));
  CHECK(Partition(3, {{1, 3}, {2}}).is_interval_block(1));  // singleton block

  CHECK(p.is_inner_block(p.block_of(6)));
  CHECK(p.is_inner_block(p.block_of(2)));
  CHECK_FALSE(p.is_inner_block(p.block_of(1)));
  CHECK_FALSE(Partition::full(5).is_inner_block(0));

  CHECK_THROWS_AS(p.is_interval_block(4), std::out_of_range);
  CHECK_THROWS_AS(p.is_inner_block(-1), std::out_of_range);
}

TEST_CASE("kernel of an index word") {
  CHECK(IndexWord({1, 2, 1, 2}).kernel() == Partition(4, {{1, 3}, {2, 4}}));
  CHECK(IndexWord({7, 7, 7, 7, 7}).kernel() == Partition::full(5));
  CHECK(IndexWord({3, 1, 4, 2}).kernel() == Partition::singletons(4));

  // Invariance under injective relabeling of the alphabet.
  std::vector<int> w{2, 5, 2, 9, 5, 2};
  auto relabeled = w;
  for (auto& x : relabeled) x = 100 - 3 * x;
  CHECK(IndexWord(w).kernel() == IndexWord(relabeled).kernel());
}

TEST_CASE("reverse refinement order is a partial order") {
  auto all5 = enumerate_partitions(5);
  const Partition zero = Partition::singletons(5);
  const Partition one = Partition::full(5);
  for (const auto& p : all5) {
    CHECK(zero.leq(p));
    CHECK(p.leq(one));
    CHECK(p.leq(p));
  }
  CHECK_FALSE(Partition(3, {{1, 2}, {3}}).leq(Partition(3, {{1, 3}, {2}})));
  for (const auto& a : all5)
    for (const auto& b : all5) {
      if (a.leq(b) && b.leq(a)) CHECK(a == b);
      if (!a.leq(b)) continue;
      for (const auto& c : all5)
        if (b.leq(c)) CHECK(a.leq(c));
    }
  CHECK_THROWS_AS(Partition::full(3).leq(Partition::full(4)), std::invalid_argument);
}

TEST_CASE("restriction relabels to an initial segment") {
  Partition p(10, {{1, 3, 4, 7}, {2}, {5, 6}, {8, 9}, {10}});
  CHECK(p.restrict_to({1, 2, 3}) == Partition(3, {{1, 3}, {2}}));
  CHECK(p.restrict_to({3, 4, 5, 6, 7}) == Partition(5, {{1, 2, 5}, {3, 4}}));
  std::vector<int> everything(10);
  for (int i = 0; i < 10; ++i) everything[i] = i + 1;
  CHECK(p.restrict_to(everything) == p);
  CHECK_THROWS_AS(p.restrict_to({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(p.restrict_to({}), std::invalid_argument);
}

TEST_CASE("restriction composes") {
  // Restricting twice equals restricting once to the preimage.
  for (int n = 2; n <= 6; ++n) {
    auto parts = enumerate_partitions(n);
    for (const auto& p : parts) {
      for (int smask = 1; smask < (1 << n); ++smask) {
        std::vector<int> s;
        for (int v = 1; v <= n; ++v)
          if (smask & (1 << (v - 1))) s.push_back(v);
        Partition q = p.restrict_to(s);
        int m = static_cast<int>(s.size());
        for (int tmask = 1; tmask < (1 << m); ++tmask) {
          std::vector<int> t, pre;
          for (int v = 1; v <= m; ++v)
            if (tmask & (1 << (v - 1))) {
              t.push_back(v);
              pre.push_back(s[v - 1]);
            }
          CHECK(q.restrict_to(t) == p.restrict_to(pre));
        }
      }
      if (n > 4) break;  // full double-subset sweep only for small n
    }
  }
}

TEST_CASE("set partition enumeration matches independent oracle") {
  const int bell[] = {0, 1, 2, 5, 15, 52, 203, 877};
  for (int n = 1; n <= 7; ++n) {
    auto mine = enumerate_partitions(n);
    CHECK(static_cast<int>(mine.size()) == bell[n]);
    auto ref = oracle_partitions(n);
    std::set<std::string> a, b;
    for (const auto& p : mine) a.insert(p.encode());
    for (const auto& p : ref) b.insert(p.encode());
    CHECK(a == b);
  }
}

TEST_CASE("noncrossing enumeration matches filtered oracle") {
  for (int n = 1; n <= 8; ++n) {
    auto nc = enumerate_noncrossing(n);
    CHECK(static_cast<std::int64_t>(nc.size()) == catalan(n));
    if (n > 6) continue;
    std::set<std::string> filtered;
    for (const auto& p : oracle_partitions(n))
      if (oracle_noncrossing(p)) filtered.insert(p.encode());
    std::set<std::string> mine;
    for (const auto& p : nc) mine.insert(p.encode());
    CHECK(mine == filtered);
    CHECK(std::is_sorted(nc.begin(), nc.end()));
  }
}

TEST_CASE("meet and join in the full partition lattice") {
  auto all4 = enumerate_partitions(4);
  for (const auto& a : all4)
    for (const auto& b : all4) {
      Partition m = a.meet(b);
      CHECK(m.leq(a));
      CHECK(m.leq(b));
      Partition j = a.join(b);
      CHECK(a.leq(j));
      CHECK(b.leq(j));
      for (const auto& c : all4) {
        if (c.leq(a) && c.leq(b)) CHECK(c.leq(m));
        if (a.leq(c) && b.leq(c)) CHECK(j.leq(c));
      }
    }
}

TEST_CASE("chi map parsing") {
  ChiMap chi("FBFFFBB");
  CHECK(chi.n() == 7);
  CHECK(chi.is_boolean(2));
  CHECK_FALSE(chi.is_boolean(1));
  CHECK(chi.restrict_to({2, 6, 7}).str() == "BBB");
  CHECK_THROWS_AS(ChiMap("FXB"), std::invalid_argument);
  CHECK_THROWS_AS(ChiMap(""), std::invalid_argument);
}
