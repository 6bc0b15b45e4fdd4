#include "doctest.h"

#include "fba/moebius.hpp"

using namespace fba;

namespace {

std::vector<ChiMap> all_chi(int n) {
  std::vector<ChiMap> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::string s(n, 'F');
    for (int k = 0; k < n; ++k)
      if (mask & (1 << k)) s[k] = 'B';
    out.emplace_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("convolution unit and inverse") {
  for (const char* cs : {"FFF", "FBF", "FBFB"}) {
    ChiMap chi(cs);
    auto d = delta_function(chi);
    auto z = zeta_function(chi);
    auto m = moebius_oracle(chi);
    CHECK(convolve(d, z).table == z.table);
    CHECK(convolve(z, d).table == z.table);
    CHECK(convolve(m, z).table == d.table);
    CHECK(convolve(z, m).table == d.table);
    // zeta * zeta counts the interval.
    const IncLattice& L = lattice_for(chi);
    auto zz = convolve(z, z);
    for (int i = 0; i < L.size(); ++i)
      for (int j = 0; j < L.size(); ++j)
        if (L.leq(i, j))
          CHECK(zz.at(L.elem(i), L.elem(j)) ==
                static_cast<std::int64_t>(L.interval(i, j).size()));
  }
  CHECK_THROWS_AS(convolve(delta_function(ChiMap("FF")), zeta_function(ChiMap("FB"))),
                  std::invalid_argument);
}

TEST_CASE("inversion oracle on small noncrossing lattices") {
  const IncLattice& L3 = lattice_for(ChiMap::all_free(3));
  CHECK(L3.mu(L3.bottom(), L3.top()) == 2);
  const IncLattice& L4 = lattice_for(ChiMap::all_free(4));
  CHECK(L4.mu(L4.bottom(), L4.top()) == -5);
  for (int i = 0; i < L4.size(); ++i) CHECK(L4.mu(i, i) == 1);
}

TEST_CASE("defining recursion of the moebius function") {
  for (const char* cs : {"FFFFF", "FBFBF", "BFBFB"}) {
    ChiMap chi(cs);
    const IncLattice& L = lattice_for(chi);
    for (int i = 0; i < L.size(); ++i)
      for (int j = 0; j < L.size(); ++j) {
        if (!L.leq(i, j) || i == j) continue;
        std::int64_t s = 0;
        for (int r : L.interval(i, j)) s += L.mu(r, j);
        CHECK(s == 0);
      }
  }
}

TEST_CASE("noncrossing moebius values to the top") {
  CHECK(moebius_nc(Partition::singletons(1), 1) == 1);
  CHECK(moebius_nc(Partition::singletons(2), 2) == -1);
  std::int64_t sign = 1;
  for (int n = 1; n <= 7; ++n) {
    CHECK(moebius_nc(Partition::singletons(n), n) == sign * catalan(n - 1));
    sign = -sign;
  }
  CHECK_THROWS_AS(moebius_nc(Partition(4, {{1, 3}, {2, 4}}), 4), std::invalid_argument);
}

TEST_CASE("product formula matches the inversion oracle everywhere") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& chi : all_chi(n)) {
      const IncLattice& L = lattice_for(chi);
      for (int i = 0; i < L.size(); ++i)
        for (int j = 0; j < L.size(); ++j) {
          if (!L.leq(i, j)) continue;
          CHECK(moebius_product(L.elem(i), L.elem(j), chi) == L.mu(i, j));
        }
    }
  }
  ChiMap chi6("FBFFBF");
  const IncLattice& L = lattice_for(chi6);
  for (int i = 0; i < L.size(); ++i)
    for (int j = 0; j < L.size(); ++j)
      if (L.leq(i, j))
        CHECK(moebius_product(L.elem(i), L.elem(j), chi6) == L.mu(i, j));
  CHECK_THROWS_AS(
      moebius_product(Partition::full(4), Partition::singletons(4), ChiMap::all_free(4)),
      std::invalid_argument);
}

TEST_CASE("factorization through one block") {
  // mu(s, p) = mu(s|V, 1_V) * mu(s|V', p|V') for any block V of p.
  for (int n = 2; n <= 6; ++n) {
    for (const auto& chi : all_chi(n)) {
      const IncLattice& L = lattice_for(chi);
      for (int j = 0; j < L.size(); ++j) {
        const Partition& pi = L.elem(j);
        if (pi.block_count() < 2) continue;
        for (int i = 0; i < L.size(); ++i) {
          if (!L.leq(i, j)) continue;
          const Partition& sig = L.elem(i);
          for (const auto& v : pi.blocks()) {
            std::vector<int> vc;
            for (int x = 1; x <= n; ++x)
              if (pi.block_of(x) != pi.block_of(v.front())) vc.push_back(x);
            ChiMap chi_v = chi.restrict_to(v);
            ChiMap chi_vc = chi.restrict_to(vc);
            const IncLattice& Lv = lattice_for(chi_v);
            const IncLattice& Lvc = lattice_for(chi_vc);
            std::int64_t lhs = L.mu(i, j);
            std::int64_t rhs =
                Lv.mu(Lv.index_of(sig.restrict_to(v)), Lv.top()) *
                Lvc.mu(Lvc.index_of(sig.restrict_to(vc)), Lvc.index_of(pi.restrict_to(vc)));
            CHECK(lhs == rhs);
          }
        }
      }
      if (n >= 5) break;  // sample chi at the larger sizes
    }
  }
}

TEST_CASE("factorization by segments equals factorization by blocks") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& chi : all_chi(n)) {
      IncContext ctx(chi);
      const IncLattice& L = lattice_for(chi);
      for (int i = 0; i < L.size(); ++i)
        for (int j = 0; j < L.size(); ++j) {
          if (!L.leq(i, j)) continue;
          // By segments: product of noncrossing moebius values per segment.
          auto ds = decompose(L.elem(i), ctx);
          auto dp = decompose(L.elem(j), ctx);
          std::int64_t by_segments = 1;
          for (size_t s = 0; s < ds.size(); ++s) {
            const IncLattice& Ls = lattice_for(ChiMap::all_free(ds[s].n()));
            by_segments *= Ls.mu(Ls.index_of(ds[s]), Ls.index_of(dp[s]));
          }
          // By blocks of pi.
          std::int64_t by_blocks = 1;
          for (const auto& v : L.elem(j).blocks()) {
            ChiMap chi_v = chi.restrict_to(v);
            const IncLattice& Lv = lattice_for(chi_v);
            by_blocks *= Lv.mu(Lv.index_of(L.elem(i).restrict_to(v)), Lv.top());
          }
          std::int64_t triple = moebius_product(L.elem(i), L.elem(j), chi);
          CHECK(by_segments == triple);
          CHECK(by_blocks == triple);
        }
      if (n >= 5) break;
    }
  }
}
