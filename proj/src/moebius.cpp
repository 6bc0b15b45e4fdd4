#include "fba/moebius.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <stdexcept>

namespace fba {

IncLattice::IncLattice(const ChiMap& chi, int size_cap) : chi_(chi) {
  elems_ = enumerate_inc(chi, size_cap);
  for (int i = 0; i < size(); ++i) index_[elems_[i].encode()] = i;
  leq_.assign(size(), std::vector<bool>(size(), false));
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) leq_[i][j] = elems_[i].leq(elems_[j]);
  topo_.resize(size());
  for (int i = 0; i < size(); ++i) topo_[i] = i;
  std::stable_sort(topo_.begin(), topo_.end(), [&](int a, int b) {
    return elems_[a].block_count() > elems_[b].block_count();
  });
  bottom_ = index_of(Partition::singletons(chi.n()));
  top_ = index_of(Partition::full(chi.n()));
}

int IncLattice::index_of(const Partition& p) const {
  auto it = index_.find(p.encode());
  if (it == index_.end())
    throw std::invalid_argument("lattice: partition is not interval-noncrossing here");
  return it->second;
}

bool IncLattice::leq(int i, int j) const { return leq_[i][j]; }

std::vector<int> IncLattice::interval(int i, int j) const {
  std::vector<int> out;
  for (int k = 0; k < size(); ++k)
    if (leq_[i][k] && leq_[k][j]) out.push_back(k);
  return out;
}

const std::vector<std::int64_t>& IncLattice::mu_row(int i) const {
  std::lock_guard<std::mutex> lock(mu_mutex_);
  auto it = mu_rows_.find(i);
  if (it != mu_rows_.end()) return it->second;
  std::vector<std::int64_t> row(size(), 0);
  // Process targets from fine to coarse so every intermediate is ready.
  for (int t : topo_) {
    if (!leq_[i][t]) continue;
    if (t == i) {
      row[t] = 1;
      continue;
    }
    std::int64_t s = 0;
    for (int r = 0; r < size(); ++r)
      if (r != t && leq_[i][r] && leq_[r][t]) s += row[r];
    row[t] = -s;
  }
  return mu_rows_.emplace(i, std::move(row)).first->second;
}

std::int64_t IncLattice::mu(int i, int j) const {
  if (!leq_[i][j]) return 0;
  return mu_row(i)[j];
}

const IncLattice& lattice_for(const ChiMap& chi, int size_cap) {
  static std::mutex m;
  static std::map<std::string, std::unique_ptr<IncLattice>> cache;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(chi.str());
  if (it == cache.end())
    it = cache.emplace(chi.str(), std::make_unique<IncLattice>(chi, size_cap)).first;
  return *it->second;
}

std::int64_t IncidenceFunction::at(const Partition& sigma, const Partition& pi) const {
  auto it = table.find({sigma.encode(), pi.encode()});
  if (it == table.end()) throw std::invalid_argument("incidence function: pair not in table");
  return it->second;
}

namespace {

IncidenceFunction on_pairs(const ChiMap& chi,
                           const std::function<std::int64_t(const IncLattice&, int, int)>& f) {
  const IncLattice& L = lattice_for(chi);
  IncidenceFunction out{chi, {}};
  for (int i = 0; i < L.size(); ++i)
    for (int j = 0; j < L.size(); ++j)
      if (L.leq(i, j))
        out.table[{L.elem(i).encode(), L.elem(j).encode()}] = f(L, i, j);
  return out;
}

}  // namespace

IncidenceFunction delta_function(const ChiMap& chi) {
  return on_pairs(chi, [](const IncLattice&, int i, int j) -> std::int64_t { return i == j; });
}

IncidenceFunction zeta_function(const ChiMap& chi) {
  return on_pairs(chi, [](const IncLattice&, int, int) -> std::int64_t { return 1; });
}

IncidenceFunction moebius_oracle(const ChiMap& chi) {
  return on_pairs(chi, [](const IncLattice& L, int i, int j) { return L.mu(i, j); });
}

IncidenceFunction convolve(const IncidenceFunction& f, const IncidenceFunction& g) {
  if (!(f.chi == g.chi)) throw std::invalid_argument("convolve: mismatched chi");
  const IncLattice& L = lattice_for(f.chi);
  IncidenceFunction out{f.chi, {}};
  for (int i = 0; i < L.size(); ++i)
    for (int j = 0; j < L.size(); ++j) {
      if (!L.leq(i, j)) continue;
      std::int64_t s = 0;
      for (int r : L.interval(i, j))
        s += f.at(L.elem(i), L.elem(r)) * g.at(L.elem(r), L.elem(j));
      out.table[{L.elem(i).encode(), L.elem(j).encode()}] = s;
    }
  return out;
}

std::int64_t moebius_nc(const Partition& sigma, int n) {
  if (sigma.n() != n) throw std::invalid_argument("moebius_nc: size mismatch");
  if (!sigma.is_noncrossing()) throw std::invalid_argument("moebius_nc: sigma is crossing");
  const IncLattice& L = lattice_for(ChiMap::all_free(n));
  return L.mu(L.index_of(sigma), L.top());
}

std::int64_t moebius_product(const Partition& sigma, const Partition& pi, const ChiMap& chi) {
  if (sigma.n() != chi.n() || pi.n() != chi.n())
    throw std::invalid_argument("moebius_product: size mismatch");
  if (!is_inc(sigma, chi) || !is_inc(pi, chi))
    throw std::invalid_argument("moebius_product: inputs not interval-noncrossing");
  if (!sigma.leq(pi)) throw std::invalid_argument("moebius_product: sigma not below pi");
  IncContext ctx(chi);
  std::int64_t result = 1;
  for (auto [lo, hi] : ctx.segments) {
    for (const auto& block : pi.blocks()) {
      std::vector<int> w;
      for (int v : block)
        if (v >= lo && v <= hi) w.push_back(v);
      if (w.size() <= 1) continue;  // factor is 1
      Partition restricted = sigma.restrict_to(w);
      result *= moebius_nc(restricted, static_cast<int>(w.size()));
    }
  }
  return result;
}

}  // namespace fba
