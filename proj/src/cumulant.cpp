#include "fba/cumulant.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace fba {

namespace {

std::string span_key(int lo, int hi, const Partition& sub) {
  std::ostringstream os;
  os << lo << ':' << hi << ':';
  for (int x : sub.rgs()) os << x << ',';
  return os.str();
}

// Shared evaluator for the partitioned moment of one fixed word.  Nested
// values attach as left coefficients of the entry that follows them.
class SpanEvaluator {
 public:
  SpanEvaluator(const BProbabilitySpace& space, const Word& w)
      : space_(space), word_(w) {}

  // Value over the span [lo, hi] (1-based, inclusive) of sigma restricted to
  // it; the restriction's first block must span the whole range.
  BMatrix eval_span(int lo, int hi, const Partition& sigma) {
    std::vector<int> span(hi - lo + 1);
    for (int i = 0; i < hi - lo + 1; ++i) span[i] = lo + i;
    Partition sub = sigma.restrict_to(span);
    std::string key = span_key(lo, hi, sub);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    int m = sub.n();
    int top = sub.block_of(1);
    const auto& tb = sub.blocks()[top];
    Word inner;
    for (size_t k = 0; k < tb.size(); ++k) {
      int local = tb[k];
      int global = lo + local - 1;
      WordEntry e = word_.entries[global - 1];
      // Nested blocks sitting in the gap before this element contribute
      // their values as left multipliers, in increasing span order.
      if (k > 0) {
        int gap_lo = tb[k - 1] + 1, gap_hi = local - 1;
        BMatrix prefix = BMatrix::identity(space_.bdim());
        bool have = false;
        for (int start = gap_lo; start <= gap_hi;) {
          int blk = sub.block_of(start);
          int child_hi = sub.blocks()[blk].back();
          BMatrix v = eval_span(lo + start - 1, lo + child_hi - 1, sigma);
          prefix = have ? prefix * v : v;
          have = true;
          start = child_hi + 1;
        }
        if (have) e.coeff = e.coeff ? prefix * (*e.coeff) : prefix;
      }
      inner.entries.push_back(std::move(e));
    }
    (void)m;
    BMatrix value = space_.expect(inner);
    memo_.emplace(std::move(key), value);
    return value;
  }

  // Full partitioned moment: product of the outer spans' values in order,
  // then the trailing coefficient.
  BMatrix eval(const Partition& sigma) {
    int n = sigma.n();
    BMatrix out = BMatrix::identity(space_.bdim());
    bool have = false;
    for (int start = 1; start <= n;) {
      int blk = sigma.block_of(start);
      int hi = sigma.blocks()[blk].back();
      BMatrix v = eval_span(start, hi, sigma);
      out = have ? out * v : v;
      have = true;
      start = hi + 1;
    }
    if (word_.trailing) out = out * (*word_.trailing);
    return out;
  }

 private:
  const BProbabilitySpace& space_;
  const Word& word_;
  std::map<std::string, BMatrix> memo_;
};

}  // namespace

PhiTable::PhiTable(const BProbabilitySpace& space, const Word& w, const ChiMap& chi)
    : lattice_(&lattice_for(chi)) {
  if (w.size() != chi.n()) throw std::invalid_argument("phi table: word/chi size mismatch");
  SpanEvaluator ev(space, w);
  values_.reserve(lattice_->size());
  for (int i = 0; i < lattice_->size(); ++i) values_.push_back(ev.eval(lattice_->elem(i)));
}

BMatrix cumulant(const BProbabilitySpace& space, const Word& w, const ChiMap& chi,
                 const Partition& pi) {
  const IncLattice& L = lattice_for(chi);
  int j = L.index_of(pi);  // throws when pi is not a member
  PhiTable table(space, w, chi);
  BMatrix out(space.bdim());
  for (int i = 0; i < L.size(); ++i) {
    if (!L.leq(i, j)) continue;
    std::int64_t mu = L.mu(i, j);
    if (mu != 0) out += table.at(i) * Complex(static_cast<double>(mu), 0);
  }
  return out;
}

namespace {

// kappa at the one-block partition, as a flat Moebius sum with
// product-formula weights and peeling-based partitioned moments.
BMatrix one_block_cumulant(const BProbabilitySpace& space, const Word& w, const ChiMap& chi) {
  const Partition top = Partition::full(chi.n());
  BMatrix out(space.bdim());
  for (const auto& sigma : enumerate_inc(chi)) {
    std::int64_t mu = moebius_product(sigma, top, chi);
    if (mu != 0) out += phi_partition(space, w, sigma) * Complex(static_cast<double>(mu), 0);
  }
  return out;
}

}  // namespace

BMatrix cumulant_multiplicative(const BProbabilitySpace& space, const Word& w,
                                const ChiMap& chi, const Partition& pi) {
  if (!is_inc(pi, chi))
    throw std::invalid_argument("cumulant: partition not interval-noncrossing for chi");
  if (pi.block_count() == 1) return one_block_cumulant(space, w, chi);

  // Peel an interval block V: its one-block cumulant becomes a coefficient.
  auto iv = interval_blocks(pi);
  const auto& block = pi.blocks()[iv.front()];
  int lo = block.front(), hi = block.back();
  int n = pi.n();

  Word sub;
  for (int k = lo; k <= hi; ++k) sub.entries.push_back(w.entries[k - 1]);
  if (hi == n) sub.trailing = w.trailing;
  BMatrix value = one_block_cumulant(space, sub, chi.restrict_to(block));

  Word rest;
  for (int k = 1; k <= n; ++k) {
    if (k >= lo && k <= hi) continue;
    WordEntry e = w.entries[k - 1];
    if (k == hi + 1) e.coeff = e.coeff ? value * (*e.coeff) : value;
    rest.entries.push_back(std::move(e));
  }
  if (hi == n)
    rest.trailing = value;
  else
    rest.trailing = w.trailing;

  std::vector<int> complement;
  for (int k = 1; k <= n; ++k)
    if (k < lo || k > hi) complement.push_back(k);
  return cumulant_multiplicative(space, rest, chi.restrict_to(complement),
                                 pi.restrict_to(complement));
}

BMatrix moments_from_cumulants(const BProbabilitySpace& space, const Word& w,
                               const ChiMap& chi) {
  const IncLattice& L = lattice_for(chi);
  PhiTable table(space, w, chi);
  BMatrix out(space.bdim());
  for (int j = 0; j < L.size(); ++j)
    for (int i = 0; i < L.size(); ++i) {
      if (!L.leq(i, j)) continue;
      std::int64_t mu = L.mu(i, j);
      if (mu != 0) out += table.at(i) * Complex(static_cast<double>(mu), 0);
    }
  return out;
}

BMatrix star_formula_rhs(const BProbabilitySpace& space, const Word& w, const ChiMap& chi,
                         const IndexWord& omega) {
  if (omega.n() != chi.n()) throw std::invalid_argument("star formula: omega size mismatch");
  Partition eps = omega.kernel();
  const IncLattice& L = lattice_for(chi);
  PhiTable table(space, w, chi);
  BMatrix out(space.bdim());
  for (int i = 0; i < L.size(); ++i) {
    std::int64_t weight = 0;
    for (int j = 0; j < L.size(); ++j)
      if (L.leq(i, j) && L.elem(j).leq(eps)) weight += L.mu(i, j);
    if (weight != 0) out += table.at(i) * Complex(static_cast<double>(weight), 0);
  }
  return out;
}

namespace {

// Visit every word of `length` letters over the family's element indices.
void for_each_word(const LabeledFamily& family, int length,
                   const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(length, 0);
  int m = static_cast<int>(family.elements.size());
  for (;;) {
    fn(idx);
    int k = length - 1;
    while (k >= 0 && idx[k] == m - 1) idx[k--] = 0;
    if (k < 0) break;
    ++idx[k];
  }
}

std::string describe(const LabeledFamily& family, const std::vector<int>& idx) {
  std::ostringstream os;
  for (size_t i = 0; i < idx.size(); ++i) {
    const auto& e = family.elements[idx[i]];
    if (i) os << ' ';
    os << 'p' << e.pair << (e.face == Face::F ? 'F' : 'B') << '#' << e.handle;
  }
  return os.str();
}

struct WordLabels {
  Word word;
  ChiMap chi;
  IndexWord omega;
  bool mixed;  // pair labels not constant
};

WordLabels labels_of(const LabeledFamily& family, const std::vector<int>& idx) {
  std::string chi_s;
  std::vector<int> omega;
  Word w;
  bool mixed = false;
  for (int i : idx) {
    const auto& e = family.elements[i];
    chi_s.push_back(e.face == Face::F ? 'F' : 'B');
    omega.push_back(e.pair);
    if (e.pair != family.elements[idx[0]].pair) mixed = true;
    w.entries.push_back({e.handle, std::nullopt});
  }
  return {std::move(w), ChiMap(chi_s), IndexWord(std::move(omega)), mixed};
}

}  // namespace

ResidualReport test_combinatorial_independence(const BProbabilitySpace& space,
                                               const LabeledFamily& family, int max_n) {
  ResidualReport report;
  for (int n = 2; n <= max_n; ++n) {
    for_each_word(family, n, [&](const std::vector<int>& idx) {
      auto wl = labels_of(family, idx);
      if (!wl.mixed) return;
      BMatrix k = cumulant(space, wl.word, wl.chi, Partition::full(n));
      report.feed(k.max_abs(), describe(family, idx));
    });
  }
  return report;
}

ResidualReport vanishing_extension_check(const BProbabilitySpace& space,
                                         const LabeledFamily& family, int max_n) {
  ResidualReport report;
  for (int n = 2; n <= max_n; ++n) {
    for_each_word(family, n, [&](const std::vector<int>& idx) {
      auto wl = labels_of(family, idx);
      if (!wl.mixed) return;
      const IncLattice& L = lattice_for(wl.chi);
      PhiTable table(space, wl.word, wl.chi);
      for (int j = 0; j < L.size(); ++j) {
        const Partition& pi = L.elem(j);
        // Only partitions with a label-inhomogeneous block must vanish.
        bool inhomogeneous = false;
        for (const auto& b : pi.blocks()) {
          for (size_t t = 1; t < b.size(); ++t)
            if (wl.omega.at(b[t]) != wl.omega.at(b[0])) inhomogeneous = true;
        }
        if (!inhomogeneous) continue;
        BMatrix k(space.bdim());
        for (int i = 0; i < L.size(); ++i) {
          if (!L.leq(i, j)) continue;
          std::int64_t mu = L.mu(i, j);
          if (mu != 0) k += table.at(i) * Complex(static_cast<double>(mu), 0);
        }
        report.feed(k.max_abs(), describe(family, idx) + " @ " + pi.encode());
      }
    });
  }
  return report;
}

ResidualReport star_formula_check(const BProbabilitySpace& space, const LabeledFamily& family,
                                  int max_n) {
  ResidualReport report;
  for (int n = 1; n <= max_n; ++n) {
    for_each_word(family, n, [&](const std::vector<int>& idx) {
      auto wl = labels_of(family, idx);
      BMatrix lhs = space.expect(wl.word);
      BMatrix rhs = star_formula_rhs(space, wl.word, wl.chi, wl.omega);
      report.feed(max_abs_diff(lhs, rhs), describe(family, idx));
    });
  }
  return report;
}

}  // namespace fba
