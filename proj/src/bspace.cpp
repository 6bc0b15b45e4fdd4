#include "fba/bspace.hpp"

#include <numeric>
#include <stdexcept>

#include "json.hpp"

namespace fba {

Word Word::of(const std::vector<int>& handles) {
  Word w;
  w.entries.reserve(handles.size());
  for (int h : handles) w.entries.push_back({h, std::nullopt});
  return w;
}

BMatrix phi_n(const BProbabilitySpace& space, const Word& w) {
  if (w.entries.empty()) throw std::invalid_argument("phi_n: empty word");
  return space.expect(w);
}

std::vector<int> interval_blocks(const Partition& p) {
  std::vector<int> out;
  for (int b = 0; b < p.block_count(); ++b)
    if (p.is_interval_block(b)) out.push_back(b);
  return out;
}

PeelState peel_block(const BProbabilitySpace& space, const PeelState& st, int block_index) {
  const Partition& p = st.part;
  const Word& w = st.word;
  if (!p.is_interval_block(block_index))
    throw std::invalid_argument("peel_block: block is not an interval");
  const auto& block = p.blocks()[block_index];
  int lo = block.front(), hi = block.back();  // 1-based positions
  int n = p.n();

  Word sub;
  for (int k = lo; k <= hi; ++k) sub.entries.push_back(w.entries[k - 1]);
  if (hi == n) sub.trailing = w.trailing;
  BMatrix value = space.expect(sub);

  PeelState out{Word{}, Partition::full(1)};
  for (int k = 1; k <= n; ++k) {
    if (k >= lo && k <= hi) continue;
    WordEntry e = w.entries[k - 1];
    if (k == hi + 1) {
      BMatrix c = e.coeff ? value * (*e.coeff) : value;
      e.coeff = c;
    }
    out.word.entries.push_back(std::move(e));
  }
  if (hi == n)
    out.word.trailing = value;
  else
    out.word.trailing = w.trailing;

  std::vector<int> rest;
  for (int k = 1; k <= n; ++k)
    if (k < lo || k > hi) rest.push_back(k);
  out.part = p.restrict_to(rest);
  return out;
}

BMatrix phi_partition(const BProbabilitySpace& space, const Word& w, const Partition& p) {
  if (w.size() != p.n()) throw std::invalid_argument("phi_partition: word/partition size mismatch");
  if (!p.is_noncrossing()) throw std::invalid_argument("phi_partition: partition is crossing");
  PeelState st{w, p};
  while (st.part.block_count() > 1) {
    auto iv = interval_blocks(st.part);
    // Every noncrossing partition has an interval block.
    st = peel_block(space, st, iv.front());
  }
  BMatrix v = space.expect(st.word);
  return v;
}

int MatrixModelSpace::add_handle(std::vector<Complex> entries) {
  size_t D = static_cast<size_t>(d_) * env_;
  if (entries.size() != D * D)
    throw std::invalid_argument("matrix model: handle has wrong dimension");
  handles_.push_back(std::move(entries));
  return static_cast<int>(handles_.size()) - 1;
}

BMatrix MatrixModelSpace::expect(const Word& w) const {
  int D = d_ * env_;
  // acc starts as the identity; multiply entries left to right.
  std::vector<Complex> acc(static_cast<size_t>(D) * D, Complex{0, 0});
  for (int i = 0; i < D; ++i) acc[static_cast<size_t>(i) * D + i] = 1.0;
  auto mul = [D](const std::vector<Complex>& a, const std::vector<Complex>& b) {
    std::vector<Complex> r(static_cast<size_t>(D) * D, Complex{0, 0});
    for (int i = 0; i < D; ++i)
      for (int k = 0; k < D; ++k) {
        Complex x = a[static_cast<size_t>(i) * D + k];
        if (x == Complex{0, 0}) continue;
        for (int j = 0; j < D; ++j) r[static_cast<size_t>(i) * D + j] += x * b[static_cast<size_t>(k) * D + j];
      }
    return r;
  };
  auto embed = [&](const BMatrix& b) {
    std::vector<Complex> r(static_cast<size_t>(D) * D, Complex{0, 0});
    for (int a1 = 0; a1 < d_; ++a1)
      for (int b1 = 0; b1 < d_; ++b1)
        for (int j = 0; j < env_; ++j)
          r[static_cast<size_t>(a1 * env_ + j) * D + (b1 * env_ + j)] = b.at(a1, b1);
    return r;
  };
  for (const auto& e : w.entries) {
    if (e.handle < 0 || e.handle >= handle_count())
      throw std::invalid_argument("matrix model: unknown handle");
    if (e.coeff) acc = mul(acc, embed(*e.coeff));
    acc = mul(acc, handles_[e.handle]);
  }
  if (w.trailing) acc = mul(acc, embed(*w.trailing));
  BMatrix out(d_);
  for (int a1 = 0; a1 < d_; ++a1)
    for (int b1 = 0; b1 < d_; ++b1) {
      Complex s{0, 0};
      for (int j = 0; j < env_; ++j)
        s += acc[static_cast<size_t>(a1 * env_ + j) * D + (b1 * env_ + j)];
      out.at(a1, b1) = s / static_cast<double>(env_);
    }
  return out;
}

void MomentTableSpace::set(const std::vector<int>& handles, const BMatrix& value) {
  if (value.dim() != d_) throw std::invalid_argument("moment table: wrong value dimension");
  table_.insert_or_assign(handles, value);
}

bool MomentTableSpace::has(const std::vector<int>& handles) const {
  return table_.count(handles) != 0;
}

BMatrix MomentTableSpace::expect(const Word& w) const {
  Complex scale{1, 0};
  std::vector<int> handles;
  handles.reserve(w.entries.size());
  for (const auto& e : w.entries) {
    if (e.coeff) {
      auto z = e.coeff->as_scalar();
      if (!z)
        throw std::invalid_argument(
            "moment table: non-scalar inner coefficient cannot be resolved from a plain "
            "moment table; use a model-backed space");
      scale *= *z;
    }
    handles.push_back(e.handle);
  }
  auto it = table_.find(handles);
  if (it == table_.end()) throw std::invalid_argument("moment table: word not present");
  BMatrix v = it->second * scale;
  if (w.trailing) v = v * (*w.trailing);
  return v;
}

namespace {

nlohmann::ordered_json matrix_to_json(const BMatrix& m) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& z : m.data()) arr.push_back({z.real(), z.imag()});
  return arr;
}

BMatrix matrix_from_json(const nlohmann::json& arr, int d) {
  if (!arr.is_array() || arr.size() != static_cast<size_t>(d) * d)
    throw std::invalid_argument("moment table json: value has wrong shape");
  BMatrix m(d);
  for (size_t i = 0; i < arr.size(); ++i)
    m.data()[i] = Complex{arr[i].at(0).get<double>(), arr[i].at(1).get<double>()};
  return m;
}

}  // namespace

std::string MomentTableSpace::to_json() const {
  nlohmann::ordered_json j;
  j["d"] = d_;
  j["words"] = nlohmann::ordered_json::array();
  for (const auto& [handles, value] : table_) {
    nlohmann::ordered_json entry;
    entry["handles"] = handles;
    entry["value"] = matrix_to_json(value);
    j["words"].push_back(std::move(entry));
  }
  return j.dump(2);
}

MomentTableSpace MomentTableSpace::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  int d = j.at("d").get<int>();
  if (d < 1) throw std::invalid_argument("moment table json: d must be >= 1");
  MomentTableSpace space(d);
  for (const auto& entry : j.at("words")) {
    std::vector<int> handles = entry.at("handles").get<std::vector<int>>();
    if (entry.contains("coeffs") && !entry["coeffs"].is_null()) {
      for (const auto& c : entry["coeffs"])
        if (!matrix_from_json(c, d).is_identity(1e-12))
          throw std::invalid_argument(
              "moment table json: entries with non-identity coefficients are not usable as "
              "moment data");
    }
    space.set(handles, matrix_from_json(entry.at("value"), d));
  }
  return space;
}

}  // namespace fba
