#include "fba/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace fba {

Partition::Partition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  canonicalize_and_check();
}

void Partition::canonicalize_and_check() {
  if (n_ < 1) throw std::invalid_argument("partition: ground set must be nonempty");
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("partition: empty block");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  block_index_.assign(n_ + 1, -1);
  int covered = 0;
  for (int bi = 0; bi < static_cast<int>(blocks_.size()); ++bi) {
    for (int v : blocks_[bi]) {
      if (v < 1 || v > n_) throw std::invalid_argument("partition: element out of range");
      if (block_index_[v] != -1) throw std::invalid_argument("partition: duplicate element");
      block_index_[v] = bi;
      ++covered;
    }
  }
  if (covered != n_) throw std::invalid_argument("partition: blocks do not cover {1..n}");
}

Partition Partition::full(int n) {
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 1);
  return Partition(n, {all});
}

Partition Partition::singletons(int n) {
  std::vector<std::vector<int>> bs;
  bs.reserve(n);
  for (int v = 1; v <= n; ++v) bs.push_back({v});
  return Partition(n, std::move(bs));
}

Partition Partition::parse(const std::string& text) {
  std::vector<std::vector<int>> blocks;
  std::vector<int> cur;
  int n = 0;
  std::string tok;
  auto flush_tok = [&] {
    if (tok.empty()) throw std::invalid_argument("partition parse: empty element");
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("partition parse: bad integer '" + tok + "'");
    cur.push_back(v);
    n = std::max(n, v);
    tok.clear();
  };
  for (char c : text) {
    if (c == ',') {
      flush_tok();
    } else if (c == '/') {
      flush_tok();
      blocks.push_back(std::move(cur));
      cur.clear();
    } else if (c >= '0' && c <= '9') {
      tok.push_back(c);
    } else if (c == ' ') {
      continue;
    } else {
      throw std::invalid_argument(std::string("partition parse: bad character '") + c + "'");
    }
  }
  flush_tok();
  blocks.push_back(std::move(cur));
  return Partition(n, std::move(blocks));
}

int Partition::block_of(int v) const {
  if (v < 1 || v > n_) throw std::out_of_range("block_of: element out of range");
  return block_index_[v];
}

std::vector<int> Partition::rgs() const {
  std::vector<int> out(n_);
  std::vector<int> label(blocks_.size(), -1);
  int next = 0;
  for (int v = 1; v <= n_; ++v) {
    int bi = block_index_[v];
    if (label[bi] == -1) label[bi] = next++;
    out[v - 1] = label[bi];
  }
  return out;
}

std::string Partition::encode() const {
  std::ostringstream os;
  for (size_t bi = 0; bi < blocks_.size(); ++bi) {
    if (bi) os << '/';
    for (size_t j = 0; j < blocks_[bi].size(); ++j) {
      if (j) os << ',';
      os << blocks_[bi][j];
    }
  }
  return os.str();
}

bool Partition::operator==(const Partition& o) const {
  return n_ == o.n_ && blocks_ == o.blocks_;
}

bool Partition::operator<(const Partition& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  return rgs() < o.rgs();
}

bool Partition::is_noncrossing() const {
  // Crossing means positions a<b<c<d with a~c and b~d in distinct blocks.
  for (int a = 1; a <= n_; ++a)
    for (int b = a + 1; b <= n_; ++b) {
      if (block_index_[a] == block_index_[b]) continue;
      for (int c = b + 1; c <= n_; ++c) {
        if (block_index_[c] != block_index_[a]) continue;
        for (int d = c + 1; d <= n_; ++d)
          if (block_index_[d] == block_index_[b]) return false;
      }
    }
  return true;
}

bool Partition::is_interval_block(int block_index) const {
  if (block_index < 0 || block_index >= block_count())
    throw std::out_of_range("is_interval_block: bad block index");
  const auto& b = blocks_[block_index];
  return b.back() - b.front() + 1 == static_cast<int>(b.size());
}

bool Partition::is_inner_block(int block_index) const {
  if (block_index < 0 || block_index >= block_count())
    throw std::out_of_range("is_inner_block: bad block index");
  const auto& b = blocks_[block_index];
  for (int other = 0; other < block_count(); ++other) {
    if (other == block_index) continue;
    const auto& o = blocks_[other];
    if (o.front() < b.front() && o.back() > b.back()) return true;
  }
  return false;
}

bool Partition::leq(const Partition& coarser) const {
  if (n_ != coarser.n_) throw std::invalid_argument("leq: mismatched ground sets");
  for (const auto& b : blocks_) {
    int target = coarser.block_index_[b.front()];
    for (int v : b)
      if (coarser.block_index_[v] != target) return false;
  }
  return true;
}

Partition Partition::restrict_to(const std::vector<int>& subset) const {
  if (subset.empty()) throw std::invalid_argument("restrict: empty subset");
  std::vector<int> relabel(n_ + 1, 0);
  int m = 0;
  for (int v : subset) {
    if (v < 1 || v > n_) throw std::invalid_argument("restrict: subset element out of range");
    if (relabel[v] != 0) throw std::invalid_argument("restrict: subset not strictly sorted");
    relabel[v] = ++m;
  }
  for (size_t i = 1; i < subset.size(); ++i)
    if (subset[i] <= subset[i - 1])
      throw std::invalid_argument("restrict: subset not strictly sorted");
  std::vector<std::vector<int>> out;
  for (const auto& b : blocks_) {
    std::vector<int> nb;
    for (int v : b)
      if (relabel[v]) nb.push_back(relabel[v]);
    if (!nb.empty()) out.push_back(std::move(nb));
  }
  return Partition(m, std::move(out));
}

Partition Partition::meet(const Partition& other) const {
  if (n_ != other.n_) throw std::invalid_argument("meet: mismatched ground sets");
  std::map<std::pair<int, int>, std::vector<int>> cells;
  for (int v = 1; v <= n_; ++v)
    cells[{block_index_[v], other.block_index_[v]}].push_back(v);
  std::vector<std::vector<int>> bs;
  bs.reserve(cells.size());
  for (auto& [key, cell] : cells) bs.push_back(std::move(cell));
  return Partition(n_, std::move(bs));
}

Partition Partition::join(const Partition& other) const {
  if (n_ != other.n_) throw std::invalid_argument("join: mismatched ground sets");
  std::vector<int> parent(n_ + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (const auto* p : {this, &other})
    for (const auto& b : p->blocks_)
      for (size_t i = 1; i < b.size(); ++i) unite(b[0], b[i]);
  std::map<int, std::vector<int>> groups;
  for (int v = 1; v <= n_; ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<int>> bs;
  for (auto& [root, g] : groups) bs.push_back(std::move(g));
  return Partition(n_, std::move(bs));
}

ChiMap::ChiMap(std::string s) : s_(std::move(s)) {
  if (s_.empty()) throw std::invalid_argument("chi: must be nonempty");
  for (char c : s_)
    if (c != 'F' && c != 'B')
      throw std::invalid_argument(std::string("chi: bad symbol '") + c + "' (want F or B)");
}

Face ChiMap::at(int k) const {
  if (k < 1 || k > n()) throw std::out_of_range("chi: position out of range");
  return s_[k - 1] == 'B' ? Face::B : Face::F;
}

ChiMap ChiMap::restrict_to(const std::vector<int>& subset) const {
  std::string out;
  out.reserve(subset.size());
  for (int v : subset) {
    if (v < 1 || v > n()) throw std::invalid_argument("chi restrict: element out of range");
    out.push_back(s_[v - 1]);
  }
  return ChiMap(out);
}

IndexWord::IndexWord(std::vector<int> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("index word: must be nonempty");
}

int IndexWord::at(int k) const {
  if (k < 1 || k > n()) throw std::out_of_range("index word: position out of range");
  return values_[k - 1];
}

Partition IndexWord::kernel() const {
  std::map<int, std::vector<int>> groups;
  for (int k = 1; k <= n(); ++k) groups[values_[k - 1]].push_back(k);
  std::vector<std::vector<int>> bs;
  for (auto& [val, g] : groups) bs.push_back(std::move(g));
  return Partition(n(), std::move(bs));
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_partitions: n must be >= 1");
  std::vector<Partition> out;
  std::vector<int> rgs(n, 0);
  while (true) {
    int nblocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<std::vector<int>> bs(nblocks);
    for (int v = 1; v <= n; ++v) bs[rgs[v - 1]].push_back(v);
    out.emplace_back(n, std::move(bs));
    // next restricted growth string
    int k = n - 1;
    for (; k > 0; --k) {
      int cap = 1 + *std::max_element(rgs.begin(), rgs.begin() + k);
      if (rgs[k] < cap) break;
    }
    if (k == 0) break;
    ++rgs[k];
    std::fill(rgs.begin() + k + 1, rgs.end(), 0);
  }
  return out;
}

namespace {

// All noncrossing block structures over the given labels.  The block of the
// first label is chosen as a subset of the labels; the gaps it cuts out are
// then partitioned independently (no block may cross a gap boundary).
std::vector<std::vector<std::vector<int>>> nc_block_lists(const std::vector<int>& labels) {
  std::vector<std::vector<std::vector<int>>> out;
  if (labels.empty()) {
    out.push_back({});
    return out;
  }
  int m = static_cast<int>(labels.size());
  for (int mask = 0; mask < (1 << (m - 1)); ++mask) {
    std::vector<int> block{labels[0]};
    std::vector<std::vector<int>> gaps;
    std::vector<int> gap;
    for (int j = 1; j < m; ++j) {
      if (mask & (1 << (j - 1))) {
        gaps.push_back(gap);
        gap.clear();
        block.push_back(labels[j]);
      } else {
        gap.push_back(labels[j]);
      }
    }
    gaps.push_back(gap);  // tail gap after the last chosen element
    std::vector<std::vector<std::vector<int>>> partial{{block}};
    for (const auto& g : gaps) {
      if (g.empty()) continue;
      auto sub = nc_block_lists(g);
      std::vector<std::vector<std::vector<int>>> next;
      next.reserve(partial.size() * sub.size());
      for (const auto& head : partial)
        for (const auto& tail : sub) {
          auto combined = head;
          combined.insert(combined.end(), tail.begin(), tail.end());
          next.push_back(std::move(combined));
        }
      partial = std::move(next);
    }
    for (auto& bs : partial) out.push_back(std::move(bs));
  }
  return out;
}

}  // namespace

std::vector<Partition> enumerate_noncrossing(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_noncrossing: n must be >= 1");
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 1);
  std::vector<Partition> out;
  for (auto& bs : nc_block_lists(labels)) out.emplace_back(n, std::move(bs));
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t catalan(int n) {
  static std::vector<std::int64_t> memo{1};  // C_0 = 1
  while (static_cast<int>(memo.size()) <= n) {
    int m = static_cast<int>(memo.size());
    std::int64_t c = 0;
    for (int i = 0; i < m; ++i) c += memo[i] * memo[m - 1 - i];
    memo.push_back(c);
  }
  if (n < 0) throw std::invalid_argument("catalan: n must be >= 0");
  return memo[n];
}

}  // namespace fba
