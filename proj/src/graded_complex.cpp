#include "khdet/graded_complex.hpp"

#include <algorithm>
#include <unordered_map>

#include "khdet/errors.hpp"
#include "khdet/smith.hpp"

namespace khdet::homalg {

std::string ring_name(Ring r) {
  switch (r) {
    case Ring::Z:
      return "Z";
    case Ring::F2:
      return "F2";
    case Ring::Q:
      return "Q";
  }
  return "?";
}

void BigradedTable::set(int i, int j, Entry e) {
  if (e.free_rank == 0 && e.torsion.empty()) {
    cells_.erase({i, j});
    return;
  }
  cells_[{i, j}] = std::move(e);
}

const BigradedTable::Entry* BigradedTable::find(int i, int j) const {
  auto it = cells_.find({i, j});
  return it == cells_.end() ? nullptr : &it->second;
}

long BigradedTable::free_rank(int i, int j) const {
  const Entry* e = find(i, j);
  return e ? e->free_rank : 0;
}

long BigradedTable::total_rank() const {
  long t = 0;
  for (const auto& [ij, e] : cells_) t += e.free_rank;
  return t;
}

BigradedTable BigradedTable::j_shifted(int dj) const {
  BigradedTable out(ring_);
  for (const auto& [ij, e] : cells_) out.set(ij.first, ij.second + dj, e);
  return out;
}

int GradedComplex::add_degree(std::vector<int> jgrades) {
  jgrades_.push_back(std::move(jgrades));
  diffs_.emplace_back();
  return static_cast<int>(jgrades_.size()) - 1;
}

void GradedComplex::add_entry(int r, int row, int col, int coef) {
  if (coef == 0) return;
  if (r < 0 || r + 1 >= length()) throw validation_error("differential degree out of range");
  if (row < 0 || row >= dim(r + 1) || col < 0 || col >= dim(r))
    throw validation_error("differential entry out of range");
  if (!filtered_ && jgrades_[r][col] != jgrades_[r + 1][row])
    throw validation_error("graded differential entry does not preserve quantum degree");
  diffs_[r].push_back({row, col, coef});
}

long GradedComplex::total_generators() const {
  long t = 0;
  for (const auto& g : jgrades_) t += static_cast<long>(g.size());
  return t;
}

IntMatrix GradedComplex::differential(int r) const {
  if (r < 0 || r + 1 >= length()) throw validation_error("differential degree out of range");
  IntMatrix m(dim(r + 1), dim(r));
  for (const auto& t : diffs_[r]) m.add_to(t.row, t.col, t.coef);
  return m;
}

std::optional<std::pair<int, int>> GradedComplex::d_squared_violation() const {
  for (int r = 0; r + 2 < length(); ++r) {
    // compose d_{r+1} . d_r sparsely; coefficients stay tiny
    std::vector<std::vector<std::pair<int, long>>> first_by_col(dim(r));
    for (const auto& t : diffs_[r]) first_by_col[t.col].emplace_back(t.row, t.coef);
    std::vector<std::vector<std::pair<int, long>>> second_by_col(dim(r + 1));
    for (const auto& t : diffs_[r + 1]) second_by_col[t.col].emplace_back(t.row, t.coef);

    for (int col = 0; col < dim(r); ++col) {
      std::unordered_map<int, long> acc;
      for (const auto& [mid, c1] : first_by_col[col])
        for (const auto& [row, c2] : second_by_col[mid]) acc[row] += c1 * c2;
      for (const auto& [row, v] : acc) {
        long reduced = v;
        if (ring_ == Ring::F2) reduced = ((v % 2) + 2) % 2;
        if (reduced != 0)
          return std::make_pair(r + min_degree_, jgrades_[r][col]);
      }
    }
  }
  return std::nullopt;
}

namespace {

struct Block {
  std::vector<int> src;  // generator indices with this j in degree r
  std::vector<int> dst;  // generator indices with this j in degree r+1
};

// Slice the differential out of degree r into one matrix per quantum degree.
IntMatrix sliced(const GradedComplex& c, int r, const std::vector<int>& src,
                 const std::vector<int>& dst) {
  std::unordered_map<int, int> src_pos, dst_pos;
  for (std::size_t k = 0; k < src.size(); ++k) src_pos[src[k]] = static_cast<int>(k);
  for (std::size_t k = 0; k < dst.size(); ++k) dst_pos[dst[k]] = static_cast<int>(k);
  IntMatrix m(static_cast<int>(dst.size()), static_cast<int>(src.size()));
  for (const auto& t : c.triplets(r)) {
    auto sit = src_pos.find(t.col);
    if (sit == src_pos.end()) continue;
    auto dit = dst_pos.find(t.row);
    if (dit == dst_pos.end())
      throw internal_check_error("graded slice: differential leaves the block");
    m.add_to(dit->second, sit->second, t.coef);
  }
  return m;
}

std::vector<int> indices_with_j(const std::vector<int>& jg, int j) {
  std::vector<int> out;
  for (int k = 0; k < static_cast<int>(jg.size()); ++k)
    if (jg[k] == j) out.push_back(k);
  return out;
}

}  // namespace

BigradedTable complex_homology(const GradedComplex& c) {
  if (c.filtered())
    throw validation_error("complex_homology requires a graded (unfiltered) complex");
  if (auto bad = c.d_squared_violation())
    throw validation_error("d.d != 0 at bidegree (i=" + std::to_string(bad->first) +
                           ", j=" + std::to_string(bad->second) + ")");

  struct Reduced {
    long rank = 0;
    std::vector<Int> torsion;  // Smith diagonal entries > 1 (ring Z only)
  };
  // Each differential block d_r|_j is reduced once; its rank is the out-rank
  // at (r, j) and its Smith torsion feeds the homology at (r+1, j).
  std::map<std::pair<int, int>, Reduced> blocks;
  for (int r = 0; r + 1 < c.length(); ++r) {
    std::vector<int> js = c.jgrades(r);
    std::sort(js.begin(), js.end());
    js.erase(std::unique(js.begin(), js.end()), js.end());
    for (int j : js) {
      std::vector<int> here = indices_with_j(c.jgrades(r), j);
      std::vector<int> next = indices_with_j(c.jgrades(r + 1), j);
      IntMatrix block = sliced(c, r, here, next);
      Reduced red;
      if (c.ring() == Ring::Z) {
        auto diag = smith_diagonal(block);
        red.rank = static_cast<long>(diag.size());
        for (Int& d : diag)
          if (d > 1) red.torsion.push_back(std::move(d));
      } else {
        red.rank = field_rank(block, c.ring() == Ring::F2 ? Field::F2 : Field::Q);
      }
      blocks[{r, j}] = std::move(red);
    }
  }

  BigradedTable table(c.ring());
  for (int r = 0; r < c.length(); ++r) {
    std::vector<int> js = c.jgrades(r);
    std::sort(js.begin(), js.end());
    js.erase(std::unique(js.begin(), js.end()), js.end());
    for (int j : js) {
      const long dim_here =
          static_cast<long>(indices_with_j(c.jgrades(r), j).size());
      long rank_out = 0, rank_in = 0;
      std::vector<Int> torsion;
      if (auto it = blocks.find({r, j}); it != blocks.end()) rank_out = it->second.rank;
      if (auto it = blocks.find({r - 1, j}); it != blocks.end()) {
        rank_in = it->second.rank;
        torsion = it->second.torsion;
      }
      BigradedTable::Entry e;
      e.free_rank = dim_here - rank_out - rank_in;
      e.torsion = std::move(torsion);
      if (e.free_rank < 0)
        throw internal_check_error("homology rank bookkeeping went negative");
      table.set(r + c.min_degree(), j, std::move(e));
    }
  }
  return table;
}

}  // namespace khdet::homalg
