#include "khdet/smith.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <unordered_map>

namespace khdet::homalg {

namespace {

// Shared sparse elimination state. Rows are hash maps, plus a per-column
// occupancy index so pivot search and column sweeps stay local.
struct Working {
  int rows = 0;
  int cols = 0;
  std::vector<std::unordered_map<int, Int>> row;
  std::vector<std::set<int>> col_rows;
  std::vector<bool> row_done, col_done;

  explicit Working(const IntMatrix& m)
      : rows(m.rows()),
        cols(m.cols()),
        row(m.rows()),
        col_rows(m.cols()),
        row_done(m.rows(), false),
        col_done(m.cols(), false) {
    for (int r = 0; r < rows; ++r)
      for (const auto& [c, v] : m.row(r)) {
        row[r].emplace(c, v);
        col_rows[c].insert(r);
      }
  }

  void set_entry(int r, int c, Int v) {
    if (v == 0) {
      if (row[r].erase(c)) col_rows[c].erase(r);
    } else {
      auto [it, inserted] = row[r].try_emplace(c, std::move(v));
      if (!inserted) it->second = std::move(v);
      if (inserted) col_rows[c].insert(r);
    }
  }

  Int entry(int r, int c) const {
    auto it = row[r].find(c);
    return it == row[r].end() ? Int(0) : it->second;
  }

  // row r -= q * row p
  void row_axpy(int r, int p, const Int& q) {
    if (q == 0) return;
    for (const auto& [c, v] : row[p]) {
      auto it = row[r].find(c);
      if (it == row[r].end()) {
        Int nv = -q * v;
        if (nv != 0) {
          row[r].emplace(c, std::move(nv));
          col_rows[c].insert(r);
        }
      } else {
        it->second -= q * v;
        if (it->second == 0) {
          row[r].erase(it);
          col_rows[c].erase(r);
        }
      }
    }
  }

  // col c -= q * col p
  void col_axpy(int c, int p, const Int& q) {
    if (q == 0) return;
    // snapshot: col_rows[p] mutates as entries appear/disappear in column c
    std::vector<int> rows_of_p(col_rows[p].begin(), col_rows[p].end());
    for (int r : rows_of_p) {
      const Int& v = row[r].at(p);
      auto it = row[r].find(c);
      if (it == row[r].end()) {
        Int nv = -q * v;
        if (nv != 0) {
          row[r].emplace(c, std::move(nv));
          col_rows[c].insert(r);
        }
      } else {
        it->second -= q * v;
        if (it->second == 0) {
          row[r].erase(it);
          col_rows[c].erase(r);
        }
      }
    }
  }

  // Pivot: active entry of minimal |value|; ties broken by lowest row, then
  // lowest column. Early-exits on a |value|=1 hit (unbeatable under the rule).
  bool find_pivot(int& pr, int& pc) const {
    bool found = false;
    Int best;
    for (int r = 0; r < rows; ++r) {
      if (row_done[r] || row[r].empty()) continue;
      int best_c = -1;
      Int best_v;
      for (const auto& [c, v] : row[r]) {
        if (col_done[c]) continue;
        Int a = abs(v);
        if (best_c < 0 || a < best_v || (a == best_v && c < best_c)) {
          best_c = c;
          best_v = a;
        }
      }
      if (best_c < 0) continue;
      if (!found || best_v < best) {
        found = true;
        best = best_v;
        pr = r;
        pc = best_c;
        if (best == 1) return true;
      }
    }
    return found;
  }

  bool column_clear_except(int c, int pr) const {
    for (int r : col_rows[c])
      if (r != pr && !row_done[r]) return false;
    return true;
  }

  bool row_clear_except(int r, int pc) const {
    for (const auto& [c, v] : row[r])
      if (c != pc && !col_done[c]) return false;
    return true;
  }
};

// Quotient rounding to nearest keeps remainders at most half the pivot.
Int nearest_quotient(const Int& a, const Int& b) {
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (2 * abs(r) > abs(b)) q += (b > 0 ? 1 : -1);
  return q;
}

// Transform recorder: row ops mirror into U, column ops into V. Disabled
// (null) for the diagonal-only path.
struct Transforms {
  IntMatrix* u = nullptr;
  IntMatrix* v = nullptr;

  void row_axpy(int r, int p, const Int& q) {
    if (!u) return;
    for (int k = 0; k < u->cols(); ++k) {
      Int val = u->at(p, k);
      if (val != 0) u->add_to(r, k, -q * val);
    }
  }
  void col_axpy(int c, int p, const Int& q) {
    if (!v) return;
    for (int k = 0; k < v->rows(); ++k) {
      Int val = v->at(k, p);
      if (val != 0) v->add_to(k, c, -q * val);
    }
  }
  void row_negate(int r) {
    if (!u) return;
    for (int k = 0; k < u->cols(); ++k) {
      Int val = u->at(r, k);
      if (val != 0) u->set(r, k, -val);
    }
  }
  void row_add(int r, int p) { row_axpy(r, p, Int(-1)); }  // row r += row p
};

struct DiagEntry {
  int row, col;
  Int value;
};

// Core elimination: isolate pivots one at a time until the active submatrix
// is empty. Records which (row, col) carries each diagonal value so the
// transform-tracked caller can stitch the final diagonal together.
std::vector<DiagEntry> diagonalize(Working& w, Transforms& t) {
  std::vector<DiagEntry> diag;
  int pr = 0, pc = 0;
  while (w.find_pivot(pr, pc)) {
    // Alternate column and row sweeps; each sweep can reintroduce entries in
    // the other direction, but pivot magnitude strictly drops when it does,
    // so the loop terminates.
    for (;;) {
      bool stuck = false;
      while (!w.column_clear_except(pc, pr)) {
        std::vector<int> targets(w.col_rows[pc].begin(), w.col_rows[pc].end());
        for (int r : targets) {
          if (r == pr || w.row_done[r]) continue;
          Int q = nearest_quotient(w.entry(r, pc), w.entry(pr, pc));
          w.row_axpy(r, pr, q);
          t.row_axpy(r, pr, q);
        }
        // Remainders smaller than the pivot may survive; promote the smallest.
        int new_pr = pr;
        Int best = abs(w.entry(pr, pc));
        for (int r : w.col_rows[pc]) {
          if (w.row_done[r]) continue;
          Int a = abs(w.row[r].at(pc));
          if (a < best || (a == best && r < new_pr)) {
            new_pr = r;
            best = a;
          }
        }
        pr = new_pr;
      }
      while (!w.row_clear_except(pr, pc)) {
        std::vector<std::pair<int, Int>> entries(w.row[pr].begin(), w.row[pr].end());
        for (const auto& [c, v] : entries) {
          if (c == pc || w.col_done[c]) continue;
          Int q = nearest_quotient(v, w.entry(pr, pc));
          w.col_axpy(c, pc, q);
          t.col_axpy(c, pc, q);
        }
        int new_pc = pc;
        Int best = abs(w.entry(pr, pc));
        for (const auto& [c, v] : w.row[pr]) {
          if (w.col_done[c]) continue;
          Int a = abs(v);
          if (a < best || (a == best && c < new_pc)) {
            new_pc = c;
            best = a;
          }
        }
        if (new_pc != pc) {
          pc = new_pc;
          stuck = true;  // row sweep moved the pivot; redo the column
        } else {
          break;
        }
      }
      if (!stuck && w.column_clear_except(pc, pr) && w.row_clear_except(pr, pc)) break;
    }
    Int d = w.entry(pr, pc);
    if (d < 0) {
      d = -d;
      w.set_entry(pr, pc, d);
      t.row_negate(pr);
    }
    diag.push_back({pr, pc, d});
    w.row_done[pr] = true;
    w.col_done[pc] = true;
  }
  return diag;
}

// diag(a, b) -> diag(gcd, lcm) by unimodular ops, until the chain divides.
void enforce_divisibility(std::vector<Int>& d) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
      if (d[i + 1] % d[i] != 0) {
        Int g = gcd(d[i], d[i + 1]);
        Int l = d[i] / g * d[i + 1];
        d[i] = g;
        d[i + 1] = l;
        changed = true;
      }
    }
  }
}

}  // namespace

std::vector<Int> smith_diagonal(const IntMatrix& m) {
  Working w(m);
  Transforms none;
  auto entries = diagonalize(w, none);
  std::vector<Int> d;
  d.reserve(entries.size());
  for (auto& e : entries) d.push_back(std::move(e.value));
  std::sort(d.begin(), d.end());
  enforce_divisibility(d);
  return d;
}

SmithResult smith_normal_form(const IntMatrix& m) {
  Working w(m);
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  Transforms t{&u, &v};
  auto entries = diagonalize(w, t);

  // Permute the isolated pivots onto the leading diagonal: a row swap is a
  // pair of unimodular row ops away, but since each pivot owns its row and
  // column outright we can simply renumber with a permutation, applied as
  // row permutation to U and column permutation to V.
  std::vector<int> row_perm(m.rows(), -1), col_perm(m.cols(), -1);
  int next = 0;
  for (const auto& e : entries) {
    row_perm[e.row] = next;
    col_perm[e.col] = next;
    ++next;
  }
  int spare_r = next, spare_c = next;
  for (int r = 0; r < m.rows(); ++r)
    if (row_perm[r] < 0) row_perm[r] = spare_r++;
  for (int c = 0; c < m.cols(); ++c)
    if (col_perm[c] < 0) col_perm[c] = spare_c++;

  IntMatrix pu(m.rows(), m.rows());
  for (int r = 0; r < m.rows(); ++r)
    for (const auto& [c, val] : u.row(r)) pu.set(row_perm[r], c, val);
  IntMatrix pv(m.cols(), m.cols());
  for (int r = 0; r < m.cols(); ++r)
    for (const auto& [c, val] : v.row(r)) pv.set(r, col_perm[c], val);

  std::vector<Int> d;
  d.reserve(entries.size());
  for (const auto& e : entries) d.push_back(e.value);

  // Sort pivots ascending (explicit swaps so U, V track every exchange),
  // then repair divisibility with the 2x2 gcd/lcm transformation.
  auto swap_rows = [&](IntMatrix& mat, int a, int b) {
    if (a == b) return;
    for (int k = 0; k < mat.cols(); ++k) {
      Int va = mat.at(a, k), vb = mat.at(b, k);
      mat.set(a, k, vb);
      mat.set(b, k, va);
    }
  };
  auto swap_cols = [&](IntMatrix& mat, int a, int b) {
    if (a == b) return;
    for (int k = 0; k < mat.rows(); ++k) {
      Int va = mat.at(k, a), vb = mat.at(k, b);
      mat.set(k, a, vb);
      mat.set(k, b, va);
    }
  };
  for (std::size_t i = 0; i < d.size(); ++i) {
    std::size_t m_idx = i;
    for (std::size_t k = i + 1; k < d.size(); ++k)
      if (d[k] < d[m_idx]) m_idx = k;
    if (m_idx != i) {
      std::swap(d[i], d[m_idx]);
      swap_rows(pu, static_cast<int>(i), static_cast<int>(m_idx));
      swap_cols(pv, static_cast<int>(i), static_cast<int>(m_idx));
    }
  }
  std::vector<Int>& sorted = d;

  // Divisibility repair: P * diag(a,b) * Q = diag(g, ab/g) with
  // P = [[s, t],[-b/g, a/g]], Q = [[1, -t*b/g],[1, s*a/g]] where g = s*a + t*b.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
      const Int &a = sorted[i], &b = sorted[i + 1];
      if (b % a == 0) continue;
      Int g, s, tt;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), tt.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Int bg = b / g, ag = a / g;
      Int l = ag * b;
      int r1 = static_cast<int>(i), r2 = static_cast<int>(i + 1);
      // rows of U
      std::vector<Int> u1(pu.cols()), u2(pu.cols());
      for (int k = 0; k < pu.cols(); ++k) {
        u1[k] = pu.at(r1, k);
        u2[k] = pu.at(r2, k);
      }
      for (int k = 0; k < pu.cols(); ++k) {
        pu.set(r1, k, s * u1[k] + tt * u2[k]);
        pu.set(r2, k, -bg * u1[k] + ag * u2[k]);
      }
      // columns of V
      std::vector<Int> v1(pv.rows()), v2(pv.rows());
      for (int k = 0; k < pv.rows(); ++k) {
        v1[k] = pv.at(k, r1);
        v2[k] = pv.at(k, r2);
      }
      for (int k = 0; k < pv.rows(); ++k) {
        pv.set(k, r1, v1[k] + v2[k]);
        pv.set(k, r2, -tt * bg * v1[k] + s * ag * v2[k]);
      }
      sorted[i] = g;
      sorted[i + 1] = l;
      changed = true;
    }
  }

  IntMatrix smat(m.rows(), m.cols());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    smat.set(static_cast<int>(i), static_cast<int>(i), sorted[i]);
  return {std::move(smat), std::move(pu), std::move(pv)};
}

AbelianGroup cokernel(const IntMatrix& m) {
  auto d = smith_diagonal(m);
  AbelianGroup g;
  g.free_rank = m.rows() - static_cast<long>(d.size());
  for (Int& x : d)
    if (x > 1) g.torsion.push_back(std::move(x));
  return g;
}

int integer_rank(const IntMatrix& m) {
  return static_cast<int>(smith_diagonal(m).size());
}

Int abs_det(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw validation_error("abs_det: matrix not square");
  auto d = smith_diagonal(m);
  if (static_cast<int>(d.size()) < m.rows()) return 0;
  Int p = 1;
  for (const Int& x : d) p *= x;
  return p;
}

bool is_unimodular(const IntMatrix& m) {
  return m.rows() == m.cols() && abs_det(m) == 1;
}

namespace {

// Dense bitset elimination over F2.
int f2_rank(const IntMatrix& m) {
  const int rows = m.rows(), cols = m.cols();
  const int words = (cols + 63) / 64;
  std::vector<std::vector<std::uint64_t>> bits;
  bits.reserve(rows);
  for (int r = 0; r < rows; ++r) {
    std::vector<std::uint64_t> row(words, 0);
    bool any = false;
    for (const auto& [c, v] : m.row(r)) {
      if (mpz_odd_p(v.get_mpz_t())) {
        row[c / 64] ^= (std::uint64_t(1) << (c % 64));
        any = true;
      }
    }
    if (any) bits.push_back(std::move(row));
  }
  int rank = 0;
  for (int c = 0; c < cols && rank < static_cast<int>(bits.size()); ++c) {
    int sel = -1;
    for (int r = rank; r < static_cast<int>(bits.size()); ++r) {
      if (bits[r][c / 64] & (std::uint64_t(1) << (c % 64))) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(bits[rank], bits[sel]);
    for (int r = 0; r < static_cast<int>(bits.size()); ++r) {
      if (r != rank && (bits[r][c / 64] & (std::uint64_t(1) << (c % 64)))) {
        for (int w = 0; w < words; ++w) bits[r][w] ^= bits[rank][w];
      }
    }
    ++rank;
  }
  return rank;
}

// Fraction-free sparse elimination; rank over Q. Rows are rescaled by their
// content after each combination to keep entries small.
int q_rank(const IntMatrix& m) {
  Working w(m);
  int rank = 0;
  int pr = 0, pc = 0;
  while (w.find_pivot(pr, pc)) {
    const Int p = w.entry(pr, pc);
    std::vector<int> targets(w.col_rows[pc].begin(), w.col_rows[pc].end());
    for (int r : targets) {
      if (r == pr || w.row_done[r]) continue;
      const Int e = w.entry(r, pc);
      // row r <- p * row r - e * row pr   (kills column pc)
      std::vector<std::pair<int, Int>> merged;
      merged.reserve(w.row[r].size() + w.row[pr].size());
      for (const auto& [c, v] : w.row[r]) merged.emplace_back(c, p * v);
      for (const auto& [c, v] : w.row[pr]) {
        merged.emplace_back(c, -e * v);
      }
      std::unordered_map<int, Int> combined;
      for (auto& [c, v] : merged) {
        auto [it, inserted] = combined.try_emplace(c, v);
        if (!inserted) it->second += v;
      }
      Int content = 0;
      for (auto& [c, v] : combined) {
        if (v != 0) content = gcd(content, v);
      }
      // clear old row from the column index
      for (const auto& [c, v] : w.row[r]) w.col_rows[c].erase(r);
      w.row[r].clear();
      for (auto& [c, v] : combined) {
        if (v == 0) continue;
        Int nv = content > 1 ? Int(v / content) : v;
        w.row[r].emplace(c, std::move(nv));
        w.col_rows[c].insert(r);
      }
    }
    w.row_done[pr] = true;
    w.col_done[pc] = true;
    ++rank;
  }
  return rank;
}

}  // namespace

int field_rank(const IntMatrix& m, Field field) {
  switch (field) {
    case Field::F2:
      return f2_rank(m);
    case Field::Q:
      return q_rank(m);
  }
  return 0;
}

}  // namespace khdet::homalg
