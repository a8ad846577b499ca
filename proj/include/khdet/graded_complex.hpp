#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "khdet/abelian.hpp"
#include "khdet/int_matrix.hpp"

namespace khdet::homalg {

enum class Ring { Z, F2, Q };

std::string ring_name(Ring r);

/// Homology of a bigraded complex: per (homological degree i, quantum degree
/// j), the free rank (= dimension over a field) and the torsion invariant
/// factors (empty over a field).
class BigradedTable {
public:
  struct Entry {
    long free_rank = 0;
    std::vector<Int> torsion;
    bool operator==(const Entry&) const = default;
  };

  explicit BigradedTable(Ring ring = Ring::Z) : ring_(ring) {}

  Ring ring() const { return ring_; }
  void set(int i, int j, Entry e);
  const Entry* find(int i, int j) const;
  long free_rank(int i, int j) const;
  const std::map<std::pair<int, int>, Entry>& cells() const { return cells_; }

  /// Sum of free ranks (field: total dimension).
  long total_rank() const;
  /// Shift every entry's quantum degree by dj.
  BigradedTable j_shifted(int dj) const;

  bool operator==(const BigradedTable&) const = default;

private:
  Ring ring_;
  std::map<std::pair<int, int>, Entry> cells_;
};

/// A bigraded cochain complex of finite free modules. Degrees are indexed
/// internally 0..length; the homological degree of index r is r + min_degree.
/// Differentials raise the index by one and, unless `filtered`, preserve the
/// quantum grading. Coefficients in the stored matrices are small; all exact
/// arithmetic happens downstream in arbitrary precision.
class GradedComplex {
public:
  struct Triplet {
    std::int32_t row;  // generator index in degree r+1
    std::int32_t col;  // generator index in degree r
    std::int32_t coef;
  };

  GradedComplex(Ring ring, int min_degree, bool filtered = false)
      : ring_(ring), min_degree_(min_degree), filtered_(filtered) {}

  Ring ring() const { return ring_; }
  int min_degree() const { return min_degree_; }
  int max_degree() const { return min_degree_ + static_cast<int>(jgrades_.size()) - 1; }
  bool filtered() const { return filtered_; }

  /// Append the generator list for the next degree; returns its index.
  int add_degree(std::vector<int> jgrades);
  void add_entry(int r, int row, int col, int coef);

  int dim(int r) const { return static_cast<int>(jgrades_[r].size()); }
  int length() const { return static_cast<int>(jgrades_.size()); }
  const std::vector<int>& jgrades(int r) const { return jgrades_[r]; }
  const std::vector<Triplet>& triplets(int r) const { return diffs_[r]; }
  long total_generators() const;

  /// Materialize the differential out of degree index r as a matrix.
  IntMatrix differential(int r) const;

  /// First bidegree (i, j) where (d . d) has a nonzero entry, if any.
  /// The composite is computed over Z and tested modulo the ring.
  std::optional<std::pair<int, int>> d_squared_violation() const;

private:
  Ring ring_;
  int min_degree_;
  bool filtered_;
  std::vector<std::vector<int>> jgrades_;
  std::vector<std::vector<Triplet>> diffs_;
};

/// Homology of the complex, one exact computation per (i, j) block.
/// Throws validation_error (reporting the offending bidegree) if d.d != 0.
BigradedTable complex_homology(const GradedComplex& c);

}  // namespace khdet::homalg
