#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "khdet/errors.hpp"

namespace khdet::homalg {

using Int = mpz_class;

/// Sparse integer matrix over arbitrary-precision integers, stored by row.
/// No explicit zero entries are retained.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

  static IntMatrix identity(int n);
  static IntMatrix diagonal(const std::vector<Int>& entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  /// Entry (r, c); zero when absent.
  Int at(int r, int c) const;
  void set(int r, int c, Int v);
  void add_to(int r, int c, const Int& v);

  const std::map<int, Int>& row(int r) const { return data_[r]; }

  std::size_t nonzero_count() const;
  bool is_zero() const { return nonzero_count() == 0; }
  bool is_symmetric() const;

  IntMatrix transposed() const;

  bool operator==(const IntMatrix&) const = default;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator-(const IntMatrix& rhs) const;

  std::string to_string() const;

private:
  void check_bounds(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw validation_error("matrix index out of bounds");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::map<int, Int>> data_;
};

}  // namespace khdet::homalg
