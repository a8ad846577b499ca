#include "khdet/int_matrix.hpp"

#include <sstream>

namespace khdet::homalg {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Int>& entries) {
  IntMatrix m(static_cast<int>(entries.size()), static_cast<int>(entries.size()));
  for (int i = 0; i < static_cast<int>(entries.size()); ++i) m.set(i, i, entries[i]);
  return m;
}

Int IntMatrix::at(int r, int c) const {
  check_bounds(r, c);
  auto it = data_[r].find(c);
  return it == data_[r].end() ? Int(0) : it->second;
}

void IntMatrix::set(int r, int c, Int v) {
  check_bounds(r, c);
  if (v == 0)
    data_[r].erase(c);
  else
    data_[r][c] = std::move(v);
}

void IntMatrix::add_to(int r, int c, const Int& v) {
  check_bounds(r, c);
  auto [it, inserted] = data_[r].try_emplace(c, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) data_[r].erase(it);
  } else if (it->second == 0) {
    data_[r].erase(it);
  }
}

std::size_t IntMatrix::nonzero_count() const {
  std::size_t n = 0;
  for (const auto& row : data_) n += row.size();
  return n;
}

bool IntMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r])
      if (at(c, r) != v) return false;
  return true;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) t.set(c, r, v);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw validation_error("matrix product shape mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (int r = 0; r < rows_; ++r)
    for (const auto& [k, v] : data_[r])
      for (const auto& [c, w] : rhs.data_[k]) out.add_to(r, c, v * w);
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw validation_error("matrix difference shape mismatch");
  IntMatrix out = *this;
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : rhs.data_[r]) out.add_to(r, c, -v);
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < rows_; ++r) {
    os << (r ? "; " : "");
    for (int c = 0; c < cols_; ++c) os << (c ? "," : "") << at(r, c).get_str();
  }
  os << "]";
  return os.str();
}

}  // namespace khdet::homalg
