#include <doctest.h>

#include <random>

#include "khdet/abelian.hpp"
#include "khdet/graded_complex.hpp"
#include "khdet/int_matrix.hpp"
#include "khdet/laurent.hpp"
#include "khdet/smith.hpp"

using namespace khdet::homalg;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  return m;
}

// Independent determinant oracle: Bareiss fraction-free elimination on a
// dense copy. Only used to cross-check the Smith route.
Int bareiss_det(const IntMatrix& m) {
  int n = m.rows();
  REQUIRE(m.cols() == n);
  if (n == 0) return 1;
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

bool divisibility_chain(const std::vector<Int>& d) {
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    if (d[i] <= 0) return false;
    if (d[i + 1] % d[i] != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("smith normal form: pinned examples") {
  // [[2,4],[6,8]]: hand elimination gives diag(2, 4)
  auto d = smith_diagonal(from_rows({{2, 4}, {6, 8}}));
  REQUIRE(d.size() == 2);
  CHECK(d[0] == 2);
  CHECK(d[1] == 4);

  // identity stays the identity
  auto di = smith_diagonal(IntMatrix::identity(5));
  CHECK(di == std::vector<Int>(5, Int(1)));

  // [[1,3],[-1,-2]] has determinant 1: diag(1, 1)
  auto d2 = smith_diagonal(from_rows({{1, 3}, {-1, -2}}));
  REQUIRE(d2.size() == 2);
  CHECK(d2[0] == 1);
  CHECK(d2[1] == 1);

  // empty matrices are allowed
  CHECK(smith_diagonal(IntMatrix(0, 0)).empty());
  CHECK(smith_diagonal(IntMatrix(3, 0)).empty());
  CHECK(smith_diagonal(from_rows({{0, 0}, {0, 0}})).empty());
}

TEST_CASE("smith normal form: postconditions on random matrices") {
  std::mt19937_64 rng(0xC0FFEE);
  std::uniform_int_distribution<int> entry(-9, 9);
  std::uniform_int_distribution<int> size(0, 12);
  for (int trial = 0; trial < 60; ++trial) {
    int r = size(rng), c = size(rng);
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.set(i, j, entry(rng));
    auto [s, u, v] = smith_normal_form(m);
    CHECK(u * m * v == s);
    CHECK(is_unimodular(u));
    CHECK(is_unimodular(v));
    std::vector<Int> diag;
    for (int i = 0; i < std::min(r, c); ++i) {
      Int x = s.at(i, i);
      if (x != 0) diag.push_back(x);
    }
    CHECK(divisibility_chain(diag));
    // off-diagonal must vanish
    for (int i = 0; i < r; ++i)
      for (const auto& [j, val] : s.row(i))
        CHECK(i == j);
    // diagonal-only route agrees
    CHECK(smith_diagonal(m) == diag);
  }
}

TEST_CASE("smith: |det| equals product of the diagonal") {
  std::mt19937_64 rng(0xDEC0DE);
  std::uniform_int_distribution<int> entry(-6, 6);
  std::uniform_int_distribution<int> size(1, 7);
  for (int trial = 0; trial < 40; ++trial) {
    int n = size(rng);
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.set(i, j, entry(rng));
    CHECK(abs_det(m) == abs(bareiss_det(m)));
  }
}

TEST_CASE("cokernel: pinned examples") {
  CHECK(cokernel(IntMatrix(0, 0)).is_trivial());
  CHECK(cokernel(from_rows({{3}})) == AbelianGroup{0, {3}});
  CHECK(cokernel(from_rows({{1, 3}, {-1, -2}})).is_trivial());
  // coker of the zero map Z^0 -> Z^2 is free of rank 2
  CHECK(cokernel(IntMatrix(2, 0)) == AbelianGroup{2, {}});
  CHECK(cokernel(from_rows({{2, 0}, {0, 0}})) == AbelianGroup{1, {2}});
}

TEST_CASE("field_rank: pinned examples and SNF cross-check") {
  CHECK(field_rank(from_rows({{1, 1}, {1, 1}}), Field::F2) == 1);
  CHECK(field_rank(from_rows({{2}}), Field::F2) == 0);
  CHECK(field_rank(from_rows({{2}}), Field::Q) == 1);

  std::mt19937_64 rng(0xFEED);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int trial = 0; trial < 15; ++trial) {
    IntMatrix m(20, 20);
    for (int i = 0; i < 20; ++i)
      for (int j = 0; j < 20; ++j) m.set(i, j, entry(rng));
    CHECK(field_rank(m, Field::Q) == integer_rank(m));
  }
}

TEST_CASE("abelian groups: invariant factors and direct sums") {
  AbelianGroup a{1, {Int(2)}};
  AbelianGroup b{0, {Int(3)}};
  AbelianGroup s = direct_sum(a, b);
  CHECK(s.free_rank == 1);
  REQUIRE(s.torsion.size() == 1);
  CHECK(s.torsion[0] == 6);
  CHECK(s.to_string() == "Z + Z/6");

  AbelianGroup t = direct_sum(AbelianGroup{0, {Int(2)}}, AbelianGroup{0, {Int(4)}});
  CHECK(t == AbelianGroup{0, {Int(2), Int(4)}});
}

TEST_CASE("complex homology: zero differential and multiplication by 2") {
  // zero differentials: homology equals the chain groups
  GradedComplex c0(Ring::Z, 0);
  c0.add_degree({1, -1});
  c0.add_degree({1});
  auto t0 = complex_homology(c0);
  CHECK(t0.free_rank(0, 1) == 1);
  CHECK(t0.free_rank(0, -1) == 1);
  CHECK(t0.free_rank(1, 1) == 1);

  // Z --x2--> Z: homology (0; Z/2) in degree 1
  GradedComplex c1(Ring::Z, 0);
  c1.add_degree({0});
  c1.add_degree({0});
  c1.add_entry(0, 0, 0, 2);
  auto t1 = complex_homology(c1);
  CHECK(t1.free_rank(0, 0) == 0);
  const auto* e = t1.find(1, 0);
  REQUIRE(e != nullptr);
  CHECK(e->free_rank == 0);
  CHECK(e->torsion == std::vector<Int>{Int(2)});

  // same complex over F2: dimensions 1 and 1
  GradedComplex c2(Ring::F2, 0);
  c2.add_degree({0});
  c2.add_degree({0});
  c2.add_entry(0, 0, 0, 2);
  auto t2 = complex_homology(c2);
  CHECK(t2.free_rank(0, 0) == 1);
  CHECK(t2.free_rank(1, 0) == 1);
}

TEST_CASE("complex homology: d.d violation is reported with its bidegree") {
  GradedComplex c(Ring::Z, -1);
  c.add_degree({5});
  c.add_degree({5});
  c.add_degree({5});
  c.add_entry(0, 0, 0, 1);
  c.add_entry(1, 0, 0, 1);
  auto bad = c.d_squared_violation();
  REQUIRE(bad.has_value());
  CHECK(bad->first == -1);
  CHECK(bad->second == 5);
  CHECK_THROWS_AS(complex_homology(c), khdet::validation_error);
}

TEST_CASE("laurent arithmetic basics") {
  using khdet::invariants::Laurent;
  Laurent p = Laurent::from_terms({{2, Int(1)}, {0, Int(-1)}});   // q^2 - 1
  Laurent d = Laurent::from_terms({{1, Int(1)}, {-1, Int(1)}});   // q + q^-1
  auto q = (p).divided_exactly(d.shifted(0));
  REQUIRE(q.has_value());
  CHECK(*q == Laurent::monomial(1, 1));  // (q^2-1)/(q+q^-1) = q
  CHECK(p.to_string() == "q^2 - 1");
  CHECK((p * d).term_count() == 4);
  CHECK(p.inverted() == Laurent::from_terms({{-2, Int(1)}, {0, Int(-1)}}));

  // display layer: q-exponents print as halved powers of t
  Laurent hopf = Laurent::from_terms({{5, Int(1)}, {1, Int(1)}});
  CHECK(hopf.to_t_string() == "t^(5/2) + t^(1/2)");
  Laurent tre = Laurent::from_terms({{8, Int(-1)}, {6, Int(1)}, {2, Int(1)}});
  CHECK(tre.to_t_string() == "-t^4 + t^3 + t");

  using khdet::invariants::cyclotomic_polynomial;
  CHECK(cyclotomic_polynomial(1) == Laurent::from_terms({{1, Int(1)}, {0, Int(-1)}}));
  CHECK(cyclotomic_polynomial(2) == Laurent::from_terms({{1, Int(1)}, {0, Int(1)}}));
  CHECK(cyclotomic_polynomial(6) ==
        Laurent::from_terms({{2, Int(1)}, {1, Int(-1)}, {0, Int(1)}}));
  // Phi_12(x) = x^4 - x^2 + 1
  CHECK(cyclotomic_polynomial(12) ==
        Laurent::from_terms({{4, Int(1)}, {2, Int(-1)}, {0, Int(1)}}));
}
