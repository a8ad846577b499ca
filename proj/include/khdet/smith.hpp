#pragma once

#include <vector>

#include "khdet/abelian.hpp"
#include "khdet/int_matrix.hpp"

namespace khdet::homalg {

enum class Field { F2, Q };

/// U * M * V = S with S diagonal, the diagonal a divisibility chain of
/// non-negative integers, and U, V unimodular.
struct SmithResult {
  IntMatrix s;
  IntMatrix u;
  IntMatrix v;
};

SmithResult smith_normal_form(const IntMatrix& m);

/// The nonzero diagonal of the Smith form (divisibility chain, all positive).
/// Cheaper than smith_normal_form: no transform tracking.
std::vector<Int> smith_diagonal(const IntMatrix& m);

/// coker(Z^cols -> Z^rows) presented by m, as (free rank, invariant factors).
AbelianGroup cokernel(const IntMatrix& m);

/// Rank of m over the given field.
int field_rank(const IntMatrix& m, Field field);

/// Rank of m over Z (= over Q).
int integer_rank(const IntMatrix& m);

/// |det m| for square m, as the product of the Smith diagonal.
Int abs_det(const IntMatrix& m);

/// True iff m is square with |det| = 1.
bool is_unimodular(const IntMatrix& m);

}  // namespace khdet::homalg
