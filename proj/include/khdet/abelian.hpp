#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace khdet::homalg {

using Int = mpz_class;

/// A finitely generated abelian group in invariant-factor form:
/// Z^free_rank + Z/d1 + Z/d2 + ... with d1 | d2 | ... and every di >= 2.
struct AbelianGroup {
  long free_rank = 0;
  std::vector<Int> torsion;

  bool operator==(const AbelianGroup&) const = default;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  bool is_finite() const { return free_rank == 0; }

  /// Order of the torsion subgroup (1 if none).
  Int torsion_order() const {
    Int o = 1;
    for (const Int& d : torsion) o *= d;
    return o;
  }

  /// "0", "Z", "Z^2 + Z/3 + Z/6", ...
  std::string to_string() const;

  static AbelianGroup trivial() { return {}; }
  static AbelianGroup free_of_rank(long r) { return {r, {}}; }
};

/// Direct sum, renormalized to a divisibility chain.
AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);

}  // namespace khdet::homalg
