#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "khdet/abelian.hpp"
#include "khdet/errors.hpp"

namespace khdet::torusbundle {

using homalg::AbelianGroup;
using homalg::Int;

/// A determinant-one 2x2 integer matrix [[a, b], [c, d]].
struct SL2Z {
  Int a, b, c, d;

  SL2Z(Int a_, Int b_, Int c_, Int d_);
  static SL2Z identity() { return {1, 0, 0, 1}; }

  Int trace() const { return a + d; }
  SL2Z operator*(const SL2Z& rhs) const;
  SL2Z inverse() const;
  bool operator==(const SL2Z&) const = default;
  /// Lexicographic on (a, b, c, d); used to pick canonical representatives.
  bool operator<(const SL2Z& rhs) const;

  std::string to_string() const;
};

/// Monodromy of the torus bundle double-covering the cabled Hopf link with
/// twist parameters (m, n): [[mn - 1, n], [-m, -1]].
SL2Z hopf_cable_monodromy(long m, long n);

/// H1 of the mapping torus of A: Z + coker(A - I), by Mayer-Vietoris on the
/// splitting along a fiber.
AbelianGroup torus_bundle_h1(const SL2Z& a);

/// Least k with A^k = I, or nullopt when A has infinite order. Finite order
/// in SL(2,Z) forces |trace| < 2 (or A = +-I) and divides 12.
std::optional<int> monodromy_order(const SL2Z& a);

/// Representatives of the conjugacy classes of SL(2,Z) matrices with trace in
/// `traces` and entries bounded by entry_bound, found by closing each matrix
/// under conjugation by the standard generators while entries stay within
/// orbit_bound. A bounded search, reported as a check: classes that only
/// merge beyond the working bound would be counted separately.
std::vector<SL2Z> enumerate_trace_classes(const std::set<long>& traces,
                                          long entry_bound, long orbit_bound = 50);

/// Arithmetic summary of one cabled-Hopf monodromy.
struct BundleClassification {
  long m = 0, n = 0;
  SL2Z monodromy = SL2Z::identity();
  Int trace;                // = mn - 2
  Int det_a_minus_i;        // = 4 - mn
  AbelianGroup h1;          // Z iff det(A - I) = +-1 iff trace in {1, 3}
  std::optional<int> order;
  bool trefoil_surgery_type = false;  // trace == 1, i.e. mn == 3
};

BundleClassification classify_hopf_cable(long m, long n);

}  // namespace khdet::torusbundle
