#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace khdet::invariants {

using Int = mpz_class;

/// Integer Laurent polynomial in one formal variable. The engine stores all
/// Jones-type polynomials in the variable q = t^(1/2), so exponents stay
/// integral; the display layer converts back to half-integer powers of t.
class Laurent {
public:
  Laurent() = default;
  /// Monomial c * q^e.
  static Laurent monomial(Int c, int e);
  static Laurent one() { return monomial(1, 0); }
  /// From (exponent, coefficient) pairs.
  static Laurent from_terms(const std::vector<std::pair<int, Int>>& terms);

  bool is_zero() const { return coeffs_.empty(); }
  int term_count() const { return static_cast<int>(coeffs_.size()); }
  int min_exp() const;
  int max_exp() const;
  /// max_exp - min_exp for nonzero polynomials.
  int span() const;
  Int coeff(int e) const;
  const std::map<int, Int>& terms() const { return coeffs_; }

  Laurent operator+(const Laurent& rhs) const;
  Laurent operator-(const Laurent& rhs) const;
  Laurent operator*(const Laurent& rhs) const;
  Laurent operator-() const;
  bool operator==(const Laurent&) const = default;

  /// Multiply by q^k.
  Laurent shifted(int k) const;
  /// q -> q^(-1).
  Laurent inverted() const;
  /// Substitute q -> q^k (k >= 1).
  Laurent stretched(int k) const;

  /// Exact division; nullopt when rhs does not divide this.
  std::optional<Laurent> divided_exactly(const Laurent& rhs) const;

  /// Evaluate at an integer point (requires min_exp >= 0 or x = +-1).
  Int evaluate(const Int& x) const;

  std::string to_string(const std::string& var = "q") const;
  /// Render with exponents halved, as powers of t: exponent 2k prints as
  /// t^k, exponent 2k+1 as t^(k+1/2).
  std::string to_t_string() const;

private:
  void trim();
  std::map<int, Int> coeffs_;
};

/// The d-th cyclotomic polynomial (in the polynomial's own variable).
Laurent cyclotomic_polynomial(int d);

}  // namespace khdet::invariants
