#include "khdet/laurent.hpp"

#include <sstream>

#include "khdet/errors.hpp"

namespace khdet::invariants {

Laurent Laurent::monomial(Int c, int e) {
  Laurent p;
  if (c != 0) p.coeffs_[e] = std::move(c);
  return p;
}

Laurent Laurent::from_terms(const std::vector<std::pair<int, Int>>& terms) {
  Laurent p;
  for (const auto& [e, c] : terms) {
    p.coeffs_[e] += c;
  }
  p.trim();
  return p;
}

void Laurent::trim() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->second == 0)
      it = coeffs_.erase(it);
    else
      ++it;
  }
}

int Laurent::min_exp() const {
  if (is_zero()) throw validation_error("min_exp of zero polynomial");
  return coeffs_.begin()->first;
}

int Laurent::max_exp() const {
  if (is_zero()) throw validation_error("max_exp of zero polynomial");
  return coeffs_.rbegin()->first;
}

int Laurent::span() const { return max_exp() - min_exp(); }

Int Laurent::coeff(int e) const {
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? Int(0) : it->second;
}

Laurent Laurent::operator+(const Laurent& rhs) const {
  Laurent out = *this;
  for (const auto& [e, c] : rhs.coeffs_) out.coeffs_[e] += c;
  out.trim();
  return out;
}

Laurent Laurent::operator-(const Laurent& rhs) const {
  Laurent out = *this;
  for (const auto& [e, c] : rhs.coeffs_) out.coeffs_[e] -= c;
  out.trim();
  return out;
}

Laurent Laurent::operator-() const {
  Laurent out;
  for (const auto& [e, c] : coeffs_) out.coeffs_[e] = -c;
  return out;
}

Laurent Laurent::operator*(const Laurent& rhs) const {
  Laurent out;
  for (const auto& [e1, c1] : coeffs_)
    for (const auto& [e2, c2] : rhs.coeffs_) out.coeffs_[e1 + e2] += c1 * c2;
  out.trim();
  return out;
}

Laurent Laurent::shifted(int k) const {
  Laurent out;
  for (const auto& [e, c] : coeffs_) out.coeffs_[e + k] = c;
  return out;
}

Laurent Laurent::inverted() const {
  Laurent out;
  for (const auto& [e, c] : coeffs_) out.coeffs_[-e] = c;
  return out;
}

Laurent Laurent::stretched(int k) const {
  if (k < 1) throw validation_error("stretched: factor must be positive");
  Laurent out;
  for (const auto& [e, c] : coeffs_) out.coeffs_[e * k] = c;
  return out;
}

std::optional<Laurent> Laurent::divided_exactly(const Laurent& rhs) const {
  if (rhs.is_zero()) throw validation_error("division by zero polynomial");
  if (is_zero()) return Laurent();
  // Long division from the top; works in Z[q, q^-1] since leading units shift
  // freely. Fails (nullopt) when a leading coefficient does not divide.
  Laurent rem = *this;
  Laurent quot;
  const int dlead = rhs.max_exp();
  const Int& dc = rhs.coeffs_.rbegin()->second;
  while (!rem.is_zero() && rem.span() >= rhs.span()) {
    const Int& rc = rem.coeffs_.rbegin()->second;
    if (rc % dc != 0) return std::nullopt;
    Int q = rc / dc;
    int shift = rem.max_exp() - dlead;
    Laurent piece = monomial(q, shift);
    quot = quot + piece;
    rem = rem - piece * rhs;
  }
  if (!rem.is_zero()) return std::nullopt;
  return quot;
}

Int Laurent::evaluate(const Int& x) const {
  Int acc = 0;
  for (const auto& [e, c] : coeffs_) {
    if (e < 0) {
      if (x == 1) {
        acc += c;
        continue;
      }
      if (x == -1) {
        acc += (e % 2 == 0 ? c : -c);
        continue;
      }
      throw validation_error("evaluate: negative exponent at non-unit point");
    }
    Int p;
    mpz_pow_ui(p.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(e));
    acc += c * p;
  }
  return acc;
}

std::string Laurent::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest power first, matching how polynomials are usually displayed
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [e, c] = *it;
    Int a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || e == 0) os << a.get_str();
    if (e != 0) {
      if (a != 1) os << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

std::string Laurent::to_t_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [e, c] = *it;
    Int a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || e == 0) os << a.get_str();
    if (e != 0) {
      if (a != 1) os << "*";
      os << "t";
      if (e == 2) {
        // t^1
      } else if (e % 2 == 0) {
        os << "^" << (e / 2);
      } else {
        os << "^(" << e << "/2)";
      }
    }
  }
  return os.str();
}

Laurent cyclotomic_polynomial(int d) {
  if (d < 1) throw validation_error("cyclotomic index must be positive");
  thread_local std::map<int, Laurent> cache;
  if (auto it = cache.find(d); it != cache.end()) return it->second;
  // Phi_d(x) = (x^d - 1) / prod_{e | d, e < d} Phi_e(x)
  Laurent num = Laurent::monomial(1, d) - Laurent::one();
  for (int e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    auto q = num.divided_exactly(cyclotomic_polynomial(e));
    if (!q) throw internal_check_error("cyclotomic recursion: division failed");
    num = *q;
  }
  cache[d] = num;
  return num;
}

}  // namespace khdet::invariants
