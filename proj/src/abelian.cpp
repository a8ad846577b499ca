#include "khdet/abelian.hpp"

#include <sstream>

#include "khdet/int_matrix.hpp"
#include "khdet/smith.hpp"

namespace khdet::homalg {

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  auto sep = [&]() {
    if (!first) os << " + ";
    first = false;
  };
  if (free_rank == 1) {
    sep();
    os << "Z";
  } else if (free_rank > 1) {
    sep();
    os << "Z^" << free_rank;
  }
  for (const Int& d : torsion) {
    sep();
    os << "Z/" << d.get_str();
  }
  return os.str();
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<Int> all = a.torsion;
  all.insert(all.end(), b.torsion.begin(), b.torsion.end());
  AbelianGroup out = cokernel(IntMatrix::diagonal(all));
  out.free_rank = a.free_rank + b.free_rank;
  return out;
}

}  // namespace khdet::homalg
