#include "khdet/torusbundle.hpp"

#include <array>
#include <map>
#include <numeric>
#include <sstream>

#include "khdet/errors.hpp"
#include "khdet/int_matrix.hpp"
#include "khdet/smith.hpp"

namespace khdet::torusbundle {

SL2Z::SL2Z(Int a_, Int b_, Int c_, Int d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
  if (a * d - b * c != 1)
    throw validation_error("matrix " + to_string() + " has determinant != 1");
}

SL2Z SL2Z::operator*(const SL2Z& rhs) const {
  return {a * rhs.a + b * rhs.c, a * rhs.b + b * rhs.d, c * rhs.a + d * rhs.c,
          c * rhs.b + d * rhs.d};
}

SL2Z SL2Z::inverse() const { return {d, -b, -c, a}; }

bool SL2Z::operator<(const SL2Z& rhs) const {
  if (a != rhs.a) return a < rhs.a;
  if (b != rhs.b) return b < rhs.b;
  if (c != rhs.c) return c < rhs.c;
  return d < rhs.d;
}

std::string SL2Z::to_string() const {
  std::ostringstream os;
  os << "[[" << a.get_str() << "," << b.get_str() << "],[" << c.get_str() << ","
     << d.get_str() << "]]";
  return os.str();
}

SL2Z hopf_cable_monodromy(long m, long n) {
  Int mm(m), nn(n);
  return {mm * nn - 1, nn, -mm, -1};
}

AbelianGroup torus_bundle_h1(const SL2Z& a) {
  homalg::IntMatrix m(2, 2);
  m.set(0, 0, a.a - 1);
  m.set(0, 1, a.b);
  m.set(1, 0, a.c);
  m.set(1, 1, a.d - 1);
  AbelianGroup fiber = homalg::cokernel(m);
  ++fiber.free_rank;  // the base circle
  return fiber;
}

std::optional<int> monodromy_order(const SL2Z& a) {
  const SL2Z id = SL2Z::identity();
  if (a == id) return 1;
  Int t = abs(a.trace());
  if (t >= 2) {
    if (a == SL2Z(-1, 0, 0, -1)) return 2;
    return std::nullopt;  // parabolic or hyperbolic
  }
  SL2Z p = a;
  for (int k = 1; k <= 12; ++k) {
    if (p == id) return k;
    p = p * a;
  }
  throw internal_check_error("elliptic element of order > 12 in SL(2,Z)");
}

std::vector<SL2Z> enumerate_trace_classes(const std::set<long>& traces, long entry_bound,
                                          long orbit_bound) {
  if (entry_bound < 3)
    throw validation_error("entry bound too small to seed the search");
  if (orbit_bound < entry_bound)
    throw validation_error("orbit working bound smaller than the entry bound");

  using Key = std::array<long, 4>;
  auto key_of = [](const SL2Z& m) -> Key {
    return {m.a.get_si(), m.b.get_si(), m.c.get_si(), m.d.get_si()};
  };
  auto in_bound = [](const SL2Z& m, long bound) {
    return abs(m.a) <= bound && abs(m.b) <= bound && abs(m.c) <= bound &&
           abs(m.d) <= bound;
  };

  // seeds: all bounded matrices with the wanted traces
  std::vector<SL2Z> seeds;
  for (long t : traces)
    for (long a = -entry_bound; a <= entry_bound; ++a) {
      long d = t - a;
      if (std::abs(d) > entry_bound) continue;
      long det_rest = a * d - 1;  // = b * c
      for (long b = -entry_bound; b <= entry_bound; ++b) {
        if (b == 0) {
          if (det_rest != 0) continue;
          for (long c = -entry_bound; c <= entry_bound; ++c)
            seeds.push_back(SL2Z(a, 0, c, d));
          continue;
        }
        if (det_rest % b != 0) continue;
        long c = det_rest / b;
        if (std::abs(c) > entry_bound) continue;
        seeds.push_back(SL2Z(a, b, c, d));
      }
    }
  if (seeds.empty()) return {};

  // grow conjugation orbits inside the working bound, merging classes that
  // touch; union-find over class ids
  std::vector<int> parent;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  const SL2Z s(0, -1, 1, 0), t_gen(1, 1, 0, 1);
  const SL2Z gens[4] = {s, s.inverse(), t_gen, t_gen.inverse()};
  std::map<Key, int> cls;

  for (const SL2Z& seed : seeds) {
    if (cls.count(key_of(seed))) continue;
    int id = static_cast<int>(parent.size());
    parent.push_back(id);
    std::vector<SL2Z> queue{seed};
    cls[key_of(seed)] = id;
    while (!queue.empty()) {
      SL2Z m = queue.back();
      queue.pop_back();
      for (const SL2Z& g : gens) {
        SL2Z conj = g * m * g.inverse();
        if (!in_bound(conj, orbit_bound)) continue;
        auto [it, inserted] = cls.try_emplace(key_of(conj), id);
        if (inserted) {
          queue.push_back(conj);
        } else if (find(it->second) != find(id)) {
          parent[find(it->second)] = find(id);
        }
      }
    }
  }

  // canonical representative: lexicographically least member of each orbit
  std::map<int, SL2Z> reps;
  for (const auto& [key, id] : cls) {
    SL2Z m(key[0], key[1], key[2], key[3]);
    int root = find(id);
    auto it = reps.find(root);
    if (it == reps.end())
      reps.emplace(root, m);
    else if (m < it->second)
      it->second = m;
  }
  std::vector<SL2Z> out;
  for (const auto& [root, m] : reps) out.push_back(m);
  std::sort(out.begin(), out.end());
  return out;
}

BundleClassification classify_hopf_cable(long m, long n) {
  BundleClassification rec;
  rec.m = m;
  rec.n = n;
  rec.monodromy = hopf_cable_monodromy(m, n);
  rec.trace = rec.monodromy.trace();
  rec.det_a_minus_i = Int(4) - Int(m) * Int(n);
  rec.h1 = torus_bundle_h1(rec.monodromy);
  rec.order = monodromy_order(rec.monodromy);
  rec.trefoil_surgery_type = (rec.trace == 1);
  return rec;
}

}  // namespace khdet::torusbundle
