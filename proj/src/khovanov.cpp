#include "khdet/khovanov.hpp"

#include <bit>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "khdet/smith.hpp"

namespace khdet::khovanov {

using diagram::PlanarDiagram;

ResolutionState resolve(const PlanarDiagram& d, std::uint64_t state_bits) {
  const int n = d.crossing_count();
  if (n > 0 && n < 64 && (state_bits >> n) != 0)
    throw validation_error("state has more bits than crossings");

  ResolutionState rs;
  rs.bits = state_bits;
  const int slots = 4 * n;
  std::vector<int> parent(slots);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto join = [&](int a, int b) { parent[find(a)] = find(b); };

  for (int e = 1; e <= d.edge_count(); ++e) {
    auto [tail, head] = d.edge_endpoints(e);
    join(4 * tail.crossing + tail.slot, 4 * head.crossing + head.slot);
  }
  for (int c = 0; c < n; ++c) {
    if ((state_bits >> c) & 1) {
      join(4 * c + 0, 4 * c + 1);
      join(4 * c + 2, 4 * c + 3);
    } else {
      join(4 * c + 0, 4 * c + 3);
      join(4 * c + 1, 4 * c + 2);
    }
  }

  rs.slot_circle.assign(slots, 0);
  std::vector<int> root_circle(slots, -1);
  int count = 0;
  for (int s = 0; s < slots; ++s) {
    int r = find(s);
    if (root_circle[r] < 0) root_circle[r] = count++;
    rs.slot_circle[s] = static_cast<std::uint8_t>(root_circle[r]);
  }
  // crossingless circles come after the traced ones
  rs.circles = count + d.unknotted_extras();
  return rs;
}

long ComplexOptions::default_max_generators() {
  static long cached = [] {
    if (const char* env = std::getenv("KHDET_MAX_GENERATORS")) {
      long v = std::atol(env);
      if (v > 0) return v;
    }
    return long(1) << 20;
  }();
  return cached;
}

namespace {

int popcount(std::uint64_t x) { return std::popcount(x); }

struct CubeLayout {
  int n = 0;
  int n_plus = 0, n_minus = 0;
  int slot_circles = 0;  // per state, circles excluding extras: rs.circles - extras
  std::vector<ResolutionState> states;       // indexed by state bits
  std::vector<long> gen_offset;              // offset of a state's block within its degree
  std::vector<std::vector<std::uint64_t>> by_weight;  // states per number of 1-bits
  int pointed_circle(const ResolutionState& rs) const { return pointed[rs.bits]; }
  std::vector<int> pointed;  // per state: circle carrying the basepoint, or -1
};

CubeLayout layout_cube(const PlanarDiagram& d, const ComplexOptions& opt, bool need_basepoint) {
  const int n = d.crossing_count();
  if (n >= 63) throw size_cap_error("too many crossings for the state cube");
  CubeLayout cl;
  cl.n = n;
  cl.n_plus = d.positive_crossings();
  cl.n_minus = d.negative_crossings();

  const std::uint64_t total_states = std::uint64_t(1) << n;
  cl.states.resize(total_states);
  cl.gen_offset.assign(total_states, 0);
  cl.by_weight.assign(n + 1, {});
  cl.pointed.assign(total_states, -1);

  int basepoint_slot = -1;
  if (need_basepoint && d.basepoint_edge()) {
    auto [tail, head] = d.edge_endpoints(*d.basepoint_edge());
    basepoint_slot = 4 * tail.crossing + tail.slot;
  } else if (need_basepoint) {
    if (d.unknotted_extras() == 0)
      throw validation_error("reduced homology needs a basepoint edge");
    // point the first crossingless circle
  }

  long total_gens = 0;
  std::vector<long> degree_size(n + 1, 0);
  for (std::uint64_t s = 0; s < total_states; ++s) {
    cl.states[s] = resolve(d, s);
    const ResolutionState& rs = cl.states[s];
    if (rs.circles > 30) throw size_cap_error("too many circles in a resolution");
    int r = popcount(s);
    long block = long(1) << rs.circles;
    if (need_basepoint) block >>= 1;
    cl.gen_offset[s] = degree_size[r];
    degree_size[r] += block;
    total_gens += block;
    if (total_gens > opt.max_generators)
      throw size_cap_error("complex would exceed the generator cap (" +
                           std::to_string(opt.max_generators) + ")");
    cl.by_weight[r].push_back(s);
    if (need_basepoint) {
      cl.pointed[s] = basepoint_slot >= 0
                          ? rs.slot_circle[basepoint_slot]
                          : rs.circles - d.unknotted_extras();  // first extra circle
    }
  }
  return cl;
}

// Circle correspondence between a state and the state with one more 1-bit at
// crossing c. Unaffected circles match by any shared slot; extras shift.
struct EdgeMap {
  bool merge = false;
  int u = 0, v = 0;   // source circles at the crossing (merge: u != v)
  int w1 = 0, w2 = 0; // target circles (merge: w1 == w2)
  std::vector<int> fwd;  // source circle -> target circle (u, v entries unused on split)
};

EdgeMap edge_map(const PlanarDiagram& d, const ResolutionState& from,
                 const ResolutionState& to, int c) {
  EdgeMap em;
  em.u = from.slot_circle[4 * c + 0];
  em.v = from.slot_circle[4 * c + 1];
  em.w1 = to.slot_circle[4 * c + 0];
  em.w2 = to.slot_circle[4 * c + 2];
  em.merge = (em.u != em.v);
  em.fwd.assign(from.circles, -1);
  for (std::size_t slot = 0; slot < from.slot_circle.size(); ++slot)
    em.fwd[from.slot_circle[slot]] = to.slot_circle[slot];
  const int extras = d.unknotted_extras();
  const int from_traced = from.circles - extras;
  const int to_traced = to.circles - extras;
  for (int k = 0; k < extras; ++k) em.fwd[from_traced + k] = to_traced + k;
  if (em.merge) {
    em.fwd[em.u] = em.w1;
    em.fwd[em.v] = em.w1;
  }
  return em;
}

}  // namespace

GradedComplex khovanov_complex(const PlanarDiagram& d, Ring ring, const ComplexOptions& opt) {
  if (opt.reduced && ring != Ring::F2)
    throw validation_error("reduced homology is only computed over F2");
  if (opt.lee && ring != Ring::Q)
    throw validation_error("the filtered deformation requires Q coefficients");
  if (opt.lee && opt.reduced)
    throw validation_error("reduced filtered complex not supported");

  CubeLayout cl = layout_cube(d, opt, opt.reduced);
  const int n = cl.n;
  const int jshift = cl.n_plus - 2 * cl.n_minus + (opt.reduced ? 1 : 0);

  GradedComplex complex(ring, -cl.n_minus, opt.lee);

  // Generator order within a degree: states ascending, labelings ascending.
  // A labeling is a bitmask over circles; bit = 1 labels the circle x
  // (degree -1), bit = 0 labels it 1 (degree +1). Reduced blocks keep only
  // labelings with the pointed circle labeled x, reindexed densely.
  auto gen_index = [&](const CubeLayout& lay, std::uint64_t s, std::uint32_t label) -> long {
    if (!opt.reduced) return lay.gen_offset[s] + label;
    int p = lay.pointed[s];
    if (!((label >> p) & 1))
      throw internal_check_error("reduced complex left the pointed subspace");
    // labelings with bit p set, in ascending order: drop bit p
    std::uint32_t low = label & ((std::uint32_t(1) << p) - 1);
    std::uint32_t high = label >> (p + 1);
    return lay.gen_offset[s] + ((static_cast<long>(high) << p) | low);
  };

  for (int r = 0; r <= n; ++r) {
    std::vector<int> jgrades;
    for (std::uint64_t s : cl.by_weight[r]) {
      const ResolutionState& rs = cl.states[s];
      const std::uint32_t labels = std::uint32_t(1) << rs.circles;
      for (std::uint32_t label = 0; label < labels; ++label) {
        if (opt.reduced && !((label >> cl.pointed[s]) & 1)) continue;
        int deg = rs.circles - 2 * popcount(label);
        jgrades.push_back(deg + r + jshift);
      }
    }
    complex.add_degree(std::move(jgrades));
  }

  for (int r = 0; r < n; ++r) {
    for (std::uint64_t s : cl.by_weight[r]) {
      const ResolutionState& rs = cl.states[s];
      for (int c = 0; c < n; ++c) {
        if ((s >> c) & 1) continue;
        std::uint64_t t = s | (std::uint64_t(1) << c);
        const ResolutionState& rt = cl.states[t];
        const int sign = (popcount(s & ((std::uint64_t(1) << c) - 1)) & 1) ? -1 : 1;
        EdgeMap em = edge_map(d, rs, rt, c);

        const std::uint32_t labels = std::uint32_t(1) << rs.circles;
        for (std::uint32_t label = 0; label < labels; ++label) {
          if (opt.reduced && !((label >> cl.pointed[s]) & 1)) continue;
          long src = gen_index(cl, s, label);

          // transport the labels of untouched circles
          std::uint32_t base = 0;
          for (int k = 0; k < rs.circles; ++k) {
            if (!em.merge && k == em.u) continue;
            if (em.merge && (k == em.u || k == em.v)) continue;
            if ((label >> k) & 1) base |= std::uint32_t(1) << em.fwd[k];
          }

          auto emit = [&](std::uint32_t target_label, int coef) {
            complex.add_entry(r, static_cast<int>(gen_index(cl, t, target_label)),
                              static_cast<int>(src), sign * coef);
          };

          if (em.merge) {
            bool xu = (label >> em.u) & 1, xv = (label >> em.v) & 1;
            std::uint32_t wbit = std::uint32_t(1) << em.w1;
            if (!xu && !xv) {
              emit(base, 1);  // 1*1 -> 1
            } else if (xu != xv) {
              emit(base | wbit, 1);  // 1*x -> x
            } else {
              // x*x -> 0; the deformation adds x*x -> 1
              if (opt.lee) emit(base, 1);
            }
          } else {
            bool xu = (label >> em.u) & 1;
            std::uint32_t b1 = std::uint32_t(1) << em.w1;
            std::uint32_t b2 = std::uint32_t(1) << em.w2;
            if (xu) {
              emit(base | b1 | b2, 1);  // x -> x*x
              if (opt.lee) emit(base, 1);  // deformation: x -> 1*1
            } else {
              emit(base | b2, 1);  // 1 -> 1*x + x*1
              emit(base | b1, 1);
            }
          }
        }
      }
    }
  }

#ifndef NDEBUG
  if (auto bad = complex.d_squared_violation())
    throw internal_check_error("cube differential does not square to zero");
#endif
  return complex;
}

BigradedTable khovanov_homology(const PlanarDiagram& d, Ring ring, bool reduced,
                                long max_generators) {
  ComplexOptions opt;
  opt.reduced = reduced;
  opt.max_generators = max_generators;
  return complex_homology(khovanov_complex(d, ring, opt));
}

long lee_rank(const PlanarDiagram& d, long max_generators) {
  ComplexOptions opt;
  opt.lee = true;
  opt.max_generators = max_generators;
  GradedComplex c = khovanov_complex(d, Ring::Q, opt);

  // The deformed differential changes the quantum degree by 0 or +4, so each
  // homological matrix is block diagonal over j mod 4.
  auto rank_of = [&](int r) -> long {
    long rank = 0;
    for (int residue = 0; residue < 4; ++residue) {
      std::vector<int> src, dst;
      std::vector<int> src_pos(c.dim(r), -1), dst_pos(c.dim(r + 1), -1);
      for (int k = 0; k < c.dim(r); ++k)
        if (((c.jgrades(r)[k] % 4) + 4) % 4 == residue) {
          src_pos[k] = static_cast<int>(src.size());
          src.push_back(k);
        }
      for (int k = 0; k < c.dim(r + 1); ++k)
        if (((c.jgrades(r + 1)[k] % 4) + 4) % 4 == residue) {
          dst_pos[k] = static_cast<int>(dst.size());
          dst.push_back(k);
        }
      if (src.empty() || dst.empty()) continue;
      homalg::IntMatrix m(static_cast<int>(dst.size()), static_cast<int>(src.size()));
      for (const auto& trip : c.triplets(r)) {
        if (src_pos[trip.col] < 0) continue;
        if (dst_pos[trip.row] < 0)
          throw internal_check_error("deformed differential broke the mod-4 splitting");
        m.add_to(dst_pos[trip.row], src_pos[trip.col], trip.coef);
      }
      rank += homalg::field_rank(m, homalg::Field::Q);
    }
    return rank;
  };

  std::vector<long> ranks(c.length(), 0);
  for (int r = 0; r + 1 < c.length(); ++r) ranks[r] = rank_of(r);

  long total = 0;
  for (int r = 0; r < c.length(); ++r) {
    long out = r + 1 < c.length() ? ranks[r] : 0;
    long in = r > 0 ? ranks[r - 1] : 0;
    total += c.dim(r) - out - in;
  }
  return total;
}

long total_rank(const BigradedTable& table) { return table.total_rank(); }

PoincarePolynomial::PoincarePolynomial(const BigradedTable& table) {
  for (const auto& [ij, e] : table.cells())
    if (e.free_rank != 0) terms_[ij] = e.free_rank;
}

std::string PoincarePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [ij, coef] : terms_) {
    const auto& [i, j] = ij;
    if (!first) os << " + ";
    first = false;
    if (coef != 1 || (i == 0 && j == 0)) os << coef;
    bool need_space = coef != 1;
    if (i != 0) {
      if (need_space) os << " ";
      os << (i == 1 ? "t" : "t^" + std::to_string(i));
      need_space = true;
    }
    if (j != 0) {
      if (need_space) os << " ";
      os << (j == 1 ? "q" : "q^" + std::to_string(j));
    }
  }
  return os.str();
}

}  // namespace khdet::khovanov
