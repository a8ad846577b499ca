#include "khdet/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace khdet::diagram {

namespace {

// Union-find with parity: weight[x] = value(x) XOR value(parent(x)).
struct ParityUF {
  std::vector<int> parent;
  std::vector<unsigned char> weight;

  explicit ParityUF(int n) : parent(n), weight(n, 0) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  std::pair<int, int> find(int x) {
    if (parent[x] == x) return {x, 0};
    auto [root, w] = find(parent[x]);
    parent[x] = root;
    weight[x] ^= w;
    return {x == root ? x : root, weight[x]};
  }

  // declare value(a) XOR value(b) = parity; false on contradiction
  bool join(int a, int b, int parity) {
    auto [ra, wa] = find(a);
    auto [rb, wb] = find(b);
    if (ra == rb) return (wa ^ wb) == parity;
    parent[ra] = rb;
    weight[ra] = wa ^ wb ^ parity;
    return true;
  }
};

}  // namespace

PlanarDiagram PlanarDiagram::from_crossings(const std::vector<std::array<int, 4>>& tuples,
                                            int unknotted_extras,
                                            std::optional<int> basepoint) {
  if (unknotted_extras < 0) throw validation_error("negative circle count");

  PlanarDiagram d;
  d.unknotted_extras_ = unknotted_extras;
  const int n = static_cast<int>(tuples.size());

  // Edge labels must be 1..2n, each appearing exactly twice.
  std::map<int, int> uses;
  for (const auto& t : tuples)
    for (int e : t) {
      if (e < 1) throw validation_error("edge labels must be positive");
      ++uses[e];
    }
  for (const auto& [e, k] : uses)
    if (k != 2)
      throw validation_error("edge " + std::to_string(e) + " appears " +
                             std::to_string(k) + " times (expected 2)");
  d.edge_count_ = 2 * n;
  for (int e = 1; e <= d.edge_count_; ++e)
    if (!uses.count(e))
      throw validation_error("edge labels not contiguous: missing " + std::to_string(e));

  if (basepoint) {
    if (*basepoint < 1 || *basepoint > d.edge_count_)
      throw validation_error("basepoint edge does not exist");
    d.basepoint_ = basepoint;
  }
  if (n == 0) {
    if (unknotted_extras == 0) throw validation_error("empty link (no components)");
    return d;
  }

  // endpoints of each edge, in tuple order
  std::vector<std::vector<Endpoint>> ends(d.edge_count_ + 1);
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) ends[tuples[c][s]].push_back({c, s});

  // Orientation: one boolean per crossing ("over-strand runs slot 1 -> 3"),
  // plus a constant TRUE node. inflow(c,0)=true, inflow(c,2)=false,
  // inflow(c,1)=x_c, inflow(c,3)=!x_c; each edge has exactly one inflow end.
  const int kTrue = n;
  ParityUF uf(n + 1);
  auto literal = [&](const Endpoint& p) -> std::pair<int, int> {
    switch (p.slot) {
      case 0:
        return {kTrue, 0};
      case 1:
        return {p.crossing, 0};
      case 2:
        return {kTrue, 1};
      default:
        return {p.crossing, 1};
    }
  };
  for (int e = 1; e <= d.edge_count_; ++e) {
    auto [v1, k1] = literal(ends[e][0]);
    auto [v2, k2] = literal(ends[e][1]);
    if (!uf.join(v1, v2, 1 ^ k1 ^ k2))
      throw validation_error("inconsistent orientation at edge " + std::to_string(e));
  }
  // Components never passing under are unconstrained; anchor the lowest
  // crossing of each free block to "forward".
  auto [troot, tw] = uf.find(kTrue);
  std::vector<int> root_value(n + 1, -1);
  root_value[troot] = 1 ^ tw;
  d.over_forward_.assign(n, false);
  for (int c = 0; c < n; ++c) {
    auto [r, w] = uf.find(c);
    if (root_value[r] < 0) root_value[r] = w ^ 1;  // x_c := true for the anchor
    d.over_forward_[c] = (root_value[r] ^ w) != 0;
  }

  d.crossings_.reserve(n);
  for (int c = 0; c < n; ++c)
    d.crossings_.push_back({tuples[c], d.over_forward_[c] ? +1 : -1});

  // tail/head per edge
  d.tail_.assign(d.edge_count_ + 1, {-1, -1});
  d.head_.assign(d.edge_count_ + 1, {-1, -1});
  auto inflow = [&](const Endpoint& p) -> bool {
    switch (p.slot) {
      case 0:
        return true;
      case 1:
        return d.over_forward_[p.crossing];
      case 2:
        return false;
      default:
        return !d.over_forward_[p.crossing];
    }
  };
  for (int e = 1; e <= d.edge_count_; ++e) {
    bool in0 = inflow(ends[e][0]);
    bool in1 = inflow(ends[e][1]);
    if (in0 == in1)
      throw validation_error("edge " + std::to_string(e) + " has no consistent direction");
    d.head_[e] = in0 ? ends[e][0] : ends[e][1];
    d.tail_[e] = in0 ? ends[e][1] : ends[e][0];
  }

  // trace components: entering a crossing at the head slot, leave at the
  // strand's other slot
  auto next_edge = [&](int e) {
    const Endpoint& h = d.head_[e];
    int out_slot;
    switch (h.slot) {
      case 0:
        out_slot = 2;
        break;
      case 1:
        out_slot = 3;
        break;
      case 3:
        out_slot = 1;
        break;
      default:
        throw internal_check_error("head endpoint at an outflow slot");
    }
    return tuples[h.crossing][out_slot];
  };
  std::vector<bool> seen(d.edge_count_ + 1, false);
  for (int e0 = 1; e0 <= d.edge_count_; ++e0) {
    if (seen[e0]) continue;
    std::vector<int> cycle;
    int e = e0;
    do {
      if (seen[e]) throw internal_check_error("component tracing revisited an edge");
      seen[e] = true;
      cycle.push_back(e);
      e = next_edge(e);
    } while (e != e0);
    d.components_.push_back(std::move(cycle));
  }
  return d;
}

int PlanarDiagram::writhe() const {
  int w = 0;
  for (const auto& c : crossings_) w += c.sign;
  return w;
}

int PlanarDiagram::positive_crossings() const {
  int k = 0;
  for (const auto& c : crossings_) k += (c.sign > 0);
  return k;
}

std::pair<Endpoint, Endpoint> PlanarDiagram::edge_endpoints(int e) const {
  if (e < 1 || e > edge_count_) throw validation_error("edge does not exist");
  return {tail_[e], head_[e]};
}

PlanarDiagram PlanarDiagram::with_basepoint(int edge) const {
  std::vector<std::array<int, 4>> tuples;
  tuples.reserve(crossings_.size());
  for (const auto& c : crossings_) tuples.push_back(c.edges);
  return from_crossings(tuples, unknotted_extras_, edge);
}

std::string PlanarDiagram::serialize() const {
  std::ostringstream os;
  os << "PD[";
  for (std::size_t i = 0; i < crossings_.size(); ++i) {
    if (i) os << ",";
    const auto& e = crossings_[i].edges;
    os << "X(" << e[0] << "," << e[1] << "," << e[2] << "," << e[3] << ")";
  }
  os << "]";
  if (unknotted_extras_ > 0) os << " + " << unknotted_extras_;
  return os.str();
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  void expect(char c) {
    skip_ws();
    if (i >= s.size() || s[i] != c)
      throw parse_error(std::string("expected '") + c + "'", i);
    ++i;
  }
  bool peek(char c) {
    skip_ws();
    return i < s.size() && s[i] == c;
  }
  void expect_word(const char* w) {
    skip_ws();
    for (const char* p = w; *p; ++p, ++i)
      if (i >= s.size() || s[i] != *p)
        throw parse_error(std::string("expected '") + w + "'", i);
  }
  int integer() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw parse_error("expected an integer", i);
    long v = 0;
    for (std::size_t k = start; k < i; ++k) {
      v = v * 10 + (s[k] - '0');
      if (v > 1000000) throw parse_error("integer too large", start);
    }
    return static_cast<int>(v);
  }
  void end() {
    skip_ws();
    if (i != s.size()) throw parse_error("trailing input", i);
  }
};

}  // namespace

PlanarDiagram parse_pd(const std::string& text) {
  Parser p{text};
  p.expect_word("PD");
  p.expect('[');
  std::vector<std::array<int, 4>> tuples;
  if (!p.peek(']')) {
    for (;;) {
      p.expect('X');
      p.expect('(');
      std::array<int, 4> t;
      for (int k = 0; k < 4; ++k) {
        t[k] = p.integer();
        if (k < 3) p.expect(',');
      }
      p.expect(')');
      tuples.push_back(t);
      if (p.peek(',')) {
        p.expect(',');
        continue;
      }
      break;
    }
  }
  p.expect(']');
  int extras = 0;
  if (p.peek('+')) {
    p.expect('+');
    extras = p.integer();
  }
  p.end();
  return PlanarDiagram::from_crossings(tuples, extras);
}

namespace {

// Relabel arbitrary positive edge ids to contiguous 1..2n, preserving order.
std::vector<std::array<int, 4>> renumber(const std::vector<std::array<int, 4>>& tuples) {
  std::vector<int> ids;
  for (const auto& t : tuples)
    for (int e : t) ids.push_back(e);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::map<int, int> remap;
  for (std::size_t k = 0; k < ids.size(); ++k) remap[ids[k]] = static_cast<int>(k) + 1;
  std::vector<std::array<int, 4>> out = tuples;
  for (auto& t : out)
    for (int& e : t) e = remap[e];
  return out;
}

}  // namespace

PlanarDiagram braid_closure(const std::vector<int>& word, int strands) {
  if (strands < 1) throw validation_error("braid needs at least one strand");
  for (int g : word)
    if (g == 0 || std::abs(g) >= strands)
      throw validation_error("braid generator index out of range");

  // current[p] = edge id riding strand position p (1-based positions)
  std::vector<int> current(strands + 1);
  for (int p = 1; p <= strands; ++p) current[p] = p;
  int fresh = strands;
  std::vector<std::array<int, 4>> tuples;
  std::vector<bool> touched(strands + 1, false);

  for (int g : word) {
    int i = std::abs(g);
    int u = current[i], v = current[i + 1];
    int x = ++fresh, y = ++fresh;
    if (g > 0) {
      // strand at position i passes over: under-strand enters from the right
      tuples.push_back({v, u, x, y});
    } else {
      tuples.push_back({u, x, y, v});
    }
    current[i] = x;
    current[i + 1] = y;
    touched[i] = touched[i + 1] = true;
  }

  // close up: final edge of each touched position is the initial one
  int extras = 0;
  std::map<int, int> glue;
  for (int p = 1; p <= strands; ++p) {
    if (!touched[p])
      ++extras;
    else
      glue[current[p]] = p;
  }
  for (auto& t : tuples)
    for (int& e : t)
      if (auto it = glue.find(e); it != glue.end()) e = it->second;

  return PlanarDiagram::from_crossings(renumber(tuples), extras);
}

PlanarDiagram hopf_cable(int m, int n) {
  // Closure of a 4-strand braid: strands 1,2 cable one Hopf component,
  // strands 3,4 the other. The two block crossings (sigma2 sigma3 sigma1
  // sigma2 twice) form the cabled clasp; sigma1^m and sigma3^n are the twist
  // regions. With both parameters non-positive the letters are all negated,
  // which is exactly the mirror diagram.
  const bool mirrored = (m <= 0 && n <= 0 && (m < 0 || n < 0));
  std::vector<int> word;
  const int clasp[8] = {2, 3, 1, 2, 2, 3, 1, 2};
  for (int g : clasp) word.push_back(mirrored ? -g : g);
  for (int k = 0; k < std::abs(m); ++k) word.push_back(m > 0 ? 1 : -1);
  for (int k = 0; k < std::abs(n); ++k) word.push_back(n > 0 ? 3 : -3);
  return braid_closure(word, 4);
}

PlanarDiagram mirror(const PlanarDiagram& d) {
  std::vector<std::array<int, 4>> tuples;
  tuples.reserve(d.crossing_count());
  for (int c = 0; c < d.crossing_count(); ++c) {
    const auto& e = d.crossings()[c].edges;
    // the old over-strand becomes the under-strand; start the tuple at its
    // incoming end, keeping the rotational order
    if (d.over_forward(c))
      tuples.push_back({e[1], e[2], e[3], e[0]});
    else
      tuples.push_back({e[3], e[0], e[1], e[2]});
  }
  return PlanarDiagram::from_crossings(tuples, d.unknotted_extras(), d.basepoint_edge());
}

PlanarDiagram disjoint_union(const PlanarDiagram& a, const PlanarDiagram& b) {
  std::vector<std::array<int, 4>> tuples;
  for (const auto& c : a.crossings()) tuples.push_back(c.edges);
  const int off = a.edge_count();
  for (const auto& c : b.crossings()) {
    std::array<int, 4> t = c.edges;
    for (int& e : t) e += off;
    tuples.push_back(t);
  }
  std::optional<int> basepoint = a.basepoint_edge();
  if (!basepoint && b.basepoint_edge()) basepoint = *b.basepoint_edge() + off;
  return PlanarDiagram::from_crossings(tuples, a.unknotted_extras() + b.unknotted_extras(),
                                       basepoint);
}

PlanarDiagram connected_sum(const PlanarDiagram& a, int edge_a, const PlanarDiagram& b,
                            int edge_b) {
  if (edge_a < 1 || edge_a > a.edge_count())
    throw validation_error("connected_sum: edge not in first diagram");
  if (edge_b < 1 || edge_b > b.edge_count())
    throw validation_error("connected_sum: edge not in second diagram");

  std::vector<std::array<int, 4>> tuples;
  for (const auto& c : a.crossings()) tuples.push_back(c.edges);
  const int off = a.edge_count();
  for (const auto& c : b.crossings()) {
    std::array<int, 4> t = c.edges;
    for (int& e : t) e += off;
    tuples.push_back(t);
  }
  // cut both edges at their heads and cross-join, respecting orientations
  Endpoint ha = a.edge_endpoints(edge_a).second;
  Endpoint hb = b.edge_endpoints(edge_b).second;
  tuples[ha.crossing][ha.slot] = edge_b + off;
  tuples[a.crossing_count() + hb.crossing][hb.slot] = edge_a;
  return PlanarDiagram::from_crossings(renumber(tuples),
                                       a.unknotted_extras() + b.unknotted_extras(),
                                       std::nullopt);
}

std::vector<PlanarDiagram> connected_pieces(const PlanarDiagram& d) {
  std::vector<PlanarDiagram> out;
  const int n = d.crossing_count();
  if (n > 0) {
    std::vector<int> comp(n, -1);
    // adjacency through shared edges
    std::vector<std::vector<int>> adj(n);
    for (int e = 1; e <= d.edge_count(); ++e) {
      auto [tail, head] = d.edge_endpoints(e);
      adj[tail.crossing].push_back(head.crossing);
      adj[head.crossing].push_back(tail.crossing);
    }
    int pieces = 0;
    for (int c0 = 0; c0 < n; ++c0) {
      if (comp[c0] >= 0) continue;
      std::vector<int> stack{c0};
      comp[c0] = pieces;
      while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        for (int nb : adj[c])
          if (comp[nb] < 0) {
            comp[nb] = pieces;
            stack.push_back(nb);
          }
      }
      ++pieces;
    }
    for (int p = 0; p < pieces; ++p) {
      std::vector<std::array<int, 4>> tuples;
      for (int c = 0; c < n; ++c)
        if (comp[c] == p) tuples.push_back(d.crossings()[c].edges);
      out.push_back(PlanarDiagram::from_crossings(renumber(tuples), 0));
    }
  }
  for (int k = 0; k < d.unknotted_extras(); ++k)
    out.push_back(PlanarDiagram::from_crossings({}, 1));
  return out;
}

PlanarDiagram add_r1_kink(const PlanarDiagram& d, int edge, int sign) {
  if (sign != 1 && sign != -1) throw validation_error("kink sign must be +1 or -1");

  std::vector<std::array<int, 4>> tuples;
  for (const auto& c : d.crossings()) tuples.push_back(c.edges);

  if (edge == 0) {
    // kink one of the crossingless circles into a one-crossing diagram
    if (d.unknotted_extras() < 1)
      throw validation_error("no crossingless circle to kink");
    int e1 = d.edge_count() + 1, e2 = d.edge_count() + 2;
    if (sign > 0)
      tuples.push_back({e1, e2, e2, e1});
    else
      tuples.push_back({e2, e2, e1, e1});
    return PlanarDiagram::from_crossings(renumber(tuples), d.unknotted_extras() - 1,
                                         d.basepoint_edge());
  }

  if (edge < 1 || edge > d.edge_count()) throw validation_error("kink edge does not exist");
  int f = d.edge_count() + 1, g = d.edge_count() + 2;
  Endpoint h = d.edge_endpoints(edge).second;
  tuples[h.crossing][h.slot] = g;
  if (sign > 0)
    tuples.push_back({edge, f, f, g});
  else
    tuples.push_back({f, f, g, edge});
  return PlanarDiagram::from_crossings(renumber(tuples), d.unknotted_extras(),
                                       d.basepoint_edge());
}

}  // namespace khdet::diagram
