#include "khdet/checkerboard.hpp"

#include <numeric>
#include <queue>

namespace khdet::diagram {

namespace {

struct UF {
  std::vector<int> parent;
  explicit UF(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Checkerboard checkerboard(const PlanarDiagram& d) {
  const int n = d.crossing_count();
  if (n == 0) throw validation_error("checkerboard needs at least one crossing");
  if (d.unknotted_extras() > 0)
    throw validation_error("checkerboard: split off crossingless circles first");

  // connectivity of the 4-valent graph
  {
    UF comp(n);
    for (int e = 1; e <= d.edge_count(); ++e) {
      auto [tail, head] = d.edge_endpoints(e);
      comp.join(tail.crossing, head.crossing);
    }
    for (int c = 1; c < n; ++c)
      if (comp.find(c) != comp.find(0))
        throw validation_error("checkerboard: diagram is disconnected");
  }

  // Regions as orbits of quadrants. Quadrant (c, s) is the sector between
  // slots s and s+1 (mod 4). An edge leaving slot u of c and arriving at
  // slot u' of c' glues quadrant u of c to quadrant u'-1 of c' (its left
  // side) and quadrant u-1 of c to quadrant u' of c' (its right side).
  UF regions(4 * n);
  auto quad = [](const Endpoint& p, int offset) {
    return 4 * p.crossing + ((p.slot + offset) & 3);
  };
  for (int e = 1; e <= d.edge_count(); ++e) {
    auto [tail, head] = d.edge_endpoints(e);
    regions.join(quad(tail, 0), quad(head, 3));
    regions.join(quad(tail, 3), quad(head, 0));
  }

  Checkerboard cb;
  cb.quadrant_region.assign(4 * n, -1);
  std::vector<int> root_to_region(4 * n, -1);
  for (int q = 0; q < 4 * n; ++q) {
    int r = regions.find(q);
    if (root_to_region[r] < 0) root_to_region[r] = cb.region_count++;
    cb.quadrant_region[q] = root_to_region[r];
  }
  if (cb.region_count != n + 2)
    throw validation_error("region count " + std::to_string(cb.region_count) +
                           " does not match Euler count " + std::to_string(n + 2) +
                           " (non-planar rotation data?)");

  // proper two-coloring by breadth-first search over crossing-adjacent sectors
  cb.shaded.assign(cb.region_count, false);
  std::vector<int> color(cb.region_count, -1);
  cb.unbounded_region = cb.quadrant_region[3];  // sector between slots 3 and 0
                                                // of crossing 0; any fixed
                                                // choice presents the same H1
  std::queue<int> bfs;
  color[cb.unbounded_region] = 0;
  bfs.push(cb.unbounded_region);
  std::vector<std::vector<int>> neighbors(cb.region_count);
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) {
      int a = cb.quadrant_region[4 * c + s];
      int b = cb.quadrant_region[4 * c + ((s + 1) & 3)];
      neighbors[a].push_back(b);
      neighbors[b].push_back(a);
    }
  while (!bfs.empty()) {
    int r = bfs.front();
    bfs.pop();
    for (int nb : neighbors[r]) {
      if (color[nb] < 0) {
        color[nb] = 1 - color[r];
        bfs.push(nb);
      } else if (color[nb] == color[r]) {
        throw internal_check_error("checkerboard coloring is not proper");
      }
    }
  }
  for (int r = 0; r < cb.region_count; ++r) {
    if (color[r] < 0) throw internal_check_error("region not reached by coloring");
    cb.shaded[r] = (color[r] == 1);
  }

  // crossing types: eta = +1 when the shaded sectors are the (0,1)/(2,3)
  // pair, i.e. the pair clockwise of the incoming under-strand
  cb.white_pair.resize(n);
  cb.eta.resize(n);
  for (int c = 0; c < n; ++c) {
    int q0 = cb.quadrant_region[4 * c + 0];
    int q1 = cb.quadrant_region[4 * c + 1];
    int q2 = cb.quadrant_region[4 * c + 2];
    int q3 = cb.quadrant_region[4 * c + 3];
    if (cb.shaded[q0] != cb.shaded[q2] || cb.shaded[q1] != cb.shaded[q3] ||
        cb.shaded[q0] == cb.shaded[q1])
      throw internal_check_error("opposite sectors of a crossing must share a color");
    if (cb.shaded[q0]) {
      cb.eta[c] = +1;
      cb.white_pair[c] = {q1, q3};
    } else {
      cb.eta[c] = -1;
      cb.white_pair[c] = {q0, q2};
    }
  }
  return cb;
}

homalg::IntMatrix goeritz_matrix(const PlanarDiagram& d) {
  Checkerboard cb = checkerboard(d);

  std::vector<int> white_regions;
  std::vector<int> white_index(cb.region_count, -1);
  for (int r = 0; r < cb.region_count; ++r) {
    if (!cb.shaded[r]) {
      white_index[r] = static_cast<int>(white_regions.size());
      white_regions.push_back(r);
    }
  }

  const int w = static_cast<int>(white_regions.size());
  homalg::IntMatrix full(w, w);
  for (int c = 0; c < d.crossing_count(); ++c) {
    int u = white_index[cb.white_pair[c][0]];
    int v = white_index[cb.white_pair[c][1]];
    if (u == v) continue;  // nugatory crossing: both white sectors in one region
    full.add_to(u, v, -cb.eta[c]);
    full.add_to(v, u, -cb.eta[c]);
    full.add_to(u, u, cb.eta[c]);
    full.add_to(v, v, cb.eta[c]);
  }

  // delete the unbounded region's row and column
  const int drop = white_index[cb.unbounded_region];
  if (drop < 0) throw internal_check_error("unbounded region must be white");
  homalg::IntMatrix g(w - 1, w - 1);
  for (int r = 0; r < w; ++r) {
    if (r == drop) continue;
    int rr = r < drop ? r : r - 1;
    for (const auto& [cc, val] : full.row(r)) {
      if (cc == drop) continue;
      g.set(rr, cc < drop ? cc : cc - 1, val);
    }
  }
  return g;
}

}  // namespace khdet::diagram
