#include "indegraph/oracle_graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>

#include "indegraph/errors.hpp"

namespace indegraph {

namespace {

constexpr std::size_t npos = VertexSet::npos;

void check_vertex(const IndependentGraph& g, Residue a) {
  if (a >= g.vertex_count()) {
    throw std::out_of_range("vertex " + std::to_string(a) + " not in [0, " +
                            std::to_string(g.vertex_count()) + ")");
  }
}

void check_limit(const char* what, const IndependentGraph& g, std::uint64_t limit) {
  if (g.vertex_count() > limit) throw CapacityError(what, g.vertex_count(), limit);
}

// Greedy sequential colouring of `candidates`, producing vertices in colour
// order with the colour number of each; the colour of the last vertex bounds
// the clique that can still be grown from the candidates.
void colour_sort(const IndependentGraph& g, const VertexSet& candidates,
                 std::vector<std::size_t>& order, std::vector<std::uint64_t>& bounds) {
  order.clear();
  bounds.clear();
  VertexSet uncoloured = candidates;
  std::uint64_t colour = 0;
  while (uncoloured.any()) {
    ++colour;
    VertexSet available = uncoloured;
    for (auto v = available.find_first(); v != npos; v = available.find_next(v)) {
      available -= g.neighbors(v);
      uncoloured.reset(v);
      order.push_back(v);
      bounds.push_back(colour);
    }
  }
}

void expand_clique(const IndependentGraph& g, VertexSet candidates, std::uint64_t size,
                   std::uint64_t& best) {
  std::vector<std::size_t> order;
  std::vector<std::uint64_t> bounds;
  colour_sort(g, candidates, order, bounds);
  for (std::size_t i = order.size(); i-- > 0;) {
    if (size + bounds[i] <= best) return;
    const std::size_t v = order[i];
    VertexSet next = candidates & g.neighbors(v);
    if (next.none()) {
      best = std::max(best, size + 1);
    } else {
      expand_clique(g, std::move(next), size + 1, best);
    }
    candidates.reset(v);
  }
}

// Backtracking k-colouring with DSATUR vertex selection and forward checking.
class Colourer {
 public:
  Colourer(const IndependentGraph& g, std::uint64_t k)
      : g_(g),
        k_(k),
        n_(g.vertex_count()),
        colour_(n_, -1),
        conflicts_(n_, std::vector<std::uint32_t>(k, 0)),
        saturation_(n_, 0) {}

  bool solve() { return assign(0, 0); }

 private:
  bool assign(std::size_t coloured, std::uint64_t used) {
    if (coloured == n_) return true;
    const std::size_t v = pick();
    // A fresh colour is interchangeable with any other fresh colour.
    const std::uint64_t top = std::min<std::uint64_t>(k_, used + 1);
    for (std::uint64_t c = 0; c < top; ++c) {
      if (conflicts_[v][c] != 0) continue;
      if (!paint(v, c)) {
        unpaint(v, c);
        continue;
      }
      if (assign(coloured + 1, std::max(used, c + 1))) return true;
      unpaint(v, c);
    }
    return false;
  }

  std::size_t pick() const {
    std::size_t best = n_;
    std::uint64_t best_sat = 0, best_deg = 0;
    for (std::size_t v = 0; v < n_; ++v) {
      if (colour_[v] >= 0) continue;
      const std::uint64_t sat = saturation_[v];
      const std::uint64_t deg = g_.neighbors(v).count();
      if (best == n_ || sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best;
  }

  // Returns false when some uncoloured neighbour is left with no colour.
  bool paint(std::size_t v, std::uint64_t c) {
    colour_[v] = static_cast<int>(c);
    bool ok = true;
    const auto& nb = g_.neighbors(v);
    for (auto w = nb.find_first(); w != npos; w = nb.find_next(w)) {
      if (conflicts_[w][c]++ == 0) {
        ++saturation_[w];
        if (colour_[w] < 0 && saturation_[w] == k_) ok = false;
      }
    }
    return ok;
  }

  void unpaint(std::size_t v, std::uint64_t c) {
    colour_[v] = -1;
    const auto& nb = g_.neighbors(v);
    for (auto w = nb.find_first(); w != npos; w = nb.find_next(w)) {
      if (--conflicts_[w][c] == 0) --saturation_[w];
    }
  }

  const IndependentGraph& g_;
  std::uint64_t k_;
  std::size_t n_;
  std::vector<int> colour_;
  std::vector<std::vector<std::uint32_t>> conflicts_;
  std::vector<std::uint64_t> saturation_;
};

// Hamiltonian search state; vertex 0 is the fixed start, the visited mask
// covers vertices 1..n-1 as bits 0..n-2.
class HamiltonSearch {
 public:
  explicit HamiltonSearch(const IndependentGraph& g) : n_(g.vertex_count()), adj_(n_, 0) {
    for (std::size_t v = 0; v < n_; ++v) {
      for (std::size_t w = 1; w < n_; ++w) {
        if (g.adjacent(v, w)) adj_[v] |= bit(w);
      }
    }
    full_ = (std::uint64_t{1} << (n_ - 1)) - 1;
    dead_.resize((full_ + 1) * n_, false);
    path_.reserve(n_);
  }

  std::optional<std::vector<Residue>> run(const IndependentGraph& g) {
    path_.assign(1, 0);
    if (!extend(g, 0, 0)) return std::nullopt;
    return path_;
  }

 private:
  static std::uint64_t bit(std::size_t v) { return std::uint64_t{1} << (v - 1); }

  bool extend(const IndependentGraph& g, std::size_t v, std::uint64_t visited) {
    if (visited == full_) return g.adjacent(v, 0);
    const std::size_t key = visited * n_ + v;
    if (dead_[key]) return false;
    std::uint64_t open = adj_[v] & ~visited;
    while (open != 0) {
      const std::size_t w = static_cast<std::size_t>(__builtin_ctzll(open)) + 1;
      open &= open - 1;
      path_.push_back(w);
      if (extend(g, w, visited | bit(w))) return true;
      path_.pop_back();
    }
    dead_[key] = true;
    return false;
  }

  std::size_t n_;
  std::vector<std::uint64_t> adj_;
  std::uint64_t full_ = 0;
  std::vector<bool> dead_;
  std::vector<Residue> path_;
};

// Hard ceiling for the memo table (n * 2^(n-1) bits).
constexpr std::uint64_t kHamiltonMemoCeiling = 30;

// Connected components of the complement graph. For a complete multipartite
// graph these are exactly the parts.
std::uint64_t complement_components(const IndependentGraph& g) {
  const std::size_t n = g.vertex_count();
  VertexSet unseen(n);
  unseen.set();
  std::uint64_t components = 0;
  std::deque<std::size_t> queue;
  for (auto s = unseen.find_first(); s != npos; s = unseen.find_first()) {
    ++components;
    unseen.reset(s);
    queue.push_back(s);
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      VertexSet next = unseen - g.neighbors(u);
      for (auto w = next.find_first(); w != npos; w = next.find_next(w)) {
        unseen.reset(w);
        queue.push_back(w);
      }
    }
  }
  return components;
}

}  // namespace

IndependentGraph IndependentGraph::build(Modulus n, std::uint64_t build_limit) {
  if (n.value() > build_limit) throw CapacityError("graph build", n.value(), build_limit);
  const std::size_t size = n.value();
  std::vector<std::uint64_t> orders(size);
  for (std::size_t a = 0; a < size; ++a) orders[a] = element_order(a, n);
  std::vector<VertexSet> rows(size, VertexSet(size));
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = a + 1; b < size; ++b) {
      if (orders[a] != orders[b]) {
        rows[a].set(b);
        rows[b].set(a);
      }
    }
  }
  return IndependentGraph(n, std::move(rows));
}

std::uint64_t degree(const IndependentGraph& g, Residue a) {
  check_vertex(g, a);
  return g.neighbors(a).count();
}

std::uint64_t edge_count(const IndependentGraph& g) {
  std::uint64_t twice = 0;
  for (std::size_t a = 0; a < g.vertex_count(); ++a) twice += g.neighbors(a).count();
  return twice / 2;
}

bool is_connected(const IndependentGraph& g) {
  const std::size_t n = g.vertex_count();
  VertexSet seen(n);
  seen.set(0);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    VertexSet next = g.neighbors(u) - seen;
    for (auto w = next.find_first(); w != npos; w = next.find_next(w)) {
      seen.set(w);
      queue.push_back(w);
    }
  }
  return seen.all();
}

ExtendedLength girth(const IndependentGraph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::uint64_t kUnseen = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t best = kUnseen;
  std::vector<std::uint64_t> dist(n);
  std::vector<std::size_t> parent(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    dist[s] = 0;
    parent[s] = n;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      // No cycle through s found later in this BFS can beat the current best.
      if (best != kUnseen && 2 * dist[u] >= best) break;
      const auto& nb = g.neighbors(u);
      for (auto w = nb.find_first(); w != npos; w = nb.find_next(w)) {
        if (dist[w] == kUnseen) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
    if (best == 3) break;
  }
  return best == kUnseen ? ExtendedLength::infinite() : ExtendedLength::finite(best);
}

ExtendedLength diameter(const IndependentGraph& g) {
  const std::size_t n = g.vertex_count();
  std::uint64_t worst = 0;
  for (std::size_t s = 0; s < n; ++s) {
    VertexSet seen(n), frontier(n);
    seen.set(s);
    frontier.set(s);
    std::uint64_t eccentricity = 0;
    while (!seen.all()) {
      VertexSet next(n);
      for (auto u = frontier.find_first(); u != npos; u = frontier.find_next(u)) {
        next |= g.neighbors(u);
      }
      next -= seen;
      if (next.none()) return ExtendedLength::infinite();
      seen |= next;
      frontier = std::move(next);
      ++eccentricity;
    }
    worst = std::max(worst, eccentricity);
  }
  return ExtendedLength::finite(worst);
}

bool is_bipartite(const IndependentGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> side(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      const auto& nb = g.neighbors(u);
      for (auto w = nb.find_first(); w != npos; w = nb.find_next(w)) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_complete(const IndependentGraph& g) {
  const std::uint64_t n = g.vertex_count();
  return edge_count(g) == n * (n - 1) / 2;
}

std::uint64_t clique_number(const IndependentGraph& g, std::uint64_t limit) {
  check_limit("clique search", g, limit);
  VertexSet all(g.vertex_count());
  all.set();
  std::uint64_t best = 0;
  expand_clique(g, all, 0, best);
  return best;
}

std::uint64_t chromatic_number(const IndependentGraph& g, std::uint64_t limit) {
  check_limit("colouring search", g, limit);
  for (std::uint64_t k = clique_number(g, limit);; ++k) {
    if (Colourer(g, k).solve()) return k;
  }
}

std::optional<std::vector<Residue>> find_hamiltonian_cycle(const IndependentGraph& g,
                                                           std::uint64_t limit) {
  check_limit("hamiltonian search", g, limit);
  check_limit("hamiltonian search memo", g, kHamiltonMemoCeiling);
  const std::size_t n = g.vertex_count();
  if (n < 3) return std::nullopt;
  for (std::size_t v = 0; v < n; ++v) {
    if (g.neighbors(v).count() < 2) return std::nullopt;
  }
  auto cycle = HamiltonSearch(g).run(g);
  if (cycle && (*cycle)[1] > cycle->back()) std::reverse(cycle->begin() + 1, cycle->end());
  return cycle;
}

bool is_hamiltonian_cycle(const IndependentGraph& g, const std::vector<Residue>& cycle) {
  const std::size_t n = g.vertex_count();
  if (n < 3 || cycle.size() != n) return false;
  VertexSet seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Residue v = cycle[i];
    if (v >= n || seen.test(v)) return false;
    seen.set(v);
    if (!g.adjacent(v, cycle[(i + 1) % n])) return false;
  }
  return true;
}

bool verify_complete_multipartite(const IndependentGraph& g,
                                  const OrderDecomposition& decomposition) {
  if (decomposition.modulus() != g.modulus()) {
    throw std::invalid_argument("decomposition modulus does not match graph");
  }
  const std::size_t n = g.vertex_count();
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> part(n, kNone);
  std::size_t index = 0;
  for (const auto& [order, members] : decomposition.classes()) {
    for (Residue a : members) {
      if (a >= n || part[a] != kNone) return false;
      part[a] = index;
    }
    ++index;
  }
  if (std::find(part.begin(), part.end(), kNone) != part.end()) return false;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (g.adjacent(a, b) != (part[a] != part[b])) return false;
    }
  }
  return true;
}

InvariantSet oracle_invariants(const IndependentGraph& g, const OracleLimits& limits) {
  const std::size_t n = g.vertex_count();
  InvariantSet inv;
  inv.n = n;
  std::vector<std::uint64_t> degrees(n);
  for (std::size_t a = 0; a < n; ++a) degrees[a] = g.neighbors(a).count();
  inv.degree_sequence = degree_runs(degrees);
  inv.edge_count = edge_count(g);
  inv.connected = is_connected(g);
  inv.girth = girth(g);
  inv.diameter = diameter(g);
  inv.bipartite = is_bipartite(g);
  inv.complete = is_complete(g);
  inv.partite_count = complement_components(g);
  if (n <= limits.exact_search_limit) {
    inv.clique_number = clique_number(g, limits.exact_search_limit);
    inv.chromatic_number = chromatic_number(g, limits.exact_search_limit);
  }
  if (n <= limits.hamiltonian_limit && n <= kHamiltonMemoCeiling) {
    inv.hamiltonian = find_hamiltonian_cycle(g, limits.hamiltonian_limit).has_value();
  }
  return inv;
}

}  // namespace indegraph
