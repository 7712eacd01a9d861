#pragma once

// Test-only reference computations. Each one is deliberately naive and shares
// no code with the library: orders by repeated addition, totient by scanning,
// graphs as plain adjacency matrices, NP-hard invariants by enumeration.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace brute {

inline std::uint64_t phi(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t a = 1; a <= n; ++a) count += std::gcd(a, n) == 1;
  return count;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d < n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Least k >= 1 with k * a == 0 (mod n), by repeated addition.
inline std::uint64_t order(std::uint64_t a, std::uint64_t n) {
  std::uint64_t k = 1, acc = a % n;
  while (acc != 0) {
    acc = (acc + a) % n;
    ++k;
  }
  return k;
}

using Matrix = std::vector<std::vector<bool>>;

inline Matrix adjacency(std::uint64_t n) {
  std::vector<std::uint64_t> ord(n);
  for (std::uint64_t a = 0; a < n; ++a) ord[a] = order(a, n);
  Matrix m(n, std::vector<bool>(n, false));
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = 0; b < n; ++b) m[a][b] = a != b && ord[a] != ord[b];
  }
  return m;
}

inline std::uint64_t edges(const Matrix& m) {
  std::uint64_t e = 0;
  for (std::size_t a = 0; a < m.size(); ++a) {
    for (std::size_t b = a + 1; b < m.size(); ++b) e += m[a][b];
  }
  return e;
}

inline std::uint64_t degree(const Matrix& m, std::size_t a) {
  return static_cast<std::uint64_t>(std::count(m[a].begin(), m[a].end(), true));
}

constexpr std::uint64_t kInf = UINT64_MAX / 4;

/// All-pairs shortest paths (Floyd-Warshall).
inline std::vector<std::vector<std::uint64_t>> distances(const Matrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<std::uint64_t>> d(n, std::vector<std::uint64_t>(n, kInf));
  for (std::size_t a = 0; a < n; ++a) {
    d[a][a] = 0;
    for (std::size_t b = 0; b < n; ++b) {
      if (m[a][b]) d[a][b] = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) d[a][b] = std::min(d[a][b], d[a][k] + d[k][b]);
    }
  }
  return d;
}

/// kInf when disconnected.
inline std::uint64_t diameter(const Matrix& m) {
  std::uint64_t worst = 0;
  for (const auto& row : distances(m)) worst = std::max(worst, *std::max_element(row.begin(), row.end()));
  return worst;
}

/// Girth as min over edges (u, v) of 1 + dist(u, v) with that edge removed. kInf if acyclic.
inline std::uint64_t girth(Matrix m) {
  std::uint64_t best = kInf;
  const std::size_t n = m.size();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (!m[u][v]) continue;
      m[u][v] = m[v][u] = false;
      best = std::min(best, distances(m)[u][v] + 1);
      m[u][v] = m[v][u] = true;
    }
  }
  return best >= kInf ? kInf : best;
}

/// Largest clique over all vertex subsets (n <= ~20).
inline std::uint64_t clique(const Matrix& m) {
  const std::size_t n = m.size();
  std::uint64_t best = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const auto size = static_cast<std::uint64_t>(__builtin_popcountll(mask));
    if (size <= best) continue;
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      if (!(mask >> a & 1)) continue;
      for (std::size_t b = a + 1; b < n && ok; ++b) {
        if ((mask >> b & 1) && !m[a][b]) ok = false;
      }
    }
    if (ok) best = size;
  }
  return best;
}

/// Smallest k such that some assignment of k colours is proper, enumerating
/// all k^n assignments (n <= ~10).
inline std::uint64_t chromatic(const Matrix& m) {
  const std::size_t n = m.size();
  for (std::uint64_t k = 1;; ++k) {
    std::vector<std::uint64_t> colour(n, 0);
    while (true) {
      bool proper = true;
      for (std::size_t a = 0; a < n && proper; ++a) {
        for (std::size_t b = a + 1; b < n && proper; ++b) {
          if (m[a][b] && colour[a] == colour[b]) proper = false;
        }
      }
      if (proper) return k;
      std::size_t i = 0;
      while (i < n && ++colour[i] == k) colour[i++] = 0;
      if (i == n) break;
    }
  }
}

/// Hamiltonian cycle existence by permuting vertices 1..n-1 (n <= ~11).
inline bool hamiltonian(const Matrix& m) {
  const std::size_t n = m.size();
  if (n < 3) return false;
  std::vector<std::size_t> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 1);
  do {
    bool ok = m[0][rest.front()] && m[rest.back()][0];
    for (std::size_t i = 0; ok && i + 1 < rest.size(); ++i) ok = m[rest[i]][rest[i + 1]];
    if (ok) return true;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return false;
}

}  // namespace brute
