#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

namespace hidden {

/// Undirected graph on n vertices stored as adjacency bitsets.
class Graph {
 public:
  explicit Graph(std::size_t n) : n_(n), words_((n + 63) / 64), adj_(n, std::vector<std::uint64_t>(words_, 0)) {}

  std::size_t size() const { return n_; }
  std::size_t words() const { return words_; }

  void add_edge(std::size_t i, std::size_t j) {
    if (i == j) return;
    adj_[i][j / 64] |= std::uint64_t{1} << (j % 64);
    adj_[j][i / 64] |= std::uint64_t{1} << (i % 64);
  }
  bool has_edge(std::size_t i, std::size_t j) const { return (adj_[i][j / 64] >> (j % 64)) & 1u; }
  const std::vector<std::uint64_t>& neighbors(std::size_t i) const { return adj_[i]; }
  std::size_t degree(std::size_t i) const {
    std::size_t d = 0;
    for (auto w : adj_[i]) d += static_cast<std::size_t>(std::popcount(w));
    return d;
  }

  bool is_clique(const std::vector<std::size_t>& vs) const {
    for (std::size_t a = 0; a < vs.size(); ++a)
      for (std::size_t b = a + 1; b < vs.size(); ++b)
        if (!has_edge(vs[a], vs[b])) return false;
    return true;
  }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::vector<std::uint64_t>> adj_;
};

namespace detail {

// Branch and bound with greedy coloring bounds over bitset candidate sets.
// Vertices are renumbered by nonincreasing degree so colorings are tight early.
class MaxCliqueSearch {
 public:
  explicit MaxCliqueSearch(const Graph& g) : g_(g), order_(g.size()) {
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return g.degree(a) > g.degree(b); });
    const std::size_t n = g.size();
    words_ = (n + 63) / 64;
    adj_.assign(n, std::vector<std::uint64_t>(words_, 0));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (a != b && g.has_edge(order_[a], order_[b])) adj_[a][b / 64] |= std::uint64_t{1} << (b % 64);
  }

  std::vector<std::size_t> run() {
    std::vector<std::uint64_t> all(words_, 0);
    for (std::size_t v = 0; v < g_.size(); ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
    std::vector<std::size_t> current;
    expand(current, all);
    std::vector<std::size_t> out;
    for (std::size_t v : best_) out.push_back(order_[v]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void expand(std::vector<std::size_t>& current, std::vector<std::uint64_t> cand) {
    std::vector<std::size_t> verts, colors;
    color(cand, verts, colors);
    for (std::size_t k = verts.size(); k-- > 0;) {
      if (current.size() + colors[k] <= best_.size()) return;
      const std::size_t v = verts[k];
      current.push_back(v);
      std::vector<std::uint64_t> next(words_);
      bool any = false;
      for (std::size_t w = 0; w < words_; ++w) {
        next[w] = cand[w] & adj_[v][w];
        any = any || next[w];
      }
      if (any) expand(current, std::move(next));
      else if (current.size() > best_.size()) best_ = current;
      current.pop_back();
      cand[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }
  }

  // Sequential greedy coloring; verts come out sorted by color, colors[k] is 1-based.
  void color(const std::vector<std::uint64_t>& cand, std::vector<std::size_t>& verts,
             std::vector<std::size_t>& colors) const {
    std::vector<std::uint64_t> uncolored = cand;
    std::size_t c = 0;
    auto nonempty = [](const std::vector<std::uint64_t>& s) {
      for (auto w : s)
        if (w) return true;
      return false;
    };
    while (nonempty(uncolored)) {
      ++c;
      std::vector<std::uint64_t> q = uncolored;
      for (std::size_t w = 0; w < words_; ++w) {
        while (q[w]) {
          const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(q[w]));
          q[w] &= q[w] - 1;
          uncolored[v / 64] &= ~(std::uint64_t{1} << (v % 64));
          for (std::size_t u = 0; u < words_; ++u) q[u] &= ~adj_[v][u];
          verts.push_back(v);
          colors.push_back(c);
        }
      }
    }
  }

  const Graph& g_;
  std::vector<std::size_t> order_;
  std::size_t words_ = 0;
  std::vector<std::vector<std::uint64_t>> adj_;
  std::vector<std::size_t> best_;
};

}  // namespace detail

/// A maximum clique (sorted indices). Exponential in the worst case.
inline std::vector<std::size_t> max_clique_exact(const Graph& g) {
  if (g.size() == 0) return {};
  return detail::MaxCliqueSearch(g).run();
}

/**
 * Greedy clique growth from the highest-degree start vertices, each followed
 * by (1,1)-swap local search: a vertex adjacent to all but one clique member
 * replaces that member whenever the swap makes room for a further vertex.
 */
inline std::vector<std::size_t> max_clique_greedy(const Graph& g, std::size_t starts = 16) {
  const std::size_t n = g.size();
  if (n == 0) return {};
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return g.degree(a) > g.degree(b); });

  auto grow = [&](std::vector<std::size_t>& clique) {
    for (;;) {
      std::size_t pick = n;
      for (std::size_t v : order) {
        if (std::find(clique.begin(), clique.end(), v) != clique.end()) continue;
        bool ok = true;
        for (std::size_t u : clique)
          if (!g.has_edge(u, v)) {
            ok = false;
            break;
          }
        if (ok) {
          pick = v;
          break;
        }
      }
      if (pick == n) return;
      clique.push_back(pick);
    }
  };

  std::vector<std::size_t> best;
  for (std::size_t s = 0; s < std::min(starts, n); ++s) {
    std::vector<std::size_t> clique{order[s]};
    grow(clique);
    bool improved = true;
    for (int round = 0; improved && round < 100; ++round) {
      improved = false;
      for (std::size_t v : order) {
        if (std::find(clique.begin(), clique.end(), v) != clique.end()) continue;
        std::size_t missing = 0, drop = 0;
        for (std::size_t k = 0; k < clique.size(); ++k)
          if (!g.has_edge(clique[k], v)) {
            ++missing;
            drop = k;
          }
        if (missing != 1) continue;
        std::vector<std::size_t> trial = clique;
        trial[drop] = v;
        const std::size_t before = trial.size();
        grow(trial);
        if (trial.size() > before) {
          clique = std::move(trial);
          improved = true;
          break;
        }
      }
    }
    if (clique.size() > best.size()) best = clique;
  }
  std::sort(best.begin(), best.end());
  return best;
}

}  // namespace hidden
