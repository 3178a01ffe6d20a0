#include "support/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

namespace lpa::corpus {

namespace {

using Arc = std::pair<int, int>;
using ArcMultiset = std::vector<Arc>;  // kept sorted

bool weakly_connected(int nv, const ArcMultiset& arcs) {
  if (nv == 1) return true;
  std::vector<int> parent(nv);
  for (int i = 0; i < nv; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& [a, b] : arcs) parent[find(a)] = find(b);
  std::set<int> roots;
  for (int i = 0; i < nv; ++i) roots.insert(find(i));
  return roots.size() == 1;
}

ArcMultiset canonical_form(int nv, const ArcMultiset& arcs) {
  std::vector<int> perm(nv);
  for (int i = 0; i < nv; ++i) perm[i] = i;
  ArcMultiset best;
  bool have = false;
  do {
    ArcMultiset relabeled;
    relabeled.reserve(arcs.size());
    for (const auto& [a, b] : arcs) relabeled.push_back({perm[a], perm[b]});
    std::sort(relabeled.begin(), relabeled.end());
    if (!have || relabeled < best) {
      best = std::move(relabeled);
      have = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

GraphPtr realize(int nv, const ArcMultiset& arcs, int flagged_vertex = -1) {
  Graph::Builder b;
  for (int i = 0; i < nv; ++i)
    b.vertex("v" + std::to_string(i), i == flagged_vertex);
  for (std::size_t k = 0; k < arcs.size(); ++k)
    b.edge("e" + std::to_string(k), "v" + std::to_string(arcs[k].first),
           "v" + std::to_string(arcs[k].second));
  return b.build();
}

}  // namespace

std::vector<GraphPtr> exhaustive_graphs(int max_v, int max_e) {
  std::vector<GraphPtr> out;
  std::set<std::pair<int, ArcMultiset>> seen;
  for (int nv = 1; nv <= max_v; ++nv) {
    std::vector<Arc> arcs;
    for (int i = 0; i < nv; ++i)
      for (int j = 0; j < nv; ++j) arcs.push_back({i, j});
    ArcMultiset acc;
    std::function<void(std::size_t)> rec = [&](std::size_t min_idx) {
      if (weakly_connected(nv, acc)) {
        auto canon = canonical_form(nv, acc);
        if (seen.insert({nv, canon}).second) out.push_back(realize(nv, canon));
      }
      if (static_cast<int>(acc.size()) == max_e) return;
      for (std::size_t idx = min_idx; idx < arcs.size(); ++idx) {
        acc.push_back(arcs[idx]);
        rec(idx);
        acc.pop_back();
      }
    };
    rec(0);
  }
  return out;
}

std::vector<GraphPtr> with_flag_variants(const std::vector<GraphPtr>& base) {
  std::vector<GraphPtr> out;
  for (const auto& g : base) {
    out.push_back(g);
    // Rebuild with each vertex flagged in turn.
    for (std::uint32_t v = 0; v < g->vertex_count(); ++v) {
      Graph::Builder b;
      for (std::uint32_t w = 0; w < g->vertex_count(); ++w)
        b.vertex(g->vertex_id(w), w == v);
      for (std::uint32_t e = 0; e < g->edge_count(); ++e)
        b.edge(g->edge_id(e), g->vertex_id(g->edge_source(e)),
               g->vertex_id(g->edge_range(e)));
      out.push_back(b.build());
    }
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> edge_subsets(const Graph& g,
                                                     int max_size) {
  std::vector<std::vector<std::uint32_t>> out;
  const std::uint32_t ne = static_cast<std::uint32_t>(g.edge_count());
  std::vector<std::uint32_t> acc;
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t start) {
    if (!acc.empty()) out.push_back(acc);
    if (static_cast<int>(acc.size()) == max_size) return;
    for (std::uint32_t e = start; e < ne; ++e) {
      acc.push_back(e);
      rec(e + 1);
      acc.pop_back();
    }
  };
  rec(0);
  return out;
}

Path random_path_to(const Graph& g, std::uint32_t v, int max_len, Rng& rng) {
  int len = std::uniform_int_distribution<int>(0, max_len)(rng);
  Path p = Path::at_vertex(v);
  for (int i = 0; i < len; ++i) {
    const auto& in = g.in_edges(p.src);
    if (in.empty()) break;
    std::uint32_t e =
        in[std::uniform_int_distribution<std::size_t>(0, in.size() - 1)(rng)];
    p = *concat(Path::of_edge(g, e), p);
  }
  return p;
}

Element random_element(const GraphPtr& g, Field f, int max_terms, int max_len,
                       Rng& rng) {
  RawTerms raw;
  int terms = std::uniform_int_distribution<int>(1, max_terms)(rng);
  for (int t = 0; t < terms; ++t) {
    std::uint32_t v = std::uniform_int_distribution<std::uint32_t>(
        0, static_cast<std::uint32_t>(g->vertex_count()) - 1)(rng);
    Path real = random_path_to(*g, v, max_len, rng);
    Path ghost = random_path_to(*g, v, max_len, rng);
    long num = std::uniform_int_distribution<long>(-4, 4)(rng);
    if (num == 0) num = 1;
    Scalar k = Scalar::from_int(f, num);
    if (k.is_zero()) k = Scalar::one(f);
    raw.emplace_back(Monomial(*g, real, ghost), k);
  }
  return normalize(g, f, raw);
}

Element random_nonzero_element(const GraphPtr& g, Field f, int max_terms,
                               int max_len, Rng& rng) {
  for (int tries = 0; tries < 16; ++tries) {
    Element a = random_element(g, f, max_terms, max_len, rng);
    if (!a.is_zero()) return a;
  }
  return Element::vertex(
      g, f,
      std::uniform_int_distribution<std::uint32_t>(
          0, static_cast<std::uint32_t>(g->vertex_count()) - 1)(rng));
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  unsigned workers = std::min<std::size_t>(
      std::max(1u, std::thread::hardware_concurrency()), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace lpa::corpus
