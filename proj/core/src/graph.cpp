#include "lpa/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace lpa {

Path Path::of_edge(const Graph& g, std::uint32_t e) {
  return Path{{e}, g.edge_source(e), g.edge_range(e)};
}

std::optional<Path> concat(const Path& a, const Path& b) {
  if (a.rng != b.src) return std::nullopt;
  Path p;
  p.edges.reserve(a.edges.size() + b.edges.size());
  p.edges = a.edges;
  p.edges.insert(p.edges.end(), b.edges.begin(), b.edges.end());
  p.src = a.src;
  p.rng = b.rng;
  return p;
}

Graph::Builder& Graph::Builder::vertex(std::string id, bool infinite_emitter) {
  vs_.push_back({std::move(id), infinite_emitter});
  return *this;
}

Graph::Builder& Graph::Builder::edge(std::string id, const std::string& src,
                                     const std::string& dst) {
  es_.push_back({std::move(id), src, dst});
  return *this;
}

std::shared_ptr<const Graph> Graph::Builder::build() {
  auto g = std::shared_ptr<Graph>(new Graph());
  std::sort(vs_.begin(), vs_.end(),
            [](const V& a, const V& b) { return a.id < b.id; });
  std::sort(es_.begin(), es_.end(),
            [](const E& a, const E& b) { return a.id < b.id; });

  std::map<std::string, std::uint32_t> vidx;
  for (const auto& v : vs_) {
    if (vidx.count(v.id))
      throw std::invalid_argument("duplicate vertex id: " + v.id);
    vidx[v.id] = static_cast<std::uint32_t>(g->vertex_ids_.size());
    g->vertex_ids_.push_back(v.id);
    g->flag_.push_back(v.flag);
  }
  std::set<std::string> eids;
  for (const auto& e : es_) {
    if (vidx.count(e.id))
      throw std::invalid_argument("edge id collides with a vertex id: " +
                                  e.id);
    if (!eids.insert(e.id).second)
      throw std::invalid_argument("duplicate edge id: " + e.id);
    auto s = vidx.find(e.src), r = vidx.find(e.dst);
    if (s == vidx.end() || r == vidx.end())
      throw std::invalid_argument("edge " + e.id +
                                  " references an undeclared vertex");
    g->edge_ids_.push_back(e.id);
    g->src_.push_back(s->second);
    g->rng_.push_back(r->second);
  }
  g->out_.assign(g->vertex_count(), {});
  g->in_.assign(g->vertex_count(), {});
  for (std::uint32_t e = 0; e < g->edge_count(); ++e) {
    g->out_[g->src_[e]].push_back(e);
    g->in_[g->rng_[e]].push_back(e);
  }
  return g;
}

std::shared_ptr<const Graph> Graph::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("graph JSON must be an object");
  for (const auto& [key, _] : j.items())
    if (key != "vertices" && key != "edges")
      throw std::invalid_argument("unknown key in graph JSON: " + key);
  if (!j.contains("vertices") || !j.contains("edges"))
    throw std::invalid_argument("graph JSON needs \"vertices\" and \"edges\"");

  Builder b;
  for (const auto& v : j.at("vertices")) {
    bool flag = false;
    for (const auto& [key, _] : v.items()) {
      if (key == "infinite_emitter")
        flag = v.at(key).get<bool>();
      else if (key != "id")
        throw std::invalid_argument("unknown key in vertex JSON: " + key);
    }
    b.vertex(v.at("id").get<std::string>(), flag);
  }
  for (const auto& e : j.at("edges")) {
    for (const auto& [key, _] : e.items())
      if (key != "id" && key != "src" && key != "dst")
        throw std::invalid_argument("unknown key in edge JSON: " + key);
    b.edge(e.at("id").get<std::string>(), e.at("src").get<std::string>(),
           e.at("dst").get<std::string>());
  }
  return b.build();
}

nlohmann::json Graph::to_json() const {
  nlohmann::json vs = nlohmann::json::array();
  for (std::uint32_t v = 0; v < vertex_count(); ++v)
    vs.push_back({{"id", vertex_ids_[v]}, {"infinite_emitter", bool(flag_[v])}});
  nlohmann::json es = nlohmann::json::array();
  for (std::uint32_t e = 0; e < edge_count(); ++e)
    es.push_back({{"id", edge_ids_[e]},
                  {"src", vertex_ids_[src_[e]]},
                  {"dst", vertex_ids_[rng_[e]]}});
  return {{"vertices", vs}, {"edges", es}};
}

std::uint32_t Graph::vertex_index(const std::string& id) const {
  auto it = std::lower_bound(vertex_ids_.begin(), vertex_ids_.end(), id);
  if (it == vertex_ids_.end() || *it != id)
    throw std::invalid_argument("unknown vertex id: " + id);
  return static_cast<std::uint32_t>(it - vertex_ids_.begin());
}

std::uint32_t Graph::edge_index(const std::string& id) const {
  auto it = std::lower_bound(edge_ids_.begin(), edge_ids_.end(), id);
  if (it == edge_ids_.end() || *it != id)
    throw std::invalid_argument("unknown edge id: " + id);
  return static_cast<std::uint32_t>(it - edge_ids_.begin());
}

bool Graph::has_vertex(const std::string& id) const {
  return std::binary_search(vertex_ids_.begin(), vertex_ids_.end(), id);
}

bool Graph::has_edge(const std::string& id) const {
  return std::binary_search(edge_ids_.begin(), edge_ids_.end(), id);
}

bool Graph::is_regular(std::uint32_t v) const {
  if (v >= vertex_count()) throw std::invalid_argument("vertex index out of range");
  return !flag_[v] && !out_[v].empty();
}

bool Graph::is_regular(const std::string& id) const {
  return is_regular(vertex_index(id));
}

std::vector<std::uint32_t> Graph::sink_indices() const {
  std::vector<std::uint32_t> r;
  for (std::uint32_t v = 0; v < vertex_count(); ++v)
    if (!flag_[v] && out_[v].empty()) r.push_back(v);
  return r;
}

std::vector<std::string> Graph::sinks() const {
  std::vector<std::string> r;
  for (auto v : sink_indices()) r.push_back(vertex_ids_[v]);
  return r;
}

bool Graph::has_infinite_emitter() const {
  return std::find(flag_.begin(), flag_.end(), true) != flag_.end();
}

namespace {

// Enumerates simple closed paths from `v`, keeping the least candidate seen.
void cycle_search(const Graph& g, std::uint32_t start, std::uint32_t at,
                  std::vector<std::uint32_t>& stack_edges,
                  std::vector<bool>& on_stack, std::optional<Path>& best) {
  for (std::uint32_t e : g.out_edges(at)) {
    // Prune: never exceed the current best length.
    if (best && stack_edges.size() + 1 > best->edges.size()) return;
    std::uint32_t w = g.edge_range(e);
    stack_edges.push_back(e);
    if (w == start) {
      Path c{stack_edges, start, start};
      if (!best || c < *best) best = c;
    } else if (!on_stack[w]) {
      on_stack[w] = true;
      cycle_search(g, start, w, stack_edges, on_stack, best);
      on_stack[w] = false;
    }
    stack_edges.pop_back();
  }
}

}  // namespace

std::optional<Path> Graph::find_cycle() const {
  std::optional<Path> best;
  for (std::uint32_t v = 0; v < vertex_count(); ++v) {
    std::vector<std::uint32_t> stack_edges;
    std::vector<bool> on_stack(vertex_count(), false);
    on_stack[v] = true;
    cycle_search(*this, v, v, stack_edges, on_stack, best);
  }
  return best;
}

std::vector<Path> Graph::paths_to(std::uint32_t v) const {
  if (v >= vertex_count()) throw std::invalid_argument("vertex index out of range");
  if (has_infinite_emitter())
    throw std::domain_error("paths_to requires all emitters regular or sinks");
  if (find_cycle())
    throw std::domain_error("paths_to called on a graph with a cycle");
  std::vector<Path> acc{Path::at_vertex(v)};
  // Grow backwards: prepend edges into the sources already reached.
  for (std::size_t i = 0; i < acc.size(); ++i) {
    Path p = acc[i];
    for (std::uint32_t e : in_edges(p.src)) {
      Path q = *concat(Path::of_edge(*this, e), p);
      acc.push_back(std::move(q));
    }
  }
  std::sort(acc.begin(), acc.end());
  return acc;
}

std::string Graph::path_to_string(const Path& p) const {
  if (p.empty()) return vertex_ids_.at(p.src);
  std::string s;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (i) s += ".";
    s += edge_ids_.at(p.edges[i]);
  }
  return s;
}

}  // namespace lpa
