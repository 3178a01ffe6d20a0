#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace lpa {

class Graph;

/// A finite path: a chain of edges e_1...e_n with r(e_i) = s(e_{i+1}),
/// or a single vertex (length 0). Edges are stored as dense indices into a
/// fixed Graph; source and range vertices are kept alongside so the empty
/// path knows its base.
struct Path {
  std::vector<std::uint32_t> edges;
  std::uint32_t src = 0;
  std::uint32_t rng = 0;

  static Path at_vertex(std::uint32_t v) { return Path{{}, v, v}; }
  static Path of_edge(const Graph& g, std::uint32_t e);

  std::size_t length() const { return edges.size(); }
  bool empty() const { return edges.empty(); }

  friend bool operator==(const Path& a, const Path& b) {
    return a.edges == b.edges && a.src == b.src;
  }
  /// Orders by (length, edge sequence, base vertex).
  friend std::strong_ordering operator<=>(const Path& a, const Path& b) {
    if (auto c = a.edges.size() <=> b.edges.size(); c != 0) return c;
    if (auto c = a.edges <=> b.edges; c != 0) return c;
    return a.src <=> b.src;
  }
};

/// Concatenation; nullopt when ranges/sources do not line up.
std::optional<Path> concat(const Path& a, const Path& b);

/// Immutable directed graph with string-named vertices and edges and an
/// infinite-emitter marking. A flagged vertex stands for a vertex with
/// infinitely many outgoing edges, of which finitely many may be
/// materialized as ordinary edges; CK2 is never applied at such a vertex.
///
/// Vertices and edges are sorted by id at construction, so dense indices
/// compare in id order and every set-valued query below is reproducible.
class Graph : public std::enable_shared_from_this<Graph> {
 public:
  class Builder {
   public:
    Builder& vertex(std::string id, bool infinite_emitter = false);
    Builder& edge(std::string id, const std::string& src,
                  const std::string& dst);
    std::shared_ptr<const Graph> build();

   private:
    struct V {
      std::string id;
      bool flag;
    };
    struct E {
      std::string id, src, dst;
    };
    std::vector<V> vs_;
    std::vector<E> es_;
  };

  /// Strict parse of {"vertices":[{"id","infinite_emitter"?}],
  /// "edges":[{"id","src","dst"}]}; unknown keys are rejected.
  static std::shared_ptr<const Graph> from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  std::size_t vertex_count() const { return vertex_ids_.size(); }
  std::size_t edge_count() const { return edge_ids_.size(); }

  std::uint32_t vertex_index(const std::string& id) const;
  std::uint32_t edge_index(const std::string& id) const;
  bool has_vertex(const std::string& id) const;
  bool has_edge(const std::string& id) const;

  const std::string& vertex_id(std::uint32_t v) const {
    return vertex_ids_.at(v);
  }
  const std::string& edge_id(std::uint32_t e) const { return edge_ids_.at(e); }

  std::uint32_t edge_source(std::uint32_t e) const { return src_.at(e); }
  std::uint32_t edge_range(std::uint32_t e) const { return rng_.at(e); }
  bool infinite_emitter(std::uint32_t v) const { return flag_.at(v); }

  /// Outgoing (incoming) materialized edges, sorted by edge id.
  const std::vector<std::uint32_t>& out_edges(std::uint32_t v) const {
    return out_.at(v);
  }
  const std::vector<std::uint32_t>& in_edges(std::uint32_t v) const {
    return in_.at(v);
  }

  /// A regular vertex emits a finite nonzero set of edges: not flagged and
  /// at least one materialized edge.
  bool is_regular(std::uint32_t v) const;
  bool is_regular(const std::string& id) const;

  /// Vertices with no outgoing edges at all (unflagged, no materialized
  /// edges), sorted.
  std::vector<std::uint32_t> sink_indices() const;
  std::vector<std::string> sinks() const;

  bool has_infinite_emitter() const;

  /// Least simple cycle under (length, edge-id-sequence) order, if any.
  /// Depth-first search with neighbors visited in edge-id order.
  std::optional<Path> find_cycle() const;

  /// All paths p with r(p) = v, including the length-0 path at v, sorted by
  /// (length, edge ids). Requires an acyclic graph whose emitters are all
  /// regular or sinks (no infinite-emitter flags); throws std::domain_error
  /// otherwise, since the path set would be infinite.
  std::vector<Path> paths_to(std::uint32_t v) const;

  std::string path_to_string(const Path& p) const;

 private:
  Graph() = default;
  friend class Builder;

  std::vector<std::string> vertex_ids_;
  std::vector<std::string> edge_ids_;
  std::vector<std::uint32_t> src_, rng_;
  std::vector<bool> flag_;
  std::vector<std::vector<std::uint32_t>> out_, in_;
};

using GraphPtr = std::shared_ptr<const Graph>;

}  // namespace lpa
