#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "lpa/graph.hpp"

namespace lpa {

enum class EFVertexKind { EdgeVertex, BoundaryVertex, TerminalVertex };

/// The finite graph E_F attached to a finite edge set F of a graph E.
/// Its vertex set is the disjoint union
///   F  ∪  (r(F) ∩ s(F) ∩ s(E^1\F))  ∪  (r(F) \ s(F)),
/// and its edges are the pairs (e, x) with e in F, x a vertex of E_F, and
/// r(e) = s(x), reading s(x) = x when x came from a vertex of E.
///
/// Vertices keep the id of the object of E they came from; edges are named
/// "(e,x)". `derived` is an ordinary Graph, so every structural query and
/// all of the term arithmetic applies to E_F unchanged.
struct EFGraph {
  struct VertexProvenance {
    EFVertexKind kind;
    std::uint32_t ref;  // edge index in E for EdgeVertex, else vertex index
  };
  struct EdgeProvenance {
    std::uint32_t e;       // edge of E (member of F)
    std::uint32_t target;  // vertex index in `derived`
  };

  GraphPtr base;     // E
  GraphPtr derived;  // E_F
  std::vector<std::uint32_t> f_set;  // sorted edge indices in E
  std::vector<VertexProvenance> vertex_provenance;  // by derived vertex index
  std::vector<EdgeProvenance> edge_provenance;      // by derived edge index

  nlohmann::json to_json() const;
};

/// Builds E_F for a nonempty set of materialized edges of g. A vertex is in
/// s(E^1\F) when it emits a materialized edge outside F or carries the
/// infinite-emitter flag (all but finitely many of its edges are outside F).
EFGraph build_ef(const GraphPtr& g, const std::vector<std::string>& f_ids);
EFGraph build_ef_indices(const GraphPtr& g, std::vector<std::uint32_t> f);

}  // namespace lpa
