#pragma once

#include <string>
#include <vector>

#include "lpa/ef.hpp"
#include "lpa/element.hpp"

namespace lpa {

/// The generator images of the homomorphism L_K(E_F) -> L_K(E) and the map
/// itself, tabulated on the vertices and edges of E_F.
///
/// Vertex images (G^0):        edge images (G^1), for h = (e,x):
///   edge-vertex e   -> ee*      x = f in F      -> eff*
///   boundary v      -> v - sum_{f in F, s(f)=v} ff*
///                               x = v boundary  -> e - sum_{f in F, s(f)=r(e)} eff*
///   terminal v      -> v        x = v terminal  -> e
/// Ghost images are the involutes. Empty sums are zero.
struct ThetaMap {
  EFGraph ef;
  Field field;
  std::vector<Element> vertex_image;  // by E_F vertex index
  std::vector<Element> edge_image;    // by E_F edge index

  const Element& image_of_vertex(std::uint32_t w) const {
    return vertex_image.at(w);
  }
  const Element& image_of_edge(std::uint32_t h) const {
    return edge_image.at(h);
  }
  Element image_of_ghost_edge(std::uint32_t h) const {
    return edge_image.at(h).involuted();
  }

  /// G^0 followed by G^1 followed by (G^1)*.
  std::vector<Element> generator_images() const;
};

ThetaMap build_theta(const GraphPtr& g, const std::vector<std::string>& f_ids,
                     Field field = Field::rationals());
ThetaMap build_theta(const EFGraph& ef, Field field = Field::rationals());

/// Machine check of every instance of the defining relations of L_K(E_F)
/// under the map: source/range compatibilities, CK1 on all edge pairs, CK2
/// at every regular vertex of E_F. A correct map passes every instance.
struct RelationReport {
  struct Instance {
    std::string relation;  // "CK1" | "CK2" | "source" | "range"
    std::string site;
    bool pass;
    std::string lhs, rhs;
  };
  std::vector<Instance> instances;

  bool all_pass() const;
  std::size_t failure_count() const;
  nlohmann::json to_json() const;
};

RelationReport check_relations(const ThetaMap& t);

/// True iff x lies in the span of all products of at most length_bound
/// generator images. One-sided: false only means "not found within the
/// bound", unless *saturated reports that the span stabilized, in which
/// case absence is proved.
bool image_contains(const ThetaMap& t, const Element& x, int length_bound,
                    bool* saturated = nullptr);

/// True iff x g = g x = 0 for every g in G^0; since every generator y of
/// G^1 and (G^1)* factors as y = g y g' with g, g' in G^0, this implies
/// orthogonality to all of the image.
bool orthogonal_to_image(const ThetaMap& t, const Element& x);

}  // namespace lpa
