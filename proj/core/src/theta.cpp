#include "lpa/theta.hpp"

#include <algorithm>

#include "lpa/span.hpp"

namespace lpa {

namespace {

// sum_{f in F, s(f) = v} ff* in L_K(E)
Element ff_star_sum(const GraphPtr& g, Field field,
                    const std::vector<std::uint32_t>& f_set, std::uint32_t v) {
  Element acc = Element::zero(g, field);
  for (auto f : f_set) {
    if (g->edge_source(f) != v) continue;
    Path pf = Path::of_edge(*g, f);
    acc += Element::path_monomial(g, field, pf, pf, Scalar::one(field));
  }
  return acc;
}

}  // namespace

ThetaMap build_theta(const GraphPtr& g, const std::vector<std::string>& f_ids,
                     Field field) {
  return build_theta(build_ef(g, f_ids), field);
}

ThetaMap build_theta(const EFGraph& ef, Field field) {
  const GraphPtr& g = ef.base;
  ThetaMap t{ef, field, {}, {}};
  const Graph& d = *ef.derived;

  t.vertex_image.reserve(d.vertex_count());
  for (std::uint32_t w = 0; w < d.vertex_count(); ++w) {
    const auto& prov = ef.vertex_provenance[w];
    switch (prov.kind) {
      case EFVertexKind::EdgeVertex: {
        Path pe = Path::of_edge(*g, prov.ref);
        t.vertex_image.push_back(
            Element::path_monomial(g, field, pe, pe, Scalar::one(field)));
        break;
      }
      case EFVertexKind::BoundaryVertex:
        t.vertex_image.push_back(Element::vertex(g, field, prov.ref) -
                                 ff_star_sum(g, field, ef.f_set, prov.ref));
        break;
      case EFVertexKind::TerminalVertex:
        t.vertex_image.push_back(Element::vertex(g, field, prov.ref));
        break;
    }
  }

  t.edge_image.reserve(d.edge_count());
  for (std::uint32_t h = 0; h < d.edge_count(); ++h) {
    const auto& prov = ef.edge_provenance[h];
    const auto& tprov = ef.vertex_provenance[prov.target];
    Element e_elem = Element::edge(g, field, prov.e);
    switch (tprov.kind) {
      case EFVertexKind::EdgeVertex: {
        // eff* for f the edge the target vertex came from
        Path pe = Path::of_edge(*g, prov.e);
        Path pf = Path::of_edge(*g, tprov.ref);
        t.edge_image.push_back(Element::path_monomial(
            g, field, *concat(pe, pf), pf, Scalar::one(field)));
        break;
      }
      case EFVertexKind::BoundaryVertex:
        t.edge_image.push_back(
            e_elem - multiply(e_elem, ff_star_sum(g, field, ef.f_set,
                                                  g->edge_range(prov.e))));
        break;
      case EFVertexKind::TerminalVertex:
        t.edge_image.push_back(e_elem);
        break;
    }
  }
  return t;
}

std::vector<Element> ThetaMap::generator_images() const {
  std::vector<Element> gens = vertex_image;
  gens.insert(gens.end(), edge_image.begin(), edge_image.end());
  for (const auto& e : edge_image) gens.push_back(e.involuted());
  return gens;
}

bool RelationReport::all_pass() const {
  return std::all_of(instances.begin(), instances.end(),
                     [](const Instance& i) { return i.pass; });
}

std::size_t RelationReport::failure_count() const {
  return static_cast<std::size_t>(
      std::count_if(instances.begin(), instances.end(),
                    [](const Instance& i) { return !i.pass; }));
}

nlohmann::json RelationReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& i : instances)
    arr.push_back({{"relation", i.relation},
                   {"site", i.site},
                   {"pass", i.pass},
                   {"lhs", i.lhs},
                   {"rhs", i.rhs}});
  return arr;
}

RelationReport check_relations(const ThetaMap& t) {
  const Graph& d = *t.ef.derived;
  RelationReport rep;
  auto record = [&](const std::string& rel, const std::string& site,
                    const Element& lhs, const Element& rhs) {
    rep.instances.push_back(
        {rel, site, lhs == rhs, lhs.to_string(), rhs.to_string()});
  };

  for (std::uint32_t h = 0; h < d.edge_count(); ++h) {
    const Element& eh = t.image_of_edge(h);
    const Element& sv = t.image_of_vertex(d.edge_source(h));
    const Element& rv = t.image_of_vertex(d.edge_range(h));
    record("source", d.edge_id(h), multiply(sv, eh), eh);
    record("source", d.edge_id(h), multiply(eh, rv), eh);
    Element ghost = t.image_of_ghost_edge(h);
    record("range", d.edge_id(h), multiply(rv, ghost), ghost);
    record("range", d.edge_id(h), multiply(ghost, sv), ghost);
  }

  for (std::uint32_t h = 0; h < d.edge_count(); ++h) {
    Element ghost_h = t.image_of_ghost_edge(h);
    for (std::uint32_t h2 = 0; h2 < d.edge_count(); ++h2) {
      Element lhs = multiply(ghost_h, t.image_of_edge(h2));
      Element rhs = h == h2
                        ? t.image_of_vertex(d.edge_range(h))
                        : Element::zero(t.ef.base, t.field);
      record("CK1", d.edge_id(h) + "*," + d.edge_id(h2), lhs, rhs);
    }
  }

  for (std::uint32_t w = 0; w < d.vertex_count(); ++w) {
    if (!d.is_regular(w)) continue;
    Element sum = Element::zero(t.ef.base, t.field);
    for (auto h : d.out_edges(w))
      sum += multiply(t.image_of_edge(h), t.image_of_ghost_edge(h));
    record("CK2", d.vertex_id(w), sum, t.image_of_vertex(w));
  }
  return rep;
}

bool image_contains(const ThetaMap& t, const Element& x, int length_bound,
                    bool* saturated) {
  if (length_bound < 1)
    throw std::invalid_argument("image_contains needs length_bound >= 1");
  SpanSaturator sat(t.generator_images());
  return sat.contains_within(x, length_bound, saturated);
}

bool orthogonal_to_image(const ThetaMap& t, const Element& x) {
  for (const auto& g0 : t.vertex_image) {
    if (!multiply(x, g0).is_zero()) return false;
    if (!multiply(g0, x).is_zero()) return false;
  }
  return true;
}

}  // namespace lpa
