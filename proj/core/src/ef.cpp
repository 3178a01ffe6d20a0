#include "lpa/ef.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace lpa {

EFGraph build_ef(const GraphPtr& g, const std::vector<std::string>& f_ids) {
  std::vector<std::uint32_t> f;
  for (const auto& id : f_ids) f.push_back(g->edge_index(id));
  return build_ef_indices(g, std::move(f));
}

EFGraph build_ef_indices(const GraphPtr& g, std::vector<std::uint32_t> f) {
  if (!g) throw std::invalid_argument("null graph");
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  if (f.empty()) throw std::invalid_argument("build_ef: F must be nonempty");
  for (auto e : f)
    if (e >= g->edge_count())
      throw std::invalid_argument("build_ef: edge index not in graph");

  std::set<std::uint32_t> fset(f.begin(), f.end());
  std::set<std::uint32_t> sF, rF;
  for (auto e : f) {
    sF.insert(g->edge_source(e));
    rF.insert(g->edge_range(e));
  }
  auto emits_outside_f = [&](std::uint32_t v) {
    if (g->infinite_emitter(v)) return true;
    for (auto e : g->out_edges(v))
      if (!fset.count(e)) return true;
    return false;
  };

  EFGraph ef;
  ef.base = g;
  ef.f_set = f;

  Graph::Builder b;
  std::vector<std::pair<std::string, EFGraph::VertexProvenance>> verts;
  for (auto e : f)
    verts.push_back({g->edge_id(e), {EFVertexKind::EdgeVertex, e}});
  for (auto v : rF) {
    if (sF.count(v)) {
      if (emits_outside_f(v))
        verts.push_back({g->vertex_id(v), {EFVertexKind::BoundaryVertex, v}});
    } else {
      verts.push_back({g->vertex_id(v), {EFVertexKind::TerminalVertex, v}});
    }
  }
  for (auto& [id, prov] : verts) b.vertex(id);

  // s(x) for an E_F vertex: the source of the edge it came from, or the
  // vertex of E itself.
  auto source_in_e = [&](const EFGraph::VertexProvenance& p) {
    return p.kind == EFVertexKind::EdgeVertex ? g->edge_source(p.ref) : p.ref;
  };

  struct PendingEdge {
    std::string id, src, dst;
    std::uint32_t e;
    std::string target_id;
  };
  std::vector<PendingEdge> pend;
  for (auto e : f)
    for (auto& [xid, xprov] : verts)
      if (g->edge_range(e) == source_in_e(xprov))
        pend.push_back({"(" + g->edge_id(e) + "," + xid + ")", g->edge_id(e),
                        xid, e, xid});
  for (auto& pe : pend) b.edge(pe.id, pe.src, pe.dst);

  ef.derived = b.build();
  ef.vertex_provenance.resize(ef.derived->vertex_count());
  for (auto& [id, prov] : verts)
    ef.vertex_provenance[ef.derived->vertex_index(id)] = prov;
  ef.edge_provenance.resize(ef.derived->edge_count());
  for (auto& pe : pend)
    ef.edge_provenance[ef.derived->edge_index(pe.id)] = {
        pe.e, ef.derived->vertex_index(pe.target_id)};
  return ef;
}

nlohmann::json EFGraph::to_json() const {
  nlohmann::json j = derived->to_json();
  const char* kind_names[] = {"edge", "boundary", "terminal"};
  for (auto& v : j.at("vertices")) {
    std::uint32_t idx = derived->vertex_index(v.at("id").get<std::string>());
    const auto& p = vertex_provenance.at(idx);
    v["provenance"] = {
        {"kind", kind_names[static_cast<int>(p.kind)]},
        {"ref", p.kind == EFVertexKind::EdgeVertex ? base->edge_id(p.ref)
                                                   : base->vertex_id(p.ref)}};
  }
  for (auto& e : j.at("edges")) {
    std::uint32_t idx = derived->edge_index(e.at("id").get<std::string>());
    const auto& p = edge_provenance.at(idx);
    e["provenance"] = {{"edge", base->edge_id(p.e)},
                       {"target", derived->vertex_id(p.target)}};
  }
  return j;
}

}  // namespace lpa
