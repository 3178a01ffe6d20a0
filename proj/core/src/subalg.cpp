#include "lpa/subalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "lpa/span.hpp"

namespace lpa {

namespace {

Element u_element(const GraphPtr& g, Field field,
                  const std::vector<std::uint32_t>& f_set, std::uint32_t w) {
  Element acc = Element::vertex(g, field, w);
  for (auto f : f_set) {
    if (g->edge_source(f) != w) continue;
    Path pf = Path::of_edge(*g, f);
    acc -= Element::path_monomial(g, field, pf, pf, Scalar::one(field));
  }
  return acc;
}

}  // namespace

SubalgebraData build_bs(const std::vector<Element>& inputs) {
  if (inputs.empty()) throw std::invalid_argument("build_bs: empty input set");
  const GraphPtr& g = inputs.front().graph();
  const Field field = inputs.front().field();
  for (const auto& a : inputs) {
    if (a.is_zero())
      throw std::invalid_argument("build_bs: inputs must be nonzero");
    if (a.graph().get() != g.get() || !(a.field() == field))
      throw std::invalid_argument("build_bs: mixed graphs or fields");
  }

  std::set<std::uint32_t> fset, sset;
  for (const auto& a : inputs) {
    for (const auto& [m, k] : a.terms()) {
      if (m.total_length() == 0) {
        sset.insert(m.real.src);
      } else {
        fset.insert(m.real.edges.begin(), m.real.edges.end());
        fset.insert(m.ghost.edges.begin(), m.ghost.edges.end());
      }
    }
  }

  SubalgebraData d;
  d.inputs = inputs;
  d.graph = g;
  d.field = field;
  d.f_set.assign(fset.begin(), fset.end());
  d.s_all.assign(sset.begin(), sset.end());

  std::set<std::uint32_t> rF;
  for (auto f : d.f_set) rF.insert(g->edge_range(f));
  for (auto v : d.s_all) {
    if (rF.count(v)) {
      d.s1.push_back(v);
      continue;
    }
    bool meets_f = false, meets_complement = g->infinite_emitter(v);
    for (auto e : g->out_edges(v)) {
      if (fset.count(e))
        meets_f = true;
      else
        meets_complement = true;
    }
    if (!meets_f) {
      d.s3.push_back(v);  // includes sinks: s^-1(v) empty misses F
    } else if (!meets_complement) {
      d.s2.push_back(v);
    } else {
      d.s4.push_back(v);
      d.u_elements.emplace(v, u_element(g, field, d.f_set, v));
    }
  }

  if (!d.f_set.empty()) d.theta = build_theta(build_ef_indices(g, d.f_set), field);
  return d;
}

nlohmann::json SubalgebraData::to_json() const {
  auto vertex_names = [&](const std::vector<std::uint32_t>& vs) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto v : vs) arr.push_back(graph->vertex_id(v));
    return arr;
  };
  nlohmann::json f_names = nlohmann::json::array();
  for (auto e : f_set) f_names.push_back(graph->edge_id(e));
  nlohmann::json us = nlohmann::json::object();
  for (const auto& [w, u] : u_elements)
    us[graph->vertex_id(w)] = u.to_string();
  return {{"f_set", f_names},
          {"s", vertex_names(s_all)},
          {"s1", vertex_names(s1)},
          {"s2", vertex_names(s2)},
          {"s3", vertex_names(s3)},
          {"s4", vertex_names(s4)},
          {"u_elements", us}};
}

std::vector<Element> SubalgebraData::generators() const {
  std::vector<Element> gens;
  if (theta) gens = theta->generator_images();
  for (auto v : s3) gens.push_back(Element::vertex(graph, field, v));
  for (const auto& [w, u] : u_elements) gens.push_back(u);
  return gens;
}

bool verify_direct_sum(const SubalgebraData& d) {
  std::vector<Element> idems;
  for (auto v : d.s3) idems.push_back(Element::vertex(d.graph, d.field, v));
  for (const auto& [w, u] : d.u_elements) idems.push_back(u);

  for (std::size_t i = 0; i < idems.size(); ++i) {
    for (std::size_t j = 0; j < idems.size(); ++j) {
      Element prod = multiply(idems[i], idems[j]);
      if (i == j ? prod != idems[i] : !prod.is_zero()) return false;
    }
  }
  if (!d.theta) return true;
  for (const auto& x : idems) {
    for (const auto& g0 : d.theta->vertex_image) {
      if (!multiply(x, g0).is_zero()) return false;
      if (!multiply(g0, x).is_zero()) return false;
    }
  }
  return true;
}

bool verify_membership(const SubalgebraData& d, int length_bound,
                       bool* saturated) {
  if (length_bound < 1)
    throw std::invalid_argument("verify_membership needs length_bound >= 1");
  SpanSaturator sat(d.generators());
  bool all = true;
  for (const auto& a : d.inputs)
    all = sat.contains_within(a, length_bound, saturated) && all;
  return all;
}

bool verify_directedness(const std::vector<Element>& s1_inputs,
                         const std::vector<Element>& s2_inputs,
                         int length_bound) {
  SubalgebraData b1 = build_bs(s1_inputs);
  SubalgebraData b2 = build_bs(s2_inputs);
  std::vector<Element> t_inputs;
  for (const auto& x : b1.generators())
    if (!x.is_zero()) t_inputs.push_back(x);
  for (const auto& x : b2.generators())
    if (!x.is_zero()) t_inputs.push_back(x);
  SubalgebraData bt = build_bs(t_inputs);
  SpanSaturator sat(bt.generators());
  for (const auto& gen : t_inputs)
    if (!sat.contains_within(gen, length_bound)) return false;
  return true;
}

}  // namespace lpa
