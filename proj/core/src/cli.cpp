#include "lpa/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lpa/matreg.hpp"
#include "lpa/obstruction.hpp"
#include "lpa/parse.hpp"
#include "lpa/subalg.hpp"
#include "lpa/theta.hpp"

namespace lpa {

namespace {

using nlohmann::json;

GraphPtr load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  json j;
  in >> j;
  return Graph::from_json(j);
}

std::vector<std::string> split_commas(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& item : raw) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ','))
      if (!part.empty()) out.push_back(part);
  }
  return out;
}

Path parse_path(const GraphPtr& g, const std::string& text) {
  std::stringstream ss(text);
  std::string part;
  std::vector<std::string> ids;
  while (std::getline(ss, part, '.'))
    if (!part.empty()) ids.push_back(part);
  if (ids.empty()) throw std::invalid_argument("empty path");
  if (ids.size() == 1 && g->has_vertex(ids[0]))
    return Path::at_vertex(g->vertex_index(ids[0]));
  Path p = Path::of_edge(*g, g->edge_index(ids[0]));
  for (std::size_t i = 1; i < ids.size(); ++i) {
    auto q = concat(p, Path::of_edge(*g, g->edge_index(ids[i])));
    if (!q) throw std::invalid_argument("path does not compose: " + text);
    p = *q;
  }
  return p;
}

int emit_error(std::ostream& out, const std::string& kind,
               const std::string& message, int code) {
  out << json{{"error", {{"kind", kind}, {"message", message}}}}.dump(2)
      << "\n";
  return code;
}

RegularityCertificate certificate_from_json(const json& j, const GraphPtr& g,
                                            Field field) {
  auto text_element = [&](const char* key) {
    return parse_element(j.at(key).get<std::string>(), g, field);
  };
  std::string kind = j.at("kind").get<std::string>();
  RegularityCertificate c{RegularityCertificate::Kind::VonNeumann,
                          text_element("subject"),
                          {}, 0, {}, {}, {}, {}};
  if (kind == "vonNeumann") {
    c.kind = RegularityCertificate::Kind::VonNeumann;
    c.y = text_element("y");
  } else if (kind == "drazin") {
    c.kind = RegularityCertificate::Kind::Drazin;
    c.n = j.at("n").get<int>();
    c.x = text_element("x");
  } else if (kind == "piRegular") {
    c.kind = RegularityCertificate::Kind::PiRegular;
    c.n = j.at("n").get<int>();
    c.y = text_element("y");
  } else if (kind == "unitRegular") {
    c.kind = RegularityCertificate::Kind::UnitRegular;
    c.u = text_element("u");
    c.u_inv = text_element("u_inv");
  } else if (kind == "specialClean") {
    c.kind = RegularityCertificate::Kind::SpecialClean;
    c.u = text_element("u");
    c.u_inv = text_element("u_inv");
    c.e = text_element("e");
  } else {
    throw std::invalid_argument("unknown certificate kind: " + kind);
  }
  return c;
}

int cmd_analyze(const GraphPtr& g, std::ostream& out) {
  auto cycle = g->find_cycle();
  json sinks = json::array();
  for (const auto& s : g->sinks()) sinks.push_back(s);
  json regular = json::array(), emitters = json::array();
  for (std::uint32_t v = 0; v < g->vertex_count(); ++v) {
    if (g->is_regular(v)) regular.push_back(g->vertex_id(v));
    if (g->infinite_emitter(v)) emitters.push_back(g->vertex_id(v));
  }
  json j{{"acyclic", !cycle.has_value()},
         {"sinks", sinks},
         {"regular_vertices", regular},
         {"infinite_emitters", emitters},
         {"vertex_count", g->vertex_count()},
         {"edge_count", g->edge_count()}};
  j["cycle"] = cycle ? json(g->path_to_string(*cycle)) : json(nullptr);
  out << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"Leavitt path algebra computation kernel"};
  app.require_subcommand(1);

  std::string graph_file, field_spec = "q";
  std::vector<std::string> edges_raw, exprs;
  std::string expr, kind = "vn", cycle_text, cert_file;
  int n_arg = 1, tmax = 3, bound = 4;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("graph", graph_file, "graph JSON file")->required();
    sub->add_option("--field", field_spec, "scalar field: q or gf:<p>");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "structural queries");
  add_common(analyze);
  CLI::App* ef = app.add_subcommand("ef", "derived finite graph of an edge set");
  add_common(ef);
  ef->add_option("--edges", edges_raw, "edges of F (comma separated)")
      ->required();
  CLI::App* theta = app.add_subcommand("theta-check",
                                       "relation check of the induced map");
  add_common(theta);
  theta->add_option("--edges", edges_raw, "edges of F")->required();
  CLI::App* bs = app.add_subcommand("bs", "subalgebra attached to elements");
  add_common(bs);
  bs->add_option("--exprs", exprs, "element expressions")->required();
  bs->add_option("--bound", bound, "product length bound for membership");
  CLI::App* dec = app.add_subcommand("decompose", "matrix block sizes");
  add_common(dec);
  CLI::App* inv = app.add_subcommand("inverse", "regularity certificate");
  add_common(inv);
  inv->add_option("--expr", expr, "subject element");
  inv->add_option("--kind", kind, "vn|drazin|pi|unit|clean");
  inv->add_option("--verify-cert", cert_file,
                  "re-verify a stored certificate instead of producing one");
  CLI::App* refute = app.add_subcommand("refute", "cycle obstruction report");
  add_common(refute);
  refute->add_option("--cycle", cycle_text, "cycle as dot-separated edges")
      ->required();
  refute->add_option("--n", n_arg, "exponent");
  refute->add_option("--tmax", tmax, "forced coefficients to compute");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    return emit_error(out, "usage", e.what(), 2);
  }

  try {
    Field field = Field::parse(field_spec);
    GraphPtr g = load_graph(graph_file);

    if (*analyze) return cmd_analyze(g, out);

    if (*ef) {
      auto efg = build_ef(g, split_commas(edges_raw));
      out << efg.to_json().dump(2) << "\n";
      return 0;
    }

    if (*theta) {
      auto t = build_theta(g, split_commas(edges_raw), field);
      auto rep = check_relations(t);
      json j{{"all_pass", rep.all_pass()},
             {"failures", rep.failure_count()},
             {"instances", rep.to_json()}};
      out << j.dump(2) << "\n";
      return rep.all_pass() ? 0 : 1;
    }

    if (*bs) {
      std::vector<Element> inputs;
      for (const auto& text : exprs)
        inputs.push_back(parse_element(text, g, field, &err));
      auto d = build_bs(inputs);
      bool direct = verify_direct_sum(d);
      bool saturated = false;
      bool member = verify_membership(d, bound, &saturated);
      json j = d.to_json();
      j["verification"] = {{"direct_sum", direct},
                           {"membership", member},
                           {"membership_bound", bound},
                           {"span_saturated", saturated}};
      out << j.dump(2) << "\n";
      return (direct && member) ? 0 : 1;
    }

    if (*dec) {
      auto d = decompose(g, field);
      json blocks = json::array();
      for (auto m : d.block_sizes()) blocks.push_back(m);
      json sinks = json::array();
      for (auto s : d.sink_vertices()) sinks.push_back(g->vertex_id(s));
      out << json{{"blocks", blocks},
                  {"sinks", sinks},
                  {"dimension", dimension(g)}}
              .dump(2)
          << "\n";
      return 0;
    }

    if (*inv) {
      auto d = decompose(g, field);
      if (!cert_file.empty()) {
        std::ifstream in(cert_file);
        if (!in)
          throw std::invalid_argument("cannot open certificate: " + cert_file);
        json cj;
        in >> cj;
        auto cert = certificate_from_json(cj, g, field);
        bool ok = verify_certificate(d, cert);
        out << json{{"verified", ok}}.dump(2) << "\n";
        return ok ? 0 : 1;
      }
      if (expr.empty())
        return emit_error(out, "usage", "inverse needs --expr or --verify-cert",
                          2);
      Element a = parse_element(expr, g, field, &err);
      RegularityCertificate cert{RegularityCertificate::Kind::VonNeumann, a,
                                 {}, 0, {}, {}, {}, {}};
      if (kind == "vn")
        cert = vn_inverse(d, a);
      else if (kind == "drazin")
        cert = drazin_witness(d, a);
      else if (kind == "pi")
        cert = pi_witness_from_drazin(drazin_witness(d, a));
      else if (kind == "unit")
        cert = unit_regular_inverse(d, a);
      else if (kind == "clean")
        cert = special_clean(d, a);
      else
        return emit_error(out, "usage", "unknown --kind " + kind, 2);
      bool ok = verify_certificate(d, cert);
      json j = cert.to_json();
      j["verified"] = ok;
      out << j.dump(2) << "\n";
      return ok ? 0 : 1;
    }

    if (*refute) {
      Path c = parse_path(g, cycle_text);
      auto rep = refutation_report(g, c, n_arg, tmax, field);
      out << rep.to_json().dump(2) << "\n";
      return rep.contradiction ? 0 : 1;
    }
  } catch (const ParseError& e) {
    return emit_error(out, "parse", e.what(), 2);
  } catch (const nlohmann::json::exception& e) {
    return emit_error(out, "json", e.what(), 2);
  } catch (const std::domain_error& e) {
    return emit_error(out, "precondition", e.what(), 2);
  } catch (const std::invalid_argument& e) {
    return emit_error(out, "input", e.what(), 2);
  }
  return emit_error(out, "usage", "no subcommand", 2);
}

}  // namespace lpa
