#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "lpa/cli.hpp"
#include "lpa/parse.hpp"
#include "support/corpus.hpp"
#include "support/fixtures.hpp"

using namespace lpa;
using namespace lpa::fixtures;

namespace {
const Field Q = Field::rationals();

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& contents)
      : path("/tmp/lpa_test_" + name) {
    std::ofstream out(path);
    out << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

std::pair<int, nlohmann::json> run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  nlohmann::json j = nlohmann::json::parse(out.str());
  return {code, j};
}

}  // namespace

TEST_CASE("parse_element: basics") {
  auto g = one_loop();
  Element v = Element::vertex(g, Q, "v");
  Element x = Element::edge(g, Q, "x");
  CHECK(parse_element("v + x", g, Q) == v + x);
  CHECK(parse_element("x.x*", g, Q) == v);  // normalized by CK2
  CHECK(parse_element("v - v", g, Q).is_zero());
  CHECK(parse_element("-v", g, Q) == -v);

  auto l3 = line(3);
  Element want =
      Element::path_monomial(
          l3, Q, *concat(Path::of_edge(*l3, l3->edge_index("e1")),
                         Path::of_edge(*l3, l3->edge_index("e2"))),
          Path::at_vertex(l3->vertex_index("v3")), Scalar::from_int(Q, 2)) +
      Element::vertex(l3, Q, "v1").scaled(Scalar::from_fraction(Q, 1, 3));
  CHECK(parse_element("2*e1.e2 + 1/3*v1", l3, Q) == want);

  // ghost factor with coefficient
  Element want2 = Element::ghost_edge(l3, Q, "e2").scaled(
      Scalar::from_int(Q, 2));
  CHECK(parse_element("2*e2*", l3, Q) == want2);

  // real-then-ghost monomial on a graph where e1, e2 share a range
  auto g2 = Graph::Builder()
                .vertex("v1")
                .vertex("v2")
                .vertex("w")
                .edge("e1", "v1", "w")
                .edge("e2", "v2", "w")
                .build();
  Element want3 =
      Element::path_monomial(g2, Q, Path::of_edge(*g2, g2->edge_index("e1")),
                             Path::of_edge(*g2, g2->edge_index("e2")),
                             Scalar::from_int(Q, 2)) +
      Element::vertex(g2, Q, "v1").scaled(Scalar::from_fraction(Q, 1, 3));
  Element parsed3 = parse_element("2*e1.e2* + 1/3*v1", g2, Q);
  CHECK(parsed3 == want3);
  CHECK(parsed3.to_string() == "1/3*v1 + 2*e1.e2*");
}

TEST_CASE("parse_element: bare scalar means scalar times the identity") {
  auto g = line(2);
  CHECK(parse_element("3", g, Q) ==
        Element::identity(g, Q).scaled(Scalar::from_int(Q, 3)));
  CHECK(parse_element("v1 + 1", g, Q) ==
        Element::vertex(g, Q, "v1").scaled(Scalar::from_int(Q, 2)) +
            Element::vertex(g, Q, "v2"));
}

TEST_CASE("parse_element: errors carry positions") {
  auto g = one_loop();
  CHECK_THROWS_AS(parse_element("", g, Q), ParseError);
  CHECK_THROWS_AS(parse_element("v +", g, Q), ParseError);
  CHECK_THROWS_AS(parse_element("nope", g, Q), ParseError);
  CHECK_THROWS_AS(parse_element("2*", g, Q), ParseError);
  CHECK_THROWS_AS(parse_element("1/0*v", g, Q), ParseError);
  CHECK_THROWS_AS(parse_element("1/5*v", g, Field::gf(5)), ParseError);
  try {
    parse_element("v + nope", g, Q);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("parse_element: discontinuous factors are dropped with a warning") {
  auto l3 = line(3);
  std::ostringstream warn;
  // e2.e1 does not compose (r(e2)=v3, s(e1)=v1): term multiplies to zero
  Element a = parse_element("e2.e1 + v1", l3, Q, &warn);
  CHECK(a == Element::vertex(l3, Q, "v1"));
  CHECK(warn.str().find("zero monomial") != std::string::npos);
}

TEST_CASE("print after parse canonicalizes term order") {
  auto g = one_loop();
  CHECK(parse_element("x + v", g, Q).to_string() == "v + x");
  CHECK(parse_element("v + x", g, Q).to_string() == "v + x");
  auto l3 = line(3);
  CHECK(parse_element("e1.e2 + v2 + 3*e1", l3, Q).to_string() ==
        "v2 + 3*e1 + e1.e2");
}

TEST_CASE("round trip: parse(print(a)) == a on random elements") {
  corpus::Rng rng(59);
  std::vector<GraphPtr> graphs{one_loop(), rose(2), line(3), two_cycle(),
                               clock_fw()};
  for (auto& g : corpus::exhaustive_graphs(3, 3)) graphs.push_back(g);
  for (Field f : {Field::rationals(), Field::gf(7)}) {
    for (const auto& g : graphs) {
      for (int i = 0; i < 1000; ++i) {
        Element a = corpus::random_element(g, f, 4, 3, rng);
        CHECK(parse_element(a.to_string(), g, f) == a);
      }
    }
  }
}

TEST_CASE("cli: analyze") {
  TempFile line3("line3.json", line(3)->to_json().dump());
  auto [code, j] = run({"analyze", line3.path});
  CHECK(code == 0);
  CHECK(j.at("acyclic").get<bool>());
  CHECK(j.at("sinks") == nlohmann::json::array({"v3"}));

  TempFile loop("loop.json", one_loop()->to_json().dump());
  auto [code2, j2] = run({"analyze", loop.path});
  CHECK(code2 == 0);
  CHECK_FALSE(j2.at("acyclic").get<bool>());
  CHECK(j2.at("cycle") == "x");
}

TEST_CASE("cli: decompose") {
  TempFile line3("line3b.json", line(3)->to_json().dump());
  auto [code, j] = run({"decompose", line3.path});
  CHECK(code == 0);
  CHECK(j.at("blocks") == nlohmann::json::array({3}));
  CHECK(j.at("dimension").get<int>() == 9);

  TempFile loop("loop2.json", one_loop()->to_json().dump());
  auto [code2, j2] = run({"decompose", loop.path});
  CHECK(code2 == 2);
  CHECK(j2.contains("error"));
}

TEST_CASE("cli: ef and theta-check") {
  TempFile rosef("rose2.json", rose(2)->to_json().dump());
  auto [code, j] = run({"ef", rosef.path, "--edges", "y1"});
  CHECK(code == 0);
  CHECK(j.at("vertices").size() == 2);
  CHECK(j.at("edges").size() == 2);

  auto [code2, j2] = run({"theta-check", rosef.path, "--edges", "y1"});
  CHECK(code2 == 0);
  CHECK(j2.at("all_pass").get<bool>());
  CHECK(j2.at("failures").get<int>() == 0);

  // comma-separated F
  TempFile rose3f("rose3.json", rose(3)->to_json().dump());
  auto [code3, j3] = run({"theta-check", rose3f.path, "--edges", "y1,y2"});
  CHECK(code3 == 0);
  CHECK(j3.at("all_pass").get<bool>());
}

TEST_CASE("cli: bs") {
  TempFile clock("clock.json", clock_fw()->to_json().dump());
  auto [code, j] = run({"bs", clock.path, "--exprs", "v", "--exprs", "f"});
  CHECK(code == 0);
  CHECK(j.at("s4") == nlohmann::json::array({"v"}));
  CHECK(j.at("verification").at("direct_sum").get<bool>());
  CHECK(j.at("verification").at("membership").get<bool>());
}

TEST_CASE("cli: inverse produces verified certificates") {
  TempFile line3("line3c.json", line(3)->to_json().dump());
  for (const char* kind : {"vn", "drazin", "pi", "unit", "clean"}) {
    auto [code, j] = run(
        {"inverse", line3.path, "--expr", "e1 + v3", "--kind", kind});
    CHECK(code == 0);
    CHECK(j.at("verified").get<bool>());
  }
  // over GF(5) as well
  auto [code5, j5] = run({"inverse", line3.path, "--expr", "2*e1.e2 + v1",
                          "--kind", "unit", "--field", "gf:5"});
  CHECK(code5 == 0);
  CHECK(j5.at("verified").get<bool>());
}

TEST_CASE("cli: the --verify-cert pass re-checks by multiplication") {
  TempFile line3("line3d.json", line(3)->to_json().dump());
  auto [code, j] = run(
      {"inverse", line3.path, "--expr", "e1", "--kind", "vn"});
  REQUIRE(code == 0);
  TempFile cert("cert.json", j.dump());
  auto [vcode, vj] = run({"inverse", line3.path, "--verify-cert", cert.path});
  CHECK(vcode == 0);
  CHECK(vj.at("verified").get<bool>());

  // corrupt the witness: verification fails with exit code 1
  auto broken = j;
  broken["y"] = "v1";
  TempFile bad("bad_cert.json", broken.dump());
  auto [bcode, bj] = run({"inverse", line3.path, "--verify-cert", bad.path});
  CHECK(bcode == 1);
  CHECK_FALSE(bj.at("verified").get<bool>());
}

TEST_CASE("cli: refute") {
  TempFile loop("loop3.json", one_loop()->to_json().dump());
  auto [code, j] = run(
      {"refute", loop.path, "--cycle", "x", "--n", "1", "--tmax", "3"});
  CHECK(code == 0);
  CHECK(j.at("verdict") == "CONTRADICTION");

  TempFile two("two_cycle.json", two_cycle()->to_json().dump());
  auto [code2, j2] = run({"refute", two.path, "--cycle", "e.f", "--n", "2"});
  CHECK(code2 == 0);
  CHECK(j2.at("verdict") == "CONTRADICTION");
}

TEST_CASE("parser survives random garbage with clean errors") {
  auto g = line(3);
  corpus::Rng rng(61);
  const std::string alphabet = "ve0123.*+-/ ()x";
  for (int i = 0; i < 2000; ++i) {
    std::string s;
    int len = std::uniform_int_distribution<int>(0, 20)(rng);
    for (int j = 0; j < len; ++j)
      s += alphabet[std::uniform_int_distribution<std::size_t>(
          0, alphabet.size() - 1)(rng)];
    try {
      std::ostringstream warn;
      Element a = parse_element(s, g, Q, &warn);
      // whatever parses must round-trip
      CHECK(parse_element(a.to_string(), g, Q) == a);
    } catch (const ParseError&) {
      // fine: rejected with a position
    }
  }
}

TEST_CASE("field specs and scalar literals validate") {
  CHECK_THROWS_AS(Field::gf(4), std::invalid_argument);
  CHECK_THROWS_AS(Field::gf(0), std::invalid_argument);
  CHECK(Field::parse("gf:7").modulus() == 7);
  CHECK(Field::parse("q").is_rational());
  CHECK_THROWS_AS(Field::parse("gf:abc"), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::from_fraction(Q, 1, 0), std::domain_error);
  CHECK_THROWS_AS(Scalar::from_fraction(Field::gf(5), 1, 5),
                  std::domain_error);
  CHECK(Scalar::parse(Field::gf(5), "7/3").residue() == 4);  // 2 * 3^-1
  CHECK(Scalar::parse(Q, "-6/4").rational() == mpq_class(-3, 2));

  // CLI surfaces a bad field spec as a usage-level input error
  TempFile line3("line3e.json", line(3)->to_json().dump());
  auto [code, j] = run({"analyze", line3.path, "--field", "gf:4"});
  CHECK(code == 2);
  CHECK(j.contains("error"));
}

TEST_CASE("cli: usage and input errors exit 2") {
  std::ostringstream out, err;
  CHECK(run_command({"bogus"}, out, err) == 2);
  CHECK(run_command({}, out, err) == 2);

  auto [code, j] = run({"analyze", "/nonexistent/graph.json"});
  CHECK(code == 2);
  CHECK(j.contains("error"));

  TempFile badjson("bad.json", "{\"vertices\":[],\"edges\":[],\"x\":1}");
  auto [code2, j2] = run({"analyze", badjson.path});
  CHECK(code2 == 2);
  CHECK(j2.at("error").at("kind") == "input");
}
