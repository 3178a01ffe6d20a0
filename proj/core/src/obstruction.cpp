#include "lpa/obstruction.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "lpa/matrix.hpp"

namespace lpa {

bool IntPolynomial::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](const mpz_class& c) { return c == 0; });
}

void IntPolynomial::trim() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

std::string IntPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    if (coeffs[k] == 0) continue;
    mpz_class c = coeffs[k];
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    mpz_class mag = abs(c);
    if (k == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "c";
      if (k > 1) os << "^" << k;
    }
  }
  if (first) os << "0";
  return os.str();
}

namespace {

mpz_class binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

IntPolynomial shift_scaled(const IntPolynomial& p, int d,
                           const mpz_class& k) {
  IntPolynomial q;
  q.coeffs.assign(p.coeffs.size() + static_cast<std::size_t>(d), 0);
  for (std::size_t i = 0; i < p.coeffs.size(); ++i)
    q.coeffs[i + static_cast<std::size_t>(d)] = k * p.coeffs[i];
  return q;
}

void sub_into(IntPolynomial& a, const IntPolynomial& b) {
  if (a.coeffs.size() < b.coeffs.size()) a.coeffs.resize(b.coeffs.size(), 0);
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) a.coeffs[i] -= b.coeffs[i];
}

}  // namespace

CyclePowerSeries forced_coefficients(int s, int n, int t_max) {
  if (s < 1 || n < 1 || t_max < 0)
    throw std::invalid_argument("forced_coefficients: need s,n >= 1, t_max >= 0");
  CyclePowerSeries series{s, n, {}};
  series.coeffs.push_back(IntPolynomial{{1}});  // a_0 = v
  for (int t = 1; t <= t_max; ++t) {
    IntPolynomial f;
    f.coeffs.assign(static_cast<std::size_t>(t) + 1, 0);
    f.coeffs.back() = binom(n, t);
    for (int d = 1; d <= t; ++d)
      sub_into(f, shift_scaled(series.coeffs[static_cast<std::size_t>(t - d)],
                               d, binom(2L * n, d)));
    f.trim();
    series.coeffs.push_back(std::move(f));
  }
  return series;
}

namespace {

void require_cycle(const GraphPtr& g, const Path& c) {
  if (c.empty()) throw std::domain_error("not a cycle: empty path");
  std::set<std::uint32_t> sources;
  std::uint32_t at = g->edge_source(c.edges.front());
  if (at != c.src) throw std::domain_error("not a cycle: bad source field");
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    std::uint32_t e = c.edges[i];
    if (e >= g->edge_count()) throw std::domain_error("not a cycle: bad edge");
    if (g->edge_source(e) != at)
      throw std::domain_error("not a cycle: edges do not compose");
    if (!sources.insert(at).second)
      throw std::domain_error("not a cycle: repeated source vertex");
    at = g->edge_range(e);
  }
  if (at != c.src) throw std::domain_error("not a cycle: not closed");
}

}  // namespace

Path cycle_power(const Path& cycle, int k) {
  if (k < 0) throw std::invalid_argument("cycle_power: k >= 0");
  Path p = Path::at_vertex(cycle.src);
  for (int i = 0; i < k; ++i) p = *concat(p, cycle);
  return p;
}

Element vertex_plus_cycle(const GraphPtr& g, Field f, const Path& cycle) {
  require_cycle(g, cycle);
  return Element::vertex(g, f, cycle.src) +
         Element::path_monomial(g, f, cycle, Path::at_vertex(cycle.src),
                                Scalar::one(f));
}

bool check_candidate(const GraphPtr& g, const Path& cycle, int n,
                     const Element& alpha) {
  require_cycle(g, cycle);
  if (n < 1) throw std::invalid_argument("check_candidate: n >= 1");
  Field f = alpha.field();
  Element v = Element::vertex(g, f, cycle.src);
  Element corner = multiply(multiply(v, alpha), v);
  Element gamma_n = vertex_plus_cycle(g, f, cycle).power(
      static_cast<unsigned>(n));
  return multiply(multiply(gamma_n, corner), gamma_n) == gamma_n;
}

namespace {

// f(c) as an element: sum of coeff_k * c^k monomials based at the cycle's
// source vertex.
Element poly_at_cycle(const GraphPtr& g, Field f, const Path& cycle,
                      const IntPolynomial& poly) {
  Element acc = Element::zero(g, f);
  for (std::size_t k = 0; k < poly.coeffs.size(); ++k) {
    if (poly.coeffs[k] == 0) continue;
    Scalar coeff = Scalar::from_fraction(f, poly.coeffs[k], 1);
    acc += Element::path_monomial(g, f, cycle_power(cycle, static_cast<int>(k)),
                                  Path::at_vertex(cycle.src), coeff);
  }
  return acc;
}

}  // namespace

std::vector<Monomial> default_inner_inverse_basis(const GraphPtr& g,
                                                  const Path& cycle,
                                                  int length_cap) {
  require_cycle(g, cycle);
  if (length_cap < 0) throw std::invalid_argument("negative length cap");
  // Forward and backward closures of the cycle's vertex set.
  std::set<std::uint32_t> cyc_vs;
  for (auto e : cycle.edges) {
    cyc_vs.insert(g->edge_source(e));
    cyc_vs.insert(g->edge_range(e));
  }
  auto closure = [&](bool forward) {
    std::set<std::uint32_t> seen = cyc_vs;
    std::vector<std::uint32_t> work(seen.begin(), seen.end());
    while (!work.empty()) {
      std::uint32_t v = work.back();
      work.pop_back();
      const auto& es = forward ? g->out_edges(v) : g->in_edges(v);
      for (auto e : es) {
        std::uint32_t w = forward ? g->edge_range(e) : g->edge_source(e);
        if (seen.insert(w).second) work.push_back(w);
      }
    }
    return seen;
  };
  auto fwd = closure(true), bwd = closure(false);
  std::set<std::uint32_t> keep;
  std::set_intersection(fwd.begin(), fwd.end(), bwd.begin(), bwd.end(),
                        std::inserter(keep, keep.begin()));

  // All paths of length <= cap inside the kept vertex set, grouped by range.
  std::vector<std::vector<Path>> by_range(g->vertex_count());
  std::vector<Path> frontier;
  for (auto v : keep) {
    Path p = Path::at_vertex(v);
    by_range[v].push_back(p);
    frontier.push_back(p);
  }
  for (int len = 1; len <= length_cap; ++len) {
    std::vector<Path> next;
    for (const auto& p : frontier) {
      for (auto e : g->out_edges(p.rng)) {
        std::uint32_t w = g->edge_range(e);
        if (!keep.count(w)) continue;
        Path q = *concat(p, Path::of_edge(*g, e));
        by_range[w].push_back(q);
        next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }

  const SpecialEdgeChoice gamma = SpecialEdgeChoice::minimal(*g);
  std::vector<Monomial> basis;
  for (std::uint32_t v = 0; v < g->vertex_count(); ++v) {
    for (const auto& p : by_range[v]) {
      for (const auto& q : by_range[v]) {
        if (p.length() + q.length() > static_cast<std::size_t>(length_cap))
          continue;
        bool reducible =
            !p.empty() && !q.empty() && p.edges.back() == q.edges.back() &&
            gamma.defined(g->edge_source(p.edges.back())) &&
            gamma.at(g->edge_source(p.edges.back())) == p.edges.back();
        if (!reducible) basis.push_back(unchecked_monomial(p, q));
      }
    }
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

std::optional<Element> solve_inner_inverse_bounded(
    const GraphPtr& g, const Element& x, int n,
    const std::vector<Monomial>& basis) {
  if (n < 1) throw std::invalid_argument("solve_inner_inverse_bounded: n >= 1");
  const Field f = x.field();
  Element xn = x.power(static_cast<unsigned>(n));

  // Columns: x^n b x^n over the basis; rows: every monomial coordinate seen.
  std::vector<Element> cols;
  cols.reserve(basis.size());
  std::map<Monomial, std::size_t> coord;
  auto touch = [&](const Element& el) {
    for (const auto& [m, k] : el.terms()) coord.emplace(m, coord.size());
  };
  for (const auto& b : basis) {
    Element bel = Element::path_monomial(g, f, b.real, b.ghost,
                                         Scalar::one(f));
    Element col = multiply(multiply(xn, bel), xn);
    touch(col);
    cols.push_back(std::move(col));
  }
  touch(xn);

  Matrix a(f, coord.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [m, k] : cols[j].terms()) a.at(coord.at(m), j) = k;
  std::vector<Scalar> rhs(coord.size(), Scalar::zero(f));
  for (const auto& [m, k] : xn.terms()) rhs[coord.at(m)] = k;

  auto sol = a.solve(rhs);
  if (!sol) return std::nullopt;
  RawTerms raw;
  for (std::size_t j = 0; j < basis.size(); ++j)
    if (!(*sol)[j].is_zero()) raw.emplace_back(basis[j], (*sol)[j]);
  return normalize(g, f, raw);
}

nlohmann::json RefutationReport::to_json() const {
  nlohmann::json fs = nlohmann::json::array();
  for (const auto& f : forced.coeffs) {
    nlohmann::json poly = nlohmann::json::array();
    for (const auto& c : f.coeffs) poly.push_back(c.get_str());
    fs.push_back(poly);
  }
  return {{"s", s},
          {"n", n},
          {"t_max", t_max},
          {"forced_coefficients", fs},
          {"components_commute_with_cycle", components_commute_with_cycle},
          {"degree_comparison",
           {{"left", left_degree},
            {"left_window", left_degree_window},
            {"right", right_degree},
            {"max_surviving_index", max_surviving_index}}},
          {"linear_system",
           {{"basis_size", basis_size},
            {"rank_unaugmented", rank_unaugmented},
            {"rank_augmented", rank_augmented},
            {"infeasible", system_infeasible}}},
          {"verdict", contradiction ? "CONTRADICTION" : "UNDECIDED"}};
}

RefutationReport refutation_report(const GraphPtr& g, const Path& cycle, int n,
                                   int t_max, Field field) {
  require_cycle(g, cycle);
  if (n < 1 || t_max < 0)
    throw std::invalid_argument("refutation_report: need n >= 1, t_max >= 0");
  const int s = static_cast<int>(cycle.length());

  RefutationReport rep;
  rep.s = s;
  rep.n = n;
  rep.t_max = t_max;
  rep.forced = forced_coefficients(s, n, t_max);

  if (!field.is_rational()) {
    const mpz_class p = field.modulus();
    for (int k = 1; k <= n; ++k)
      if (binom(n, k) % p == 0)
        throw std::domain_error(
            "refutation_report: binomial coefficient vanishes mod p");
    for (const auto& f : rep.forced.coeffs)
      for (const auto& c : f.coeffs)
        if (c != 0 && c % p == 0)
          throw std::domain_error(
              "refutation_report: forced coefficient vanishes mod p");
  }

  Element c_elem = Element::path_monomial(
      g, field, cycle, Path::at_vertex(cycle.src), Scalar::one(field));
  rep.components_commute_with_cycle = true;
  for (const auto& f : rep.forced.coeffs) {
    Element fe = poly_at_cycle(g, field, cycle, f);
    if (multiply(fe, c_elem) != multiply(c_elem, fe))
      rep.components_commute_with_cycle = false;
  }

  Element gamma = vertex_plus_cycle(g, field, cycle);
  Element gamma_2n = gamma.power(static_cast<unsigned>(2 * n));
  rep.max_surviving_index = 0;
  for (int k = t_max; k >= 0; --k) {
    Element fe = poly_at_cycle(g, field, cycle, rep.forced.coeffs[
        static_cast<std::size_t>(k)]);
    if (!multiply(fe, gamma_2n).is_zero()) {
      rep.max_surviving_index = k * s;
      break;
    }
  }
  rep.left_degree = 2L * s * n;
  rep.left_degree_window = 2L * s * n + rep.max_surviving_index;
  rep.right_degree = static_cast<long>(n) * s;
  rep.contradiction = rep.left_degree > rep.right_degree;

  // Bounded linear-system record.
  const int cap = std::max(2 * n * s, t_max * s);
  auto basis = default_inner_inverse_basis(g, cycle, cap);
  rep.basis_size = basis.size();
  {
    Element xn = gamma.power(static_cast<unsigned>(n));
    std::map<Monomial, std::size_t> coord;
    std::vector<Element> cols;
    for (const auto& b : basis) {
      Element bel = Element::path_monomial(g, field, b.real, b.ghost,
                                           Scalar::one(field));
      Element col = multiply(multiply(xn, bel), xn);
      for (const auto& [m, kk] : col.terms()) coord.emplace(m, coord.size());
      cols.push_back(std::move(col));
    }
    for (const auto& [m, kk] : xn.terms()) coord.emplace(m, coord.size());
    Matrix a(field, coord.size(), cols.size());
    Matrix aug(field, coord.size(), cols.size() + 1);
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (const auto& [m, kk] : cols[j].terms()) {
        a.at(coord.at(m), j) = kk;
        aug.at(coord.at(m), j) = kk;
      }
    for (const auto& [m, kk] : xn.terms()) aug.at(coord.at(m), cols.size()) = kk;
    rep.rank_unaugmented = a.rank();
    rep.rank_augmented = aug.rank();
    rep.system_infeasible = rep.rank_augmented > rep.rank_unaugmented;
  }
  return rep;
}

}  // namespace lpa
