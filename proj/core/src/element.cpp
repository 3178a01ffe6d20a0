#include "lpa/element.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace lpa {

Monomial::Monomial(const Graph& g, Path real_, Path ghost_)
    : real(std::move(real_)), ghost(std::move(ghost_)) {
  (void)g;
  if (real.rng != ghost.rng)
    throw std::invalid_argument("monomial pq* requires r(p) = r(q)");
}

Monomial unchecked_monomial(Path real, Path ghost) {
  return Monomial(std::move(real), std::move(ghost));
}

SpecialEdgeChoice SpecialEdgeChoice::minimal(const Graph& g) {
  SpecialEdgeChoice c;
  c.gamma_.assign(g.vertex_count(), kNone);
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
    if (g.is_regular(v)) c.gamma_[v] = g.out_edges(v).front();
  return c;
}

std::uint32_t SpecialEdgeChoice::at(std::uint32_t v) const {
  if (!defined(v))
    throw std::invalid_argument("special edge undefined at non-regular vertex");
  return gamma_[v];
}

Element Element::vertex(const GraphPtr& g, Field f, std::uint32_t v) {
  if (!g || v >= g->vertex_count())
    throw std::invalid_argument("unknown vertex");
  Element a(g, f);
  a.terms_.emplace(Monomial::vertex(v), Scalar::one(f));
  return a;
}

Element Element::vertex(const GraphPtr& g, Field f, const std::string& id) {
  return vertex(g, f, g->vertex_index(id));
}

Element Element::edge(const GraphPtr& g, Field f, std::uint32_t e) {
  if (!g || e >= g->edge_count()) throw std::invalid_argument("unknown edge");
  Element a(g, f);
  Path p = Path::of_edge(*g, e);
  a.terms_.emplace(unchecked_monomial(p, Path::at_vertex(p.rng)),
                   Scalar::one(f));
  return a;
}

Element Element::edge(const GraphPtr& g, Field f, const std::string& id) {
  return edge(g, f, g->edge_index(id));
}

Element Element::ghost_edge(const GraphPtr& g, Field f, std::uint32_t e) {
  return edge(g, f, e).involuted();
}

Element Element::ghost_edge(const GraphPtr& g, Field f, const std::string& id) {
  return ghost_edge(g, f, g->edge_index(id));
}

Element Element::path_monomial(const GraphPtr& g, Field f, const Path& real,
                               const Path& ghost, const Scalar& coeff) {
  RawTerms raw;
  raw.emplace_back(Monomial(*g, real, ghost), coeff);
  return normalize(g, f, raw);
}

Element Element::identity(const GraphPtr& g, Field f) {
  Element a(g, f);
  for (std::uint32_t v = 0; v < g->vertex_count(); ++v)
    a.terms_.emplace(Monomial::vertex(v), Scalar::one(f));
  return a;
}

Scalar Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void Element::check_compatible(const Element& o) const {
  if (graph_.get() != o.graph_.get())
    throw std::invalid_argument("elements live over different graphs");
  if (!(field_ == o.field_))
    throw std::invalid_argument("elements live over different fields");
}

void Element::add_term(const Monomial& m, const Scalar& k) {
  if (k.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, k);
  if (!fresh) {
    it->second += k;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element Element::operator-() const {
  Element r(graph_, field_);
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, -k);
  return r;
}

Element& Element::operator+=(const Element& o) {
  check_compatible(o);
  for (const auto& [m, k] : o.terms_) add_term(m, k);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  check_compatible(o);
  for (const auto& [m, k] : o.terms_) add_term(m, -k);
  return *this;
}

Element Element::scaled(const Scalar& k) const {
  Element r(graph_, field_);
  if (k.is_zero()) return r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * k);
  return r;
}

bool operator==(const Element& a, const Element& b) {
  a.check_compatible(b);
  return a.terms_ == b.terms_;
}

Element Element::involuted() const {
  Element r(graph_, field_);
  for (const auto& [m, k] : terms_) r.terms_.emplace(m.involuted(), k);
  return r;
}

Element Element::homogeneous_component(long n) const {
  Element r(graph_, field_);
  for (const auto& [m, k] : terms_)
    if (m.degree() == n) r.terms_.emplace(m, k);
  return r;
}

std::optional<long> Element::top_degree() const {
  std::optional<long> d;
  for (const auto& [m, k] : terms_)
    if (!d || m.degree() > *d) d = m.degree();
  return d;
}

Element Element::power(unsigned k) const {
  if (k == 0) throw std::invalid_argument("power requires k >= 1");
  Element acc = *this;
  for (unsigned i = 1; i < k; ++i) acc = multiply(acc, *this);
  return acc;
}

namespace {

// One CK2 step at the tail of a monomial, if it applies there. The rule
// fires when real and ghost are nonempty and share the same final edge equal
// to gamma of its source. A null choice means the graph-minimal one, which
// for a regular vertex is the front of its sorted out-edge list.
bool tail_reducible(const Monomial& m, const SpecialEdgeChoice* gamma,
                    const Graph& g) {
  if (m.real.empty() || m.ghost.empty()) return false;
  std::uint32_t e = m.real.edges.back();
  if (e != m.ghost.edges.back()) return false;
  std::uint32_t v = g.edge_source(e);
  if (gamma) return gamma->defined(v) && gamma->at(v) == e;
  return g.is_regular(v) && g.out_edges(v).front() == e;
}

Path drop_last(const Graph& g, const Path& p) {
  Path q;
  q.edges.assign(p.edges.begin(), p.edges.end() - 1);
  q.src = p.src;
  q.rng = q.edges.empty() ? p.src : g.edge_range(q.edges.back());
  return q;
}

Path append_edge(const Graph& g, const Path& p, std::uint32_t e) {
  Path q = p;
  q.edges.push_back(e);
  q.rng = g.edge_range(e);
  return q;
}

}  // namespace

namespace {

void normalize_into(const GraphPtr& g, const RawTerms& raw,
                    const SpecialEdgeChoice* gamma, std::uint64_t shuffle_seed,
                    std::map<Monomial, Scalar>& terms) {
  std::deque<std::pair<Monomial, Scalar>> pending(raw.begin(), raw.end());
  std::mt19937_64 rng(shuffle_seed);
  while (!pending.empty()) {
    std::size_t pick = 0;
    if (shuffle_seed)
      pick = std::uniform_int_distribution<std::size_t>(0, pending.size() - 1)(
          rng);
    auto [m, k] = pending[pick];
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(pick));
    if (k.is_zero()) continue;
    if (m.real.rng != m.ghost.rng) continue;  // zero monomial
    if (!tail_reducible(m, gamma, *g)) {
      auto [it, fresh] = terms.emplace(m, k);
      if (!fresh) {
        it->second += k;
        if (it->second.is_zero()) terms.erase(it);
      }
      continue;
    }
    std::uint32_t e = m.real.edges.back();
    std::uint32_t v = g->edge_source(e);
    Path pr = drop_last(*g, m.real), gh = drop_last(*g, m.ghost);
    pending.emplace_back(unchecked_monomial(pr, gh), k);
    for (std::uint32_t other : g->out_edges(v)) {
      if (other == e) continue;
      pending.emplace_back(unchecked_monomial(append_edge(*g, pr, other),
                                              append_edge(*g, gh, other)),
                           -k);
    }
  }
}

}  // namespace

Element normalize(const GraphPtr& g, Field f, const RawTerms& raw,
                  const SpecialEdgeChoice& gamma, std::uint64_t shuffle_seed) {
  Element out(g, f);
  normalize_into(g, raw, &gamma, shuffle_seed, out.terms_);
  return out;
}

Element normalize(const GraphPtr& g, Field f, const RawTerms& raw) {
  Element out(g, f);
  normalize_into(g, raw, nullptr, 0, out.terms_);
  return out;
}

namespace {

// q* r over paths; true when composable, with the surviving tail and which
// side it lives on.
struct GhostRealMeet {
  bool nonzero = false;
  bool tail_is_real = false;  // true: q*r = t (real tail of r)
  Path tail;                  // remaining path
};

GhostRealMeet meet(const Path& q, const Path& r, const Graph& g) {
  GhostRealMeet res;
  const std::size_t m = q.length(), k = r.length();
  const std::size_t common = std::min(m, k);
  for (std::size_t i = 0; i < common; ++i)
    if (q.edges[i] != r.edges[i]) return res;
  if (m <= k) {
    if (m == 0 && q.src != r.src) return res;
    res.nonzero = true;
    res.tail_is_real = true;
    res.tail.edges.assign(r.edges.begin() + static_cast<std::ptrdiff_t>(m),
                          r.edges.end());
    res.tail.src = q.rng;
    res.tail.rng =
        res.tail.edges.empty() ? q.rng : g.edge_range(res.tail.edges.back());
  } else {
    if (k == 0 && q.src != r.src) return res;
    res.nonzero = true;
    res.tail_is_real = false;
    res.tail.edges.assign(q.edges.begin() + static_cast<std::ptrdiff_t>(k),
                          q.edges.end());
    res.tail.src = r.rng;
    res.tail.rng =
        res.tail.edges.empty() ? r.rng : g.edge_range(res.tail.edges.back());
  }
  return res;
}

}  // namespace

Element multiply(const Element& a, const Element& b) {
  if (a.graph().get() != b.graph().get())
    throw std::invalid_argument("product of elements over different graphs");
  if (!(a.field() == b.field()))
    throw std::invalid_argument("product of elements over different fields");
  const Graph& g = *a.graph();
  RawTerms raw;
  for (const auto& [ma, ka] : a.terms()) {
    for (const auto& [mb, kb] : b.terms()) {
      auto res = meet(ma.ghost, mb.real, g);
      if (!res.nonzero) continue;
      Scalar k = ka * kb;
      if (res.tail_is_real) {
        // (p q*)(r s*) = (p.t) s*
        auto p = concat(ma.real, res.tail);
        if (!p) continue;
        raw.emplace_back(unchecked_monomial(*p, mb.ghost), k);
      } else {
        // (p q*)(r s*) = p (s.t)*
        auto q = concat(mb.ghost, res.tail);
        if (!q) continue;
        raw.emplace_back(unchecked_monomial(ma.real, *q), k);
      }
    }
  }
  return normalize(a.graph(), a.field(), raw);
}

Element operator*(const Element& a, const Element& b) {
  return multiply(a, b);
}

namespace {

void print_scalar_and_factors(std::ostringstream& os, const Scalar& k,
                              const std::string& factors) {
  if (k.is_one() && !factors.empty()) {
    os << factors;
    return;
  }
  os << k.to_string();
  if (!factors.empty()) os << "*" << factors;
}

}  // namespace

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  const Graph& g = *graph_;
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, k] : terms_) {
    Scalar kk = k;
    bool neg = field_.is_rational() && k.rational() < 0;
    if (neg) kk = -k;
    if (first) {
      first = false;
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    std::string factors;
    for (std::size_t i = 0; i < m.real.edges.size(); ++i) {
      if (!factors.empty()) factors += ".";
      factors += g.edge_id(m.real.edges[i]);
    }
    // ghost path q = g_1...g_k prints as its reversal with stars.
    for (std::size_t i = m.ghost.edges.size(); i-- > 0;) {
      if (!factors.empty()) factors += ".";
      factors += g.edge_id(m.ghost.edges[i]) + "*";
    }
    if (factors.empty()) factors = g.vertex_id(m.real.src);
    print_scalar_and_factors(os, kk, factors);
  }
  return os.str();
}

}  // namespace lpa
