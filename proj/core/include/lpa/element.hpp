#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpa/field.hpp"
#include "lpa/graph.hpp"

namespace lpa {

/// A spanning monomial pq*: a real path p and a ghost path q with
/// r(p) = r(q). Monomials with mismatched ranges are zero and are never
/// constructed. Degree is length(p) - length(q).
struct Monomial {
  Path real, ghost;

  Monomial(const Graph& g, Path real_, Path ghost_);
  static Monomial vertex(std::uint32_t v) {
    return Monomial(Path::at_vertex(v), Path::at_vertex(v));
  }

  std::size_t total_length() const {
    return real.length() + ghost.length();
  }
  long degree() const {
    return static_cast<long>(real.length()) -
           static_cast<long>(ghost.length());
  }
  Monomial involuted() const { return Monomial(ghost, real); }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.real == b.real && a.ghost == b.ghost;
  }
  /// Canonical order: (total length, real path, ghost path).
  friend std::strong_ordering operator<=>(const Monomial& a,
                                          const Monomial& b) {
    if (auto c = a.total_length() <=> b.total_length(); c != 0) return c;
    if (auto c = a.real <=> b.real; c != 0) return c;
    return a.ghost <=> b.ghost;
  }

 private:
  Monomial(Path real_, Path ghost_)
      : real(std::move(real_)), ghost(std::move(ghost_)) {}
  friend class Element;
  friend Monomial unchecked_monomial(Path, Path);
};

/// Internal factory that skips the range check (for monomials produced by
/// operations that preserve it).
Monomial unchecked_monomial(Path real, Path ghost);

/// The normal-form basis selector: at each regular vertex v the special
/// edge gamma(v) is the minimal outgoing edge id; the CK2 rewrite is only
/// ever applied through gamma(v). Defined exactly on regular vertices.
class SpecialEdgeChoice {
 public:
  static SpecialEdgeChoice minimal(const Graph& g);

  bool defined(std::uint32_t v) const {
    return v < gamma_.size() && gamma_[v] != kNone;
  }
  std::uint32_t at(std::uint32_t v) const;

 private:
  static constexpr std::uint32_t kNone = 0xffffffffu;
  std::vector<std::uint32_t> gamma_;
};

using RawTerms = std::vector<std::pair<Monomial, Scalar>>;

/// An element of L_K(E): a finite K-linear combination of normal-form
/// monomials pq* over a fixed graph and session field. Zero has no terms.
/// Elements are immutable values; all operations are pure.
class Element {
 public:
  Element(GraphPtr g, Field f) : graph_(std::move(g)), field_(f) {}

  static Element zero(GraphPtr g, Field f) { return Element(std::move(g), f); }
  static Element vertex(const GraphPtr& g, Field f, std::uint32_t v);
  static Element vertex(const GraphPtr& g, Field f, const std::string& id);
  static Element edge(const GraphPtr& g, Field f, std::uint32_t e);
  static Element edge(const GraphPtr& g, Field f, const std::string& id);
  static Element ghost_edge(const GraphPtr& g, Field f, std::uint32_t e);
  static Element ghost_edge(const GraphPtr& g, Field f, const std::string& id);
  static Element path_monomial(const GraphPtr& g, Field f, const Path& real,
                               const Path& ghost, const Scalar& coeff);
  /// Identity of the algebra when E^0 is finite: the sum of all vertices.
  static Element identity(const GraphPtr& g, Field f);

  const GraphPtr& graph() const { return graph_; }
  const Field& field() const { return field_; }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar coefficient(const Monomial& m) const;

  Element operator-() const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Element& a, const Element& b);
  Element scaled(const Scalar& k) const;

  friend bool operator==(const Element& a, const Element& b);
  friend bool operator!=(const Element& a, const Element& b) {
    return !(a == b);
  }

  /// K-linear extension of pq* -> qp*.
  Element involuted() const;
  /// Terms with degree exactly n.
  Element homogeneous_component(long n) const;
  /// Greatest degree with a nonzero component; nullopt for zero.
  std::optional<long> top_degree() const;
  Element power(unsigned k) const;  // k >= 1

  /// Canonical text form, e.g. "2*e1.e2* + 1/3*v". Vertices print bare;
  /// ghost factors carry a trailing '*'. Zero prints "0".
  std::string to_string() const;

 private:
  void check_compatible(const Element& o) const;
  void add_term(const Monomial& m, const Scalar& k);

  GraphPtr graph_;
  Field field_;
  std::map<Monomial, Scalar> terms_;

  friend Element normalize(const GraphPtr&, Field, const RawTerms&,
                           const SpecialEdgeChoice&, std::uint64_t);
  friend Element normalize(const GraphPtr&, Field, const RawTerms&);
};

/// Exhaustive CK2 rewriting into the normal form: whenever the real and the
/// ghost path both end with the same edge g = gamma(s(g)), the monomial
/// p'g(q'g)* is replaced by p'q'* - sum over the other edges e emitted by
/// s(g) of (p'e)(q'e)*. Idempotent, and independent of the order in which
/// pending terms are processed; `shuffle_seed` (nonzero) randomizes that
/// order for confluence testing.
Element normalize(const GraphPtr& g, Field f, const RawTerms& raw,
                  const SpecialEdgeChoice& choice,
                  std::uint64_t shuffle_seed = 0);
Element normalize(const GraphPtr& g, Field f, const RawTerms& raw);

/// Product in L_K(E). Monomials compose by CK1: (pq*)(rs*) reduces to
/// (pt)s* when r = q.t, to p(st)* when q = r.t, and to zero otherwise,
/// followed by normalization.
Element multiply(const Element& a, const Element& b);

}  // namespace lpa
