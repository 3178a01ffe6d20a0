#pragma once

#include <map>
#include <vector>

#include "lpa/element.hpp"

namespace lpa {

/// Row-reduced K-linear span of elements, keyed by normal-form monomial
/// coordinates. Rows are kept monic at their pivot (the least monomial of
/// the row), so insertion order does not change the reduced basis content.
class ElementSpan {
 public:
  /// Reduces x against the span; inserts the remainder if nonzero.
  /// Returns true when the span grew.
  bool add(const Element& x);
  bool contains(const Element& x) const;
  std::size_t dimension() const { return rows_.size(); }

 private:
  Element reduce(Element x) const;
  // pivot monomial -> monic row
  std::map<Monomial, Element> rows_;
};

/// Breadth-first saturation of the span of all products of a generator set:
/// level k holds span{ g_1 ... g_j | j <= k }. Each step left-multiplies the
/// previous level's new rows by every generator. When a step adds nothing,
/// the span is multiplicatively closed and equals the span of the generated
/// subalgebra.
class SpanSaturator {
 public:
  explicit SpanSaturator(std::vector<Element> generators);

  /// Advances one level; returns the number of new independent rows.
  std::size_t step();
  int level() const { return level_; }
  bool saturated() const { return saturated_; }
  const ElementSpan& span() const { return span_; }

  /// Convenience: grow until `target` is contained, saturation, or
  /// `max_level` reached. Returns containment; reports saturation.
  bool contains_within(const Element& target, int max_level,
                       bool* saturated_out = nullptr);

 private:
  std::vector<Element> gens_;
  ElementSpan span_;
  std::vector<Element> frontier_;  // independent rows added at current level
  int level_ = 0;
  bool saturated_ = false;
};

}  // namespace lpa
