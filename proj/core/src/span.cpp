#include "lpa/span.hpp"

namespace lpa {

Element ElementSpan::reduce(Element x) const {
  // Eliminate pivots in increasing monomial order; each elimination only
  // introduces monomials above the pivot, so one forward sweep suffices.
  while (!x.is_zero()) {
    bool hit = false;
    for (const auto& [m, k] : x.terms()) {
      auto it = rows_.find(m);
      if (it == rows_.end()) continue;
      x -= it->second.scaled(k);
      hit = true;
      break;
    }
    if (!hit) break;
  }
  return x;
}

bool ElementSpan::add(const Element& x) {
  Element r = reduce(x);
  if (r.is_zero()) return false;
  const auto& [pivot, coeff] = *r.terms().begin();
  Element monic = r.scaled(coeff.inverse());
  // Back-substitute into existing rows so lookups stay one-pass.
  for (auto& [m, row] : rows_) {
    Scalar c = row.coefficient(pivot);
    if (!c.is_zero()) row -= monic.scaled(c);
  }
  rows_.emplace(pivot, std::move(monic));
  return true;
}

bool ElementSpan::contains(const Element& x) const {
  return reduce(x).is_zero();
}

SpanSaturator::SpanSaturator(std::vector<Element> generators)
    : gens_(std::move(generators)) {
  for (const auto& g : gens_)
    if (span_.add(g)) frontier_.push_back(g);
  level_ = 1;
  if (frontier_.empty()) saturated_ = true;
}

std::size_t SpanSaturator::step() {
  if (saturated_) return 0;
  std::vector<Element> next;
  for (const auto& g : gens_) {
    for (const auto& f : frontier_) {
      Element prod = multiply(g, f);
      if (prod.is_zero()) continue;
      if (span_.add(prod)) next.push_back(std::move(prod));
    }
  }
  frontier_ = std::move(next);
  ++level_;
  if (frontier_.empty()) saturated_ = true;
  return frontier_.size();
}

bool SpanSaturator::contains_within(const Element& target, int max_level,
                                    bool* saturated_out) {
  bool found = span_.contains(target);
  while (!found && !saturated_ && level_ < max_level) {
    step();
    found = span_.contains(target);
  }
  if (saturated_out) *saturated_out = saturated_;
  return found;
}

}  // namespace lpa
