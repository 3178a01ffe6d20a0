#include "lpa/parse.hpp"

#include <cctype>

namespace lpa {

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
};

bool id_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

// Scalar := ['-'] digits ['/' digits]; the caller has already decided that
// a scalar literal starts here.
std::string scan_number(Cursor& cur) {
  cur.skip_ws();
  std::size_t start = cur.pos;
  if (cur.pos < cur.text.size() && cur.text[cur.pos] == '-') ++cur.pos;
  if (cur.pos >= cur.text.size() || !digit(cur.text[cur.pos]))
    throw ParseError("expected a number", cur.pos);
  while (cur.pos < cur.text.size() && digit(cur.text[cur.pos])) ++cur.pos;
  if (cur.pos < cur.text.size() && cur.text[cur.pos] == '/') {
    ++cur.pos;
    if (cur.pos >= cur.text.size() || !digit(cur.text[cur.pos]))
      throw ParseError("expected a denominator", cur.pos);
    while (cur.pos < cur.text.size() && digit(cur.text[cur.pos])) ++cur.pos;
  }
  return cur.text.substr(start, cur.pos - start);
}

std::string scan_id(Cursor& cur) {
  cur.skip_ws();
  std::size_t start = cur.pos;
  while (cur.pos < cur.text.size() && id_char(cur.text[cur.pos])) ++cur.pos;
  if (cur.pos == start) throw ParseError("expected an identifier", cur.pos);
  return cur.text.substr(start, cur.pos - start);
}

Element factor_element(const GraphPtr& g, Field f, const std::string& id,
                       bool ghost, std::size_t at) {
  if (g->has_edge(id))
    return ghost ? Element::ghost_edge(g, f, id) : Element::edge(g, f, id);
  if (g->has_vertex(id)) {
    if (ghost) return Element::vertex(g, f, id);  // vertices are self-adjoint
    return Element::vertex(g, f, id);
  }
  throw ParseError("unknown id \"" + id + "\"", at);
}

}  // namespace

Element parse_element(const std::string& text, const GraphPtr& g, Field field,
                      std::ostream* warnings) {
  Cursor cur{text};
  Element acc = Element::zero(g, field);
  bool first = true;
  while (true) {
    if (first && cur.done())
      throw ParseError("empty expression", cur.pos);
    bool negative = false;
    if (first) {
      if (cur.accept('-'))
        negative = true;
      else
        cur.accept('+');
    } else {
      if (cur.done()) break;
      if (cur.accept('-'))
        negative = true;
      else if (cur.accept('+'))
        negative = false;
      else
        throw ParseError("expected '+' or '-'", cur.pos);
    }
    first = false;

    // Term
    Scalar coeff = Scalar::one(field);
    bool have_scalar = false;
    char c = cur.peek();
    if (digit(c) || c == '-') {
      std::size_t at = cur.pos;
      std::string num = scan_number(cur);
      try {
        coeff = Scalar::parse(field, num);
      } catch (const ParseError&) {
        throw;
      } catch (const std::exception& err) {
        throw ParseError(err.what(), at);
      }
      have_scalar = true;
    }
    bool have_factors = false;
    Element term = Element::zero(g, field);
    std::size_t term_at = cur.pos;
    if (have_scalar && !cur.accept('*')) {
      // bare scalar: coeff times the identity (sum of all vertices)
      term = Element::identity(g, field).scaled(coeff);
    } else {
      while (true) {
        std::size_t at = cur.pos;
        std::string id = scan_id(cur);
        bool ghost = false;
        if (cur.pos < cur.text.size() && cur.text[cur.pos] == '*') {
          // '*' binds as a ghost mark unless it separates a scalar, which
          // cannot happen here.
          ghost = true;
          ++cur.pos;
        }
        Element f_el = factor_element(g, field, id, ghost, at);
        term = have_factors ? multiply(term, f_el) : f_el;
        have_factors = true;
        if (!cur.accept('.')) break;
      }
      term = term.scaled(coeff);
      if (term.is_zero() && warnings)
        *warnings << "warning: zero monomial dropped at position " << term_at
                  << "\n";
    }
    if (negative) term = -term;
    acc += term;
  }
  return acc;
}

}  // namespace lpa
