#include "diagprop/element_parse.hpp"

#include <cctype>

namespace diagprop {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool at_end() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
};

std::string generator_list(const RingPtr& ring) {
  std::string out;
  for (std::size_t i = 0; i < ring->generator_count(); ++i) {
    if (!out.empty()) out += ", ";
    out += ring->generator(i).name;
  }
  return out;
}

Int parse_integer(Cursor& c) {
  c.skip_ws();
  std::string digits;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
    digits += c.s[c.i++];
  if (digits.empty())
    fail(Errc::SyntaxError, "expected an integer at position " + std::to_string(c.i) + " in '" +
                                c.s + "'");
  return Int(digits);
}

std::string parse_name(Cursor& c) {
  c.skip_ws();
  std::string name;
  auto head = [](char ch) { return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_'; };
  auto body = [&](char ch) { return head(ch) || std::isdigit(static_cast<unsigned char>(ch)); };
  if (c.i < c.s.size() && head(c.s[c.i])) {
    name += c.s[c.i++];
    while (c.i < c.s.size() && body(c.s[c.i])) name += c.s[c.i++];
  }
  return name;
}

/* term := [integer] { '*' factor } | factor { '*' factor }
 * factor := name [ '^' integer ] */
RingElement parse_term(Cursor& c, const RingPtr& ring) {
  Int coeff = 1;
  Exponents exp(ring->generator_count(), 0);
  bool saw_factor = false;

  c.skip_ws();
  if (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
    coeff = parse_integer(c);
    saw_factor = true;
    if (!c.eat('*')) return RingElement::monomial(ring, exp, coeff);
  }
  for (;;) {
    std::string name = parse_name(c);
    if (name.empty())
      fail(Errc::SyntaxError, "expected a generator name at position " + std::to_string(c.i) +
                                  " in '" + c.s + "'; generators of " + ring->id() + ": " +
                                  generator_list(ring));
    auto idx = ring->generator_index(name);
    if (!idx)
      fail(Errc::SyntaxError, "unknown generator '" + name + "'; generators of " + ring->id() +
                                  ": " + generator_list(ring));
    Int power = 1;
    if (c.eat('^')) power = parse_integer(c);
    if (power < 0 || power > 1000000) fail(Errc::SyntaxError, "exponent out of range");
    exp[*idx] += static_cast<unsigned>(power);
    saw_factor = true;
    if (!c.eat('*')) break;
  }
  if (!saw_factor) fail(Errc::SyntaxError, "empty term in '" + c.s + "'");
  return RingElement::monomial(ring, exp, coeff);
}

}  // namespace

RingElement parse_ring_element(const RingPtr& ring, const std::string& text) {
  if (!ring) fail(Errc::Internal, "parse needs a ring");
  Cursor c{text};
  RingElement out = RingElement::zero(ring);
  bool negate = c.eat('-');
  for (;;) {
    RingElement term = parse_term(c, ring);
    out += negate ? -term : term;
    if (c.at_end()) break;
    if (c.eat('+'))
      negate = false;
    else if (c.eat('-'))
      negate = true;
    else
      fail(Errc::SyntaxError, "expected '+' or '-' at position " + std::to_string(c.i) + " in '" +
                                  text + "'");
  }
  return out;
}

}  // namespace diagprop
