#include "stabletype/descriptor.hpp"

#include <cctype>
#include <string>

#include "stabletype/error.hpp"
#include "stabletype/named.hpp"

namespace stabletype {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  FiniteGroup parse() {
    skip_space();
    if (at_end()) fail("empty group description");
    FiniteGroup g = atom();
    skip_space();
    while (!at_end()) {
      if (peek() != 'x') fail("expected 'x' between factors");
      ++pos_;
      skip_space();
      FiniteGroup h = atom();
      g = direct_product(g, h);
      skip_space();
    }
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos_), pos_);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  unsigned number() {
    skip_space();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    unsigned long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<unsigned long>(peek() - '0');
      if (value > 1'000'000) fail("number too large");
      ++pos_;
    }
    return static_cast<unsigned>(value);
  }

  FiniteGroup named(NamedFamily family, unsigned n, unsigned k, std::size_t start) {
    try {
      return make_named(family, n, k);
    } catch (const BadParameter& e) {
      throw ParseError(std::string(e.what()) + " at position " + std::to_string(start), start);
    }
  }

  FiniteGroup atom() {
    const std::size_t start = pos_;
    if (text_.substr(pos_, 5) == "perm{") {
      pos_ += 5;
      return permutation_atom(start);
    }
    const char c = peek();
    ++pos_;
    switch (c) {
      case 'C': return named(NamedFamily::Cyclic, number(), 1, start);
      case 'D': return named(NamedFamily::Dihedral, number(), 1, start);
      case 'Q': return named(NamedFamily::Quaternion, number(), 1, start);
      case 'S': return named(NamedFamily::Symmetric, number(), 1, start);
      case 'A': return named(NamedFamily::Alternating, number(), 1, start);
      case 'H': return named(NamedFamily::Heisenberg, number(), 1, start);
      case 'E': {
        unsigned p = number();
        expect('^');
        unsigned k = number();
        return named(NamedFamily::ElementaryAbelian, p, k, start);
      }
      default:
        pos_ = start;
        fail(std::string("unknown group atom '") + c + "'");
    }
  }

  FiniteGroup permutation_atom(std::size_t start) {
    // Each generator is a product of cycles; generators are comma separated.
    std::vector<std::vector<std::vector<Point>>> gens;
    std::size_t degree = 1;
    skip_space();
    if (!at_end() && peek() == '}') {
      ++pos_;
      return FiniteGroup{};
    }
    while (true) {
      std::vector<std::vector<Point>> cycles;
      skip_space();
      if (at_end() || peek() != '(') fail("expected '(' to start a cycle");
      while (!at_end() && peek() == '(') {
        ++pos_;
        std::vector<Point> cycle;
        skip_space();
        while (!at_end() && peek() != ')') {
          unsigned point = number();
          if (point == 0) fail("cycle points are 1-based");
          cycle.push_back(point - 1);
          degree = std::max<std::size_t>(degree, point);
          skip_space();
          if (!at_end() && peek() == ',') ++pos_;
          skip_space();
        }
        expect(')');
        cycles.push_back(std::move(cycle));
        skip_space();
      }
      gens.push_back(std::move(cycles));
      if (at_end()) fail("unterminated perm{");
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      if (peek() == '}') {
        ++pos_;
        break;
      }
      fail("expected ',' or '}'");
    }
    std::vector<Permutation> perms;
    try {
      for (const auto& cycles : gens) perms.push_back(Permutation::from_cycles(degree, cycles));
    } catch (const InvalidPermutation& e) {
      throw ParseError(std::string(e.what()) + " at position " + std::to_string(start), start);
    }
    return FiniteGroup::generate(perms, degree);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FiniteGroup parse_group(std::string_view text) { return Parser(text).parse(); }

}  // namespace stabletype
