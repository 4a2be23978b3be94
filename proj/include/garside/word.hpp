#ifndef GARSIDE_WORD_HPP
#define GARSIDE_WORD_HPP

// Word grammar shared by every structure:
//
//   word   := token*            (tokens separated by optional whitespace)
//   token  := base suffix?
//   base   := "D" | "1" | atom  (atom is "s<i>" for Artin, "a(<t>,<s>)" for BKL)
//   suffix := "^" "-"? digits
//
// "D" is the Garside element, "1" the identity. Printing emits normal forms
// as "D^p" followed by the lexicographically least atom word of each factor.

#include <cctype>
#include <charconv>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "garside/element.hpp"

namespace garside {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Letter {
  enum class Kind { kAtom, kDelta };
  Kind kind = Kind::kAtom;
  int atom = 0;  // 0-based, meaningful for kAtom
  int exponent = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

template <GarsideStructure G>
std::vector<Letter> parse_word(const G& g, std::string_view text) {
  std::vector<Letter> out;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw ParseError(what + " at offset " + std::to_string(pos) + " in \"" +
                     std::string(text) + "\"");
  };
  while (true) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;

    Letter letter;
    bool identity = false;
    const char c = text[pos];
    if (c == 'D') {
      letter.kind = Letter::Kind::kDelta;
      ++pos;
    } else if (c == '1') {
      identity = true;
      ++pos;
    } else {
      std::size_t end = pos + 1;
      if (end < text.size() && text[end] == '(') {
        end = text.find(')', end);
        if (end == std::string_view::npos) fail("unterminated atom");
        ++end;
      } else {
        while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
      }
      const auto atom = g.parse_atom(text.substr(pos, end - pos));
      if (!atom) fail("unknown atom '" + std::string(text.substr(pos, end - pos)) + "'");
      letter.atom = *atom;
      pos = end;
    }

    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      std::size_t end = pos;
      if (end < text.size() && text[end] == '-') ++end;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
      int exponent = 0;
      auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, exponent);
      if (ec != std::errc() || ptr != text.data() + end) fail("bad exponent");
      letter.exponent = exponent;
      pos = end;
    }
    if (!identity && letter.exponent != 0) out.push_back(letter);
  }
  return out;
}

template <GarsideStructure G>
Element<G> evaluate(const G& g, const std::vector<Letter>& word) {
  std::vector<std::pair<int, typename G::Simple>> terms;
  for (const auto& letter : word) {
    if (letter.kind == Letter::Kind::kDelta) {
      terms.push_back({letter.exponent, g.identity()});
      continue;
    }
    if (letter.atom < 0 || letter.atom >= g.atom_count()) {
      throw std::invalid_argument("atom index out of range");
    }
    const auto x = g.atom(letter.atom);
    if (letter.exponent > 0) {
      for (int i = 0; i < letter.exponent; ++i) terms.push_back({0, x});
    } else {
      const auto complement = g.left_complement(x);
      for (int i = 0; i < -letter.exponent; ++i) terms.push_back({-1, complement});
    }
  }
  return Element<G>::from_twisted(g, terms);
}

template <GarsideStructure G>
Element<G> parse_element(const G& g, std::string_view text) {
  return evaluate(g, parse_word(g, text));
}

// Letters of the printed normal form.
template <GarsideStructure G>
std::vector<Letter> word_of(const Element<G>& e) {
  std::vector<Letter> out;
  if (e.inf() != 0) out.push_back({Letter::Kind::kDelta, 0, e.inf()});
  for (const auto& s : e.factors()) {
    for (int i : simple_word(e.structure(), s)) out.push_back({Letter::Kind::kAtom, i, 1});
  }
  return out;
}

template <GarsideStructure G>
std::string format_letters(const G& g, const std::vector<Letter>& word) {
  if (word.empty()) return "1";
  std::string out;
  for (const auto& letter : word) {
    if (!out.empty()) out += ' ';
    out += letter.kind == Letter::Kind::kDelta ? std::string("D") : g.atom_name(letter.atom);
    if (letter.exponent != 1) out += "^" + std::to_string(letter.exponent);
  }
  return out;
}

template <GarsideStructure G>
std::string format_simple(const G& g, const typename G::Simple& s) {
  if (s == g.delta()) return "D";
  std::vector<Letter> letters;
  for (int i : simple_word(g, s)) letters.push_back({Letter::Kind::kAtom, i, 1});
  return format_letters(g, letters);
}

template <GarsideStructure G>
std::string format_element(const Element<G>& e) {
  return format_letters(e.structure(), word_of(e));
}

template <GarsideStructure G>
typename G::Simple parse_simple(const G& g, std::string_view text) {
  const auto word = parse_word(g, text);
  const auto e = evaluate(g, word);
  if (e.inf() == 1 && e.factors().empty()) return g.delta();
  if (e.inf() != 0 || e.factors().size() > 1) {
    throw ParseError("\"" + std::string(text) + "\" is not a simple element");
  }
  return e.factors().empty() ? g.identity() : e.factors().front();
}

}  // namespace garside

#endif  // GARSIDE_WORD_HPP
