#include "chevalley/word_text.hpp"

#include <cctype>

namespace chev {

std::string format_element(RingElement const& e) { return e.to_string(); }

RingElement parse_element(std::string_view text, RingPtr const& ring) {
  Coords coords;
  unsigned denom = 0;
  std::size_t pos = 0;
  auto fail = [&]() { return ParseError("bad ring element: '" + std::string(text) + "'"); };
  while (true) {
    std::size_t start = pos;
    if (pos < text.size() && text[pos] == '-') ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) throw fail();
    coords.emplace_back(std::string(text.substr(start, pos - start)), 10);
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  if (pos < text.size()) {
    if (text.substr(pos, 3) != "/u^") throw fail();
    pos += 3;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || pos != text.size()) throw fail();
    denom = static_cast<unsigned>(std::stoul(std::string(text.substr(start))));
    if (!ring->is_localized()) throw ParseError("denominator in a ring without localization");
  }
  if (coords.size() != ring->basis_size()) {
    throw ParseError("element '" + std::string(text) + "' needs " + std::to_string(ring->basis_size()) +
                     " coordinates");
  }
  return RingElement(ring, std::move(coords), denom);
}

namespace {

void format_into(std::string& out, Word const& w, RootSystem const& rs) {
  bool first = true;
  for (auto const& l : w.letters) {
    if (!first) out += ' ';
    first = false;
    std::visit(
        [&](auto const& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, RootLetter>) {
            out += "x[" + rs.root_name(v.root) + "](" + format_element(v.param) + ")";
          } else if constexpr (std::is_same_v<T, TorusLetter>) {
            out += "h[" + rs.root_name(v.root) + "](" + format_element(v.param) + ")";
          } else {
            out += "conj(";
            format_into(out, *v.prefix, rs);
            out += "; ";
            format_into(out, *v.inner, rs);
            out += ")";
          }
        },
        l);
  }
}

class WordParser {
 public:
  WordParser(std::string_view text, RootSystem const& rs, RingPtr const& ring)
      : text_(text), rs_(rs), ring_(ring) {}

  Word parse_all() {
    Word w = parse_word();
    skip_ws();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void error(std::string const& msg) const {
    throw ParseError("word parse error at offset " + std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool starts_with(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }

  void expect(std::string_view s) {
    if (!starts_with(s)) error("expected '" + std::string(s) + "'");
    pos_ += s.size();
  }

  std::string_view until(char stop) {
    std::size_t end = text_.find(stop, pos_);
    if (end == std::string_view::npos) error(std::string("missing '") + stop + "'");
    auto piece = text_.substr(pos_, end - pos_);
    pos_ = end;
    return piece;
  }

  Word parse_word() {
    Word w;
    while (true) {
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] == ';' || text_[pos_] == ')') break;
      w.push(parse_letter());
    }
    return w;
  }

  Letter parse_letter() {
    if (starts_with("conj(")) {
      pos_ += 5;
      Word prefix = parse_word();
      skip_ws();
      expect(";");
      Word inner = parse_word();
      skip_ws();
      expect(")");
      return ConjugateLetter{std::make_shared<Word const>(std::move(prefix)),
                             std::make_shared<Word const>(std::move(inner))};
    }
    bool torus;
    if (starts_with("x[")) {
      torus = false;
    } else if (starts_with("h[")) {
      torus = true;
    } else {
      error("expected a letter");
    }
    pos_ += 2;
    std::size_t root;
    try {
      root = rs_.parse_root(std::string(until(']')));
    } catch (std::invalid_argument const& e) {
      error(e.what());
    }
    expect("](");
    auto param = parse_element(until(')'), ring_);
    expect(")");
    if (torus) {
      if (!param.try_inverse()) error("torus parameter " + param.to_string() + " is not a unit");
      return TorusLetter{root, std::move(param)};
    }
    return RootLetter{root, std::move(param)};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  RootSystem const& rs_;
  RingPtr const& ring_;
};

}  // namespace

std::string format_word(Word const& w, RootSystem const& rs) {
  std::string out;
  format_into(out, w, rs);
  return out;
}

Word parse_word(std::string_view text, RootSystem const& rs, RingPtr const& ring) {
  return WordParser(text, rs, ring).parse_all();
}

}  // namespace chev
