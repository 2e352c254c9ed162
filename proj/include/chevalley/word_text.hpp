#ifndef CHEVALLEY_WORD_TEXT_HPP_
#define CHEVALLEY_WORD_TEXT_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

#include "chevalley/group.hpp"
#include "chevalley/root_system.hpp"

namespace chev {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text grammar for words:
//
//   word    := letter (ws+ letter)*      (possibly empty)
//   letter  := "x[" root "](" elem ")" | "h[" root "](" elem ")"
//            | "conj(" word ";" word ")"
//   root    := ["-"] term (("+" | "-") term)*,   term := [digits] "a" digits
//   elem    := int ("," int)* ["/u^" digits]
//
// Formatting is canonical: single spaces between letters, "conj(p; w)",
// coefficient 1 omitted in roots, modular coordinates reduced to [0, m).
std::string format_element(RingElement const& e);
RingElement parse_element(std::string_view text, RingPtr const& ring);

std::string format_word(Word const& w, RootSystem const& rs);
Word parse_word(std::string_view text, RootSystem const& rs, RingPtr const& ring);

}  // namespace chev

#endif  // CHEVALLEY_WORD_TEXT_HPP_
