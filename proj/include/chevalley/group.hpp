#ifndef CHEVALLEY_GROUP_HPP_
#define CHEVALLEY_GROUP_HPP_

#include <cstddef>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "chevalley/lie_algebra.hpp"
#include "chevalley/ring.hpp"

namespace chev {

// Square matrix over one of the coefficient rings.
class Matrix {
 public:
  Matrix(RingPtr ring, std::size_t n);
  static Matrix identity(RingPtr ring, std::size_t n);

  std::size_t dim() const noexcept { return n_; }
  RingPtr const& ring() const noexcept { return ring_; }

  RingElement& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  RingElement const& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  bool is_identity() const;
  // Nonnegative powers by repeated squaring.
  Matrix pow(Integer const& e) const;

  friend Matrix operator*(Matrix const& a, Matrix const& b);
  friend bool operator==(Matrix const& a, Matrix const& b);
  friend bool operator!=(Matrix const& a, Matrix const& b) { return !(a == b); }

  // Row-major entry dump; equal matrices give equal text.
  std::string canonical_text() const;

 private:
  RingPtr ring_;
  std::size_t n_;
  std::vector<RingElement> entries_;
};

// Image of a Chevalley group element in the adjoint representation.
using GroupElement = Matrix;

// 64-bit FNV-1a of canonical_text(), as 16 hex digits.
std::string matrix_hash(Matrix const& m);

struct Word;

struct RootLetter {
  std::size_t root;
  RingElement param;
};

struct TorusLetter {
  std::size_t root;
  RingElement param;
};

// prefix * inner * prefix^{-1}
struct ConjugateLetter {
  std::shared_ptr<Word const> prefix;
  std::shared_ptr<Word const> inner;
};

using Letter = std::variant<RootLetter, TorusLetter, ConjugateLetter>;

struct Word {
  std::vector<Letter> letters;

  Word() = default;
  Word(std::initializer_list<Letter> ls) : letters(ls) {}

  bool empty() const noexcept { return letters.empty(); }
  // Flat letter count; a conjugate contributes 2 |prefix| + |inner|.
  std::size_t letter_count() const;
  Word inverse() const;
  Word& append(Word const& w);
  Word& push(Letter l);
};

Word operator*(Word a, Word const& b);
Word conjugate(Word const& prefix, Word const& inner);
// a b a^{-1} b^{-1}, written out flat.
Word commutator(Word const& a, Word const& b);
Word root_word(std::size_t root, RingElement param);

class ChevalleyGroup {
 public:
  ChevalleyGroup(std::shared_ptr<ChevalleyAlgebra const> algebra, RingPtr ring);

  ChevalleyAlgebra const& algebra() const noexcept { return *algebra_; }
  std::shared_ptr<ChevalleyAlgebra const> const& algebra_ptr() const noexcept { return algebra_; }
  RootSystem const& roots() const noexcept { return algebra_->roots(); }
  RingPtr const& ring() const noexcept { return ring_; }
  std::size_t dim() const noexcept { return algebra_->dim(); }

  RingElement elem(Integer const& v) const { return RingElement::from_int(ring_, v); }
  Matrix identity() const { return Matrix::identity(ring_, dim()); }

  // x_alpha(t) = sum_m t^m ad(X_alpha)^m / m!
  Matrix x(std::size_t root, RingElement const& t) const;
  // h_alpha(t) = x_a(t) x_{-a}(-t^{-1}) x_a(t) x_a(-1) x_{-a}(1) x_a(-1); throws NotAUnit.
  Matrix h(std::size_t root, RingElement const& t) const;
  // The six-letter word defining h_alpha(t).
  Word h_word(std::size_t root, RingElement const& t) const;

  Matrix evaluate(Word const& w) const;
  Matrix evaluate(Letter const& l) const;
  // [a, b] = a b a^{-1} b^{-1} of two root elements.
  Matrix root_commutator(std::size_t a, RingElement const& s, std::size_t b, RingElement const& t) const;

 private:
  std::shared_ptr<ChevalleyAlgebra const> algebra_;
  RingPtr ring_;
};

}  // namespace chev

#endif  // CHEVALLEY_GROUP_HPP_
