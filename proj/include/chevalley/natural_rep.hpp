#ifndef CHEVALLEY_NATURAL_REP_HPP_
#define CHEVALLEY_NATURAL_REP_HPP_

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "chevalley/group.hpp"

namespace chev {

// The natural n x n representation of a group of type A_{n-1}, with root
// vectors matched to the adjoint Chevalley basis: X_gamma = sign_gamma E_ab.
class NaturalRep {
 public:
  // Throws std::invalid_argument unless the root system is irreducible of type A.
  explicit NaturalRep(std::shared_ptr<ChevalleyGroup const> group);

  ChevalleyGroup const& group() const noexcept { return *group_; }
  std::size_t n() const noexcept { return n_; }
  RingPtr const& ring() const noexcept { return group_->ring(); }

  // Matrix position (a, b) of X_gamma and its sign.
  std::pair<std::size_t, std::size_t> position(std::size_t root) const { return pos_[root]; }
  int sign(std::size_t root) const { return sign_[root]; }
  // Root whose vector lives at (a, b), a != b.
  std::size_t root_at(std::size_t a, std::size_t b) const { return at_[a * n_ + b]; }

  Matrix identity() const { return Matrix::identity(ring(), n_); }
  Matrix x(std::size_t root, RingElement const& t) const;
  Matrix evaluate(Word const& w) const;

  // Inverse through the adjugate; throws NotAUnit when det g is not a unit.
  Matrix inverse(Matrix const& g) const;
  RingElement determinant(Matrix const& g) const;
  // Matrix of Ad(g) on the Chevalley basis, for comparison with the adjoint group.
  Matrix adjoint_of(Matrix const& g) const;

 private:
  std::shared_ptr<ChevalleyGroup const> group_;
  std::size_t n_;
  std::vector<std::pair<std::size_t, std::size_t>> pos_;
  std::vector<int> sign_;
  std::vector<std::size_t> at_;
};

// Writes g (natural matrix over Z or Z/m, det 1) as a word of root letters by
// Gaussian elimination with Euclidean steps. Verified by re-evaluation; throws
// NotElementary when elimination gets stuck on a non-unit pivot.
Word factor_elementary(NaturalRep const& rep, Matrix const& g);

}  // namespace chev

#endif  // CHEVALLEY_NATURAL_REP_HPP_
