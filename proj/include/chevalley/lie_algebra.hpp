#ifndef CHEVALLEY_LIE_ALGEBRA_HPP_
#define CHEVALLEY_LIE_ALGEBRA_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "chevalley/root_system.hpp"

namespace chev {

class StructureConstantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Dense square integer matrix, row-major.
struct IntMatrix {
  std::size_t n = 0;
  std::vector<std::int64_t> a;

  IntMatrix() = default;
  explicit IntMatrix(std::size_t dim) : n(dim), a(dim * dim, 0) {}
  static IntMatrix identity(std::size_t dim);

  std::int64_t& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
  bool is_zero() const;
  friend bool operator==(IntMatrix const&, IntMatrix const&) = default;
};

IntMatrix operator*(IntMatrix const& x, IntMatrix const& y);
IntMatrix operator-(IntMatrix const& x, IntMatrix const& y);
IntMatrix operator+(IntMatrix const& x, IntMatrix const& y);

// Chevalley basis {X_alpha, H_i} of the complex simple (or semisimple) Lie
// algebra with the given root system, with its integral structure constants
// and the adjoint action of every basis vector.
//
// Basis order: X_alpha for positive alpha (root order), H_1..H_r, then X_alpha
// for negative alpha. For every non-simple positive root gamma we fix
//   X_gamma = [X_{alpha_i}, X_{gamma - alpha_i}] / (p + 1)
// with i the smallest index such that gamma - alpha_i is a root, so
// N(alpha_i, gamma - alpha_i) = +(p + 1) on these extraspecial pairs. Negative
// root vectors are X_{-gamma} = -omega(X_gamma) for the Chevalley involution.
class ChevalleyAlgebra {
 public:
  explicit ChevalleyAlgebra(RootSystem roots);

  RootSystem const& roots() const noexcept { return roots_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return roots_.rank(); }

  std::size_t root_basis(std::size_t root) const;
  std::size_t cartan_basis(std::size_t i) const { return roots_.num_positive() + i; }
  // Root index for a root basis vector, nullopt for H_i.
  std::optional<std::size_t> basis_root(std::size_t b) const;

  // ad of a basis vector: column b holds [X, basis_b].
  IntMatrix const& ad(std::size_t basis) const { return ad_[basis]; }
  IntMatrix const& ad_root(std::size_t root) const { return ad_[root_basis(root)]; }
  // [basis_a, basis_b] as a coefficient vector.
  std::vector<std::int64_t> bracket(std::size_t a, std::size_t b) const;

  // N(alpha, beta) with [X_alpha, X_beta] = N X_{alpha+beta}; 0 if alpha + beta
  // is not a root.
  std::int64_t N(std::size_t alpha, std::size_t beta) const;
  // H-coordinates of [X_alpha, X_{-alpha}].
  std::vector<std::int64_t> coroot(std::size_t alpha) const;

  // ad(X_alpha)^m / m! for m = 0, 1, ... up to the last nonzero power.
  std::vector<IntMatrix> const& divided_powers(std::size_t root) const {
    return divided_powers_[root];
  }

  // Brute-force Jacobi identity over all basis triples.
  bool check_jacobi() const;

 private:
  RootSystem roots_;
  std::size_t dim_;
  std::vector<IntMatrix> ad_;
  std::vector<std::vector<IntMatrix>> divided_powers_;
};

}  // namespace chev

#endif  // CHEVALLEY_LIE_ALGEBRA_HPP_
