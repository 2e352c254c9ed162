#ifndef CHEVALLEY_RING_HPP_
#define CHEVALLEY_RING_HPP_

#include <gmpxx.h>

#include <boost/container/small_vector.hpp>

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chev {

using Integer = mpz_class;

class RingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SpecMismatch : public RingError {
 public:
  SpecMismatch() : RingError("ring elements belong to different rings") {}
};

class NotAUnit : public RingError {
 public:
  explicit NotAUnit(std::string const& what) : RingError("not a unit: " + what) {}
};

class InvalidRing : public RingError {
 public:
  using RingError::RingError;
};

enum class RingKind { Integers, Modular, Order, Localized };

class RingSpec;
using RingPtr = std::shared_ptr<RingSpec const>;

// Coordinates in the integral basis; length 1 for Integers and Modular.
using Coords = boost::container::small_vector<Integer, 2>;

// Describes one of the coefficient rings: Z, Z/m, an order Z xi_0 + ... + Z xi_r
// given by its multiplication table, or a localization O[1/u] of Z or an order.
// Instances are immutable and validated on construction.
class RingSpec {
 public:
  static RingPtr integers();
  static RingPtr modular(Integer m);
  // mul_table[(i * n + j) * n + k] is the coefficient of xi_k in xi_i * xi_j.
  static RingPtr order(std::size_t basis_size, std::vector<Integer> mul_table);
  static RingPtr localized(RingPtr base, Coords u);

  RingKind kind() const noexcept { return kind_; }
  std::size_t basis_size() const noexcept { return n_; }
  Integer const& modulus() const noexcept { return modulus_; }
  Integer const& table(std::size_t i, std::size_t j, std::size_t k) const {
    return table_[(i * n_ + j) * n_ + k];
  }
  std::vector<Integer> const& mul_table() const noexcept { return table_; }
  // Base ring of a localization; nullptr otherwise.
  RingPtr const& base() const noexcept { return base_; }
  Coords const& u() const noexcept { return u_; }
  bool is_localized() const noexcept { return kind_ == RingKind::Localized; }
  // True for Z and orders (and their localizations), where coordinates are
  // honest integers with no modular reduction.
  bool has_integer_coords() const noexcept { return kind_ != RingKind::Modular; }

  bool same_as(RingSpec const& other) const;
  std::string describe() const;

  // Base-ring helpers on raw coordinate vectors (no denominators).
  Coords base_mul(Coords const& a, Coords const& b) const;
  Coords base_scale(Coords const& a, Integer const& c) const;
  // Exact division by u in the base ring; nullopt when u does not divide a.
  std::optional<Coords> divide_by_u(Coords const& a) const;
  // Matrix of multiplication by a in the integral basis (columns = a * xi_j).
  std::vector<Integer> mul_matrix(Coords const& a) const;

 private:
  RingSpec() = default;

  RingKind kind_ = RingKind::Integers;
  std::size_t n_ = 1;
  Integer modulus_ = 0;
  std::vector<Integer> table_;
  RingPtr base_;
  Coords u_;
  // adjugate of mul_matrix(u) and its determinant, for exact division by u
  std::vector<Integer> u_adj_;
  Integer u_det_ = 0;
};

class RingElement {
 public:
  RingElement() = default;
  RingElement(RingPtr ring, Coords coords, unsigned denom_exp = 0);

  static RingElement from_int(RingPtr ring, Integer const& value);
  static RingElement zero(RingPtr ring) { return from_int(std::move(ring), 0); }
  static RingElement one(RingPtr ring) { return from_int(std::move(ring), 1); }
  // xi_l of the integral basis.
  static RingElement basis(RingPtr ring, std::size_t l);

  RingPtr const& ring() const noexcept { return ring_; }
  Coords const& coords() const noexcept { return coords_; }
  unsigned denom_exp() const noexcept { return denom_exp_; }

  bool is_zero() const;
  bool is_one() const;
  // The integer this element equals, if it lies in Z (or Z/m).
  std::optional<Integer> as_integer() const;

  RingElement operator-() const;
  RingElement& operator+=(RingElement const& b);
  RingElement& operator-=(RingElement const& b);
  RingElement& operator*=(RingElement const& b);
  // this += a * b, avoiding temporaries on the single-coordinate fast path.
  void add_mul(RingElement const& a, RingElement const& b);
  RingElement scaled(Integer const& c) const;

  std::optional<RingElement> try_inverse() const;
  RingElement inverse() const;
  // Negative exponents go through inverse().
  RingElement pow(long long e) const;

  friend bool operator==(RingElement const& a, RingElement const& b);
  friend bool operator!=(RingElement const& a, RingElement const& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void canonicalize();

  RingPtr ring_;
  Coords coords_;
  unsigned denom_exp_ = 0;
};

RingElement operator+(RingElement a, RingElement const& b);
RingElement operator-(RingElement a, RingElement const& b);
RingElement operator*(RingElement a, RingElement const& b);

RingElement add(RingElement const& a, RingElement const& b);
RingElement mul(RingElement const& a, RingElement const& b);
RingElement inv(RingElement const& a);

struct DivModBasis {
  std::vector<Integer> quotient;
  std::vector<Integer> remainder;
};

// Coordinatewise floor division m_l = p * n_l + r_l with 0 <= r_l < p.
// Only defined for Z and orders.
DivModBasis divmod_basis(RingElement const& a, Integer const& p);

struct ClearedDenominator {
  unsigned k = 0;
  RingElement b;  // element of the base ring
};

// a = u^{-k} b with k minimal; a must live in a localized ring.
ClearedDenominator clear_denominator(RingElement const& a);

// Embeds a base-ring element into the localization.
RingElement lift_to(RingPtr localized, RingElement const& b);

// u as an element of the localization.
RingElement localizing_element(RingPtr const& localized);

}  // namespace chev

#endif  // CHEVALLEY_RING_HPP_
