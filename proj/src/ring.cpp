#include "chevalley/ring.hpp"

#include <algorithm>
#include <sstream>

namespace chev {

namespace {

using IntMatrix = std::vector<Integer>;  // row-major, square

Integer determinant(IntMatrix m, std::size_t n) {
  // Bareiss fraction-free elimination.
  if (n == 0) {
    return 1;
  }
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k * n + k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap * n + k] == 0) {
        ++swap;
      }
      if (swap == n) {
        return 0;
      }
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m[k * n + j], m[swap * n + j]);
      }
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i * n + j] = v;
      }
    }
    prev = m[k * n + k];
  }
  return sign * m[(n - 1) * n + (n - 1)];
}

IntMatrix adjugate(IntMatrix const& m, std::size_t n) {
  IntMatrix adj(n * n);
  if (n == 1) {
    adj[0] = 1;
    return adj;
  }
  IntMatrix minor((n - 1) * (n - 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t idx = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == r) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (j == c) continue;
          minor[idx++] = m[i * n + j];
        }
      }
      Integer cof = determinant(minor, n - 1);
      if ((r + c) % 2 == 1) {
        cof = -cof;
      }
      adj[c * n + r] = cof;  // transpose of the cofactor matrix
    }
  }
  return adj;
}

// Solves M x = v exactly given adj(M) and det(M); nullopt if not integral.
std::optional<Coords> solve_integral(IntMatrix const& adj, Integer const& det,
                                     Coords const& v) {
  std::size_t const n = v.size();
  Coords x(n);
  for (std::size_t i = 0; i < n; ++i) {
    Integer acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
      acc += adj[i * n + j] * v[j];
    }
    if (!mpz_divisible_p(acc.get_mpz_t(), det.get_mpz_t())) {
      return std::nullopt;
    }
    mpz_divexact(acc.get_mpz_t(), acc.get_mpz_t(), det.get_mpz_t());
    x[i] = std::move(acc);
  }
  return x;
}

bool all_zero(Coords const& c) {
  return std::all_of(c.begin(), c.end(), [](Integer const& v) { return v == 0; });
}

Coords unit_coords(std::size_t n) {
  Coords c(n);
  c[0] = 1;
  return c;
}

}  // namespace

RingPtr RingSpec::integers() {
  auto spec = std::shared_ptr<RingSpec>(new RingSpec());
  spec->kind_ = RingKind::Integers;
  spec->n_ = 1;
  spec->table_ = {Integer(1)};
  return spec;
}

RingPtr RingSpec::modular(Integer m) {
  if (m < 2) {
    throw InvalidRing("modulus must be at least 2");
  }
  auto spec = std::shared_ptr<RingSpec>(new RingSpec());
  spec->kind_ = RingKind::Modular;
  spec->n_ = 1;
  spec->modulus_ = std::move(m);
  spec->table_ = {Integer(1)};
  return spec;
}

RingPtr RingSpec::order(std::size_t n, std::vector<Integer> table) {
  if (n == 0) {
    throw InvalidRing("order needs a nonempty basis");
  }
  if (table.size() != n * n * n) {
    throw InvalidRing("multiplication table must have (r+1)^3 entries");
  }
  auto spec = std::shared_ptr<RingSpec>(new RingSpec());
  spec->kind_ = RingKind::Order;
  spec->n_ = n;
  spec->table_ = std::move(table);
  auto const& T = *spec;

  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      if (T.table(0, j, k) != (j == k ? 1 : 0)) {
        throw InvalidRing("xi_0 is not the multiplicative identity");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (T.table(i, j, k) != T.table(j, i, k)) {
          throw InvalidRing("multiplication table is not commutative");
        }
      }
    }
  }
  // (xi_i xi_j) xi_l == xi_i (xi_j xi_l) for all basis triples
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < n; ++l) {
        for (std::size_t out = 0; out < n; ++out) {
          Integer lhs = 0;
          Integer rhs = 0;
          for (std::size_t k = 0; k < n; ++k) {
            lhs += T.table(i, j, k) * T.table(k, l, out);
            rhs += T.table(j, l, k) * T.table(i, k, out);
          }
          if (lhs != rhs) {
            throw InvalidRing("multiplication table is not associative");
          }
        }
      }
    }
  }
  return spec;
}

RingPtr RingSpec::localized(RingPtr base, Coords u) {
  if (!base || (base->kind() != RingKind::Integers && base->kind() != RingKind::Order)) {
    throw InvalidRing("localization base must be Z or an order");
  }
  if (u.size() != base->basis_size()) {
    throw InvalidRing("localizing element has the wrong number of coordinates");
  }
  auto spec = std::shared_ptr<RingSpec>(new RingSpec());
  spec->kind_ = RingKind::Localized;
  spec->n_ = base->basis_size();
  spec->table_ = base->mul_table();
  spec->u_ = std::move(u);
  auto m = base->mul_matrix(spec->u_);
  spec->u_det_ = determinant(m, spec->n_);
  if (spec->u_det_ == 0) {
    throw InvalidRing("localizing element is zero or a zero divisor");
  }
  spec->u_adj_ = adjugate(m, spec->n_);
  spec->base_ = std::move(base);
  return spec;
}

bool RingSpec::same_as(RingSpec const& other) const {
  if (this == &other) {
    return true;
  }
  if (kind_ != other.kind_ || n_ != other.n_ || modulus_ != other.modulus_ ||
      table_ != other.table_ || u_ != other.u_) {
    return false;
  }
  if (base_ && other.base_) {
    return base_->same_as(*other.base_);
  }
  return !base_ && !other.base_;
}

std::string RingSpec::describe() const {
  std::ostringstream out;
  switch (kind_) {
    case RingKind::Integers:
      out << "Z";
      break;
    case RingKind::Modular:
      out << "Z/" << modulus_;
      break;
    case RingKind::Order:
      out << "O(rank " << n_ << ")";
      break;
    case RingKind::Localized: {
      out << base_->describe() << "[1/";
      for (std::size_t i = 0; i < u_.size(); ++i) {
        out << (i ? "," : "") << u_[i];
      }
      out << "]";
      break;
    }
  }
  return out.str();
}

Coords RingSpec::base_mul(Coords const& a, Coords const& b) const {
  Coords out(n_);
  if (n_ == 1) {
    out[0] = a[0] * b[0];
    return out;
  }
  for (std::size_t i = 0; i < n_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (b[j] == 0) continue;
      Integer ab = a[i] * b[j];
      for (std::size_t k = 0; k < n_; ++k) {
        auto const& t = table(i, j, k);
        if (t != 0) {
          out[k] += ab * t;
        }
      }
    }
  }
  return out;
}

Coords RingSpec::base_scale(Coords const& a, Integer const& c) const {
  Coords out(a);
  for (auto& v : out) {
    v *= c;
  }
  return out;
}

std::optional<Coords> RingSpec::divide_by_u(Coords const& a) const {
  return solve_integral(u_adj_, u_det_, a);
}

std::vector<Integer> RingSpec::mul_matrix(Coords const& a) const {
  std::vector<Integer> m(n_ * n_);
  for (std::size_t j = 0; j < n_; ++j) {
    for (std::size_t i = 0; i < n_; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t k = 0; k < n_; ++k) {
        m[k * n_ + j] += a[i] * table(i, j, k);
      }
    }
  }
  return m;
}

// ---------------------------------------------------------------------------

RingElement::RingElement(RingPtr ring, Coords coords, unsigned denom_exp)
    : ring_(std::move(ring)), coords_(std::move(coords)), denom_exp_(denom_exp) {
  if (!ring_) {
    throw RingError("ring element without a ring");
  }
  if (coords_.size() != ring_->basis_size()) {
    throw RingError("coordinate count does not match the ring basis");
  }
  if (denom_exp_ != 0 && !ring_->is_localized()) {
    throw RingError("denominators are only allowed in localized rings");
  }
  canonicalize();
}

RingElement RingElement::from_int(RingPtr ring, Integer const& value) {
  Coords c(ring->basis_size());
  c[0] = value;
  return RingElement(std::move(ring), std::move(c));
}

RingElement RingElement::basis(RingPtr ring, std::size_t l) {
  if (l >= ring->basis_size()) {
    throw RingError("basis index out of range");
  }
  Coords c(ring->basis_size());
  c[l] = 1;
  return RingElement(std::move(ring), std::move(c));
}

void RingElement::canonicalize() {
  switch (ring_->kind()) {
    case RingKind::Modular:
      mpz_mod(coords_[0].get_mpz_t(), coords_[0].get_mpz_t(), ring_->modulus().get_mpz_t());
      break;
    case RingKind::Localized:
      if (all_zero(coords_)) {
        denom_exp_ = 0;
        break;
      }
      while (denom_exp_ > 0) {
        auto q = ring_->divide_by_u(coords_);
        if (!q) break;
        coords_ = std::move(*q);
        --denom_exp_;
      }
      break;
    default:
      break;
  }
}

bool RingElement::is_zero() const { return all_zero(coords_); }

bool RingElement::is_one() const {
  if (denom_exp_ != 0 || coords_[0] != 1) {
    return false;
  }
  return std::all_of(coords_.begin() + 1, coords_.end(),
                     [](Integer const& v) { return v == 0; });
}

std::optional<Integer> RingElement::as_integer() const {
  if (denom_exp_ != 0) {
    return std::nullopt;
  }
  for (std::size_t i = 1; i < coords_.size(); ++i) {
    if (coords_[i] != 0) return std::nullopt;
  }
  return coords_[0];
}

namespace {

void check_same(RingElement const& a, RingElement const& b) {
  if (a.ring() != b.ring() && !a.ring()->same_as(*b.ring())) {
    throw SpecMismatch();
  }
}

// u^e in base coordinates.
Coords u_power(RingSpec const& spec, unsigned e) {
  Coords r = unit_coords(spec.basis_size());
  for (unsigned i = 0; i < e; ++i) {
    r = spec.base_mul(r, spec.u());
  }
  return r;
}

}  // namespace

RingElement RingElement::operator-() const {
  RingElement r(*this);
  for (auto& v : r.coords_) {
    v = -v;
  }
  r.canonicalize();
  return r;
}

RingElement& RingElement::operator+=(RingElement const& b) {
  check_same(*this, b);
  if (denom_exp_ == b.denom_exp_) {
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      coords_[i] += b.coords_[i];
    }
  } else if (denom_exp_ > b.denom_exp_) {
    auto lifted = ring_->base_mul(b.coords_, u_power(*ring_, denom_exp_ - b.denom_exp_));
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      coords_[i] += lifted[i];
    }
  } else {
    coords_ = ring_->base_mul(coords_, u_power(*ring_, b.denom_exp_ - denom_exp_));
    denom_exp_ = b.denom_exp_;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      coords_[i] += b.coords_[i];
    }
  }
  canonicalize();
  return *this;
}

RingElement& RingElement::operator-=(RingElement const& b) { return *this += -b; }

RingElement& RingElement::operator*=(RingElement const& b) {
  check_same(*this, b);
  coords_ = ring_->base_mul(coords_, b.coords_);
  denom_exp_ += b.denom_exp_;
  canonicalize();
  return *this;
}

void RingElement::add_mul(RingElement const& a, RingElement const& b) {
  if (ring_->basis_size() == 1 && !ring_->is_localized()) {
    mpz_addmul(coords_[0].get_mpz_t(), a.coords_[0].get_mpz_t(), b.coords_[0].get_mpz_t());
    if (ring_->kind() == RingKind::Modular) {
      mpz_mod(coords_[0].get_mpz_t(), coords_[0].get_mpz_t(), ring_->modulus().get_mpz_t());
    }
    return;
  }
  *this += a * b;
}

RingElement RingElement::scaled(Integer const& c) const {
  RingElement r(*this);
  for (auto& v : r.coords_) {
    v *= c;
  }
  r.canonicalize();
  return r;
}

std::optional<RingElement> RingElement::try_inverse() const {
  RingSpec const& spec = *ring_;
  std::size_t const n = spec.basis_size();
  if (spec.kind() == RingKind::Modular) {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), coords_[0].get_mpz_t(), spec.modulus().get_mpz_t()) == 0) {
      return std::nullopt;
    }
    return RingElement(ring_, Coords{r});
  }
  auto m = spec.mul_matrix(coords_);
  Integer det = determinant(m, n);
  if (det == 0) {
    return std::nullopt;
  }
  auto adj = adjugate(m, n);
  if (spec.kind() != RingKind::Localized) {
    if (det != 1 && det != -1) {
      return std::nullopt;
    }
    auto c = solve_integral(adj, det, unit_coords(n));
    return RingElement(ring_, std::move(*c));
  }
  // b is a unit of O[1/u] iff b divides some u^j in O; u is then nilpotent in
  // O/bO, whose length is at most log2 |det|.
  std::size_t const bound = mpz_sizeinbase(det.get_mpz_t(), 2) + 1;
  Coords uj = unit_coords(n);
  for (unsigned j = 0; j <= bound; ++j) {
    if (auto c = solve_integral(adj, det, uj)) {
      // (u^{-k} b)^{-1} = u^{k-j} c
      if (denom_exp_ >= j) {
        Coords lifted = spec.base_mul(*c, u_power(spec, denom_exp_ - j));
        return RingElement(ring_, std::move(lifted), 0);
      }
      return RingElement(ring_, std::move(*c), j - denom_exp_);
    }
    uj = spec.base_mul(uj, spec.u());
  }
  return std::nullopt;
}

RingElement RingElement::inverse() const {
  auto r = try_inverse();
  if (!r) {
    throw NotAUnit(to_string() + " in " + ring_->describe());
  }
  return std::move(*r);
}

RingElement RingElement::pow(long long e) const {
  if (e < 0) {
    return inverse().pow(-e);
  }
  RingElement result = one(ring_);
  RingElement base = *this;
  auto k = static_cast<unsigned long long>(e);
  while (k) {
    if (k & 1ULL) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

bool operator==(RingElement const& a, RingElement const& b) {
  if (a.ring_ != b.ring_ && !a.ring_->same_as(*b.ring_)) {
    return false;
  }
  return a.denom_exp_ == b.denom_exp_ && a.coords_ == b.coords_;
}

std::string RingElement::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ',';
    out += coords_[i].get_str();
  }
  if (denom_exp_ > 0) {
    out += "/u^" + std::to_string(denom_exp_);
  }
  return out;
}

RingElement operator+(RingElement a, RingElement const& b) { return a += b; }
RingElement operator-(RingElement a, RingElement const& b) { return a -= b; }
RingElement operator*(RingElement a, RingElement const& b) { return a *= b; }

RingElement add(RingElement const& a, RingElement const& b) { return a + b; }
RingElement mul(RingElement const& a, RingElement const& b) { return a * b; }
RingElement inv(RingElement const& a) { return a.inverse(); }

DivModBasis divmod_basis(RingElement const& a, Integer const& p) {
  auto kind = a.ring()->kind();
  if (kind != RingKind::Integers && kind != RingKind::Order) {
    throw RingError("divmod_basis needs an element of Z or of an order");
  }
  if (p < 1) {
    throw RingError("divmod_basis needs p >= 1");
  }
  DivModBasis out;
  for (auto const& m : a.coords()) {
    Integer q;
    Integer r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    out.quotient.push_back(std::move(q));
    out.remainder.push_back(std::move(r));
  }
  return out;
}

ClearedDenominator clear_denominator(RingElement const& a) {
  if (!a.ring()->is_localized()) {
    throw RingError("clear_denominator needs an element of a localized ring");
  }
  return {a.denom_exp(), RingElement(a.ring()->base(), a.coords())};
}

RingElement lift_to(RingPtr localized, RingElement const& b) {
  if (!localized->is_localized() || !localized->base()->same_as(*b.ring())) {
    throw SpecMismatch();
  }
  return RingElement(std::move(localized), b.coords(), 0);
}

RingElement localizing_element(RingPtr const& localized) {
  if (!localized->is_localized()) {
    throw RingError("ring is not a localization");
  }
  return RingElement(localized, localized->u(), 0);
}

}  // namespace chev
