#include "chevalley/natural_rep.hpp"

#include <stdexcept>

#include "chevalley/witness.hpp"

namespace chev {

namespace {

bool is_type_a(RootSystem const& rs) {
  auto const& c = rs.cartan();
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) {
      int want = i == j ? 2 : (i + 1 == j || j + 1 == i ? -1 : 0);
      if (c[i][j] != want) return false;
    }
  return true;
}

RingElement det_rec(std::vector<RingElement> const& m, std::size_t n, RingPtr const& ring) {
  if (n == 0) return RingElement::one(ring);
  if (n == 1) return m[0];
  RingElement total = RingElement::zero(ring);
  std::vector<RingElement> minor((n - 1) * (n - 1));
  for (std::size_t r = 0; r < n; ++r) {
    if (m[r * n].is_zero()) continue;
    for (std::size_t i = 0, mi = 0; i < n; ++i) {
      if (i == r) continue;
      for (std::size_t j = 1; j < n; ++j) minor[mi * (n - 1) + j - 1] = m[i * n + j];
      ++mi;
    }
    auto term = m[r * n] * det_rec(minor, n - 1, ring);
    if (r % 2) total -= term; else total += term;
  }
  return total;
}

std::vector<RingElement> entries_without(Matrix const& g, std::size_t row, std::size_t col) {
  std::size_t n = g.dim();
  std::vector<RingElement> out;
  out.reserve((n - 1) * (n - 1));
  for (std::size_t i = 0; i < n; ++i) {
    if (i == row) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (j != col) out.push_back(g(i, j));
  }
  return out;
}

}  // namespace

NaturalRep::NaturalRep(std::shared_ptr<ChevalleyGroup const> group) : group_(std::move(group)) {
  auto const& rs = group_->roots();
  if (!is_type_a(rs)) throw std::invalid_argument("natural representation needs a root system of type A");
  n_ = rs.rank() + 1;
  pos_.resize(rs.size());
  sign_.assign(rs.size(), 0);
  at_.assign(n_ * n_, rs.size());

  // Follow the adjoint basis recursion: X_gamma = [X_{alpha_i}, X_{gamma - alpha_i}] / (p + 1).
  for (std::size_t g = 0; g < rs.num_positive(); ++g) {
    auto const& v = rs.root(g);
    std::size_t a = 0;
    while (v[a] == 0) ++a;
    std::size_t b = a;
    while (b < v.size() && v[b] != 0) ++b;
    pos_[g] = {a, b};
    if (rs.height(g) == 1) {
      sign_[g] = 1;
      continue;
    }
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      RootVec rest = v;
      --rest[i];
      auto prev = rs.index_of(rest);
      if (!prev) continue;
      int p = 0;
      for (RootVec down = rest; (--down[i], rs.index_of(down)); ) ++p;
      auto [pa, pb] = pos_[*prev];
      // [E_{i,i+1}, E_{pa,pb}] = delta(i+1, pa) E_{i,pb} - delta(pb, i) E_{pa,i+1}
      int coeff = 0;
      if (i + 1 == pa && i == a && pb == b) coeff = 1;
      if (pb == i && pa == a && i + 1 == b) coeff = -1;
      coeff *= sign_[*prev];
      if (coeff == 0 || coeff % (p + 1) != 0) {
        throw std::logic_error("natural representation recursion left the expected entry");
      }
      sign_[g] = coeff / (p + 1);
      break;
    }
  }
  for (std::size_t g = 0; g < rs.num_positive(); ++g) {
    auto neg = rs.negative_of(g);
    pos_[neg] = {pos_[g].second, pos_[g].first};
    sign_[neg] = sign_[g];
  }
  for (std::size_t r = 0; r < rs.size(); ++r) at_[pos_[r].first * n_ + pos_[r].second] = r;
}

Matrix NaturalRep::x(std::size_t root, RingElement const& t) const {
  Matrix m = identity();
  auto [a, b] = pos_[root];
  m(a, b) = sign_[root] > 0 ? t : -t;
  return m;
}

Matrix NaturalRep::evaluate(Word const& w) const {
  Matrix m = identity();
  for (auto const& l : w.letters) {
    std::visit(
        [&](auto const& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, RootLetter>) {
            m = m * x(v.root, v.param);
          } else if constexpr (std::is_same_v<T, TorusLetter>) {
            m = m * evaluate(group_->h_word(v.root, v.param));
          } else {
            m = m * evaluate(*v.prefix) * evaluate(*v.inner) * evaluate(v.prefix->inverse());
          }
        },
        l);
  }
  return m;
}

RingElement NaturalRep::determinant(Matrix const& g) const {
  std::vector<RingElement> e;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) e.push_back(g(i, j));
  return det_rec(e, g.dim(), g.ring());
}

Matrix NaturalRep::inverse(Matrix const& g) const {
  auto det_inv = determinant(g).inverse();
  std::size_t n = g.dim();
  Matrix out(g.ring(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto c = det_rec(entries_without(g, j, i), n - 1, g.ring()) * det_inv;
      out(i, j) = (i + j) % 2 ? -c : c;
    }
  return out;
}

Matrix NaturalRep::adjoint_of(Matrix const& g) const {
  auto const& alg = group_->algebra();
  auto const& rs = alg.roots();
  Matrix ginv = inverse(g);
  Matrix out(ring(), alg.dim());
  for (std::size_t col = 0; col < alg.dim(); ++col) {
    Matrix X(ring(), n_);
    if (auto r = alg.basis_root(col)) {
      auto [a, b] = pos_[*r];
      X(a, b) = RingElement::from_int(ring(), sign_[*r]);
    } else {
      std::size_t i = col - rs.num_positive();
      X(i, i) = RingElement::one(ring());
      X(i + 1, i + 1) = -RingElement::one(ring());
    }
    Matrix Y = g * X * ginv;
    for (std::size_t r = 0; r < rs.size(); ++r) {
      auto [a, b] = pos_[r];
      out(alg.root_basis(r), col) = sign_[r] > 0 ? Y(a, b) : -Y(a, b);
    }
    // diag(Y) = sum_i c_i (E_ii - E_{i+1,i+1})  =>  c_i = d_0 + ... + d_i
    RingElement c = RingElement::zero(ring());
    for (std::size_t i = 0; i + 1 < n_; ++i) {
      c += Y(i, i);
      out(alg.cartan_basis(i), col) = c;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct RowOp {
  std::size_t a, b;
  Integer c;  // row_a += c row_b
};

class Eliminator {
 public:
  Eliminator(Matrix const& g, Integer modulus) : n_(g.dim()), m_(std::move(modulus)), w_(n_ * n_) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        auto v = g(i, j).as_integer();
        if (!v) throw NotElementary("entry " + g(i, j).to_string() + " is not an integer");
        w_[i * n_ + j] = *v;
      }
  }

  std::vector<RowOp> run() {
    for (std::size_t j = 0; j < n_; ++j) column(j);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (at(i, j) != (i == j ? 1 : 0)) throw NotElementary("determinant is not 1");
    return ops_;
  }

 private:
  Integer& at(std::size_t i, std::size_t j) { return w_[i * n_ + j]; }

  Integer size_of(Integer const& v) const { return m_ == 0 ? Integer(abs(v)) : v; }

  void apply(std::size_t a, std::size_t b, Integer c) {
    if (m_ != 0) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m_.get_mpz_t());
    if (c == 0) return;
    for (std::size_t k = 0; k < n_; ++k) {
      Integer& t = at(a, k);
      t += c * at(b, k);
      if (m_ != 0) mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), m_.get_mpz_t());
    }
    ops_.push_back({a, b, std::move(c)});
  }

  bool is_unit(Integer const& d) const {
    if (m_ == 0) return d == 1 || d == -1;
    Integer g;
    mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), m_.get_mpz_t());
    return g == 1;
  }

  Integer unit_inverse(Integer const& d) const {
    if (m_ == 0) return d;
    Integer r;
    mpz_invert(r.get_mpz_t(), d.get_mpz_t(), m_.get_mpz_t());
    return r;
  }

  void column(std::size_t j) {
    // Euclid among rows j..n-1 until a single nonzero entry remains.
    std::size_t p;
    while (true) {
      std::vector<std::size_t> nz;
      for (std::size_t i = j; i < n_; ++i)
        if (at(i, j) != 0) nz.push_back(i);
      if (nz.empty()) throw NotElementary("singular column during elimination");
      p = nz.front();
      for (auto i : nz)
        if (size_of(at(i, j)) < size_of(at(p, j))) p = i;
      if (nz.size() == 1) break;
      for (auto i : nz) {
        if (i == p) continue;
        Integer q;
        if (m_ == 0) {
          mpz_tdiv_q(q.get_mpz_t(), at(i, j).get_mpz_t(), at(p, j).get_mpz_t());
        } else {
          mpz_fdiv_q(q.get_mpz_t(), at(i, j).get_mpz_t(), at(p, j).get_mpz_t());
        }
        apply(i, p, -q);
      }
    }
    Integer d = at(p, j);
    if (!is_unit(d)) throw NotElementary("pivot " + d.get_str() + " is not a unit");
    if (p != j) {
      apply(j, p, 1);
      apply(p, j, -1);
    }
    if (d != 1) {
      if (j + 1 == n_) throw NotElementary("determinant is not 1");
      // (d, 0) -> (d, c d) -> (1, c d) -> (1, 0) with c = d^{-1} (1 - d)
      Integer c = unit_inverse(d) * (1 - d);
      apply(j + 1, j, c);
      apply(j, j + 1, 1);
      apply(j + 1, j, -(1 - d));
    }
    for (std::size_t i = 0; i < n_; ++i)
      if (i != j && at(i, j) != 0) apply(i, j, -Integer(at(i, j)));
  }

  std::size_t n_;
  Integer m_;
  std::vector<Integer> w_;
  std::vector<RowOp> ops_;
};

}  // namespace

Word factor_elementary(NaturalRep const& rep, Matrix const& g) {
  auto const& ring = *rep.ring();
  if (ring.kind() != RingKind::Integers && ring.kind() != RingKind::Modular) {
    throw NotElementary("factorization needs Z or Z/m");
  }
  if (g.dim() != rep.n()) throw std::invalid_argument("matrix size does not match the representation");
  Integer modulus = ring.kind() == RingKind::Modular ? ring.modulus() : Integer(0);
  auto ops = Eliminator(g, modulus).run();

  // E_K ... E_1 g = 1, so g = E_1^{-1} ... E_K^{-1} and (1 + c E_ab)^{-1} = x_gamma(-c sign_gamma).
  Word w;
  for (auto const& op : ops) {
    auto root = rep.root_at(op.a, op.b);
    Integer c = rep.sign(root) > 0 ? Integer(-op.c) : op.c;
    w.push(RootLetter{root, RingElement::from_int(rep.ring(), c)});
  }
  if (rep.evaluate(w) != g) throw WitnessFailure("elimination word does not reproduce the matrix");
  return w;
}

}  // namespace chev
