#include "chevalley/group.hpp"

#include <cstdint>
#include <cstdio>
#include <stdexcept>

namespace chev {

Matrix::Matrix(RingPtr ring, std::size_t n)
    : ring_(std::move(ring)), n_(n), entries_(n * n, RingElement::zero(ring_)) {}

Matrix Matrix::identity(RingPtr ring, std::size_t n) {
  Matrix m(ring, n);
  auto one = RingElement::one(ring);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
  return m;
}

bool Matrix::is_identity() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      auto const& e = (*this)(i, j);
      if (i == j ? !e.is_one() : !e.is_zero()) return false;
    }
  return true;
}

Matrix Matrix::pow(Integer const& e) const {
  if (e < 0) {
    throw std::invalid_argument("Matrix::pow needs a nonnegative exponent");
  }
  Matrix result = identity(ring_, n_);
  Matrix base = *this;
  Integer k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Matrix operator*(Matrix const& a, Matrix const& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix dimension mismatch");
  std::size_t const n = a.n_;
  // nonzero pattern of b, row by row
  std::vector<std::vector<std::size_t>> nz(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j)
      if (!b(k, j).is_zero()) nz[k].push_back(j);

  Matrix c(a.ring_, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      auto const& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (auto j : nz[k]) c(i, j).add_mul(aik, b(k, j));
    }
  return c;
}

bool operator==(Matrix const& a, Matrix const& b) {
  return a.n_ == b.n_ && a.entries_ == b.entries_;
}

std::string Matrix::canonical_text() const {
  std::string out;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      out += (*this)(i, j).to_string();
      out += j + 1 < n_ ? ' ' : ';';
    }
  }
  return out;
}

std::string matrix_hash(Matrix const& m) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : m.canonical_text()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// ---------------------------------------------------------------------------

std::size_t Word::letter_count() const {
  std::size_t n = 0;
  for (auto const& l : letters) {
    if (auto const* c = std::get_if<ConjugateLetter>(&l)) {
      n += 2 * c->prefix->letter_count() + c->inner->letter_count();
    } else {
      ++n;
    }
  }
  return n;
}

Word Word::inverse() const {
  Word out;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    std::visit(
        [&](auto const& l) {
          using T = std::decay_t<decltype(l)>;
          if constexpr (std::is_same_v<T, RootLetter>) {
            out.letters.push_back(RootLetter{l.root, -l.param});
          } else if constexpr (std::is_same_v<T, TorusLetter>) {
            out.letters.push_back(TorusLetter{l.root, l.param.inverse()});
          } else {
            out.letters.push_back(
                ConjugateLetter{l.prefix, std::make_shared<Word const>(l.inner->inverse())});
          }
        },
        *it);
  }
  return out;
}

Word& Word::append(Word const& w) {
  letters.insert(letters.end(), w.letters.begin(), w.letters.end());
  return *this;
}

Word& Word::push(Letter l) {
  letters.push_back(std::move(l));
  return *this;
}

Word operator*(Word a, Word const& b) { return a.append(b); }

Word conjugate(Word const& prefix, Word const& inner) {
  Word w;
  w.letters.push_back(
      ConjugateLetter{std::make_shared<Word const>(prefix), std::make_shared<Word const>(inner)});
  return w;
}

Word commutator(Word const& a, Word const& b) {
  Word w = a;
  w.append(b).append(a.inverse()).append(b.inverse());
  return w;
}

Word root_word(std::size_t root, RingElement param) {
  return Word{RootLetter{root, std::move(param)}};
}

// ---------------------------------------------------------------------------

ChevalleyGroup::ChevalleyGroup(std::shared_ptr<ChevalleyAlgebra const> algebra, RingPtr ring)
    : algebra_(std::move(algebra)), ring_(std::move(ring)) {}

Matrix ChevalleyGroup::x(std::size_t root, RingElement const& t) const {
  auto const& dp = algebra_->divided_powers(root);
  std::size_t const n = dim();
  Matrix m = identity();
  if (t.is_zero()) return m;
  RingElement tm = t;
  for (std::size_t k = 1; k < dp.size(); ++k) {
    auto const& d = dp[k];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        auto c = d(i, j);
        if (c != 0) m(i, j) += tm.scaled(Integer(static_cast<long>(c)));
      }
    if (k + 1 < dp.size()) tm *= t;
  }
  return m;
}

Word ChevalleyGroup::h_word(std::size_t root, RingElement const& t) const {
  std::size_t const neg = roots().negative_of(root);
  auto one = elem(1);
  Word w;
  w.push(RootLetter{root, t})
      .push(RootLetter{neg, -t.inverse()})
      .push(RootLetter{root, t})
      .push(RootLetter{root, -one})
      .push(RootLetter{neg, one})
      .push(RootLetter{root, -one});
  return w;
}

Matrix ChevalleyGroup::h(std::size_t root, RingElement const& t) const {
  return evaluate(h_word(root, t));
}

Matrix ChevalleyGroup::evaluate(Letter const& l) const {
  return std::visit(
      [&](auto const& v) -> Matrix {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, RootLetter>) {
          return x(v.root, v.param);
        } else if constexpr (std::is_same_v<T, TorusLetter>) {
          return h(v.root, v.param);
        } else {
          return evaluate(*v.prefix) * evaluate(*v.inner) * evaluate(v.prefix->inverse());
        }
      },
      l);
}

Matrix ChevalleyGroup::evaluate(Word const& w) const {
  Matrix m = identity();
  for (auto const& l : w.letters) m = m * evaluate(l);
  return m;
}

Matrix ChevalleyGroup::root_commutator(std::size_t a, RingElement const& s, std::size_t b,
                                       RingElement const& t) const {
  return x(a, s) * x(b, t) * x(a, -s) * x(b, -t);
}

}  // namespace chev
