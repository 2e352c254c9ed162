#include "chevalley/lie_algebra.hpp"

#include <gmpxx.h>

#include <functional>
#include <string>

namespace chev {

IntMatrix IntMatrix::identity(std::size_t dim) {
  IntMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  for (auto v : a)
    if (v != 0) return false;
  return true;
}

IntMatrix operator*(IntMatrix const& x, IntMatrix const& y) {
  IntMatrix r(x.n);
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t k = 0; k < x.n; ++k) {
      auto v = x(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < x.n; ++j) r(i, j) += v * y(k, j);
    }
  return r;
}

IntMatrix operator-(IntMatrix const& x, IntMatrix const& y) {
  IntMatrix r(x);
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
  return r;
}

IntMatrix operator+(IntMatrix const& x, IntMatrix const& y) {
  IntMatrix r(x);
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
  return r;
}

namespace {

using QVec = std::vector<mpq_class>;

// Computes the action of the Chevalley generators e_j = X_{alpha_j} and
// f_j = X_{-alpha_j} on the basis by induction on height.
class GeneratorAction {
 public:
  explicit GeneratorAction(RootSystem const& rs) : rs_(rs) {
    np_ = rs.num_positive();
    r_ = rs.rank();
    dim_ = 2 * np_ + r_;
    define_.assign(np_, {0, 0, 0});
    for (std::size_t g = r_; g < np_; ++g) {
      // positive roots of height >= 2 come after the simple roots
      for (std::size_t i = 0; i < r_; ++i) {
        auto rest = minus_simple(g, i);
        if (!rest) continue;
        int p = 0;
        RootVec v = rs.root(*rest);
        while (true) {
          v[i] -= 1;
          if (!rs.index_of(v)) break;
          ++p;
        }
        define_[g] = {i, *rest, p};
        break;
      }
    }
  }

  std::size_t dim() const { return dim_; }
  std::size_t basis_of_root(std::size_t root) const {
    return root < np_ ? root : root - np_ + np_ + r_;
  }
  std::size_t h(std::size_t i) const { return np_ + i; }

  struct Definition {
    std::size_t simple;
    std::size_t rest;
    int p;
  };
  Definition const& definition(std::size_t positive_root) const { return define_[positive_root]; }

  QVec const& e(std::size_t j, std::size_t b) { return act(true, j, b); }
  QVec const& f(std::size_t j, std::size_t b) { return act(false, j, b); }

 private:
  std::optional<std::size_t> plus_simple(std::size_t root, std::size_t i) const {
    RootVec v = rs_.root(root);
    v[i] += 1;
    return rs_.index_of(v);
  }
  std::optional<std::size_t> minus_simple(std::size_t root, std::size_t i) const {
    RootVec v = rs_.root(root);
    v[i] -= 1;
    auto idx = rs_.index_of(v);
    if (idx && !rs_.is_positive(*idx)) return std::nullopt;
    return idx;
  }

  QVec zero() const { return QVec(dim_, mpq_class(0)); }

  QVec apply(bool raise, std::size_t j, QVec const& v) {
    QVec out = zero();
    for (std::size_t b = 0; b < dim_; ++b) {
      if (v[b] == 0) continue;
      auto const& w = act(raise, j, b);
      for (std::size_t k = 0; k < dim_; ++k) {
        if (w[k] != 0) out[k] += v[b] * w[k];
      }
    }
    return out;
  }

  QVec const& act(bool raise, std::size_t j, std::size_t b) {
    auto key = std::make_tuple(raise, j, b);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    QVec v = raise ? compute_e(j, b) : compute_f(j, b);
    return memo_.emplace(key, std::move(v)).first->second;
  }

  QVec compute_e(std::size_t j, std::size_t b) {
    QVec out = zero();
    if (b >= np_ && b < np_ + r_) {
      // [e_j, h_k] = -<alpha_j, alpha_k> e_j
      std::size_t k = b - np_;
      out[basis_of_root(j)] = -rs_.cartan()[j][k];
      return out;
    }
    if (b < np_) {
      std::size_t gamma = b;
      auto delta = plus_simple(gamma, j);
      if (!delta) return out;
      auto const& def = define_[*delta];
      if (def.simple == j && def.rest == gamma) {
        out[basis_of_root(*delta)] = def.p + 1;
        return out;
      }
      // Compare [f_k, [e_j, X_gamma]] with [f_k, X_delta] for some k that
      // lowers delta; both are multiples of X_{delta - alpha_k}.
      std::size_t k = def.simple;
      std::size_t target = basis_of_root(def.rest);
      QVec lhs = apply(true, j, f(k, b));
      if (k == j) {
        lhs[b] -= rs_.cartan_int(gamma, j);
      }
      QVec const& rhs = f(k, basis_of_root(*delta));
      if (rhs[target] == 0) {
        throw StructureConstantError("lowering operator vanished on a non-simple root");
      }
      out[basis_of_root(*delta)] = lhs[target] / rhs[target];
      return out;
    }
    // negative root X_{-gamma}: [e_j, X_{-gamma}] = omega([f_j, X_gamma])
    std::size_t gamma = b - np_ - r_;
    if (gamma == j) {
      out[h(j)] = 1;
      return out;
    }
    auto lower = minus_simple(gamma, j);
    if (!lower) return out;
    QVec const& fv = f(j, basis_of_root(gamma));
    out[basis_of_root(rs_.negative_of(*lower))] = -fv[basis_of_root(*lower)];
    return out;
  }

  QVec compute_f(std::size_t j, std::size_t b) {
    QVec out = zero();
    if (b >= np_ && b < np_ + r_) {
      // [f_j, h_k] = <alpha_j, alpha_k> f_j
      std::size_t k = b - np_;
      out[basis_of_root(rs_.negative_of(j))] = rs_.cartan()[j][k];
      return out;
    }
    if (b < np_) {
      std::size_t gamma = b;
      if (gamma < r_) {
        if (gamma == j) out[h(j)] = -1;
        return out;
      }
      auto const& def = define_[gamma];
      // [f_j, [e_i, X_rest]] = -delta_ij [h_i, X_rest] + [e_i, [f_j, X_rest]]
      QVec v = apply(true, def.simple, f(j, basis_of_root(def.rest)));
      if (def.simple == j) {
        v[basis_of_root(def.rest)] -= rs_.cartan_int(def.rest, def.simple);
      }
      for (auto& c : v) c /= def.p + 1;
      return v;
    }
    // [f_j, X_{-gamma}] = omega([e_j, X_gamma])
    std::size_t gamma = b - np_ - r_;
    auto upper = plus_simple(gamma, j);
    if (!upper) return out;
    QVec const& ev = e(j, basis_of_root(gamma));
    out[basis_of_root(rs_.negative_of(*upper))] = -ev[basis_of_root(*upper)];
    return out;
  }

  RootSystem const& rs_;
  std::size_t np_;
  std::size_t r_;
  std::size_t dim_;
  std::vector<Definition> define_;
  std::map<std::tuple<bool, std::size_t, std::size_t>, QVec> memo_;
};

IntMatrix to_int_matrix(std::function<QVec const&(std::size_t)> const& column, std::size_t dim) {
  IntMatrix m(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    auto const& v = column(c);
    for (std::size_t r = 0; r < dim; ++r) {
      if (v[r].get_den() != 1) {
        throw StructureConstantError("non-integral structure constant");
      }
      m(r, c) = v[r].get_num().get_si();
    }
  }
  return m;
}

IntMatrix commutator(IntMatrix const& x, IntMatrix const& y) { return x * y - y * x; }

IntMatrix divide_exact(IntMatrix m, std::int64_t d) {
  for (auto& v : m.a) {
    if (v % d != 0) throw StructureConstantError("inexact division of an adjoint matrix");
    v /= d;
  }
  return m;
}

}  // namespace

ChevalleyAlgebra::ChevalleyAlgebra(RootSystem roots)
    : roots_(std::move(roots)), dim_(roots_.size() + roots_.rank()) {
  GeneratorAction gen(roots_);
  std::size_t const np = roots_.num_positive();
  std::size_t const r = roots_.rank();
  ad_.assign(dim_, IntMatrix(dim_));

  for (std::size_t j = 0; j < r; ++j) {
    ad_[gen.basis_of_root(j)] = to_int_matrix([&](std::size_t c) -> QVec const& { return gen.e(j, c); }, dim_);
    ad_[gen.basis_of_root(roots_.negative_of(j))] =
        to_int_matrix([&](std::size_t c) -> QVec const& { return gen.f(j, c); }, dim_);
  }
  for (std::size_t k = 0; k < r; ++k) {
    IntMatrix m(dim_);
    for (std::size_t root = 0; root < roots_.size(); ++root) {
      auto b = gen.basis_of_root(root);
      m(b, b) = roots_.cartan_int(root, k);
    }
    ad_[gen.h(k)] = m;
  }
  for (std::size_t g = r; g < np; ++g) {
    auto const& def = gen.definition(g);
    ad_[gen.basis_of_root(g)] =
        divide_exact(commutator(ad_[gen.basis_of_root(def.simple)], ad_[gen.basis_of_root(def.rest)]), def.p + 1);
    ad_[gen.basis_of_root(roots_.negative_of(g))] = divide_exact(
        commutator(ad_[gen.basis_of_root(roots_.negative_of(def.simple))],
                   ad_[gen.basis_of_root(roots_.negative_of(def.rest))]),
        -(def.p + 1));
  }

  divided_powers_.resize(roots_.size());
  for (std::size_t root = 0; root < roots_.size(); ++root) {
    auto& dp = divided_powers_[root];
    dp.push_back(IntMatrix::identity(dim_));
    IntMatrix power = IntMatrix::identity(dim_);
    std::int64_t factorial = 1;
    for (std::int64_t m = 1;; ++m) {
      power = power * ad_root(root);
      if (power.is_zero()) break;
      factorial *= m;
      dp.push_back(divide_exact(power, factorial));
      if (m > 8) throw StructureConstantError("ad(X_alpha) is not nilpotent");
    }
  }
}

std::size_t ChevalleyAlgebra::root_basis(std::size_t root) const {
  std::size_t const np = roots_.num_positive();
  return root < np ? root : root + roots_.rank();
}

std::optional<std::size_t> ChevalleyAlgebra::basis_root(std::size_t b) const {
  std::size_t const np = roots_.num_positive();
  if (b < np) return b;
  if (b < np + roots_.rank()) return std::nullopt;
  return b - roots_.rank();
}

std::vector<std::int64_t> ChevalleyAlgebra::bracket(std::size_t a, std::size_t b) const {
  std::vector<std::int64_t> out(dim_);
  auto const& m = ad_[a];
  for (std::size_t r = 0; r < dim_; ++r) out[r] = m(r, b);
  return out;
}

std::int64_t ChevalleyAlgebra::N(std::size_t alpha, std::size_t beta) const {
  RootVec sum = roots_.root(alpha);
  for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += roots_.root(beta)[k];
  auto idx = roots_.index_of(sum);
  if (!idx) return 0;
  return ad_root(alpha)(root_basis(*idx), root_basis(beta));
}

std::vector<std::int64_t> ChevalleyAlgebra::coroot(std::size_t alpha) const {
  std::vector<std::int64_t> out(rank());
  auto const& m = ad_root(alpha);
  std::size_t col = root_basis(roots_.negative_of(alpha));
  for (std::size_t i = 0; i < rank(); ++i) out[i] = m(cartan_basis(i), col);
  return out;
}

bool ChevalleyAlgebra::check_jacobi() const {
  std::vector<std::int64_t> total(dim_);
  auto add_bracket_with = [&](std::size_t x, std::vector<std::int64_t> const& v) {
    // total += [basis_x, v]
    auto const& m = ad_[x];
    for (std::size_t c = 0; c < dim_; ++c) {
      if (v[c] == 0) continue;
      for (std::size_t r = 0; r < dim_; ++r) total[r] += m(r, c) * v[c];
    }
  };
  for (std::size_t a = 0; a < dim_; ++a)
    for (std::size_t b = 0; b < dim_; ++b)
      for (std::size_t c = 0; c < dim_; ++c) {
        std::fill(total.begin(), total.end(), 0);
        add_bracket_with(a, bracket(b, c));
        add_bracket_with(b, bracket(c, a));
        add_bracket_with(c, bracket(a, b));
        for (auto v : total)
          if (v != 0) return false;
      }
  return true;
}

}  // namespace chev
