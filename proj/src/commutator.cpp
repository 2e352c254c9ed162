#include "chevalley/commutator.hpp"

#include <algorithm>
#include <array>

namespace chev {

std::string to_string(Pairing p) { return p == Pairing::TiSj ? "t^i s^j" : "s^i t^j"; }

std::optional<std::int64_t> CommutatorTable::constant(int i, int j) const {
  for (auto const& t : terms)
    if (t.i == i && t.j == j) return t.c;
  return std::nullopt;
}

std::pair<int, int> monomial_exponents(CommutatorTable const& table, CommutatorTerm const& term) {
  if (table.pairing == Pairing::TiSj) return {term.j, term.i};
  return {term.i, term.j};
}

bool proportional(RootSystem const& rs, std::size_t a, std::size_t b) {
  return a == b || rs.negative_of(a) == b;
}

namespace {

std::shared_ptr<ChevalleyAlgebra const> borrow(ChevalleyAlgebra const& algebra) {
  return std::shared_ptr<ChevalleyAlgebra const>(&algebra, [](ChevalleyAlgebra const*) {});
}

Integer ipow(Integer const& base, int e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

// Reads off the parameters a_k of M = prod_k x_{gamma_k}(a_k), factors given
// in order of increasing degree. Returns nullopt if M is not of that form.
std::optional<std::vector<Integer>> peel_factors(ChevalleyGroup const& group, Matrix m,
                                                 std::vector<CommutatorTerm> const& terms) {
  auto const& alg = group.algebra();
  auto const& rs = group.roots();
  std::vector<Integer> params;
  for (auto const& term : terms) {
    // x_gamma(a) X_{-gamma} = X_{-gamma} + a [X_gamma, X_{-gamma}] + ..., so the
    // H-component in column X_{-gamma} is linear in a. Products of the later
    // factors cannot reach this shift because their degrees add up too high.
    auto cor = alg.coroot(term.root);
    std::size_t k = 0;
    while (k < cor.size() && cor[k] == 0) ++k;
    if (k == cor.size()) return std::nullopt;
    std::size_t row = alg.cartan_basis(k);
    std::size_t col = alg.root_basis(rs.negative_of(term.root));
    auto value = m(row, col).as_integer();
    if (!value) return std::nullopt;
    Integer denom(static_cast<long>(cor[k]));
    if (!mpz_divisible_p(value->get_mpz_t(), denom.get_mpz_t())) return std::nullopt;
    Integer a = *value / denom;
    m = group.x(term.root, group.elem(-a)) * m;
    params.push_back(a);
  }
  if (!m.is_identity()) return std::nullopt;
  return params;
}

}  // namespace

CommutatorTable derive_Cij(ChevalleyAlgebra const& algebra, std::size_t alpha, std::size_t beta) {
  auto const& rs = algebra.roots();
  if (proportional(rs, alpha, beta)) {
    throw std::invalid_argument("derive_Cij needs non-proportional roots");
  }
  ChevalleyGroup group(borrow(algebra), RingSpec::integers());

  CommutatorTable table{alpha, beta, Pairing::TiSj, false, false, {}};
  for (auto const& [ij, root] : rs.positive_combinations(alpha, beta)) {
    table.terms.push_back({ij.first, ij.second, root, 0});
  }
  std::sort(table.terms.begin(), table.terms.end(), [](auto const& a, auto const& b) {
    return std::make_pair(a.i + a.j, a.i) < std::make_pair(b.i + b.j, b.i);
  });

  // Distinct nonzero instantiations; monomials s^a t^b separate under them.
  static constexpr std::array<std::pair<long, long>, 6> kSamples{
      {{1, 1}, {2, 3}, {3, 2}, {-2, 5}, {5, -3}, {7, 11}}};
  std::vector<std::vector<Integer>> observed;
  for (auto const& [s, t] : kSamples) {
    auto lhs = group.root_commutator(alpha, group.elem(s), beta, group.elem(t));
    auto params = peel_factors(group, lhs, table.terms);
    if (!params) {
      throw NoSolution("commutator of " + rs.root_name(alpha) + ", " + rs.root_name(beta) +
                       " is not a product of root elements in the fixed order");
    }
    observed.push_back(std::move(*params));
  }

  auto fit = [&](Pairing pairing) -> std::optional<std::vector<std::int64_t>> {
    CommutatorTable probe = table;
    probe.pairing = pairing;
    std::vector<std::int64_t> constants;
    for (std::size_t k = 0; k < table.terms.size(); ++k) {
      auto [es, et] = monomial_exponents(probe, table.terms[k]);
      std::optional<Integer> c;
      for (std::size_t n = 0; n < kSamples.size(); ++n) {
        Integer mono = ipow(Integer(kSamples[n].first), es) * ipow(Integer(kSamples[n].second), et);
        Integer const& a = observed[n][k];
        if (!mpz_divisible_p(a.get_mpz_t(), mono.get_mpz_t())) return std::nullopt;
        Integer q = a / mono;
        if (c && *c != q) return std::nullopt;
        c = q;
      }
      constants.push_back(c->get_si());
    }
    return constants;
  };

  auto tisj = fit(Pairing::TiSj);
  auto sitj = fit(Pairing::SiTj);
  table.tisj_fits = tisj.has_value();
  table.sitj_fits = sitj.has_value();
  if (!tisj && !sitj) {
    throw NoSolution("no constant table fits [x(" + rs.root_name(alpha) + "), x(" + rs.root_name(beta) +
                     ")] under either exponent pairing");
  }
  table.pairing = tisj ? Pairing::TiSj : Pairing::SiTj;
  auto const& constants = tisj ? *tisj : *sitj;
  for (std::size_t k = 0; k < table.terms.size(); ++k) table.terms[k].c = constants[k];

  static constexpr std::array<std::pair<long, long>, 3> kFresh{{{4, -7}, {-9, 6}, {11, 13}}};
  for (auto const& [s, t] : kFresh) {
    if (!verify_commutator(group, table, group.elem(s), group.elem(t)).pass) {
      throw NoSolution("derived constants failed re-verification for " + rs.root_name(alpha) + ", " +
                       rs.root_name(beta));
    }
  }
  return table;
}

Word commutator_rhs_word(CommutatorTable const& table, RingElement const& s, RingElement const& t) {
  Word w;
  for (auto const& term : table.terms) {
    auto [es, et] = monomial_exponents(table, term);
    RingElement param = s.pow(es) * t.pow(et);
    w.push(RootLetter{term.root, param.scaled(Integer(static_cast<long>(term.c)))});
  }
  return w;
}

Matrix commutator_rhs(ChevalleyGroup const& group, CommutatorTable const& table, RingElement const& s,
                      RingElement const& t) {
  return group.evaluate(commutator_rhs_word(table, s, t));
}

CommutatorCheck verify_commutator(ChevalleyGroup const& group, CommutatorTable const& table,
                                  RingElement const& s, RingElement const& t) {
  auto lhs = group.root_commutator(table.alpha, s, table.beta, t);
  auto rhs = commutator_rhs(group, table, s, t);
  bool pass = lhs == rhs;
  return {pass, std::move(lhs), std::move(rhs)};
}

CommutatorTable const& CommutatorTables::get(std::size_t alpha, std::size_t beta) const {
  std::lock_guard lock(mutex_);
  auto key = std::make_pair(alpha, beta);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  return cache_.emplace(key, derive_Cij(*algebra_, alpha, beta)).first->second;
}

}  // namespace chev
