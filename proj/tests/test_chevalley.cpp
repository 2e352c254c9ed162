#include <doctest.h>

#include <memory>
#include <random>

#include "chevalley/commutator.hpp"
#include "chevalley/group.hpp"
#include "chevalley/lie_algebra.hpp"
#include "chevalley/word_text.hpp"

using namespace chev;

namespace {

std::shared_ptr<ChevalleyAlgebra const> algebra(char f, int r) {
  return std::make_shared<ChevalleyAlgebra const>(RootSystem::build(f, r));
}

std::shared_ptr<ChevalleyGroup const> group(char f, int r, RingPtr ring) {
  return std::make_shared<ChevalleyGroup const>(algebra(f, r), std::move(ring));
}

// Largest p with beta - p alpha a root, straight from the root list.
int string_below(RootSystem const& rs, std::size_t alpha, std::size_t beta) {
  int p = 0;
  for (;;) {
    RootVec v = rs.root(beta);
    for (std::size_t k = 0; k < v.size(); ++k) v[k] -= (p + 1) * rs.root(alpha)[k];
    if (!rs.index_of(v)) return p;
    ++p;
  }
}

bool is_root_sum(RootSystem const& rs, std::size_t a, std::size_t b) {
  RootVec v = rs.root(a);
  for (std::size_t k = 0; k < v.size(); ++k) v[k] += rs.root(b)[k];
  return rs.index_of(v).has_value();
}

}  // namespace

TEST_CASE("structure constants") {
  for (auto [f, r] : {std::pair{'A', 2}, {'B', 2}, {'G', 2}, {'A', 3}, {'B', 3}, {'C', 3}}) {
    CAPTURE(f);
    CAPTURE(r);
    auto alg = algebra(f, r);
    auto const& rs = alg->roots();
    CHECK(alg->dim() == rs.size() + rs.rank());
    CHECK(alg->check_jacobi());
    std::int64_t max_n = 0;
    for (std::size_t a = 0; a < rs.size(); ++a)
      for (std::size_t b = 0; b < rs.size(); ++b) {
        if (b == a || b == rs.negative_of(a)) continue;
        auto n = alg->N(a, b);
        CHECK(n == -alg->N(b, a));
        if (is_root_sum(rs, a, b)) {
          CHECK(std::abs(n) == string_below(rs, a, b) + 1);
        } else {
          CHECK(n == 0);
        }
        max_n = std::max<std::int64_t>(max_n, std::abs(n));
      }
    if (f == 'A') CHECK(max_n == 1);
    if (f == 'B' || f == 'C') CHECK(max_n == 2);
    if (f == 'G') CHECK(max_n == 3);
  }
  auto a2 = algebra('A', 2);
  CHECK(std::abs(a2->N(0, 1)) == 1);
}

TEST_CASE("ad is a representation of the bracket") {
  // ad([x, y]) = ad(x) ad(y) - ad(y) ad(x) for basis vectors, an independent
  // form of the Jacobi identity.
  for (auto [f, r] : {std::pair{'B', 2}, {'G', 2}}) {
    auto alg = algebra(f, r);
    std::size_t n = alg->dim();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        auto coeff = alg->bracket(a, b);
        IntMatrix lhs(n);
        for (std::size_t c = 0; c < n; ++c)
          if (coeff[c] != 0)
            for (std::size_t k = 0; k < n * n; ++k) lhs.a[k] += coeff[c] * alg->ad(c).a[k];
        CHECK(lhs == alg->ad(a) * alg->ad(b) - alg->ad(b) * alg->ad(a));
      }
  }
}

TEST_CASE("root elements") {
  auto zz = RingSpec::integers();
  std::mt19937_64 rng(7);
  for (auto [f, r] : {std::pair{'A', 2}, {'B', 2}, {'G', 2}}) {
    auto g = group(f, r, zz);
    for (std::size_t a = 0; a < g->roots().size(); ++a) {
      CHECK(g->x(a, g->elem(0)).is_identity());
      CHECK((g->x(a, g->elem(1)) * g->x(a, g->elem(-1))).is_identity());
      for (int k = 0; k < 3; ++k) {
        auto s = g->elem(long(rng() % 41) - 20);
        auto t = g->elem(long(rng() % 41) - 20);
        CHECK(g->x(a, s) * g->x(a, t) == g->x(a, s + t));
      }
      // unipotent: (x - 1)^dim = 0
      auto m = g->x(a, g->elem(3));
      Matrix d = m;
      for (std::size_t i = 0; i < d.dim(); ++i) d(i, i) -= g->elem(1);
      CHECK(d.pow(g->dim()) == Matrix(zz, g->dim()));
    }
  }
  auto a2 = group('A', 2, zz);
  // x(a1, t) = 1 + t ad + t^2 ad^2 / 2 computed directly
  auto const& ad = a2->algebra().ad_root(0);
  auto ad2 = ad * ad;
  auto m = a2->x(0, a2->elem(5));
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      Integer e = (i == j ? 1 : 0) + 5 * ad(i, j) + 25 * ad2(i, j) / 2;
      CHECK(m(i, j) == a2->elem(e));
    }
}

TEST_CASE("torus elements") {
  auto z7 = RingSpec::modular(7);
  auto g = group('G', 2, z7);
  auto const& rs = g->roots();
  for (std::size_t a = 0; a < rs.size(); ++a) {
    CHECK(g->h(a, g->elem(1)).is_identity());
    CHECK(g->evaluate(g->h_word(a, g->elem(3))) == g->h(a, g->elem(3)));
    for (int t = 2; t <= 6; ++t) {
      auto te = g->elem(t);
      CHECK((g->h(a, te) * g->h(a, te.inverse())).is_identity());
      auto ht = g->h(a, te);
      auto hinv = g->h(a, te.inverse());
      for (std::size_t b = 0; b < rs.size(); ++b) {
        auto u = g->elem(t + 1);
        auto lhs = ht * g->x(b, u) * hinv;
        auto rhs = g->x(b, te.pow(rs.cartan_int(b, a)) * u);
        CHECK(lhs == rhs);
      }
    }
  }
  CHECK_THROWS_AS(g->h(0, g->elem(0)), NotAUnit);
  CHECK_THROWS_AS(group('A', 2, RingSpec::integers())->h(0, RingElement::from_int(RingSpec::integers(), 2)),
                  NotAUnit);

  // Z[1/2]: t = 2^k
  auto loc = RingSpec::localized(RingSpec::integers(), Coords{Integer(2)});
  auto b2 = group('B', 2, loc);
  auto two = localizing_element(loc);
  for (std::size_t a = 0; a < b2->roots().size(); ++a)
    for (long long k : {-2, 1, 3}) {
      auto t = two.pow(k);
      auto ht = b2->h(a, t);
      auto hinv = b2->h(a, t.inverse());
      for (std::size_t b = 0; b < b2->roots().size(); ++b) {
        auto u = RingElement::from_int(loc, 3);
        CHECK(ht * b2->x(b, u) * hinv == b2->x(b, t.pow(b2->roots().cartan_int(b, a)) * u));
      }
    }
}

TEST_CASE("derived commutator constants") {
  auto zz = RingSpec::integers();
  auto a2 = algebra('A', 2);
  auto t = derive_Cij(*a2, 0, 1);
  REQUIRE(t.terms.size() == 1);
  CHECK(t.terms[0].i == 1);
  CHECK(t.terms[0].j == 1);
  CHECK(std::abs(t.terms[0].c) == 1);
  CHECK(t.terms[0].c == a2->N(0, 1));

  // B2: simple roots a1 (long), a2 (short); a short alpha and a long beta
  // with alpha+beta, 2alpha+beta roots.
  auto b2 = algebra('B', 2);
  auto const& rs = b2->roots();
  auto tb = derive_Cij(*b2, rs.parse_root("a2"), rs.parse_root("a1"));
  REQUIRE(tb.terms.size() == 2);
  CHECK(tb.constant(1, 1).has_value());
  CHECK(tb.constant(2, 1).has_value());

  for (auto [f, r] : {std::pair{'A', 2}, {'B', 2}, {'G', 2}, {'A', 3}, {'B', 3}}) {
    CAPTURE(f);
    auto alg = algebra(f, r);
    auto g = std::make_shared<ChevalleyGroup const>(alg, RingSpec::modular(11));
    auto const& ro = alg->roots();
    std::mt19937_64 rng(1);
    for (std::size_t a = 0; a < ro.size(); ++a)
      for (std::size_t b = 0; b < ro.size(); ++b) {
        if (proportional(ro, a, b)) continue;
        auto tab = derive_Cij(*alg, a, b);
        CHECK((tab.tisj_fits || tab.sitj_fits));
        CHECK(tab.pairing == (tab.tisj_fits ? Pairing::TiSj : Pairing::SiTj));
        for (auto const& term : tab.terms) {
          CHECK(std::abs(term.c) >= 1);
          CHECK(std::abs(term.c) <= 3);
          RootVec v(ro.rank());
          for (std::size_t k = 0; k < v.size(); ++k) v[k] = term.i * ro.root(a)[k] + term.j * ro.root(b)[k];
          CHECK(ro.index_of(v) == term.root);
        }
        // Terms cover exactly the positive combinations that are roots.
        CHECK(tab.terms.size() == ro.positive_combinations(a, b).size());
        if (tab.terms.size() == 1) CHECK(tab.tisj_fits);
        if (tab.terms.size() == 1) CHECK(tab.terms[0].c == alg->N(a, b));
        if (tab.terms.empty()) CHECK(g->root_commutator(a, g->elem(3), b, g->elem(5)).is_identity());
        for (int k = 0; k < 2; ++k) {
          auto s = g->elem(long(rng() % 11));
          auto tt = g->elem(long(rng() % 11));
          CHECK(verify_commutator(*g, tab, s, tt).pass);
        }
      }
  }
}

TEST_CASE("commutator over an order") {
  // Z[xi], xi^2 = 2: monomials in non-integer parameters
  auto ring = RingSpec::order(2, {1, 0, 0, 1, 0, 1, 2, 0});
  auto alg = algebra('G', 2);
  auto g = std::make_shared<ChevalleyGroup const>(alg, ring);
  CommutatorTables tables(alg);
  auto const& rs = alg->roots();
  auto s = RingElement(ring, Coords{Integer(1), Integer(-2)});
  auto t = RingElement(ring, Coords{Integer(3), Integer(1)});
  for (std::size_t a = 0; a < rs.size(); ++a)
    for (std::size_t b = 0; b < rs.size(); ++b) {
      if (proportional(rs, a, b)) continue;
      auto const& tab = tables.get(a, b);
      auto check = verify_commutator(*g, tab, s, t);
      CHECK(check.pass);
      CHECK(g->evaluate(commutator_rhs_word(tab, s, t)) == check.rhs);
    }
}

TEST_CASE("words") {
  auto zz = RingSpec::integers();
  auto g = group('A', 2, zz);
  auto const& rs = g->roots();
  CHECK(g->evaluate(Word{}).is_identity());
  auto w = commutator(root_word(0, g->elem(2)), root_word(0, g->elem(3)));
  CHECK(w.letter_count() == 4);
  CHECK(g->evaluate(w).is_identity());
  auto x = root_word(0, g->elem(2)) * root_word(1, g->elem(-1));
  CHECK((g->evaluate(x) * g->evaluate(x.inverse())).is_identity());
  auto c = conjugate(x, root_word(2, g->elem(4)));
  CHECK(c.letter_count() == 2 * 2 + 1);
  CHECK(g->evaluate(c) == g->evaluate(x) * g->x(2, g->elem(4)) * g->evaluate(x.inverse()));

  auto text = format_word(c, rs);
  CHECK(text == "conj(x[a1](2) x[a2](-1); x[a1+a2](4))");
  auto back = parse_word(text, rs, zz);
  CHECK(format_word(back, rs) == text);
  CHECK(g->evaluate(back) == g->evaluate(c));

  auto hw = parse_word("h[-a1](-1) x[a1+a2](0)", rs, zz);
  CHECK(hw.letter_count() == 2);
  CHECK(format_word(hw, rs) == "h[-a1](-1) x[a1+a2](0)");
  CHECK(parse_word("", rs, zz).empty());
  CHECK_THROWS_AS(parse_word("x[a1](", rs, zz), ParseError);
  CHECK_THROWS_AS(parse_word("x[a3](1)", rs, zz), ParseError);
  CHECK_THROWS_AS(parse_word("y[a1](1)", rs, zz), ParseError);
  CHECK_THROWS_AS(parse_word("h[a1](2)", rs, zz), ParseError);
  CHECK_THROWS_AS(parse_word("conj(x[a1](1) x[a2](1))", rs, zz), ParseError);

  auto z5 = RingSpec::modular(5);
  CHECK(format_element(parse_element("-1", z5)) == "4");
  auto loc = RingSpec::localized(RingSpec::integers(), Coords{Integer(2)});
  auto e = parse_element("3/u^2", loc);
  CHECK(e * RingElement::from_int(loc, 4) == RingElement::from_int(loc, 3));
  CHECK(format_element(e) == "3/u^2");
}

TEST_CASE("matrix hash") {
  auto g = group('A', 2, RingSpec::integers());
  auto a = g->x(0, g->elem(1));
  CHECK(matrix_hash(a) == matrix_hash(g->x(0, g->elem(1))));
  CHECK(matrix_hash(a) != matrix_hash(g->x(0, g->elem(2))));
  CHECK(matrix_hash(a).size() == 16);
}
