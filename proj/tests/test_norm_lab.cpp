#include <doctest.h>

#include <algorithm>
#include <array>
#include <set>

#include "chevalley/norm_lab.hpp"
#include "chevalley/reports.hpp"

using namespace chev;

namespace {

using Index = FiniteQuotient::Index;

std::shared_ptr<ChevalleyAlgebra const> algebra(char f, int r) {
  return std::make_shared<ChevalleyAlgebra const>(RootSystem::build(f, r));
}

std::unique_ptr<FiniteQuotient> full(char f, int r, std::uint32_t m) {
  auto alg = algebra(f, r);
  ChevalleyGroup g(alg, RingSpec::modular(m));
  return enumerate_quotient(alg, m, root_generators(g));
}

std::vector<Index> root_class(FiniteQuotient const& q, std::size_t root = 0) {
  return conj_closure(q, {q.index_of(root_word(root, q.group().elem(1)))});
}

// Distances by repeated set multiplication B_{k+1} = B_k S, no BFS queue.
std::vector<int> naive_distances(FiniteQuotient const& q, std::vector<Index> s) {
  for (auto x : std::vector<Index>(s)) s.push_back(q.inverse(x));
  std::vector<int> dist(q.order(), -1);
  std::set<Index> ball{FiniteQuotient::identity()};
  dist[0] = 0;
  for (int k = 1; ball.size() < q.order(); ++k) {
    std::set<Index> next = ball;
    for (auto b : ball)
      for (auto x : s) next.insert(q.multiply(b, x));
    if (next.size() == ball.size()) break;
    for (auto x : next)
      if (dist[x] < 0) dist[x] = k;
    ball = std::move(next);
  }
  return dist;
}

// All 3x3 matrices over F2 with determinant 1, and the transvections among
// them (rank(g - 1) = 1 with (g - 1)^2 = 0).
std::pair<int, int> sl3f2_counts() {
  int order = 0, transvections = 0;
  for (int bits = 0; bits < 512; ++bits) {
    std::array<std::array<int, 3>, 3> a{};
    for (int i = 0; i < 9; ++i) a[i / 3][i % 3] = (bits >> i) & 1;
    int det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
              a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    if ((det & 1) == 0) continue;
    ++order;
    std::array<std::array<int, 3>, 3> n{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) n[i][j] = (a[i][j] + (i == j)) & 1;
    // rank 1 over F2: nonzero and every 2x2 minor vanishes
    bool nonzero = false, rank1 = true;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) nonzero |= n[i][j] != 0;
    for (int i = 0; i < 3; ++i)
      for (int k = i + 1; k < 3; ++k)
        for (int j = 0; j < 3; ++j)
          for (int l = j + 1; l < 3; ++l) rank1 &= ((n[i][j] * n[k][l] - n[i][l] * n[k][j]) & 1) == 0;
    bool square_zero = true;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        int s = 0;
        for (int k = 0; k < 3; ++k) s += n[i][k] * n[k][j];
        square_zero &= (s & 1) == 0;
      }
    transvections += nonzero && rank1 && square_zero;
  }
  return {order, transvections};
}

}  // namespace

TEST_CASE("enumeration") {
  auto sl2 = full('A', 1, 2);
  CHECK(sl2->order() == 6);
  auto sl3 = full('A', 2, 2);
  auto [order, transvections] = sl3f2_counts();
  CHECK(order == 168);
  CHECK(transvections == 21);
  CHECK(sl3->order() == static_cast<std::size_t>(order));
  CHECK(root_class(*sl3).size() == static_cast<std::size_t>(transvections));
  CHECK(full('A', 2, 3)->order() == 5616);
  CHECK(full('B', 2, 2)->order() == 720);

  // group laws on the enumerated elements
  auto const& q = *sl3;
  for (Index a = 0; a < q.order(); a += 7) {
    CHECK(q.multiply(a, q.inverse(a)) == FiniteQuotient::identity());
    CHECK(q.multiply(FiniteQuotient::identity(), a) == a);
    for (Index b = 0; b < q.order(); b += 11) {
      CHECK(q.matrix(q.multiply(a, b)) == q.matrix(a) * q.matrix(b));
      CHECK(q.matrix(q.conjugate(a, b)) == q.matrix(b) * q.matrix(a) * q.matrix(q.inverse(b)));
    }
    CHECK(q.find(q.matrix(a)) == a);
  }
  std::size_t total = 0;
  for (auto s : q.class_sizes()) total += s;
  CHECK(total == q.order());
  CHECK(q.class_count() == 6);  // SL3(F2) = GL3(F2) has six classes

  auto alg = algebra('A', 2);
  ChevalleyGroup g3(alg, RingSpec::modular(3));
  CHECK_THROWS_AS(enumerate_quotient(alg, 3, root_generators(g3), 100), MemoryBudgetExceeded);
}

TEST_CASE("conjugation closure") {
  auto sl3 = full('A', 2, 2);
  auto id = conj_closure(*sl3, {FiniteQuotient::identity()});
  CHECK(id == std::vector<Index>{FiniteQuotient::identity()});

  // In the cyclic group generated by one root element every element is central.
  auto alg = algebra('A', 2);
  ChevalleyGroup g(alg, RingSpec::modular(4));
  auto cyc = enumerate_quotient(alg, 4, {root_word(0, g.elem(1))});
  CHECK(cyc->order() == 4);
  auto s = cyc->index_of(root_word(0, g.elem(1)));
  auto cl = conj_closure(*cyc, {s});
  std::vector<Index> expect{s, cyc->inverse(s)};
  std::sort(expect.begin(), expect.end());
  CHECK(cl == expect);

  // closure is closed under conjugation and inversion
  auto c3 = root_class(*sl3);
  std::set<Index> set(c3.begin(), c3.end());
  for (auto x : c3) {
    CHECK(set.count(sl3->inverse(x)) == 1);
    for (Index y = 0; y < sl3->order(); ++y) CHECK(set.count(sl3->conjugate(x, y)) == 1);
  }
}

TEST_CASE("word norms against the naive oracle") {
  for (auto [f, r, m] : {std::tuple{'A', 1, 2u}, {'A', 2, 2u}, {'A', 2, 3u}, {'A', 1, 5u}}) {
    CAPTURE(m);
    auto q = full(f, r, m);
    auto s = root_class(*q);
    auto t = word_norm_bfs(*q, s);
    CHECK(t.norm[0] == 0);
    for (auto x : s) CHECK(t.norm[x] == 1);
    auto oracle = naive_distances(*q, s);
    CHECK(t.norm == oracle);

    // plain BFS path: root letters alone are not a union of classes
    std::vector<Index> gens;
    for (auto const& w : root_generators(q->group())) gens.push_back(q->index_of(w));
    auto tg = word_norm_bfs(*q, gens);
    CHECK(tg.norm == naive_distances(*q, gens));
    // monotonicity: the class contains x_a(1), enlarging S lowers norms
    std::vector<Index> both = gens;
    both.insert(both.end(), s.begin(), s.end());
    auto tb = word_norm_bfs(*q, both);
    for (std::size_t i = 0; i < q->order(); ++i) {
      CHECK(tb.norm[i] <= tg.norm[i]);
      CHECK(tb.norm[i] <= t.norm[i]);
    }
  }
}

TEST_CASE("norm axioms") {
  for (auto [f, r] : {std::pair{'A', 1}, {'A', 2}}) {
    auto q = full(f, r, 2);
    auto t = word_norm_bfs(*q, root_class(*q));
    auto rep = check_axioms(*q, t);
    CHECK(rep.all());
    CHECK(rep.pairs == q->order() * q->order());
    CHECK(rep.first_violation.empty());
  }
  // a norm that is not conjugation invariant is caught
  auto q = full('A', 2, 2);
  std::vector<Index> gens;
  for (auto const& w : root_generators(q->group())) gens.push_back(q->index_of(w));
  auto rep = check_axioms(*q, word_norm_bfs(*q, gens));
  CHECK(rep.positivity);
  CHECK(rep.symmetry);
  CHECK(rep.triangle);
  CHECK_FALSE(rep.conjugation);
  CHECK_FALSE(rep.first_violation.empty());
}

TEST_CASE("diameters") {
  // trivial group
  auto alg = algebra('A', 2);
  auto trivial = enumerate_quotient(alg, 2, {});
  CHECK(trivial->order() == 1);
  CHECK(diameter(word_norm_bfs(*trivial, {})) == 0);
  // Z/2 generated by its nontrivial element
  ChevalleyGroup g(alg, RingSpec::modular(2));
  auto z2 = enumerate_quotient(alg, 2, {root_word(0, g.elem(1))});
  CHECK(z2->order() == 2);
  CHECK(diameter(word_norm_bfs(*z2, {1})) == 1);

  auto sl3 = full('A', 2, 2);
  CHECK_THROWS_AS(word_norm_bfs(*sl3, {sl3->index_of(root_word(0, g.elem(1)))}), NotGenerating);
  std::vector<Index> all;
  for (Index i = 1; i < sl3->order(); ++i) all.push_back(i);
  CHECK(diameter(word_norm_bfs(*sl3, all)) == 1);

  // pinned values of the transvection-class norm on SL3(Z/m)
  struct Pin {
    std::uint32_t m;
    std::size_t order;
    std::size_t closure;
    int diam;
  };
  for (auto p : {Pin{2, 168, 21, 3}, Pin{3, 5616, 104, 3}, Pin{4, 43008, 336, 4}}) {
    auto row = diameter_row("A2", p.m, "a1", kDefaultMemoryCap, false);
    CHECK(row.group_order == p.order);
    CHECK(row.closure_size == p.closure);
    CHECK(row.diameter == p.diam);
    CHECK(row.generating_class == "x[a1](1)");
    CHECK_FALSE(row.seconds.has_value());
  }
  auto a1 = diameter_row("A1", 2, "a1", kDefaultMemoryCap, false);
  CHECK(a1.group_order == 6);
  CHECK(a1.closure_size == 3);
  CHECK(a1.diameter == 2);
  CHECK(diameter_csv({a1}) == "m,group_order,generating_class,closure_size,diameter,seconds\n2,6,x[a1](1),3,2,NA\n");
}
