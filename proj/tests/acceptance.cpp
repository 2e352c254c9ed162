// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>
#include <string>

#include "chevalley/commutator.hpp"
#include "chevalley/norm_lab.hpp"
#include "chevalley/reports.hpp"
#include "chevalley/witness.hpp"

using namespace chev;

namespace {

std::shared_ptr<ChevalleyAlgebra const> algebra(std::string const& sel) {
  return std::make_shared<ChevalleyAlgebra const>(RootSystem::parse(sel));
}

std::shared_ptr<ChevalleyGroup const> group(std::string const& sel, RingPtr ring) {
  return std::make_shared<ChevalleyGroup const>(algebra(sel), std::move(ring));
}

// GMP has no long long constructor.
Integer big(long long v) { return Integer(static_cast<long>(v)); }

RingPtr zxi() { return RingSpec::order(2, {1, 0, 0, 1, 0, 1, 2, 0}); }

// Commutator formula over Z, 100 seeded (s, t) with |s|, |t| <= 9.
std::string commutator_suite() {
  auto zz = RingSpec::integers();
  Rng rng(1);
  std::size_t checks = 0;
  for (auto const* sel : {"A2", "B2", "G2", "A3", "B3"}) {
    auto g = group(sel, zz);
    auto const& rs = g->roots();
    for (std::size_t a = 0; a < rs.size(); ++a)
      for (std::size_t b = 0; b < rs.size(); ++b) {
        if (proportional(rs, a, b)) continue;
        auto tab = derive_Cij(g->algebra(), a, b);
        for (auto const& term : tab.terms)
          if (term.c == 0 || term.c < -3 || term.c > 3)
            throw std::runtime_error(std::string(sel) + ": constant out of range");
        for (int k = 0; k < 100; ++k) {
          auto s = g->elem(big(rng.range(-9, 9)));
          auto t = g->elem(big(rng.range(-9, 9)));
          if (!verify_commutator(*g, tab, s, t).pass)
            throw std::runtime_error(std::string(sel) + ": commutator mismatch at " + rs.root_name(a) + ", " +
                                     rs.root_name(b));
          ++checks;
        }
      }
  }
  return std::to_string(checks) + " identities";
}

void check_torus(ChevalleyGroup const& g, RingElement const& t, RingElement const& u, std::size_t& checks) {
  auto const& rs = g.roots();
  for (std::size_t a = 0; a < rs.size(); ++a) {
    auto ht = g.h(a, t);
    auto hinv = g.h(a, t.inverse());
    for (std::size_t b = 0; b < rs.size(); ++b) {
      if (ht * g.x(b, u) * hinv != g.x(b, t.pow(rs.cartan_int(b, a)) * u))
        throw std::runtime_error("torus action fails at " + rs.root_name(a) + ", " + rs.root_name(b));
      ++checks;
    }
  }
}

std::string torus_suite() {
  Rng rng(2);
  std::size_t checks = 0;
  auto z7 = RingSpec::modular(7);
  auto loc = RingSpec::localized(RingSpec::integers(), Coords{Integer(2)});
  auto two = localizing_element(loc);
  for (auto const* sel : {"A2", "B2", "G2"}) {
    auto g7 = group(sel, z7);
    for (int t = 1; t <= 6; ++t) check_torus(*g7, g7->elem(t), g7->elem(big(rng.range(0, 6))), checks);
    auto gl = group(sel, loc);
    for (int k : {1, 2, -1, -2}) check_torus(*gl, two.pow(k), gl->elem(big(rng.range(-50, 50))), checks);
  }
  return std::to_string(checks) + " identities";
}

std::string witness_suite() {
  auto ring = zxi();
  std::size_t built = 0;
  struct Case {
    char const* sel;
    bool alpha_long;
    WitnessCase wc;
  };
  for (auto c : {Case{"A2", true, WitnessCase::A2OrLong}, Case{"G2", true, WitnessCase::A2OrLong},
                 Case{"B2", false, WitnessCase::B2Short}, Case{"G2", false, WitnessCase::G2Short}}) {
    auto g = group(c.sel, ring);
    WitnessEngine eng(g);
    auto const& rs = g->roots();
    std::size_t alpha = 0;
    while (rs.is_long(alpha) != c.alpha_long) ++alpha;
    auto emb = rs.find_witness_pair(alpha);
    if (emb.witness_case != c.wc) throw std::runtime_error("unexpected case for " + rs.root_name(alpha));
    for (std::size_t l = 0; l < ring->basis_size(); ++l) {
      std::set<std::size_t> counts;
      for (int n : {1, 10, 100, 1000}) {
        auto w = eng.witness(emb, 2, RingElement::basis(ring, l), n);
        // target by additivity: x_alpha(p xi)^{C p n} = x_alpha(C p n p xi)
        if (g->evaluate(w.word) != g->x(alpha, w.base.scaled(w.exponent)))
          throw std::runtime_error(to_string(c.wc) + " witness does not evaluate to its target");
        counts.insert(w.word.letter_count());
        ++built;
      }
      if (counts.size() != 1) throw std::runtime_error(to_string(c.wc) + " letter count varies with n");
    }
  }
  return std::to_string(built) + " witnesses";
}

std::string denominator_suite() {
  auto loc = RingSpec::localized(RingSpec::integers(), Coords{Integer(2)});
  auto u = localizing_element(loc);
  Rng rng(4);
  std::size_t checks = 0;
  for (auto const* sel : {"A2", "G2"}) {
    auto g = group(sel, loc);
    for (int i = 0; i < 20; ++i) {
      auto b = RingElement::from_int(loc, big(rng.range(-1000, 1000)));
      std::size_t alpha = static_cast<std::size_t>(rng.range(0, static_cast<long long>(g->roots().size()) - 1));
      for (int k = 0; k <= 6; ++k) {
        auto lhs = g->h(alpha, u.pow(-k)) * g->x(alpha, u.pow(k) * b) * g->h(alpha, u.pow(k));
        if (lhs != g->x(alpha, u.pow(-k) * b)) throw std::runtime_error("conjugation identity fails");
        auto d = clear_denominators_conjugation(*g, alpha, u.pow(-k) * b);
        if (g->evaluate(d.word) != g->x(alpha, u.pow(-k) * b)) throw std::runtime_error("witness fails");
        ++checks;
      }
    }
  }
  return std::to_string(checks) + " identities";
}

std::string coset_suite() {
  auto zz = RingSpec::integers();
  auto g = group("A2", zz);
  CongruenceSubgroup h(g, 2);
  CosetTable table(h);
  Rng rng(5);
  std::size_t letters = 0;
  for (int trial = 0; trial < 50; ++trial) {
    // w followed by its inverse with parameters shifted by multiples of q
    Word fwd, back;
    auto len = rng.range(1, 10);
    for (long long i = 0; i < len; ++i) {
      auto root = static_cast<std::size_t>(rng.range(0, 5));
      auto p = rng.range(-20, 20);
      auto shift = rng.range(-3, 3);
      fwd.push(RootLetter{root, g->elem(big(p))});
      back.letters.insert(back.letters.begin(), RootLetter{root, g->elem(big(-p + 2 * shift))});
    }
    auto input = fwd * back;
    auto rw = coset_rewrite(input, h, table);
    if (g->evaluate(rw.conjugated_part) * g->evaluate(rw.tail) != g->evaluate(input))
      throw std::runtime_error("reconstruction fails");
    for (auto const& l : rw.conjugated_part.letters)
      if (!h.contains(g->evaluate(l))) throw std::runtime_error("conjugated letter outside H");
    for (auto const& l : rw.tail.letters) {
      auto const* r = std::get_if<RootLetter>(&l);
      if (!r || !table.in_table(*r)) throw std::runtime_error("tail letter outside the coset table");
    }
    letters += input.letter_count();
  }
  return "50 products, " + std::to_string(letters) + " letters";
}

std::unique_ptr<FiniteQuotient> full(std::string const& sel, std::uint32_t m) {
  auto alg = algebra(sel);
  ChevalleyGroup g(alg, RingSpec::modular(m));
  return enumerate_quotient(alg, m, root_generators(g));
}

std::string norm_suite() {
  std::ostringstream out;
  for (auto [sel, order] : {std::pair{"A1", 6u}, std::pair{"A2", 168u}}) {
    auto q = full(sel, 2);
    if (q->order() != order) throw std::runtime_error(std::string(sel) + " has the wrong order");
    auto s = conj_closure(*q, {q->index_of(root_word(0, q->group().elem(1)))});
    auto t = word_norm_bfs(*q, s);
    auto rep = check_axioms(*q, t);
    if (!rep.all()) throw std::runtime_error("axiom violated: " + rep.first_violation);
    if (order == 6) {
      // naive oracle: balls by repeated set multiplication
      std::set<FiniteQuotient::Index> ball{0};
      for (int k = 1; ball.size() < q->order(); ++k) {
        std::set<FiniteQuotient::Index> next = ball;
        for (auto b : ball)
          for (auto x : t.generating_set) next.insert(q->multiply(b, x));
        for (auto x : next)
          if (!ball.count(x) && t.norm[x] != k) throw std::runtime_error("BFS disagrees with the naive oracle");
        ball = std::move(next);
      }
    }
  }
  // pinned diameters of the transvection-class norm on SL3(Z/m)
  std::array<int, 4> const pinned{3, 3, 4, 3};
  for (std::uint32_t m = 2; m <= 5; ++m) {
    auto row = diameter_row("A2", m, "a1", kDefaultMemoryCap, false);
    if (row.diameter != pinned[m - 2])
      throw std::runtime_error("diameter for m = " + std::to_string(m) + " is " + std::to_string(row.diameter));
    out << (m > 2 ? " " : "") << "m=" << m << ":" << row.diameter;
  }
  return out.str();
}

std::string run(std::string const& cmd) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("cannot run " + cmd);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  if (status != 0) throw std::runtime_error("command failed: " + cmd);
  return out;
}

std::string determinism_suite() {
  auto dir = std::filesystem::temp_directory_path() / "chev_acceptance";
  std::filesystem::create_directories(dir);
  auto ring = dir / "zxi.json";
  std::ofstream(ring) << R"({"kind": "order", "rank": 2, "mul_table": [1, 0, 0, 1, 0, 1, 2, 0]})";
  std::string cli = CHEV_CLI_PATH;
  std::vector<std::string> cmds{
      cli + " verify --system B2 --trials 20 --seed 17",
      cli + " witness --system G2 --case G2-short --ring " + ring.string() + " --n 1,10,100 --seed 17",
      cli + " diameter --system A2 --mod 2,3 --seed 17",
  };
  for (auto const& c : cmds) {
    auto a = run(c);
    auto b = run(c);
    if (a.empty() || a != b) throw std::runtime_error("output differs between runs: " + c);
  }
  return std::to_string(cmds.size()) + " commands byte-identical";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    char const* name;
    std::function<std::string()> body;
  };
  std::vector<Criterion> criteria{
      {1, "commutator formula", commutator_suite},
      {2, "torus action", torus_suite},
      {3, "bounded power witnesses", witness_suite},
      {4, "denominator clearing", denominator_suite},
      {5, "coset rewrite round trip", coset_suite},
      {6, "norm axioms and diameters", norm_suite},
      {7, "determinism", determinism_suite},
  };
  bool all = true;
  for (auto const& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = true;
    try {
      detail = c.body();
    } catch (std::exception const& e) {
      pass = false;
      detail = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %d %s: %s (%s, %.1fs)\n", c.id, c.name, pass ? "PASS" : "FAIL", detail.c_str(), secs);
    std::fflush(stdout);
    all &= pass;
  }
  return all ? 0 : 1;
}
