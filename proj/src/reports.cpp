#include "chevalley/reports.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>

#include "chevalley/commutator.hpp"
#include "chevalley/natural_rep.hpp"
#include "chevalley/witness.hpp"
#include "chevalley/word_text.hpp"

namespace chev {

namespace {

std::shared_ptr<ChevalleyAlgebra const> make_algebra(std::string const& system) {
  return std::make_shared<ChevalleyAlgebra const>(RootSystem::parse(system));
}

std::string int_str(Integer const& v) { return v.get_str(); }

Json term_json(RootSystem const& rs, CommutatorTerm const& t) {
  return Json{{"i", t.i}, {"j", t.j}, {"root", rs.root_name(t.root)}, {"c", t.c}};
}

}  // namespace

RingElement random_element(Rng& rng, RingPtr const& ring, long long bound, unsigned max_denom) {
  Coords c;
  for (std::size_t l = 0; l < ring->basis_size(); ++l) c.emplace_back(static_cast<long>(rng.range(-bound, bound)));
  unsigned k = 0;
  if (ring->is_localized() && max_denom > 0) k = static_cast<unsigned>(rng.range(0, max_denom));
  return RingElement(ring, std::move(c), k);
}

std::vector<RingElement> sample_units(RingPtr const& ring, Rng& rng, std::size_t trials) {
  std::vector<RingElement> units;
  auto one = RingElement::one(ring);
  switch (ring->kind()) {
    case RingKind::Modular: {
      auto const& m = ring->modulus();
      if (m <= 64) {
        for (long v = 1; v < m.get_si(); ++v) {
          auto e = RingElement::from_int(ring, v);
          if (e.try_inverse()) units.push_back(e);
        }
      } else {
        while (units.size() < trials) {
          auto e = RingElement::from_int(ring, Integer(static_cast<long>(rng.range(1, 1'000'000))));
          if (e.try_inverse()) units.push_back(e);
        }
      }
      break;
    }
    case RingKind::Localized: {
      auto u = localizing_element(ring);
      for (long long k : {1, 2, -1, -2}) {
        units.push_back(u.pow(k));
        units.push_back(-u.pow(k));
      }
      units.push_back(-one);
      break;
    }
    default:
      units.push_back(one);
      units.push_back(-one);
  }
  return units;
}

VerifyReport verify_report(std::string const& system, RingPtr const& ring, std::size_t trials,
                           std::uint64_t seed) {
  Json j;
  j["command"] = "verify";
  j["system"] = system;
  j["ring"] = ring->describe();
  j["rng"] = "mt19937_64";
  j["seed"] = seed;
  j["trials"] = trials;
  if (trials == 0) {
    j["checks"] = Json::array();
    j["pass"] = true;
    return {j, true};
  }

  auto alg = make_algebra(system);
  auto const& rs = alg->roots();
  ChevalleyGroup group(alg, ring);
  Rng rng(seed);
  bool pass = true;

  std::int64_t max_n = 0;
  for (std::size_t a = 0; a < rs.size(); ++a)
    for (std::size_t b = 0; b < rs.size(); ++b) max_n = std::max(max_n, std::abs(alg->N(a, b)));
  bool jacobi = alg->check_jacobi();
  pass &= jacobi;
  j["structure"] = {{"dim", alg->dim()}, {"roots", rs.size()}, {"jacobi", jacobi}, {"max_abs_N", max_n}};

  // Constants and the commutator formula.
  Json constants = Json::array();
  std::size_t comm_checks = 0, comm_fail = 0, tisj_pairs = 0, sitj_only_pairs = 0;
  bool in_range = true;
  Json comm_examples = Json::array();
  for (std::size_t a = 0; a < rs.size(); ++a)
    for (std::size_t b = 0; b < rs.size(); ++b) {
      if (proportional(rs, a, b)) continue;
      auto table = derive_Cij(*alg, a, b);
      if (!table.terms.empty()) {
        Json terms = Json::array();
        for (auto const& t : table.terms) {
          terms.push_back(term_json(rs, t));
          if (t.c == 0 || std::abs(t.c) > 3) in_range = false;
        }
        if (table.tisj_fits) ++tisj_pairs; else ++sitj_only_pairs;
        constants.push_back({{"alpha", rs.root_name(a)},
                             {"beta", rs.root_name(b)},
                             {"pairing", to_string(table.pairing)},
                             {"tisj_fits", table.tisj_fits},
                             {"sitj_fits", table.sitj_fits},
                             {"terms", terms}});
      }
      for (std::size_t k = 0; k < trials; ++k) {
        auto s = random_element(rng, ring, 9, 2);
        auto t = random_element(rng, ring, 9, 2);
        auto check = verify_commutator(group, table, s, t);
        ++comm_checks;
        if (!check.pass) {
          ++comm_fail;
          if (comm_examples.size() < 5) {
            comm_examples.push_back({{"alpha", rs.root_name(a)},
                                     {"beta", rs.root_name(b)},
                                     {"s", s.to_string()},
                                     {"t", t.to_string()},
                                     {"lhs_hash", matrix_hash(check.lhs)},
                                     {"rhs_hash", matrix_hash(check.rhs)}});
          }
        }
      }
    }
  pass &= in_range && comm_fail == 0;
  j["constants"] = {{"pairs_with_terms", constants.size()},
                    {"tisj_pairs", tisj_pairs},
                    {"sitj_only_pairs", sitj_only_pairs},
                    {"all_in_range", in_range},
                    {"tables", constants}};
  j["commutator"] = {{"checks", comm_checks}, {"failures", comm_fail}, {"pass", comm_fail == 0},
                     {"counterexamples", comm_examples}};

  // Additivity x(a, s) x(a, t) = x(a, s + t).
  std::size_t add_checks = 0, add_fail = 0;
  Json add_examples = Json::array();
  for (std::size_t a = 0; a < rs.size(); ++a)
    for (std::size_t k = 0; k < trials; ++k) {
      auto s = random_element(rng, ring, 9, 2);
      auto t = random_element(rng, ring, 9, 2);
      ++add_checks;
      if (group.x(a, s) * group.x(a, t) != group.x(a, s + t)) {
        ++add_fail;
        if (add_examples.size() < 5)
          add_examples.push_back({{"alpha", rs.root_name(a)}, {"s", s.to_string()}, {"t", t.to_string()}});
      }
    }
  pass &= add_fail == 0;
  j["additivity"] = {{"checks", add_checks}, {"failures", add_fail}, {"pass", add_fail == 0},
                     {"counterexamples", add_examples}};

  // Torus action h_a(t) x_b(u) h_a(t)^{-1} = x_b(t^<b,a> u).
  auto units = sample_units(ring, rng, trials);
  std::size_t tor_checks = 0, tor_fail = 0;
  Json tor_examples = Json::array();
  for (std::size_t a = 0; a < rs.size(); ++a)
    for (auto const& t : units) {
      Matrix h = group.h(a, t);
      Matrix h_inv = group.h(a, t.inverse());
      for (std::size_t b = 0; b < rs.size(); ++b) {
        auto u = random_element(rng, ring, 9, 2);
        auto lhs = h * group.x(b, u) * h_inv;
        auto rhs = group.x(b, t.pow(rs.cartan_int(b, a)) * u);
        ++tor_checks;
        if (lhs != rhs) {
          ++tor_fail;
          if (tor_examples.size() < 5) {
            tor_examples.push_back({{"alpha", rs.root_name(a)},
                                    {"beta", rs.root_name(b)},
                                    {"t", t.to_string()},
                                    {"u", u.to_string()}});
          }
        }
      }
    }
  pass &= tor_fail == 0;
  Json unit_text = Json::array();
  for (auto const& t : units) unit_text.push_back(t.to_string());
  j["torus"] = {{"units", unit_text}, {"checks", tor_checks}, {"failures", tor_fail}, {"pass", tor_fail == 0},
                {"counterexamples", tor_examples}};
  j["pass"] = pass;
  return {j, pass};
}

// ---------------------------------------------------------------------------

VerifyReport witness_report(WitnessRequest const& req) {
  auto alg = make_algebra(req.system);
  auto const& rs = alg->roots();
  auto group = std::make_shared<ChevalleyGroup const>(alg, req.ring);
  WitnessEngine engine(group);

  std::optional<WitnessCase> wanted;
  if (req.case_label) {
    wanted = parse_witness_case(*req.case_label);
    if (!wanted) throw std::invalid_argument("unknown witness case '" + *req.case_label + "'");
  }
  std::optional<Rank2Embedding> emb;
  if (req.root) {
    emb = rs.find_witness_pair(rs.parse_root(*req.root));
    if (wanted && emb->witness_case != *wanted) {
      throw CaseMismatch("root " + *req.root + " of " + req.system + " is in case " +
                         to_string(emb->witness_case) + ", not " + to_string(*wanted));
    }
  } else {
    for (std::size_t a = 0; a < rs.size() && !emb; ++a) {
      auto e = rs.find_witness_pair(a);
      if (!wanted || e.witness_case == *wanted) emb = e;
    }
    if (!emb) throw CaseMismatch(req.system + " has no root in case " + to_string(*wanted));
  }
  if (req.xi >= req.ring->basis_size()) throw std::invalid_argument("basis index out of range");
  auto xi = RingElement::basis(req.ring, req.xi);

  Json j;
  j["command"] = "witness";
  j["system"] = req.system;
  j["ring"] = req.ring->describe();
  j["case"] = to_string(emb->witness_case);
  j["root"] = rs.root_name(emb->alpha);
  j["beta"] = rs.root_name(emb->beta);
  j["gamma"] = rs.root_name(emb->gamma);
  j["C"] = int_str(engine.pair_constant(*emb));
  j["p"] = int_str(req.p);
  j["xi"] = xi.to_string();
  Json rows = Json::array();
  bool pass = true;
  std::optional<std::size_t> first_len;
  bool equal_lengths = true;
  for (auto const& n : req.n_grid) {
    Json row;
    row["case"] = to_string(emb->witness_case);
    row["n"] = int_str(n);
    try {
      auto w = engine.witness(*emb, req.p, xi, n);
      auto len = w.word.letter_count();
      if (!first_len) first_len = len;
      equal_lengths &= len == *first_len;
      row["letters"] = len;
      row["length_bound"] = w.length_bound;
      row["verified"] = true;
      row["target_hash"] = w.target_hash;
      row["word"] = format_word(w.word, rs);
    } catch (WitnessFailure const& e) {
      row["verified"] = false;
      row["error"] = e.what();
      pass = false;
    }
    rows.push_back(row);
  }
  pass &= equal_lengths;
  j["witnesses"] = rows;
  j["lengths_equal"] = equal_lengths;
  j["pass"] = pass;
  return {j, pass};
}

VerifyReport element_witness_report(std::string const& system, RingPtr const& ring, std::string const& root,
                                    std::string const& elem, Integer const& level) {
  auto alg = make_algebra(system);
  auto const& rs = alg->roots();
  auto group = std::make_shared<ChevalleyGroup const>(alg, ring);
  auto alpha = rs.parse_root(root);
  auto a = parse_element(elem, ring);

  Json j;
  j["command"] = "witness";
  j["system"] = system;
  j["ring"] = ring->describe();
  j["root"] = rs.root_name(alpha);
  j["element"] = a.to_string();
  Word word;
  if (ring->is_localized()) {
    auto w = clear_denominators_conjugation(*group, alpha, a);
    j["construction"] = "denominator-clearing conjugation";
    j["k"] = w.k;
    j["b"] = w.b.to_string();
    j["conjugator"] = format_word(w.conjugator, rs);
    j["core"] = format_word(w.core, rs);
    word = w.word;
  } else {
    WitnessEngine engine(group);
    word = engine.witness_root_element(alpha, a, level);
    j["construction"] = "root element";
    j["level"] = int_str(level);
  }
  j["letters"] = word.letter_count();
  j["verified"] = true;
  j["target_hash"] = matrix_hash(group->x(alpha, a));
  j["word"] = format_word(word, rs);
  j["pass"] = true;
  return {j, true};
}

VerifyReport rewrite_report(std::string const& system, RingPtr const& ring, Integer const& level,
                            std::string const& word_text) {
  auto alg = make_algebra(system);
  auto const& rs = alg->roots();
  auto group = std::make_shared<ChevalleyGroup const>(alg, ring);
  CongruenceSubgroup h(group, level);
  CosetTable t(h);
  auto input = parse_word(word_text, rs, ring);
  auto out = coset_rewrite(input, h, t);

  bool tail_ok = true;
  for (auto const& l : out.tail.letters) tail_ok &= t.in_table(std::get<RootLetter>(l));
  Json j;
  j["command"] = "rewrite";
  j["system"] = system;
  j["ring"] = ring->describe();
  j["level"] = int_str(level);
  j["input_letters"] = input.letters.size();
  j["conjugated_part"] = format_word(out.conjugated_part, rs);
  j["tail"] = format_word(out.tail, rs);
  j["tail_letters"] = out.tail.letters.size();
  j["reconstruction"] = true;
  j["conjugates_in_H"] = true;
  j["tail_in_table"] = tail_ok;
  j["pass"] = tail_ok;
  return {j, tail_ok};
}

VerifyReport factor_report(std::string const& system, RingPtr const& ring, std::string const& matrix_text) {
  auto alg = make_algebra(system);
  auto group = std::make_shared<ChevalleyGroup const>(alg, ring);
  NaturalRep rep(group);

  std::vector<std::vector<std::string>> rows;
  std::stringstream rs_in(matrix_text);
  std::string row;
  while (std::getline(rs_in, row, ';')) {
    rows.emplace_back();
    std::stringstream cs(row);
    std::string cell;
    while (std::getline(cs, cell, ',')) rows.back().push_back(cell);
  }
  if (rows.size() != rep.n()) throw std::invalid_argument("matrix must have " + std::to_string(rep.n()) + " rows");
  Matrix g(ring, rep.n());
  for (std::size_t i = 0; i < rep.n(); ++i) {
    if (rows[i].size() != rep.n()) throw std::invalid_argument("matrix rows must have " + std::to_string(rep.n()) + " entries");
    for (std::size_t k = 0; k < rep.n(); ++k) g(i, k) = parse_element(rows[i][k], ring);
  }
  auto word = factor_elementary(rep, g);
  bool adjoint_ok = rep.adjoint_of(g) == group->evaluate(word);

  Json j;
  j["command"] = "factor";
  j["system"] = system;
  j["ring"] = ring->describe();
  j["letters"] = word.letter_count();
  j["verified"] = true;
  j["adjoint_matches"] = adjoint_ok;
  j["word"] = format_word(word, alg->roots());
  j["pass"] = adjoint_ok;
  return {j, adjoint_ok};
}

// ---------------------------------------------------------------------------

Json roots_report(std::string const& system) {
  auto rs = RootSystem::parse(system);
  Json j;
  j["system"] = rs.label_string();
  j["rank"] = rs.rank();
  j["cartan"] = rs.cartan();
  Json comps = Json::array();
  for (auto const& c : rs.irreducible_components()) comps.push_back(c.label_string());
  j["components"] = comps;
  j["root_count"] = rs.size();
  Json roots = Json::array();
  for (std::size_t i = 0; i < rs.size(); ++i) {
    roots.push_back({{"index", i},
                     {"name", rs.root_name(i)},
                     {"coords", rs.root(i)},
                     {"positive", rs.is_positive(i)},
                     {"height", rs.height(i)},
                     {"squared_length", rs.squared_length(i)},
                     {"long", rs.is_long(i)}});
  }
  j["roots"] = roots;
  return j;
}

std::string roots_text(std::string const& system) {
  auto rs = RootSystem::parse(system);
  std::ostringstream out;
  out << "system " << rs.label_string() << ", rank " << rs.rank() << ", " << rs.size() << " roots\n";
  out << "cartan matrix:\n";
  for (auto const& row : rs.cartan()) {
    out << " ";
    for (int v : row) out << ' ' << (v >= 0 ? " " : "") << v;
    out << '\n';
  }
  out << "roots:\n";
  for (std::size_t i = 0; i < rs.size(); ++i) {
    out << "  " << rs.root_name(i) << "  height " << rs.height(i) << "  |r|^2 " << rs.squared_length(i)
        << (rs.is_long(i) ? "  long" : "  short") << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------

DiameterRow diameter_row(std::string const& system, std::uint32_t m, std::string const& root,
                         std::size_t mem_cap, bool timing) {
  auto start = std::chrono::steady_clock::now();
  auto alg = make_algebra(system);
  auto group = std::make_shared<ChevalleyGroup const>(alg, RingSpec::modular(m));
  auto alpha = alg->roots().parse_root(root);
  FiniteQuotient q(group, root_generators(*group), mem_cap);
  Word seed_word = root_word(alpha, group->elem(1));
  auto closure = conj_closure(q, {q.index_of(seed_word)});
  auto table = word_norm_bfs(q, closure, format_word(seed_word, alg->roots()));
  DiameterRow row{m, q.order(), table.descriptor, table.generating_set.size(), diameter(table), std::nullopt};
  if (timing) {
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  return row;
}

std::string diameter_csv(std::vector<DiameterRow> const& rows) {
  std::string out = "m,group_order,generating_class,closure_size,diameter,seconds\n";
  for (auto const& r : rows) {
    out += std::to_string(r.m) + "," + std::to_string(r.group_order) + "," + r.generating_class + "," +
           std::to_string(r.closure_size) + "," + std::to_string(r.diameter) + ",";
    if (r.seconds) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", *r.seconds);
      out += buf;
    } else {
      out += "NA";
    }
    out += "\n";
  }
  return out;
}

Json diameter_json(std::vector<DiameterRow> const& rows) {
  Json arr = Json::array();
  for (auto const& r : rows) {
    arr.push_back({{"m", r.m},
                   {"group_order", r.group_order},
                   {"generating_class", r.generating_class},
                   {"closure_size", r.closure_size},
                   {"diameter", r.diameter},
                   {"seconds", r.seconds ? Json(*r.seconds) : Json("NA")}});
  }
  return arr;
}

}  // namespace chev
