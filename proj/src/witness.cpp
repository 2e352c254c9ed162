#include "chevalley/witness.hpp"

namespace chev {

namespace {

Integer sign_of(Integer const& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// N = d m + r with 0 <= r < |d|, d != 0.
std::pair<Integer, Integer> floor_divmod(Integer const& N, Integer const& d) {
  Integer D = abs(d);
  Integer q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), N.get_mpz_t(), D.get_mpz_t());
  return {q * sign_of(d), r};
}

}  // namespace

std::size_t witness_length_bound(WitnessCase c) {
  switch (c) {
    case WitnessCase::A2OrLong: return 4;
    case WitnessCase::B2Short: return 9;
    case WitnessCase::G2Short: return 14;
  }
  return 0;
}

WitnessEngine::WitnessEngine(std::shared_ptr<ChevalleyGroup const> group)
    : group_(std::move(group)), tables_(group_->algebra_ptr()) {}

Integer WitnessEngine::pair_constant(Rank2Embedding const& emb) const {
  auto c = table(emb.beta, emb.gamma).constant(1, 1);
  if (!c) throw WitnessFailure("commutator table lacks the (1, 1) term");
  return Integer(static_cast<long>(*c));
}

void WitnessEngine::finish(PowerWitness& w) const {
  auto const& g = *group_;
  Matrix target = w.exponent >= 0 ? g.x(w.alpha, w.base).pow(w.exponent)
                                  : g.x(w.alpha, -w.base).pow(-w.exponent);
  if (g.evaluate(w.word) != target) {
    throw WitnessFailure(to_string(w.witness_case) + " witness for " + roots().root_name(w.alpha) +
                         " does not evaluate to its target");
  }
  if (w.word.letter_count() > w.length_bound) {
    throw WitnessFailure("witness exceeds its length bound");
  }
  w.target_hash = matrix_hash(target);
}

PowerWitness WitnessEngine::witness_long(Rank2Embedding const& emb, Integer const& p,
                                         RingElement const& xi, Integer const& n) const {
  if (emb.witness_case != WitnessCase::A2OrLong) {
    throw CaseMismatch("witness_long needs an A2/long embedding, got " + to_string(emb.witness_case));
  }
  auto const& g = *group_;
  RingElement base = xi.scaled(p);
  Integer C = pair_constant(emb);
  PowerWitness w{emb.alpha, base, C * p * n, emb.witness_case,
                 commutator(root_word(emb.beta, base), root_word(emb.gamma, g.elem(p * n))),
                 witness_length_bound(emb.witness_case), {}};
  finish(w);
  return w;
}

Word WitnessEngine::long_power_word(std::size_t delta, RingElement const& b, Integer const& N,
                                    Integer const& p) const {
  auto emb = roots().find_witness_pair(delta);
  if (emb.witness_case != WitnessCase::A2OrLong) {
    throw CaseMismatch("root " + roots().root_name(delta) + " has no A2/long decomposition");
  }
  Integer d = pair_constant(emb) * p;
  auto [m, r] = floor_divmod(N, d);
  Word w = commutator(root_word(emb.beta, b), root_word(emb.gamma, group_->elem(p * m)));
  w.push(RootLetter{delta, b.scaled(r)});
  return w;
}

PowerWitness WitnessEngine::short_witness(Rank2Embedding const& emb, WitnessCase expected,
                                          Integer const& p, RingElement const& xi,
                                          Integer const& n) const {
  if (emb.witness_case != expected) {
    throw CaseMismatch("expected a " + to_string(expected) + " embedding, got " +
                       to_string(emb.witness_case));
  }
  auto const& g = *group_;
  auto const& tab = table(emb.beta, emb.gamma);
  RingElement base = xi.scaled(p);
  Integer C = pair_constant(emb);

  // [x_beta(p xi), x_gamma(p n)] = x_alpha(C p^2 xi n) * prod x_{i beta + j gamma}(c mono),
  // so x_alpha(p xi)^{C p n} is the commutator times the inverted corrections.
  Word word = commutator(root_word(emb.beta, base), root_word(emb.gamma, g.elem(p * n)));
  for (auto it = tab.terms.rbegin(); it != tab.terms.rend(); ++it) {
    if (it->i == 1 && it->j == 1) continue;
    auto [es, et] = monomial_exponents(tab, *it);
    // c (p xi)^es (p n)^et = (p xi^es) * c p^{es + et - 1} n^et
    RingElement b = xi.pow(es).scaled(p);
    Integer pe, ne;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(es + et - 1));
    mpz_pow_ui(ne.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(et));
    Integer N = -Integer(static_cast<long>(it->c)) * pe * ne;
    word.append(long_power_word(it->root, b, N, p));
  }
  PowerWitness w{emb.alpha, base, C * p * n, emb.witness_case, std::move(word),
                 witness_length_bound(expected), {}};
  finish(w);
  return w;
}

PowerWitness WitnessEngine::witness_short_B2(Rank2Embedding const& emb, Integer const& p,
                                             RingElement const& xi, Integer const& n) const {
  return short_witness(emb, WitnessCase::B2Short, p, xi, n);
}

PowerWitness WitnessEngine::witness_short_G2(Rank2Embedding const& emb, Integer const& p,
                                             RingElement const& xi, Integer const& n) const {
  return short_witness(emb, WitnessCase::G2Short, p, xi, n);
}

PowerWitness WitnessEngine::witness(Rank2Embedding const& emb, Integer const& p, RingElement const& xi,
                                    Integer const& n) const {
  switch (emb.witness_case) {
    case WitnessCase::A2OrLong: return witness_long(emb, p, xi, n);
    case WitnessCase::B2Short: return witness_short_B2(emb, p, xi, n);
    case WitnessCase::G2Short: return witness_short_G2(emb, p, xi, n);
  }
  throw CaseMismatch("unknown witness case");
}

Word WitnessEngine::witness_root_element(std::size_t alpha, RingElement const& a, Integer const& q) const {
  auto const& g = *group_;
  if (!a.ring()->same_as(*g.ring())) throw SpecMismatch();
  if (a.is_zero()) return {};
  auto emb = roots().find_witness_pair(alpha);
  auto dm = divmod_basis(a, q);
  Integer Cq = pair_constant(emb) * q;

  // x_alpha(a) = prod_l x_alpha(q xi_l)^{n_l} * x_alpha(sum_l r_l xi_l), and each
  // power splits as x_alpha(q xi_l)^{C q m} x_alpha(q xi_l)^{r'} with 0 <= r' < |C q|.
  Word word;
  RingElement rest = RingElement::zero(g.ring());
  for (std::size_t l = 0; l < dm.quotient.size(); ++l) {
    auto xi = RingElement::basis(g.ring(), l);
    auto [m, r] = floor_divmod(dm.quotient[l], Cq);
    word.append(witness(emb, q, xi, m).word);
    word.push(RootLetter{alpha, xi.scaled(r * q)});
    rest += xi.scaled(dm.remainder[l]);
  }
  word.push(RootLetter{alpha, rest});
  if (g.evaluate(word) != g.x(alpha, a)) {
    throw WitnessFailure("root element witness does not evaluate to x_alpha(a)");
  }
  return word;
}

// ---------------------------------------------------------------------------

DenominatorWitness clear_denominators_conjugation(ChevalleyGroup const& group, std::size_t alpha,
                                                  RingElement const& a) {
  if (!a.ring()->same_as(*group.ring())) throw SpecMismatch();
  auto cd = clear_denominator(a);
  DenominatorWitness w{cd.k, cd.b, {}, {}, {}};
  if (cd.k == 0) {
    w.core = root_word(alpha, a);
    w.word = w.core;
  } else {
    auto u = localizing_element(group.ring());
    auto k = static_cast<long long>(cd.k);
    w.conjugator = Word{TorusLetter{alpha, u.pow(-k)}};
    w.core = root_word(alpha, u.pow(k) * lift_to(group.ring(), cd.b));
    w.word = conjugate(w.conjugator, w.core);
  }
  if (group.evaluate(w.word) != group.x(alpha, a)) {
    throw WitnessFailure("denominator-clearing conjugation does not evaluate to x_alpha(a)");
  }
  return w;
}

// ---------------------------------------------------------------------------

CongruenceSubgroup::CongruenceSubgroup(std::shared_ptr<ChevalleyGroup const> group, Integer q)
    : group_(std::move(group)), q_(std::move(q)) {
  if (q_ < 2) throw std::invalid_argument("congruence level must be at least 2");
  auto const& ring = *group_->ring();
  if (ring.is_localized()) throw std::invalid_argument("congruence subgroups need Z, Z/m or an order");
  if (ring.kind() == RingKind::Modular && !mpz_divisible_p(ring.modulus().get_mpz_t(), q_.get_mpz_t())) {
    throw std::invalid_argument("level must divide the modulus");
  }
}

Integer CongruenceSubgroup::reduce(RingElement const& a) const {
  auto v = a.as_integer();
  if (!v) throw std::invalid_argument("element " + a.to_string() + " is not an integer");
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), v->get_mpz_t(), q_.get_mpz_t());
  return r;
}

bool CongruenceSubgroup::contains(Matrix const& g) const {
  auto one = RingElement::one(g.ring());
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) {
      RingElement d = i == j ? g(i, j) - one : g(i, j);
      if (d.denom_exp() != 0) return false;
      for (auto const& c : d.coords())
        if (!mpz_divisible_p(c.get_mpz_t(), q_.get_mpz_t())) return false;
    }
  return true;
}

Word CosetTable::representative(std::size_t alpha, Integer const& r) const {
  return root_word(alpha, h_->group().elem(r));
}

std::pair<RootLetter, RootLetter> CosetTable::split(RootLetter const& e) const {
  auto r = h_->group().elem(h_->reduce(e.param));
  return {RootLetter{e.root, e.param - r}, RootLetter{e.root, r}};
}

bool CosetTable::in_table(RootLetter const& t) const {
  auto v = t.param.as_integer();
  return v && *v >= 0 && *v < level();
}

bool CosetTable::representatives_distinct(std::size_t alpha) const {
  auto const& g = h_->group();
  for (Integer r = 0; r < level(); ++r)
    for (Integer s = 0; s < level(); ++s) {
      if (r == s) continue;
      if (h_->contains(g.x(alpha, g.elem(r)) * g.x(alpha, -g.elem(s)))) return false;
    }
  return true;
}

CosetRewrite coset_rewrite(Word const& letters, CongruenceSubgroup const& h, CosetTable const& t) {
  auto const& g = h.group();
  Matrix product = g.evaluate(letters);
  if (!h.contains(product)) throw InputNotInH("input product is not in the congruence subgroup");

  CosetRewrite out;
  Word prefix;
  for (auto const& l : letters.letters) {
    auto const* e = std::get_if<RootLetter>(&l);
    if (!e) throw std::invalid_argument("coset_rewrite takes a word of root letters");
    auto [hi, ti] = t.split(*e);
    if (prefix.empty()) {
      out.conjugated_part.push(hi);
    } else {
      out.conjugated_part.push(ConjugateLetter{std::make_shared<Word const>(prefix),
                                               std::make_shared<Word const>(Word{hi})});
    }
    if (!ti.param.is_zero()) prefix.push(ti);
  }
  out.tail = std::move(prefix);

  for (auto const& l : out.conjugated_part.letters) {
    if (!h.contains(g.evaluate(l))) throw WitnessFailure("conjugated letter is not in H");
  }
  if (g.evaluate(out.conjugated_part) * g.evaluate(out.tail) != product) {
    throw WitnessFailure("coset rewrite does not reconstruct the input");
  }
  return out;
}

}  // namespace chev
