#ifndef CHEVALLEY_WITNESS_HPP_
#define CHEVALLEY_WITNESS_HPP_

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "chevalley/commutator.hpp"
#include "chevalley/group.hpp"
#include "chevalley/root_system.hpp"

namespace chev {

class CaseMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputNotInH : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotElementary : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a constructed word does not evaluate to its target. Indicates a
// bug; witnesses are never returned unverified.
class WitnessFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A word certifying x_alpha(base)^exponent with a letter count that does not
// depend on the exponent.
struct PowerWitness {
  std::size_t alpha;
  RingElement base;
  Integer exponent;
  WitnessCase witness_case;
  Word word;
  std::size_t length_bound;
  std::string target_hash;
};

// Everything the witness constructions need about one group: the group itself
// and lazily derived commutator tables.
class WitnessEngine {
 public:
  explicit WitnessEngine(std::shared_ptr<ChevalleyGroup const> group);

  ChevalleyGroup const& group() const noexcept { return *group_; }
  RootSystem const& roots() const noexcept { return group_->roots(); }
  CommutatorTable const& table(std::size_t beta, std::size_t gamma) const {
    return tables_.get(beta, gamma);
  }
  // C_11 of the embedding's pair (beta, gamma).
  Integer pair_constant(Rank2Embedding const& emb) const;

  // [x_beta(p xi), x_gamma(p n)] = x_alpha(p xi)^{C p n}; four letters.
  PowerWitness witness_long(Rank2Embedding const& emb, Integer const& p, RingElement const& xi,
                            Integer const& n) const;
  // Commutator followed by one correction for the long root beta + 2 gamma,
  // itself written through witness_long; nine letters.
  PowerWitness witness_short_B2(Rank2Embedding const& emb, Integer const& p, RingElement const& xi,
                                Integer const& n) const;
  // Commutator followed by corrections for beta + 2 gamma and 2 beta + gamma;
  // fourteen letters.
  PowerWitness witness_short_G2(Rank2Embedding const& emb, Integer const& p, RingElement const& xi,
                                Integer const& n) const;
  // Dispatches on emb.witness_case.
  PowerWitness witness(Rank2Embedding const& emb, Integer const& p, RingElement const& xi,
                       Integer const& n) const;

  // x_delta(b)^N for a root delta admitting an A2/long pair, as
  // [x_beta'(b), x_gamma'(p m)] x_delta(r b) with N = C p m + r, 0 <= r < |C p|.
  Word long_power_word(std::size_t delta, RingElement const& b, Integer const& N, Integer const& p) const;

  // x_alpha(a) for a in Z or an order, through divmod_basis(a, q) and the
  // power witnesses with p = q. Verified; empty for a = 0.
  Word witness_root_element(std::size_t alpha, RingElement const& a, Integer const& q) const;

 private:
  PowerWitness short_witness(Rank2Embedding const& emb, WitnessCase expected, Integer const& p,
                             RingElement const& xi, Integer const& n) const;
  void finish(PowerWitness& w) const;

  std::shared_ptr<ChevalleyGroup const> group_;
  CommutatorTables tables_;
};

// Letter count of each witness shape.
std::size_t witness_length_bound(WitnessCase c);

struct DenominatorWitness {
  unsigned k;
  RingElement b;       // base-ring element with a = u^{-k} b
  Word conjugator;     // h_alpha(u^{-k}), empty when k = 0
  Word core;           // x_alpha(u^k b)
  Word word;           // conj(conjugator; core), or just core when k = 0
};

// h_alpha(u^{-k}) x_alpha(u^k b) h_alpha(u^k) = x_alpha(u^{-k} b) over O[1/u]. Verified.
DenominatorWitness clear_denominators_conjugation(ChevalleyGroup const& group, std::size_t alpha,
                                                  RingElement const& a);

// Principal congruence subgroup of level q in the adjoint realization over Z,
// an order, or Z/m with q | m: matrices congruent to the identity mod q.
class CongruenceSubgroup {
 public:
  CongruenceSubgroup(std::shared_ptr<ChevalleyGroup const> group, Integer q);

  Integer const& level() const noexcept { return q_; }
  ChevalleyGroup const& group() const noexcept { return *group_; }
  bool contains(Matrix const& g) const;
  bool contains(Word const& w) const { return contains(group_->evaluate(w)); }
  // Reduction of a ring element modulo q, as the representative in [0, q).
  Integer reduce(RingElement const& a) const;

 private:
  std::shared_ptr<ChevalleyGroup const> group_;
  Integer q_;
};

// Per-root coset representatives T_alpha = {x_alpha(r) : 0 <= r < q}.
class CosetTable {
 public:
  explicit CosetTable(CongruenceSubgroup const& h) : h_(&h) {}

  Integer const& level() const noexcept { return h_->level(); }
  // x_alpha(r) for 0 <= r < q.
  Word representative(std::size_t alpha, Integer const& r) const;
  // e = x_alpha(a) = x_alpha(a - r) x_alpha(r) with r = a mod q.
  std::pair<RootLetter, RootLetter> split(RootLetter const& e) const;
  bool in_table(RootLetter const& t) const;
  // t t'^{-1} not in H for distinct representatives of one root.
  bool representatives_distinct(std::size_t alpha) const;

 private:
  CongruenceSubgroup const* h_;
};

struct CosetRewrite {
  Word conjugated_part;  // prod_i conj(t_1 ... t_{i-1}; h_i), zero t's omitted
  Word tail;             // t_1 ... t_m, zero t's omitted
};

// Splits a product e_1 ... e_m of root letters lying in H as
//   prod_i (t_1 ... t_{i-1}) h_i (t_1 ... t_{i-1})^{-1} * (t_1 ... t_m)
// with e_i = h_i t_i, h_i in H, t_i in T_alpha_i. Throws InputNotInH;
// the reconstruction and every conjugate's membership are verified.
CosetRewrite coset_rewrite(Word const& letters, CongruenceSubgroup const& h, CosetTable const& t);

}  // namespace chev

#endif  // CHEVALLEY_WITNESS_HPP_
