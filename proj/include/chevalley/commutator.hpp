#ifndef CHEVALLEY_COMMUTATOR_HPP_
#define CHEVALLEY_COMMUTATOR_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chevalley/group.hpp"

namespace chev {

class NoSolution : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// How the monomial of the factor x_{i a + j b}(C ...) in [x_a(s), x_b(t)]
// distributes the exponents i, j over s and t.
enum class Pairing {
  TiSj,  // C t^i s^j, the usual textbook form
  SiTj,  // C s^i t^j
};

std::string to_string(Pairing p);

struct CommutatorTerm {
  int i;
  int j;
  std::size_t root;  // index of i*alpha + j*beta
  std::int64_t c;
};

// Constants of [x_alpha(s), x_beta(t)] = prod x_{i alpha + j beta}(C_ij mono(s, t)),
// [a, b] = a b a^{-1} b^{-1}, factors in increasing i + j and then increasing i.
struct CommutatorTable {
  std::size_t alpha;
  std::size_t beta;
  // TiSj whenever a constant table fits it, SiTj otherwise.
  Pairing pairing;
  bool tisj_fits;
  bool sitj_fits;
  std::vector<CommutatorTerm> terms;

  std::optional<std::int64_t> constant(int i, int j) const;
};

// Exponents (of s, of t) carried by term (i, j) under the table's pairing.
std::pair<int, int> monomial_exponents(CommutatorTable const& table, CommutatorTerm const& term);

// Derives C_ij for non-proportional alpha, beta by instantiating (s, t) over Z,
// peeling the factors off the commutator matrix in product order, and fitting
// integer constants; the fitted table is re-checked on further (s, t).
CommutatorTable derive_Cij(ChevalleyAlgebra const& algebra, std::size_t alpha, std::size_t beta);

Matrix commutator_rhs(ChevalleyGroup const& group, CommutatorTable const& table, RingElement const& s,
                      RingElement const& t);
Word commutator_rhs_word(CommutatorTable const& table, RingElement const& s, RingElement const& t);

struct CommutatorCheck {
  bool pass;
  Matrix lhs;
  Matrix rhs;
};

CommutatorCheck verify_commutator(ChevalleyGroup const& group, CommutatorTable const& table,
                                  RingElement const& s, RingElement const& t);

// Lazily derived tables for every ordered pair of an algebra.
class CommutatorTables {
 public:
  explicit CommutatorTables(std::shared_ptr<ChevalleyAlgebra const> algebra)
      : algebra_(std::move(algebra)) {}

  CommutatorTable const& get(std::size_t alpha, std::size_t beta) const;

 private:
  std::shared_ptr<ChevalleyAlgebra const> algebra_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<std::size_t, std::size_t>, CommutatorTable> cache_;
};

bool proportional(RootSystem const& rs, std::size_t a, std::size_t b);

}  // namespace chev

#endif  // CHEVALLEY_COMMUTATOR_HPP_
