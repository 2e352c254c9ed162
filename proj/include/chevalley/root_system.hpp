#ifndef CHEVALLEY_ROOT_SYSTEM_HPP_
#define CHEVALLEY_ROOT_SYSTEM_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace chev {

// Coordinates of a root with respect to the simple roots.
using RootVec = std::vector<int>;

class InvalidCartan : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class WitnessPairNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Component {
  char family;
  int rank;
};

enum class Rank2Type { A2, B2, G2 };

// The three shapes of a decomposition alpha = beta + gamma:
// only alpha among {i beta + j gamma}; alpha and a long beta + 2 gamma;
// alpha and the long roots beta + 2 gamma, 2 beta + gamma.
enum class WitnessCase { A2OrLong, B2Short, G2Short };

std::string to_string(Rank2Type t);
std::string to_string(WitnessCase c);
std::optional<WitnessCase> parse_witness_case(std::string const& label);

struct Rank2Embedding {
  std::vector<std::size_t> subsystem;  // ambient root indices of Psi
  Rank2Type psi_type;
  WitnessCase witness_case;
  std::size_t alpha;
  std::size_t beta;
  std::size_t gamma;
};

// A (possibly reducible) crystallographic root system built from a Cartan
// matrix. cartan()[i][j] = <alpha_i, alpha_j> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j).
//
// Roots are indexed with the positive roots first, ordered by height and then
// reverse-lexicographically (so simple root i has index i), followed by their negatives in the same order.
class RootSystem {
 public:
  static RootSystem build(char family, int rank);
  static RootSystem from_cartan(std::vector<std::vector<int>> cartan,
                                std::vector<Component> label = {});
  // Selectors like "A2", "G2", "A2xB2".
  static RootSystem parse(std::string const& selector);

  std::size_t rank() const noexcept { return cartan_.size(); }
  std::size_t size() const noexcept { return roots_.size(); }
  std::size_t num_positive() const noexcept { return roots_.size() / 2; }
  std::vector<std::vector<int>> const& cartan() const noexcept { return cartan_; }
  std::vector<Component> const& label() const noexcept { return label_; }
  std::string label_string() const;

  RootVec const& root(std::size_t i) const { return roots_[i]; }
  std::vector<RootVec> const& roots() const noexcept { return roots_; }
  std::optional<std::size_t> index_of(RootVec const& v) const;
  std::size_t negative_of(std::size_t i) const;
  std::size_t simple_root(std::size_t i) const { return i; }
  bool is_positive(std::size_t i) const { return i < num_positive(); }
  int height(std::size_t i) const;

  // Squared length, normalized so that the shortest roots of every component
  // have squared length 2.
  int squared_length(std::size_t i) const { return sq_len_[i]; }
  bool is_long(std::size_t i) const;
  int simple_squared_length(std::size_t i) const { return simple_len_[i]; }

  int inner(RootVec const& a, RootVec const& b) const;
  // <beta, alpha> = 2 (beta, alpha) / (alpha, alpha).
  int cartan_int(RootVec const& beta, RootVec const& alpha) const;
  int cartan_int(std::size_t beta, std::size_t alpha) const;

  // Simple-root indices of each connected Dynkin component, in increasing order.
  std::vector<std::vector<std::size_t>> component_simple_roots() const;
  std::vector<RootSystem> irreducible_components() const;
  // Component index for each root.
  std::size_t component_of_root(std::size_t i) const;
  bool is_irreducible() const { return component_simple_roots().size() == 1; }

  // A decomposition alpha = beta + gamma inside a rank-2 subsystem Psi whose
  // positive combinations i beta + j gamma have the shape of alpha's case.
  // Among valid pairs the least (beta, gamma) in root order is returned.
  // Throws WitnessPairNotFound when alpha lies in a rank-1 component.
  Rank2Embedding find_witness_pair(std::size_t alpha) const;

  // Root indices {i beta + j gamma : i, j > 0} in Phi, keyed by (i, j).
  std::map<std::pair<int, int>, std::size_t> positive_combinations(std::size_t beta,
                                                                   std::size_t gamma) const;
  // Phi intersected with the real span of beta and gamma.
  std::vector<std::size_t> span_subsystem(std::size_t beta, std::size_t gamma) const;

  std::string root_name(std::size_t i) const;
  std::string root_name(RootVec const& v) const;
  // Parses names like "a1+2a2" or "-a1-a2"; throws std::invalid_argument.
  std::size_t parse_root(std::string const& text) const;

 private:
  RootSystem() = default;
  void compute_lengths();
  void compute_roots();

  std::vector<std::vector<int>> cartan_;
  std::vector<Component> label_;
  std::vector<int> simple_len_;
  std::vector<RootVec> roots_;
  std::vector<int> sq_len_;
  std::vector<std::size_t> root_component_;
  std::vector<bool> is_long_;
  std::map<RootVec, std::size_t> index_;
};

}  // namespace chev

#endif  // CHEVALLEY_ROOT_SYSTEM_HPP_
