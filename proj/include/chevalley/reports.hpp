#ifndef CHEVALLEY_REPORTS_HPP_
#define CHEVALLEY_REPORTS_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "chevalley/group.hpp"
#include "chevalley/norm_lab.hpp"

namespace chev {

using Json = nlohmann::ordered_json;

// Seeded generator shared by every randomized grid. Values are mapped by
// plain modular reduction so the sequence is identical across standard
// libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Uniform-ish integer in [lo, hi].
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 engine_;
};

// Random element with coordinates in [-bound, bound]; in a localization the
// denominator exponent is drawn from [0, max_denom].
RingElement random_element(Rng& rng, RingPtr const& ring, long long bound, unsigned max_denom = 0);

// A small list of units of the ring used for torus checks.
std::vector<RingElement> sample_units(RingPtr const& ring, Rng& rng, std::size_t trials);

struct VerifyReport {
  Json json;
  bool pass;
};

// Structure constants, commutator formula, additivity and torus action
// checks over one root system and ring. trials = 0 yields an empty report.
VerifyReport verify_report(std::string const& system, RingPtr const& ring, std::size_t trials,
                           std::uint64_t seed);

struct WitnessRequest {
  std::string system;
  RingPtr ring;
  std::optional<std::string> case_label;  // A2/long, B2-short, G2-short
  std::optional<std::string> root;        // defaults to the first root of the case
  Integer p = 2;
  std::size_t xi = 0;                     // basis index
  std::vector<Integer> n_grid{1, 10, 100, 1000};
};

VerifyReport witness_report(WitnessRequest const& req);

// x_alpha(a) through the root-element or denominator-clearing construction.
VerifyReport element_witness_report(std::string const& system, RingPtr const& ring, std::string const& root,
                                    std::string const& elem, Integer const& level);

VerifyReport rewrite_report(std::string const& system, RingPtr const& ring, Integer const& level,
                            std::string const& word_text);

VerifyReport factor_report(std::string const& system, RingPtr const& ring, std::string const& matrix_text);

Json roots_report(std::string const& system);
std::string roots_text(std::string const& system);

struct DiameterRow {
  std::uint32_t m;
  std::size_t group_order;
  std::string generating_class;
  std::size_t closure_size;
  int diameter;
  std::optional<double> seconds;
};

// Word-norm diameter of E(Phi, Z/m) for the conjugacy class generated by
// x_root(1), root given by name.
DiameterRow diameter_row(std::string const& system, std::uint32_t m, std::string const& root,
                         std::size_t mem_cap, bool timing);

// Header m,group_order,generating_class,closure_size,diameter,seconds; seconds
// is "NA" unless it was measured.
std::string diameter_csv(std::vector<DiameterRow> const& rows);
Json diameter_json(std::vector<DiameterRow> const& rows);

}  // namespace chev

#endif  // CHEVALLEY_REPORTS_HPP_
