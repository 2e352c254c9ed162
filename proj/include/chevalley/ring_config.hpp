#ifndef CHEVALLEY_RING_CONFIG_HPP_
#define CHEVALLEY_RING_CONFIG_HPP_

#include <string>

#include "chevalley/ring.hpp"

namespace chev {

// Ring configuration documents:
//
//   {"kind": "integers"}
//   {"kind": "modular", "modulus": 7}
//   {"kind": "order", "rank": 2, "mul_table": [...]}   (rank = basis size, xi_0 first)
//
// Any of them except "modular" may carry "localize_at": an integer or an array
// of basis coordinates naming u, giving the localization at u.
// Throws InvalidRing on malformed or inconsistent input.
RingPtr parse_ring_config(std::string const& json_text);
RingPtr load_ring_config(std::string const& path);

}  // namespace chev

#endif  // CHEVALLEY_RING_CONFIG_HPP_
