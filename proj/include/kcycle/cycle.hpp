#pragma once

#include "kcycle/orbits.hpp"

#include <map>
#include <string>

namespace kcycle {

/// CC(L_Q) as a formal sum of conormal closures: orbit -> multiplicity.
struct CharacteristicCycle {
  OrbitId target = OrbitId::radical(0);
  std::map<OrbitId, int> terms;

  /// terms[target] == 1, every term in the closure of target, all
  /// multiplicities non-negative.
  bool well_formed(const Setup& setup) const;
  std::string to_string() const;

  friend bool operator==(const CharacteristicCycle&, const CharacteristicCycle&) = default;
};

}  // namespace kcycle
