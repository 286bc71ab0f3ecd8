#pragma once

#include "kcycle/cycle.hpp"
#include "kcycle/degeneracy.hpp"
#include "kcycle/resolutions.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace kcycle {

/// CC(L_Q) for a K-orbit on Gr(k, n), read off from the classification:
/// GLpq and Sp orbits are irreducible; an SO orbit Q(i) with i odd below the
/// closed orbit picks up Q(i+1), which is the pair of split orbits when
/// n = 2k and i = k-1.
CharacteristicCycle characteristic_cycle(const Setup& setup, const OrbitId& orbit);

struct OrbitCheck {
  OrbitId orbit;
  CharacteristicCycle theorem;
  std::optional<CharacteristicCycle> pullback{};  // Sp/SO
  bool agree = true;
};

struct VerificationReport {
  Setup setup;
  std::vector<OrbitCheck> orbits{};
  std::vector<MicrolocalVerdict> microlocal{};// GLpq, every proper pair
  std::vector<SmallnessResult> smallness{};   // GLpq, applicable resolution

  bool cycles_agree() const;
  bool microlocal_empty() const;
  bool resolutions_small() const;
  bool passed() const { return cycles_agree() && microlocal_empty() && resolutions_small(); }
};

/// Ties the classification to its two proof mechanisms. Disagreements are
/// reported, never thrown.
VerificationReport cross_check(const Setup& setup, int trials = 20, std::uint64_t seed = 0);

/// Smallness of the applicable resolution (Z or Ztilde chosen on the
/// normalized setup) for every orbit, labels in the caller's setup.
std::vector<SmallnessResult> applicable_smallness(const Setup& setup);

/// Every valid setup with 2 <= n <= max_n, in a fixed order.
std::vector<Setup> all_setups(int max_n);
std::vector<Setup> all_setups(int max_n, Kind kind);

}  // namespace kcycle
