#pragma once

#include "kcycle/conormal.hpp"

#include <optional>
#include <vector>

namespace kcycle {

/// Z(s,t) = {(U,V,W) : V ⊂ U∩C^p, W ⊂ U∩C^q}, small when n-k >= p.
/// Ztilde(s,t) = {(U,V,W) : U+C^p ⊂ V, W ⊂ U∩C^q}, small when n-k <= p.
/// Zi = {(U,V) : V ⊂ rad(B|_U)} for Sp/SO, used for fiber dimensions only.
enum class ResolutionKind { Z, Ztilde, Zi };

std::string_view to_string(ResolutionKind kind);

/// Resolution used for the microlocal argument on a normalized GLpq setup.
ResolutionKind applicable_resolution(const Setup& setup);

/// A fiber point (V, W) over the base point, both as subspaces of C^n.
struct FiberPoint {
  Subspace v;
  Subspace w;
};

struct Membership {
  bool member = false;
  std::optional<FiberPoint> witness{};
};

/// Does ξ (at a base point of Q(s',t')) lie in ker d*θ for some fiber point
/// of Z(s,t)? Decided by rank budgets on the two conormal blocks.
Membership kernel_membership_z(const Setup& setup, const ConormalVector& xi, int s, int t);
/// Same question for Ztilde(s,t).
Membership kernel_membership_ztilde(const Setup& setup, const ConormalVector& xi, int s,
                                    int t);

/// Exact check, by a linear feasibility problem, that ξ = h + l with (h, l)
/// obeying the codifferential-kernel conditions at the fiber point, and that
/// the fiber point satisfies the incidence conditions of the resolution.
bool witness_is_valid(const Setup& setup, ResolutionKind kind, const ConormalVector& xi,
                      int s, int t, const FiberPoint& point);

struct MicrolocalVerdict {
  OrbitId target;
  OrbitId stratum;
  ResolutionKind resolution = ResolutionKind::Z;
  int trials = 0;
  bool empty_in_all_trials = true;
  /// false on the boundary n = 2k, where the argument needs 2k < n
  bool within_strict_hypothesis = true;
  std::optional<FiberPoint> witness{};
};

/// Samples `trials` generic covectors at the stratum's base point and checks
/// that none lies in the kernel union over the fiber. Orbits are given in
/// the caller's setup and normalized internally.
MicrolocalVerdict verify_microlocal_empty(const Setup& setup, const OrbitId& target,
                                          const OrbitId& stratum, int trials,
                                          std::uint64_t seed);

/// Dimension of the fiber of the resolution of the closure of `target` over
/// a point of `stratum`.
int fiber_dimension(const Setup& setup, ResolutionKind kind, const OrbitId& target,
                    const OrbitId& stratum);

struct StratumSmallness {
  OrbitId stratum;
  int fiber_dim = 0;
  int codim = 0;
  bool ok = true;  // 2·fiber_dim < codim
};

struct SmallnessResult {
  OrbitId target;
  ResolutionKind kind = ResolutionKind::Z;
  bool small = true;
  std::vector<StratumSmallness> strata{};
};

SmallnessResult smallness(const Setup& setup, ResolutionKind kind, const OrbitId& target);
bool is_small(const Setup& setup, ResolutionKind kind, const OrbitId& target);

}  // namespace kcycle
