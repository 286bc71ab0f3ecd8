#pragma once

#include "kcycle/exactla.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>

namespace kcycle {

enum class Flavor { Symmetric, Skew };

std::string_view to_string(Flavor flavor);

/// GL(m)-orbit of m×m symmetric or skew matrices of a given rank under
/// g·x = g x gᵀ.
struct StratumId {
  Flavor flavor = Flavor::Symmetric;
  int size = 0;
  int rank = 0;

  /// Orbit index: the rank for symmetric, half the rank for skew.
  int index() const { return flavor == Flavor::Skew ? rank / 2 : rank; }
  std::string label() const { return "O" + std::to_string(index()); }
  void validate() const;

  auto operator<=>(const StratumId&) const = default;
};

/// Characteristic cycle on the matrix side: stratum -> multiplicity.
struct MatrixCC {
  StratumId target;
  std::map<StratumId, int> terms;
};

/// The known characteristic cycles of IC-sheaves of rank strata:
/// skew strata are irreducible; a symmetric stratum of rank r picks up the
/// rank r-1 stratum exactly when m-r is odd and r >= 1.
MatrixCC cc_table(Flavor flavor, int m, int r);

/// Dimension of the space of m×m matrices of the flavor.
int flavor_dim(Flavor flavor, int m);

/// Coordinates on the flavor space: upper triangle (diagonal included only
/// for symmetric), row by row.
RationalVector to_flavor_coords(Flavor flavor, const RationalMatrix& x);
RationalMatrix from_flavor_coords(Flavor flavor, int m, const RationalVector& coords);

/// True when x is exactly symmetric (resp. skew).
bool has_flavor(const RationalMatrix& x, Flavor flavor);

/// tr(a bᵀ)
Rational trace_pairing(const RationalMatrix& a, const RationalMatrix& b);

/// C is conormal to the orbit through x iff x C = 0.
/// Throws std::invalid_argument on a shape or flavor mismatch.
bool conormal_condition(const RationalMatrix& x, const RationalMatrix& c);

/// span{Y x + x Yᵀ}, in flavor coordinates.
Subspace tangent_space_at(const RationalMatrix& x, Flavor flavor);

/// {C of the flavor : x C = 0}, in flavor coordinates.
Subspace conormal_solutions(const RationalMatrix& x, Flavor flavor);

/// Random matrix of the flavor with exactly the given rank, as g D gᵀ with a
/// random invertible g and a fixed normal form D.
RationalMatrix random_flavor_matrix(Flavor flavor, int m, int r, std::uint64_t seed,
                                    long height_bound = 100);

}  // namespace kcycle
