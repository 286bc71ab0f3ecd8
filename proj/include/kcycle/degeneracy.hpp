#pragma once

// The orbits Q(i) of Sp/SO as degeneracy loci of the section
// U -> B|_U of Hom(S, S*) over Gr(k, n), studied in an affine chart
// {v + A v : v ∈ U0} around a coordinate plane U0.

#include "kcycle/cycle.hpp"
#include "kcycle/matrixstrata.hpp"
#include "kcycle/orbits.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace kcycle {

/// The antidiagonal form: symmetric with 1's, or skew with +1 above and
/// -1 below the middle.
struct FormJ {
  Flavor flavor = Flavor::Symmetric;
  RationalMatrix matrix;

  static FormJ antidiagonal(Flavor flavor, int n);
  static FormJ for_kind(Kind kind, int n);
  int n() const { return static_cast<int>(matrix.rows()); }
};

/// Affine chart centered at the plane spanned by the first k columns of an
/// invertible frame; the chart point A is an (n-k)×k matrix.
struct Chart {
  RationalMatrix frame;
  int k = 0;

  /// Centered at <e_1..e_k> with complement <e_{k+1}..e_n>.
  static Chart standard(int n, int k);
  /// Centered at <e_1..e_{k-1}, e_{k+1}> (n = 2k), the reference plane of
  /// the second family of maximal isotropic planes.
  static Chart second_family(int n);

  /// Basis (n×k) of the graph plane of A.
  RationalMatrix graph(const RationalMatrix& a) const;
};

/// Gram matrix of B on the graph plane of A. Requires k >= n-k.
RationalMatrix section_value(const FormJ& form, const RationalMatrix& a, int k);
RationalMatrix section_value(const FormJ& form, const Chart& chart, const RationalMatrix& a);

/// Generators of the image of the differential of the section at A, as k×k
/// matrices of the flavor.
std::vector<RationalMatrix> section_differential(const FormJ& form, const Chart& chart,
                                                 const RationalMatrix& a);
/// The same image as a subspace of flavor coordinates.
Subspace section_differential_image(const FormJ& form, const RationalMatrix& a, int k);
Subspace section_differential_image(const FormJ& form, const Chart& chart,
                                    const RationalMatrix& a);

/// Flavor matrices C with x C = 0 (x = s(A)) that are also perpendicular to
/// the differential image when `perpendicular_to_section` is set.
Subspace transversality_obstructions(const FormJ& form, const Chart& chart,
                                     const RationalMatrix& a,
                                     bool perpendicular_to_section = true);

/// True iff the section is transversal at A to the rank stratum through s(A),
/// i.e. no nonzero C satisfies both conditions.
bool verify_transversality(const FormJ& form, const RationalMatrix& a, int k);
bool verify_transversality(const FormJ& form, const Chart& chart, const RationalMatrix& a);

struct TransversalityTally {
  Setup setup;  // normalized
  int charts = 0;
  int points = 0;
  int transversal = 0;
  /// First failing chart point, if any.
  std::optional<RationalMatrix> counterexample{};

  bool passed() const { return transversal == points; }
};

/// Checks transversality at `points` seeded random chart points, in the
/// standard chart and, for SO(2k) on Gr(k, 2k), also in the chart of the
/// second family.
TransversalityTally transversality_suite(const Setup& setup, int points, std::uint64_t seed,
                                         long height_bound = 100);

/// CC(L_Q(i)) obtained by pulling the matrix-side table back along the
/// section: stratum O_r becomes Q(k-r) in the normalized setup.
CharacteristicCycle pullback_cc(const Setup& setup, const OrbitId& orbit);

}  // namespace kcycle
