#pragma once

#include "kcycle/orbits.hpp"

#include <cstdint>
#include <stdexcept>

namespace kcycle {

/// Raised when a sampler cannot reach the generic rank within its budget.
class GenericityFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Block sizes of the adapted GLpq chart at a base point of Q(s,t).
/// Rows of a covector (a k×(n-k) matrix) split as U∩C^p | U∩C^q | mixed;
/// columns split as pure C^p/U | overlap C^p/U ∩ C^q/U | pure C^q/U.
struct GlpqLayout {
  int s = 0, t = 0, mixed = 0;
  int pure_p = 0, overlap = 0, pure_q = 0;

  int row_p() const { return 0; }
  int row_q() const { return s; }
  int col_p() const { return 0; }
  int col_q() const { return pure_p + overlap; }
};

GlpqLayout glpq_layout(const Setup& setup, const OrbitId& orbit);

/// A covector ξ ∈ Hom(C^n/U, U) at a base point, as a k×(n-k) matrix in the
/// base point's frame.
struct ConormalVector {
  BasePoint base;
  RationalMatrix matrix;
};

/// Row-major flattening of a k×(n-k) covector and its inverse.
RationalVector flatten(const RationalMatrix& covector);
RationalMatrix unflatten(const RationalVector& coords, int k, int m);

/// Conormal space T*_Q Gr(k,n) at the base point, inside the k(n-k)
/// coordinate space. GLpq uses the explicit block pattern; Sp/SO use the
/// annihilator of the orbit tangent space.
Subspace conormal_space(const Setup& setup, const BasePoint& base);

/// Annihilator of the orbit tangent space under the trace pairing; valid for
/// every kind.
Subspace conormal_space_by_annihilator(const Setup& setup, const BasePoint& base);

/// Generic rank of covectors in the conormal space. GLpq: the block formula
/// min(s, n-k-p+s) + min(t, n-k-q+t).
int max_conormal_rank(const Setup& setup, const OrbitId& orbit);

struct SamplingOptions {
  long height_bound = 100;
  int retries = 8;
};

/// Random covector of generic rank in the conormal space. Throws
/// std::invalid_argument on a zero conormal space and GenericityFailure when
/// the retry budget runs out.
ConormalVector sample_conormal(const Setup& setup, const BasePoint& base,
                               std::uint64_t seed, SamplingOptions options = {});

/// Random integer combination of the basis of `space`.
RationalVector random_element(const Subspace& space, std::uint64_t seed,
                              long height_bound);

}  // namespace kcycle
