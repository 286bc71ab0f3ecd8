#pragma once

#include "kcycle/exactla.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kcycle {

enum class Kind { GLpq, Sp, SO };

std::string_view to_string(Kind kind);
std::optional<Kind> parse_kind(std::string_view text);

/// Ambient data fixing the group action on Gr(k, n).
/// For GLpq the decomposition is C^n = C^p (first p coordinates) ⊕ C^q.
struct Setup {
  Kind kind = Kind::GLpq;
  int n = 0;
  int k = 0;
  int p = 0;  // GLpq only
  int q = 0;  // GLpq only

  static Setup glpq(int n, int k, int p, int q) { return {Kind::GLpq, n, k, p, q}; }
  static Setup sp(int n, int k) { return {Kind::Sp, n, k, 0, 0}; }
  static Setup so(int n, int k) { return {Kind::SO, n, k, 0, 0}; }

  /// Throws std::invalid_argument with a one-line diagnostic.
  void validate() const;
  bool valid() const noexcept;
  int grassmannian_dim() const { return k * (n - k); }
  /// True for SO(2k) acting on Gr(k, 2k), where maximal isotropic planes split.
  bool has_split() const { return kind == Kind::SO && 2 * k == n; }

  friend bool operator==(const Setup&, const Setup&) = default;
};

std::string describe(const Setup& setup);

/// A K-orbit label: Q(s,t) for GLpq, Q(i) for Sp/SO, or one of the two
/// closed SO(2k)-orbits of maximal isotropic planes.
class OrbitId {
 public:
  enum class Form { Pair, Radical, Split };

  static OrbitId pair(int s, int t) { return {Form::Pair, s, t}; }
  static OrbitId radical(int i) { return {Form::Radical, i, 0}; }
  /// sign is +1 or -1; k is the plane dimension (the radical dimension).
  static OrbitId split(int k, int sign) { return {Form::Split, k, sign}; }

  Form form() const { return form_; }
  int s() const { return a_; }
  int t() const { return b_; }
  /// Radical dimension; for split orbits this is k.
  int radical_dim() const { return a_; }
  int sign() const { return b_; }

  /// CLI grammar: q(s,t), rad{i}, rad{k}+ / rad{k}-.
  std::string label() const;
  static std::optional<OrbitId> parse(std::string_view text);

  auto operator<=>(const OrbitId&) const = default;

 private:
  OrbitId(Form form, int a, int b) : form_(form), a_(a), b_(b) {}
  Form form_;
  int a_;
  int b_;
};

/// A setup brought into the standing assumptions: GLpq has p >= q and
/// n-k >= k; Sp/SO have k >= n-k. Dualization is applied before the p/q swap.
struct NormalizedSetup {
  Setup original;
  Setup setup;
  bool dualized = false;
  bool swapped_pq = false;
};

NormalizedSetup normalize(const Setup& setup);

/// Gr(k,n) -> Gr(n-k,n), U -> Ann(U) (GLpq) or U -> U^⊥ (Sp/SO).
Setup dual_setup(const Setup& setup);
OrbitId dual_orbit(const Setup& setup, const OrbitId& orbit);
/// Exchange of the two summands C^p and C^q.
Setup swapped_setup(const Setup& setup);
OrbitId swapped_orbit(const OrbitId& orbit);

/// Label in the normalized setup of an orbit given in the original one.
OrbitId relabel_orbit(const OrbitId& orbit, const NormalizedSetup& norm);
/// Inverse of relabel_orbit.
OrbitId restore_orbit(const OrbitId& orbit, const NormalizedSetup& norm);

bool is_valid_orbit(const Setup& setup, const OrbitId& orbit);
/// Throws std::invalid_argument when the label does not name an orbit.
void require_orbit(const Setup& setup, const OrbitId& orbit);

std::vector<OrbitId> enumerate_orbits(const Setup& setup);

/// a lies in the closure of b.
bool closure_leq(const Setup& setup, const OrbitId& a, const OrbitId& b);

struct ClosurePoset {
  std::vector<OrbitId> orbits;
  std::vector<int> dimensions;
  /// Covering relations (lower, upper) as indices into `orbits`.
  std::vector<std::pair<std::size_t, std::size_t>> covers;

  std::optional<std::size_t> index_of(const OrbitId& orbit) const;
};

ClosurePoset closure_poset(const Setup& setup);

/// The nondegenerate form preserved by K (Sp: skew, SO: symmetric), with
/// ±1 along the antidiagonal.
RationalMatrix bilinear_form(Kind kind, int n);

/// Explicit point U of an orbit. `frame` is an invertible n×n matrix whose
/// first k columns span U and whose last n-k columns span the complement
/// identified with C^n/U.
struct BasePoint {
  OrbitId orbit;
  RationalMatrix frame;
  int k = 0;

  auto plane_basis() const { return frame.leftCols(k); }
  auto complement_basis() const { return frame.rightCols(frame.cols() - k); }
  Subspace plane() const { return Subspace::span(plane_basis()); }
};

BasePoint base_point(const Setup& setup, const OrbitId& orbit);

/// Basis of the Lie algebra of K as n×n matrices.
std::vector<RationalMatrix> lie_algebra_basis(const Setup& setup);

/// Tangent vectors X·U mod U for X in the Lie algebra, one column each.
/// A tangent vector φ: U -> C^n/U is stored as the row-major flattening of
/// φᵀ, so that the trace pairing with a covector ξ: C^n/U -> U (a k×(n-k)
/// matrix, flattened row-major) is the dot product.
RationalMatrix orbit_tangent_vectors(const Setup& setup, const BasePoint& base);

int orbit_dimension(const Setup& setup, const OrbitId& orbit);

/// dim(U ∩ C^p), dim(U ∩ C^q) for a plane given by its basis columns.
std::pair<int, int> summand_intersections(const Setup& setup,
                                          const RationalMatrix& plane);
/// dim rad(B|_U) computed as k - rank of the Gram matrix.
int radical_dim_by_gram(const RationalMatrix& form, const RationalMatrix& plane);
/// dim(U ∩ U^⊥) computed directly from the two subspaces.
int radical_dim_by_intersection(const RationalMatrix& form,
                                const RationalMatrix& plane);
/// Family of a maximal isotropic plane in SO(2k): +1 when
/// dim(U ∩ U_ref) ≡ k (mod 2), with U_ref = <e_1..e_k>.
int split_family(int k, const RationalMatrix& plane);

}  // namespace kcycle
