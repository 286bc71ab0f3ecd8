#pragma once

// Exact dense linear algebra over the rationals.
//
// Everything here works on Eigen dense matrices whose scalar is an exact
// field type. Zero tests are exact comparisons, so instantiating these
// templates with float or double is meaningless.

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kcycle {

using Index = Eigen::Index;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = MatrixX<Rational>;
using RationalVector = VectorX<Rational>;
using IntegerMatrix = MatrixX<Integer>;

/// Reduced row echelon form together with its pivot columns.
template <typename Scalar>
struct Echelon {
  MatrixX<Scalar> reduced;
  std::vector<Index> pivots;

  Index rank() const { return static_cast<Index>(pivots.size()); }
};

/// Gauss-Jordan elimination to reduced row echelon form.
template <typename Derived>
Echelon<typename Derived::Scalar> reduced_echelon(
    const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Echelon<Scalar> out{m.eval(), {}};
  auto& a = out.reduced;
  const Scalar zero(0);
  Index row = 0;
  for (Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Index pivot = row;
    while (pivot < a.rows() && a(pivot, col) == zero) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row) a.row(pivot).swap(a.row(row));
    const Scalar inv = Scalar(1) / a(row, col);
    for (Index j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (Index i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == zero) continue;
      const Scalar f = a(i, col);
      for (Index j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
/// Every intermediate entry is a minor of the input, so the divisions are
/// exact and no fractions appear.
inline Index bareiss_rank(IntegerMatrix a) {
  const Integer zero(0);
  Integer prev(1);
  Index r = 0;
  for (Index c = 0; c < a.cols() && r < a.rows(); ++c) {
    Index p = r;
    while (p < a.rows() && a(p, c) == zero) ++p;
    if (p == a.rows()) continue;
    if (p != r) a.row(p).swap(a.row(r));
    for (Index i = r + 1; i < a.rows(); ++i) {
      for (Index j = c + 1; j < a.cols(); ++j)
        a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
      a(i, c) = zero;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

/// Scales each row by the lcm of its denominators.
template <typename Derived>
IntegerMatrix clear_denominators(const Eigen::MatrixBase<Derived>& m) {
  IntegerMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i) {
    Integer l(1);
    for (Index j = 0; j < m.cols(); ++j)
      l = boost::multiprecision::lcm(l, Integer(denominator(Rational(m(i, j)))));
    for (Index j = 0; j < m.cols(); ++j) {
      const Rational x(m(i, j));
      out(i, j) = numerator(x) * (l / denominator(x));
    }
  }
  return out;
}

/// Exact rank over the rationals.
template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return bareiss_rank(clear_denominators(m));
}

/// Column span inside a fixed ambient space. The basis always has full
/// column rank; a zero subspace has a basis with zero columns.
template <typename Scalar>
class SubspaceT {
 public:
  explicit SubspaceT(Index ambient_dim)
      : ambient_dim_(ambient_dim), basis_(ambient_dim, 0) {}

  /// Span of the columns of `generators`; dependent columns are dropped.
  template <typename Derived>
  static SubspaceT span(const Eigen::MatrixBase<Derived>& generators) {
    SubspaceT out(generators.rows());
    const auto ech = reduced_echelon(generators);
    out.basis_.resize(generators.rows(), ech.rank());
    for (Index c = 0; c < ech.rank(); ++c)
      out.basis_.col(c) = generators.col(ech.pivots[c]);
    return out;
  }

  static SubspaceT full(Index ambient_dim) {
    return span(MatrixX<Scalar>::Identity(ambient_dim, ambient_dim));
  }

  Index ambient_dim() const { return ambient_dim_; }
  Index dim() const { return basis_.cols(); }
  const MatrixX<Scalar>& basis() const { return basis_; }

  template <typename Derived>
  bool contains(const Eigen::MatrixBase<Derived>& vectors) const {
    if (vectors.rows() != ambient_dim_)
      throw std::invalid_argument("contains: ambient dimension mismatch");
    MatrixX<Scalar> joined(ambient_dim_, dim() + vectors.cols());
    joined << basis_, vectors;
    return rank(joined) == dim();
  }

  bool contains(const SubspaceT& other) const {
    return contains(other.basis());
  }

 private:
  Index ambient_dim_;
  MatrixX<Scalar> basis_;
};

using Subspace = SubspaceT<Rational>;

/// Right null space; its dimension is cols − rank.
template <typename Derived>
SubspaceT<typename Derived::Scalar> kernel(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto ech = reduced_echelon(m);
  const Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index c : ech.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  MatrixX<Scalar> basis = MatrixX<Scalar>::Zero(n, n - ech.rank());
  Index out = 0;
  for (Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(free, out) = Scalar(1);
    for (Index r = 0; r < ech.rank(); ++r)
      basis(ech.pivots[static_cast<std::size_t>(r)], out) = -ech.reduced(r, free);
    ++out;
  }
  return SubspaceT<Scalar>::span(basis);
}

/// Common zero set of linear functionals, one per row of `constraints`, on
/// a space of dimension constraints.cols(). A 0-row matrix means no
/// constraint at all.
template <typename Derived>
SubspaceT<typename Derived::Scalar> solve_homogeneous(
    const Eigen::MatrixBase<Derived>& constraints) {
  return kernel(constraints);
}

template <typename Scalar>
SubspaceT<Scalar> sum(const SubspaceT<Scalar>& a, const SubspaceT<Scalar>& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("sum: ambient dimension mismatch");
  MatrixX<Scalar> joined(a.ambient_dim(), a.dim() + b.dim());
  joined << a.basis(), b.basis();
  return SubspaceT<Scalar>::span(joined);
}

template <typename Scalar>
SubspaceT<Scalar> intersect(const SubspaceT<Scalar>& a,
                            const SubspaceT<Scalar>& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("intersect: ambient dimension mismatch");
  // x = A u = B v  <=>  [A | -B] (u; v) = 0
  MatrixX<Scalar> joined(a.ambient_dim(), a.dim() + b.dim());
  joined << a.basis(), -b.basis();
  const auto ker = kernel(joined);
  return SubspaceT<Scalar>::span(a.basis() * ker.basis().topRows(a.dim()));
}

/// Vectors pairing to zero with all of `s` under the standard dot product.
template <typename Scalar>
SubspaceT<Scalar> annihilator(const SubspaceT<Scalar>& s) {
  return kernel(s.basis().transpose());
}

/// Inverse of a square matrix; throws if it is singular.
template <typename Derived>
MatrixX<typename Derived::Scalar> inverse(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Index n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("inverse: matrix not square");
  MatrixX<Scalar> joined(n, 2 * n);
  joined << m, MatrixX<Scalar>::Identity(n, n);
  const auto ech = reduced_echelon(joined);
  if (ech.rank() < n || ech.pivots.back() >= n)
    throw std::invalid_argument("inverse: matrix is singular");
  return ech.reduced.rightCols(n);
}

/// Deterministic 64-bit seed mixing (splitmix64 finalizer).
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Integer matrix with entries uniform in [-height_bound, height_bound].
inline RationalMatrix random_matrix(Index rows, Index cols, std::uint64_t seed,
                                    long height_bound) {
  if (height_bound < 0)
    throw std::invalid_argument("random_matrix: negative height bound");
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<long> dist(-height_bound, height_bound);
  RationalMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = Rational(dist(gen));
  return m;
}

}  // namespace kcycle
