#include "kcycle/matrixstrata.hpp"

#include <stdexcept>

namespace kcycle {

std::string_view to_string(Flavor flavor) {
  return flavor == Flavor::Symmetric ? "symmetric" : "skew";
}

void StratumId::validate() const {
  if (size < 1) throw std::invalid_argument("matrix size must be positive");
  if (rank < 0 || rank > size) throw std::invalid_argument("rank out of range");
  if (flavor == Flavor::Skew && rank % 2 != 0)
    throw std::invalid_argument("skew matrices have even rank");
}

MatrixCC cc_table(Flavor flavor, int m, int r) {
  const StratumId target{flavor, m, r};
  target.validate();
  MatrixCC cc{target, {{target, 1}}};
  if (flavor == Flavor::Symmetric && r >= 1 && (m - r) % 2 == 1)
    cc.terms[StratumId{flavor, m, r - 1}] = 1;
  return cc;
}

int flavor_dim(Flavor flavor, int m) {
  return flavor == Flavor::Symmetric ? m * (m + 1) / 2 : m * (m - 1) / 2;
}

RationalVector to_flavor_coords(Flavor flavor, const RationalMatrix& x) {
  const int m = static_cast<int>(x.rows());
  RationalVector out(flavor_dim(flavor, m));
  Index c = 0;
  for (int i = 0; i < m; ++i)
    for (int j = flavor == Flavor::Symmetric ? i : i + 1; j < m; ++j) out(c++) = x(i, j);
  return out;
}

RationalMatrix from_flavor_coords(Flavor flavor, int m, const RationalVector& coords) {
  if (coords.size() != flavor_dim(flavor, m))
    throw std::invalid_argument("from_flavor_coords: size mismatch");
  RationalMatrix x = RationalMatrix::Zero(m, m);
  Index c = 0;
  for (int i = 0; i < m; ++i)
    for (int j = flavor == Flavor::Symmetric ? i : i + 1; j < m; ++j) {
      x(i, j) = coords(c);
      x(j, i) = flavor == Flavor::Symmetric ? coords(c) : Rational(-coords(c));
      ++c;
    }
  return x;
}

bool has_flavor(const RationalMatrix& x, Flavor flavor) {
  if (x.rows() != x.cols()) return false;
  return flavor == Flavor::Symmetric ? x == x.transpose() : x == RationalMatrix(-x.transpose());
}

Rational trace_pairing(const RationalMatrix& a, const RationalMatrix& b) {
  return a.cwiseProduct(b).sum();
}

bool conormal_condition(const RationalMatrix& x, const RationalMatrix& c) {
  if (x.rows() != x.cols() || c.rows() != x.rows() || c.cols() != x.cols())
    throw std::invalid_argument("conormal_condition: shape mismatch");
  const bool sym = has_flavor(x, Flavor::Symmetric) && has_flavor(c, Flavor::Symmetric);
  const bool skew = has_flavor(x, Flavor::Skew) && has_flavor(c, Flavor::Skew);
  if (!sym && !skew) throw std::invalid_argument("conormal_condition: flavor mismatch");
  return (x * c).isZero();
}

Subspace tangent_space_at(const RationalMatrix& x, Flavor flavor) {
  if (!has_flavor(x, flavor)) throw std::invalid_argument("tangent_space_at: flavor mismatch");
  const int m = static_cast<int>(x.rows());
  RationalMatrix gens(flavor_dim(flavor, m), m * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      RationalMatrix y = RationalMatrix::Zero(m, m);
      y(a, b) = 1;
      gens.col(a * m + b) = to_flavor_coords(flavor, y * x + x * y.transpose());
    }
  return Subspace::span(gens);
}

Subspace conormal_solutions(const RationalMatrix& x, Flavor flavor) {
  if (!has_flavor(x, flavor)) throw std::invalid_argument("conormal_solutions: flavor mismatch");
  const int m = static_cast<int>(x.rows());
  const int d = flavor_dim(flavor, m);
  // column c holds vec(x · basis_c)
  RationalMatrix system(m * m, d);
  for (int c = 0; c < d; ++c) {
    RationalVector e = RationalVector::Zero(d);
    e(c) = 1;
    const RationalMatrix prod = x * from_flavor_coords(flavor, m, e);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) system(i * m + j, c) = prod(i, j);
  }
  return solve_homogeneous(system);
}

RationalMatrix random_flavor_matrix(Flavor flavor, int m, int r, std::uint64_t seed,
                                    long height_bound) {
  StratumId{flavor, m, r}.validate();
  if (height_bound < 1) throw std::invalid_argument("random_flavor_matrix: height bound must be >= 1");
  RationalMatrix d = RationalMatrix::Zero(m, m);
  if (flavor == Flavor::Symmetric) {
    for (int i = 0; i < r; ++i) d(i, i) = 1;
  } else {
    for (int i = 0; i + 1 < r; i += 2) {
      d(i, i + 1) = 1;
      d(i + 1, i) = -1;
    }
  }
  for (std::uint64_t attempt = 0;; ++attempt) {
    const RationalMatrix g = random_matrix(m, m, mix_seed(seed, attempt), height_bound);
    if (rank(g) == m) return g * d * g.transpose();
  }
}

}  // namespace kcycle
