#include "kcycle/conormal.hpp"

#include <algorithm>

namespace kcycle {

GlpqLayout glpq_layout(const Setup& setup, const OrbitId& orbit) {
  if (setup.kind != Kind::GLpq) throw std::invalid_argument("GLpq layout on a non-GLpq setup");
  require_orbit(setup, orbit);
  GlpqLayout l;
  l.s = orbit.s();
  l.t = orbit.t();
  l.mixed = setup.k - l.s - l.t;
  l.overlap = l.mixed;
  l.pure_p = setup.p - l.s - l.mixed;
  l.pure_q = setup.q - l.t - l.mixed;
  return l;
}

RationalVector flatten(const RationalMatrix& covector) {
  RationalVector out(covector.size());
  for (Index i = 0; i < covector.rows(); ++i)
    for (Index j = 0; j < covector.cols(); ++j) out(i * covector.cols() + j) = covector(i, j);
  return out;
}

RationalMatrix unflatten(const RationalVector& coords, int k, int m) {
  if (coords.size() != static_cast<Index>(k) * m)
    throw std::invalid_argument("unflatten: size mismatch");
  RationalMatrix out(k, m);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < m; ++j) out(i, j) = coords(i * m + j);
  return out;
}

Subspace conormal_space(const Setup& setup, const BasePoint& base) {
  if (setup.kind != Kind::GLpq) return conormal_space_by_annihilator(setup, base);
  const auto l = glpq_layout(setup, base.orbit);
  const int m = setup.n - setup.k;
  std::vector<Index> coords;
  // U∩C^p <- pure C^q/U  and  U∩C^q <- pure C^p/U
  for (int i = 0; i < l.s; ++i)
    for (int j = 0; j < l.pure_q; ++j) coords.push_back((l.row_p() + i) * m + l.col_q() + j);
  for (int i = 0; i < l.t; ++i)
    for (int j = 0; j < l.pure_p; ++j) coords.push_back((l.row_q() + i) * m + l.col_p() + j);
  RationalMatrix basis = RationalMatrix::Zero(setup.k * m, static_cast<Index>(coords.size()));
  for (std::size_t c = 0; c < coords.size(); ++c) basis(coords[c], static_cast<Index>(c)) = 1;
  return Subspace::span(basis);
}

Subspace conormal_space_by_annihilator(const Setup& setup, const BasePoint& base) {
  const RationalMatrix tangent = orbit_tangent_vectors(setup, base);
  return solve_homogeneous(tangent.transpose());
}

int max_conormal_rank(const Setup& setup, const OrbitId& orbit) {
  if (setup.kind != Kind::GLpq)
    throw std::invalid_argument("max_conormal_rank is defined for GLpq only");
  require_orbit(setup, orbit);
  const int free = setup.n - setup.k;
  const int s = orbit.s(), t = orbit.t();
  return std::min(s, free - setup.p + s) + std::min(t, free - setup.q + t);
}

RationalVector random_element(const Subspace& space, std::uint64_t seed,
                              long height_bound) {
  const RationalMatrix coeffs = random_matrix(space.dim(), 1, seed, height_bound);
  return space.basis() * coeffs.col(0);
}

ConormalVector sample_conormal(const Setup& setup, const BasePoint& base,
                               std::uint64_t seed, SamplingOptions options) {
  const auto space = conormal_space(setup, base);
  if (space.dim() == 0)
    throw std::invalid_argument("sample_conormal: conormal space of " +
                                base.orbit.label() + " is zero");
  const int k = setup.k, m = setup.n - setup.k;
  int target = 0;
  if (setup.kind == Kind::GLpq) {
    target = max_conormal_rank(setup, base.orbit);
  } else {
    // no closed formula: take the best of a few probe draws
    for (std::uint64_t probe = 0; probe < 4; ++probe) {
      const auto v = random_element(space, mix_seed(seed, 1000 + probe), options.height_bound);
      target = std::max(target, static_cast<int>(rank(unflatten(v, k, m))));
    }
  }
  for (int attempt = 0; attempt <= options.retries; ++attempt) {
    auto xi = unflatten(random_element(space, mix_seed(seed, attempt), options.height_bound), k, m);
    if (rank(xi) == target) return {base, std::move(xi)};
  }
  throw GenericityFailure("sample_conormal: generic rank " + std::to_string(target) +
                          " not reached for " + base.orbit.label());
}

}  // namespace kcycle
