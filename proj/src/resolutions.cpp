#include "kcycle/resolutions.hpp"

namespace kcycle {

std::string_view to_string(ResolutionKind kind) {
  switch (kind) {
    case ResolutionKind::Z: return "Z";
    case ResolutionKind::Ztilde: return "Ztilde";
    case ResolutionKind::Zi: return "Zi";
  }
  return "?";
}

ResolutionKind applicable_resolution(const Setup& setup) {
  if (setup.kind != Kind::GLpq) return ResolutionKind::Zi;
  return setup.n - setup.k >= setup.p ? ResolutionKind::Z : ResolutionKind::Ztilde;
}

namespace {

struct Blocks {
  GlpqLayout layout;
  RationalMatrix h;  // U∩C^p rows, pure C^q/U columns
  RationalMatrix l;  // U∩C^q rows, pure C^p/U columns
};

Blocks extract_blocks(const Setup& setup, const ConormalVector& xi, int s, int t) {
  if (setup.kind != Kind::GLpq) throw std::invalid_argument("membership test needs GLpq");
  const auto l = glpq_layout(setup, xi.base.orbit);
  if (xi.matrix.rows() != setup.k || xi.matrix.cols() != setup.n - setup.k)
    throw std::invalid_argument("covector has the wrong shape for this chart");
  if (s < 0 || t < 0 || s > l.s || t > l.t)
    throw std::invalid_argument("resolution index must lie below the stratum");
  Blocks b{l, xi.matrix.block(l.row_p(), l.col_q(), l.s, l.pure_q),
           xi.matrix.block(l.row_q(), l.col_p(), l.t, l.pure_p)};
  RationalMatrix rest = xi.matrix;
  rest.block(l.row_p(), l.col_q(), l.s, l.pure_q).setZero();
  rest.block(l.row_q(), l.col_p(), l.t, l.pure_p).setZero();
  if (!rest.isZero()) throw std::invalid_argument("covector is not conormal in this chart");
  return b;
}

// First `dim` basis vectors of span(generators | identity).
RationalMatrix padded_span(const RationalMatrix& generators, int dim) {
  const Index rows = generators.rows();
  RationalMatrix joined(rows, generators.cols() + rows);
  joined << generators, RationalMatrix::Identity(rows, rows);
  return Subspace::span(joined).basis().leftCols(dim);
}

// Plane-coordinate vectors supported on rows [offset, offset+block) mapped to C^n.
Subspace lift_rows(const BasePoint& base, const RationalMatrix& coords, int offset) {
  RationalMatrix full = RationalMatrix::Zero(base.k, coords.cols());
  full.middleRows(offset, coords.rows()) = coords;
  return Subspace::span(base.plane_basis() * full);
}

}  // namespace

Membership kernel_membership_z(const Setup& setup, const ConormalVector& xi, int s, int t) {
  const auto b = extract_blocks(setup, xi, s, t);
  Membership out;
  out.member = rank(b.h) <= s && rank(b.l) <= t;
  if (out.member) {
    out.witness = FiberPoint{lift_rows(xi.base, padded_span(b.h, s), b.layout.row_p()),
                             lift_rows(xi.base, padded_span(b.l, t), b.layout.row_q())};
  }
  return out;
}

Membership kernel_membership_ztilde(const Setup& setup, const ConormalVector& xi, int s,
                                    int t) {
  const auto b = extract_blocks(setup, xi, s, t);
  const int extra = b.layout.s - s;  // dim V/(U + C^p)
  Membership out;
  out.member = rank(b.h) <= b.layout.pure_q - extra && rank(b.l) <= t;
  if (!out.member) return out;
  const auto ker = kernel(b.h);
  const RationalMatrix pure_q =
      xi.base.complement_basis().middleCols(b.layout.col_q(), b.layout.pure_q);
  const int n = setup.n;
  RationalMatrix gens(n, setup.k + setup.p + extra);
  RationalMatrix cp = RationalMatrix::Zero(n, setup.p);
  cp.topRows(setup.p).setIdentity();
  gens << xi.base.plane_basis(), cp, pure_q * ker.basis().leftCols(extra);
  out.witness = FiberPoint{Subspace::span(gens),
                           lift_rows(xi.base, padded_span(b.l, t), b.layout.row_q())};
  return out;
}

namespace {

// Linear constraints on an unknown k×m block stored row-major at `offset`
// inside a vector of `width` unknowns.
class ConstraintBuilder {
 public:
  ConstraintBuilder(int k, int m, Index width) : k_(k), m_(m), width_(width) {}

  // every column of the block, read in plane coordinates via `plane`, lies in `target`
  void image_in(Index offset, const RationalMatrix& plane, const Subspace& target) {
    const RationalMatrix r = annihilator(target).basis().transpose() * plane;
    for (Index a = 0; a < r.rows(); ++a)
      for (int j = 0; j < m_; ++j) {
        RationalVector row = RationalVector::Zero(width_);
        for (int i = 0; i < k_; ++i) row(offset + i * m_ + j) = r(a, i);
        push(row);
      }
  }

  // block · quotient_vectors = 0
  void vanishes_on(Index offset, const RationalMatrix& quotient_vectors) {
    for (int i = 0; i < k_; ++i)
      for (Index c = 0; c < quotient_vectors.cols(); ++c) {
        RationalVector row = RationalVector::Zero(width_);
        for (int j = 0; j < m_; ++j) row(offset + i * m_ + j) = quotient_vectors(j, c);
        push(row);
      }
  }

  void push(const RationalVector& row) { rows_.push_back(row); }

  RationalMatrix matrix() const {
    RationalMatrix out(static_cast<Index>(rows_.size()), width_);
    for (std::size_t r = 0; r < rows_.size(); ++r)
      out.row(static_cast<Index>(r)) = rows_[r].transpose();
    return out;
  }

 private:
  int k_, m_;
  Index width_;
  std::vector<RationalVector> rows_;
};

Subspace coordinate_span(int n, int from, int to) {
  RationalMatrix m = RationalMatrix::Zero(n, to - from);
  for (int j = from; j < to; ++j) m(j, j - from) = 1;
  return Subspace::span(m);
}

}  // namespace

bool witness_is_valid(const Setup& setup, ResolutionKind kind, const ConormalVector& xi,
                      int s, int t, const FiberPoint& point) {
  const int n = setup.n, k = setup.k, m = n - k;
  const auto u = xi.base.plane();
  const auto cp = coordinate_span(n, 0, setup.p);
  const auto cq = coordinate_span(n, setup.p, n);
  const auto u_cp = intersect(u, cp);
  const auto u_cq = intersect(u, cq);

  // incidence
  if (point.w.dim() != t || !u_cq.contains(point.w)) return false;
  if (kind == ResolutionKind::Z) {
    if (point.v.dim() != s || !u_cp.contains(point.v)) return false;
  } else if (kind == ResolutionKind::Ztilde) {
    if (point.v.dim() != k + setup.p - s || !point.v.contains(sum(u, cp))) return false;
  } else {
    throw std::invalid_argument("witness_is_valid: GLpq resolutions only");
  }

  // unknowns: h (k×m), l (k×m), λ ; require h + l = λ ξ
  const Index width = 2 * k * m + 1;
  const Index h_at = 0, l_at = k * m, lambda_at = 2 * k * m;
  ConstraintBuilder cb(k, m, width);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < m; ++j) {
      RationalVector row = RationalVector::Zero(width);
      row(h_at + i * m + j) = 1;
      row(l_at + i * m + j) = 1;
      row(lambda_at) = -xi.matrix(i, j);
      cb.push(row);
    }
  const RationalMatrix plane = xi.base.plane_basis();
  const RationalMatrix inv = inverse(xi.base.frame);
  auto quotient = [&](const Subspace& s) -> RationalMatrix {
    return (inv * s.basis()).bottomRows(m);
  };
  if (kind == ResolutionKind::Z) {
    cb.image_in(h_at, plane, point.v);
    cb.vanishes_on(h_at, quotient(cp));
  } else {
    cb.image_in(h_at, plane, u_cp);
    cb.vanishes_on(h_at, quotient(point.v));
  }
  cb.image_in(l_at, plane, point.w);
  cb.vanishes_on(l_at, quotient(cq));

  const auto solutions = solve_homogeneous(cb.matrix());
  for (Index c = 0; c < solutions.dim(); ++c)
    if (solutions.basis()(lambda_at, c) != 0) return true;
  return false;
}

namespace {

std::uint64_t orbit_salt(const OrbitId& orbit) {
  return static_cast<std::uint64_t>(static_cast<int>(orbit.form())) * 1'000'000ULL +
         static_cast<std::uint64_t>(orbit.s()) * 1000ULL +
         static_cast<std::uint64_t>(orbit.t() + 1);
}

}  // namespace

MicrolocalVerdict verify_microlocal_empty(const Setup& setup, const OrbitId& target,
                                          const OrbitId& stratum, int trials,
                                          std::uint64_t seed) {
  if (setup.kind != Kind::GLpq)
    throw std::invalid_argument("microlocal verification is implemented for GLpq");
  if (target == stratum || !closure_leq(setup, stratum, target))
    throw std::invalid_argument("stratum must lie strictly below the target");
  const auto norm = normalize(setup);
  const auto& ns = norm.setup;
  const auto tgt = relabel_orbit(target, norm);
  const auto str = relabel_orbit(stratum, norm);

  MicrolocalVerdict verdict{target, stratum, applicable_resolution(ns)};
  verdict.within_strict_hypothesis = 2 * ns.k < ns.n;
  const auto base = base_point(ns, str);
  const std::uint64_t pair_seed = mix_seed(mix_seed(seed, orbit_salt(target)), orbit_salt(stratum));
  for (int trial = 0; trial < trials; ++trial) {
    const auto xi = sample_conormal(ns, base, mix_seed(pair_seed, static_cast<std::uint64_t>(trial)));
    const auto m = verdict.resolution == ResolutionKind::Z
                       ? kernel_membership_z(ns, xi, tgt.s(), tgt.t())
                       : kernel_membership_ztilde(ns, xi, tgt.s(), tgt.t());
    ++verdict.trials;
    if (m.member) {
      verdict.empty_in_all_trials = false;
      verdict.witness = m.witness;
      break;
    }
  }
  return verdict;
}

int fiber_dimension(const Setup& setup, ResolutionKind kind, const OrbitId& target,
                    const OrbitId& stratum) {
  if (!closure_leq(setup, stratum, target))
    throw std::invalid_argument("fiber_dimension: " + stratum.label() +
                                " is not in the closure of " + target.label());
  switch (kind) {
    case ResolutionKind::Z:
    case ResolutionKind::Ztilde: {
      if (setup.kind != Kind::GLpq) throw std::invalid_argument("Z/Ztilde need GLpq");
      const int s = target.s(), t = target.t(), s1 = stratum.s(), t1 = stratum.t();
      const int w = t * (t1 - t);  // Gr(t, U∩C^q)
      if (kind == ResolutionKind::Z) return s * (s1 - s) + w;  // Gr(s, U∩C^p)
      // V/(U+C^p) ranges over Gr(s1-s, n-k-p+s1)
      return (s1 - s) * (setup.n - setup.k - setup.p + s) + w;
    }
    case ResolutionKind::Zi: {
      if (setup.kind == Kind::GLpq) throw std::invalid_argument("Zi needs Sp or SO");
      const int i = target.radical_dim(), i1 = stratum.radical_dim();
      return i * (i1 - i);  // Gr(i, rad U)
    }
  }
  return 0;
}

SmallnessResult smallness(const Setup& setup, ResolutionKind kind, const OrbitId& target) {
  SmallnessResult out{target, kind};
  const int top = orbit_dimension(setup, target);
  for (const auto& orbit : enumerate_orbits(setup)) {
    if (orbit == target || !closure_leq(setup, orbit, target)) continue;
    StratumSmallness row{orbit, fiber_dimension(setup, kind, target, orbit),
                         top - orbit_dimension(setup, orbit)};
    row.ok = 2 * row.fiber_dim < row.codim;
    out.small = out.small && row.ok;
    out.strata.push_back(row);
  }
  return out;
}

bool is_small(const Setup& setup, ResolutionKind kind, const OrbitId& target) {
  return smallness(setup, kind, target).small;
}

}  // namespace kcycle
