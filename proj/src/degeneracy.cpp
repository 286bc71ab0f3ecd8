#include "kcycle/degeneracy.hpp"

#include <stdexcept>

namespace kcycle {

FormJ FormJ::antidiagonal(Flavor flavor, int n) {
  return {flavor, bilinear_form(flavor == Flavor::Symmetric ? Kind::SO : Kind::Sp, n)};
}

FormJ FormJ::for_kind(Kind kind, int n) {
  if (kind == Kind::GLpq) throw std::invalid_argument("GLpq has no invariant form");
  return antidiagonal(kind == Kind::SO ? Flavor::Symmetric : Flavor::Skew, n);
}

Chart Chart::standard(int n, int k) { return {RationalMatrix::Identity(n, n), k}; }

Chart Chart::second_family(int n) {
  if (n % 2 != 0) throw std::invalid_argument("second_family: n must be even");
  const int k = n / 2;
  Chart chart = standard(n, k);
  chart.frame.col(k - 1).swap(chart.frame.col(k));
  return chart;
}

RationalMatrix Chart::graph(const RationalMatrix& a) const {
  const Index n = frame.rows();
  if (a.rows() != n - k || a.cols() != k)
    throw std::invalid_argument("chart point must be (n-k)×k");
  RationalMatrix g(n, k);
  g << RationalMatrix::Identity(k, k), a;
  return frame * g;
}

namespace {

void require_wide(const FormJ& form, int k) {
  if (k < form.n() - k)
    throw std::invalid_argument("section needs k >= n-k; normalize the setup first");
}

}  // namespace

RationalMatrix section_value(const FormJ& form, const Chart& chart, const RationalMatrix& a) {
  require_wide(form, chart.k);
  const RationalMatrix g = chart.graph(a);
  return g.transpose() * form.matrix * g;
}

RationalMatrix section_value(const FormJ& form, const RationalMatrix& a, int k) {
  return section_value(form, Chart::standard(form.n(), k), a);
}

std::vector<RationalMatrix> section_differential(const FormJ& form, const Chart& chart,
                                                 const RationalMatrix& a) {
  require_wide(form, chart.k);
  const int n = form.n(), k = chart.k;
  const RationalMatrix g = chart.graph(a);
  std::vector<RationalMatrix> out;
  for (int r = 0; r < n - k; ++r)
    for (int c = 0; c < k; ++c) {
      RationalMatrix dot = RationalMatrix::Zero(n, k);
      dot(k + r, c) = 1;
      const RationalMatrix dg = chart.frame * dot;
      out.push_back(dg.transpose() * form.matrix * g + g.transpose() * form.matrix * dg);
    }
  return out;
}

Subspace section_differential_image(const FormJ& form, const Chart& chart,
                                    const RationalMatrix& a) {
  const auto gens = section_differential(form, chart, a);
  RationalMatrix cols(flavor_dim(form.flavor, chart.k), static_cast<Index>(gens.size()));
  for (std::size_t c = 0; c < gens.size(); ++c)
    cols.col(static_cast<Index>(c)) = to_flavor_coords(form.flavor, gens[c]);
  return Subspace::span(cols);
}

Subspace section_differential_image(const FormJ& form, const RationalMatrix& a, int k) {
  return section_differential_image(form, Chart::standard(form.n(), k), a);
}

Subspace transversality_obstructions(const FormJ& form, const Chart& chart,
                                     const RationalMatrix& a, bool perpendicular_to_section) {
  const int k = chart.k;
  const int d = flavor_dim(form.flavor, k);
  const RationalMatrix x = section_value(form, chart, a);
  std::vector<RationalMatrix> basis;
  for (int c = 0; c < d; ++c) {
    RationalVector e = RationalVector::Zero(d);
    e(c) = 1;
    basis.push_back(from_flavor_coords(form.flavor, k, e));
  }
  std::vector<RationalVector> rows;
  if (perpendicular_to_section) {
    for (const auto& gen : section_differential(form, chart, a)) {
      RationalVector row(d);
      for (int c = 0; c < d; ++c) row(c) = trace_pairing(basis[c], gen);
      rows.push_back(row);
    }
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      RationalVector row(d);
      for (int c = 0; c < d; ++c) row(c) = x.row(i).dot(basis[c].col(j));
      rows.push_back(row);
    }
  RationalMatrix system(static_cast<Index>(rows.size()), d);
  for (std::size_t r = 0; r < rows.size(); ++r)
    system.row(static_cast<Index>(r)) = rows[r].transpose();
  return solve_homogeneous(system);
}

bool verify_transversality(const FormJ& form, const Chart& chart, const RationalMatrix& a) {
  return transversality_obstructions(form, chart, a).dim() == 0;
}

bool verify_transversality(const FormJ& form, const RationalMatrix& a, int k) {
  return verify_transversality(form, Chart::standard(form.n(), k), a);
}

TransversalityTally transversality_suite(const Setup& setup, int points, std::uint64_t seed,
                                         long height_bound) {
  if (setup.kind == Kind::GLpq) throw std::invalid_argument("transversality needs Sp or SO");
  const auto ns = normalize(setup).setup;
  const auto form = FormJ::for_kind(ns.kind, ns.n);
  std::vector<Chart> charts{Chart::standard(ns.n, ns.k)};
  if (ns.has_split()) charts.push_back(Chart::second_family(ns.n));
  TransversalityTally tally{ns};
  tally.charts = static_cast<int>(charts.size());
  for (std::size_t c = 0; c < charts.size(); ++c)
    for (int i = 0; i < points; ++i) {
      const auto a = random_matrix(ns.n - ns.k, ns.k,
                                   mix_seed(mix_seed(seed, c), static_cast<std::uint64_t>(i)),
                                   height_bound);
      ++tally.points;
      if (verify_transversality(form, charts[c], a)) {
        ++tally.transversal;
      } else if (!tally.counterexample) {
        tally.counterexample = a;
      }
    }
  return tally;
}

CharacteristicCycle pullback_cc(const Setup& setup, const OrbitId& orbit) {
  if (setup.kind == Kind::GLpq) throw std::invalid_argument("pullback_cc needs Sp or SO");
  require_orbit(setup, orbit);
  const auto norm = normalize(setup);
  const auto& ns = norm.setup;
  const auto target = relabel_orbit(orbit, norm);
  const Flavor flavor = ns.kind == Kind::SO ? Flavor::Symmetric : Flavor::Skew;
  const int k = ns.k;
  // the constant (2k-n)-block keeps rank s(A) >= 2k-n on the whole chart
  const int floor_rank = 2 * k - ns.n;

  const auto table = cc_table(flavor, k, k - target.radical_dim());
  CharacteristicCycle cc{orbit, {}};
  auto add = [&](const OrbitId& o, int mult) {
    if (closure_leq(ns, o, target)) cc.terms[restore_orbit(o, norm)] += mult;
  };
  for (const auto& [stratum, mult] : table.terms) {
    if (stratum.rank < floor_rank) continue;
    const int j = k - stratum.rank;
    if (ns.has_split() && j == k) {
      // s^{-1}(O_0) is the disjoint union of the two closed orbits
      add(OrbitId::split(k, 1), mult);
      add(OrbitId::split(k, -1), mult);
    } else {
      add(OrbitId::radical(j), mult);
    }
  }
  return cc;
}

}  // namespace kcycle
