#include "kcycle/ccengine.hpp"

#include <algorithm>

namespace kcycle {

bool CharacteristicCycle::well_formed(const Setup& setup) const {
  auto it = terms.find(target);
  if (it == terms.end() || it->second != 1) return false;
  return std::all_of(terms.begin(), terms.end(), [&](const auto& term) {
    return term.second >= 0 && is_valid_orbit(setup, term.first) &&
           closure_leq(setup, term.first, target);
  });
}

std::string CharacteristicCycle::to_string() const {
  std::string out;
  for (const auto& [orbit, mult] : terms) {
    if (!out.empty()) out += " + ";
    if (mult != 1) out += std::to_string(mult) + "*";
    out += "[" + orbit.label() + "]";
  }
  return out;
}

CharacteristicCycle characteristic_cycle(const Setup& setup, const OrbitId& orbit) {
  require_orbit(setup, orbit);
  CharacteristicCycle cc{orbit, {{orbit, 1}}};
  if (setup.kind != Kind::SO || orbit.form() == OrbitId::Form::Split) return cc;
  const int i = orbit.radical_dim();
  // the closed orbit sits at radical dimension min(k, n-k)
  const int closed = std::min(setup.k, setup.n - setup.k);
  if (i % 2 == 0 || i == closed) return cc;
  if (setup.has_split() && i + 1 == setup.k) {
    cc.terms[OrbitId::split(setup.k, 1)] = 1;
    cc.terms[OrbitId::split(setup.k, -1)] = 1;
  } else {
    cc.terms[OrbitId::radical(i + 1)] = 1;
  }
  return cc;
}

bool VerificationReport::cycles_agree() const {
  return std::all_of(orbits.begin(), orbits.end(), [](const auto& o) { return o.agree; });
}

bool VerificationReport::microlocal_empty() const {
  return std::all_of(microlocal.begin(), microlocal.end(),
                     [](const auto& v) { return v.empty_in_all_trials; });
}

bool VerificationReport::resolutions_small() const {
  return std::all_of(smallness.begin(), smallness.end(), [](const auto& s) { return s.small; });
}

std::vector<SmallnessResult> applicable_smallness(const Setup& setup) {
  if (setup.kind != Kind::GLpq) throw std::invalid_argument("applicable_smallness needs GLpq");
  const auto norm = normalize(setup);
  const auto kind = applicable_resolution(norm.setup);
  std::vector<SmallnessResult> out;
  for (const auto& orbit : enumerate_orbits(setup)) {
    auto result = smallness(norm.setup, kind, relabel_orbit(orbit, norm));
    result.target = orbit;
    for (auto& row : result.strata) row.stratum = restore_orbit(row.stratum, norm);
    out.push_back(std::move(result));
  }
  return out;
}

VerificationReport cross_check(const Setup& setup, int trials, std::uint64_t seed) {
  VerificationReport report{setup};
  const auto orbits = enumerate_orbits(setup);
  for (const auto& orbit : orbits) {
    OrbitCheck check{orbit, characteristic_cycle(setup, orbit)};
    if (setup.kind != Kind::GLpq) {
      check.pullback = pullback_cc(setup, orbit);
      check.agree = *check.pullback == check.theorem;
    }
    report.orbits.push_back(std::move(check));
  }
  if (setup.kind == Kind::GLpq) {
    for (const auto& target : orbits)
      for (const auto& stratum : orbits)
        if (stratum != target && closure_leq(setup, stratum, target))
          report.microlocal.push_back(verify_microlocal_empty(setup, target, stratum, trials, seed));
    report.smallness = applicable_smallness(setup);
  }
  return report;
}

std::vector<Setup> all_setups(int max_n, Kind kind) {
  std::vector<Setup> out;
  for (int n = 2; n <= max_n; ++n)
    for (int k = 1; k < n; ++k) {
      if (kind == Kind::GLpq) {
        for (int p = 1; p < n; ++p) out.push_back(Setup::glpq(n, k, p, n - p));
      } else {
        Setup s{kind, n, k};
        if (s.valid()) out.push_back(s);
      }
    }
  return out;
}

std::vector<Setup> all_setups(int max_n) {
  std::vector<Setup> out;
  for (Kind kind : {Kind::GLpq, Kind::Sp, Kind::SO}) {
    auto part = all_setups(max_n, kind);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace kcycle
