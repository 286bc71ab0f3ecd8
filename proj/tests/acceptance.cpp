// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails or overruns its time budget.

#include "kcycle/cli.hpp"
#include "kcycle/document.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace kcycle;

namespace {

constexpr int kMaxN = 8;
constexpr std::uint64_t kSeed = 42;

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Independent statement of the classification: every cycle is a single term
// except for SO at odd, non-closed radical dimension, which adds the orbit
// one step down (two split orbits when that step lands on the middle).
std::set<std::string> expected_terms(const Setup& s, const OrbitId& orbit) {
  std::set<std::string> out{orbit.label()};
  if (s.kind != Kind::SO || orbit.form() != OrbitId::Form::Radical) return out;
  const int i = orbit.radical_dim();
  const int closed = std::min(s.k, s.n - s.k);
  if (i % 2 == 1 && i < closed) {
    if (s.n == 2 * s.k && i == s.k - 1) {
      out.insert("rad" + std::to_string(s.k) + "+");
      out.insert("rad" + std::to_string(s.k) + "-");
    } else {
      out.insert("rad" + std::to_string(i + 1));
    }
  }
  return out;
}

std::vector<std::string> setup_args(const Setup& s) {
  std::vector<std::string> a{"--kind", std::string(to_string(s.kind)), "--n", std::to_string(s.n),
                             "--k", std::to_string(s.k)};
  if (s.kind == Kind::GLpq) {
    a.insert(a.end(), {"--p", std::to_string(s.p), "--q", std::to_string(s.q)});
  }
  return a;
}

Outcome theorem_table() {
  int setups = 0, cycles = 0, reducible = 0, triple = 0;
  for (const auto& s : all_setups(kMaxN)) {
    std::vector<std::string> args{"cc", "--format", "json"};
    for (auto& a : setup_args(s)) args.push_back(a);
    std::ostringstream out, err;
    if (run_cli(args, out, err) != 0) return {false, describe(s) + ": " + err.str()};
    const auto doc = parse_document(out.str());
    ++setups;
    for (const auto& cycle : doc["payload"]["cycles"]) {
      const auto orbit = *OrbitId::parse(cycle["orbit"].get<std::string>());
      std::set<std::string> got;
      for (const auto& term : cycle["terms"]) {
        if (term["multiplicity"] != 1)
          return {false, describe(s) + " " + orbit.label() + ": multiplicity != 1"};
        got.insert(term["orbit"].get<std::string>());
      }
      if (got != expected_terms(s, orbit))
        return {false, describe(s) + " " + orbit.label() + ": unexpected terms"};
      ++cycles;
      reducible += got.size() > 1;
      triple += got.size() == 3;
    }
  }
  return {true, std::to_string(setups) + " setups, " + std::to_string(cycles) + " cycles, " +
                    std::to_string(reducible) + " reducible, " + std::to_string(triple) +
                    " with three terms"};
}

Outcome crosscheck_agreement() {
  int orbits = 0;
  for (Kind kind : {Kind::Sp, Kind::SO})
    for (const auto& s : all_setups(kMaxN, kind))
      for (const auto& orbit : enumerate_orbits(s)) {
        if (characteristic_cycle(s, orbit) != pullback_cc(s, orbit))
          return {false, describe(s) + " " + orbit.label()};
        ++orbits;
      }
  return {true, std::to_string(orbits) + " orbits agree"};
}

Outcome microlocal_emptiness() {
  int pairs = 0, boundary = 0;
  for (const auto& s : all_setups(kMaxN, Kind::GLpq)) {
    const auto orbits = enumerate_orbits(s);
    for (const auto& target : orbits)
      for (const auto& stratum : orbits) {
        if (stratum == target || !closure_leq(s, stratum, target)) continue;
        const auto v = verify_microlocal_empty(s, target, stratum, 20, kSeed);
        if (!v.empty_in_all_trials)
          return {false, describe(s) + " " + target.label() + " over " + stratum.label()};
        ++pairs;
        boundary += !v.within_strict_hypothesis;
      }
  }
  return {true, std::to_string(pairs) + " pairs empty (" + std::to_string(boundary) +
                    " on the boundary n = 2k)"};
}

Outcome smallness_claims() {
  int checks = 0;
  for (const auto& s : all_setups(kMaxN, Kind::GLpq)) {
    const auto ns = normalize(s).setup;
    for (const auto& orbit : enumerate_orbits(ns)) {
      if (ns.n - ns.k >= ns.p) {
        if (!is_small(ns, ResolutionKind::Z, orbit))
          return {false, describe(ns) + " Z over " + orbit.label()};
        ++checks;
      }
      if (ns.n - ns.k <= ns.p) {
        if (!is_small(ns, ResolutionKind::Ztilde, orbit))
          return {false, describe(ns) + " Ztilde over " + orbit.label()};
        ++checks;
      }
    }
  }
  return {true, std::to_string(checks) + " claimed resolutions small"};
}

Outcome transversality() {
  int points = 0, charts = 0;
  for (Kind kind : {Kind::Sp, Kind::SO})
    for (const auto& s : all_setups(kMaxN, kind)) {
      const auto tally = transversality_suite(s, 100, kSeed);
      if (!tally.passed()) return {false, describe(s)};
      if (tally.setup.has_split() && tally.charts != 2)
        return {false, describe(s) + ": second family chart missing"};
      points += tally.points;
      charts += tally.charts;
    }
  return {true, std::to_string(points) + " chart points over " + std::to_string(charts) +
                    " charts transversal"};
}

Outcome matrix_strata() {
  int samples = 0, pairs = 0, conormal_pairs = 0;
  for (Flavor flavor : {Flavor::Symmetric, Flavor::Skew})
    for (int m = 1; m <= 5; ++m) {
      const int d = flavor_dim(flavor, m);
      for (int r = 0; r <= m; ++r) {
        if (flavor == Flavor::Skew && r % 2) continue;
        const auto x = random_flavor_matrix(flavor, m, r, mix_seed(kSeed, m * 10 + r));
        if (rank(x) != r) return {false, "random matrix has the wrong rank"};
        const auto tangent = tangent_space_at(x, flavor);
        const auto solutions = conormal_solutions(x, flavor);
        if (tangent.dim() + solutions.dim() != d)
          return {false, std::string(to_string(flavor)) + " m=" + std::to_string(m) +
                             " r=" + std::to_string(r) + ": dimensions do not add up"};
        ++samples;
      }
      // perpendicularity to every generator Y x + x Yᵀ of the tangent space
      for (int trial = 0; trial < 50; ++trial) {
        const std::uint64_t seed = mix_seed(kSeed, 1000 + 100 * m + trial);
        int r = static_cast<int>(seed % (m + 1));
        if (flavor == Flavor::Skew) r -= r % 2;
        const auto x = random_flavor_matrix(flavor, m, r, seed);
        RationalMatrix y;
        const auto solutions = conormal_solutions(x, flavor);
        if (trial % 2 == 0 && solutions.dim() > 0) {
          y = from_flavor_coords(flavor, m, random_element(solutions, seed, 50));
        } else {
          y = from_flavor_coords(flavor, m, random_matrix(d, 1, seed, 50).col(0));
        }
        bool perpendicular = true;
        for (int a = 0; a < m && perpendicular; ++a)
          for (int b = 0; b < m && perpendicular; ++b) {
            RationalMatrix e = RationalMatrix::Zero(m, m);
            e(a, b) = 1;
            perpendicular = trace_pairing(y, RationalMatrix(e * x + x * e.transpose())) == 0;
          }
        const bool condition = conormal_condition(x, y);
        if (condition != perpendicular) return {false, "conormal condition disagrees"};
        ++pairs;
        conormal_pairs += condition;
      }
    }
  return {true, std::to_string(samples) + " dimension checks, " + std::to_string(pairs) +
                    " pairs (" + std::to_string(conormal_pairs) + " conormal)"};
}

Outcome structural() {
  int orbits = 0, ranks = 0;
  for (const auto& s : all_setups(kMaxN))
    for (const auto& orbit : enumerate_orbits(s)) {
      const auto base = base_point(s, orbit);
      const auto conormal = conormal_space(s, base);
      if (conormal.dim() + orbit_dimension(s, orbit) != s.grassmannian_dim())
        return {false, describe(s) + " " + orbit.label() + ": conormal dimension"};
      ++orbits;
      if (s.kind != Kind::GLpq) continue;
      Index best = 0;
      for (int trial = 0; trial < 50; ++trial) {
        const auto coords = random_element(conormal, mix_seed(kSeed, trial), 100);
        best = std::max(best, rank(unflatten(coords, s.k, s.n - s.k)));
      }
      if (best != max_conormal_rank(s, orbit))
        return {false, describe(s) + " " + orbit.label() + ": generic rank"};
      ++ranks;
    }
  return {true, std::to_string(orbits) + " orbits, " + std::to_string(ranks) +
                    " generic ranks confirmed"};
}

Outcome determinism() {
  std::string first;
  for (int run = 0; run < 2; ++run) {
    std::ostringstream out, err;
    const int code = run_cli({"verify", "--suite", "all", "--seed", "42"}, out, err);
    if (code != 0) return {false, "verify exited with " + std::to_string(code)};
    if (run == 0) first = out.str();
    else if (out.str() != first) return {false, "reports differ"};
  }
  return {true, std::to_string(first.size()) + " identical bytes"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "theorem table", 10, theorem_table},
      {2, "cross-check agreement", 10, crosscheck_agreement},
      {3, "microlocal emptiness", 60, microlocal_emptiness},
      {4, "smallness", 30, smallness_claims},
      {5, "transversality", 60, transversality},
      {6, "matrix strata", 60, matrix_strata},
      {7, "structural invariants", 60, structural},
      {8, "determinism", 60, determinism},
  };
  bool all_ok = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = elapsed <= c.budget_seconds;
    const bool ok = outcome.ok && in_time;
    all_ok = all_ok && ok;
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << "criterion " << c.id << " (" << c.name << "): "
         << (ok ? "PASS" : "FAIL") << "  " << outcome.detail << "  [" << elapsed << " s of "
         << c.budget_seconds << " s]";
    if (!in_time) line << " over budget";
    std::cout << line.str() << std::endl;
  }
  return all_ok ? 0 : 1;
}
