#include "kcycle/cli.hpp"

#include "kcycle/document.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace kcycle {

namespace {

struct Options {
  std::string kind;
  int n = -1, k = -1, p = -1, q = -1;
  std::string format;
  std::string orbit;
  std::string suite = "all";
  int trials = -1;
  std::uint64_t seed = 0;
  int max_n = 6;
  std::string out_file;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::optional<Setup> setup_from(const Options& o, bool required) {
  const bool any = !o.kind.empty() || o.n >= 0 || o.k >= 0 || o.p >= 0 || o.q >= 0;
  if (!any && !required) return std::nullopt;
  if (o.kind.empty()) throw UsageError("--kind is required");
  if (o.n < 0) throw UsageError("--n is required");
  if (o.k < 0) throw UsageError("--k is required");
  const auto kind = parse_kind(o.kind);
  if (!kind) throw UsageError("unknown --kind " + o.kind);
  Setup s{*kind, o.n, o.k};
  if (*kind == Kind::GLpq) {
    if (o.p < 0 || o.q < 0) throw UsageError("--p and --q are required for glpq");
    s.p = o.p;
    s.q = o.q;
  } else if (o.p >= 0 || o.q >= 0) {
    throw UsageError("--p/--q apply to glpq only");
  }
  s.validate();
  return s;
}

OrbitId orbit_from(const Setup& setup, const std::string& text) {
  auto orbit = OrbitId::parse(text);
  // accept the literal spelling radk+ / radk- for the split orbits
  if (!orbit && (text == "radk+" || text == "radk-"))
    orbit = OrbitId::split(setup.k, text.back() == '+' ? 1 : -1);
  if (!orbit) throw UsageError("cannot parse orbit label " + text);
  require_orbit(setup, *orbit);
  return *orbit;
}

// ---- orbits / poset / cc -------------------------------------------------

Json orbits_document(const Setup& setup, std::string& text) {
  const auto poset = closure_poset(setup);
  const int top = setup.grassmannian_dim();
  Json list = Json::array();
  std::ostringstream t;
  t << describe(setup) << ": " << poset.orbits.size() << " orbits\n";
  for (std::size_t i = 0; i < poset.orbits.size(); ++i) {
    const int dim = poset.dimensions[i];
    list.push_back(Json{{"label", poset.orbits[i].label()},
                        {"dimension", dim},
                        {"codimension", top - dim}});
    t << "  " << poset.orbits[i].label() << "  dim " << dim << "  codim " << top - dim << "\n";
  }
  text = t.str();
  return make_document("orbits", setup_json(setup), Json{{"orbits", std::move(list)}});
}

Json poset_document(const Setup& setup, std::string& text, std::string& dot) {
  const auto poset = closure_poset(setup);
  Json nodes = Json::array(), covers = Json::array();
  std::ostringstream t, d;
  t << describe(setup) << ": closure order, covering relations lower < upper\n";
  d << "digraph closure {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < poset.orbits.size(); ++i) {
    const auto label = poset.orbits[i].label();
    nodes.push_back(Json{{"label", label}, {"dimension", poset.dimensions[i]}});
    d << "  \"" << label << "\" [label=\"" << label << "\\ndim " << poset.dimensions[i]
      << "\"];\n";
  }
  for (const auto& [lo, hi] : poset.covers) {
    const auto a = poset.orbits[lo].label(), b = poset.orbits[hi].label();
    covers.push_back(Json{{"lower", a}, {"upper", b}});
    t << "  " << a << " < " << b << "\n";
    d << "  \"" << a << "\" -> \"" << b << "\";\n";
  }
  d << "}\n";
  text = t.str();
  dot = d.str();
  return make_document("poset", setup_json(setup),
                       Json{{"orbits", std::move(nodes)}, {"covers", std::move(covers)}});
}

Json cc_document(const Setup& setup, const std::optional<OrbitId>& only, std::string& text) {
  std::vector<OrbitId> orbits = only ? std::vector<OrbitId>{*only} : enumerate_orbits(setup);
  Json cycles = Json::array();
  std::ostringstream t;
  for (const auto& orbit : orbits) {
    const auto cc = characteristic_cycle(setup, orbit);
    cycles.push_back(cycle_json(cc));
    t << "CC(L_" << orbit.label() << ") = " << cc.to_string() << "\n";
  }
  text = t.str();
  return make_document("cc", setup_json(setup), Json{{"cycles", std::move(cycles)}});
}

// ---- verify ----------------------------------------------------------------

struct SuiteOutcome {
  Json json;
  bool failed = false;
};

std::string status(bool ok) { return ok ? "pass" : "fail"; }

Json not_applicable() { return Json{{"status", "not_applicable"}}; }

SuiteOutcome microlocal_suite(const Setup& setup, const std::vector<MicrolocalVerdict>& verdicts) {
  bool ok = true, strict = true;
  Json pairs = Json::array();
  for (const auto& v : verdicts) {
    ok = ok && v.empty_in_all_trials;
    strict = strict && v.within_strict_hypothesis;
    pairs.push_back(verdict_json(v));
  }
  const auto ns = normalize(setup).setup;
  return {Json{{"status", status(ok)},
               {"resolution", std::string(to_string(applicable_resolution(ns)))},
               {"strict_hypothesis", strict},
               {"pairs", std::move(pairs)}},
          !ok};
}

SuiteOutcome smallness_suite(const Setup& setup) {
  if (setup.kind != Kind::GLpq) {
    const auto ns = normalize(setup).setup;
    Json targets = Json::array();
    for (const auto& orbit : enumerate_orbits(ns))
      targets.push_back(smallness_json(smallness(ns, ResolutionKind::Zi, orbit)));
    return {Json{{"status", "recorded"}, {"normalized_k", ns.k},
                 {"resolutions", Json::array({Json{{"kind", "Zi"},
                                                   {"claimed_small", false},
                                                   {"targets", std::move(targets)}}})}},
            false};
  }
  const auto norm = normalize(setup);
  const auto& ns = norm.setup;
  bool ok = true;
  Json resolutions = Json::array();
  for (auto kind : {ResolutionKind::Z, ResolutionKind::Ztilde}) {
    const bool claimed = kind == ResolutionKind::Z ? ns.n - ns.k >= ns.p : ns.n - ns.k <= ns.p;
    bool all_small = true;
    Json targets = Json::array();
    for (const auto& orbit : enumerate_orbits(setup)) {
      auto result = smallness(ns, kind, relabel_orbit(orbit, norm));
      result.target = orbit;
      for (auto& row : result.strata) row.stratum = restore_orbit(row.stratum, norm);
      all_small = all_small && result.small;
      targets.push_back(smallness_json(result));
    }
    if (claimed && !all_small) ok = false;
    resolutions.push_back(Json{{"kind", std::string(to_string(kind))},
                               {"claimed_small", claimed},
                               {"all_small", all_small},
                               {"targets", std::move(targets)}});
  }
  return {Json{{"status", status(ok)}, {"resolutions", std::move(resolutions)}}, !ok};
}

SuiteOutcome transversality_suite_json(const Setup& setup, int points, std::uint64_t seed) {
  if (setup.kind == Kind::GLpq) return {not_applicable(), false};
  const auto tally = transversality_suite(setup, points, seed);
  Json j{{"status", status(tally.passed())}};
  j.update(tally_json(tally));
  return {std::move(j), !tally.passed()};
}

SuiteOutcome crosscheck_suite(const VerificationReport& report) {
  Json orbits = Json::array();
  for (const auto& check : report.orbits) {
    Json o{{"orbit", check.orbit.label()}, {"theorem", cycle_json(check.theorem)}};
    if (check.pullback) o["pullback"] = cycle_json(*check.pullback);
    o["agree"] = check.agree;
    orbits.push_back(std::move(o));
  }
  const bool ok = report.passed();
  return {Json{{"status", status(ok)},
               {"cycles_agree", report.cycles_agree()},
               {"microlocal_empty", report.microlocal_empty()},
               {"resolutions_small", report.resolutions_small()},
               {"orbits", std::move(orbits)}},
          !ok};
}

Json verify_setup(const Setup& setup, const std::string& suite, int trials, std::uint64_t seed,
                  bool& failed, std::ostream& text) {
  const bool all = suite == "all";
  const int micro_trials = trials >= 0 ? trials : 20;
  const int chart_points = trials >= 0 ? trials : 100;
  std::optional<VerificationReport> report;
  if (all || suite == "crosscheck") report = cross_check(setup, micro_trials, seed);

  Json suites;
  auto record = [&](const char* name, SuiteOutcome outcome) {
    failed = failed || outcome.failed;
    text << describe(setup) << " " << name << ": " << outcome.json["status"].get<std::string>()
         << "\n";
    suites[name] = std::move(outcome.json);
  };
  if (all || suite == "microlocal") {
    if (setup.kind != Kind::GLpq) {
      record("microlocal", {not_applicable(), false});
    } else if (report) {
      record("microlocal", microlocal_suite(setup, report->microlocal));
    } else {
      record("microlocal", microlocal_suite(setup, cross_check(setup, micro_trials, seed).microlocal));
    }
  }
  if (all || suite == "transversality")
    record("transversality", transversality_suite_json(setup, chart_points, seed));
  if (all || suite == "smallness") record("smallness", smallness_suite(setup));
  if (report) record("crosscheck", crosscheck_suite(*report));
  return Json{{"setup", setup_json(setup)}, {"suites", std::move(suites)}};
}

// ---- driver -----------------------------------------------------------------

void emit(const std::string& body, const Options& o, std::ostream& out) {
  if (o.out_file.empty()) {
    out << body;
    return;
  }
  std::ofstream file(o.out_file, std::ios::binary);
  if (!file) throw UsageError("cannot open " + o.out_file + " for writing");
  file << body;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Characteristic cycles of K-orbits on Grassmannians", "kcycle"};
  app.require_subcommand(1, 1);

  auto setup_flags = [&](CLI::App* sub) {
    sub->add_option("--kind", o.kind, "glpq | sp | so")
        ->check(CLI::IsMember({"glpq", "sp", "so"}));
    sub->add_option("--n", o.n, "ambient dimension");
    sub->add_option("--k", o.k, "plane dimension");
    sub->add_option("--p", o.p, "dimension of C^p (glpq)");
    sub->add_option("--q", o.q, "dimension of C^q (glpq)");
    sub->add_option("--out", o.out_file, "write the document to FILE");
  };
  auto* orbits = app.add_subcommand("orbits", "list orbits with dimensions");
  setup_flags(orbits);
  orbits->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
  auto* poset = app.add_subcommand("poset", "closure order and its Hasse diagram");
  setup_flags(poset);
  poset->add_option("--format", o.format)->check(CLI::IsMember({"text", "json", "dot"}));
  auto* cc = app.add_subcommand("cc", "characteristic cycles");
  setup_flags(cc);
  cc->add_option("--orbit", o.orbit, "q(s,t) | rad{i} | rad{k}+ | rad{k}-");
  cc->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
  auto* verify = app.add_subcommand("verify", "run verification suites");
  setup_flags(verify);
  verify->add_option("--suite", o.suite)
      ->check(CLI::IsMember({"microlocal", "transversality", "smallness", "crosscheck", "all"}));
  verify->add_option("--trials", o.trials, "trials per check (default 20 microlocal, 100 charts)")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", o.seed);
  verify->add_option("--max-n", o.max_n, "sweep all setups up to this n when no setup is given")
      ->check(CLI::Range(2, 12));
  verify->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  std::vector<const char*> argv{"kcycle"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "kcycle: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    std::string text, dot;
    if (orbits->parsed()) {
      const auto setup = *setup_from(o, true);
      const auto doc = orbits_document(setup, text);
      emit(o.format == "json" ? render(doc) : text, o, out);
      return kExitOk;
    }
    if (poset->parsed()) {
      const auto setup = *setup_from(o, true);
      const auto doc = poset_document(setup, text, dot);
      emit(o.format == "json" ? render(doc) : o.format == "dot" ? dot : text, o, out);
      return kExitOk;
    }
    if (cc->parsed()) {
      const auto setup = *setup_from(o, true);
      std::optional<OrbitId> only;
      if (!o.orbit.empty()) only = orbit_from(setup, o.orbit);
      const auto doc = cc_document(setup, only, text);
      emit(o.format == "json" ? render(doc) : text, o, out);
      return kExitOk;
    }
    // verify
    const auto single = setup_from(o, false);
    const auto setups = single ? std::vector<Setup>{*single} : all_setups(o.max_n);
    bool failed = false;
    std::ostringstream summary;
    Json results = Json::array();
    for (const auto& s : setups) results.push_back(verify_setup(s, o.suite, o.trials, o.seed, failed, summary));
    Json payload{{"suite", o.suite},
                 {"seed", o.seed},
                 {"trials", o.trials >= 0 ? Json(o.trials) : Json(nullptr)},
                 {"max_n", single ? Json(nullptr) : Json(o.max_n)},
                 {"passed", !failed},
                 {"setups", std::move(results)}};
    const auto doc = make_document("verify", single ? setup_json(*single) : Json(nullptr),
                                   std::move(payload));
    emit(o.format == "text" ? summary.str() : render(doc), o, out);
    return failed ? kExitCheckFailed : kExitOk;
  } catch (const std::invalid_argument& e) {
    err << "kcycle: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "kcycle: check failed: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}

}  // namespace kcycle
