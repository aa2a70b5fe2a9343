// fundreg: verification batteries, renders, quotients and the conformal
// construction from the command line.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fundreg/checker.hpp"
#include "fundreg/conformal.hpp"
#include "fundreg/regions.hpp"
#include "fundreg/svg.hpp"
#include "fundreg/systems.hpp"

using namespace fundreg;
using nlohmann::json;

namespace {

constexpr int kUsageError = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string system;
  std::optional<unsigned> depth;
  std::optional<unsigned> radius;
  std::string schedule;
  long N = 50;
  std::string c = "1";
  bool noncompact_factor = false;
  std::string view = "nbhd";
  std::string center = "e";
  double s = 0.7;
  long grid = 64;
  int K = 6;
  bool null_rescaling = false;
  std::string out;
  std::string format = "json";
};

std::vector<unsigned> parse_schedule(const std::string& text, std::vector<unsigned> fallback) {
  if (text.empty()) return fallback;
  std::vector<unsigned> out;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    const unsigned a = std::stoul(text.substr(0, dots));
    const unsigned b = std::stoul(text.substr(dots + 2));
    for (unsigned d = a; d <= b; ++d) out.push_back(d);
  } else {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoul(item));
  }
  if (out.empty()) throw UsageError("empty schedule");
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] == 0) throw UsageError("schedule entries must be positive");
    if (i > 0 && out[i] <= out[i - 1]) throw UsageError("schedule must be strictly increasing");
  }
  return out;
}

unsigned positive(std::optional<unsigned> v, unsigned fallback, const char* name) {
  const unsigned x = v.value_or(fallback);
  if (x == 0) throw UsageError(std::string(name) + " must be positive");
  return x;
}

Rational parse_positive_rational(const std::string& text) {
  Rational c;
  try {
    c = parse_rational(text);
  } catch (const std::exception&) {
    throw UsageError("not a rational number: " + text);
  }
  if (c <= 0) throw UsageError("--c must be positive");
  return c;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty() || cfg.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + cfg.out);
  f << text;
}

struct Battery {
  std::string system;
  json config;
  std::vector<VerificationReport> reports;
  std::map<std::string, Verdict> expected;
};

int finish(const RunConfig& cfg, const Battery& b) {
  json doc;
  doc["system"] = b.system;
  doc["config"] = b.config;
  doc["reports"] = json::array();
  doc["expectations"] = json::array();
  bool all = true;
  for (const auto& r : b.reports) {
    doc["reports"].push_back(to_json(r));
    const auto it = b.expected.find(r.property);
    const bool match = it == b.expected.end() || it->second == r.verdict;
    all = all && match;
    doc["expectations"].push_back({{"property", r.property},
                                   {"expected", it == b.expected.end() ? "any" : to_string(it->second)},
                                   {"actual", to_string(r.verdict)},
                                   {"exit_code", exit_code(r.verdict)},
                                   {"match", match}});
  }
  doc["overall"] = all ? "pass" : "fail";
  emit(cfg, doc.dump(2) + "\n");
  return all ? 0 : 1;
}

Battery free2house_battery(const RunConfig& cfg) {
  const Free2HouseSystem sys;
  const unsigned depth = positive(cfg.depth, 4, "--depth");
  const unsigned radius = positive(cfg.radius, 8, "--radius");
  const auto schedule = parse_schedule(cfg.schedule, {2, 3, 4, 5, 6});
  Battery b{sys.name(), {{"depth", depth}, {"radius", radius}, {"schedule", schedule}}};

  b.reports.push_back(check_disjointness(sys, depth, radius));
  b.reports.push_back(check_coverage(sys, depth, radius));
  b.reports.push_back(boundary_containment(sys, depth, radius));

  const AtomSet nbhd = nbhd_atoms(CoordNbhd{Word{}}, radius);
  std::vector<ProfileStep<Free2HouseSystem>> steps;
  for (unsigned d : schedule) steps.push_back({sys, d, radius, nbhd});
  b.reports.push_back(local_finiteness_profile(steps));

  const auto fsa = fsa_check(sys, std::optional<AtomSet>{}, schedule, radius);
  b.reports.push_back(fsa);
  b.reports.push_back(fsa_implies_lf_audit(sys, fsa, std::nullopt, depth, radius));
  b.reports.push_back(
      orbit_boundary_finiteness(sys, fsa, AtomSet{Atom{Word{}, AtomKind::Diagonal}}, schedule, radius));
  b.reports.push_back(compactness_proxy(sys, fsa.verdict, radius));
  b.reports.push_back(quotient_build(sys, depth, radius).report);

  b.expected = {{"disjointness", Verdict::Verified},
                {"coverage", Verdict::Verified},
                {"boundary-containment", Verdict::Verified},
                {"local-finiteness", Verdict::Verified},
                {"finitely-self-adjacent", Verdict::Refuted},
                {"fsa-implies-locally-finite", Verdict::Inconclusive},
                {"orbit-boundary-finiteness", Verdict::Inconclusive},
                {"compactness-proxy", Verdict::Verified},
                {"quotient-representatives", Verdict::Verified}};
  return b;
}

/// Standard line and cylinder: every property verifies.
Battery interval_battery(const RunConfig& cfg, const LineSystem& sys, json config) {
  const unsigned depth = positive(cfg.depth, 8, "--depth");
  const unsigned radius = positive(cfg.radius, 4, "--radius");
  const auto schedule = parse_schedule(cfg.schedule, {2, 3, 4, 5, 6});
  config["depth"] = depth;
  config["radius"] = radius;
  config["schedule"] = schedule;
  Battery b{sys.name(), config};
  const Rational c = sys.step();

  b.reports.push_back(check_disjointness(sys, depth, radius));
  b.reports.push_back(check_coverage(sys, depth, radius));
  b.reports.push_back(boundary_containment(sys, depth, radius));

  const IntervalSet nbhd{Interval::open(-c / 4, c / 4)};
  std::vector<ProfileStep<LineSystem>> steps;
  for (unsigned d : schedule) steps.push_back({sys, d, radius, nbhd});
  b.reports.push_back(local_finiteness_profile(steps));

  const IntervalSet U = sys.name() == "cylinder" ? IntervalSet{Interval::open(-c, 2 * c)}
                                                  : IntervalSet{Interval::open(-c / 4, c + c / 4)};
  const auto fsa = fsa_check(sys, std::optional<IntervalSet>{U}, schedule, radius);
  b.reports.push_back(fsa);
  b.reports.push_back(fsa_implies_lf_audit(sys, fsa, std::optional<IntervalSet>{U}, depth, radius));
  b.reports.push_back(
      orbit_boundary_finiteness(sys, fsa, IntervalSet{Interval::point(Rational(0))}, schedule, radius));
  b.reports.push_back(compactness_proxy(sys, fsa.verdict, radius));
  b.reports.push_back(quotient_build(sys, depth, radius).report);

  for (const auto& r : b.reports) b.expected[r.property] = Verdict::Verified;
  return b;
}

Battery pathological_battery(const RunConfig& cfg) {
  const LineSystem sys = LineSystem::pathological();
  if (cfg.N < 1) throw UsageError("--N must be positive");
  const auto N = static_cast<unsigned>(cfg.N);
  const auto ks = parse_schedule(cfg.schedule, {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12});
  if (ks.front() < 2) throw UsageError("schedule entries must be at least 2 for this system");
  Battery b{sys.name(), {{"N", N}, {"schedule", ks}}};

  b.reports.push_back(check_disjointness(sys, N, N));
  // N intervals cover exactly [0, N/(N+1)] modulo Z.
  const IntervalSet window{Interval::closed(Rational(0), Rational(cfg.N, cfg.N + 1))};
  b.reports.push_back(check_coverage(sys, N, N, std::optional<IntervalSet>{window}));
  b.reports.push_back(boundary_containment(sys, N, N));

  std::vector<ProfileStep<LineSystem>> steps;
  for (unsigned k : ks) {
    const Rational eps(1, k);
    steps.push_back({sys, 4 * k, 4 * k, IntervalSet{Interval::open(1 - eps, 1 + eps)}});
  }
  b.reports.push_back(local_finiteness_profile(steps));

  const auto fsa = fsa_check(sys, std::optional<IntervalSet>{}, ks, N);
  b.reports.push_back(fsa);
  b.reports.push_back(compactness_proxy(sys, fsa.verdict, N));

  b.expected = {{"disjointness", Verdict::Verified},
                {"coverage", Verdict::Verified},
                {"boundary-containment", Verdict::Verified},
                {"local-finiteness", Verdict::Refuted},
                {"finitely-self-adjacent", Verdict::Inconclusive},
                {"compactness-proxy", Verdict::Verified}};
  return b;
}

Battery plane_battery() {
  Battery b{"plane-pathological", json::object()};
  b.reports.push_back(plane_pathological_disjointness());
  b.reports.push_back(plane_pathological_unbounded());
  b.expected = {{"disjointness", Verdict::Verified}, {"bounded-closure", Verdict::Refuted}};
  return b;
}

int cmd_verify(const RunConfig& cfg) {
  if (cfg.format != "json") throw UsageError("verify writes json");
  const std::string& name = cfg.system;
  if (name == "free2house") return finish(cfg, free2house_battery(cfg));
  if (name == "line-standard") return finish(cfg, interval_battery(cfg, LineSystem::standard(), json::object()));
  if (name == "cylinder") {
    const Rational c = parse_positive_rational(cfg.c);
    return finish(cfg, interval_battery(cfg, LineSystem::cylinder(c, !cfg.noncompact_factor),
                                        {{"c", to_string(c)}, {"compact_factor", !cfg.noncompact_factor}}));
  }
  if (name == "line-pathological") return finish(cfg, pathological_battery(cfg));
  if (name == "plane-pathological") return finish(cfg, plane_battery());
  throw UsageError("unknown system: " + name);
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

std::string render_nbhd(const RunConfig& cfg) {
  const Free2HouseSystem sys;
  const unsigned radius = positive(cfg.radius, 3, "--radius");
  const unsigned depth = positive(cfg.depth, 4, "--depth");
  const Word center = parse_word(cfg.center);
  AtomSet nbhd;
  try {
    nbhd = nbhd_atoms(CoordNbhd{center}, radius);
  } catch (const TruncationError&) {
    throw UsageError("radius too small for the requested neighbourhood");
  }
  const AtomSet bar = closure(sys.region(sys.horizon(radius, depth)));
  std::vector<ColoredPiece> pieces;
  for (const auto& g : translates_meeting(sys, nbhd, depth, radius))
    pieces.push_back({intersect(act(g, bar), nbhd), sys.label(g)});
  return render_pieces(pieces, "coordinate neighbourhood of " + to_string(center));
}

std::string render_spine(const RunConfig& cfg) {
  const unsigned radius = positive(cfg.radius, 3, "--radius");
  std::vector<ColoredPiece> pieces;
  for (const Atom& a : free2house_region(radius)) pieces.push_back({AtomSet{a}, to_string(a.room)});
  return render_pieces(pieces, "fundamental region along the spine");
}

std::string render_quotient(const QuotientDescription& q, unsigned radius) {
  SvgDocument doc;
  const auto r = static_cast<std::int64_t>(radius);
  auto corner = [&](std::int64_t i, int x, int y) {
    return PlanePoint{Rational(3 * i, 2) + x, Rational(y)};
  };
  for (std::int64_t i = -r; i <= r; ++i) {
    const std::array tri{corner(i, 0, 0), corner(i, 1, 1), corner(i, 0, 1)};
    doc.polygon(tri, palette_color("triangle[" + std::to_string(i) + "]"));
    doc.label({corner(i, 0, 0).first + Rational(1, 4), Rational(2, 3)}, std::to_string(i));
  }
  for (const auto& e : q.free_edges) {
    const auto i = std::stoll(e.substr(e.find('[') + 1));
    doc.segment(corner(i, 0, 0), corner(i, 1, 1), "#000000", 1.0, true);
  }
  for (const auto& g : q.gluings) {
    const auto i = std::stoll(g.from.substr(g.from.find('[') + 1));
    const auto j = std::stoll(g.to.substr(g.to.find('[') + 1));
    const int marks = static_cast<int>(((i % 3) + 3) % 3) + 1;
    doc.arrows(corner(i, 0, 1), corner(i, 1, 1), marks);
    if (g.orientation_preserving)
      doc.arrows(corner(j, 0, 0), corner(j, 0, 1), marks);
    else
      doc.arrows(corner(j, 0, 1), corner(j, 0, 0), marks);
  }
  for (std::int64_t i = -r; i <= r; ++i)
    for (const PlanePoint& p : {corner(i, 0, 0), corner(i, 1, 1), corner(i, 0, 1)}) doc.hollow_dot(p);
  return doc.str("gluing rule on the closed region");
}

int cmd_render(const RunConfig& cfg) {
  if (cfg.system != "free2house") throw UsageError("render supports free2house only");
  if (cfg.format != "svg") throw UsageError("render writes svg");
  if (cfg.view == "nbhd") {
    emit(cfg, render_nbhd(cfg));
  } else if (cfg.view == "spine") {
    emit(cfg, render_spine(cfg));
  } else if (cfg.view == "quotient") {
    const unsigned radius = positive(cfg.radius, 3, "--radius");
    const unsigned depth = positive(cfg.depth, radius + 1, "--depth");
    emit(cfg, render_quotient(quotient_build(Free2HouseSystem{}, depth, radius), radius));
  } else {
    throw UsageError("unknown view: " + cfg.view);
  }
  return 0;
}

int cmd_quotient(const RunConfig& cfg) {
  const unsigned radius = positive(cfg.radius, 3, "--radius");
  QuotientDescription q;
  if (cfg.system == "free2house") {
    q = quotient_build(Free2HouseSystem{}, positive(cfg.depth, radius + 1, "--depth"), radius);
    if (cfg.format == "svg") {
      emit(cfg, render_quotient(q, radius));
      return exit_code(q.report.verdict);
    }
  } else if (cfg.system == "line-standard") {
    q = quotient_build(LineSystem::standard(), positive(cfg.depth, 8, "--depth"), radius);
  } else if (cfg.system == "cylinder") {
    q = quotient_build(LineSystem::cylinder(parse_positive_rational(cfg.c)), positive(cfg.depth, 8, "--depth"),
                       radius);
  } else {
    throw UsageError("unknown system: " + cfg.system);
  }
  if (cfg.format != "json") throw UsageError("quotient writes json or svg");
  emit(cfg, to_json(q).dump(2) + "\n");
  return exit_code(q.report.verdict);
}

int cmd_conformal(const RunConfig& cfg) {
  if (cfg.s == 0.0) throw UsageError("--s must be non-zero");
  if (cfg.grid < 1) throw UsageError("--grid must be positive");
  const HomothetyModel model(2, cfg.s);
  const Partition p = build_partition(model, BumpProfile(cfg.s), cfg.K, std::abs(cfg.s) / cfg.grid);
  ScalarField f = build_rescaling(p, cfg.s);
  if (cfg.null_rescaling) f.values.setZero();

  const PartitionStats st = partition_stats(p);
  const double eq = equivariance_error(p, f);
  char buf[32];
  auto sci = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.6e", v);
    return std::string(buf);
  };
  VerificationReport part{"partition-of-unity", Verdict::Verified, static_cast<unsigned>(cfg.K),
                          static_cast<unsigned>(cfg.grid)};
  part.counts.push_back({{"max_sum_error", sci(st.max_sum_error)},
                         {"min_value", sci(st.min_value)},
                         {"max_overlap", st.max_overlap},
                         {"max_shift_error", sci(st.max_shift_error)}});
  if (st.max_sum_error >= 1e-12 || st.min_value < 0 || st.max_overlap > 2 || st.max_shift_error != 0.0)
    part.verdict = Verdict::Refuted;
  VerificationReport equi{"equivariance", eq < 1e-10 ? Verdict::Verified : Verdict::Refuted,
                          static_cast<unsigned>(cfg.K), static_cast<unsigned>(cfg.grid)};
  equi.counts.push_back({{"max_error", sci(eq)}, {"periodicity_error", sci(periodicity_error(p, f))}});
  const VerificationReport iso = verify_isometry(model, p, f);

  Verdict overall = Verdict::Verified;
  for (const VerificationReport* r : std::initializer_list<const VerificationReport*>{&part, &equi, &iso}) {
    if (r->verdict == Verdict::Refuted) overall = Verdict::Refuted;
    else if (r->verdict == Verdict::Inconclusive && overall == Verdict::Verified) overall = Verdict::Inconclusive;
  }
  if (cfg.format == "csv") {
    emit(cfg, conformal_csv(p, f));
    std::cerr << "conformal: " << to_string(overall) << "\n";
  } else if (cfg.format == "json") {
    json doc{{"reports", {to_json(part), to_json(equi), to_json(iso)}},
             {"verdict", to_string(overall)},
             {"null_rescaling", cfg.null_rescaling},
             {"data", conformal_json(p, f)}};
    emit(cfg, doc.dump(2) + "\n");
  } else {
    throw UsageError("conformal writes json or csv");
  }
  return exit_code(overall);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fundamental region verification"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--depth", cfg.depth, "group ball depth");
    sub->add_option("--radius", cfg.radius, "word ball radius of the truncated space");
    sub->add_option("--schedule", cfg.schedule, "strictly increasing depths, e.g. 2,3,4 or 2..6");
    sub->add_option("--out", cfg.out, "output file (default stdout)");
    sub->add_option("--format", cfg.format, "json, csv or svg");
  };

  auto* verify = app.add_subcommand("verify", "run the checker battery for a system");
  verify->add_option("system", cfg.system, "free2house, line-standard, line-pathological, plane-pathological, cylinder")
      ->required();
  add_common(verify);
  verify->add_option("--N", cfg.N, "number of intervals of the pathological line region");
  verify->add_option("--c", cfg.c, "cylinder shift (rational)");
  verify->add_flag("--noncompact-factor", cfg.noncompact_factor, "treat the cylinder factor X as non-compact");

  auto* render = app.add_subcommand("render", "SVG of the free-2-house");
  render->add_option("system", cfg.system)->required();
  add_common(render);
  render->add_option("--view", cfg.view, "nbhd, spine or quotient");
  render->add_option("--center", cfg.center, "room of the coordinate neighbourhood");

  auto* quotient = app.add_subcommand("quotient", "edge gluing of the closed region");
  quotient->add_option("system", cfg.system)->required();
  add_common(quotient);
  quotient->add_option("--c", cfg.c, "cylinder shift (rational)");

  auto* conformal = app.add_subcommand("conformal", "equivariant rescaling for a homothety");
  add_common(conformal);
  conformal->add_option("--s", cfg.s, "scale exponent, non-zero");
  conformal->add_option("--grid", cfg.grid, "grid points per period s");
  conformal->add_option("--K", cfg.K, "number of periods on each side");
  conformal->add_flag("--null-rescaling", cfg.null_rescaling, "replace f by 0 (negative control)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  if (render->parsed() && render->count("--format") == 0) cfg.format = "svg";
  try {
    if (verify->parsed()) return cmd_verify(cfg);
    if (render->parsed()) return cmd_render(cfg);
    if (quotient->parsed()) return cmd_quotient(cfg);
    return cmd_conformal(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
