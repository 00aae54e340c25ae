// lcone: Cartan/Jordan projections, word-ball enumeration, limit-cone and
// growth estimation, admissible-cone construction, sharpness tests and
// deformation experiments for finitely generated subgroups of SL(n,R).
//
// Exit codes: 0 success, 1 invalid input, 2 budget exceeded, 3 infeasible.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "lcone/lcone.hpp"

using namespace lcone;

namespace {

std::vector<int> parse_indices(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stoi(tok));
  }
  if (out.empty()) throw invalid_input_error("empty index list: '" + s + "'");
  return out;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input_error("cannot open file: " + path);
  json j;
  in >> j;
  return j;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw invalid_input_error("cannot write file: " + path);
  out << text;
}

json rate_fit_json(const RateFit& f) {
  return json{{"slope", f.slope},   {"intercept", f.intercept}, {"residual", f.residual},
              {"window", {f.t0, f.t1}}, {"points", f.points},   {"reliable", f.reliable}};
}

FoldedSubgroupCone named_subgroup(const std::string& name) {
  if (name == "sl3-block-in-sl4") return folded_plane_SL3_in_SL4();
  throw invalid_input_error("unknown subgroup '" + name + "' (built-in: sl3-block-in-sl4)");
}

int run(int argc, char** argv) {
  CLI::App app{"asymptotic Lie-theoretic invariants of subgroups of SL(n,R)"};
  app.require_subcommand(1);

  // ---- project ----
  auto* project = app.add_subcommand("project", "Cartan/Jordan projection of one matrix");
  std::string p_matrix;
  bool p_jordan = false;
  project->add_option("--matrix", p_matrix, "matrix as a JSON array of rows")->required();
  project->add_flag("--jordan", p_jordan, "also print the Jordan projection");
  project->callback([&] {
    const Mat g = mat_from_json(json::parse(p_matrix));
    json out;
    out["mu"] = to_json(cartan_projection(g));
    if (p_jordan) out["lambda"] = to_json(jordan_projection(g));
    std::cout << out.dump() << "\n";
  });

  // ---- enumerate ----
  auto* enumerate = app.add_subcommand("enumerate", "enumerate the word ball of a marked group");
  std::string e_group, e_output;
  int e_radius = 0, e_workers = 1;
  long long e_budget = 200'000'000;
  bool e_count_only = false, e_lambda = false;
  enumerate->add_option("--group", e_group, "group config JSON file")->required();
  enumerate->add_option("--radius", e_radius, "word-ball radius")->required();
  enumerate->add_flag("--count-only", e_count_only, "print the element count and stop");
  enumerate->add_flag("--with-lambda", e_lambda, "compute Jordan projections too");
  enumerate->add_option("--workers", e_workers, "enumeration workers");
  enumerate->add_option("--budget", e_budget, "element budget");
  enumerate->add_option("--output", e_output, "CSV output path (default stdout)");
  enumerate->callback([&] {
    const MarkedGroup group = load_group(e_group);
    if (e_count_only) {
      std::cout << free_ball_size(group.num_generators(), e_radius) << "\n";
      return;
    }
    BallOptions opts;
    opts.workers = e_workers;
    opts.budget = e_budget;
    opts.with_lambda = e_lambda;
    const auto ball = enumerate_ball(group, e_radius, opts);
    std::ostringstream csv;
    write_ball_csv(csv, ball.records, group.n());
    write_text(e_output, csv.str());
    if (ball.dropped > 0)
      std::cerr << json{{"warning", "dropped"}, {"count", ball.dropped}}.dump() << "\n";
  });

  // ---- limit-cone ----
  auto* limit = app.add_subcommand("limit-cone", "estimate the limit cone from a word ball");
  std::string l_group, l_output, l_kind = "cartan", l_theta;
  int l_radius = 8;
  double l_cutoff = 1.0;
  limit->add_option("--group", l_group, "group config JSON file")->required();
  limit->add_option("--ball-radius", l_radius, "word-ball radius");
  limit->add_option("--cutoff", l_cutoff, "minimum projection norm R_min");
  limit->add_option("--kind", l_kind, "cartan | jordan | theta");
  limit->add_option("--theta", l_theta, "comma-separated root indices (kind theta)");
  limit->add_option("--output", l_output, "cone JSON output path (default stdout)");
  limit->callback([&] {
    const MarkedGroup group = load_group(l_group);
    ConeKind kind;
    std::optional<ThetaSubset> theta;
    if (l_kind == "cartan")
      kind = ConeKind::cartan;
    else if (l_kind == "jordan")
      kind = ConeKind::jordan;
    else if (l_kind == "theta") {
      kind = ConeKind::theta;
      theta = ThetaSubset(group.n(), parse_indices(l_theta));
    } else
      throw invalid_input_error("unknown kind '" + l_kind + "'");
    const auto est = estimate_limit_cone(group, l_radius, l_cutoff, kind, theta);
    json out = cone_to_json(est.cone);
    out["ball_radius"] = est.ball_radius;
    out["norm_cutoff"] = est.norm_cutoff;
    out["count_used"] = est.count_used;
    write_text(l_output, out.dump(2) + "\n");
  });

  // ---- growth ----
  auto* growth = app.add_subcommand("growth", "growth indicator estimate at a direction");
  std::string g_group, g_theta, g_direction, g_output;
  int g_radius = 8;
  std::vector<double> g_eps = {0.3, 0.2, 0.1, 0.05};
  growth->add_option("--group", g_group, "group config JSON file")->required();
  growth->add_option("--ball-radius", g_radius, "word-ball radius");
  growth->add_option("--theta", g_theta, "comma-separated root indices (default all)");
  growth->add_option("--direction", g_direction, "direction in a_theta+ as a JSON array")
      ->required();
  growth->add_option("--eps", g_eps, "cone half-angles");
  growth->add_option("--output", g_output, "JSON output path (default stdout)");
  growth->callback([&] {
    const MarkedGroup group = load_group(g_group);
    const ThetaSubset theta = g_theta.empty() ? ThetaSubset::full(group.n())
                                              : ThetaSubset(group.n(), parse_indices(g_theta));
    const Vec v = vec_from_json(json::parse(g_direction));
    const auto ball = enumerate_ball(group, g_radius);
    const auto est = estimate_growth_indicator(ball.records, theta, v, g_eps);
    json out;
    out["direction"] = to_json(est.direction);
    out["ball_radius"] = g_radius;
    out["psi_hat"] = est.psi_hat;
    out["used_epsilon"] = est.used_epsilon;
    out["reliable"] = est.reliable;
    json fits = json::array();
    for (size_t i = 0; i < est.fits.size(); ++i) {
      json f = rate_fit_json(est.fits[i]);
      f["epsilon"] = est.epsilons[i];
      fits.push_back(f);
    }
    out["fits"] = fits;
    out["two_rho"] = two_rho(est.direction);
    write_text(g_output, out.dump(2) + "\n");
  });

  // ---- exponent ----
  auto* exponent = app.add_subcommand("exponent", "critical exponent of a linear form");
  std::string x_group, x_form, x_output;
  int x_radius = 8;
  exponent->add_option("--group", x_group, "group config JSON file")->required();
  exponent->add_option("--ball-radius", x_radius, "word-ball radius");
  exponent->add_option("--form", x_form, "linear form as a JSON array")->required();
  exponent->add_option("--output", x_output, "JSON output path (default stdout)");
  exponent->callback([&] {
    const MarkedGroup group = load_group(x_group);
    const Vec phi = vec_from_json(json::parse(x_form));
    const auto ball = enumerate_ball(group, x_radius);
    const auto est = estimate_critical_exponent(ball.records, phi);
    json out;
    out["form"] = to_json(est.form);
    out["ball_radius"] = x_radius;
    out["delta_hat"] = est.delta_hat;
    out["fit"] = rate_fit_json(est.fit);
    out["poincare_below"] = est.poincare_below;
    out["poincare_above"] = est.poincare_above;
    out["norm_note"] = "Euclidean norm on a; Killing-induced norms rescale by a constant";
    write_text(x_output, out.dump(2) + "\n");
  });

  // ---- sharp ----
  auto* sharp = app.add_subcommand("sharp", "sharpness of a cone against a subgroup cone");
  std::string s_cone, s_subgroup = "sl3-block-in-sl4", s_rays, s_output;
  double s_threshold = 0.02;
  sharp->add_option("--cone", s_cone, "sampled cone JSON file")->required();
  sharp->add_option("--subgroup", s_subgroup, "built-in subgroup name");
  sharp->add_option("--subgroup-rays", s_rays, "subalgebra rays JSON file (overrides name)");
  sharp->add_option("--threshold", s_threshold, "angular sharpness threshold (radians)");
  sharp->add_option("--output", s_output, "JSON output path (default stdout)");
  sharp->callback([&] {
    const auto gamma = sampled_cone_from_json(load_json_file(s_cone));
    FoldedSubgroupCone h;
    if (!s_rays.empty()) {
      const auto rc = sampled_cone_from_json(load_json_file(s_rays));
      h = reductive_subgroup_cone(rc.directions);
    } else {
      h = named_subgroup(s_subgroup);
    }
    const auto rep = sharpness_test(gamma, h, s_threshold);
    json out{{"min_angle", rep.min_angle}, {"threshold", rep.threshold}, {"sharp", rep.sharp}};
    write_text(s_output, out.dump(2) + "\n");
  });

  // ---- admissible ----
  auto* admissible = app.add_subcommand("admissible", "construct a theta-admissible cone");
  std::string a_cone, a_theta, a_output;
  double a_margin = 0.05;
  admissible->add_option("--cone", a_cone, "sampled cone JSON file (the set D)")->required();
  admissible->add_option("--theta", a_theta, "comma-separated root indices (default all)");
  admissible->add_option("--margin", a_margin, "separation margin epsilon");
  admissible->add_option("--output", a_output, "half-space cone JSON output path");
  admissible->callback([&] {
    const auto D = sampled_cone_from_json(load_json_file(a_cone));
    if (D.empty()) throw invalid_input_error("admissible: empty cone");
    const int n = static_cast<int>(D.directions[0].size());
    const ThetaSubset theta =
        a_theta.empty() ? ThetaSubset::full(n) : ThetaSubset(n, parse_indices(a_theta));
    const auto cone = construct_admissible_cone(D, theta, a_margin);
    const auto verification = verify_admissible(cone, D, theta, a_margin);
    json out = cone_to_json(cone);
    out["verified"] = verification.all();
    out["interior_ok"] = verification.interior_ok;
    out["involution_ok"] = verification.involution_ok;
    out["orbit_convex_ok"] = verification.orbit_convex_ok;
    out["walls_ok"] = verification.walls_ok;
    write_text(a_output, out.dump(2) + "\n");
  });

  // ---- deform ----
  auto* deform = app.add_subcommand("deform", "limit-cone continuity experiment");
  std::string d_family = "sym3", d_output;
  std::vector<int> d_ladder = {6, 8, 10};
  std::vector<double> d_schedule;
  double d_rmin = 5.0;
  unsigned d_seed = 20240815;
  deform->add_option("--family", d_family, "block-deform | sym3");
  deform->add_option("--ladder", d_ladder, "ball-radius ladder");
  deform->add_option("--schedule", d_schedule, "perturbation parameters t");
  deform->add_option("--r-min", d_rmin, "projection norm cutoff");
  deform->add_option("--x-seed", d_seed, "seed of the perturbation direction X");
  deform->add_option("--output", d_output, "CSV output path (default stdout)");
  deform->callback([&] {
    std::optional<RepresentationFamily> fam;
    std::optional<FoldedSubgroupCone> reference;
    ContinuityOptions opts;
    opts.r_min = d_rmin;
    if (d_family == "block-deform") {
      BlockDeformParams params;
      params.x_seed = d_seed;
      if (!d_schedule.empty()) params.epsilons = d_schedule;
      auto s7 = build_block_deform_family(params);
      fam = std::move(s7.family);
      reference = folded_plane_SL3_in_SL4();
      opts.anchor = s7.mu_a;
    } else if (d_family == "sym3") {
      fam = RepresentationFamily{build_sym3_schottky(), 1, random_traceless_direction(4, d_seed),
                                 d_schedule.empty()
                                     ? std::vector<double>{0.1, 0.05, 0.02, 0.01, 0.0}
                                     : d_schedule,
                                 d_seed};
    } else {
      throw invalid_input_error("unknown family '" + d_family + "'");
    }
    const auto report = run_continuity_experiment(*fam, d_ladder, reference, opts);
    std::ostringstream csv;
    csv << "t,N,count_used,hausdorff,escape,loss,inside_reference,hull_escape\n";
    for (const auto& row : report.rows)
      csv << row.t << "," << row.N << "," << row.count_used << "," << row.hausdorff << ","
          << row.escape << "," << row.loss << "," << (row.inside_reference ? 1 : 0) << ","
          << (row.hull_escape ? 1 : 0) << "\n";
    write_text(d_output, csv.str());
    if (!report.complete)
      std::cerr << json{{"warning", "budget exceeded, partial report"}}.dump() << "\n";
  });

  // ---- plot ----
  auto* plot = app.add_subcommand("plot", "barycentric triangle plot of a rank-3 cone");
  std::string t_cone, t_output, t_color = "#cc0000";
  bool t_plane = false;
  plot->add_option("--cone", t_cone, "sampled cone JSON file")->required();
  plot->add_flag("--folded-plane", t_plane, "overlay the SL(3)-block folded plane");
  plot->add_option("--color", t_color, "point color");
  plot->add_option("--output", t_output, "SVG output path (default stdout)");
  plot->callback([&] {
    const auto cone = sampled_cone_from_json(load_json_file(t_cone));
    if (!cone.empty() && cone.directions[0].size() != 4)
      throw invalid_input_error("plot: rank-3 ambient (SL(4)) cones only");
    TrianglePlot p;
    if (t_plane) p.add_folded_plane(folded_plane_SL3_in_SL4());
    p.add_points(cone, t_color);
    write_text(t_output, p.str());
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const budget_exceeded_error& e) {
    error_json_to_stderr("budget_exceeded", e.what());
    return 2;
  } catch (const infeasible_error& e) {
    error_json_to_stderr("infeasible", std::string(e.what()) + " [" + e.offending_root + "]");
    return 3;
  } catch (const invalid_input_error& e) {
    error_json_to_stderr("invalid_input", e.what());
    return 1;
  } catch (const json::exception& e) {
    error_json_to_stderr("invalid_input", e.what());
    return 1;
  } catch (const std::exception& e) {
    error_json_to_stderr("error", e.what());
    return 1;
  }
}
