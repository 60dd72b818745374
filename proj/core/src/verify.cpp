#include "repstrata/verify.hpp"

#include <cmath>
#include <future>
#include <sstream>

#include <json.hpp>

#include "repstrata/cohomology.hpp"
#include "repstrata/local_models.hpp"
#include "repstrata/serialization.hpp"
#include "repstrata/surface_group.hpp"

namespace repstrata {

namespace {

struct Check {
  bool pass = true;
  std::ostringstream details;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      if (details.tellp() > 0) details << "; ";
      details << "FAILED: " << what;
    }
  }
};

CriterionResult finish(const std::string& id, const std::string& name,
                       Check& c, const std::string& ok_details) {
  CriterionResult r;
  r.id = id;
  r.name = name;
  r.pass = c.pass;
  r.details = c.pass ? ok_details : c.details.str();
  return r;
}

// ---------------------------------------------------------------- criteria

CriterionResult c_bracket_constant() {
  Check c;
  const InvariantSet inv = planar_invariants(1);
  const BracketTable t = bracket_table(inv);
  std::vector<Poly> ours, ref;
  const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  auto gv = std::make_shared<const VarSet>(inv.names);
  for (const auto& [i, j] : pairs) {
    c.expect(t.in_generators[i][j].has_value(),
             "bracket leaves the generator span");
    if (t.in_generators[i][j]) {
      Poly e(gv);
      for (const auto& [exp, coeff] : t.in_generators[i][j]->terms())
        e.set_coefficient(exp, coeff);
      ours.push_back(e);
    }
  }
  for (const auto& r : cone_reference_table(gv)) ref.push_back(r);
  const auto constant = proportionality_constant(ours, ref);
  c.expect(constant.has_value(), "tables are not proportional");
  if (constant)
    c.expect(*constant == Rational(-1, 2),
             "global constant is " + to_string(*constant) + ", expected -1/2");
  return finish("bracket-constant",
                "reduced planar bracket table matches the reference "
                "normalization with global constant -1/2",
                c, "constant=-1/2");
}

CriterionResult c_cone_relation() {
  Check c;
  const InvariantSet inv = planar_invariants(1);
  const Poly& x1 = inv.generators[0];
  const Poly& x2 = inv.generators[1];
  const Poly& rho = inv.generators[2];
  const Poly& mu = inv.momentum[0];
  const Poly lhs = rho * rho - x1 * x1 - x2 * x2;
  const Poly rhs = (mu * mu) * Rational(4);
  c.expect(lhs == rhs, "rho^2 - x1^2 - x2^2 != 4 mu^2");
  return finish("cone-relation",
                "rho^2 - x1^2 - x2^2 = 4 mu^2 exactly, hence "
                "x1^2 + x2^2 = rho^2 on the zero momentum locus",
                c, "identity holds exactly");
}

CriterionResult c_jacobi() {
  Check c;
  auto check_set = [&](const InvariantSet& inv, const std::string& tag) {
    std::vector<Poly> gens = inv.generators;
    const int n = static_cast<int>(gens.size());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Poly a = inv.space.canonical_bracket(gens[i], gens[j]);
        const Poly b = inv.space.canonical_bracket(gens[j], gens[i]);
        c.expect((a + b).is_zero(), tag + ": antisymmetry fails at (" +
                                        std::to_string(i) + "," +
                                        std::to_string(j) + ")");
      }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
          const auto& s = inv.space;
          const Poly jac = s.canonical_bracket(gens[i],
                                               s.canonical_bracket(gens[j], gens[k])) +
                           s.canonical_bracket(gens[j],
                                               s.canonical_bracket(gens[k], gens[i])) +
                           s.canonical_bracket(gens[k],
                                               s.canonical_bracket(gens[i], gens[j]));
          c.expect(jac.is_zero(), tag + ": Jacobi fails on a triple");
        }
  };
  InvariantSet planar = planar_invariants(1);
  planar.names.push_back(planar.momentum_names[0]);
  planar.generators.push_back(planar.momentum[0]);
  check_set(planar, "planar");
  check_set(spatial_invariants(2), "spatial");
  return finish("jacobi",
                "antisymmetry and Jacobi hold exactly for all generator "
                "triples of the planar and spatial sets",
                c, "planar(4) and spatial(10) generator sets exact");
}

CriterionResult c_cohomology_dims() {
  Check c;
  const double min_gap = 1e3;
  auto witness = [&](int genus, Stratum s) {
    return compute_cohomology(solve_flat(genus, s, 1));
  };
  auto check_gaps = [&](const CohomologyData& d, const std::string& tag) {
    c.expect(d.h0_report.gap >= min_gap, tag + ": h0 spectral gap < 1e3");
    c.expect(d.z1_report.gap >= min_gap, tag + ": z1 spectral gap < 1e3");
    c.expect(d.b1_report.gap >= min_gap, tag + ": b1 spectral gap < 1e3");
  };
  {
    const CohomologyData dz = witness(2, Stratum::Z);
    c.expect(dz.h0_dim == 0 && dz.h1_dim == 6 && dz.h2_dim == 0,
             "genus 2 irreducible dims != (0,6,0)");
    check_gaps(dz, "genus2-Z");
    const CohomologyData dt = witness(2, Stratum::T);
    c.expect(dt.h0_dim == 1 && dt.h1_dim == 8 && dt.h2_dim == 1,
             "genus 2 torus dims != (1,8,1)");
    check_gaps(dt, "genus2-T");
    const CohomologyData dg = witness(2, Stratum::G);
    c.expect(dg.h0_dim == 3 && dg.h1_dim == 12 && dg.h2_dim == 3,
             "genus 2 central dims != (3,12,3)");
    check_gaps(dg, "genus2-G");
  }
  for (int genus = 3; genus <= 4; ++genus) {
    const CohomologyData dz = witness(genus, Stratum::Z);
    const CohomologyData dt = witness(genus, Stratum::T);
    const CohomologyData dg = witness(genus, Stratum::G);
    c.expect(dz.h1_dim == 6 * genus - 6, "h1 at irreducible != 6l-6");
    c.expect(dt.h1_dim == 6 * genus - 4, "h1 at torus != 6l-4");
    c.expect(dg.h1_dim == 6 * genus, "h1 at central != 6l");
    check_gaps(dz, "Z");
    check_gaps(dt, "T");
    check_gaps(dg, "G");
    for (int seed = 0; seed < 20; ++seed) {
      Stratum target = Stratum::Z;
      if (seed == 18) target = Stratum::T;
      if (seed == 19) target = Stratum::G;
      const CohomologyData d =
          compute_cohomology(solve_flat(genus, target, 1000 + seed));
      c.expect(d.h0_dim - d.h1_dim + d.h2_dim == 3 * (2 - 2 * genus),
               "Euler characteristic != 3(2-2l) at genus " +
                   std::to_string(genus));
    }
  }
  return finish("cohomology-dims",
                "cohomology dimensions (0,6,0)/(1,8,1)/(3,12,3) at genus 2, "
                "h1 = 6l-6/6l-4/6l at genus 3..4, Euler characteristic "
                "3(2-2l) on 20 solved representations per genus, spectral "
                "gaps >= 1e3",
                c, "all dimension and gap checks hold");
}

CriterionResult c_central_points() {
  Check c;
  for (int genus = 1; genus <= 4; ++genus) {
    const auto reps = enumerate_central(genus);
    c.expect(static_cast<int>(reps.size()) == (1 << (2 * genus)),
             "count != 2^(2l) at genus " + std::to_string(genus));
    for (const auto& rep : reps)
      c.expect(relator_residual(rep) == 0.0, "central residual not exactly 0");
  }
  return finish("central-points",
                "enumerate_central returns exactly 2^(2l) representations "
                "with residual exactly 0 for genus 1..4",
                c, "counts 4/16/64/256, residuals exactly 0");
}

CriterionResult c_solver() {
  Check c;
  double worst = 0.0;
  for (int genus = 2; genus <= 3; ++genus) {
    for (int seed = 0; seed < 10; ++seed) {
      const Representation rep = solve_flat(genus, Stratum::Z, seed);
      const double res = relator_residual(rep);
      worst = std::max(worst, res);
      c.expect(res <= 1e-10, "residual > 1e-10 at genus " +
                                 std::to_string(genus) + " seed " +
                                 std::to_string(seed));
      c.expect(orbit_type(rep) == Stratum::Z, "solved point not irreducible");
    }
    c.expect(orbit_type(solve_flat(genus, Stratum::T, 7)) == Stratum::T,
             "torus construction does not classify as T");
    c.expect(orbit_type(solve_flat(genus, Stratum::G, 7)) == Stratum::G,
             "central construction does not classify as G");
  }
  std::ostringstream ok;
  ok << "20 solves with residual <= 1e-10 (worst " << format_double(worst)
     << "), classifications Z/T/G correct";
  return finish("solver",
                "solver reaches residual <= 1e-10 with correct orbit type "
                "for genus 2..3, 10 seeds each",
                c, ok.str());
}

CriterionResult c_lambda() {
  Check c;
  auto analyze = [&](Stratum s) {
    const Representation rep = solve_flat(2, s, 1);
    const CohomologyData d = compute_cohomology(rep);
    return lambda_analysis(rep, d);
  };
  const LambdaAnalysis lz = analyze(Stratum::Z);
  c.expect(lz.kernel_dim == 0 && lz.image_dim == 6,
           "lambda at irreducible != (0,6)");
  c.expect(lz.is_isomorphism, "lambda not an isomorphism at irreducible");
  const LambdaAnalysis lt = analyze(Stratum::T);
  c.expect(lt.kernel_dim == 4 && lt.image_dim == 4, "lambda at torus != (4,4)");
  c.expect(!lt.is_isomorphism, "lambda flagged isomorphism at torus");
  const LambdaAnalysis lg = analyze(Stratum::G);
  c.expect(lg.kernel_dim == 12 && lg.image_dim == 0,
           "lambda at central != (12,0)");
  c.expect(!lg.is_isomorphism, "lambda flagged isomorphism at central");
  return finish("lambda",
                "lambda kernel/image dims are (0,6)/(4,4)/(12,0) at genus 2 "
                "with the isomorphism exactly on the top stratum",
                c, "kernel/image (0,6),(4,4),(12,0); isomorphism iff Z");
}

CriterionResult c_poisson_rank() {
  Check c;
  const PoissonModel cone = cone_model();
  const std::vector<double> origin{0, 0, 0};
  c.expect(poisson_rank_at(cone, origin) == 0, "cone rank at origin != 0");
  Rng rng(11);
  int checked = 0;
  while (checked < 100) {
    const PlanarZeroSample s = sample_planar_zero_locus(rng);
    const auto iv = planar_invariant_values(s);
    if (iv.rho == 0) continue;
    const std::vector<double> pt{to_double(iv.x1), to_double(iv.x2),
                                 to_double(iv.rho)};
    c.expect(poisson_rank_at(cone, pt) == 2, "cone rank off origin != 2");
    ++checked;
  }
  const LocalModelSpec g2 = local_model(2, Stratum::G);
  c.expect(poisson_rank_at(g2.model, g2.base_point) == 0,
           "spatial model rank at origin != 0");
  return finish("poisson-rank",
                "Poisson rank is 0 at the cone point, 2 at 100 random "
                "rho > 0 points, and 0 at the spatial model base point",
                c, "cone 0/2, spatial origin 0");
}

CriterionResult c_tangent() {
  Check c;
  const PoissonModel cone = cone_model();
  c.expect(zariski_tangent_dim(cone, std::vector<double>{0, 0, 0}) == 3,
           "cone tangent at origin != 3");
  c.expect(zariski_tangent_dim(cone, std::vector<double>{1, 0, 1}) == 2,
           "cone tangent off origin != 2");
  const LocalModelSpec t2 = local_model(2, Stratum::T);
  c.expect(zariski_tangent_dim(t2.model, t2.base_point) == 7,
           "T model tangent at base point != 7");
  const LocalModelSpec g2 = local_model(2, Stratum::G);
  c.expect(zariski_tangent_dim(g2.model, g2.base_point) == 10,
           "G model tangent at base point != 10");
  return finish("tangent",
                "Zariski tangent dimensions: 3 at the cone point, 2 off it, "
                "7 at the T model base point, 10 at the G model base point",
                c, "tangent dims 3/2/7/10");
}

CriterionResult c_sp4() {
  Check c;
  const InvariantSet inv = spatial_invariants(2);
  const StructureConstants sc = closure_to_lie_algebra(inv);
  c.expect(sc.antisymmetric(), "structure constants not antisymmetric");
  c.expect(sc.jacobi(), "structure constants fail Jacobi");
  const auto sig = sc.killing_signature();
  c.expect(sig.first == 6 && sig.second == 4,
           "Killing signature != (6,4): got (" + std::to_string(sig.first) +
               "," + std::to_string(sig.second) + ")");

  Rng rng(23);
  auto rational_vec = [&](int lo, int hi) {
    return RationalVec3{Rational(rng.uniform_int(lo, hi)),
                        Rational(rng.uniform_int(lo, hi)),
                        Rational(rng.uniform_int(lo, hi))};
  };
  auto scale_vec = [](const RationalVec3& v, const Rational& s) {
    return RationalVec3{v[0] * s, v[1] * s, v[2] * s};
  };
  auto add_vec = [](const RationalVec3& a, const RationalVec3& b) {
    return RationalVec3{a[0] + b[0], a[1] + b[1], a[2] + b[2]};
  };
  const RationalVec3 zero3{Rational(0), Rational(0), Rational(0)};

  int zero_checked = 0;
  while (zero_checked < 200) {
    SpatialConfig cfg;
    const int mode = static_cast<int>(rng.uniform_int(0, 2));
    if (mode == 0) {
      // All four vectors on one line.
      const RationalVec3 v = rational_vec(-3, 3);
      cfg.q1 = scale_vec(v, Rational(rng.uniform_int(-3, 3)));
      cfg.p1 = scale_vec(v, Rational(rng.uniform_int(-3, 3)));
      cfg.q2 = scale_vec(v, Rational(rng.uniform_int(-3, 3)));
      cfg.p2 = scale_vec(v, Rational(rng.uniform_int(-3, 3)));
    } else if (mode == 1) {
      // Each particle individually at zero angular momentum.
      cfg.q1 = rational_vec(-3, 3);
      cfg.p1 = scale_vec(cfg.q1, Rational(rng.uniform_int(-4, 4),
                                          rng.uniform_int(1, 3)));
      cfg.q2 = rational_vec(-3, 3);
      cfg.p2 = scale_vec(cfg.q2, Rational(rng.uniform_int(-4, 4),
                                          rng.uniform_int(1, 3)));
    } else {
      // Opposite angular momenta inside one plane.
      cfg.q1 = rational_vec(-3, 3);
      cfg.p1 = rational_vec(-3, 3);
      const Rational alpha(rng.uniform_int(1, 3)), beta(rng.uniform_int(-2, 2)),
          gamma(rng.uniform_int(-2, 2));
      const Rational delta = (beta * gamma - 1) / alpha;
      cfg.q2 = add_vec(scale_vec(cfg.q1, alpha), scale_vec(cfg.p1, beta));
      cfg.p2 = add_vec(scale_vec(cfg.q1, gamma), scale_vec(cfg.p1, delta));
    }
    if (angular_momentum(cfg) != zero3) {
      c.expect(false, "zero-momentum sampler produced nonzero momentum");
      break;
    }
    const RationalMatrix4 m = sp4_moment(cfg);
    c.expect(is_zero(symplectic_defect(m)), "M^T J + J M != 0");
    c.expect(is_zero(rmat_mul(m, m)), "M^2 != 0 on the zero momentum locus");
    c.expect(rmat_rank(m) <= 2, "rank > 2 on the zero momentum locus");
    ++zero_checked;
  }

  int generic_checked = 0;
  while (generic_checked < 200) {
    SpatialConfig cfg{rational_vec(-5, 5), rational_vec(-5, 5),
                      rational_vec(-5, 5), rational_vec(-5, 5)};
    if (angular_momentum(cfg) == zero3) continue;
    const RationalMatrix4 m = sp4_moment(cfg);
    c.expect(is_zero(symplectic_defect(m)), "M^T J + J M != 0 (generic)");
    c.expect(!is_zero(rmat_mul(m, m)), "M^2 = 0 at nonzero momentum");
    ++generic_checked;
  }
  return finish("sp4",
                "the 10 spatial quadratics close with exact Jacobi and "
                "Killing signature (6,4); the moment matrix is symplectic "
                "with M^2 = 0 exactly on 200 zero-momentum samples and "
                "M^2 != 0 on 200 generic samples",
                c, "closure exact, signature (6,4), 200+200 samples exact");
}

CriterionResult c_kempf_ness() {
  Check c;
  const KempfNessReport rep = kempf_ness_check(100, 5);
  c.expect(rep.rho_identity_exact, "rho^2 = x1^2 + x2^2 fails exactly");
  c.expect(rep.max_rotation_error <= 1e-9,
           "rotation witness error " + format_double(rep.max_rotation_error) +
               " > 1e-9");
  c.expect(rep.ok, "kempf-ness check reports failure");
  std::ostringstream ok;
  ok << "100 pairs, max rotation error " << format_double(rep.max_rotation_error)
     << ", rho identity exact";
  return finish("kempf-ness",
                "rotation witnesses map equal-invariant zero-locus pairs "
                "onto each other within 1e-9 and rho^2 = x1^2 + x2^2 holds "
                "exactly",
                c, ok.str());
}

std::vector<CriterionResult> run_core(int jobs);

CriterionResult c_determinism(const std::vector<CriterionResult>* first_run,
                              int jobs) {
  Check c;
  const std::string m1 = first_run
                             ? manifest_json(*first_run)
                             : manifest_json(run_core(jobs));
  const std::string m2 = manifest_json(run_core(jobs));
  c.expect(m1 == m2, "repeated verification manifests differ");
  return finish("determinism",
                "running the verification suite twice yields byte-identical "
                "manifests",
                c, "manifests byte-identical");
}

using CriterionFn = std::function<CriterionResult()>;

const std::vector<std::pair<std::string, CriterionFn>>& core_registry() {
  static const std::vector<std::pair<std::string, CriterionFn>> reg = {
      {"bracket-constant", c_bracket_constant},
      {"cone-relation", c_cone_relation},
      {"jacobi", c_jacobi},
      {"cohomology-dims", c_cohomology_dims},
      {"central-points", c_central_points},
      {"solver", c_solver},
      {"lambda", c_lambda},
      {"poisson-rank", c_poisson_rank},
      {"tangent", c_tangent},
      {"sp4", c_sp4},
      {"kempf-ness", c_kempf_ness},
  };
  return reg;
}

std::vector<CriterionResult> run_core(int jobs) {
  const auto& reg = core_registry();
  std::vector<CriterionResult> results(reg.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < reg.size(); ++i) results[i] = reg[i].second();
    return results;
  }
  std::vector<std::future<CriterionResult>> futures;
  futures.reserve(reg.size());
  for (const auto& [id, fn] : reg)
    futures.push_back(std::async(std::launch::async, fn));
  for (std::size_t i = 0; i < reg.size(); ++i) results[i] = futures[i].get();
  return results;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> criterion_catalog() {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [id, fn] : core_registry()) out.emplace_back(id, id);
  out.emplace_back("determinism", "determinism");
  return out;
}

double criterion_time_budget(const std::string& id) {
  if (id == "bracket-constant" || id == "cone-relation") return 1.0;
  if (id == "jacobi") return 10.0;
  if (id == "cohomology-dims") return 30.0;
  if (id == "solver") return 60.0;
  if (id == "sp4") return 30.0;
  return 0.0;
}

std::vector<CriterionResult> run_verification(const VerifyOptions& opts) {
  auto matches = [&](const std::string& id) {
    return opts.only.empty() || id.find(opts.only) != std::string::npos;
  };
  std::vector<CriterionResult> results;
  const bool full_core = opts.only.empty();
  std::vector<CriterionResult> core;
  if (full_core) {
    core = run_core(opts.jobs);
    results = core;
  } else {
    for (const auto& [id, fn] : core_registry())
      if (matches(id)) results.push_back(fn());
  }
  if (matches("determinism"))
    results.push_back(
        c_determinism(full_core ? &core : nullptr, opts.jobs));
  return results;
}

std::string manifest_json(const std::vector<CriterionResult>& results) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : results) {
    nlohmann::json j;
    j["id"] = r.id;
    j["name"] = r.name;
    j["pass"] = r.pass;
    j["details"] = r.details;
    arr.push_back(j);
  }
  nlohmann::json root;
  root["criteria"] = arr;
  root["all_passed"] = all_passed(results);
  // Canonical dump path shared with the serialization module.
  std::string out = root.dump();
  return out + "\n";
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

std::optional<Rational> proportionality_constant(
    const std::vector<Poly>& ours, const std::vector<Poly>& reference) {
  if (ours.size() != reference.size()) return std::nullopt;
  std::optional<Rational> constant;
  for (std::size_t i = 0; i < ours.size(); ++i) {
    if (ours[i].is_zero() != reference[i].is_zero()) return std::nullopt;
    if (ours[i].is_zero()) continue;
    const auto& [exp, coeff] = *ours[i].terms().begin();
    const Rational ref_coeff = reference[i].coefficient(exp);
    if (ref_coeff == 0) return std::nullopt;
    const Rational c = ref_coeff / coeff;
    if (constant && *constant != c) return std::nullopt;
    constant = c;
    if (!(ours[i] * c == reference[i])) return std::nullopt;
  }
  return constant;
}

std::vector<Poly> cone_reference_table(const VarSetPtr& gen_vars) {
  const Poly x1 = Poly::variable(gen_vars, "x1");
  const Poly x2 = Poly::variable(gen_vars, "x2");
  const Poly rho = Poly::variable(gen_vars, "rho");
  return {rho * Rational(2), x2 * Rational(2), x1 * Rational(-2)};
}

}  // namespace repstrata
