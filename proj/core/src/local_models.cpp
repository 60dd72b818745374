#include "repstrata/local_models.hpp"

#include <stdexcept>

namespace repstrata {

namespace {

// Table entries re-expressed in the generators, from the exact closure.
std::vector<std::vector<Poly>> closed_table(const InvariantSet& inv,
                                            const VarSetPtr& gen_vars) {
  const BracketTable t = bracket_table(inv);
  const int n = static_cast<int>(inv.generators.size());
  std::vector<std::vector<Poly>> table(n, std::vector<Poly>(n, Poly(gen_vars)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!t.in_generators[i][j])
        throw std::logic_error("invariant bracket table does not close");
      // Re-home the polynomial onto the shared generator variable set.
      Poly e(gen_vars);
      for (const auto& [exp, c] : t.in_generators[i][j]->terms())
        e.set_coefficient(exp, c);
      table[i][j] = e;
    }
  }
  return table;
}

// Darboux block: consecutive pairs (a_k, b_k) with {a_k, b_k} = -1,
// matching the pinned canonical convention {q,p} = -1.
void append_darboux_pairs(std::vector<std::string>& names, int pairs,
                          const std::string& prefix) {
  for (int k = 0; k < pairs; ++k) {
    names.push_back(prefix + "a" + std::to_string(k + 1));
    names.push_back(prefix + "b" + std::to_string(k + 1));
  }
}

// Gram-matrix entry of the spatial invariant set as a generator variable:
// vectors are ordered q_1..q_n, p_1..p_n and gens list the upper triangle
// row-major, so (i,j) with i <= j sits at offset i*(2n) - i(i-1)/2 + (j-i).
int gram_index(int i, int j, int m) {
  if (i > j) std::swap(i, j);
  return i * m - i * (i - 1) / 2 + (j - i);
}

}  // namespace

PoissonModel cone_model() {
  const InvariantSet inv = planar_invariants(1);
  PoissonModel model;
  model.generators = std::make_shared<const VarSet>(inv.names);
  model.table = closed_table(inv, model.generators);
  const Poly x1 = Poly::variable(model.generators, "x1");
  const Poly x2 = Poly::variable(model.generators, "x2");
  const Poly rho = Poly::variable(model.generators, "rho");
  model.relations = {x1 * x1 + x2 * x2 - rho * rho};
  model.inequalities = {rho};
  return model;
}

namespace {

// Reduced planar system of n particles (total angular momentum zero).
// n = 1 is the cone in the classical coordinates; for n >= 2 the
// generators are the dot products and determinants of the 2n plane
// vectors, cut by the momentum itself (a linear combination of the
// determinant generators) and the quadratic det*det = Gram identities.
PoissonModel planar_reduced_model(int particles) {
  if (particles == 1) return cone_model();
  const InvariantSet inv = planar_invariants(particles);
  PoissonModel model;
  model.generators = std::make_shared<const VarSet>(inv.names);
  model.table = closed_table(inv, model.generators);

  const int m = 2 * particles;
  const int dots = m * (m + 1) / 2;
  auto dot_var = [&](int i, int j) {
    return Poly::variable(model.generators, gram_index(i, j, m));
  };
  auto det_var = [&](int i, int j) {
    // determinants follow the dots, pairs (i,j), i<j, row-major
    const int offset = dots + i * m - i * (i + 1) / 2 + (j - i - 1);
    return Poly::variable(model.generators, offset);
  };

  // Momentum = sum_i det(q_i, p_i) vanishes on the reduced locus.
  Poly momentum(model.generators);
  for (int i = 0; i < particles; ++i) momentum += det_var(i, particles + i);
  model.relations.push_back(momentum);

  // det(v_i,v_j) det(v_k,v_l) = (v_i.v_k)(v_j.v_l) - (v_i.v_l)(v_j.v_k)
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = i; k < m; ++k)
        for (int l = k + 1; l < m; ++l) {
          if (k < i || (k == i && l < j)) continue;
          model.relations.push_back(det_var(i, j) * det_var(k, l) -
                                    dot_var(i, k) * dot_var(j, l) +
                                    dot_var(i, l) * dot_var(j, k));
        }

  // Plane vectors: Gram rank <= 2, i.e. all 3x3 minors vanish.
  for (int r1 = 0; r1 < m; ++r1)
    for (int r2 = r1 + 1; r2 < m; ++r2)
      for (int r3 = r2 + 1; r3 < m; ++r3)
        for (int c1 = 0; c1 < m; ++c1)
          for (int c2 = c1 + 1; c2 < m; ++c2)
            for (int c3 = c2 + 1; c3 < m; ++c3) {
              const int rows[3] = {r1, r2, r3}, cols[3] = {c1, c2, c3};
              Poly det(model.generators);
              const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                       {2, 1, 0}, {1, 0, 2}, {0, 2, 1}};
              for (int p = 0; p < 6; ++p) {
                Poly term = Poly::constant(model.generators,
                                           Rational(p < 3 ? 1 : -1));
                for (int t = 0; t < 3; ++t)
                  term = term * dot_var(rows[t], cols[perms[p][t]]);
                det += term;
              }
              model.relations.push_back(det);
            }

  // Squared lengths are nonnegative on the image.
  for (int i = 0; i < m; ++i) model.inequalities.push_back(dot_var(i, i));
  return model;
}

// Reduced spatial system of n particles with total angular momentum zero:
// dot-product generators, 4x4 Gram minors (rank <= 3 in R^3) and the
// quadratic identities S J S = 0 induced by the zero-momentum locus.
PoissonModel spatial_reduced_model(int particles) {
  const InvariantSet inv = spatial_invariants(particles);
  PoissonModel model;
  model.generators = std::make_shared<const VarSet>(inv.names);
  model.table = closed_table(inv, model.generators);

  const int m = 2 * particles;
  auto dot_var = [&](int i, int j) {
    return Poly::variable(model.generators, gram_index(i, j, m));
  };

  // All 4x4 minors of the Gram matrix.
  std::vector<int> idx(4);
  auto minor4 = [&](const std::vector<int>& rows, const std::vector<int>& cols) {
    Poly det(model.generators);
    const int perms[24][4] = {
        {0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}, {0, 2, 3, 1}, {0, 3, 1, 2},
        {0, 3, 2, 1}, {1, 0, 2, 3}, {1, 0, 3, 2}, {1, 2, 0, 3}, {1, 2, 3, 0},
        {1, 3, 0, 2}, {1, 3, 2, 0}, {2, 0, 1, 3}, {2, 0, 3, 1}, {2, 1, 0, 3},
        {2, 1, 3, 0}, {2, 3, 0, 1}, {2, 3, 1, 0}, {3, 0, 1, 2}, {3, 0, 2, 1},
        {3, 1, 0, 2}, {3, 1, 2, 0}, {3, 2, 0, 1}, {3, 2, 1, 0}};
    const int signs[24] = {1, -1, -1, 1,  1, -1, -1, 1,  1, -1, -1, 1,
                           1, -1, -1, 1,  1, -1, -1, 1,  1, -1, -1, 1};
    for (int p = 0; p < 24; ++p) {
      Poly term = Poly::constant(model.generators, Rational(signs[p]));
      for (int t = 0; t < 4; ++t)
        term = term * dot_var(rows[t], cols[perms[p][t]]);
      det += term;
    }
    return det;
  };
  std::vector<std::vector<int>> quads;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      for (int c = b + 1; c < m; ++c)
        for (int d = c + 1; d < m; ++d) quads.push_back({a, b, c, d});
  for (const auto& rows : quads)
    for (const auto& cols : quads) model.relations.push_back(minor4(rows, cols));

  // S J S = 0 on the zero-angular-momentum locus (J pairs q_i with p_i).
  auto omega = [&](int u, int v) {  // symplectic pairing of vector slots
    if (v == u + particles) return 1;
    if (u == v + particles) return -1;
    return 0;
  };
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      Poly entry(model.generators);
      for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v) {
          const int w = omega(u, v);
          if (w != 0)
            entry += dot_var(a, u) * dot_var(v, b) * Rational(w);
        }
      model.relations.push_back(entry);
    }
  }

  for (int i = 0; i < m; ++i) model.inequalities.push_back(dot_var(i, i));
  return model;
}

}  // namespace

LocalModelSpec local_model(int genus, Stratum stratum) {
  if (genus < 2)
    throw std::invalid_argument("local models require genus >= 2");
  LocalModelSpec spec;
  spec.genus = genus;
  spec.stratum = stratum;

  switch (stratum) {
    case Stratum::Z: {
      spec.free_dim = 6 * (genus - 1);
      spec.ambient_h1_dim = 6 * (genus - 1);
      std::vector<std::string> names;
      append_darboux_pairs(names, 3 * (genus - 1), "");
      spec.model.generators = std::make_shared<const VarSet>(names);
      break;
    }
    case Stratum::T: {
      spec.free_dim = 2 * genus;
      spec.ambient_h1_dim = 6 * genus - 4;
      const PoissonModel reduced = planar_reduced_model(genus - 1);
      std::vector<std::string> names;
      append_darboux_pairs(names, genus, "t");
      for (const auto& nm : reduced.generators->names()) names.push_back(nm);
      spec.model.generators = std::make_shared<const VarSet>(names);
      // Relations and inequalities act on the reduced block only.
      const int shift = 2 * genus;
      auto rehome = [&](const Poly& p) {
        Poly out(spec.model.generators);
        for (const auto& [e, c] : p.terms()) {
          Poly::Exponents exp(spec.model.generators->size(), 0);
          for (std::size_t i = 0; i < e.size(); ++i) exp[shift + i] = e[i];
          out.set_coefficient(exp, c);
        }
        return out;
      };
      for (const auto& rel : reduced.relations)
        spec.model.relations.push_back(rehome(rel));
      for (const auto& ineq : reduced.inequalities)
        spec.model.inequalities.push_back(rehome(ineq));
      const int n = spec.model.generator_count();
      spec.model.table.assign(n, std::vector<Poly>(n, Poly(spec.model.generators)));
      for (int i = 0; i < reduced.generator_count(); ++i)
        for (int j = 0; j < reduced.generator_count(); ++j)
          spec.model.table[shift + i][shift + j] = rehome(reduced.table[i][j]);
      break;
    }
    case Stratum::G: {
      spec.free_dim = 0;
      spec.ambient_h1_dim = 6 * genus;
      spec.model = spatial_reduced_model(genus);
      break;
    }
  }

  // Shared Darboux table for the free factor.
  if (spec.free_dim > 0) {
    const int n = spec.model.generator_count();
    if (spec.model.table.empty())
      spec.model.table.assign(n, std::vector<Poly>(n, Poly(spec.model.generators)));
    for (int k = 0; k + 1 < spec.free_dim; k += 2) {
      spec.model.table[k][k + 1] = Poly::constant(spec.model.generators, -1);
      spec.model.table[k + 1][k] = Poly::constant(spec.model.generators, 1);
    }
  }

  spec.base_point.assign(spec.model.generator_count(), 0.0);
  return spec;
}

std::vector<StratumRow> stratum_report(int genus, std::uint64_t seed,
                                       double tol) {
  if (genus < 2 || genus > 4)
    throw std::invalid_argument("stratum_report supports genus 2..4");
  std::vector<StratumRow> rows;
  const Stratum strata[3] = {Stratum::Z, Stratum::T, Stratum::G};
  for (int s = 0; s < 3; ++s) {
    StratumRow row;
    row.genus = genus;
    row.stratum = strata[s];
    const Representation rep =
        solve_flat(genus, strata[s], seed + 100 * genus + s);
    const CohomologyData coh = compute_cohomology(rep, tol);
    row.h0 = coh.h0_dim;
    row.h1 = coh.h1_dim;
    row.h2 = coh.h2_dim;
    const LambdaAnalysis lam = lambda_analysis(rep, coh, tol);
    row.lambda_kernel = lam.kernel_dim;
    row.lambda_image = lam.image_dim;
    const LocalModelSpec model = local_model(genus, strata[s]);
    row.poisson_rank = poisson_rank_at(model.model, model.base_point, tol);
    row.tangent_dim = zariski_tangent_dim(model.model, model.base_point, tol);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace repstrata
