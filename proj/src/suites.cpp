// The verification suites. Each maps onto the invariants of one module.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

#include "quatmax/calculus.hpp"
#include "quatmax/darboux.hpp"
#include "quatmax/errors.hpp"
#include "quatmax/harness.hpp"
#include "quatmax/maxwell.hpp"

namespace quatmax {

namespace {

constexpr double kExclusionRadius = 0.1;

std::string where(const Point& x) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "(%.6g, %.6g, %.6g)", x(0), x(1), x(2));
  return buf;
}

std::uint64_t subseed(std::uint64_t seed, std::uint64_t k) {
  return seed ^ (0x9E3779B97F4A7C15ull * (k + 1));
}

/// Running maximum with the point where it was attained.
struct Worst {
  double value = 0.0;
  std::string location;

  void update(double v, const Point& x) {
    if (!(v <= value)) {  // also catches NaN
      value = v;
      location = where(x);
    }
  }
};

/// Runs `body`; library errors become a failed check instead of aborting the suite.
Check guarded(const std::string& name, Check::Kind kind, double bound,
              const std::function<Worst()>& body, double upper = 0.0) {
  Check c;
  c.name = name;
  c.kind = kind;
  c.bound = bound;
  c.upper = upper;
  try {
    const Worst w = body();
    c.observed = w.value;
    c.location = w.location;
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    c.observed = std::nan("");
    c.detail = e.what();
  }
  return c;
}

Check at_most(const std::string& name, double bound, const std::function<Worst()>& body) {
  return guarded(name, Check::Kind::AtMost, bound, body);
}

std::vector<MediumProfile> selected_profiles(const RunConfig& cfg) {
  if (cfg.profile) return {make_profile(*cfg.profile)};
  return catalog();
}

std::vector<Point> domain_points(const RunConfig& cfg, std::uint64_t k,
                                 const std::vector<Point>& singular, double lo = -1.0,
                                 double hi = 1.0) {
  return random_points(subseed(cfg.seed, k), cfg.points, lo, hi, singular, kExclusionRadius);
}

// Smooth test fields, deliberately not solutions of anything.

QuatField test_quaternion() {
  const ScalarField x1 = coordinate(0), x2 = coordinate(1), x3 = coordinate(2);
  return quat_field(sin_linear(Vec3C(1.0, 0.3, 0.0)), x2 * x3,
                    exp_linear(Vec3C(0.2, Complex(0.0, -0.4), 0.5)),
                    cos_linear(Vec3C(0.5, 0.0, -0.7), Complex(0.1, 0.2)));
}

QuatField test_E() {
  const ScalarField x1 = coordinate(0), x2 = coordinate(1), x3 = coordinate(2);
  return vector_field(sin_linear(Vec3C(0.0, 1.0, 0.0)) + x1 * x3, cos_linear(Vec3C(1.0, 0.0, 1.0)),
                      exp_linear(Vec3C(0.3, 0.0, 0.0)) * sin_linear(Vec3C(0.0, 1.0, 0.0)));
}

QuatField test_H() {
  const ScalarField x1 = coordinate(0), x2 = coordinate(1), x3 = coordinate(2);
  return vector_field(cos_linear(Vec3C(0.0, 0.0, 1.0)) * x2, sin_linear(Vec3C(1.0, 1.0, 0.0), 0.2),
                      x1 * x1 - x3);
}

SourceData test_sources(const Complex& omega) {
  const ScalarField x3 = coordinate(2);
  return {cos_linear(Vec3C(1.0, 1.0, 0.0)),
          vector_field(x3, sin_linear(Vec3C(1.0, 0.0, 0.0)), constant_field(1.0)), omega};
}

ScalarField test_scalar() {
  return sin_linear(Vec3C(1.0, 0.0, 0.0)) * exp_linear(Vec3C(0.0, 0.5, 0.0)) + coordinate(2);
}

Biquat expected_unit_product(int a, int b) {
  // i_a i_b written out by hand
  static const Biquat table[4][4] = {
      {kOne, kI1, kI2, kI3},
      {kI1, -kOne, kI3, -kI2},
      {kI2, -kI3, -kOne, kI1},
      {kI3, kI2, -kI1, -kOne},
  };
  return table[a][b];
}

Biquat random_biquat(std::mt19937_64& rng) {
  Biquat q;
  for (int k = 0; k < 4; ++k) q[k] = Complex(2.0 * unit_uniform(rng) - 1.0, 2.0 * unit_uniform(rng) - 1.0);
  return q;
}

Biquat random_vector(std::mt19937_64& rng) {
  Biquat q = random_biquat(rng);
  q[0] = 0.0;
  return q;
}

struct DarbouxPair {
  std::string name;
  ScalarField phi;
  ScalarField psi;
  /// Grid-convergence box; exact checks use [-1, 1]^3 minus the exclusion ball.
  double lo;
  double hi;
};

std::vector<DarbouxPair> darboux_pairs() {
  const ScalarField x1 = coordinate(0);
  return {
      {"exp", exp_linear(Vec3C(1.0, 0.0, 0.0)), exp_linear(Vec3C(-1.0, 0.0, 0.0)), -1.0, 1.0},
      {"exp-rotated", exp_linear(Vec3C(1.0, 0.0, 0.0)), exp_linear(Vec3C(0.0, 0.6, 0.8)), -1.0, 1.0},
      {"sum-exp", exp_linear(Vec3C(1.0, 0.0, 0.0)) + exp_linear(Vec3C(0.0, 1.0, 0.0)),
       exp_linear(Vec3C(0.0, 0.0, 1.0)), -1.0, 1.0},
      {"planewave", exp_linear(Vec3C(0.0, 0.0, kImag)), exp_linear(Vec3C(kImag, 0.0, 0.0)), -1.0, 1.0},
      {"spherical-psi", exp_linear(Vec3C(0.0, 0.0, kImag)), fundamental_psi(1.0), 0.5, 1.5},
      {"spherical-phi", fundamental_psi(1.0), exp_linear(Vec3C(0.0, kImag, 0.0)), 0.5, 1.5},
      {"rational", constant_field(1.0) + x1 * x1,
       x1 + (constant_field(1.0) + x1 * x1) * atan(x1), -1.0, 1.0},
  };
}

}  // namespace

// ---------------------------------------------------------------------------

SuiteReport verify_algebra(const RunConfig& cfg) {
  SuiteReport rep;
  rep.suite = "algebra";
  const double tol_table = cfg.tol["algebra.table"];
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      const std::string name = "table i" + std::to_string(a) + "*i" + std::to_string(b);
      Check c;
      c.name = name;
      c.bound = tol_table;
      c.observed = norm_inf(mul(Biquat::Unit(a), Biquat::Unit(b)) - expected_unit_product(a, b));
      rep.checks.push_back(c);
    }
  }
  rep.checks.push_back(at_most("zero divisor (i1 + i i2)^2", tol_table, [] {
    const Biquat z = kI1 + kImag * kI2;
    Worst w;
    w.update(norm_inf(mul(z, z)), Point::Zero());
    return w;
  }));

  const std::size_t n = cfg.algebra_samples;
  const double tol = cfg.tol["algebra.assoc"];
  Worst assoc, distrib, bilinear, formula;
  std::mt19937_64 rng(subseed(cfg.seed, 1));
  for (std::size_t s = 0; s < n; ++s) {
    const Biquat p = random_biquat(rng), q = random_biquat(rng), r = random_biquat(rng);
    const Complex lambda(2.0 * unit_uniform(rng) - 1.0, 2.0 * unit_uniform(rng) - 1.0);
    const double scale = 1.0 + norm_inf(p) * norm_inf(q) * norm_inf(r);
    const Point idx(double(s), 0, 0);
    assoc.update(norm_inf(mul(mul(p, q), r) - mul(p, mul(q, r))) / scale, idx);
    distrib.update(std::max(norm_inf(mul(p, q + r) - (mul(p, q) + mul(p, r))),
                            norm_inf(mul(q + r, p) - (mul(q, p) + mul(r, p)))) / scale, idx);
    bilinear.update(std::max(norm_inf(mul(lambda * p, q) - lambda * mul(p, q)),
                             norm_inf(mul(p, lambda * q) - lambda * mul(p, q))) / scale, idx);
    formula.update(norm_inf(mul(p, q) - mul_by_table(p, q)) / std::max(1e-300, norm_inf(p) * norm_inf(q)), idx);
  }
  auto sample_check = [](const std::string& name, double bound, const Worst& w) {
    Check c;
    c.name = name;
    c.bound = bound;
    c.observed = w.value;
    if (!w.location.empty()) c.location = "sample " + w.location;
    return c;
  };
  rep.checks.push_back(sample_check("associativity", tol, assoc));
  rep.checks.push_back(sample_check("distributivity", tol, distrib));
  rep.checks.push_back(sample_check("complex bilinearity", tol, bilinear));
  rep.checks.push_back(sample_check("product formula vs table", cfg.tol["algebra.formula"], formula));

  Worst anti, anti_vec;
  std::mt19937_64 rng2(subseed(cfg.seed, 2));
  const std::size_t pairs = std::max<std::size_t>(n / 10, 1);
  for (std::size_t s = 0; s < pairs; ++s) {
    const Biquat p = random_vector(rng2), q = random_vector(rng2);
    const double scale = std::max(1e-300, norm_inf(p) * norm_inf(q));
    const Point idx(double(s), 0, 0);
    anti.update(std::abs(dot_via_anticommutator(p, q) - dot(p, q)) / scale, idx);
    anti_vec.update(norm_inf(anticommutator(p, q).vector_part()) / scale, idx);
  }
  rep.checks.push_back(sample_check("anticommutator scalar product", cfg.tol["algebra.anticommutator"], anti));
  rep.checks.push_back(sample_check("anticommutator vector part", cfg.tol["algebra.anticommutator"], anti_vec));
  return rep;
}

SuiteReport verify_identities(const RunConfig& cfg) {
  SuiteReport rep;
  rep.suite = "identities";
  const double tol = cfg.tol["identities"];
  const QuatField f = test_quaternion();
  const ScalarField u = test_scalar();
  const auto profiles = selected_profiles(cfg);
  std::uint64_t k = 10;
  for (const auto& m : profiles) {
    const auto pts = domain_points(cfg, k++, m.singular_points());
    for (const auto& [tag, phi] : {std::pair{"phi", m.phi()}, std::pair{"eps", m.eps}}) {
      const std::string suffix = std::string("[") + m.name + ":" + tag + "]";
      rep.checks.push_back(at_most("leibniz" + suffix, tol, [&] {
        Worst w;
        for (const auto& x : pts) w.update(norm_inf(leibniz_residual(phi, f, x)), x);
        return w;
      }));
      rep.checks.push_back(at_most("gauge identity" + suffix, tol, [&] {
        Worst w;
        for (const auto& x : pts) w.update(norm_inf(gauge_identity_residual(phi, f, x)), x);
        return w;
      }));
      rep.checks.push_back(at_most("D^2 = -laplacian" + suffix, tol, [&] {
        const QuatField dphi = D(phi);
        Worst w;
        for (const auto& x : pts) {
          w.update(norm_inf(apply_D(dphi, x) + Biquat::FromScalar(phi.laplacian(x))), x);
        }
        return w;
      }));
    }
    rep.checks.push_back(at_most("D vs vector form[" + m.name + "]", cfg.tol["identities.vector_form"], [&] {
      const QuatField g = m.phi() * f;
      Worst w;
      for (const auto& x : pts) w.update(norm_inf(apply_D(g, x) - vector_form_D(g, x)), x);
      return w;
    }));
  }
  const auto pts = domain_points(cfg, 9, {});
  rep.checks.push_back(at_most("D^2 = -laplacian[test scalar]", tol, [&] {
    const QuatField du = D(u);
    Worst w;
    for (const auto& x : pts) w.update(norm_inf(apply_D(du, x) + Biquat::FromScalar(u.laplacian(x))), x);
    return w;
  }));
  return rep;
}

SuiteReport verify_riccati(const RunConfig& cfg) {
  SuiteReport rep;
  rep.suite = "riccati";
  const ScalarField u = test_scalar();
  const QuatField shift = constant_quat(0.01 * kI1);
  std::uint64_t k = 20;
  double witness = 0.0;
  std::string witness_at;
  for (const auto& m : selected_profiles(cfg)) {
    const auto pts = domain_points(cfg, k++, m.singular_points());
    const GeneratingFunction g(m.phi());
    rep.checks.push_back(at_most("riccati[" + m.name + "]", cfg.tol["riccati"], [&] {
      Worst w;
      for (const auto& x : pts) w.update(norm_inf(riccati_residual(g.alpha, g.v, x)), x);
      return w;
    }));
    Check floor = guarded("perturbed alpha stays off[" + m.name + "]", Check::Kind::AtLeast,
                          cfg.tol["riccati.perturbed_floor"], [&] {
                            const QuatField perturbed = g.alpha + shift;
                            Worst w;
                            double lowest = INFINITY;
                            for (const auto& x : pts) {
                              const double r = norm_inf(riccati_residual(perturbed, g.v, x));
                              w.update(r, x);
                              lowest = std::min(lowest, r);
                            }
                            if (w.value > witness) {
                              witness = w.value;
                              witness_at = m.name + " " + w.location;
                            }
                            w.value = lowest;
                            return w;
                          });
    rep.checks.push_back(floor);
    rep.checks.push_back(at_most("factorization[" + m.name + "]", cfg.tol["factorization"], [&] {
      Worst w;
      for (const auto& x : pts) w.update(norm_inf(factorization_residual(u, g.alpha, g.v, x)), x);
      return w;
    }));
  }
  Check wc;
  wc.name = "perturbed alpha witness";
  wc.kind = Check::Kind::AtLeast;
  wc.bound = cfg.tol["riccati.witness"];
  wc.observed = witness;
  wc.location = witness_at;
  rep.checks.push_back(wc);
  return rep;
}

SuiteReport verify_darboux(const RunConfig& cfg) {
  SuiteReport rep;
  rep.suite = "darboux";
  const double tol = cfg.tol["darboux"];
  std::uint64_t k = 30;
  for (const auto& pair : darboux_pairs()) {
    const GeneratingFunction g(pair.phi);
    const SchrodingerSolution psi{pair.psi, g.v};
    const auto singular = merge_singular(pair.phi.singular_points(), pair.psi.singular_points());
    const auto pts = domain_points(cfg, k++, singular);
    rep.checks.push_back(at_most("darboux dirac[" + pair.name + "]", tol, [&] {
      const QuatField f = darboux_transform(g, psi);
      Worst w;
      for (const auto& x : pts) w.update(norm_inf(dirac_residual(f, g.alpha, x)), x);
      return w;
    }));
    const double lo = cfg.tol["order.lo"], hi = cfg.tol["order.hi"];
    const double h = (pair.hi - pair.lo) / 8.0;
    GridSpec coarse = GridSpec::Cube(pair.lo, pair.hi, h);
    ConvergenceStudy study;
    Check order = guarded("grid order[" + pair.name + "]", Check::Kind::Within, lo, [&] {
      const QuatField f = darboux_transform(g, psi);
      study = convergence_study(coarse, 3, [&](const GridSpec& s) {
        return grid_dirac_residual(f, g.alpha, s);
      });
      Worst w;
      w.value = *std::min_element(study.order.begin(), study.order.end());
      const double top = *std::max_element(study.order.begin(), study.order.end());
      if (top > hi) w.value = top;
      return w;
    }, hi);
    if (!study.order.empty()) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "errors %.3e %.3e %.3e orders %.3f %.3f", study.error[0],
                    study.error[1], study.error[2], study.order[0], study.order[1]);
      order.detail = buf;
    }
    rep.checks.push_back(order);
  }

  // Static Maxwell fields built from the construction, checked in classical form.
  struct StaticCase {
    std::string name;
    MediumProfile medium;
    ScalarField psi;
  };
  const std::vector<StaticCase> cases = {
      {"vacuum", vacuum(), coordinate(0)},
      {"exp", exponential({1, 0, 0}), exp_linear(Vec3C(0.0, 0.5, 0.0))},
      {"product-exp", exponential({1, 2, 0}, 0.0, {0, 0, 1}), exp_linear(Vec3C(-0.5, -1.0, 0.0))},
      {"planewave-phi", planewave_phi({0, 0, 1}), exp_linear(Vec3C(kImag, 0.0, 0.0))},
      {"planewave-phi/spherical-psi", planewave_phi({0, 0, 1}), fundamental_psi(1.0)},
  };
  for (const auto& sc : cases) {
    const auto singular = merge_singular(sc.medium.singular_points(), sc.psi.singular_points());
    const auto pts = domain_points(cfg, k++, singular);
    rep.checks.push_back(at_most("static maxwell[" + sc.name + "]", cfg.tol["static"], [&] {
      const TransformedQuantities t = transform(sc.medium, 0.0, pts);
      const GeneratingFunction g(t.sqrt_eps);
      const QuatField E = static_maxwell_solution(sc.medium, {sc.psi, g.v}, pts);
      const QuatField H = constant_quat(Biquat::Zero());
      const SourceData none = SourceData::Zero(0.0);
      Worst w;
      for (const auto& x : pts) {
        const ClassicalResiduals c = classical_residuals(E, H, sc.medium, none, x);
        w.update(std::max(norm_inf(c.s1), norm_inf(c.s2)), x);
      }
      return w;
    }));
  }
  return rep;
}

SuiteReport verify_equivalence(const RunConfig& cfg) {
  SuiteReport rep;
  rep.suite = "equivalence";
  const QuatField E = test_E();
  const QuatField H = test_H();
  const SourceData s = test_sources(cfg.omega);
  std::uint64_t k = 50;
  for (const auto& m : selected_profiles(cfg)) {
    const auto pts = domain_points(cfg, k++, m.singular_points());
    const TransformedQuantities t = transform(m, cfg.omega, pts);
    const auto [se, sh] = scale_fields(E, H, t);
    rep.checks.push_back(at_most("map vs direct[" + m.name + "]", cfg.tol["equivalence"], [&] {
      Worst w;
      for (const auto& x : pts) {
        const QuaternionicResiduals mapped = equivalence_map(classical_residuals(E, H, m, s, x), t, x);
        const QuaternionicResiduals direct = quaternionic_residuals(se, sh, t, s, x);
        w.update(std::max(norm_inf(mapped.R1 - direct.R1), norm_inf(mapped.R2 - direct.R2)), x);
      }
      return w;
    }));
    rep.checks.push_back(at_most("inverse map[" + m.name + "]", cfg.tol["equivalence"], [&] {
      Worst w;
      for (const auto& x : pts) {
        const Complex a = t.sqrt_eps.value(x), b = t.sqrt_mu.value(x);
        const ClassicalResiduals c = classical_residuals(E, H, m, s, x);
        const ClassicalResiduals back = inverse_map(quaternionic_residuals(se, sh, t, s, x), a, b);
        w.update(std::max({norm_inf(back.s1 - c.s1), norm_inf(Vec3C(back.s2 - c.s2)),
                           norm_inf(back.s3 - c.s3), norm_inf(Vec3C(back.s4 - c.s4))}), x);
      }
      return w;
    }));
    rep.checks.push_back(at_most("scalar/vector bookkeeping[" + m.name + "]",
                                 cfg.tol["equivalence.bookkeeping"], [&] {
      Worst w;
      for (const auto& x : pts) {
        const ClassicalResiduals c = classical_residuals(E, H, m, s, x);
        ClassicalResiduals only_scalar = c, only_vector = c;
        only_scalar.s2.setZero();
        only_scalar.s4.setZero();
        only_vector.s1 = only_vector.s3 = 0.0;
        const auto qs = equivalence_map(only_scalar, t, x);
        const auto qv = equivalence_map(only_vector, t, x);
        w.update(std::max({norm_inf(qs.R1.vector_part()), norm_inf(qs.R2.vector_part()),
                           norm_inf(qv.R1.scalar()), norm_inf(qv.R2.scalar())}), x);
      }
      return w;
    }));
    rep.checks.push_back(at_most("manufactured solution[" + m.name + "]", cfg.tol["exact_solution"], [&] {
      // Faraday and div(μH) = 0 hold by construction; ρ and j absorb the rest.
      QuatField sol_E = E;
      QuatField sol_H = constant_quat(Biquat::Zero());
      if (cfg.omega == Complex(0.0)) {
        sol_E = gradient(test_scalar());
      } else {
        sol_H = faraday_partner(E, m, cfg.omega);
      }
      const SourceData exact = manufacture_sources(sol_E, sol_H, m, cfg.omega);
      const auto [ssE, ssH] = scale_fields(sol_E, sol_H, t);
      Worst w;
      for (const auto& x : pts) {
        const ClassicalResiduals c = classical_residuals(sol_E, sol_H, m, exact, x);
        const QuaternionicResiduals q = quaternionic_residuals(ssE, ssH, t, exact, x);
        w.update(std::max({norm_inf(c.s1), norm_inf(c.s2), norm_inf(c.s3), norm_inf(c.s4),
                           norm_inf(q.R1), norm_inf(q.R2)}), x);
      }
      return w;
    }));
  }
  if (!cfg.profile && cfg.omega != Complex(0.0)) {
    rep.checks.push_back(at_most("vacuum plane wave", cfg.tol["exact_solution"], [&] {
      const MediumProfile m = vacuum();
      const Complex w = cfg.omega;
      const ScalarField wave = exp_linear(Vec3C(-kImag * w, 0.0, 0.0));
      const QuatField pE = wave * constant_quat(kI3);
      const QuatField pH = wave * constant_quat(-kI2);
      const auto pts = domain_points(cfg, 60, {});
      const TransformedQuantities t = transform(m, w, pts);
      const auto [sE, sH] = scale_fields(pE, pH, t);
      const SourceData none = SourceData::Zero(w);
      Worst worst;
      for (const auto& x : pts) {
        const ClassicalResiduals c = classical_residuals(pE, pH, m, none, x);
        const QuaternionicResiduals q = quaternionic_residuals(sE, sH, t, none, x);
        worst.update(std::max({norm_inf(c.s1), norm_inf(c.s2), norm_inf(c.s3), norm_inf(c.s4),
                               norm_inf(q.R1), norm_inf(q.R2)}), x);
      }
      return worst;
    }));
  }
  return rep;
}

SuiteReport verify_fundamental(const RunConfig& cfg) {
  SuiteReport rep;
  rep.suite = "fundamental";
  const MediumProfile m = make_profile(cfg.profile.value_or("planewave-phi:c=0,0,1"));
  const Complex c = cfg.c.value_or(1.0);
  const GeneratingFunction g(m.phi());
  const ScalarField psi = fundamental_psi(c);

  // 0.1 < |x| <= 2
  std::vector<Point> pts;
  {
    std::mt19937_64 rng(subseed(cfg.seed, 70));
    while (pts.size() < cfg.points) {
      Point x;
      for (int i = 0; i < 3; ++i) x(i) = 4.0 * unit_uniform(rng) - 2.0;
      const double r = x.norm();
      bool ok = r > kExclusionRadius && r <= 2.0;
      for (const auto& p : m.singular_points()) ok = ok && (x - p).norm() > kExclusionRadius;
      if (ok) pts.push_back(x);
    }
  }

  rep.checks.push_back(at_most("helmholtz", cfg.tol["fundamental.helmholtz"], [&] {
    Worst w;
    for (const auto& x : pts) w.update(std::abs(-psi.laplacian(x) - c * c * psi.value(x)), x);
    return w;
  }));
  rep.checks.push_back(at_most("route equality", cfg.tol["fundamental.route"], [&] {
    const QuatField via_darboux = darboux_transform(g, {psi, g.v});
    Worst w;
    for (const auto& x : pts) {
      w.update(norm_inf(fundamental_solution(g, c, x) - via_darboux.value(x)), x);
    }
    return w;
  }));
  GridSpec grid = cfg.grid.value_or(GridSpec::Cube(-2.0, 2.0, 0.125));
  grid.exclusion = cfg.exclusion.value_or(Ball{Point::Zero(), kExclusionRadius});
  grid.validate();
  for (const auto& [label, field] :
       {std::pair{"closed form", fundamental_solution_field(g, c)},
        std::pair{"darboux route", darboux_transform(g, {psi, g.v})}}) {
    rep.checks.push_back(at_most(std::string("dirac residual on grid[") + label + "]",
                                 cfg.tol["fundamental.dirac"], [&] {
      const ResidualReport r = sweep(grid, {"dirac"}, [&](const Point& x) {
        return std::vector<Biquat>{dirac_residual(field, g.alpha, x)};
      }, m.spec, 0.0);
      Worst w;
      w.value = r.at("dirac").linf;
      w.location = std::to_string(r.valid_nodes) + " nodes";
      return w;
    }));
  }
  return rep;
}

}  // namespace quatmax
