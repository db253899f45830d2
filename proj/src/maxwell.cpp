#include "quatmax/maxwell.hpp"

#include <algorithm>
#include <cmath>

#include "quatmax/calculus.hpp"
#include "quatmax/errors.hpp"

namespace quatmax {

namespace {

void require_vectorial(const QuatField& f, const char* what) {
  if (!f.vectorial()) throw ContractViolation(std::string(what) + " must be purely vectorial");
}

Complex div_of(const QJet& j) { return j.d[0][1] + j.d[1][2] + j.d[2][3]; }

Vec3C rot_of(const QJet& j) {
  return Vec3C(j.d[1][3] - j.d[2][2], j.d[2][1] - j.d[0][3], j.d[0][2] - j.d[1][1]);
}

Complex weighted_div(const SJet& w, const QJet& f) {
  return w.value * div_of(f) + dot<double>(w.grad, f.value.vector());
}

Biquat dirac_of(const QJet& j) {
  Biquat r;
  for (int k = 0; k < 3; ++k) r += mul(Biquat::Unit(k + 1), j.d[k]);
  return r;
}

}  // namespace

ClassicalResiduals classical_residuals(const QuatField& E, const QuatField& H,
                                       const MediumProfile& m, const SourceData& s,
                                       const Point& x) {
  require_vectorial(E, "E");
  require_vectorial(H, "H");
  const QJet e = E.jet(x);
  const QJet h = H.jet(x);
  const SJet eps = m.eps.jet(x);
  const SJet mu = m.mu.jet(x);
  const Complex iw = kImag * s.omega;
  ClassicalResiduals r;
  r.s1 = weighted_div(eps, e) - s.rho.value(x);
  r.s2 = rot_of(e) + iw * mu.value * h.value.vector();
  r.s3 = weighted_div(mu, h);
  r.s4 = rot_of(h) - iw * eps.value * e.value.vector() - s.j.value(x).vector();
  return r;
}

QuaternionicResiduals quaternionic_residuals(const QuatField& scaled_E, const QuatField& scaled_H,
                                             const TransformedQuantities& t, const SourceData& s,
                                             const Point& x) {
  require_vectorial(scaled_E, "scaled E");
  require_vectorial(scaled_H, "scaled H");
  const QJet e = scaled_E.jet(x);
  const QJet h = scaled_H.jet(x);
  const Biquat eps_vec = t.eps_vec.value(x);
  const Biquat mu_vec = t.mu_vec.value(x);
  const Complex ik = kImag * t.k.value(x);
  const Complex rho = s.rho.value(x);
  const Biquat j = s.j.value(x);
  QuaternionicResiduals r;
  r.R1 = dirac_of(e) + right_mul(eps_vec)(e.value) + ik * h.value +
         Biquat::FromScalar(rho / t.sqrt_eps.value(x));
  r.R2 = dirac_of(h) + right_mul(mu_vec)(h.value) - ik * e.value - t.sqrt_mu.value(x) * j;
  return r;
}

QuaternionicResiduals equivalence_map(const ClassicalResiduals& c, const Complex& sqrt_eps,
                                      const Complex& sqrt_mu) {
  return {Biquat(-c.s1 / sqrt_eps, Vec3C(sqrt_eps * c.s2)),
          Biquat(-c.s3 / sqrt_mu, Vec3C(sqrt_mu * c.s4))};
}

QuaternionicResiduals equivalence_map(const ClassicalResiduals& c, const TransformedQuantities& t,
                                      const Point& x) {
  return equivalence_map(c, t.sqrt_eps.value(x), t.sqrt_mu.value(x));
}

ClassicalResiduals inverse_map(const QuaternionicResiduals& q, const Complex& sqrt_eps,
                               const Complex& sqrt_mu) {
  ClassicalResiduals c;
  c.s1 = -sqrt_eps * q.R1.scalar();
  c.s2 = q.R1.vector() / sqrt_eps;
  c.s3 = -sqrt_mu * q.R2.scalar();
  c.s4 = q.R2.vector() / sqrt_mu;
  return c;
}

Biquat static_residual(StaticEquation which, const QuatField& field, const TransformedQuantities& t,
                       const SourceData& s, const Point& x) {
  if (t.omega != Complex(0.0) || s.omega != Complex(0.0)) {
    throw ContractViolation("static residual requires omega = 0");
  }
  require_vectorial(field, "static field");
  const QJet f = field.jet(x);
  if (which == StaticEquation::Electric) {
    return dirac_of(f) + right_mul(t.eps_vec.value(x))(f.value) +
           Biquat::FromScalar(s.rho.value(x) / t.sqrt_eps.value(x));
  }
  return dirac_of(f) + right_mul(t.mu_vec.value(x))(f.value) - t.sqrt_mu.value(x) * s.j.value(x);
}

SourceData manufacture_sources(const QuatField& E, const QuatField& H, const MediumProfile& m,
                               const Complex& omega) {
  require_vectorial(E, "E");
  require_vectorial(H, "H");
  // D f = -div f + rot f for vectorial f
  ScalarField rho = (-scalar_part(D(m.eps * E))).labeled("rho");
  QuatField j = (vector_part(D(H)) - (kImag * omega) * (m.eps * E)).labeled("j");
  return {rho, j, omega};
}

QuatField faraday_partner(const QuatField& E, const MediumProfile& m, const Complex& omega) {
  require_vectorial(E, "E");
  if (omega == Complex(0.0)) throw ContractViolation("faraday_partner needs a nonzero frequency");
  return ((kImag / omega) * (reciprocal(m.mu) * vector_part(D(E)))).labeled("H");
}

const Norms& ResidualReport::at(const std::string& name) const {
  for (const auto& [n, v] : residuals) {
    if (n == name) return v;
  }
  throw ConfigError("report has no residual named '" + name + "'");
}

nlohmann::json ResidualReport::to_json() const {
  nlohmann::json j;
  j["profile"] = profile;
  j["omega"] = {{"re", omega.real()}, {"im", omega.imag()}};
  nlohmann::json g;
  g["h"] = grid.h;
  g["counts"] = grid.counts;
  g["origin"] = {grid.origin(0), grid.origin(1), grid.origin(2)};
  if (grid.exclusion) {
    const auto& b = *grid.exclusion;
    g["exclusion"] = {{"center", {b.center(0), b.center(1), b.center(2)}}, {"radius", b.radius}};
  } else {
    g["exclusion"] = nullptr;
  }
  g["valid_nodes"] = valid_nodes;
  j["grid"] = g;
  nlohmann::json r = nlohmann::json::object();
  for (const auto& [name, n] : residuals) r[name] = {{"linf", n.linf}, {"l2", n.l2}};
  j["residuals"] = r;
  return j;
}

ResidualReport sweep(const GridSpec& grid, const std::vector<std::string>& names,
                     const PointResiduals& eval, std::string profile, Complex omega) {
  grid.validate();
  const std::size_t N = grid.size();
  const std::size_t R = names.size();
  std::vector<double> mags(N * R, 0.0);
  std::vector<std::uint8_t> valid(N, 0);
  parallel_for(N, [&](std::size_t n) {
    const Point x = grid.node(n);
    if (grid.excluded(x)) return;
    const auto values = eval(x);
    if (values.size() != R) throw ContractViolation("sweep: residual count mismatch");
    for (std::size_t r = 0; r < R; ++r) mags[n * R + r] = norm_inf(values[r]);
    valid[n] = 1;
  });
  ResidualReport rep{std::move(profile), omega, grid, 0, {}};
  rep.valid_nodes = std::size_t(std::count(valid.begin(), valid.end(), std::uint8_t{1}));
  if (rep.valid_nodes == 0) throw ConfigError("sweep: no valid nodes");
  for (std::size_t r = 0; r < R; ++r) {
    Norms nr;
    std::vector<double> squares;
    squares.reserve(rep.valid_nodes);
    for (std::size_t n = 0; n < N; ++n) {
      if (!valid[n]) continue;
      const double m = mags[n * R + r];
      nr.linf = std::max(nr.linf, m);
      squares.push_back(m * m);
    }
    nr.l2 = std::sqrt(pairwise_sum(squares));
    rep.residuals.emplace_back(names[r], nr);
  }
  return rep;
}

ResidualReport sweep(const std::vector<std::string>& names, const std::vector<GridField>& fields,
                     std::string profile, Complex omega) {
  if (names.size() != fields.size() || fields.empty()) {
    throw ContractViolation("sweep: one name per residual grid required");
  }
  ResidualReport rep{std::move(profile), omega, fields.front().spec, fields.front().valid_count(), {}};
  if (rep.valid_nodes == 0) throw ConfigError("sweep: no valid nodes");
  for (std::size_t r = 0; r < names.size(); ++r) rep.residuals.emplace_back(names[r], norms_of(fields[r]));
  return rep;
}

ResidualReport sweep_maxwell(const QuatField& E, const QuatField& H, const MediumProfile& m,
                             const SourceData& s, const GridSpec& grid) {
  std::vector<Point> nodes;
  for (std::size_t n = 0; n < grid.size(); ++n) {
    if (!grid.excluded(grid.node(n))) nodes.push_back(grid.node(n));
  }
  const TransformedQuantities t = transform(m, s.omega, nodes);
  const auto [se, sh] = scale_fields(E, H, t);
  return sweep(
      grid, {"s1", "s2", "s3", "s4", "R1", "R2"},
      [&](const Point& x) {
        const ClassicalResiduals c = classical_residuals(E, H, m, s, x);
        const QuaternionicResiduals q = quaternionic_residuals(se, sh, t, s, x);
        return std::vector<Biquat>{Biquat::FromScalar(c.s1), Biquat::FromVector(c.s2),
                                   Biquat::FromScalar(c.s3), Biquat::FromVector(c.s4), q.R1, q.R2};
      },
      m.spec, s.omega);
}

std::pair<GridField, GridField> grid_quaternionic_residuals(const QuatField& scaled_E,
                                                            const QuatField& scaled_H,
                                                            const TransformedQuantities& t,
                                                            const SourceData& s,
                                                            const GridSpec& grid) {
  require_vectorial(scaled_E, "scaled E");
  require_vectorial(scaled_H, "scaled H");
  const GridField e = sample(scaled_E, grid);
  const GridField h = sample(scaled_H, grid);
  GridField r1 = apply_D_grid(e);
  GridField r2 = apply_D_grid(h);
  parallel_for(grid.size(), [&](std::size_t n) {
    if (!r1.valid[n] || !r2.valid[n]) {
      r1.valid[n] = r2.valid[n] = 0;
      return;
    }
    const Point x = grid.node(n);
    const Complex ik = kImag * t.k.value(x);
    r1.values[n] += right_mul(t.eps_vec.value(x))(e.values[n]) + ik * h.values[n] +
                    Biquat::FromScalar(s.rho.value(x) / t.sqrt_eps.value(x));
    r2.values[n] += right_mul(t.mu_vec.value(x))(h.values[n]) - ik * e.values[n] -
                    t.sqrt_mu.value(x) * s.j.value(x);
  });
  return {std::move(r1), std::move(r2)};
}

}  // namespace quatmax
