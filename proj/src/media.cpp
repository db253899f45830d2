#include "quatmax/media.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "quatmax/calculus.hpp"
#include "quatmax/errors.hpp"

namespace quatmax {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt(const Eigen::Vector3d& v) { return fmt(v(0)) + "," + fmt(v(1)) + "," + fmt(v(2)); }

std::string where(const Point& x) { return "(" + fmt(x(0)) + ", " + fmt(x(1)) + ", " + fmt(x(2)) + ")"; }

void require_root(const ScalarField& root, const ScalarField& f, std::span<const Point> samples,
                  const char* what) {
  for (const Point& x : samples) {
    if (f.singular_at(x)) continue;
    const Complex r = root.value(x);
    const Complex v = f.value(x);
    if (std::abs(r * r - v) > 1e-12 * std::abs(v)) {
      throw ContractViolation(std::string(what) + ": declared root does not square to the profile at " +
                              where(x));
    }
  }
}

}  // namespace

ScalarField MediumProfile::phi() const { return sqrt_eps ? *sqrt_eps : sqrt(eps); }

std::vector<Point> MediumProfile::singular_points() const {
  return merge_singular(eps.singular_points(), mu.singular_points());
}

SourceData SourceData::Zero(const Complex& omega) {
  return {constant_field(0.0), constant_quat(Biquat::Zero()), omega};
}

QuatField log_derivative_vector(const ScalarField& phi) {
  return (gradient(phi) * reciprocal(phi)).labeled("grad(" + phi.label() + ")/" + phi.label());
}

void check_principal_branch(const ScalarField& f, std::span<const Point> samples) {
  const Point* upper = nullptr;
  const Point* lower = nullptr;
  for (const Point& x : samples) {
    if (f.singular_at(x)) continue;
    const Complex v = f.value(x);
    if (v.real() < 0.0) {
      if (v.imag() == 0.0) {
        throw BranchError("value on the negative real axis at " + where(x));
      }
      (v.imag() > 0.0 ? upper : lower) = &x;
      if (upper && lower) {
        throw BranchError("values on both sides of the branch cut, e.g. at " + where(*upper) +
                          " and " + where(*lower));
      }
    }
  }
}

TransformedQuantities transform(const MediumProfile& m, const Complex& omega,
                                std::span<const Point> samples) {
  ScalarField se = m.sqrt_eps ? *m.sqrt_eps : sqrt(m.eps);
  ScalarField sm = m.sqrt_mu ? *m.sqrt_mu : sqrt(m.mu);
  if (m.sqrt_eps) {
    require_root(se, m.eps, samples, "sqrt_eps");
  } else {
    check_principal_branch(m.eps, samples);
  }
  if (m.sqrt_mu) {
    require_root(sm, m.mu, samples, "sqrt_mu");
  } else {
    check_principal_branch(m.mu, samples);
  }
  se = se.labeled("sqrt_eps");
  sm = sm.labeled("sqrt_mu");
  return {se,
          sm,
          log_derivative_vector(se).labeled("eps_vec"),
          log_derivative_vector(sm).labeled("mu_vec"),
          (omega * (se * sm)).labeled("k"),
          omega};
}

std::pair<QuatField, QuatField> scale_fields(const QuatField& E, const QuatField& H,
                                             const TransformedQuantities& t) {
  if (!E.vectorial() || !H.vectorial()) {
    throw ContractViolation("scale_fields: E and H must be purely vectorial");
  }
  return {(t.sqrt_eps * E).labeled("scaled_E"), (t.sqrt_mu * H).labeled("scaled_H")};
}

std::pair<QuatField, QuatField> unscale_fields(const QuatField& scaled_E, const QuatField& scaled_H,
                                               const TransformedQuantities& t) {
  if (!scaled_E.vectorial() || !scaled_H.vectorial()) {
    throw ContractViolation("unscale_fields: fields must be purely vectorial");
  }
  return {(reciprocal(t.sqrt_eps) * scaled_E).labeled("E"),
          (reciprocal(t.sqrt_mu) * scaled_H).labeled("H")};
}

ParamMap parse_params(const std::string& text) {
  ParamMap out;
  std::string key;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    std::string number = token;
    if (const auto eq = token.find('='); eq != std::string::npos) {
      key = token.substr(0, eq);
      number = token.substr(eq + 1);
      if (key.empty()) throw ConfigError("empty parameter name in '" + text + "'");
      if (out.count(key)) throw ConfigError("parameter '" + key + "' given twice");
      out[key];
    } else if (key.empty()) {
      throw ConfigError("value without a parameter name in '" + text + "'");
    }
    try {
      std::size_t used = 0;
      const double v = std::stod(number, &used);
      if (used != number.size()) throw std::invalid_argument(number);
      out[key].push_back(v);
    } catch (const std::exception&) {
      throw ConfigError("bad number '" + number + "' for parameter '" + key + "'");
    }
  }
  return out;
}

namespace {

class Params {
 public:
  Params(ParamMap map, std::string profile) : map_(std::move(map)), profile_(std::move(profile)) {}

  double scalar(const std::string& key, double fallback) {
    auto v = take(key);
    if (!v) return fallback;
    if (v->size() != 1) throw ConfigError(profile_ + ": '" + key + "' takes one value");
    return (*v)[0];
  }

  Eigen::Vector3d vec3(const std::string& key, const Eigen::Vector3d& fallback) {
    auto v = take(key);
    if (!v) return fallback;
    if (v->size() != 3) throw ConfigError(profile_ + ": '" + key + "' takes three values");
    return {(*v)[0], (*v)[1], (*v)[2]};
  }

  void finish() const {
    if (!map_.empty()) {
      throw ConfigError(profile_ + ": unknown parameter '" + map_.begin()->first + "'");
    }
  }

 private:
  std::optional<std::vector<double>> take(const std::string& key) {
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    auto v = it->second;
    map_.erase(it);
    return v;
  }

  ParamMap map_;
  std::string profile_;
};

}  // namespace

MediumProfile vacuum() {
  const ScalarField one = constant_field(1.0);
  return {"vacuum", "vacuum", one, one, one, one};
}

MediumProfile exponential(const Eigen::Vector3d& a, double d, const Eigen::Vector3d& b, double e) {
  const Vec3C ac = a.cast<Complex>();
  const Vec3C bc = b.cast<Complex>();
  return {"exp",
          "exp:a=" + fmt(a) + ",d=" + fmt(d) + ",b=" + fmt(b) + ",e=" + fmt(e),
          exp_linear(ac, d).labeled("eps"),
          exp_linear(bc, e).labeled("mu"),
          exp_linear(0.5 * ac, 0.5 * d),
          exp_linear(0.5 * bc, 0.5 * e)};
}

MediumProfile planewave_phi(const Eigen::Vector3d& c) {
  const Vec3C ic = kImag * c.cast<Complex>();
  const ScalarField one = constant_field(1.0);
  return {"planewave-phi", "planewave-phi:c=" + fmt(c), exp_linear(2.0 * ic).labeled("eps"), one,
          exp_linear(ic), one};
}

MediumProfile spherical(const Complex& c) {
  const ScalarField phi = spherical_wave(c);
  const ScalarField one = constant_field(1.0);
  std::string spec = "spherical:c=" + fmt(c.real());
  if (c.imag() != 0.0) spec += ",ci=" + fmt(c.imag());
  return {"spherical", spec, (phi * phi).labeled("eps"), one, phi, one};
}

MediumProfile make_profile(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  Params p(colon == std::string::npos ? ParamMap{} : parse_params(spec.substr(colon + 1)), name);
  MediumProfile m = [&] {
    if (name == "vacuum") return vacuum();
    if (name == "exp" || name == "product-exp") {
      const bool product = name == "product-exp";
      const auto a = p.vec3("a", product ? Eigen::Vector3d(1, 2, 0) : Eigen::Vector3d(1, 0, 0));
      const double d = p.scalar("d", 0.0);
      const auto b = p.vec3("b", product ? Eigen::Vector3d(0, 0, 1) : Eigen::Vector3d::Zero());
      const double e = p.scalar("e", 0.0);
      auto m = exponential(a, d, b, e);
      if (product) m.name = "product-exp";
      return m;
    }
    if (name == "planewave-phi") return planewave_phi(p.vec3("c", Eigen::Vector3d(0, 0, 1)));
    if (name == "spherical") {
      const double re = p.scalar("c", 1.0);
      const double im = p.scalar("ci", 0.0);
      return spherical(Complex(re, im));
    }
    throw ConfigError("unknown profile '" + name + "'");
  }();
  p.finish();
  return m;
}

std::vector<MediumProfile> catalog() {
  auto product = exponential({1, 2, 0}, 0.0, {0, 0, 1}, 0.0);
  product.name = "product-exp";
  return {vacuum(), exponential({1, 0, 0}), product, planewave_phi({0, 0, 1}), spherical(1.0)};
}

}  // namespace quatmax
