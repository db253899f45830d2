#pragma once

// Media (ε, μ), their quaternionic coefficients ε⃗ = grad√ε/√ε, μ⃗ = grad√μ/√μ,
// the wavenumber k = ω√ε√μ and the rescaled fields ℰ = √ε E, ℋ = √μ H.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "quatmax/field.hpp"

namespace quatmax {

struct MediumProfile {
  std::string name;
  /// Canonical "name:key=v,..." form, recorded in reports.
  std::string spec;
  ScalarField eps;
  ScalarField mu;
  /// Closed-form roots, continuous over the whole domain. When absent the
  /// principal branch is used and checked against the branch cut.
  std::optional<ScalarField> sqrt_eps;
  std::optional<ScalarField> sqrt_mu;

  /// √ε, the generating function of static solutions in this medium.
  ScalarField phi() const;
  std::vector<Point> singular_points() const;
};

struct SourceData {
  ScalarField rho;
  QuatField j;
  Complex omega;

  static SourceData Zero(const Complex& omega);
};

struct TransformedQuantities {
  ScalarField sqrt_eps;
  ScalarField sqrt_mu;
  QuatField eps_vec;
  QuatField mu_vec;
  ScalarField k;
  Complex omega;
};

/// grad φ / φ as a vectorial field, one derivative order below φ.
QuatField log_derivative_vector(const ScalarField& phi);

/// Throws BranchError if the principal square root of f is discontinuous over
/// the samples: a sample on the negative real axis, or samples on both sides of it.
void check_principal_branch(const ScalarField& f, std::span<const Point> samples);

/// Derived quantities of the medium at frequency omega. `samples` are the
/// points the caller will evaluate at; they are used to validate the root branch.
TransformedQuantities transform(const MediumProfile& m, const Complex& omega,
                                std::span<const Point> samples = {});

/// (ℰ, ℋ) = (√ε E, √μ H). E and H must be vectorial.
std::pair<QuatField, QuatField> scale_fields(const QuatField& E, const QuatField& H,
                                             const TransformedQuantities& t);
std::pair<QuatField, QuatField> unscale_fields(const QuatField& scaled_E, const QuatField& scaled_H,
                                               const TransformedQuantities& t);

using ParamMap = std::map<std::string, std::vector<double>>;

/// "a=1,0,0,d=0" -> {a: [1,0,0], d: [0]}. Bare numbers extend the previous key.
ParamMap parse_params(const std::string& text);

/// "exp:a=1,0,0" and friends. Unknown names or parameters throw ConfigError.
MediumProfile make_profile(const std::string& spec);

MediumProfile vacuum();
/// ε = exp(<a,x> + d), μ = exp(<b,x> + e).
MediumProfile exponential(const Eigen::Vector3d& a, double d = 0.0,
                          const Eigen::Vector3d& b = Eigen::Vector3d::Zero(), double e = 0.0);
/// √ε = exp(i <c, x>), μ = 1.
MediumProfile planewave_phi(const Eigen::Vector3d& c);
/// √ε = exp(i c |x|) / (4 pi |x|), μ = 1; singular at the origin.
MediumProfile spherical(const Complex& c);

/// vacuum, exp, product-exp, planewave-phi, spherical with default parameters.
std::vector<MediumProfile> catalog();

}  // namespace quatmax
