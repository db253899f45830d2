#pragma once

// Uniform Cartesian grids, sampled quaternion fields and the second-order
// central-difference version of D.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "quatmax/biquaternion.hpp"
#include "quatmax/field.hpp"

namespace quatmax {

struct Ball {
  Point center = Point::Zero();
  double radius = 0.0;
};

struct GridSpec {
  Point origin = Point::Constant(-1.0);
  double h = 1.0 / 16.0;
  std::array<int, 3> counts{33, 33, 33};
  std::optional<Ball> exclusion;

  /// Throws ConfigError when h <= 0, a count < 1, or the exclusion ball is not
  /// strictly inside the box.
  void validate() const;

  std::size_t size() const {
    return std::size_t(counts[0]) * std::size_t(counts[1]) * std::size_t(counts[2]);
  }
  std::size_t index(int i, int j, int k) const {
    return std::size_t(i) + std::size_t(counts[0]) * (std::size_t(j) + std::size_t(counts[1]) * std::size_t(k));
  }
  std::array<int, 3> multi_index(std::size_t n) const;
  Point node(int i, int j, int k) const { return origin + h * Point(i, j, k); }
  Point node(std::size_t n) const;
  Point upper() const;
  bool excluded(const Point& x) const;

  /// Cube [lo, hi]^3 with spacing h; hi - lo must be a multiple of h.
  static GridSpec Cube(double lo, double hi, double h, std::optional<Ball> exclusion = {});
};

struct GridField {
  GridSpec spec;
  std::vector<Biquat> values;
  std::vector<std::uint8_t> valid;

  std::size_t valid_count() const;
};

/// QUATMAX_THREADS, 0 or unset means hardware concurrency.
unsigned sweep_threads();

/// Runs body(n) for n in [0, count) over contiguous chunks. Each n is handled
/// by exactly one worker, so writes to per-node slots need no locking.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body,
                  unsigned threads = 0);

/// Samples f on every node outside the exclusion ball. Throws ConfigError when
/// a declared singularity of f lies in the box but not inside the exclusion.
GridField sample(const QuatField& f, const GridSpec& spec);

/// Central differences on nodes whose six neighbours are valid; boundary and
/// exclusion-adjacent nodes are marked invalid. Needs every count >= 3.
GridField apply_D_grid(const GridField& g);

/// Pointwise op over two grids on the same spec; valid where both are.
GridField combine(const GridField& a, const GridField& b,
                  const std::function<Biquat(const Biquat&, const Biquat&)>& op);

struct Norms {
  double linf = 0.0;
  double l2 = 0.0;
};

/// Sum with a fixed pairwise tree, independent of how the terms were produced.
double pairwise_sum(const std::vector<double>& terms);

/// linf = max ||.||_inf over valid nodes, l2 = sqrt(sum of squares of those maxima).
Norms norms_of(const GridField& g);

/// Errors of a residual under refinement h, h/2, h/4, ...
struct ConvergenceStudy {
  std::vector<double> h;
  std::vector<double> error;
  /// log2(error[l] / error[l+1]).
  std::vector<double> order;
  /// Every error is at rounding level; orders are meaningless.
  bool exact = false;
  bool monotone = true;
};

/// Error level below which a study is reported as exact.
inline constexpr double kExactErrorLevel = 1e-11;

/// Runs `error_field` on `coarse` and `levels - 1` successive halvings of h over
/// the same box. Errors are L-inf over the coarse nodes valid on every level,
/// so each level is measured on the same point set.
ConvergenceStudy convergence_study(const GridSpec& coarse, int levels,
                                   const std::function<GridField(const GridSpec&)>& error_field);

inline constexpr const char* kCsvHeader =
    "x1,x2,x3,q0_re,q0_im,q1_re,q1_im,q2_re,q2_im,q3_re,q3_im,valid";

void write_csv(std::ostream& os, const GridField& g);
void write_csv(const std::string& path, const GridField& g);
GridField read_csv(std::istream& is, const GridSpec& spec);

}  // namespace quatmax
