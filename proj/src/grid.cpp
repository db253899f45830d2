#include "quatmax/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include "quatmax/errors.hpp"

namespace quatmax {

void GridSpec::validate() const {
  if (!(h > 0.0) || !std::isfinite(h)) throw ConfigError("grid spacing h must be positive");
  for (int n : counts) {
    if (n < 1) throw ConfigError("grid counts must be positive");
  }
  if (!origin.allFinite()) throw ConfigError("grid origin must be finite");
  if (exclusion) {
    const Ball& b = *exclusion;
    if (!(b.radius > 0.0)) throw ConfigError("exclusion radius must be positive");
    const Point hi = upper();
    for (int k = 0; k < 3; ++k) {
      if (b.center(k) - b.radius <= origin(k) || b.center(k) + b.radius >= hi(k)) {
        throw ConfigError("exclusion ball must lie strictly inside the grid box");
      }
    }
  }
}

std::array<int, 3> GridSpec::multi_index(std::size_t n) const {
  const auto n0 = std::size_t(counts[0]);
  const auto n1 = std::size_t(counts[1]);
  return {int(n % n0), int((n / n0) % n1), int(n / (n0 * n1))};
}

Point GridSpec::node(std::size_t n) const {
  const auto m = multi_index(n);
  return node(m[0], m[1], m[2]);
}

Point GridSpec::upper() const {
  return origin + h * Point(counts[0] - 1, counts[1] - 1, counts[2] - 1);
}

bool GridSpec::excluded(const Point& x) const {
  return exclusion && (x - exclusion->center).norm() <= exclusion->radius;
}

GridSpec GridSpec::Cube(double lo, double hi, double h, std::optional<Ball> exclusion) {
  const double cells = (hi - lo) / h;
  const long n = std::lround(cells);
  if (n < 1 || std::abs(cells - double(n)) > 1e-9 * std::max(1.0, cells)) {
    throw ConfigError("cube extent is not a multiple of the spacing");
  }
  GridSpec g;
  g.origin = Point::Constant(lo);
  g.h = h;
  g.counts = {int(n + 1), int(n + 1), int(n + 1)};
  g.exclusion = exclusion;
  g.validate();
  return g;
}

std::size_t GridField::valid_count() const {
  return std::size_t(std::count(valid.begin(), valid.end(), std::uint8_t{1}));
}

unsigned sweep_threads() {
  unsigned n = 0;
  if (const char* env = std::getenv("QUATMAX_THREADS")) n = unsigned(std::strtoul(env, nullptr, 10));
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  return n;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body,
                  unsigned threads) {
  if (threads == 0) threads = sweep_threads();
  threads = unsigned(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  if (threads <= 1) {
    for (std::size_t n = 0; n < count; ++n) body(n);
    return;
  }
  std::vector<std::jthread> workers;
  std::vector<std::exception_ptr> errors(threads);
  const std::size_t chunk = (count + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] {
      try {
        const std::size_t end = std::min(count, (t + 1) * chunk);
        for (std::size_t n = t * chunk; n < end; ++n) body(n);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  workers.clear();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

GridField sample(const QuatField& f, const GridSpec& spec) {
  spec.validate();
  const Point lo = spec.origin;
  const Point hi = spec.upper();
  for (const Point& p : f.singular_points()) {
    const bool in_box = (p.array() >= lo.array()).all() && (p.array() <= hi.array()).all();
    const bool covered = spec.exclusion && (p - spec.exclusion->center).norm() < spec.exclusion->radius;
    if (in_box && !covered) {
      throw ConfigError("field '" + f.label() + "' has a singularity inside the grid box "
                        "that no exclusion ball covers");
    }
  }
  GridField g{spec, std::vector<Biquat>(spec.size()), std::vector<std::uint8_t>(spec.size(), 0)};
  parallel_for(spec.size(), [&](std::size_t n) {
    const Point x = spec.node(n);
    if (spec.excluded(x)) return;
    g.values[n] = f.value(x);
    g.valid[n] = 1;
  });
  return g;
}

GridField apply_D_grid(const GridField& g) {
  const GridSpec& s = g.spec;
  if (s.counts[0] < 3 || s.counts[1] < 3 || s.counts[2] < 3) {
    throw ConfigError("grid D needs at least 3 nodes per direction");
  }
  GridField out{s, std::vector<Biquat>(s.size()), std::vector<std::uint8_t>(s.size(), 0)};
  const double inv2h = 1.0 / (2.0 * s.h);
  parallel_for(s.size(), [&](std::size_t n) {
    const auto m = s.multi_index(n);
    if (!g.valid[n]) return;
    std::array<std::size_t, 3> plus{}, minus{};
    for (int k = 0; k < 3; ++k) {
      if (m[k] == 0 || m[k] == s.counts[k] - 1) return;
      auto mp = m, mm = m;
      ++mp[k];
      --mm[k];
      plus[k] = s.index(mp[0], mp[1], mp[2]);
      minus[k] = s.index(mm[0], mm[1], mm[2]);
      if (!g.valid[plus[k]] || !g.valid[minus[k]]) return;
    }
    Biquat r;
    for (int k = 0; k < 3; ++k) {
      r += mul(Biquat::Unit(k + 1), (g.values[plus[k]] - g.values[minus[k]]) * inv2h);
    }
    out.values[n] = r;
    out.valid[n] = 1;
  });
  return out;
}

GridField combine(const GridField& a, const GridField& b,
                  const std::function<Biquat(const Biquat&, const Biquat&)>& op) {
  if (a.values.size() != b.values.size()) throw ConfigError("combine: grids differ in size");
  GridField out{a.spec, std::vector<Biquat>(a.values.size()),
                std::vector<std::uint8_t>(a.values.size(), 0)};
  parallel_for(a.values.size(), [&](std::size_t n) {
    if (a.valid[n] && b.valid[n]) {
      out.values[n] = op(a.values[n], b.values[n]);
      out.valid[n] = 1;
    }
  });
  return out;
}

double pairwise_sum(const std::vector<double>& terms) {
  if (terms.empty()) return 0.0;
  std::vector<double> level = terms;
  while (level.size() > 1) {
    std::vector<double> next((level.size() + 1) / 2);
    for (std::size_t i = 0; i < next.size(); ++i) {
      next[i] = level[2 * i] + (2 * i + 1 < level.size() ? level[2 * i + 1] : 0.0);
    }
    level.swap(next);
  }
  return level[0];
}

Norms norms_of(const GridField& g) {
  Norms n;
  std::vector<double> squares;
  squares.reserve(g.values.size());
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    if (!g.valid[i]) continue;
    const double m = norm_inf(g.values[i]);
    n.linf = std::max(n.linf, m);
    squares.push_back(m * m);
  }
  if (squares.empty()) throw ConfigError("no valid nodes to take norms over");
  n.l2 = std::sqrt(pairwise_sum(squares));
  return n;
}

ConvergenceStudy convergence_study(const GridSpec& coarse, int levels,
                                   const std::function<GridField(const GridSpec&)>& error_field) {
  if (levels < 2) throw ConfigError("convergence study needs at least two levels");
  coarse.validate();
  std::vector<GridField> fields;
  ConvergenceStudy study;
  for (int l = 0; l < levels; ++l) {
    GridSpec s = coarse;
    const int factor = 1 << l;
    s.h = coarse.h / factor;
    for (int k = 0; k < 3; ++k) s.counts[k] = (coarse.counts[k] - 1) * factor + 1;
    fields.push_back(error_field(s));
    study.h.push_back(s.h);
  }
  std::vector<double> errors(std::size_t(levels), 0.0);
  std::size_t common = 0;
  for (std::size_t n = 0; n < coarse.size(); ++n) {
    const auto m = coarse.multi_index(n);
    bool ok = true;
    std::vector<std::size_t> idx;
    for (int l = 0; l < levels && ok; ++l) {
      const int f = 1 << l;
      const std::size_t i = fields[l].spec.index(m[0] * f, m[1] * f, m[2] * f);
      idx.push_back(i);
      ok = fields[l].valid[i] != 0;
    }
    if (!ok) continue;
    ++common;
    for (int l = 0; l < levels; ++l) {
      errors[l] = std::max(errors[l], norm_inf(fields[l].values[idx[l]]));
    }
  }
  if (common == 0) throw ConfigError("convergence study: no node is valid on every level");
  study.error = errors;
  study.exact = *std::max_element(errors.begin(), errors.end()) <= kExactErrorLevel;
  for (int l = 0; l + 1 < levels; ++l) {
    study.order.push_back(std::log2(errors[l] / errors[l + 1]));
    if (!(errors[l + 1] < errors[l])) study.monotone = false;
  }
  return study;
}

void write_csv(std::ostream& os, const GridField& g) {
  os << kCsvHeader << '\n';
  char buf[64];
  auto put = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    os << buf;
  };
  for (std::size_t n = 0; n < g.values.size(); ++n) {
    const Point x = g.spec.node(n);
    for (int k = 0; k < 3; ++k) {
      put(x(k));
      os << ',';
    }
    for (int c = 0; c < 4; ++c) {
      put(g.values[n][c].real());
      os << ',';
      put(g.values[n][c].imag());
      os << ',';
    }
    os << int(g.valid[n]) << '\n';
  }
}

void write_csv(const std::string& path, const GridField& g) {
  std::ofstream os(path);
  if (!os) throw ConfigError("cannot open " + path + " for writing");
  write_csv(os, g);
}

GridField read_csv(std::istream& is, const GridSpec& spec) {
  std::string line;
  if (!std::getline(is, line) || line != kCsvHeader) throw ConfigError("unexpected CSV header");
  GridField g{spec, {}, {}};
  g.values.reserve(spec.size());
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::array<double, 11> v{};
    std::string cell;
    for (double& d : v) {
      if (!std::getline(row, cell, ',')) throw ConfigError("short CSV row");
      d = std::stod(cell);
    }
    int valid = 0;
    if (!std::getline(row, cell, ',')) throw ConfigError("missing valid column");
    valid = std::stoi(cell);
    g.values.emplace_back(Complex(v[3], v[4]), Complex(v[5], v[6]), Complex(v[7], v[8]),
                          Complex(v[9], v[10]));
    g.valid.push_back(std::uint8_t(valid != 0));
  }
  if (g.values.size() != spec.size()) throw ConfigError("CSV row count does not match grid");
  return g;
}

}  // namespace quatmax
