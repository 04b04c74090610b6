#include "vvilab/sampler.hpp"

#include <cmath>

namespace vvilab {

std::string to_string(Spacing s) {
  return s == Spacing::linear ? "linear" : "log";
}

Spacing parse_spacing(std::string_view text) {
  if (text == "linear") return Spacing::linear;
  if (text == "log") return Spacing::log;
  throw UnknownIdError("unknown grid spacing: " + std::string(text));
}

void DomainSampler::validate() const {
  if (static_cast<int>(box.size()) != manifold.dim) {
    throw DomainError("sampler box has " + std::to_string(box.size()) +
                      " axes, manifold " + to_string(manifold) + " needs " +
                      std::to_string(manifold.dim));
  }
  if (grid_n < 2) throw DomainError("grid_n must be >= 2");
  if (extra_random < 0) throw DomainError("extra_random must be >= 0");
  for (const auto& [lo, hi] : box) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
      throw DomainError("sampler bounds must be finite with lo < hi");
    }
    const bool needs_positive = spacing == Spacing::log ||
                                manifold.kind == ManifoldKind::positive_orthant;
    if (needs_positive && !(lo > 0.0)) {
      throw DomainError("bounds must be strictly positive for " +
                        to_string(manifold) +
                        (spacing == Spacing::log ? " with log spacing" : ""));
    }
  }
}

namespace {

double axis_value(double lo, double hi, Spacing spacing, double frac) {
  if (spacing == Spacing::linear) return lo + (hi - lo) * frac;
  return lo * std::exp(std::log(hi / lo) * frac);
}

}  // namespace

std::vector<Point> DomainSampler::grid() const {
  validate();
  const int d = manifold.dim;
  std::vector<std::vector<double>> axes(d);
  for (int a = 0; a < d; ++a) {
    const auto [lo, hi] = box[a];
    for (int k = 0; k < grid_n; ++k) {
      // Written so that the endpoints are exact.
      double v;
      if (k == 0) {
        v = lo;
      } else if (k == grid_n - 1) {
        v = hi;
      } else if (spacing == Spacing::linear) {
        v = lo + (hi - lo) * k / (grid_n - 1);
      } else {
        v = lo * std::exp(std::log(hi / lo) * k / (grid_n - 1));
      }
      axes[a].push_back(v);
    }
  }
  std::vector<Point> out;
  std::vector<int> idx(d, 0);
  while (true) {
    std::vector<double> coords(d);
    for (int a = 0; a < d; ++a) coords[a] = axes[a][idx[a]];
    out.push_back(Point{manifold, std::move(coords)});
    int a = d - 1;
    while (a >= 0 && ++idx[a] == grid_n) {
      idx[a] = 0;
      --a;
    }
    if (a < 0) break;
  }
  return out;
}

std::vector<Point> DomainSampler::samples() const {
  std::vector<Point> out = grid();
  auto gen = stream_rng(seed, 0);
  for (int r = 0; r < extra_random; ++r) {
    std::vector<double> coords(manifold.dim);
    for (int a = 0; a < manifold.dim; ++a) {
      coords[a] = axis_value(box[a].first, box[a].second, spacing,
                             unit_uniform(gen));
    }
    out.push_back(Point{manifold, std::move(coords)});
  }
  return out;
}

double DomainSampler::step() const {
  double s = 0.0;
  for (const auto& [lo, hi] : box) {
    const double span = spacing == Spacing::linear ? hi - lo : std::log(hi / lo);
    s = std::max(s, span / (grid_n - 1));
  }
  return s;
}

std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

double unit_uniform(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace vvilab
