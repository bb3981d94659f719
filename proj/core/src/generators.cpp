#include "grlab/generators.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "grlab/errors.hpp"
#include "grlab/oscillation.hpp"

namespace grlab::gen {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed) : gen_(seed) {}

  double next() {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  std::mt19937_64 gen_;
};

std::size_t resolve(const Position& p, const Grid& g) { return p.value_or(g.cell_count() - 1); }

// (x1^e - x0^e) / e: the integral of x^{e-1} over [x0, x1].
double power_integral(double x0, double x1, double e) { return (std::pow(x1, e) - std::pow(x0, e)) / e; }

}  // namespace

void GenSpec::validate() const {
  if (shape.empty()) throw ConfigError("shape: at least one axis is required");
  for (auto n : shape) {
    if (n == 0) throw ConfigError("shape: every extent must be >= 1");
  }
  std::size_t cells = 1;
  for (auto n : shape) cells *= n;
  std::visit(Overloaded{
                 [&](const Power& p) {
                   if (!(p.a > 0.0 && p.a < 1.0)) throw ConfigError("power.a must lie in (0, 1)");
                   if (shape.size() != 1) throw ConfigError("power functions are one-dimensional");
                 },
                 [&](const Spike& s) {
                   if (!(s.height >= 0.0) || !std::isfinite(s.height)) throw ConfigError("spike.M must be finite and >= 0");
                   if (s.position && *s.position >= cells) throw ConfigError("spike.position outside the grid");
                 },
                 [&](const TwoLevel& t) {
                   if (!(t.v_lo >= 0.0 && t.v_hi >= 0.0) || !std::isfinite(t.v_lo) || !std::isfinite(t.v_hi)) {
                     throw ConfigError("two_level values must be finite and >= 0");
                   }
                   if (!(t.fraction >= 0.0 && t.fraction <= 1.0)) throw ConfigError("two_level.fraction must lie in [0, 1]");
                 },
                 [&](const RandomValues& r) {
                   if (!(r.log_sigma >= 0.0) || !std::isfinite(r.log_sigma)) throw ConfigError("random.log_sigma must be >= 0");
                 },
             },
             function);
  std::visit(Overloaded{
                 [](const Uniform&) {},
                 [](const PowerWeight& p) {
                   if (!(p.b > -1.0) || !std::isfinite(p.b)) throw ConfigError("power_weight.b must exceed -1");
                 },
                 [&](const SpikeWeight& s) {
                   if (!(s.factor > 0.0) || !std::isfinite(s.factor)) throw ConfigError("spike_weight.W must be positive");
                   if (s.position && *s.position >= cells) throw ConfigError("spike_weight.position outside the grid");
                 },
                 [](const RandomWeight& r) {
                   if (!(r.log_sigma >= 0.0) || !std::isfinite(r.log_sigma)) {
                     throw ConfigError("random_weight.log_sigma must be >= 0");
                   }
                 },
             },
             measure);
}

WeightedGrid generate(const GenSpec& spec) {
  spec.validate();
  const Grid grid(spec.shape);
  const std::size_t cells = grid.cell_count();
  const double volume = grid.cell_volume();
  const double h0 = grid.cell_edge(0);
  const std::size_t n0 = grid.extent(0);
  auto axis0 = [&](std::size_t cell) { return cell / grid.stride(0); };

  std::vector<double> values(cells, 0.0);
  std::visit(Overloaded{
                 [&](const Power& p) {
                   const double e = 1.0 - p.a;
                   for (std::size_t i = 0; i < cells; ++i) {
                     const double x0 = static_cast<double>(i) / static_cast<double>(n0);
                     const double x1 = static_cast<double>(i + 1) / static_cast<double>(n0);
                     values[i] = power_integral(x0, x1, e) / h0;
                   }
                 },
                 [&](const Spike& s) { values[resolve(s.position, grid)] = s.height; },
                 [&](const TwoLevel& t) {
                   for (std::size_t i = 0; i < cells; ++i) {
                     const double x = (static_cast<double>(axis0(i)) + 0.5) / static_cast<double>(n0);
                     values[i] = x < t.fraction ? t.v_hi : t.v_lo;
                   }
                 },
                 [&](const RandomValues& r) {
                   NormalStream normal(r.seed);
                   for (auto& v : values) v = std::exp(r.log_sigma * normal.next());
                 },
             },
             spec.function);

  std::vector<double> weights(cells, volume);
  std::visit(Overloaded{
                 [](const Uniform&) {},
                 [&](const PowerWeight& p) {
                   const double e = p.b + 1.0;
                   const double transverse = volume / h0;
                   for (std::size_t i = 0; i < cells; ++i) {
                     const double x0 = static_cast<double>(axis0(i)) / static_cast<double>(n0);
                     const double x1 = static_cast<double>(axis0(i) + 1) / static_cast<double>(n0);
                     weights[i] = power_integral(x0, x1, e) * transverse;
                   }
                 },
                 [&](const SpikeWeight& s) { weights[resolve(s.position, grid)] *= s.factor; },
                 [&](const RandomWeight& r) {
                   NormalStream normal(r.seed);
                   for (auto& w : weights) w *= std::exp(r.log_sigma * normal.next());
                 },
             },
             spec.measure);

  return WeightedGrid(grid, std::move(weights), std::move(values));
}

double measured_epsilon(const GenSpec& spec, const EnumerationMode& mode, unsigned threads) {
  return gr_epsilon(generate(spec), mode, threads).epsilon;
}

}  // namespace grlab::gen
