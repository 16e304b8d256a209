#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "gibbsuniq/errors.hpp"
#include "gibbsuniq/numerics.hpp"

namespace gibbsuniq {

inline constexpr double kInfiniteEnergy = std::numeric_limits<double>::infinity();

enum class PotentialKind { HardSphere, HardCoreStep, Strauss, CustomRadial };

std::string to_string(PotentialKind kind);

/// Certified exponential envelope for infinite-range profiles:
/// phi(r) <= amplitude * exp(-rate * r) for all r >= start. Used to pick a
/// truncation radius whose tail contribution is provably below tolerance.
struct TailEnvelope {
    double amplitude = 0.0;
    double rate = 0.0;
    double start = 0.0;
};

/// Radial non-negative pair potential phi(r), with values in [0, +inf].
/// +inf is the genuine IEEE infinity; exp(-beta*inf) evaluates to 0 exactly,
/// so hard cores propagate without sentinels.
class PairPotential {
public:
    static PairPotential hard_sphere(double alpha, int dimension);
    static PairPotential hard_core_step(double alpha, double height, double range,
                                        int dimension);
    static PairPotential strauss(double height, double range, int dimension);
    static PairPotential custom_radial(std::function<double(double)> profile,
                                       double hard_core_radius, double range,
                                       bool monotone, int dimension,
                                       std::vector<double> breakpoints = {},
                                       std::optional<TailEnvelope> envelope = {});

    PotentialKind kind() const { return kind_; }
    double hard_core_radius() const { return alpha_; }
    double interaction_range() const { return range_; }
    int dimension() const { return dimension_; }
    bool monotone_profile() const { return monotone_; }
    bool finite_range() const { return std::isfinite(range_); }
    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::optional<TailEnvelope>& tail_envelope() const { return envelope_; }

    /// phi(r). Throws std::invalid_argument for r < 0.
    double operator()(double r) const;

private:
    PairPotential() = default;

    PotentialKind kind_ = PotentialKind::CustomRadial;
    std::function<double(double)> profile_;
    double alpha_ = 0.0;
    double range_ = 0.0;
    int dimension_ = 0;
    bool monotone_ = false;
    std::vector<double> breakpoints_;
    std::optional<TailEnvelope> envelope_;
};

double evaluate(const PairPotential& p, double r);

/// Mayer function 1 - exp(-beta * phi(r)), always in [0, 1]. Exactly 1 on the
/// hard core and exactly 0 where phi vanishes. Throws for beta <= 0.
double mayer_value(const PairPotential& p, double beta, double r);

/// phi(|x - y|) for two points.
double pair_energy(const PairPotential& p, const Point& x, const Point& y);

struct ValidationReport {
    bool hard_core = false;    // alpha > 0 (hard-core assumption holds)
    bool finite_range = false; // needed by disagreement percolation
    bool monotone = false;     // enables the exact cube-supremum shortcut
};

/// Structural checks; spot-checks the profile on a grid (plus breakpoints)
/// and throws InvalidPotentialError on negative or NaN values.
ValidationReport validate(const PairPotential& p);

} // namespace gibbsuniq
