#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "gibbsuniq/errors.hpp"

namespace gibbsuniq {

using Point = std::vector<double>;
using LatticeIndex = std::vector<int>;

double squared_distance(const Point& a, const Point& b);
double distance(const Point& a, const Point& b);

/// Volume of the d-dimensional unit ball, pi^{d/2} / Gamma(d/2 + 1).
double unit_ball_volume(int dimension);

/// Axis-aligned cube, half-open: center + (-side/2, side/2]^d.
/// The half-open convention makes the lattice cubes tile space exactly.
struct Cube {
    Point center;
    double side = 0.0;

    int dimension() const { return static_cast<int>(center.size()); }
    double volume() const;
    bool contains(const Point& x) const;
    /// Nearest point of the closed cube to x (componentwise clamp).
    Point nearest_point(const Point& x) const;
    double distance_to(const Point& x) const;
};

/// The lattice cube Lambda_{a,i} centered at a*i.
Cube lattice_cube(double mesh, const LatticeIndex& index);

/// Index of the cube containing x under the half-open convention.
LatticeIndex lattice_index_of(const Point& x, double mesh);

/// Distance between the closed cubes Lambda_{a,i} and Lambda_{a,j}.
double lattice_cube_distance(double mesh, const LatticeIndex& i, const LatticeIndex& j);

/// All lattice indices j != i whose cube lies within `reach` of the given
/// lattice-aligned cube, in lexicographic order. Throws UnsupportedError for
/// infinite reach (callers must truncate with a tail bound first).
std::vector<LatticeIndex> cubes_within_range(const Cube& center_cube, double reach);

struct IntegralResult {
    double value = 0.0;
    double error = 0.0;
};

struct QuadOptions {
    std::size_t max_intervals = 20000; // 1-d intervals or d-dim regions
    int initial_splits = 1;            // forced bisections per axis before adapting
};

/// Integral of f(|y|) over R^d restricted to |y| <= r_max, i.e.
/// d * v_d * \int_0^{r_max} r^{d-1} f(r) dr, by adaptive Gauss-Kronrod.
/// Breakpoints mark known jump locations of f; the integrator subdivides
/// there so hard-core and step edges cost nothing in accuracy.
IntegralResult radial_integral(const std::function<double(double)>& f, int dimension,
                               double r_max, double tol,
                               std::span<const double> breakpoints = {},
                               const QuadOptions& opts = {});

/// Adaptive integral over an axis-aligned box [lo, hi].
IntegralResult box_integral(const std::function<double(std::span<const double>)>& f,
                            std::span<const double> lo, std::span<const double> hi,
                            double tol, const QuadOptions& opts = {});

/// Adaptive integral over a cube.
IntegralResult cube_integral(const std::function<double(std::span<const double>)>& f,
                             const Cube& cube, double tol, const QuadOptions& opts = {});

} // namespace gibbsuniq
