#pragma once

#include <span>
#include <vector>

#include "gibbsuniq/numerics.hpp"
#include "gibbsuniq/potentials.hpp"

namespace gibbsuniq {

/// M(beta) = sup_x \int (1 - e^{-beta phi(x,y)}) dy. For radial potentials
/// the sup over x is trivial and the integral is the radial Mayer integral.
struct MayerIntegralResult {
    double value = 0.0;
    double error_estimate = 0.0;
    double beta = 0.0;
    double truncation_radius = 0.0;
};

MayerIntegralResult mayer_integral(const PairPotential& p, double beta, double tol);

struct PsiOptions {
    int x_grid = 8;           // per-axis sample points for the sup over x
    int refine_passes = 1;    // local refinements around the running argmax
    int cube_sup_samples = 0; // per-axis samples for non-monotone profiles
};

/// \int Psi_a = sup_x sum_j |cube_j| * sup_{y in cube_j} mayer(x, y).
/// For monotone profiles the per-cube supremum is exact (nearest point of the
/// cube to x); otherwise a sampling density must be configured.
struct PsiIntegralResult {
    double value = 0.0;
    double error_estimate = 0.0;
    double mesh = 0.0;
    Point x_argmax;
};

PsiIntegralResult psi_integral(const PairPotential& p, double beta, double mesh,
                               double tol, const PsiOptions& opts = {});

/// Straightforward single-threaded reference for psi_integral; kept for
/// testing and benchmarked against the parallel kernel.
PsiIntegralResult psi_integral_serial(const PairPotential& p, double beta, double mesh,
                                      double tol, const PsiOptions& opts = {});

enum class A3Verdict { Converged, NotYetConverged };

struct A3Report {
    std::vector<PsiIntegralResult> psi;  // one per mesh, in input order
    MayerIntegralResult mayer;
    std::vector<double> gaps;            // psi.value - mayer.value
    bool gaps_decreasing = false;
    A3Verdict verdict = A3Verdict::NotYetConverged;
};

/// Empirical check of the regularity assumption: reports whether the gap
/// |int Psi_a - M| decreases along the mesh sequence and is below tol at the
/// finest mesh. Never a claim of analytic failure.
A3Report check_regularity_A3(const PairPotential& p, double beta,
                             std::span<const double> mesh_sequence, double tol,
                             const PsiOptions& opts = {});

} // namespace gibbsuniq
