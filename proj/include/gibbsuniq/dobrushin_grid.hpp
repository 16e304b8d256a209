#pragma once

#include <span>
#include <vector>

#include "gibbsuniq/mayer.hpp"
#include "gibbsuniq/numerics.hpp"
#include "gibbsuniq/potentials.hpp"

namespace gibbsuniq {

/// Mesh for the discretised Dobrushin criterion. Requires a*sqrt(d) strictly
/// below the hard-core radius so that an authorised configuration can hold at
/// most one point per cube (any two points of one cube are then within the
/// hard core).
struct Discretization {
    Discretization(double mesh, const PairPotential& potential);

    double mesh;
    PairPotential potential;
    int dimension() const { return potential.dimension(); }
};

/// Finite point set acting as a DLR boundary condition.
struct BoundaryConfiguration {
    std::vector<Point> points;
};

/// Pairwise distances all exceed alpha.
bool is_authorised(const BoundaryConfiguration& gamma, double alpha);

/// H(x u gamma) restricted to the single point x: sum of phi(|x - y|) over
/// boundary points. Short-circuits at +inf.
double one_point_energy(const PairPotential& p, const Point& x,
                        const BoundaryConfiguration& gamma);

/// Partition function of the single-cube specification. Under the mesh
/// invariant at most one point fits in the cube, so
///   Z = e^{-z |cube|} (1 + z \int_cube e^{-beta H(x u gamma)} dx)
/// exactly (not a truncation). Value in (0, 1].
double cube_partition_function(const PairPotential& p, double z, double beta,
                               const Cube& cube, const BoundaryConfiguration& gamma,
                               double tol);

/// Total-variation distance between the two single-cube specifications with
/// boundary conditions gamma / gamma_tilde that agree outside one cube.
/// Computed over the two-stratum outcome space (empty atom + one-point
/// stratum), order-free:
///   [e^{-z|C|}(1/Z - 1/Z~)]^+ + z e^{-z|C|} \int_C [e^{-bH}/Z - e^{-bH~}/Z~]^+
double cube_tv_distance(const PairPotential& p, double z, double beta,
                        const Cube& cube_i, const BoundaryConfiguration& gamma,
                        const BoundaryConfiguration& gamma_tilde, double tol);

/// Search family for the k_ij lower bound.
struct SearchConfig {
    int y_grid = 3;               // per-axis disagreement-point grid in cube j
    int refine_passes = 1;        // local refinement around the best y
    bool include_packings = true; // greedy dense packing around cube i
    double search_tol_factor = 100.0; // coarse pass tolerance multiplier
};

struct KBracket {
    double lower = 0.0; // attained by an explicit authorised boundary pair
    double upper = 0.0; // analytic proof bound z sup_y \int_cube_i mayer
};

/// Bracket for k_{i,j} = sup over authorised boundary pairs differing only in
/// cube j of the TV distance of the cube-i specifications. The true supremum
/// is not computable; the guarantee is lower <= k_{i,j} <= upper.
KBracket k_ij(const Discretization& disc, double z, double beta,
              const LatticeIndex& i, const LatticeIndex& j, const SearchConfig& search,
              double tol);

enum class BracketMode { Lower, Upper };

/// Dobrushin influence sum at cube i = 0 (translation invariance), range
/// truncated. Lower mode: sum of attained k_ij lower bounds. Upper mode: the
/// certified chain bound z * \int Psi_a, which dominates the sum of per-pair
/// upper bounds and yields the Figure-3 certified activities.
double dobrushin_sum(const Discretization& disc, double z, double beta,
                     BracketMode mode, double tol, const SearchConfig& search = {});

/// Single-threaded reference implementation (testing / benchmark twin).
double dobrushin_sum_serial(const Discretization& disc, double z, double beta,
                            BracketMode mode, double tol,
                            const SearchConfig& search = {});

struct ZbarResult {
    double z_bar = 0.0;
    bool saturated = false; // criterion stayed below 1 on the whole interval
};

/// Bisection root of dobrushin_sum(z) = 1. Upper mode gives a certified
/// uniqueness activity; lower mode an optimistic estimate. If the sum never
/// reaches 1 below z_max the interval top is returned with saturated = true.
ZbarResult zbar_of_a(const Discretization& disc, double beta, BracketMode mode,
                     double tol_z, double z_max = 0.0, double quad_tol = 1e-6,
                     const SearchConfig& search = {});

} // namespace gibbsuniq
