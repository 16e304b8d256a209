#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "gibbsuniq/mayer.hpp"
#include "gibbsuniq/potentials.hpp"

namespace gibbsuniq {

enum class Method {
    DobrushinLimit,
    DobrushinConjecture,
    ClusterExpansion,
    ClusterExpansionImproved,
    DisagreementPercolation,
    SupportVolume,
};

std::string to_string(Method m);

/// One point of a uniqueness frontier: uniqueness holds for z < z_bar at the
/// given beta (certified == false marks the conjectural / conservative cases).
struct UniquenessBound {
    Method method = Method::DobrushinLimit;
    double beta = 0.0;
    double z_bar = 0.0; // +inf allowed (non-interacting limit)
    bool certified = false;
    double error_estimate = 0.0;

    bool is_infinite() const { return std::isinf(z_bar); }
};

enum class ThresholdProvenance { Measured2d, LowerBoundInverseVd, UserSupplied };

std::string to_string(ThresholdProvenance p);

struct PercolationThreshold {
    int dimension = 0;
    double z_c = 0.0;
    ThresholdProvenance provenance = ThresholdProvenance::LowerBoundInverseVd;
};

/// Percolation thresholds of the Poisson Boolean model with unit grains.
/// Ships with the measured d=2 value only; any other dimension falls back to
/// the 1/v_d lower bound (conservative) unless a user value is supplied.
class ThresholdTable {
public:
    static ThresholdTable builtin();

    /// User-supplied threshold; must respect z_c >= 1/v_d.
    void set(int dimension, double z_c);
    PercolationThreshold lookup(int dimension) const;

private:
    std::map<int, PercolationThreshold> entries_;
};

/// z_bar = 1/M(beta). Certified under the hard-core assumption; without a
/// hard core the same number is reported as the conjectural bound.
UniquenessBound dobrushin_bound(const PairPotential& p, double beta, double tol);

/// z_bar = (1/e)/M(beta), or 0.5107/M(beta) for the improved constant, which
/// is only available for the 2-d hard-sphere model.
UniquenessBound cluster_expansion_bound(const PairPotential& p, double beta, double tol,
                                        bool improved = false);

/// z_bar = z_c(d)/R^d, beta-independent. Requires finite range.
UniquenessBound disagreement_percolation_bound(const PairPotential& p,
                                               const ThresholdTable& thresholds =
                                                   ThresholdTable::builtin());

/// z_bar = 1 / vol({phi > 0}): the fixed-mesh Dobrushin outcome without a
/// hard core. Requires bounded support.
UniquenessBound support_volume_bound(const PairPotential& p);

/// One bound per grid point, ordered by beta. Grid points are independent
/// and evaluated in parallel; output order is fixed by input order.
std::vector<UniquenessBound> region_curve(const PairPotential& p, Method method,
                                          std::span<const double> beta_grid, double tol,
                                          const ThresholdTable& thresholds =
                                              ThresholdTable::builtin());

/// CSV row in the documented schema:
/// method,beta,z_bar,certified,error_estimate ('+inf' for infinite bounds).
std::string to_csv_row(const UniquenessBound& b);

inline constexpr char kBoundCsvHeader[] = "method,beta,z_bar,certified,error_estimate";

} // namespace gibbsuniq
