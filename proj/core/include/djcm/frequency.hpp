#ifndef DJCM_FREQUENCY_HPP
#define DJCM_FREQUENCY_HPP

#include <string>
#include <vector>

#include "djcm/angular.hpp"
#include "djcm/basis.hpp"

namespace djcm {

/// Which per-sublevel frequency the closed-form solution uses.
///
/// PaperText:  omega_m = alpha_m * Omega        (as published; reproduces
///                                               the t_d = 12.2/Omega figure)
/// SzDerived:  omega_m = alpha_m^2 * Omega / 2  (the diagonal of
///                                               Omega (2 a+ a + 1) S_z, the
///                                               convention the Lindblad
///                                               oracle can confirm)
enum class FrequencyConvention { PaperText, SzDerived };

std::string convention_name(FrequencyConvention c);
FrequencyConvention parse_convention(const std::string& name); // throws InvalidInput

/// Per-sublevel frequencies omega_m plus the derived difference and sum
/// frequencies chi = omega_m - omega_m', lambda = omega_m + omega_m'.
/// When the frequencies are commensurate the table also carries them as
/// exact rational multiples of a common base, which is what the
/// disentanglement-period computation runs on.
struct FrequencyTable {
    std::vector<HalfInt> ms;      // empty for custom tables
    std::vector<double> omega;
    int dim_b = 1, dim_c = 1;     // 2Jb+1, 2Jc+1: the entropy weights

    bool exact = false;
    double base = 0.0;            // omega[i] = coeff[i].to_double() * base when exact
    std::vector<Fraction> coeff;

    int size() const { return static_cast<int>(omega.size()); }
    double chi(int i, int j) const { return omega[i] - omega[j]; }
    double lambda(int i, int j) const { return omega[i] + omega[j]; }
};

FrequencyTable build_frequency_table(const LevelSpec& levels,
                                     const TransitionCoefficients& coeffs,
                                     double omega, FrequencyConvention convention);

/// Table from raw frequencies (controls and tests). Weight dimensions
/// default to the two-state mixture of the non-degenerate model. Exact
/// rational structure is recovered when every ratio to the smallest
/// nonzero frequency is rational within 1e-12.
FrequencyTable custom_frequency_table(const std::vector<double>& omegas,
                                      int dim_b = 1, int dim_c = 1);

/// Smallest t > 0 with sin(chi t) = 0 and sin(lambda t) = 0 for every pair:
/// pi over the rational GCD of all nonzero chi and lambda. Throws
/// NoFinitePeriod when the table is not commensurate (or has no nonzero
/// pair frequency at all).
double disentanglement_period(const FrequencyTable& table);

} // namespace djcm

#endif
