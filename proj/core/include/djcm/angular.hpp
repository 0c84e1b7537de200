#ifndef DJCM_ANGULAR_HPP
#define DJCM_ANGULAR_HPP

#include <cstdint>
#include <vector>

#include "djcm/half_int.hpp"

namespace djcm {

/// Exact reduced fraction with a positive denominator. Used to carry the
/// squared transition coefficients, which are always rational, so that
/// commensurability logic downstream never touches floating point.
struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    friend constexpr bool operator==(const Fraction&, const Fraction&) = default;
};

/// Wigner 3j symbol (j1 j2 j3; m1 m2 m3), evaluated through the Racah
/// closed-form sum in exact big-rational arithmetic; the conversion to
/// double happens only on the final value.
///
/// Selection-rule failures (m1+m2+m3 != 0, triangle rule, odd j1+j2+j3 at
/// all-zero projections) return a legal 0. Malformed quantum numbers
/// (negative j, |m| > j, parity of 2m not matching 2j, 2j > 200) throw
/// InvalidInput instead, so callers can tell physics zeros from bugs.
double wigner_3j(HalfInt j1, HalfInt j2, HalfInt j3,
                 HalfInt m1, HalfInt m2, HalfInt m3);

/// Coefficient of the linearly polarized (q = 0) dipole transition
/// Jb -> Jc at projection m:
///
///   alpha_m = (-1)^(Jb - m) * (Jb 1 Jc; -m 0 m)
///
/// Under the Condon-Shortley 3j convention this is odd under m -> -m when
/// Jb = Jc (alpha_m = m / sqrt(j(j+1)(2j+1))); only alpha_m^2 and products
/// alpha_m * alpha_m' enter any observable.
double transition_coefficient(HalfInt Jb, HalfInt Jc, HalfInt m);

/// Transition coefficients over the common projection range of two levels,
/// with their exact squares.
struct TransitionCoefficients {
    HalfInt Jb, Jc;
    std::vector<HalfInt> ms;        // common projection range, ascending
    std::vector<double> alpha;      // alpha_m
    std::vector<Fraction> alpha_sq; // exact alpha_m^2

    int size() const { return static_cast<int>(ms.size()); }
    bool contains(HalfInt m) const;
    int index_of(HalfInt m) const;   // throws InvalidInput if absent
    double coeff(HalfInt m) const;
    Fraction coeff_sq(HalfInt m) const;
};

/// Builds the coefficient table for an optically allowed transition.
/// Requires |Jb - Jc| <= 1 and Jb, Jc >= 1/2; throws InvalidInput otherwise.
TransitionCoefficients build_coefficient_table(HalfInt Jb, HalfInt Jc);

} // namespace djcm

#endif
