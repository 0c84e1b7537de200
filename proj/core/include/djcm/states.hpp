#ifndef DJCM_STATES_HPP
#define DJCM_STATES_HPP

#include <complex>

#include <Eigen/Dense>

#include "djcm/basis.hpp"

namespace djcm {

/// Truncated coherent-state amplitudes <n|alpha> = e^{-|a|^2/2} a^n/sqrt(n!),
/// n = 0..cutoff-1. Deliberately not renormalized: the norm deficit is the
/// truncation diagnostic.
Eigen::VectorXcd coherent_vector(std::complex<double> alpha, int cutoff);

/// 1 - ||coherent_vector||^2, the probability weight lost to truncation.
double coherent_norm_deficit(std::complex<double> alpha, int cutoff);

/// Smallest cutoff keeping the coherent norm deficit below 1e-10;
/// roughly |alpha|^2 + 8 sqrt(|alpha|^2 + 1).
int recommended_cutoff(std::complex<double> alpha);

/// Initial state: the atom in the balanced coherent superposition of all
/// sublevels of both levels,
///   |psi_A> = (1/sqrt 2) [ sum_m |b,m>/sqrt(2Jb+1) + sum_m |c,m>/sqrt(2Jc+1) ],
/// tensored with the coherent field |alpha><alpha|. Throws CutoffTooSmall
/// when the truncated coherent state loses more than 1e-10 of its norm.
Eigen::MatrixXcd initial_state(const LevelSpec& levels, std::complex<double> alpha, int cutoff);

} // namespace djcm

#endif
