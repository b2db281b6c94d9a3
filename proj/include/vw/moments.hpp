#pragma once

#include "vw/trial_families.hpp"

namespace vw {

/// One-dimensional Gaussian state summarized by its first two cumulants.
struct GaussianState1D {
    double mean = 0.0;
    double variance = 1.0;  // > 0
};

/// k-th raw position moment <x^k> by the Isserlis recursion
///   M_k = mean * M_{k-1} + (k-1) * variance * M_{k-2}.
double gaussian_moment(const GaussianState1D& g, int k);

/// k-th position moment of the physical state represented by a trial family.
/// PositionGaussian and Coherent are Gaussian states (any k); Monomial supports
/// k <= 4 in closed form; BargmannSqueezed is evaluated by the complex-plane
/// quadrature oracle. Unsupported combinations throw with a message naming the gap.
double trial_moment(const TrialParams& t, int k);

/// <x^4> in the n-quantum Fock state: (6 n^2 + 6 n + 3) / 4.
double monomial_x4_moment(int n);

/// m!! for odd m >= -1, with (-1)!! = 1. Rejects even or smaller inputs.
long long double_factorial(int m);

}  // namespace vw
