#pragma once

#include <vector>

#include "dissipator/profile.hpp"

namespace dissipator {

/// Best constant (order 0) or affine (order 1) L2 fit of psi over a window
/// [x_star - delta, x_star + delta], minimized over the window center.
struct WindowFit {
    double delta = 0.0;
    int order = 0;
    double x_star = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;        // meaningful for order 1 only
    double value = 0.0;     // inf_x int |psi - c1 - c2 y|^2 dy
    bool under_resolved = false;  // truncation warning: 3^{-N} pi > delta/3
};

/// Spectral lower bound derived from a window functional via phi^{-1}.
struct PhiBound {
    double delta = 0.0;
    double omega = 0.0;
    double phi_arg = 0.0;  // delta * omega
    double bound = 0.0;    // (phi^{-1}(delta*omega) / delta)^2
};

struct Lemma52Certificate {
    int m = 0;
    double lhs = 0.0;  // omega_1(3^{-m} pi, u)
    double rhs = 0.0;  // (9 pi / 8000) 3^{-3m} a_m^2
    bool pass = false;
};

struct OmegaOptions {
    int threads = 0;               // <=0: library default
    bool serial_reference = false; // force the plain serial scan kernel
};

/// phi(x) = 36 x tan x on [0, pi/2).
double phi(double x);

/// Inverse of phi: [0, inf) -> [0, pi/2); |phi(phi_inv(v)) - v| <= 1e-12 max(1,v).
double phi_inv(double v);

/// Window functional omega_0 (order 0) / omega_1 (order 1) of the profile.
/// Order 0 with mean != 0 is rejected (non-periodic psi).
WindowFit omega(const ShearProfile& p, double delta, int order, const OmegaOptions& opts = {});

/// Lemma-4.3-style bound composed from omega and phi_inv.
PhiBound psi_lower_bound(const ShearProfile& p, double delta, int order,
                         const OmegaOptions& opts = {});

/// Maximal bound over a list of deltas.  Empty list is an error.
PhiBound best_lower_bound(const ShearProfile& p, const std::vector<double>& deltas, int order,
                          const OmegaOptions& opts = {});

/// Checks omega_1(3^{-m} pi, u) >= (9 pi / 8000) 3^{-3m} a_m^2 where a_m is the
/// amplitude at frequency 3^m.  Requires validate_ratio() and a coefficient at
/// exponent m.  The constant is one valid instantiation composed from the
/// third-difference chain; reports flag it as a derived constant.
Lemma52Certificate omega1_weierstrass_certificate(const ShearProfile& p, int m,
                                                  const OmegaOptions& opts = {});

/// Derived constant used by the certificate above: 9 pi / 8000.
double lemma52_constant();

/// Analytic moments of psi over [x-delta, x+delta]:
///   p0 = int psi dy,  p1 = int (y-x) psi dy,  p2 = int psi^2 dy.
/// Exposed so quadrature oracles can cross-check the closed forms.
struct WindowMoments {
    double p0 = 0.0;
    double p1 = 0.0;
    double p2 = 0.0;
};
WindowMoments window_moments(const ShearProfile& p, double x, double delta);

/// Residual value at a single window center (same quantity omega minimizes).
double window_value_at(const ShearProfile& p, double x, double delta, int order);

}  // namespace dissipator
