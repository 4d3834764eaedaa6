#pragma once

#include <cmath>
#include <vector>

namespace dissipator::detail {

// Number of spherical Bessel orders worth keeping for argument w: beyond the
// turning point l ~ w the values collapse superexponentially.
inline int sph_bessel_cutoff(double w) {
    return static_cast<int>(w + 28.0 + 14.0 * std::cbrt(w + 1.0));
}

// j_l(w) for l = 0..lmax via Miller downward recurrence, normalized with the
// Parseval identity sum_l (2l+1) j_l(w)^2 = 1 (robust where sin(w) ~ 0), sign
// fixed against j_0 or j_1.  out is resized to lmax+1.
inline void sph_bessel_array(double w, int lmax, std::vector<double>& out) {
    out.assign(lmax + 1, 0.0);
    if (w <= 0.0) {
        out[0] = 1.0;
        return;
    }
    const int start = std::max(lmax, static_cast<int>(w)) + 40;
    std::vector<double> buf(start + 2, 0.0);
    buf[start + 1] = 0.0;
    buf[start] = 1e-280;
    for (int l = start; l >= 1; --l) {
        buf[l - 1] = (2.0 * l + 1.0) / w * buf[l] - buf[l + 1];
        if (std::abs(buf[l - 1]) > 1e250) {
            for (int j = l - 1; j <= start + 1; ++j) buf[j] *= 1e-250;
        }
    }
    long double parseval = 0.0L;
    for (int l = 0; l <= start; ++l)
        parseval += (2.0L * l + 1.0L) * static_cast<long double>(buf[l]) * buf[l];
    double scale = 1.0 / std::sqrt(static_cast<double>(parseval));
    const double j0 = std::sin(w) / w;
    const double j1 = std::sin(w) / (w * w) - std::cos(w) / w;
    const double ref = (std::abs(j0) >= std::abs(j1)) ? j0 : j1;
    const double got = (std::abs(j0) >= std::abs(j1)) ? buf[0] : buf[1];
    if (ref * got * scale < 0.0) scale = -scale;
    for (int l = 0; l <= lmax && l <= start; ++l) out[l] = buf[l] * scale;
}

}  // namespace dissipator::detail
