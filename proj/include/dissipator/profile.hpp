#pragma once

#include <string>
#include <utility>
#include <vector>

namespace dissipator {

/// Lacunary trigonometric shear profile on the 2*pi torus:
///
///   u(y)   = mean + sum_i a_i sin(3^{e_i} y),      e_i = first_exponent + i
///   psi(y) = mean*y - sum_i (a_i / 3^{e_i}) cos(3^{e_i} y)
///
/// so that psi' = u exactly.  Factory-built profiles (power/log decay) place
/// their first coefficient at frequency 3; explicit coefficient lists start at
/// frequency 1 (= 3^0) so plain low-frequency shears like u = sin y are
/// representable.  Immutable after construction; all evaluations are pure.
class ShearProfile {
public:
    ShearProfile() = default;  // u == 0

    /// a_n = 3^{-n*alpha}, n = 1..terms.  Requires alpha in (0,1), terms >= 1.
    static ShearProfile power(double alpha, int terms);

    /// a_n = n^{-alpha}, n = 1..terms.  Requires alpha in (1,2), terms >= 1.
    static ShearProfile log_decay(double alpha, int terms);

    /// Explicit amplitudes at frequencies 3^0, 3^1, ... in list order.
    static ShearProfile explicit_coeffs(std::vector<double> coeffs, double mean = 0.0);

    /// u == c (no oscillatory part).
    static ShearProfile constant(double c);

    double eval_u(double y) const;
    double eval_psi(double y) const;

    /// psi(y) - 3 psi(y+h) + 3 psi(y+2h) - psi(y+3h).  Requires h > 0.
    double third_difference(double h, double y) const;

    /// True iff every amplitude is nonzero and all consecutive ratios
    /// |a_n| / |a_{n+1}| lie in [1, 3].
    bool validate_ratio() const;

    const std::vector<double>& coeffs() const { return coeffs_; }
    double mean() const { return mean_; }
    int base() const { return 3; }
    int first_exponent() const { return first_exponent_; }
    int terms() const { return static_cast<int>(coeffs_.size()); }

    /// Exponent of the highest frequency present, or -1 when there are no
    /// oscillatory terms.
    int top_exponent() const;

    /// 3^{top_exponent()} as a double (exact for the sizes in use); 0 if none.
    double top_frequency() const;

    /// Frequency 3^{e_i} of coefficient i.
    double frequency(int i) const;

    /// Amplitude attached to frequency 3^exponent, or 0 when absent.
    double coeff_at_exponent(int exponent) const;

    double sum_abs_coeffs() const;

    /// s*u: coefficients and mean scaled by s.
    ShearProfile scaled(double s) const;

    /// u + c.
    ShearProfile shifted(double c) const;

    /// (min u, max u) over one period.  Sampled on a grid resolving the finest
    /// mode (capped), widened by the sampling Lipschitz slack, so the returned
    /// interval contains the true range.
    std::pair<double, double> range_u() const;

    std::string to_json() const;
    static ShearProfile from_json(const std::string& text);

    bool operator==(const ShearProfile&) const = default;

private:
    enum class Mode { Power, Log, Explicit };

    std::vector<double> coeffs_;
    double mean_ = 0.0;
    int first_exponent_ = 0;
    Mode mode_ = Mode::Explicit;
    double alpha_ = 0.0;  // meaningful for Power/Log only
};

}  // namespace dissipator
