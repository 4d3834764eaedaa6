#include "dissipator/profile.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "dissipator/errors.hpp"

namespace dissipator {

namespace {
double pow3(int e) { return std::pow(3.0, e); }
}

ShearProfile ShearProfile::power(double alpha, int terms) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw DomainError("power profile requires alpha in (0,1), got " + std::to_string(alpha));
    if (terms < 1) throw DomainError("power profile requires terms >= 1");
    ShearProfile p;
    p.mode_ = Mode::Power;
    p.alpha_ = alpha;
    p.first_exponent_ = 1;
    p.coeffs_.resize(terms);
    for (int n = 1; n <= terms; ++n) p.coeffs_[n - 1] = std::pow(3.0, -n * alpha);
    return p;
}

ShearProfile ShearProfile::log_decay(double alpha, int terms) {
    if (!(alpha > 1.0 && alpha < 2.0))
        throw DomainError("log profile requires alpha in (1,2), got " + std::to_string(alpha));
    if (terms < 1) throw DomainError("log profile requires terms >= 1");
    ShearProfile p;
    p.mode_ = Mode::Log;
    p.alpha_ = alpha;
    p.first_exponent_ = 1;
    p.coeffs_.resize(terms);
    for (int n = 1; n <= terms; ++n) p.coeffs_[n - 1] = std::pow(double(n), -alpha);
    return p;
}

ShearProfile ShearProfile::explicit_coeffs(std::vector<double> coeffs, double mean) {
    ShearProfile p;
    p.mode_ = Mode::Explicit;
    p.first_exponent_ = 0;
    p.coeffs_ = std::move(coeffs);
    p.mean_ = mean;
    return p;
}

ShearProfile ShearProfile::constant(double c) {
    ShearProfile p;
    p.mean_ = c;
    return p;
}

double ShearProfile::eval_u(double y) const {
    double s = mean_;
    for (int i = 0; i < terms(); ++i) s += coeffs_[i] * std::sin(frequency(i) * y);
    return s;
}

double ShearProfile::eval_psi(double y) const {
    double s = mean_ * y;
    for (int i = 0; i < terms(); ++i) {
        double w = frequency(i);
        s -= coeffs_[i] / w * std::cos(w * y);
    }
    return s;
}

double ShearProfile::third_difference(double h, double y) const {
    if (!(h > 0.0)) throw DomainError("third_difference requires h > 0");
    return eval_psi(y) - 3.0 * eval_psi(y + h) + 3.0 * eval_psi(y + 2.0 * h) - eval_psi(y + 3.0 * h);
}

bool ShearProfile::validate_ratio() const {
    for (double a : coeffs_)
        if (a == 0.0) return false;
    for (int i = 0; i + 1 < terms(); ++i) {
        double r = std::abs(coeffs_[i]) / std::abs(coeffs_[i + 1]);
        if (!(r >= 1.0 && r <= 3.0)) return false;
    }
    return true;
}

int ShearProfile::top_exponent() const {
    return coeffs_.empty() ? -1 : first_exponent_ + terms() - 1;
}

double ShearProfile::top_frequency() const {
    return coeffs_.empty() ? 0.0 : pow3(top_exponent());
}

double ShearProfile::frequency(int i) const { return pow3(first_exponent_ + i); }

double ShearProfile::coeff_at_exponent(int exponent) const {
    int i = exponent - first_exponent_;
    if (i < 0 || i >= terms()) return 0.0;
    return coeffs_[i];
}

double ShearProfile::sum_abs_coeffs() const {
    double s = 0.0;
    for (double a : coeffs_) s += std::abs(a);
    return s;
}

ShearProfile ShearProfile::scaled(double s) const {
    ShearProfile p = *this;
    p.mode_ = Mode::Explicit;  // scaled amplitudes no longer follow the formula
    for (double& a : p.coeffs_) a *= s;
    p.mean_ *= s;
    return p;
}

ShearProfile ShearProfile::shifted(double c) const {
    ShearProfile p = *this;
    p.mean_ += c;
    return p;
}

std::pair<double, double> ShearProfile::range_u() const {
    if (coeffs_.empty()) return {mean_, mean_};
    const double two_pi = 2.0 * M_PI;
    double fine = top_frequency();
    long want = static_cast<long>(std::min(12.0 * fine, 262144.0));
    long n = std::max<long>(want, 256);
    double lo = mean_, hi = mean_;
    for (long i = 0; i < n; ++i) {
        double v = eval_u(two_pi * double(i) / double(n));
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    // Lipschitz slack: |u'| <= sum |a_i| 3^{e_i}
    double lip = 0.0;
    for (int i = 0; i < terms(); ++i) lip += std::abs(coeffs_[i]) * frequency(i);
    double pad = std::min(lip * (two_pi / double(n)) * 0.5, 2.0 * sum_abs_coeffs());
    return {lo - pad, hi + pad};
}

std::string ShearProfile::to_json() const {
    nlohmann::json j;
    switch (mode_) {
        case Mode::Power: j["mode"] = "power"; break;
        case Mode::Log: j["mode"] = "log"; break;
        case Mode::Explicit: j["mode"] = "explicit"; break;
    }
    if (mode_ != Mode::Explicit) j["alpha"] = alpha_;
    j["terms"] = terms();
    j["coeffs"] = coeffs_;
    j["mean"] = mean_;
    return j.dump();
}

ShearProfile ShearProfile::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ArgumentError(std::string("profile JSON parse failure: ") + e.what());
    }
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& k = it.key();
        if (k != "mode" && k != "alpha" && k != "terms" && k != "coeffs" && k != "mean")
            throw ArgumentError("unknown profile key '" + k + "'");
    }
    std::string mode = j.value("mode", "explicit");
    double mean = j.value("mean", 0.0);
    if (mode == "power" || mode == "log") {
        if (!j.contains("alpha") || !j.contains("terms"))
            throw ArgumentError("profile mode '" + mode + "' requires alpha and terms");
        ShearProfile p = (mode == "power") ? power(j["alpha"].get<double>(), j["terms"].get<int>())
                                           : log_decay(j["alpha"].get<double>(), j["terms"].get<int>());
        p.mean_ = mean;
        return p;
    }
    if (mode != "explicit") throw ArgumentError("unknown profile mode '" + mode + "'");
    std::vector<double> coeffs;
    if (j.contains("coeffs")) coeffs = j["coeffs"].get<std::vector<double>>();
    return explicit_coeffs(std::move(coeffs), mean);
}

}  // namespace dissipator
