#ifndef HERMITELAB_KERNEL_HPP
#define HERMITELAB_KERNEL_HPP

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hermitelab {

// Causal moving-average kernel x : R+ -> R, vanishing on (-inf, 0).
class Kernel {
public:
    enum class Kind { Exponential, PowerCutoff, Tabulated };
    enum class DecayClass { S_L, L1_L1overH };

    static Kernel exponential(double alpha) {
        if (!(alpha > 0)) throw std::invalid_argument("Kernel: alpha must be positive");
        Kernel k;
        k.kind_ = Kind::Exponential;
        k.alpha_ = alpha;
        k.decay_ = DecayClass::S_L;  // e^{-alpha y} is in S_L for all L
        return k;
    }

    // x(y) = scale * (1 + y/scale)^{-(L+1)}; y^L x(y) -> 0, so x is in S_L.
    static Kernel power_cutoff(double L, double scale = 1.0) {
        if (!(L > 1) || !(scale > 0)) throw std::invalid_argument("Kernel: need L > 1, scale > 0");
        Kernel k;
        k.kind_ = Kind::PowerCutoff;
        k.L_ = L;
        k.scale_ = scale;
        k.decay_ = DecayClass::S_L;
        return k;
    }

    static Kernel tabulated(std::vector<double> samples, double dt) {
        if (samples.empty() || !(dt > 0)) throw std::invalid_argument("Kernel: bad table");
        Kernel k;
        k.kind_ = Kind::Tabulated;
        k.samples_ = std::move(samples);
        k.dt_ = dt;
        k.decay_ = DecayClass::L1_L1overH;  // compactly supported
        return k;
    }

    Kind kind() const { return kind_; }
    DecayClass decay_class() const { return decay_; }
    double alpha() const { return alpha_; }

    double operator()(double y) const {
        if (y < 0) return 0.0;
        switch (kind_) {
            case Kind::Exponential:
                return amplitude_ * std::exp(-alpha_ * y);
            case Kind::PowerCutoff:
                return amplitude_ * scale_ * std::pow(1.0 + y / scale_, -(L_ + 1.0));
            case Kind::Tabulated: {
                auto i = static_cast<std::size_t>(y / dt_);
                return i < samples_.size() ? samples_[i] : 0.0;
            }
        }
        return 0.0;
    }

    // integral of |x| over [M, infinity)
    double tail_mass(double M) const {
        switch (kind_) {
            case Kind::Exponential:
                return std::abs(amplitude_) * std::exp(-alpha_ * M) / alpha_;
            case Kind::PowerCutoff:
                return std::abs(amplitude_) * scale_ * scale_ / L_ * std::pow(1.0 + M / scale_, -L_);
            case Kind::Tabulated: {
                double s = 0.0;
                for (std::size_t i = static_cast<std::size_t>(std::max(M, 0.0) / dt_);
                     i < samples_.size(); ++i)
                    s += std::abs(samples_[i]) * dt_;
                return s;
            }
        }
        return 0.0;
    }

    // smallest truncation horizon with tail mass below tol
    double truncation_for(double tol) const {
        switch (kind_) {
            case Kind::Exponential:
                return std::max(1.0, -std::log(tol * alpha_) / alpha_);
            case Kind::PowerCutoff:
                return scale_ * (std::pow(scale_ * scale_ / (L_ * tol), 1.0 / L_) - 1.0);
            case Kind::Tabulated:
                return dt_ * static_cast<double>(samples_.size());
        }
        return 0.0;
    }

    Kernel scaled(double c) const {
        Kernel k = *this;
        if (k.kind_ == Kind::Tabulated) {
            for (auto& s : k.samples_) s *= c;
        } else {
            k.amplitude_ *= c;
        }
        return k;
    }

    std::string describe() const {
        std::ostringstream os;
        switch (kind_) {
            case Kind::Exponential: os << "exp(alpha=" << alpha_ << ")"; break;
            case Kind::PowerCutoff: os << "powcut(L=" << L_ << ",scale=" << scale_ << ")"; break;
            case Kind::Tabulated: os << "tab(n=" << samples_.size() << ",dt=" << dt_ << ")"; break;
        }
        return os.str();
    }

    double amplitude() const { return amplitude_; }

private:
    Kind kind_ = Kind::Exponential;
    double alpha_ = 1.0;
    double L_ = 2.0;
    double scale_ = 1.0;
    double amplitude_ = 1.0;
    std::vector<double> samples_;
    double dt_ = 1.0;
    DecayClass decay_ = DecayClass::S_L;
};

} // namespace hermitelab

#endif
