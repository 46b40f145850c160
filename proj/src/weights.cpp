#include "tfcdr/weights.hpp"

#include "tfcdr/error.hpp"

#include <cmath>
#include <sstream>
#include <string>

namespace tfcdr {

namespace {

// b^e through exp/log; every base reaching here is ≥ α > 0.
double power(double base, double exponent) {
    if (!(base > 0.0)) {
        std::ostringstream os;
        os << "weight power called with non-positive base " << base;
        throw DomainError(os.str());
    }
    return std::exp(exponent * std::log(base));
}

// d̃ for the interval with right-end distance x and left-end distance x−1.
double d_weight(double x, double lambda) {
    return power(x, 1.0 - lambda) - power(x - 1.0, 1.0 - lambda);
}

double f_weight(double x, double lambda) {
    const double y = x - 1.0;
    return 2.0 / (2.0 - lambda) * (power(x, 2.0 - lambda) - power(y, 2.0 - lambda))
         - 0.5 * (power(x, 1.0 - lambda) + 3.0 * power(y, 1.0 - lambda));
}

} // namespace

FractionalParams::FractionalParams(double lambda) : lambda_(lambda), alpha_(1.0 - lambda) {
    if (!(lambda > 0.0 && lambda < 1.0)) {
        std::ostringstream os;
        os << "fractional order must satisfy 0 < lambda < 1, got " << lambda;
        throw ContractError(os.str());
    }
}

double gamma_fn(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        std::ostringstream os;
        os << "gamma_fn requires a positive finite argument, got " << x;
        throw DomainError(os.str());
    }
    return std::tgamma(x);
}

double caputo_scale(const FractionalParams& p, double k) {
    if (!(k > 0.0)) throw ContractError("time step must be positive");
    return power(k, 1.0 - p.lambda()) / gamma_fn(2.0 - p.lambda());
}

HalfLevelWeights half_level_weights(const FractionalParams& p, std::size_t i) {
    const double lambda = p.lambda();
    const double alpha = p.alpha();
    HalfLevelWeights w;
    w.i = i;
    if (i == 0) {
        w.f_tilde.push_back(power(0.5 + alpha, 1.0 - lambda));
        return w;
    }
    w.f_tilde.reserve(i + 1);
    w.d_tilde.reserve(i);
    for (std::size_t l = 0; l < i; ++l) {
        const double x = static_cast<double>(i - l) + alpha;
        w.d_tilde.push_back(d_weight(x, lambda));
        w.f_tilde.push_back(f_weight(x, lambda));
    }
    w.f_tilde.push_back(power(alpha, 1.0 - lambda));
    const double di = static_cast<double>(i);
    w.fdot_tilde = power(di + 0.5 + alpha, 1.0 - lambda) - power(di + alpha, 1.0 - lambda);
    return w;
}

FullLevelWeights full_level_weights(const FractionalParams& p, std::size_t i) {
    const double lambda = p.lambda();
    const double alpha = p.alpha();
    FullLevelWeights w;
    w.i = i;
    w.f_tilde.reserve(i + 2);
    w.d_tilde.reserve(i + 1);
    for (std::size_t l = 0; l <= i; ++l) {
        const double x = static_cast<double>(i + 1 - l) + alpha;
        w.d_tilde.push_back(d_weight(x, lambda));
        w.f_tilde.push_back(f_weight(x, lambda));
    }
    w.f_tilde.push_back(power(alpha, 1.0 - lambda));
    return w;
}

WeightTable::WeightTable(const FractionalParams& p, std::size_t max_m)
    : lambda_(p.lambda()), alpha_(p.alpha()), f_last_(power(p.alpha(), 1.0 - p.lambda())) {
    d_.reserve(max_m);
    f_.reserve(max_m);
    for (std::size_t m = 1; m <= max_m; ++m) {
        const double x = static_cast<double>(m) + alpha_;
        d_.push_back(d_weight(x, lambda_));
        f_.push_back(f_weight(x, lambda_));
    }
}

HalfLevelWeights WeightTable::half(std::size_t i) const {
    if (i > max_m()) throw ContractError("weight table too short for half level " + std::to_string(i));
    HalfLevelWeights w;
    w.i = i;
    if (i == 0) {
        w.f_tilde.push_back(power(0.5 + alpha_, 1.0 - lambda_));
        return w;
    }
    w.f_tilde.reserve(i + 1);
    w.d_tilde.reserve(i);
    for (std::size_t l = 0; l < i; ++l) {
        w.d_tilde.push_back(d_[i - l - 1]);
        w.f_tilde.push_back(f_[i - l - 1]);
    }
    w.f_tilde.push_back(f_last_);
    const double di = static_cast<double>(i);
    w.fdot_tilde = power(di + 0.5 + alpha_, 1.0 - lambda_) - power(di + alpha_, 1.0 - lambda_);
    return w;
}

FullLevelWeights WeightTable::full(std::size_t i) const {
    if (i + 1 > max_m()) throw ContractError("weight table too short for full level " + std::to_string(i));
    FullLevelWeights w;
    w.i = i;
    w.f_tilde.reserve(i + 2);
    w.d_tilde.reserve(i + 1);
    for (std::size_t l = 0; l <= i; ++l) {
        w.d_tilde.push_back(d_[i - l]);
        w.f_tilde.push_back(f_[i - l]);
    }
    w.f_tilde.push_back(f_last_);
    return w;
}

HalfLevelWeights scaled(const HalfLevelWeights& w, double factor) {
    HalfLevelWeights out = w;
    for (double& v : out.f_tilde) v *= factor;
    for (double& v : out.d_tilde) v *= factor;
    if (out.fdot_tilde) *out.fdot_tilde *= factor;
    return out;
}

FullLevelWeights scaled(const FullLevelWeights& w, double factor) {
    FullLevelWeights out = w;
    for (double& v : out.f_tilde) v *= factor;
    for (double& v : out.d_tilde) v *= factor;
    return out;
}

double ASequence::at(HalfIndex l) const {
    if (l.twice() == 0 || l > level) {
        throw ContractError("a-sequence index " + l.str() + " outside (0, " + level.str() + "]");
    }
    return values[l.twice() - 1];
}

ASequence a_sequence(const FractionalParams& p, HalfIndex level) {
    if (level.twice() == 0) throw ContractError("a-sequence level must be positive");
    ASequence a;
    a.level = level;
    a.values.reserve(level.twice());
    if (!level.is_whole()) {
        const std::size_t i = level.floor();
        const HalfLevelWeights w = half_level_weights(p, i);
        if (i == 0) {
            a.values.push_back(w.f_tilde[0]);
            return a;
        }
        a.values.push_back(*w.fdot_tilde);
        for (std::size_t m = 0; m < i; ++m) {
            a.values.push_back(w.d_tilde[m] - w.f_tilde[m]);      // a_{m+1}
            if (m + 1 < i) a.values.push_back(w.f_tilde[m]);      // a_{m+3/2}
        }
        a.values.push_back(w.f_tilde[i - 1] + w.f_tilde[i]);      // a_{i+1/2}
    } else {
        const std::size_t i = level.floor() - 1;
        const FullLevelWeights w = full_level_weights(p, i);
        for (std::size_t m = 0; m <= i; ++m) {
            a.values.push_back(w.d_tilde[m] - w.f_tilde[m]);      // a_{m+1/2}
            if (m < i) a.values.push_back(w.f_tilde[m]);          // a_{m+1}
        }
        a.values.push_back(w.f_tilde[i] + w.f_tilde[i + 1]);      // a_{i+1}
    }
    return a;
}

double stability_residual(double alpha, double ratio) {
    return 4.0 * alpha * alpha - (1.0 + 4.0 * alpha) * (ratio - 1.0);
}

StabilityCheck stability_condition(const FractionalParams& p, std::size_t i, LevelKind kind) {
    double ratio = 0.0;
    if (kind == LevelKind::half) {
        if (i < 1) throw ContractError("half-level stability condition needs i >= 1");
        const ASequence a = a_sequence(p, HalfIndex::half(i));
        ratio = a.values[2 * i] / a.values[2 * i - 1];
    } else {
        const ASequence a = a_sequence(p, HalfIndex::whole(i + 1));
        ratio = a.values[2 * i + 1] / a.values[2 * i];
    }
    StabilityCheck c;
    c.residual = stability_residual(p.alpha(), ratio);
    c.satisfied = c.residual <= 0.0;
    return c;
}

} // namespace tfcdr
