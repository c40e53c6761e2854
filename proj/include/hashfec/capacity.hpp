// Capacity of the channels the decoder actually faces: the hard-decision
// BSC seen by the search, and the underlying binary-input AWGN channel.
// Rate margin C - k/n is the achievability condition being checked.
#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace hashfec {

// Standard normal tail probability P(X > x).
inline double q_function(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

// Crossover probability of the hard-decision BPSK/AWGN channel.
inline double crossover_probability(double sigma) {
    if (!(sigma > 0.0)) throw std::invalid_argument("crossover_probability: sigma must be positive");
    return q_function(1.0 / sigma);
}

inline double binary_entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("binary_entropy: p outside [0,1]");
    double h = 0.0;
    if (p > 0.0) h -= p * std::log2(p);
    if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
    return h;
}

inline double bsc_capacity(double p) { return 1.0 - binary_entropy(p); }

// Mutual information of Y = X + N, X uniform on {-1,+1}, N ~ N(0, sigma^2),
// as h(Y) - h(N). The output-density integral runs over [-1-10s, 1+10s] with
// adaptive Gauss-Kronrod; requested tolerance 1e-10, well inside the 1e-6
// the callers rely on.
inline double biawgn_capacity(double sigma) {
    if (!(sigma > 0.0)) throw std::invalid_argument("biawgn_capacity: sigma must be positive");
    const double inv_norm = 1.0 / (2.0 * sigma * std::sqrt(2.0 * M_PI));
    const double inv_two_var = 1.0 / (2.0 * sigma * sigma);
    auto out_density = [=](double y) {
        return inv_norm * (std::exp(-(y - 1.0) * (y - 1.0) * inv_two_var) +
                           std::exp(-(y + 1.0) * (y + 1.0) * inv_two_var));
    };
    auto integrand = [=](double y) {
        const double p = out_density(y);
        return p > 0.0 ? -p * std::log2(p) : 0.0;
    };
    const double lim = 1.0 + 10.0 * sigma;
    const double h_out =
        boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, -lim, lim, 15, 1e-10);
    const double h_noise = 0.5 * std::log2(2.0 * M_PI * M_E * sigma * sigma);
    return h_out - h_noise;
}

enum class CapacityModel { hard_bsc, soft_biawgn };

inline double channel_capacity(CapacityModel model, double sigma) {
    switch (model) {
        case CapacityModel::hard_bsc: return bsc_capacity(crossover_probability(sigma));
        case CapacityModel::soft_biawgn: return biawgn_capacity(sigma);
    }
    throw std::invalid_argument("channel_capacity: unknown model");
}

// C - k/n; positive means the rate sits below capacity.
inline double rate_margin(size_t k, size_t n, double sigma, CapacityModel model) {
    if (k == 0 || k >= n) throw std::invalid_argument("rate_margin: need 0 < k < n");
    return channel_capacity(model, sigma) - static_cast<double>(k) / static_cast<double>(n);
}

}  // namespace hashfec
