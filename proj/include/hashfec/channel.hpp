// BPSK over AWGN with hard-decision demodulation. Unit symbol energy; the
// noise standard deviation absorbs both Eb/N0 and the code rate, so the
// effective end-to-end channel is a BSC with crossover Q(1/sigma).
#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "hashfec/bitvec.hpp"

namespace hashfec {

inline double ebn0_to_sigma(double ebn0_db, double rate) {
    if (!(rate > 0.0 && rate < 1.0)) throw std::invalid_argument("ebn0_to_sigma: rate must be in (0,1)");
    return std::sqrt(1.0 / (2.0 * rate * std::pow(10.0, ebn0_db / 10.0)));
}

struct ChannelParams {
    double ebn0_db = 0.0;
    double rate = 0.5;
    double sigma = 1.0;

    static ChannelParams from_ebn0(double ebn0_db, double rate) {
        return {ebn0_db, rate, ebn0_to_sigma(ebn0_db, rate)};
    }

    static ChannelParams from_sigma(double sigma, double rate) {
        if (!(rate > 0.0 && rate < 1.0))
            throw std::invalid_argument("ChannelParams: rate must be in (0,1)");
        if (!(sigma > 0.0)) throw std::invalid_argument("ChannelParams: sigma must be positive");
        return {10.0 * std::log10(1.0 / (2.0 * rate * sigma * sigma)), rate, sigma};
    }
};

// bit 0 -> +1.0, bit 1 -> -1.0
inline std::vector<double> bpsk_modulate(const BitVector& bits) {
    std::vector<double> s(bits.size());
    for (size_t i = 0; i < bits.size(); ++i) s[i] = bits.get(i) ? -1.0 : 1.0;
    return s;
}

inline std::vector<double> add_awgn(std::span<const double> symbols, double sigma,
                                    std::mt19937_64& rng) {
    if (sigma < 0.0) throw std::invalid_argument("add_awgn: sigma must be non-negative");
    std::vector<double> out(symbols.begin(), symbols.end());
    if (sigma == 0.0) return out;
    std::normal_distribution<double> noise(0.0, sigma);
    for (auto& v : out) v += noise(rng);
    return out;
}

// value >= 0 -> bit 0 (ties to 0), value < 0 -> bit 1
inline BitVector hard_demodulate(std::span<const double> values) {
    BitVector v(values.size());
    for (size_t i = 0; i < values.size(); ++i)
        if (values[i] < 0.0) v.set(i, true);
    return v;
}

struct ChannelObservation {
    BitVector y;   // demodulated message part, length k
    BitVector z;   // demodulated digest part, length n-k
    size_t flips;  // bit errors injected (diagnostic)
};

// modulate -> add noise -> threshold -> split at k. With noiseless_digest
// only the first k symbols see noise.
inline ChannelObservation transmit(const BitVector& codeword, size_t k, const ChannelParams& params,
                                   std::mt19937_64& rng, bool noiseless_digest = false) {
    if (k > codeword.size()) throw std::invalid_argument("transmit: k exceeds codeword length");
    auto symbols = bpsk_modulate(codeword);
    std::vector<double> noisy;
    if (noiseless_digest) {
        noisy = add_awgn(std::span<const double>(symbols).first(k), params.sigma, rng);
        noisy.insert(noisy.end(), symbols.begin() + static_cast<long>(k), symbols.end());
    } else {
        noisy = add_awgn(symbols, params.sigma, rng);
    }
    BitVector demod = hard_demodulate(noisy);
    const size_t flips = (demod ^ codeword).weight();
    auto [y, z] = split(demod, k);
    return {std::move(y), std::move(z), flips};
}

}  // namespace hashfec
