// Packed GF(2) bit vectors: the payload type for messages, digests,
// codewords and noise patterns.
#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hashfec {

namespace detail {

// Bit-reversal table: byte streams are MSB-first (so hex dumps of digests
// read like standard test-vector notation) while words pack bit i at
// position i%64. Reversing each byte converts between the two.
inline constexpr std::array<uint8_t, 256> kByteReverse = [] {
    std::array<uint8_t, 256> t{};
    for (int b = 0; b < 256; ++b) {
        uint8_t r = 0;
        for (int i = 0; i < 8; ++i)
            if (b & (1 << i)) r |= static_cast<uint8_t>(0x80 >> i);
        t[b] = r;
    }
    return t;
}();

}  // namespace detail

// Fixed-length vector over GF(2). Length is set at construction; bits beyond
// the length are kept zero in the backing words so weight and equality can
// work wordwise.
class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(size_t n) : n_(n), w_(word_count_for(n), 0) {}

    static BitVector from_string(std::string_view s) {
        BitVector v(s.size());
        for (size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1')
                v.set(i, true);
            else if (s[i] != '0')
                throw std::invalid_argument("BitVector: string must be 0/1");
        }
        return v;
    }

    static BitVector from_bytes(std::span<const uint8_t> bytes, size_t nbits) {
        BitVector v;
        v.assign_from_bytes(bytes, nbits);
        return v;
    }

    // Uniform random vector; consumes exactly ceil(n/64) draws.
    static BitVector random(size_t n, std::mt19937_64& rng) {
        BitVector v(n);
        for (auto& w : v.w_) w = rng();
        v.trim_tail();
        return v;
    }

    size_t size() const { return n_; }
    bool empty() const { return n_ == 0; }

    bool get(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    bool operator[](size_t i) const { return get(i); }

    void set(size_t i, bool v) {
        const uint64_t m = uint64_t{1} << (i & 63);
        if (v)
            w_[i >> 6] |= m;
        else
            w_[i >> 6] &= ~m;
    }

    void flip(size_t i) { w_[i >> 6] ^= uint64_t{1} << (i & 63); }

    void clear_bits() { w_.assign(w_.size(), 0); }

    size_t weight() const {
        size_t c = 0;
        for (uint64_t w : w_) c += static_cast<size_t>(std::popcount(w));
        return c;
    }

    BitVector& operator^=(const BitVector& o) {
        if (o.n_ != n_) throw std::invalid_argument("BitVector xor: length mismatch");
        for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }

    friend BitVector operator^(BitVector a, const BitVector& b) {
        a ^= b;
        return a;
    }

    // XOR raw words into this vector; spans shorter than the backing storage
    // touch only the leading words.
    void xor_words_in(std::span<const uint64_t> words) {
        if (words.size() > w_.size()) throw std::invalid_argument("BitVector: word span too long");
        for (size_t i = 0; i < words.size(); ++i) w_[i] ^= words[i];
    }

    std::span<const uint64_t> words() const { return w_; }
    size_t word_count() const { return w_.size(); }
    uint64_t word(size_t i) const { return w_[i]; }

    // MSB-first bytes; a non-aligned final byte is padded with trailing zeros.
    std::vector<uint8_t> to_bytes() const {
        std::vector<uint8_t> out(byte_count());
        to_bytes_into(out);
        return out;
    }

    void to_bytes_into(std::span<uint8_t> out) const {
        const size_t nb = byte_count();
        if (out.size() < nb) throw std::invalid_argument("BitVector: byte buffer too short");
        for (size_t b = 0; b < nb; ++b)
            out[b] = detail::kByteReverse[static_cast<uint8_t>(w_[b >> 3] >> ((b & 7) * 8))];
    }

    void assign_from_bytes(std::span<const uint8_t> bytes, size_t nbits) {
        const size_t nb = (nbits + 7) / 8;
        if (bytes.size() < nb) throw std::invalid_argument("BitVector: byte buffer too short");
        n_ = nbits;
        w_.assign(word_count_for(nbits), 0);
        for (size_t b = 0; b < nb; ++b)
            w_[b >> 3] |= uint64_t{detail::kByteReverse[bytes[b]]} << ((b & 7) * 8);
        trim_tail();
    }

    size_t byte_count() const { return (n_ + 7) / 8; }

    std::string to_string() const {
        std::string s(n_, '0');
        for (size_t i = 0; i < n_; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

    friend bool operator==(const BitVector&, const BitVector&) = default;

  private:
    static size_t word_count_for(size_t n) { return (n + 63) / 64; }

    void trim_tail() {
        if (n_ & 63) w_.back() &= (uint64_t{1} << (n_ & 63)) - 1;
    }

    size_t n_ = 0;
    std::vector<uint64_t> w_;
};

inline size_t hamming_weight(const BitVector& v) { return v.weight(); }

inline std::pair<BitVector, BitVector> split(const BitVector& v, size_t k) {
    if (k > v.size()) throw std::invalid_argument("split: k out of range");
    BitVector a(k), b(v.size() - k);
    for (size_t i = 0; i < k; ++i) a.set(i, v.get(i));
    for (size_t i = k; i < v.size(); ++i) b.set(i - k, v.get(i));
    return {std::move(a), std::move(b)};
}

inline BitVector concat(const BitVector& a, const BitVector& b) {
    BitVector r(a.size() + b.size());
    for (size_t i = 0; i < a.size(); ++i) r.set(i, a.get(i));
    for (size_t i = 0; i < b.size(); ++i) r.set(a.size() + i, b.get(i));
    return r;
}

inline BitVector bytes_to_bits(std::span<const uint8_t> bytes) {
    return BitVector::from_bytes(bytes, bytes.size() * 8);
}

inline std::vector<uint8_t> bits_to_bytes(const BitVector& v) { return v.to_bytes(); }

}  // namespace hashfec
