// Systematic code families compared by the harness: truncated SHA digest
// codes, random linear parity (S-RLC), and a seeded random-oracle stand-in
// (S-RNLC). A codeword is always message || digest.
#pragma once

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hashfec/bitvec.hpp"
#include "hashfec/sha.hpp"

namespace hashfec {

enum class CodeFamily { sha1, sha256, srlc, srnlc };

inline const char* family_name(CodeFamily f) {
    switch (f) {
        case CodeFamily::sha1: return "sha1";
        case CodeFamily::sha256: return "sha256";
        case CodeFamily::srlc: return "srlc";
        case CodeFamily::srnlc: return "srnlc";
    }
    return "?";
}

inline std::optional<CodeFamily> family_from_name(std::string_view s) {
    if (s == "sha1") return CodeFamily::sha1;
    if (s == "sha256") return CodeFamily::sha256;
    if (s == "srlc") return CodeFamily::srlc;
    if (s == "srnlc") return CodeFamily::srnlc;
    return std::nullopt;
}

namespace detail {

inline uint64_t mix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Message bits as zero-padded bytes, on the stack for the sizes the decoder
// loops over and on a reusable heap buffer otherwise.
template <typename Fn>
inline void with_message_bytes(const BitVector& m, Fn&& fn) {
    const size_t nb = m.byte_count();
    if (nb <= 64) {
        uint8_t buf[64];
        m.to_bytes_into({buf, nb});
        fn(std::span<const uint8_t>{buf, nb});
    } else {
        thread_local std::vector<uint8_t> buf;
        buf.resize(nb);
        m.to_bytes_into(buf);
        fn(std::span<const uint8_t>{buf.data(), nb});
    }
}

}  // namespace detail

// Truncated SHA digest of a bit-vector message: the message is hashed as
// ceil(k/8) zero-padded bytes and the first out_len bits of the digest are
// kept.
inline void sha_digest_into(const BitVector& m, CodeFamily variant, size_t out_len, BitVector& out) {
    detail::with_message_bytes(m, [&](std::span<const uint8_t> bytes) {
        if (variant == CodeFamily::sha1) {
            if (out_len > 160) throw std::invalid_argument("sha_digest: out_len exceeds SHA-1 size");
            const auto d = Sha1::hash(bytes);
            out.assign_from_bytes(d, out_len);
        } else if (variant == CodeFamily::sha256) {
            if (out_len > 256) throw std::invalid_argument("sha_digest: out_len exceeds SHA-256 size");
            const auto d = Sha256::hash(bytes);
            out.assign_from_bytes(d, out_len);
        } else {
            throw std::invalid_argument("sha_digest: variant must be sha1 or sha256");
        }
    });
}

inline BitVector sha_digest(const BitVector& m, CodeFamily variant, size_t out_len) {
    BitVector out;
    sha_digest_into(m, variant, out_len, out);
    return out;
}

// k x (n-k) parity matrix over GF(2) with i.i.d. Bernoulli(1/2) entries under
// the seed. Row i is the digest contribution of message bit i.
class RlcParity {
  public:
    RlcParity(size_t k, size_t parity_bits, uint64_t seed) : k_(k), p_(parity_bits), seed_(seed) {
        std::mt19937_64 rng(detail::mix64(seed));
        rows_.reserve(k);
        for (size_t i = 0; i < k; ++i) rows_.push_back(BitVector::random(p_, rng));
    }

    static RlcParity from_rows(std::vector<BitVector> rows) {
        if (rows.empty()) throw std::invalid_argument("RlcParity: no rows");
        RlcParity p;
        p.k_ = rows.size();
        p.p_ = rows.front().size();
        for (const auto& r : rows)
            if (r.size() != p.p_) throw std::invalid_argument("RlcParity: ragged rows");
        p.rows_ = std::move(rows);
        return p;
    }

    size_t k() const { return k_; }
    size_t parity_bits() const { return p_; }
    uint64_t seed() const { return seed_; }
    const BitVector& row(size_t i) const { return rows_[i]; }

    void parity_into(const BitVector& m, BitVector& out) const {
        if (m.size() != k_) throw std::invalid_argument("RlcParity: message length mismatch");
        out = BitVector(p_);
        const auto words = m.words();
        for (size_t wi = 0; wi < words.size(); ++wi) {
            uint64_t w = words[wi];
            while (w != 0) {
                const size_t bit = static_cast<size_t>(std::countr_zero(w));
                out.xor_words_in(rows_[wi * 64 + bit].words());
                w &= w - 1;
            }
        }
    }

    BitVector parity(const BitVector& m) const {
        BitVector out;
        parity_into(m, out);
        return out;
    }

  private:
    RlcParity() = default;
    size_t k_ = 0, p_ = 0;
    uint64_t seed_ = 0;
    std::vector<BitVector> rows_;
};

inline BitVector srlc_parity(const BitVector& m, const RlcParity& parity) { return parity.parity(m); }

// Random-oracle stand-in per the ideal-hash model: a deterministic seeded
// PRF (SHA-256 in counter mode over seed || bit-length || message) with a
// bounded memo cache in front. Determinism of the PRF is what guarantees
// that repeated or concurrent queries agree; the memo never changes values,
// so decoder-scale workloads (millions of distinct candidate queries per
// block) can bypass it without growing memory.
class RandomOracleTable {
  public:
    static constexpr size_t kDefaultMemoCapacity = size_t{1} << 16;

    RandomOracleTable(uint64_t seed, size_t out_bits, size_t memo_capacity = kDefaultMemoCapacity)
        : seed_(seed), out_bits_(out_bits), cap_(memo_capacity) {
        if (out_bits_ == 0) throw std::invalid_argument("RandomOracleTable: zero output length");
    }

    uint64_t seed() const { return seed_; }
    size_t out_bits() const { return out_bits_; }

    size_t memo_size() const {
        std::lock_guard lock(mu_);
        return memo_.size();
    }

    // Memoizing front door.
    BitVector query(const BitVector& m) const {
        const std::string key = memo_key(m);
        {
            std::lock_guard lock(mu_);
            auto it = memo_.find(key);
            if (it != memo_.end()) return it->second;
        }
        BitVector d;
        sample_into(m, d);
        std::lock_guard lock(mu_);
        if (memo_.size() < cap_) memo_.emplace(key, d);
        return d;
    }

    // Lock-free path for bulk query loops; same values as query().
    void query_into(const BitVector& m, BitVector& out) const { sample_into(m, out); }

  private:
    std::string memo_key(const BitVector& m) const {
        std::string key;
        key.reserve(8 + m.byte_count());
        for (int i = 0; i < 8; ++i) key.push_back(static_cast<char>(m.size() >> (8 * i)));
        const auto bytes = m.to_bytes();
        key.append(bytes.begin(), bytes.end());
        return key;
    }

    void sample_into(const BitVector& m, BitVector& out) const {
        uint8_t header[20];
        for (int i = 0; i < 8; ++i) header[i] = static_cast<uint8_t>(seed_ >> (8 * i));
        const uint64_t len = m.size();
        for (int i = 0; i < 8; ++i) header[8 + i] = static_cast<uint8_t>(len >> (8 * i));

        detail::with_message_bytes(m, [&](std::span<const uint8_t> bytes) {
            const size_t out_bytes = (out_bits_ + 7) / 8;
            uint8_t stream[64];
            std::vector<uint8_t> heap;
            uint8_t* dst = stream;
            if (out_bytes > sizeof(stream)) {
                heap.resize(out_bytes);
                dst = heap.data();
            }
            size_t produced = 0;
            uint32_t counter = 0;
            while (produced < out_bytes) {
                for (int i = 0; i < 4; ++i) header[16 + i] = static_cast<uint8_t>(counter >> (8 * i));
                Sha256 h;
                h.update(header);
                h.update(bytes);
                const auto block = h.finish();
                const size_t take = std::min(block.size(), out_bytes - produced);
                std::memcpy(dst + produced, block.data(), take);
                produced += take;
                ++counter;
            }
            out.assign_from_bytes({dst, out_bytes}, out_bits_);
        });
    }

    uint64_t seed_;
    size_t out_bits_;
    size_t cap_;
    mutable std::mutex mu_;
    mutable std::unordered_map<std::string, BitVector> memo_;
};

inline BitVector srnlc_digest(const BitVector& m, const RandomOracleTable& table) {
    return table.query(m);
}

// Code descriptor: blocklength geometry plus the digest map F. Encoding is
// systematic, encode(m) = m || F(m).
class SystematicCode {
  public:
    static SystematicCode sha1_code(size_t k, size_t n) {
        check_geometry(k, n);
        if (n - k > 160)
            throw std::invalid_argument("sha1 code: n-k exceeds the 160-bit digest");
        return SystematicCode(CodeFamily::sha1, k, n);
    }

    static SystematicCode sha256_code(size_t k, size_t n) {
        check_geometry(k, n);
        if (n - k > 256)
            throw std::invalid_argument("sha256 code: n-k exceeds the 256-bit digest");
        return SystematicCode(CodeFamily::sha256, k, n);
    }

    static SystematicCode srlc_code(size_t k, size_t n, uint64_t seed) {
        check_geometry(k, n);
        SystematicCode c(CodeFamily::srlc, k, n);
        c.rlc_ = std::make_shared<RlcParity>(k, n - k, seed);
        return c;
    }

    static SystematicCode srlc_code(size_t n, RlcParity parity) {
        const size_t k = parity.k();
        if (parity.parity_bits() != n - k) throw std::invalid_argument("srlc code: matrix shape");
        check_geometry(k, n);
        SystematicCode c(CodeFamily::srlc, k, n);
        c.rlc_ = std::make_shared<RlcParity>(std::move(parity));
        return c;
    }

    static SystematicCode srnlc_code(size_t k, size_t n, uint64_t seed) {
        check_geometry(k, n);
        SystematicCode c(CodeFamily::srnlc, k, n);
        c.oracle_ = std::make_shared<RandomOracleTable>(seed, n - k);
        return c;
    }

    static SystematicCode make(CodeFamily f, size_t k, size_t n, uint64_t seed) {
        switch (f) {
            case CodeFamily::sha1: return sha1_code(k, n);
            case CodeFamily::sha256: return sha256_code(k, n);
            case CodeFamily::srlc: return srlc_code(k, n, seed);
            case CodeFamily::srnlc: return srnlc_code(k, n, seed);
        }
        throw std::invalid_argument("unknown code family");
    }

    CodeFamily family() const { return family_; }
    size_t k() const { return k_; }
    size_t n() const { return n_; }
    size_t parity_bits() const { return n_ - k_; }
    bool linear() const { return family_ == CodeFamily::srlc; }

    void digest_into(const BitVector& m, BitVector& out) const {
        if (m.size() != k_) throw std::invalid_argument("digest: message length mismatch");
        switch (family_) {
            case CodeFamily::sha1:
            case CodeFamily::sha256:
                sha_digest_into(m, family_, parity_bits(), out);
                break;
            case CodeFamily::srlc:
                rlc_->parity_into(m, out);
                break;
            case CodeFamily::srnlc:
                oracle_->query_into(m, out);
                break;
        }
    }

    BitVector digest(const BitVector& m) const {
        BitVector out;
        digest_into(m, out);
        return out;
    }

    BitVector encode(const BitVector& m) const {
        if (m.size() != k_) throw std::invalid_argument("encode: message length mismatch");
        return concat(m, digest(m));
    }

    bool hash_verify(const BitVector& m, const BitVector& d) const {
        if (m.size() != k_ || d.size() != parity_bits())
            throw std::invalid_argument("hash_verify: length mismatch");
        thread_local BitVector scratch;
        digest_into(m, scratch);
        return scratch == d;
    }

    const RlcParity& parity_matrix() const {
        if (!rlc_) throw std::logic_error("parity_matrix: not an srlc code");
        return *rlc_;
    }

    const RandomOracleTable& oracle() const {
        if (!oracle_) throw std::logic_error("oracle: not an srnlc code");
        return *oracle_;
    }

  private:
    SystematicCode(CodeFamily f, size_t k, size_t n) : family_(f), k_(k), n_(n) {}

    static void check_geometry(size_t k, size_t n) {
        if (k == 0 || k >= n) throw std::invalid_argument("code geometry: need 0 < k < n");
    }

    CodeFamily family_;
    size_t k_, n_;
    std::shared_ptr<const RlcParity> rlc_;
    std::shared_ptr<const RandomOracleTable> oracle_;
};

inline BitVector encode(const SystematicCode& code, const BitVector& m) { return code.encode(m); }

inline bool hash_verify(const BitVector& m, const BitVector& d, const SystematicCode& code) {
    return code.hash_verify(m, d);
}

}  // namespace hashfec
