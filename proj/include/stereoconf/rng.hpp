#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace stereoconf {

/// Deterministic splitmix64 generator. All randomness in the project flows
/// from one root seed through named sub-streams so that runs are reproducible
/// independent of call order between streams.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    /// Derive an independent stream from (seed, name, index...).
    static Rng stream(std::uint64_t seed, std::string_view name, std::uint64_t a = 0,
                      std::uint64_t b = 0) {
        std::uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a over the stream name
        for (char c : name) {
            h ^= static_cast<std::uint64_t>(static_cast<unsigned char>(c));
            h *= 0x100000001b3ull;
        }
        Rng r(seed ^ h);
        r.next_u64();
        r.state_ += 0x9e3779b97f4a7c15ull * (a + 1);
        r.next_u64();
        r.state_ += 0x9e3779b97f4a7c15ull * (b + 1);
        r.next_u64();
        return r;
    }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * (1.0 / 9007199254740992.0);
    }

    /// Uniform integer in [lo, hi] inclusive.
    int uniform_int(int lo, int hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(next_u64() % span);
    }

    /// Standard normal via Box-Muller; avoids std::normal_distribution so the
    /// byte stream does not depend on the standard library implementation.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace stereoconf
