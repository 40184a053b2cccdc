#pragma once

#include <Eigen/Core>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

namespace duet {

// Deterministic RNG with explicitly specified output mapping. std::mt19937_64
// is bit-exact everywhere, but the std distributions are not; the mappings
// below are, so seeded artifacts are byte-identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(splitmix(seed)) {}

    std::uint64_t next_u64() {
        // xorshift128+ style step on a splitmix-expanded state
        std::uint64_t x = state_[0];
        const std::uint64_t y = state_[1];
        state_[0] = y;
        x ^= x << 23;
        state_[1] = x ^ y ^ (x >> 17) ^ (y >> 26);
        return state_[1] + y;
    }

    // uniform in [0, 1) with 53-bit resolution
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Box-Muller; both draws consumed so the stream stays aligned
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        if (u1 < 1e-300) u1 = 1e-300;
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    std::uint64_t next_below(std::uint64_t n) { return n == 0 ? 0 : next_u64() % n; }

    int index(int n) { return static_cast<int>(next_below(static_cast<std::uint64_t>(n))); }

    template <class Mat>
    Mat gaussian(Eigen::Index rows, Eigen::Index cols, double stddev = 1.0) {
        Mat m(rows, cols);
        for (Eigen::Index i = 0; i < rows; ++i)
            for (Eigen::Index j = 0; j < cols; ++j)
                m(i, j) = static_cast<typename Mat::Scalar>(stddev * normal());
        return m;
    }

private:
    static std::array<std::uint64_t, 2> splitmix(std::uint64_t seed) {
        std::array<std::uint64_t, 2> s{};
        for (auto& v : s) {
            seed += 0x9e3779b97f4a7c15ULL;
            std::uint64_t z = seed;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            v = z ^ (z >> 31);
        }
        if (s[0] == 0 && s[1] == 0) s[0] = 1;
        return s;
    }

    std::array<std::uint64_t, 2> state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Stable 64-bit hash for deriving substream seeds from labels.
inline std::uint64_t hash_label(const std::string& label) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : label) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t derive_seed(std::uint64_t base, const std::string& label) {
    return base ^ hash_label(label);
}

} // namespace duet
