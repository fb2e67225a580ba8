#ifndef NECOC_RNG_HPP
#define NECOC_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace necoc {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic generator. mt19937_64 output is pinned by the standard, and the
// bounded/real draws below avoid std::*_distribution, whose algorithms are
// implementation-defined; streams therefore replay identically everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed_material(seed, 0)) {}

    // Independent substream t of a root seed; trial/fold/column streams are
    // reproducible regardless of scheduling order.
    static Rng substream(std::uint64_t root, std::uint64_t index) {
        return Rng(seed_material(root, index + 1), 0);
    }

    std::uint64_t next() { return engine_(); }

    // Uniform on [0, bound) by rejection sampling; bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
        std::uint64_t x = engine_();
        while (x < threshold) x = engine_();
        return x % bound;
    }

    // Uniform on [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Standard normal via Box-Muller.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform01() - 1.0;
            v = 2.0 * uniform01() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        have_spare_ = true;
        return u * f;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }

private:
    Rng(std::uint64_t material, int) : engine_(material) {}

    static std::uint64_t seed_material(std::uint64_t root, std::uint64_t index) {
        std::uint64_t s = root;
        std::uint64_t a = splitmix64(s);
        s ^= index * 0xda942042e4dd58b5ULL;
        return a ^ splitmix64(s);
    }

    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace necoc

#endif
