#pragma once

#include <cmath>
#include <cstdint>

namespace mlpinn {

/// Deterministic splitmix64-based generator. All sampling and weight
/// initialization goes through this class so that a run is reproducible
/// from its config seed alone, independent of the standard library's
/// distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Standard normal via Box-Muller (pairs cached).
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Independent substream of a master seed; `salt` names the consumer
/// (network init, dataset level k, test set, ...).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t salt) {
    Rng r(master ^ (salt * 0xd1342543de82ef95ull + 0x632be59bd9b4e019ull));
    return r.next_u64();
}

}  // namespace mlpinn
