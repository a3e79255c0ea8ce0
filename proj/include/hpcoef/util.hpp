#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>

namespace hpcoef {

using cx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Compensated (Kahan) accumulator. Summation order is fixed by the caller, so
/// results are deterministic.
class KahanSum {
public:
    void add(double x) {
        const double y = x - comp_;
        const double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Uniform double in [0,1) built from raw mt19937_64 output. The engine sequence
/// is pinned by the standard, so streams are identical across platforms.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform point in the closed disc of the given radius.
inline cx uniform_disc(std::mt19937_64& rng, double radius) {
    const double r = radius * std::sqrt(uniform01(rng));
    const double t = 2.0 * kPi * uniform01(rng);
    return {r * std::cos(t), r * std::sin(t)};
}

/// splitmix64 step, used to derive independent per-task seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Thread cap from HPX_THREADS; hardware concurrency when unset.
unsigned max_threads();

/// Runs fn(i) for i in [0, n). Tasks must be independent; each writes only its
/// own output slot, so the result does not depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace hpcoef
