#ifndef PLURIZERO_RNG_HPP
#define PLURIZERO_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <numbers>

namespace plurizero {

/// Deterministic stream RNG with a counter-based key derivation: the state is
/// a pure function of (seed, stream words), so trials can run in any order or
/// in parallel and still draw identical values. Core generator: splitmix64.
class TrialRng {
  public:
    /// Key the stream by seed plus identifying words, e.g. {degree, trial, section}.
    TrialRng(std::uint64_t seed, std::initializer_list<std::uint64_t> stream) {
        state_ = mix(seed ^ 0x9e3779b97f4a7c15ULL);
        for (std::uint64_t w : stream) state_ = mix(state_ ^ mix(w + 0xbf58476d1ce4e5b9ULL));
    }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix_output(state_);
    }

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in (0, 1]; safe as an argument to log().
    double uniform_pos() { return 1.0 - uniform(); }

    /// Standard complex normal: E a = 0, E|a|^2 = 1 (re, im ~ N(0, 1/2)).
    std::complex<double> complex_normal() {
        const double r = std::sqrt(-std::log(uniform_pos()));
        const double theta = 2.0 * std::numbers::pi * uniform();
        return {r * std::cos(theta), r * std::sin(theta)};
    }

    /// Real standard normal via Box-Muller (deterministic, branch-free).
    double normal() {
        const double r = std::sqrt(-2.0 * std::log(uniform_pos()));
        return r * std::cos(2.0 * std::numbers::pi * uniform());
    }

  private:
    static std::uint64_t mix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        return mix_output(x);
    }
    static std::uint64_t mix_output(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace plurizero

#endif
