#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace som {

/// Seeded generator used for every random decision in the library.
///
/// The engine is std::mt19937_64 seeded with a single 64-bit value; its output
/// sequence is fixed by the C++ standard. Distributions from <random> are
/// implementation-defined, so the conversions below are spelled out:
///
///   uniform01()     = (next() >> 11) * 2^-53            in [0, 1)
///   below(n)        = r % n for the first r = next() with r >= (2^64 - n) % n
///   shuffle(span)   = Fisher-Yates from the back: for i = n-1 .. 1 swap(i, below(i+1))
///
/// Any implementation following these rules reproduces the same streams.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    std::uint64_t below(std::uint64_t n) {
        // Reject the lowest 2^64 mod n outputs so the modulo is unbiased.
        const std::uint64_t threshold = (0 - n) % n;
        std::uint64_t r = next();
        while (r < threshold) r = next();
        return r % n;
    }

    template <typename T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const auto j = static_cast<std::size_t>(below(i));
            using std::swap;
            swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace som
