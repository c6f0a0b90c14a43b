#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>

namespace xnb {

// Seeded generator with fully specified output. std::mt19937_64 is pinned by
// the standard; the distributions below are implemented here because the
// standard library ones are implementation-defined and would break
// reproducibility across toolchains.
class Rng {
public:
    static constexpr std::string_view kAlgorithm = "mt19937_64/fisher-yates";

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform integer in [0, bound), rejection sampling. bound must be > 0.
    std::uint64_t uniform_index(std::uint64_t bound);

    // Uniform real in [0, 1) with 53 random bits.
    double uniform01();

    // Standard normal draw (Marsaglia polar method).
    double normal();
    double normal(double mean, double sd) { return mean + sd * normal(); }

    double exponential(double rate = 1.0);

    template <typename T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const auto j = static_cast<std::size_t>(uniform_index(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace xnb
