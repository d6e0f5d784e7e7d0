#pragma once

#include <cstdint>
#include <random>

namespace cssx {

/// The toolkit's documented uniform stream: one mt19937_64 output word per
/// draw, mapped to (0, 1] as ((x >> 11) + 1) * 2^-53. Excluding zero keeps
/// inverse-CDF sampling off zero-probability bins; including one is harmless
/// because cumulative sums end at one.
inline double unit_uniform(std::mt19937_64& gen) {
    return static_cast<double>((gen() >> 11) + 1) * 0x1.0p-53;
}

}  // namespace cssx
