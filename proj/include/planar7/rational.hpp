#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace planar7 {

// Exact arithmetic for all discharging weights and ledger ratios.
// Denominators stay tiny (lcm of face lengths, 72, 18), so long long is ample.
using Rat = boost::rational<long long>;

// Prints "5" for integers, "41/72" otherwise.
inline std::string rat_str(const Rat& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace planar7
