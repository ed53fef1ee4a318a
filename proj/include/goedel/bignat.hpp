#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace goedel {

// Arbitrary-precision natural. Invariant: never negative anywhere in this
// library; functions that accept user input validate sign once at the edge.
using BigNat = mpz_class;

inline std::string dec(const BigNat& n) { return n.get_str(10); }

// Parses a decimal natural. Throws std::invalid_argument on junk or sign.
inline BigNat parse_bignat(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty number");
    for (char c : text)
        if (c < '0' || c > '9') throw std::invalid_argument("not a decimal natural: " + text);
    return BigNat(text, 10);
}

inline bool fits_u64(const BigNat& n) { return n.fits_ulong_p(); }

inline uint64_t to_u64(const BigNat& n) { return n.get_ui(); }

}  // namespace goedel
