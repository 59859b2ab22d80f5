#ifndef ESBCH_BITVEC_HPP
#define ESBCH_BITVEC_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace esbch {

/// Bit vector with one byte per bit; bits[i] is the coefficient of x^i.
using BitVec = std::vector<std::uint8_t>;

inline std::size_t weight(const BitVec& v) {
    std::size_t w = 0;
    for (auto b : v) w += (b != 0);
    return w;
}

inline BitVec xor_bits(const BitVec& a, const BitVec& b) {
    BitVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = (a[i] != 0) ^ (b[i] != 0);
    return out;
}

} // namespace esbch

#endif
