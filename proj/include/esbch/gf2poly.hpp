#ifndef ESBCH_GF2POLY_HPP
#define ESBCH_GF2POLY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace esbch {

/// Dense polynomial over GF(2), bit i of the word array = coefficient of x^i.
class Gf2Poly {
public:
    Gf2Poly() = default;
    /// From a bitmask, e.g. 0x13 = x^4 + x + 1.
    explicit Gf2Poly(std::uint64_t bits) : words_{bits} { trim(); }

    static Gf2Poly one() { return Gf2Poly(1); }
    static Gf2Poly x_pow(int k);

    bool is_zero() const { return words_.empty(); }
    /// Degree of the polynomial; -1 for the zero polynomial.
    int degree() const;

    bool coeff(int i) const {
        const std::size_t w = static_cast<std::size_t>(i) / 64;
        if (w >= words_.size()) return false;
        return (words_[w] >> (static_cast<std::size_t>(i) % 64)) & 1u;
    }
    void set_coeff(int i, bool v);

    Gf2Poly operator+(const Gf2Poly& rhs) const; // == subtraction over GF(2)
    Gf2Poly operator*(const Gf2Poly& rhs) const;
    /// Remainder of *this divided by d; d must be nonzero.
    Gf2Poly mod(const Gf2Poly& d) const;
    Gf2Poly shifted_left(int k) const; // multiply by x^k

    bool operator==(const Gf2Poly& rhs) const;
    bool operator!=(const Gf2Poly& rhs) const { return !(*this == rhs); }

    /// Hex rendering of the coefficient bitmask, most significant digit first.
    std::string to_hex() const;

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    void trim();
    std::vector<std::uint64_t> words_;
};

} // namespace esbch

#endif
