#ifndef ESBCH_GALOIS_HPP
#define ESBCH_GALOIS_HPP

#include <cassert>
#include <cstdint>
#include <vector>

#include "esbch/errors.hpp"

namespace esbch {

using GfElement = std::uint16_t;

/// Arithmetic context for GF(2^m), 2 <= m <= 16, built on log/antilog tables.
///
/// Elements are plain integers in [0, 2^m); value 0 is the field zero and
/// alpha (= the polynomial x) is a primitive element of the field. Immutable
/// after construction and safe to share across threads.
class GaloisField {
public:
    /// Constructs GF(2^m) with the pinned default primitive polynomial.
    explicit GaloisField(int m);

    /// Constructs GF(2^m) from a caller-supplied primitive polynomial given
    /// as a bitmask (bit i = coefficient of x^i). Throws DegreeMismatch if
    /// the polynomial does not have degree exactly m, NonPrimitivePolynomial
    /// if x fails to generate all 2^m - 1 nonzero elements.
    GaloisField(int m, std::uint32_t primitive_poly);

    /// Smallest primitive polynomial of degree m in integer (lexicographic)
    /// order. Throws DomainError for m outside [2, 16].
    static std::uint32_t default_primitive_poly(int m);

    int m() const { return m_; }
    std::uint32_t primitive_poly() const { return poly_; }
    /// Multiplicative group order 2^m - 1 (also the BCH code length n).
    std::uint32_t order() const { return order_; }
    std::uint32_t size() const { return order_ + 1; }

    GfElement add(GfElement a, GfElement b) const {
        check_element(a);
        check_element(b);
        return a ^ b;
    }

    GfElement mul(GfElement a, GfElement b) const {
        check_element(a);
        check_element(b);
        if (a == 0 || b == 0) return 0;
        return exp_[static_cast<std::uint32_t>(log_[a]) + log_[b]];
    }

    GfElement inv(GfElement a) const {
        check_element(a);
        if (a == 0) throw DivisionByZero("gf_inv: zero has no inverse");
        if (a == 1) return 1;
        return exp_[order_ - log_[a]];
    }

    /// a^k with the exponent reduced mod 2^m - 1; k may be negative.
    GfElement pow(GfElement a, std::int64_t k) const;

    /// alpha^e for any integer exponent (reduced mod 2^m - 1).
    GfElement alpha_pow(std::int64_t e) const {
        std::int64_t r = e % order_;
        if (r < 0) r += order_;
        return exp_[static_cast<std::uint32_t>(r)];
    }

    /// Discrete log base alpha; element must be nonzero.
    std::uint32_t log(GfElement a) const {
        check_element(a);
        if (a == 0) throw DivisionByZero("gf_log: log of zero");
        return log_[a];
    }

    const std::vector<GfElement>& exp_table() const { return exp_; }

private:
    void check_element(GfElement a) const { assert(a < size()); (void)a; }

    int m_;
    std::uint32_t poly_;
    std::uint32_t order_;
    std::vector<GfElement> exp_;    // doubled: exp_[i] for i in [0, 2*order-1)
    std::vector<std::uint32_t> log_;
};

} // namespace esbch

#endif
