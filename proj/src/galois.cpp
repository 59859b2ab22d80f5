#include "esbch/galois.hpp"

#include <array>

namespace esbch {

namespace {

// Smallest primitive polynomial per degree in integer order, degree 2..16.
constexpr std::array<std::uint32_t, 17> kDefaultPoly = {
    0,       0,       0x7,     0xB,     0x13,    0x25,   0x43,  0x83, 0x11D,
    0x211,   0x409,   0x805,   0x1053,  0x201B,  0x402B, 0x8003, 0x1002D,
};

int bit_degree(std::uint32_t v) {
    int d = -1;
    while (v) {
        ++d;
        v >>= 1;
    }
    return d;
}

} // namespace

std::uint32_t GaloisField::default_primitive_poly(int m) {
    if (m < 2 || m > 16) throw DomainError("GaloisField: m must be in [2, 16]");
    return kDefaultPoly[static_cast<std::size_t>(m)];
}

GaloisField::GaloisField(int m) : GaloisField(m, default_primitive_poly(m)) {}

GaloisField::GaloisField(int m, std::uint32_t primitive_poly)
    : m_(m), poly_(primitive_poly) {
    if (m < 2 || m > 16) throw DomainError("GaloisField: m must be in [2, 16]");
    if (bit_degree(primitive_poly) != m)
        throw DegreeMismatch("GaloisField: polynomial degree != m");

    order_ = (1u << m) - 1;
    exp_.assign(2 * order_, 0);
    log_.assign(order_ + 1u, 0);

    // Walk alpha^i = x^i mod p(x); primitivity holds iff the walk returns to
    // 1 only after exactly 2^m - 1 steps.
    std::uint32_t b = 1;
    for (std::uint32_t i = 0; i < order_; ++i) {
        if (b == 1 && i > 0)
            throw NonPrimitivePolynomial(
                "GaloisField: alpha cycle closed early, polynomial is not primitive");
        exp_[i] = static_cast<GfElement>(b);
        log_[b] = i;
        b <<= 1;
        if (b >> m & 1u) b ^= primitive_poly;
    }
    if (b != 1)
        throw NonPrimitivePolynomial(
            "GaloisField: alpha does not return to 1 after 2^m - 1 steps");
    for (std::uint32_t i = order_; i < 2 * order_; ++i) exp_[i] = exp_[i - order_];
}

GfElement GaloisField::pow(GfElement a, std::int64_t k) const {
    check_element(a);
    if (a == 0) {
        if (k < 0) throw DivisionByZero("gf_pow: negative power of zero");
        return k == 0 ? GfElement{1} : GfElement{0};
    }
    std::int64_t e = (static_cast<std::int64_t>(log_[a]) * (k % order_)) % order_;
    if (e < 0) e += order_;
    return exp_[static_cast<std::uint32_t>(e)];
}

} // namespace esbch
