#include "esbch/gf2poly.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace esbch {

void Gf2Poly::trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

Gf2Poly Gf2Poly::x_pow(int k) {
    Gf2Poly p;
    p.set_coeff(k, true);
    return p;
}

int Gf2Poly::degree() const {
    if (words_.empty()) return -1;
    const int top = std::bit_width(words_.back()) - 1;
    return static_cast<int>(words_.size() - 1) * 64 + top;
}

void Gf2Poly::set_coeff(int i, bool v) {
    const std::size_t w = static_cast<std::size_t>(i) / 64;
    const std::size_t b = static_cast<std::size_t>(i) % 64;
    if (w >= words_.size()) {
        if (!v) return;
        words_.resize(w + 1, 0);
    }
    if (v)
        words_[w] |= std::uint64_t{1} << b;
    else
        words_[w] &= ~(std::uint64_t{1} << b);
    trim();
}

Gf2Poly Gf2Poly::operator+(const Gf2Poly& rhs) const {
    Gf2Poly out;
    out.words_.resize(std::max(words_.size(), rhs.words_.size()), 0);
    for (std::size_t i = 0; i < out.words_.size(); ++i) {
        std::uint64_t w = 0;
        if (i < words_.size()) w ^= words_[i];
        if (i < rhs.words_.size()) w ^= rhs.words_[i];
        out.words_[i] = w;
    }
    out.trim();
    return out;
}

Gf2Poly Gf2Poly::shifted_left(int k) const {
    if (is_zero() || k == 0) {
        Gf2Poly out = *this;
        return out;
    }
    Gf2Poly out;
    const int word_shift = k / 64;
    const int bit_shift = k % 64;
    out.words_.assign(words_.size() + static_cast<std::size_t>(word_shift) + 1, 0);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        out.words_[i + static_cast<std::size_t>(word_shift)] |= words_[i] << bit_shift;
        if (bit_shift)
            out.words_[i + static_cast<std::size_t>(word_shift) + 1] |=
                words_[i] >> (64 - bit_shift);
    }
    out.trim();
    return out;
}

Gf2Poly Gf2Poly::operator*(const Gf2Poly& rhs) const {
    Gf2Poly out;
    if (is_zero() || rhs.is_zero()) return out;
    const int d = degree();
    for (int i = 0; i <= d; ++i)
        if (coeff(i)) out = out + rhs.shifted_left(i);
    return out;
}

Gf2Poly Gf2Poly::mod(const Gf2Poly& d) const {
    if (d.is_zero()) throw std::invalid_argument("Gf2Poly::mod: division by zero polynomial");
    Gf2Poly r = *this;
    const int dd = d.degree();
    int rd = r.degree();
    while (rd >= dd) {
        r = r + d.shifted_left(rd - dd);
        rd = r.degree();
    }
    return r;
}

bool Gf2Poly::operator==(const Gf2Poly& rhs) const { return words_ == rhs.words_; }

std::string Gf2Poly::to_hex() const {
    if (words_.empty()) return "0";
    static const char* digits = "0123456789abcdef";
    std::string out;
    bool leading = true;
    for (std::size_t wi = words_.size(); wi-- > 0;) {
        for (int nib = 15; nib >= 0; --nib) {
            const unsigned v = (words_[wi] >> (4 * nib)) & 0xF;
            if (leading && v == 0) continue;
            leading = false;
            out.push_back(digits[v]);
        }
    }
    return out;
}

} // namespace esbch
