#include "esbch/bch_code.hpp"

#include <set>
#include <string>

namespace esbch {

namespace {

// Minimal polynomial of alpha^i: product of (x + alpha^e) over the conjugacy
// class {i, 2i, 4i, ...} mod 2^m - 1. Coefficients land in GF(2).
Gf2Poly minimal_poly(const GaloisField& gf, std::uint32_t i) {
    const std::uint32_t n = gf.order();
    std::vector<std::uint32_t> exponents;
    std::uint32_t e = i;
    do {
        exponents.push_back(e);
        e = static_cast<std::uint32_t>((2ull * e) % n);
    } while (e != i);

    std::vector<GfElement> coeffs{1};
    for (std::uint32_t ex : exponents) {
        const GfElement root = gf.alpha_pow(ex);
        std::vector<GfElement> next(coeffs.size() + 1, 0);
        for (std::size_t d = 0; d < coeffs.size(); ++d) {
            next[d + 1] ^= coeffs[d];
            next[d] ^= gf.mul(coeffs[d], root);
        }
        coeffs.swap(next);
    }

    Gf2Poly out;
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
        if (coeffs[d] > 1)
            throw Error("minimal_poly: coefficient escaped GF(2)");
        if (coeffs[d]) out.set_coeff(static_cast<int>(d), true);
    }
    return out;
}

} // namespace

BchCode::BchCode(std::shared_ptr<const GaloisField> field, int t)
    : field_(std::move(field)), t_(t) {
    if (t < 1) throw DomainError("BchCode: t must be >= 1");
    const GaloisField& gf = *field_;
    n_ = static_cast<int>(gf.order());
    if (2 * t >= n_)
        throw CapacityExceeded("BchCode: 2t must be smaller than n = 2^m - 1");

    std::set<std::uint32_t> covered;
    generator_ = Gf2Poly::one();
    for (int i = 1; i <= 2 * t; ++i) {
        const std::uint32_t rep = static_cast<std::uint32_t>(i);
        if (covered.count(rep)) continue;
        std::uint32_t e = rep;
        do {
            covered.insert(e);
            e = static_cast<std::uint32_t>((2ull * e) % gf.order());
        } while (e != rep);
        minimal_polys_.push_back(minimal_poly(gf, rep));
        generator_ = generator_ * minimal_polys_.back();
    }

    if (generator_.degree() >= n_)
        throw CapacityExceeded("BchCode: deg(g) >= n, capability too large for this length");
    k_ = n_ - generator_.degree();

    const int deg_g = generator_.degree();
    gen_low_words_.assign(static_cast<std::size_t>(deg_g) / 64 + 1, 0);
    for (int i = 0; i < deg_g; ++i)
        if (generator_.coeff(i))
            gen_low_words_[static_cast<std::size_t>(i) / 64] |=
                std::uint64_t{1} << (static_cast<std::size_t>(i) % 64);
}

BitVec BchCode::encode(const BitVec& message) const {
    if (static_cast<int>(message.size()) != k_)
        throw LengthMismatch("encode: message length must equal k = " + std::to_string(k_));
    const int deg_g = n_ - k_;

    // Word-level LFSR division: register holds x^(n-k) m_high(x) mod g(x)
    // while message bits stream in from the top coefficient down.
    const std::size_t nwords = gen_low_words_.size();
    std::vector<std::uint64_t> reg(nwords, 0);
    const std::size_t top_word = static_cast<std::size_t>(deg_g - 1) / 64;
    const std::size_t top_bit = static_cast<std::size_t>(deg_g - 1) % 64;

    for (int i = k_ - 1; i >= 0; --i) {
        const std::uint64_t feedback =
            ((reg[top_word] >> top_bit) & 1u) ^ message[static_cast<std::size_t>(i)];
        for (std::size_t w = nwords; w-- > 1;)
            reg[w] = (reg[w] << 1) | (reg[w - 1] >> 63);
        reg[0] <<= 1;
        if (feedback)
            for (std::size_t w = 0; w < nwords; ++w) reg[w] ^= gen_low_words_[w];
    }

    BitVec out(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < deg_g; ++i)
        out[static_cast<std::size_t>(i)] =
            (reg[static_cast<std::size_t>(i) / 64] >> (static_cast<std::size_t>(i) % 64)) & 1u;
    for (int i = 0; i < k_; ++i)
        out[static_cast<std::size_t>(deg_g + i)] = message[static_cast<std::size_t>(i)];
    return out;
}

GfElement BchCode::eval_at_alpha(const BitVec& word, std::int64_t j) const {
    const GaloisField& gf = *field_;
    GfElement acc = 0;
    for (std::size_t p = word.size(); p-- > 0;) {
        acc = gf.mul(acc, gf.alpha_pow(j));
        if (word[p]) acc ^= 1;
    }
    return acc;
}

bool BchCode::is_codeword(const BitVec& word) const {
    if (static_cast<int>(word.size()) != n_)
        throw LengthMismatch("is_codeword: word length must equal n");
    for (int i = 1; i <= 2 * t_; ++i)
        if (eval_at_alpha(word, i) != 0) return false;
    return true;
}

} // namespace esbch
