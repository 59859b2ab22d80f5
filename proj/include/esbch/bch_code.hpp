#ifndef ESBCH_BCH_CODE_HPP
#define ESBCH_BCH_CODE_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "esbch/bitvec.hpp"
#include "esbch/galois.hpp"
#include "esbch/gf2poly.hpp"

namespace esbch {

/// Binary primitive BCH code of length n = 2^m - 1 with designed correction
/// capability t. The generator polynomial is the LCM of the minimal
/// polynomials of alpha^1 .. alpha^2t. Immutable after construction.
class BchCode {
public:
    BchCode(std::shared_ptr<const GaloisField> field, int t);
    BchCode(int m, int t)
        : BchCode(std::make_shared<const GaloisField>(m), t) {}

    const GaloisField& field() const { return *field_; }
    std::shared_ptr<const GaloisField> field_ptr() const { return field_; }

    int n() const { return n_; }
    int k() const { return k_; }
    int t() const { return t_; }
    const Gf2Poly& generator() const { return generator_; }
    const std::vector<Gf2Poly>& minimal_polys() const { return minimal_polys_; }

    /// Systematic encoding: parity (the remainder of x^(n-k) msg(x) mod g(x))
    /// occupies bits [0, n-k), the message occupies bits [n-k, n).
    BitVec encode(const BitVec& message) const;

    /// True iff all 2t syndromes of the word vanish.
    bool is_codeword(const BitVec& word) const;

    /// Evaluates the word as a polynomial at alpha^j.
    GfElement eval_at_alpha(const BitVec& word, std::int64_t j) const;

private:
    std::shared_ptr<const GaloisField> field_;
    int n_;
    int k_;
    int t_;
    Gf2Poly generator_;
    std::vector<Gf2Poly> minimal_polys_;
    // g(x) with the top term dropped, packed for the word-level encoder
    std::vector<std::uint64_t> gen_low_words_;
};

} // namespace esbch

#endif
