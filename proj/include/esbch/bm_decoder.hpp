#ifndef ESBCH_BM_DECODER_HPP
#define ESBCH_BM_DECODER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "esbch/bch_code.hpp"
#include "esbch/bitvec.hpp"

namespace esbch {

struct SyndromeSet {
    std::vector<GfElement> s; // s[i] = r(alpha^(i+1)), 2t entries

    bool all_zero() const {
        for (auto v : s)
            if (v) return false;
        return true;
    }
};

/// s[i] = r(alpha^(i+1)) for i in [0, 2t), evaluated by Horner's rule.
SyndromeSet compute_syndromes(const BchCode& code, const BitVec& received);

/// Which rule terminates the Berlekamp-Massey loop.
struct StopCriterion {
    enum class Kind { Full2T, ES1, ES2, ES3 };

    Kind kind = Kind::Full2T;
    int kappa = 0; // ES3 only

    static StopCriterion full2t() { return {Kind::Full2T, 0}; }
    static StopCriterion es1() { return {Kind::ES1, 0}; }
    static StopCriterion es2() { return {Kind::ES2, 0}; }
    static StopCriterion es3(int kappa);

    std::string name() const;
};

/// Berlekamp-Massey iteration state. d_history keeps every discrepancy so
/// the stop criteria and post-hoc analysis can inspect the full run.
struct BmState {
    const GaloisField* field = nullptr;
    int j = 0;                        // completed iterations (1-based count)
    std::vector<GfElement> sigma{1};  // error locator, sigma[0] = 1
    std::vector<GfElement> aux{1};    // auxiliary polynomial B(x)
    int l = 0;                        // current register length l_u
    GfElement last_nonzero_d = 1;
    int shift = 1;                    // power of x applied to aux on update
    std::vector<GfElement> d_history;
    std::uint64_t mul_count = 0;

    int sigma_degree() const {
        for (std::size_t i = sigma.size(); i-- > 0;)
            if (sigma[i]) return static_cast<int>(i);
        return -1;
    }
};

BmState bm_init(const BchCode& code);

/// One conventional BM update: consumes syndrome s_{j+1}, appends the new
/// discrepancy to d_history and accounts every executed field multiplication.
void bm_iterate(BmState& state, const SyndromeSet& syndromes);

bool check_stop(const StopCriterion& criterion, const BmState& state, int t);

/// All positions p in [0, n) with sigma(alpha^-p) = 0.
std::vector<int> chien_search(const BchCode& code, const std::vector<GfElement>& sigma);

enum class DecodeStatus { NoErrors, Corrected, DecodeFailure };

const char* to_string(DecodeStatus s);

struct DecodeOutcome {
    DecodeStatus status = DecodeStatus::DecodeFailure;
    BitVec corrected;               // empty on DecodeFailure
    std::vector<int> error_locations;
    int v_hat = 0;                  // roots found by Chien search
    int iterations_used = 0;
    std::uint64_t mul_count = 0;
    bool early_stopped = false;     // criterion fired before 2t iterations
    int stop_iteration = 0;         // j at which the loop ended
    std::vector<GfElement> locator;
    std::vector<GfElement> discrepancies;
};

DecodeOutcome decode(const BchCode& code, const BitVec& received,
                     const StopCriterion& criterion);

/// Same as decode() with the syndrome computation hoisted out; used by the
/// simulator to share syndromes between the two criteria under comparison.
/// `sibling`, when given, must be a decode of the same received word under
/// another criterion; an identical locator lets the Chien result be reused.
DecodeOutcome decode_with_syndromes(const BchCode& code, const BitVec& received,
                                    const StopCriterion& criterion,
                                    const SyndromeSet& syndromes,
                                    const DecodeOutcome* sibling = nullptr);

} // namespace esbch

#endif
