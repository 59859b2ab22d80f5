#ifndef ESBCH_CHANNEL_SIM_HPP
#define ESBCH_CHANNEL_SIM_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "esbch/bch_code.hpp"
#include "esbch/bm_decoder.hpp"

namespace esbch {

/// Splittable 64-bit generator; each trial derives an independent stream
/// from (seed, trial index), which makes aggregates independent of how
/// trials are partitioned across workers.
inline constexpr const char* kRngName = "splitmix64-per-trial/v1";

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1).
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    static std::uint64_t derive_trial_seed(std::uint64_t seed, std::uint64_t trial_index);

private:
    std::uint64_t state_;
};

/// Flips each bit independently with probability eps; returns the corrupted
/// word and the error pattern xi (received = codeword xor xi).
std::pair<BitVec, BitVec> bsc_corrupt(const BitVec& codeword, double eps, SplitMix64& rng);

struct SimConfig {
    int m = 0;
    int t = 0;
    StopCriterion criterion = StopCriterion::es3(6);
    double eps = 0.0;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    int workers = 1;

    void validate() const;
};

struct TrialRecord {
    int e = 0; // true injected error count
    DecodeOutcome outcome_full;
    DecodeOutcome outcome_es;
    bool agree = false;
    bool malfunction = false;       // early stop fired, output wrong, undetected
    bool detected_failure = false;  // early stop fired, DecodeFailure raised
    int iterations_saved = 0;
    std::int64_t muls_saved = 0;
};

/// One encode/corrupt/decode-under-both-criteria trial, fully determined by
/// (code, criterion, eps, seed, trial_index).
TrialRecord run_single_trial(const BchCode& code, const StopCriterion& criterion,
                             double eps, std::uint64_t seed, std::uint64_t trial_index);

struct SimBucket {
    std::uint64_t count = 0;
    std::uint64_t agree = 0;
    std::uint64_t malfunction = 0;
    std::uint64_t detected_failure = 0;
    std::uint64_t sum_iter_full = 0;
    std::uint64_t sum_iter_es = 0;
    std::uint64_t sum_muls_full = 0;
    std::uint64_t sum_muls_es = 0;

    void absorb(const SimBucket& other);
};

struct SimSummary {
    SimConfig config;
    std::map<int, SimBucket> by_weight; // keyed by injected error count e
    SimBucket totals;
    std::uint64_t max_iter_full = 0;
    std::uint64_t max_iter_es = 0;
    std::uint64_t max_muls_full = 0;
    std::uint64_t max_muls_es = 0;

    double agreement_rate() const;
    double mean_iter_full() const;
    double mean_iter_es() const;
    double mean_muls_full() const;
    double mean_muls_es() const;
};

SimSummary run_trials(const BchCode& code, const SimConfig& config);
SimSummary run_trials(const SimConfig& config);

struct OracleWeightStats {
    std::uint64_t patterns = 0;
    std::uint64_t disagreements = 0;
    std::uint64_t es_malfunctions = 0;
    std::uint64_t es_detected_failures = 0;
    std::uint64_t full_corrected = 0;
    std::uint64_t full_detected_failures = 0;
    std::uint64_t full_miscorrections = 0;
};

struct OracleDisagreement {
    std::vector<int> positions;
    int weight = 0;
    DecodeStatus full_status;
    DecodeStatus es_status;
    int es_stop_iteration = 0;
    std::vector<GfElement> es_discrepancies;
};

struct OracleReport {
    int m = 0;
    int t = 0;
    StopCriterion criterion = StopCriterion::full2t();
    int max_weight = 0;
    std::map<int, OracleWeightStats> by_weight;
    std::vector<OracleDisagreement> disagreements;
    /// Weight <= t patterns where Full2T failed to correct exactly; must stay
    /// empty for a sound decoder.
    std::uint64_t full_failures_within_t = 0;

    std::uint64_t total_disagreements() const { return disagreements.size(); }
};

/// Decodes every error pattern of weight <= max_weight against the all-zero
/// codeword under both the given criterion and Full2T, exhaustively.
/// Requires n = 2^m - 1 <= 31.
OracleReport exhaustive_oracle(int m, int t, const StopCriterion& criterion, int max_weight);

} // namespace esbch

#endif
