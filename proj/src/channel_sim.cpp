#include "esbch/channel_sim.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace esbch {

std::uint64_t SplitMix64::derive_trial_seed(std::uint64_t seed, std::uint64_t trial_index) {
    SplitMix64 h(seed ^ (0xA24BAED4963EE407ull * (trial_index + 1)));
    return h.next();
}

std::pair<BitVec, BitVec> bsc_corrupt(const BitVec& codeword, double eps, SplitMix64& rng) {
    if (!(eps >= 0.0 && eps <= 1.0)) throw DomainError("bsc_corrupt: eps outside [0, 1]");
    const std::size_t n = codeword.size();
    BitVec pattern(n, 0);
    if (eps >= 1.0) {
        std::fill(pattern.begin(), pattern.end(), std::uint8_t{1});
    } else if (eps > 0.0) {
        // Geometric gaps between flips; equivalent to n independent draws.
        const double denom = std::log1p(-eps);
        double pos = -1.0;
        for (;;) {
            const double u = rng.next_unit();
            if (u == 0.0) break;
            pos += 1.0 + std::floor(std::log(u) / denom);
            if (pos >= static_cast<double>(n)) break;
            pattern[static_cast<std::size_t>(pos)] = 1;
        }
    }
    BitVec received = xor_bits(codeword, pattern);
    return {std::move(received), std::move(pattern)};
}

void SimConfig::validate() const {
    if (m < 2 || m > 16) throw DomainError("SimConfig: m outside [2, 16]");
    if (t < 1) throw DomainError("SimConfig: t must be >= 1");
    if (trials < 1) throw DomainError("SimConfig: trials must be >= 1");
    if (!(eps > 0.0 && eps < 0.5)) throw DomainError("SimConfig: eps must lie in (0, 0.5)");
    if (workers < 1) throw DomainError("SimConfig: workers must be >= 1");
}

TrialRecord run_single_trial(const BchCode& code, const StopCriterion& criterion,
                             double eps, std::uint64_t seed, std::uint64_t trial_index) {
    SplitMix64 rng(SplitMix64::derive_trial_seed(seed, trial_index));

    BitVec message(static_cast<std::size_t>(code.k()));
    for (std::size_t i = 0; i < message.size(); i += 64) {
        std::uint64_t w = rng.next();
        for (std::size_t b = 0; b < 64 && i + b < message.size(); ++b)
            message[i + b] = (w >> b) & 1u;
    }
    const BitVec codeword = code.encode(message);
    auto [received, pattern] = bsc_corrupt(codeword, eps, rng);

    const SyndromeSet synd = compute_syndromes(code, received);
    TrialRecord rec;
    rec.e = static_cast<int>(weight(pattern));
    rec.outcome_full = decode_with_syndromes(code, received, StopCriterion::full2t(), synd);
    rec.outcome_es =
        decode_with_syndromes(code, received, criterion, synd, &rec.outcome_full);

    const DecodeOutcome& f = rec.outcome_full;
    const DecodeOutcome& s = rec.outcome_es;
    rec.agree = f.status == s.status &&
                (f.status == DecodeStatus::DecodeFailure || f.corrected == s.corrected);
    rec.malfunction = s.early_stopped && s.status != DecodeStatus::DecodeFailure &&
                      s.corrected != codeword;
    rec.detected_failure = s.early_stopped && s.status == DecodeStatus::DecodeFailure;
    rec.iterations_saved = f.iterations_used - s.iterations_used;
    rec.muls_saved = static_cast<std::int64_t>(f.mul_count) -
                     static_cast<std::int64_t>(s.mul_count);
    return rec;
}

void SimBucket::absorb(const SimBucket& other) {
    count += other.count;
    agree += other.agree;
    malfunction += other.malfunction;
    detected_failure += other.detected_failure;
    sum_iter_full += other.sum_iter_full;
    sum_iter_es += other.sum_iter_es;
    sum_muls_full += other.sum_muls_full;
    sum_muls_es += other.sum_muls_es;
}

namespace {

struct PartialSummary {
    std::map<int, SimBucket> by_weight;
    std::uint64_t max_iter_full = 0, max_iter_es = 0;
    std::uint64_t max_muls_full = 0, max_muls_es = 0;
};

void accumulate(PartialSummary& p, const TrialRecord& rec) {
    SimBucket& b = p.by_weight[rec.e];
    b.count += 1;
    b.agree += rec.agree;
    b.malfunction += rec.malfunction;
    b.detected_failure += rec.detected_failure;
    b.sum_iter_full += static_cast<std::uint64_t>(rec.outcome_full.iterations_used);
    b.sum_iter_es += static_cast<std::uint64_t>(rec.outcome_es.iterations_used);
    b.sum_muls_full += rec.outcome_full.mul_count;
    b.sum_muls_es += rec.outcome_es.mul_count;
    p.max_iter_full = std::max(p.max_iter_full,
                               static_cast<std::uint64_t>(rec.outcome_full.iterations_used));
    p.max_iter_es = std::max(p.max_iter_es,
                             static_cast<std::uint64_t>(rec.outcome_es.iterations_used));
    p.max_muls_full = std::max(p.max_muls_full, rec.outcome_full.mul_count);
    p.max_muls_es = std::max(p.max_muls_es, rec.outcome_es.mul_count);
}

} // namespace

SimSummary run_trials(const BchCode& code, const SimConfig& config) {
    config.validate();
    if (code.field().m() != config.m || code.t() != config.t)
        throw DomainError("run_trials: code does not match config");

    const int workers = std::max(1, config.workers);
    std::vector<PartialSummary> parts(static_cast<std::size_t>(workers));

    auto work = [&](int w) {
        PartialSummary& p = parts[static_cast<std::size_t>(w)];
        const std::uint64_t lo = config.trials * static_cast<std::uint64_t>(w) /
                                 static_cast<std::uint64_t>(workers);
        const std::uint64_t hi = config.trials * (static_cast<std::uint64_t>(w) + 1) /
                                 static_cast<std::uint64_t>(workers);
        for (std::uint64_t i = lo; i < hi; ++i)
            accumulate(p, run_single_trial(code, config.criterion, config.eps, config.seed, i));
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }

    SimSummary out;
    out.config = config;
    for (const auto& p : parts) { // merge in worker-index order
        for (const auto& [e, bucket] : p.by_weight) {
            out.by_weight[e].absorb(bucket);
            out.totals.absorb(bucket);
        }
        out.max_iter_full = std::max(out.max_iter_full, p.max_iter_full);
        out.max_iter_es = std::max(out.max_iter_es, p.max_iter_es);
        out.max_muls_full = std::max(out.max_muls_full, p.max_muls_full);
        out.max_muls_es = std::max(out.max_muls_es, p.max_muls_es);
    }
    return out;
}

SimSummary run_trials(const SimConfig& config) {
    config.validate();
    BchCode code(config.m, config.t);
    return run_trials(code, config);
}

double SimSummary::agreement_rate() const {
    return totals.count ? static_cast<double>(totals.agree) / static_cast<double>(totals.count)
                        : 1.0;
}
double SimSummary::mean_iter_full() const {
    return totals.count
               ? static_cast<double>(totals.sum_iter_full) / static_cast<double>(totals.count)
               : 0.0;
}
double SimSummary::mean_iter_es() const {
    return totals.count
               ? static_cast<double>(totals.sum_iter_es) / static_cast<double>(totals.count)
               : 0.0;
}
double SimSummary::mean_muls_full() const {
    return totals.count
               ? static_cast<double>(totals.sum_muls_full) / static_cast<double>(totals.count)
               : 0.0;
}
double SimSummary::mean_muls_es() const {
    return totals.count
               ? static_cast<double>(totals.sum_muls_es) / static_cast<double>(totals.count)
               : 0.0;
}

namespace {

bool next_combination(std::vector<int>& idx, int n) {
    const int w = static_cast<int>(idx.size());
    int i = w - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - w + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < w; ++j)
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    return true;
}

} // namespace

OracleReport exhaustive_oracle(int m, int t, const StopCriterion& criterion, int max_weight) {
    if (m < 2 || (1 << m) - 1 > 31)
        throw InstanceTooLarge("exhaustive_oracle: requires n = 2^m - 1 <= 31");
    BchCode code(m, t);
    const int n = code.n();
    if (max_weight < 0 || max_weight > n)
        throw DomainError("exhaustive_oracle: max_weight outside [0, n]");

    OracleReport report;
    report.m = m;
    report.t = t;
    report.criterion = criterion;
    report.max_weight = max_weight;

    const BitVec zero_word(static_cast<std::size_t>(n), 0);
    for (int w = 0; w <= max_weight; ++w) {
        OracleWeightStats& stats = report.by_weight[w];
        std::vector<int> idx(static_cast<std::size_t>(w));
        for (int i = 0; i < w; ++i) idx[static_cast<std::size_t>(i)] = i;
        bool more = true;
        while (more) {
            BitVec received = zero_word;
            for (int p : idx) received[static_cast<std::size_t>(p)] = 1;

            const SyndromeSet synd = compute_syndromes(code, received);
            const DecodeOutcome full =
                decode_with_syndromes(code, received, StopCriterion::full2t(), synd);
            const DecodeOutcome es = decode_with_syndromes(code, received, criterion, synd);

            stats.patterns += 1;
            const bool full_exact = full.status != DecodeStatus::DecodeFailure &&
                                    full.corrected == zero_word;
            if (full_exact)
                stats.full_corrected += 1;
            else if (full.status == DecodeStatus::DecodeFailure)
                stats.full_detected_failures += 1;
            else
                stats.full_miscorrections += 1;
            if (w <= t && !full_exact) report.full_failures_within_t += 1;

            const bool agree =
                full.status == es.status &&
                (full.status == DecodeStatus::DecodeFailure || full.corrected == es.corrected);
            if (!agree) {
                stats.disagreements += 1;
                OracleDisagreement d;
                d.positions = idx;
                d.weight = w;
                d.full_status = full.status;
                d.es_status = es.status;
                d.es_stop_iteration = es.stop_iteration;
                d.es_discrepancies = es.discrepancies;
                report.disagreements.push_back(std::move(d));
            }
            if (es.early_stopped && es.status != DecodeStatus::DecodeFailure &&
                es.corrected != zero_word)
                stats.es_malfunctions += 1;
            if (es.early_stopped && es.status == DecodeStatus::DecodeFailure)
                stats.es_detected_failures += 1;

            more = w > 0 && next_combination(idx, n);
        }
    }
    return report;
}

} // namespace esbch
