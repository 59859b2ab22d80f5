#include "esbch/bm_decoder.hpp"

#include <algorithm>

namespace esbch {

SyndromeSet compute_syndromes(const BchCode& code, const BitVec& received) {
    if (static_cast<int>(received.size()) != code.n())
        throw LengthMismatch("compute_syndromes: received length must equal n");
    const GaloisField& gf = code.field();
    const auto& exp = gf.exp_table();

    SyndromeSet out;
    const int count = 2 * code.t();
    out.s.assign(static_cast<std::size_t>(count), 0);
    const std::uint8_t* bits = received.data();
    const std::uint16_t* expt = exp.data();

    // Horner's rule per syndrome; blocks of 8 accumulators run independent
    // table-lookup chains so one chain's load latency hides the others'.
    constexpr int kBlock = 8;
    for (int i0 = 0; i0 < count; i0 += kBlock) {
        const int width = std::min(kBlock, count - i0);
        GfElement acc[kBlock] = {};
        std::uint32_t jpow[kBlock] = {};
        for (int b = 0; b < width; ++b) jpow[b] = static_cast<std::uint32_t>(i0 + b + 1);
        for (std::size_t p = received.size(); p-- > 0;) {
            const std::uint8_t bit = bits[p];
            for (int b = 0; b < width; ++b) {
                GfElement a = acc[b];
                if (a) a = expt[gf.log(a) + jpow[b]]; // doubled table, j < order
                acc[b] = a ^ bit;                     // bits hold 0/1
            }
        }
        for (int b = 0; b < width; ++b) out.s[static_cast<std::size_t>(i0 + b)] = acc[b];
    }
    return out;
}

StopCriterion StopCriterion::es3(int kappa) {
    if (kappa < 1) throw DomainError("StopCriterion::es3: kappa must be >= 1");
    return {Kind::ES3, kappa};
}

std::string StopCriterion::name() const {
    switch (kind) {
    case Kind::Full2T: return "full";
    case Kind::ES1: return "es1";
    case Kind::ES2: return "es2";
    case Kind::ES3: return "es3(kappa=" + std::to_string(kappa) + ")";
    }
    return "?";
}

BmState bm_init(const BchCode& code) {
    BmState st;
    st.field = &code.field();
    st.sigma.assign(1, 1);
    st.aux.assign(1, 1);
    st.d_history.reserve(static_cast<std::size_t>(2 * code.t()));
    return st;
}

void bm_iterate(BmState& state, const SyndromeSet& syndromes) {
    const GaloisField& gf = *state.field;
    const std::size_t u = static_cast<std::size_t>(state.j); // 0-based syndrome index

    GfElement d = syndromes.s[u];
    for (int i = 1; i <= state.l; ++i) {
        const GfElement c = i < static_cast<int>(state.sigma.size())
                                ? state.sigma[static_cast<std::size_t>(i)]
                                : GfElement{0};
        if (c) {
            d ^= gf.mul(c, syndromes.s[u - static_cast<std::size_t>(i)]);
            ++state.mul_count;
        }
    }
    state.d_history.push_back(d);

    if (d == 0) {
        ++state.shift;
    } else {
        const GfElement coef = gf.mul(d, gf.inv(state.last_nonzero_d));
        ++state.mul_count;
        std::vector<GfElement> correction(state.aux.size() + static_cast<std::size_t>(state.shift), 0);
        for (std::size_t i = 0; i < state.aux.size(); ++i) {
            if (state.aux[i]) {
                correction[i + static_cast<std::size_t>(state.shift)] = gf.mul(coef, state.aux[i]);
                ++state.mul_count;
            }
        }
        if (2 * state.l <= static_cast<int>(u)) {
            std::vector<GfElement> prev_sigma = state.sigma;
            if (state.sigma.size() < correction.size()) state.sigma.resize(correction.size(), 0);
            for (std::size_t i = 0; i < correction.size(); ++i) state.sigma[i] ^= correction[i];
            state.l = static_cast<int>(u) + 1 - state.l;
            state.aux = std::move(prev_sigma);
            state.last_nonzero_d = d;
            state.shift = 1;
        } else {
            if (state.sigma.size() < correction.size()) state.sigma.resize(correction.size(), 0);
            for (std::size_t i = 0; i < correction.size(); ++i) state.sigma[i] ^= correction[i];
            ++state.shift;
        }
    }
    ++state.j;
}

namespace {

bool trailing_zeros(const BmState& state, int count) {
    if (static_cast<int>(state.d_history.size()) < count) return false;
    for (int i = 0; i < count; ++i)
        if (state.d_history[state.d_history.size() - 1 - static_cast<std::size_t>(i)] != 0)
            return false;
    return true;
}

} // namespace

bool check_stop(const StopCriterion& criterion, const BmState& state, int t) {
    switch (criterion.kind) {
    case StopCriterion::Kind::Full2T:
        return state.j == 2 * t;
    case StopCriterion::Kind::ES1:
        // Case A in integer-exact form 2j = 2t + delta_max, delta_max = l_u.
        return state.j >= 4 && 2 * state.j == 2 * t + state.l && trailing_zeros(state, 4);
    case StopCriterion::Kind::ES2:
        return state.j >= 6 && 2 * state.j == 2 * t + state.l && trailing_zeros(state, 6);
    case StopCriterion::Kind::ES3:
        return state.j >= criterion.kappa && trailing_zeros(state, criterion.kappa);
    }
    return false;
}

std::vector<int> chien_search(const BchCode& code, const std::vector<GfElement>& sigma) {
    const GaloisField& gf = code.field();
    const auto& exp = gf.exp_table();
    const std::uint32_t order = gf.order();

    int deg = -1;
    for (std::size_t i = sigma.size(); i-- > 0;)
        if (sigma[i]) {
            deg = static_cast<int>(i);
            break;
        }

    std::vector<int> roots;
    if (deg <= 0) return roots;

    // Log-domain registers for the nonzero coefficients: entry q carries
    // log(sigma_i * alpha^(-i*p)); stepping p adds order - i.
    struct Reg {
        std::uint32_t lg;
        std::uint32_t step;
    };
    std::vector<Reg> regs;
    regs.reserve(static_cast<std::size_t>(deg));
    for (int i = 1; i <= deg; ++i)
        if (sigma[static_cast<std::size_t>(i)])
            regs.push_back({gf.log(sigma[static_cast<std::size_t>(i)]),
                            order - static_cast<std::uint32_t>(i) % order});
    const GfElement base = sigma[0];

    for (int p = 0; p < code.n(); ++p) {
        GfElement sum = base;
        for (const Reg& r : regs) sum ^= exp[r.lg];
        if (sum == 0) {
            roots.push_back(p);
            if (static_cast<int>(roots.size()) == deg) break;
        }
        for (Reg& r : regs) {
            r.lg += r.step;
            if (r.lg >= order) r.lg -= order;
        }
    }
    return roots;
}

const char* to_string(DecodeStatus s) {
    switch (s) {
    case DecodeStatus::NoErrors: return "no_errors";
    case DecodeStatus::Corrected: return "corrected";
    case DecodeStatus::DecodeFailure: return "decode_failure";
    }
    return "?";
}

DecodeOutcome decode_with_syndromes(const BchCode& code, const BitVec& received,
                                    const StopCriterion& criterion,
                                    const SyndromeSet& syndromes,
                                    const DecodeOutcome* sibling) {
    if (static_cast<int>(received.size()) != code.n())
        throw LengthMismatch("decode: received length must equal n");
    const int t = code.t();

    DecodeOutcome out;
    if (syndromes.all_zero()) {
        out.status = DecodeStatus::NoErrors;
        out.corrected = received;
        out.locator.assign(1, 1);
        return out;
    }

    BmState st = bm_init(code);
    bool fired = false;
    while (st.j < 2 * t) {
        bm_iterate(st, syndromes);
        if (check_stop(criterion, st, t)) {
            fired = true;
            break;
        }
    }

    out.iterations_used = st.j;
    out.stop_iteration = st.j;
    out.early_stopped = fired && st.j < 2 * t;
    out.mul_count = st.mul_count;
    out.discrepancies = st.d_history;
    out.locator.assign(st.sigma.begin(),
                       st.sigma.begin() + st.sigma_degree() + 1);

    if (sibling && sibling->locator == out.locator && sibling->iterations_used > 0) {
        out.status = sibling->status;
        out.corrected = sibling->corrected;
        out.error_locations = sibling->error_locations;
        out.v_hat = sibling->v_hat;
        return out;
    }

    const int deg = st.sigma_degree();
    if (deg == 0) {
        // Early stop before any nonzero discrepancy: the decoder believes the
        // word is already clean.
        out.status = DecodeStatus::Corrected;
        out.corrected = received;
        return out;
    }

    std::vector<int> roots = chien_search(code, st.sigma);
    out.v_hat = static_cast<int>(roots.size());
    if (deg > t || static_cast<int>(roots.size()) != deg) {
        out.status = DecodeStatus::DecodeFailure;
        out.error_locations = std::move(roots);
        return out;
    }

    out.status = DecodeStatus::Corrected;
    out.corrected = received;
    for (int p : roots) out.corrected[static_cast<std::size_t>(p)] ^= 1;
    std::sort(roots.begin(), roots.end());
    out.error_locations = std::move(roots);
    return out;
}

DecodeOutcome decode(const BchCode& code, const BitVec& received,
                     const StopCriterion& criterion) {
    return decode_with_syndromes(code, received, criterion,
                                 compute_syndromes(code, received));
}

} // namespace esbch
