#include "esbch/fault_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace esbch {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kLog2E = 1.4426950408889634074; // 1/ln 2
// log-domain differences closer than this are rounding noise, not sign.
constexpr double kClampLog2 = 1e-9;

double log2_sum(double a, double b) { // log2(2^a + 2^b)
    if (a == kNegInf) return b;
    if (b == kNegInf) return a;
    const double hi = std::max(a, b), lo = std::min(a, b);
    return hi + std::log1p(std::exp2(lo - hi)) * kLog2E;
}

double log2_diff(double a, double b) { // log2(2^a - 2^b), a >= b
    if (b == kNegInf) return a;
    if (a == b) return kNegInf;
    return a + std::log2(-std::expm1((b - a) / kLog2E));
}

// Cached log2 factorials for one n; keeps tail sums O(1) per term.
class Log2Factorials {
public:
    explicit Log2Factorials(int n) : lf_(static_cast<std::size_t>(n) + 1) {
        for (int i = 0; i <= n; ++i) lf_[static_cast<std::size_t>(i)] = std::lgamma(i + 1.0) * kLog2E;
    }
    double choose(int n, int k) const {
        return lf_[static_cast<std::size_t>(n)] - lf_[static_cast<std::size_t>(k)] -
               lf_[static_cast<std::size_t>(n - k)];
    }

private:
    std::vector<double> lf_;
};

// log2 of sum_{h=h0}^{n} C(n,h) eps^h (1-eps)^(n-h); binomial terms are
// unimodal in h, so the scan stops once past the mode and far below the peak.
double log2_tail(const Log2Factorials& lf, int n, int h0, double eps) {
    if (h0 > n) return kNegInf;
    if (h0 <= 0) return 0.0;
    const double le = std::log2(eps);
    const double l1e = std::log2(1.0 - eps);
    double sum = kNegInf;
    double peak = kNegInf;
    for (int h = h0; h <= n; ++h) {
        const double term = lf.choose(n, h) + h * le + (n - h) * l1e;
        sum = log2_sum(sum, term);
        if (term > peak)
            peak = term;
        else if (term < peak - 220.0)
            break;
    }
    return sum;
}

void check_eps_open_unit(double eps) {
    if (!(eps > 0.0 && eps < 1.0)) throw DomainError("eps must lie in (0, 1)");
}

} // namespace

Log2Prob Log2Prob::from_linear(double p) {
    if (p < 0.0 || p > 1.0) throw DomainError("Log2Prob: linear value outside [0, 1]");
    if (p == 0.0) return zero();
    return from_log2(std::log2(p));
}

double Log2Prob::log10_value() const { return v_ * 0.30102999566398119521; }

double Log2Prob::linear() const { return is_zero() ? 0.0 : std::exp2(v_); }

std::string Log2Prob::to_scientific() const {
    if (is_zero()) return "0";
    const double l10 = log10_value();
    double ex = std::floor(l10);
    double mant = std::pow(10.0, l10 - ex);
    if (mant >= 9.999995) { // rounding pushed the mantissa to 10
        mant /= 10.0;
        ex += 1.0;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6ge%+03d", mant, static_cast<int>(ex));
    return buf;
}

double binary_entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("binary_entropy: p outside [0, 1]");
    if (p == 0.0 || p == 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double relative_entropy(double lambda, double eps) {
    if (!(lambda >= 0.0 && lambda <= 1.0))
        throw DomainError("relative_entropy: lambda outside [0, 1]");
    check_eps_open_unit(eps);
    double out = 0.0;
    if (lambda > 0.0) out += lambda * std::log2(lambda / eps);
    if (lambda < 1.0) out += (1.0 - lambda) * std::log2((1.0 - lambda) / (1.0 - eps));
    return out;
}

double log2_binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) throw DomainError("log2_binomial: need 0 <= k <= n");
    return (std::lgamma(static_cast<double>(n) + 1.0) -
            std::lgamma(static_cast<double>(k) + 1.0) -
            std::lgamma(static_cast<double>(n - k) + 1.0)) *
           kLog2E;
}

Log2Prob binomial_tail(int n, int h0, double eps) {
    if (n < 0 || h0 < 0 || h0 > n + 1) throw DomainError("binomial_tail: need 0 <= h0 <= n+1");
    check_eps_open_unit(eps);
    if (h0 == 0) return Log2Prob::from_log2(0.0);
    if (h0 == n + 1) return Log2Prob::zero();
    Log2Factorials lf(n);
    return Log2Prob::from_log2(log2_tail(lf, n, h0, eps));
}

AnalysisPoint AnalysisPoint::for_code(int m, int t, int kappa, double eps) {
    AnalysisPoint p;
    p.m = m;
    p.n = (1 << m) - 1;
    p.t = t;
    p.kappa = kappa;
    p.eps = eps;
    p.validate();
    return p;
}

void AnalysisPoint::validate() const {
    if (m < 2 || m > 30 || n != (1 << m) - 1)
        throw DomainError("AnalysisPoint: n must equal 2^m - 1");
    if (t < 1) throw DomainError("AnalysisPoint: t must be >= 1");
    if (kappa < 1) throw DomainError("AnalysisPoint: kappa must be >= 1");
    if (!(eps > 0.0 && eps < 0.5)) throw DomainError("AnalysisPoint: eps must lie in (0, 0.5)");
}

Log2Prob p_ud(const AnalysisPoint& point) {
    const int n = point.n, t = point.t;
    check_eps_open_unit(point.eps);
    if (t < 0 || t > n) throw DomainError("p_ud: t outside [0, n]");
    Log2Factorials lf(n);
    const double tail = log2_tail(lf, n, t + 1, point.eps);
    double spheres = kNegInf;
    for (int s = 0; s <= t; ++s) spheres = log2_sum(spheres, lf.choose(n, s));
    const double total = -static_cast<double>(point.m) * t + spheres + tail;
    return tail == kNegInf ? Log2Prob::zero() : Log2Prob::from_log2(total);
}

Log2Prob p_cond(int n, int d_prime, double eps) {
    if (d_prime < 1) throw DomainError("p_cond: d' must be >= 1");
    const int h0 = (d_prime + 2) / 2; // ceil((d'+1)/2)
    return binomial_tail(n, std::min(h0, n + 1), eps);
}

Log2Prob p_mf_binomial(const AnalysisPoint& point) {
    point.validate();
    const int n = point.n, t = point.t, kappa = point.kappa;
    Log2Factorials lf(n);
    const double le = std::log2(point.eps);
    const double l1e = std::log2(1.0 - point.eps);

    // The early-stop sum starts its inner tail at h1 = ceil((s+kappa+1)/2)
    // instead of t+1, so the subtraction telescopes per s to a finite strip
    // of binomial terms: sum_{h=h1}^{t} when h1 <= t, minus the strip
    // sum_{h=t+1}^{h1-1} when h1 > t+1. Summing strips directly avoids the
    // cancellation of two nearly equal full tails.
    auto strip = [&](int lo, int hi) { // log2 sum of pmf terms, inclusive
        double sum = kNegInf;
        for (int h = lo; h <= hi; ++h)
            sum = log2_sum(sum, lf.choose(n, h) + h * le + (n - h) * l1e);
        return sum;
    };

    double pos = kNegInf, neg = kNegInf;
    for (int s = 0; s <= t; ++s) {
        const int h1 = (s + kappa + 2) / 2; // ceil((s+kappa+1)/2)
        const double w = lf.choose(n, s);
        if (h1 <= t)
            pos = log2_sum(pos, w + strip(h1, t));
        else if (h1 > t + 1)
            neg = log2_sum(neg, w + strip(t + 1, std::min(h1 - 1, n)));
    }

    const double pref = -static_cast<double>(point.m) * t;
    if (pos == kNegInf && neg == kNegInf) return Log2Prob::zero();
    if (pos >= neg) {
        const double diff = log2_diff(pos, neg);
        return diff == kNegInf ? Log2Prob::zero() : Log2Prob::from_log2(pref + diff);
    }
    if (neg - pos <= kClampLog2) return Log2Prob::zero();
    throw NegativeProbability(
        "p_mf_binomial: estimate is negative in this eps/kappa regime "
        "(early-stop tail sum fell below the t+1 baseline)");
}

Log2Prob p_mf_exponent(const AnalysisPoint& point) {
    point.validate();
    const int n = point.n, t = point.t, kappa = point.kappa;
    const double nd = static_cast<double>(n);
    const double lam2 = (t + 1) / nd;
    if (point.eps >= lam2)
        throw BoundInvalid("p_mf_exponent: eps >= (t+1)/n, tail exponent bound invalid");

    Log2Factorials lf(n);
    const double e2 = -nd * relative_entropy(lam2, point.eps);
    double pos = kNegInf, neg = kNegInf;
    for (int s = 0; s <= t; ++s) {
        const double lam1 = (s + kappa + 1) / (2.0 * nd);
        const double e1 = -nd * relative_entropy(lam1, point.eps);
        const double w = lf.choose(n, s);
        if (e1 > e2)
            pos = log2_sum(pos, w + log2_diff(e1, e2));
        else if (e1 < e2)
            neg = log2_sum(neg, w + log2_diff(e2, e1));
    }

    const double pref = -static_cast<double>(point.m) * t;
    if (pos == kNegInf && neg == kNegInf) return Log2Prob::zero();
    if (pos >= neg) {
        const double diff = log2_diff(pos, neg);
        return diff == kNegInf ? Log2Prob::zero() : Log2Prob::from_log2(pref + diff);
    }
    if (neg - pos <= kClampLog2) return Log2Prob::zero();
    throw BoundInvalid(
        "p_mf_exponent: signed exponent sum is negative in this eps/kappa regime");
}

ComplexityBounds complexity_bounds(std::int64_t t, std::int64_t e, std::int64_t kappa) {
    if (t < 1 || e < 0 || kappa < 1)
        throw DomainError("complexity_bounds: need t >= 1, e >= 0, kappa >= 1");
    const auto clamp0 = [](std::int64_t v) { return v < 0 ? std::int64_t{0} : v; };
    ComplexityBounds out;
    out.c_esbm = clamp0(t * e + e * e - 1);
    out.c_hv = clamp0(2 * t * e + (e * e - e) / 2);
    out.c_bm = clamp0(2 * e * t - 1);
    out.c_es3 = clamp0(2 * e * (e + kappa) - 1);
    return out;
}

double reduction_ratio(std::int64_t t, std::int64_t e, std::int64_t kappa) {
    const ComplexityBounds b = complexity_bounds(t, e, kappa);
    if (b.c_esbm == 0) throw DivisionByZero("reduction_ratio: c_esbm is zero");
    return 1.0 - static_cast<double>(b.c_es3) / static_cast<double>(b.c_esbm);
}

std::vector<double> log_space(double from, double to, int points) {
    if (!(from > 0.0) || !(to > 0.0) || points < 1)
        throw DomainError("log_space: endpoints must be positive, points >= 1");
    std::vector<double> out(static_cast<std::size_t>(points));
    if (points == 1) {
        out[0] = from;
        return out;
    }
    const double lf = std::log10(from), lt = std::log10(to);
    for (int i = 0; i < points; ++i)
        out[static_cast<std::size_t>(i)] = std::pow(10.0, lf + (lt - lf) * i / (points - 1));
    return out;
}

std::vector<double> default_eps_grid() { return log_space(1e-4, 1e-1, 200); }

} // namespace esbch
