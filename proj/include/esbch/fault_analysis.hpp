#ifndef ESBCH_FAULT_ANALYSIS_HPP
#define ESBCH_FAULT_ANALYSIS_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "esbch/errors.hpp"

namespace esbch {

/// Probability carried as log2; values like 1e-119 are far below what a
/// linear double can distinguish from zero, so all arithmetic stays in the
/// log domain. Negative infinity is the exact-zero representation.
class Log2Prob {
public:
    Log2Prob() : v_(-std::numeric_limits<double>::infinity()) {}

    static Log2Prob zero() { return Log2Prob(); }
    static Log2Prob from_log2(double log2_value) { return Log2Prob(log2_value); }
    static Log2Prob from_linear(double p);

    bool is_zero() const { return v_ == -std::numeric_limits<double>::infinity(); }
    double log2_value() const { return v_; }
    double log10_value() const;
    /// Linear value; underflows to 0.0 below ~1e-308. Display use only.
    double linear() const;
    /// Scientific-notation decimal string rendered from the log2 value,
    /// e.g. "6.494e-119". Exact zero renders as "0".
    std::string to_scientific() const;

private:
    explicit Log2Prob(double v) : v_(v) {}
    double v_;
};

/// -p log2 p - (1-p) log2(1-p) with H(0) = H(1) = 0.
double binary_entropy(double p);

/// Binary Kullback-Leibler divergence in bits:
/// lambda log2(lambda/eps) + (1-lambda) log2((1-lambda)/(1-eps)).
double relative_entropy(double lambda, double eps);

/// log2 of C(n, k).
double log2_binomial(std::int64_t n, std::int64_t k);

/// log2 of sum_{h=h0}^{n} C(n,h) eps^h (1-eps)^(n-h) by log-sum-exp.
/// h0 <= 0 gives exactly 1 (log2 = 0); h0 = n+1 gives exact zero.
Log2Prob binomial_tail(int n, int h0, double eps);

struct AnalysisPoint {
    int n = 0;      // code length 2^m - 1
    int m = 0;      // GF extension degree
    int t = 0;      // correction capability
    int kappa = 1;  // consecutive-zero threshold
    double eps = 0; // BSC crossover probability

    static AnalysisPoint for_code(int m, int t, int kappa, double eps);
    void validate() const;
};

/// Undetected-error estimate:
/// 2^(-mt) sum_{s=0}^{t} C(n,s) * sum_{h=t+1}^{n} C(n,h) eps^h (1-eps)^(n-h).
Log2Prob p_ud(const AnalysisPoint& point);

/// Tail conditioned on minimum distance d':
/// sum_{h=ceil((d'+1)/2)}^{n} C(n,h) eps^h (1-eps)^(n-h).
Log2Prob p_cond(int n, int d_prime, double eps);

/// Malfunction estimate in binomial form:
/// 2^(-mt) [ sum_s C(n,s) tail(ceil((s+kappa+1)/2)) - sum_s C(n,s) tail(t+1) ].
/// Differences below the rounding bound clamp to exact zero; significantly
/// negative differences throw NegativeProbability.
Log2Prob p_mf_binomial(const AnalysisPoint& point);

/// Malfunction estimate in exponent form:
/// 2^(-mt) sum_s C(n,s) [2^(-nE(l1,eps)) - 2^(-nE(l2,eps))] with
/// l1 = (s+kappa+1)/(2n), l2 = (t+1)/n and E the binary relative entropy.
/// Throws BoundInvalid when eps >= l2 or when the signed sum turns
/// significantly negative.
Log2Prob p_mf_exponent(const AnalysisPoint& point);

struct ComplexityBounds {
    std::int64_t c_esbm = 0;
    std::int64_t c_hv = 0;
    std::int64_t c_bm = 0;
    std::int64_t c_es3 = 0;
};

/// Upper bounds on finite-field multiplications for e channel errors:
/// c_esbm = te+e^2-1, c_hv = 2te+(e^2-e)/2, c_bm = 2et-1,
/// c_es3 = 2e(e+kappa)-1, each clamped at 0.
ComplexityBounds complexity_bounds(std::int64_t t, std::int64_t e, std::int64_t kappa);

/// 1 - c_es3 / c_esbm.
double reduction_ratio(std::int64_t t, std::int64_t e, std::int64_t kappa);

/// Logarithmic grid of `points` values over [from, to].
std::vector<double> log_space(double from, double to, int points);

/// 200 logarithmic points over [1e-4, 1e-1].
std::vector<double> default_eps_grid();

} // namespace esbch

#endif
