#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "symchar/errors.hpp"
#include "symchar/partition.hpp"

namespace symchar {

/// Saddle parameter q = exp(-pi / sqrt(6N)), the radius that (nearly)
/// minimizes F(r) r^{-N} in the Cauchy-integral bound for p(N).
inline double saddle_q(double n) {
    if (n < 1) throw std::invalid_argument("saddle_q: N must be >= 1");
    return std::exp(-M_PI / std::sqrt(6.0 * n));
}

/// log(1/q) = pi / sqrt(6N); handy where q is so close to 1 that forming it
/// explicitly loses precision.
inline double saddle_log_inv_q(double n) {
    if (n < 1) throw std::invalid_argument("saddle_log_inv_q: N must be >= 1");
    return M_PI / std::sqrt(6.0 * n);
}

/// sigma(m) = sum of divisors of m.
inline std::int64_t sigma_divisor_sum(std::int64_t m) {
    if (m < 1) throw std::invalid_argument("sigma_divisor_sum: m must be >= 1");
    std::int64_t s = 0;
    for (std::int64_t d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            s += d;
            if (d != m / d) s += m / d;
        }
    }
    return s;
}

/// sigma(1..M) by a divisor sieve.
inline std::vector<std::int64_t> sigma_table(int M) {
    std::vector<std::int64_t> s(static_cast<std::size_t>(M) + 1, 0);
    for (int d = 1; d <= M; ++d)
        for (int m = d; m <= M; m += d) s[static_cast<std::size_t>(m)] += d;
    return s;
}

namespace detail {

inline constexpr double kSeriesRelCutoff = 1e-15;
inline constexpr std::int64_t kSeriesTermCap = 10'000'000;

/// sum_m weight(m) * e^{-m*rate} truncated when a term drops below 1e-15 of
/// the running sum; weight is sigma(m)/m or sigma(m). Sieve-backed.
template <typename W>
double sigma_weighted_exp_sum(double rate, W&& weight) {
    // terms die like e^{-m*rate}; 45/rate comfortably clears the cutoff
    std::int64_t m_max = static_cast<std::int64_t>(45.0 / rate) + 64;
    if (m_max > kSeriesTermCap) throw guard_error("sigma series: term cap exceeded");
    std::vector<std::int64_t> sig = sigma_table(static_cast<int>(m_max));
    double total = 0.0;
    for (std::int64_t m = 1; m <= m_max; ++m) {
        double term = weight(m, sig[static_cast<std::size_t>(m)]) * std::exp(-static_cast<double>(m) * rate);
        total += term;
        if (m > 16 && term < kSeriesRelCutoff * total) break;
    }
    return total;
}

}  // namespace detail

/// sum_n sigma(n)/n * e^{-n/x}, the left side of the x-parametrized
/// log-F expansion pi^2 x / 6 - log(2 pi x)/2 + O(1/x).
inline double sigma_exp_series(double x) {
    if (x <= 0) throw std::invalid_argument("sigma_exp_series: x must be > 0");
    return detail::sigma_weighted_exp_sum(1.0 / x, [](std::int64_t m, std::int64_t s) {
        return static_cast<double>(s) / static_cast<double>(m);
    });
}

/// sum_m sigma(m) q^m at the saddle point; equals N up to ~sqrt(6N)/(2 pi).
inline double saddle_weighted_sum(double n) {
    double rate = saddle_log_inv_q(n);
    return detail::sigma_weighted_exp_sum(rate, [](std::int64_t, std::int64_t s) {
        return static_cast<double>(s);
    });
}

struct LogFValue {
    double series = 0.0;  // sum sigma(m)/m q^m
    double closed = 0.0;  // pi sqrt(N)/sqrt(6) - log(2 sqrt(6N))/2
};

/// log F(q) both ways: the sigma series and the closed asymptotic form. The
/// two differ by O(N^{-1/2}).
inline LogFValue logF_at_q(double n) {
    if (n < 10) throw std::invalid_argument("logF_at_q: N must be >= 10");
    LogFValue v;
    double rate = saddle_log_inv_q(n);
    v.series = detail::sigma_weighted_exp_sum(rate, [](std::int64_t m, std::int64_t s) {
        return static_cast<double>(s) / static_cast<double>(m);
    });
    v.closed = M_PI * std::sqrt(n) / std::sqrt(6.0) - 0.5 * std::log(2.0 * std::sqrt(6.0 * n));
    return v;
}

struct HrEstimates {
    double saddle_form = 0.0;   // F(q) q^{-N} / (2 * 6^{1/4} N^{3/4})
    double classic_form = 0.0;  // exp(2 pi sqrt(N/6)) / (4 N sqrt(3))
};

/// Both Hardy-Ramanujan forms for p(N). Finite in double precision up to
/// N around 1.2e5.
inline HrEstimates hr_estimates(double n) {
    if (n < 10) throw std::invalid_argument("hr_estimates: N must be >= 10");
    HrEstimates e;
    double logF = logF_at_q(n).series;
    double log_qinvN = n * saddle_log_inv_q(n);  // N log(1/q) = pi sqrt(N)/sqrt(6)
    e.saddle_form = std::exp(logF + log_qinvN) / (2.0 * std::pow(6.0, 0.25) * std::pow(n, 0.75));
    e.classic_form = std::exp(2.0 * M_PI * std::sqrt(n / 6.0)) / (4.0 * n * std::sqrt(3.0));
    return e;
}

struct Thresholds {
    double t0 = 0.0;
    double t1 = 0.0;
    double t2 = 0.0;
    double t1_clamped = 2.0;
    double t2_clamped = 2.0;
};

inline constexpr double kThresholdClampFloor = 2.0;

/// The three part-size thresholds
///   T0 = (sqrt(6N)/pi) (log N)^{-4},
///   T1 = (sqrt(6N)/pi) (log sqrt(N) - 20),
///   T2 = (sqrt(6N)/pi) (log sqrt(N) + log log N - log log log N - 20).
/// Raw values go negative for every desk-scale N (T1 > 0 needs N > e^40);
/// clamped-at-2 variants keep the five-way pair classification total.
inline Thresholds thresholds(double n) {
    if (n < 16) throw std::invalid_argument("thresholds: N must be >= 16 for iterated logs");
    Thresholds t;
    double scale = std::sqrt(6.0 * n) / M_PI;
    double logn = std::log(n);
    t.t0 = scale / std::pow(logn, 4);
    t.t1 = scale * (std::log(std::sqrt(n)) - 20.0);
    t.t2 = scale * (std::log(std::sqrt(n)) + std::log(logn) - std::log(std::log(logn)) - 20.0);
    t.t1_clamped = std::max(kThresholdClampFloor, t.t1);
    t.t2_clamped = std::max(kThresholdClampFloor, t.t2);
    return t;
}

/// Leading-order proportion of type I/II/III zeros: 2 / log N.
inline double leading_proportion(double n) {
    if (n < 3) throw std::invalid_argument("leading_proportion: N must be >= 3");
    return 2.0 / std::log(n);
}

namespace detail {

/// Adaptive Simpson on [a, b]; standard halving with error estimate /15.
inline double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double b,
                                   double fa, double fm, double fb, double whole, double tol,
                                   int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol, int depth = 48) {
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, depth);
}

}  // namespace detail

/// The refined type-I predictor
///   int_0^1 exp(-y (1 + log(sqrt(6N)/(pi y)))) dy,
/// with the integrand extended by 1 at y = 0 (y log y -> 0). Absolute
/// quadrature error <= 1e-10.
inline double refined_integral(double n) {
    if (n < 3) throw std::invalid_argument("refined_integral: N must be >= 3");
    double c = std::sqrt(6.0 * n) / M_PI;
    auto f = [c](double y) {
        if (y <= 0.0) return 1.0;
        return std::exp(-y * (1.0 + std::log(c / y)));
    };
    return detail::adaptive_simpson(f, 0.0, 1.0, 1e-12);
}

/// Prop-2 style approximation c_t(N) ~ p(N) exp(-t q^t). Valid comparison
/// target only in the t >= T1 regime; returned for any input.
inline double core_count_approx(int n, int t) {
    if (n < 10 || t < 1) throw std::invalid_argument("core_count_approx: need N >= 10, t >= 1");
    double q = saddle_q(n);
    return mpz_get_d(partition_count(n).get_mpz_t()) * std::exp(-t * std::pow(q, t));
}

/// Prop-3 approximation: #{mu |- N with a part t} = p(N - t) ~ q^t p(N).
inline double part_count_approx(int n, int t) {
    if (n < 10 || t < 1) throw std::invalid_argument("part_count_approx: need N >= 10, t >= 1");
    double q = saddle_q(n);
    return std::pow(q, t) * mpz_get_d(partition_count(n).get_mpz_t());
}

struct CondVValue {
    double value = 0.0;
    bool clamped = false;  // true when T2 <= 0 forced the clamp floor
};

/// Closed form of the condition-(v) pair count per p(N)^2:
///   (1 - exp(-T2 q^{T2})) / (T2 log(1/q)),
/// the exact value of int_0^infty q^{T2+y} exp(-T2 q^{T2+y}) dy.
inline CondVValue condition_v_closedform(double n) {
    Thresholds th = thresholds(n);
    CondVValue out;
    double t2 = th.t2;
    if (t2 <= 0) {
        t2 = kThresholdClampFloor;
        out.clamped = true;
    }
    double L = saddle_log_inv_q(n);
    double a = t2 * std::exp(-t2 * L);  // T2 q^{T2}
    out.value = -std::expm1(-a) / (t2 * L);
    return out;
}

/// The same quantity by numerical quadrature, as an independent check.
/// Substituting s = y log(1/q) turns the integral into
///   (1/(T2 L)) int_0^inf a e^{-s} exp(-a e^{-s}) ds,  a = T2 q^{T2},
/// whose integrand is O(1) on an O(log a) window, so an absolute Simpson
/// tolerance translates directly into the final error.
inline double condition_v_quadrature(double n) {
    Thresholds th = thresholds(n);
    double t2 = th.t2 > 0 ? th.t2 : kThresholdClampFloor;
    double L = saddle_log_inv_q(n);
    double a = t2 * std::exp(-t2 * L);  // T2 q^{T2}
    auto g = [a](double s) {
        double ae = a * std::exp(-s);
        return ae * std::exp(-ae);
    };
    double upper = std::max(50.0, std::log(std::max(a, 1.0)) + 60.0);
    double mass = detail::adaptive_simpson(g, 0.0, upper, 1e-13);
    return mass / (t2 * L);
}

/// Everything the `predict` command reports for one N.
struct AsymptoticReport {
    int n = 0;
    double q = 0.0;
    double logF_series = 0.0;
    double logF_closed = 0.0;
    double hr_saddle = 0.0;
    double hr_classic = 0.0;
    BigInt p_exact;
    Thresholds thresholds;
    double leading = 0.0;
    double refined = 0.0;
};

inline constexpr int kPredictGuard = 100'000;

inline AsymptoticReport asymptotic_report(int n) {
    if (n < 16) throw guard_error("predict: N must be >= 16");
    if (n > kPredictGuard)
        throw guard_error("predict: N exceeds guard " + std::to_string(kPredictGuard));
    AsymptoticReport r;
    r.n = n;
    r.q = saddle_q(n);
    LogFValue lf = logF_at_q(n);
    r.logF_series = lf.series;
    r.logF_closed = lf.closed;
    HrEstimates hr = hr_estimates(n);
    r.hr_saddle = hr.saddle_form;
    r.hr_classic = hr.classic_form;
    r.p_exact = partition_count(n);
    r.thresholds = thresholds(n);
    r.leading = leading_proportion(n);
    r.refined = refined_integral(n);
    return r;
}

}  // namespace symchar
