#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "symchar/errors.hpp"
#include "symchar/partition.hpp"

namespace symchar {

/// Truncated power series over exact integers: coefficients 0..degree, all
/// arithmetic truncated at the degree bound. Dense storage; the products in
/// use fill in almost immediately.
class IntSeries {
public:
    explicit IntSeries(int degree) : coeffs_(static_cast<std::size_t>(degree) + 1) {
        if (degree < 0) throw std::invalid_argument("IntSeries: degree must be >= 0");
    }

    static IntSeries one(int degree) {
        IntSeries s(degree);
        s.coeffs_[0] = 1;
        return s;
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    const BigInt& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
    BigInt& operator[](int i) { return coeffs_[static_cast<std::size_t>(i)]; }

    bool operator==(const IntSeries&) const = default;

    /// In-place multiply by (1 - z^m).
    IntSeries& mul_one_minus(int m) {
        for (int i = degree(); i >= m; --i)
            coeffs_[static_cast<std::size_t>(i)] -= coeffs_[static_cast<std::size_t>(i - m)];
        return *this;
    }

    /// In-place multiply by 1/(1 - z^m) = sum_j z^{jm}.
    IntSeries& mul_inv_one_minus(int m) {
        for (int i = m; i <= degree(); ++i)
            coeffs_[static_cast<std::size_t>(i)] += coeffs_[static_cast<std::size_t>(i - m)];
        return *this;
    }

    IntSeries pow(int k) const {
        if (k < 0) throw std::invalid_argument("IntSeries::pow: exponent must be >= 0");
        IntSeries result = one(degree());
        IntSeries base = *this;
        while (k > 0) {
            if (k & 1) result = result * base;
            k >>= 1;
            if (k) base = base * base;
        }
        return result;
    }

    friend IntSeries operator*(const IntSeries& a, const IntSeries& b) {
        if (a.degree() != b.degree())
            throw guard_error("IntSeries: degree-bound mismatch in multiplication");
        int d = a.degree();
        IntSeries out(d);
        for (int i = 0; i <= d; ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; i + j <= d; ++j) {
                if (b[j] == 0) continue;
                out[i + j] += a[i] * b[j];
            }
        }
        return out;
    }

private:
    std::vector<BigInt> coeffs_;
};

/// The expansion of 1/(1 - z^n) up to the degree bound.
inline IntSeries inv_one_minus(int n, int degree) {
    if (n < 1) throw std::invalid_argument("inv_one_minus: n must be >= 1");
    IntSeries s(degree);
    for (int i = 0; i <= degree; i += n) s[i] = 1;
    return s;
}

/// prod_{n>=1} (1 - z^n)^{-1}; coefficient N is p(N).
inline IntSeries euler_series(int degree) {
    IntSeries s = IntSeries::one(degree);
    for (int n = 1; n <= degree; ++n) s.mul_inv_one_minus(n);
    return s;
}

/// prod_{n>=1} (1 - z^n), filled directly from the pentagonal number theorem:
/// only exponents k(3k±1)/2 appear, with sign (-1)^k.
inline IntSeries euler_product(int degree) {
    IntSeries s(degree);
    s[0] = 1;
    for (int k = 1;; ++k) {
        long g1 = static_cast<long>(k) * (3L * k - 1) / 2;
        long g2 = static_cast<long>(k) * (3L * k + 1) / 2;
        if (g1 > degree) break;
        int sign = (k % 2 == 0) ? 1 : -1;
        s[static_cast<int>(g1)] += sign;
        if (g2 <= degree) s[static_cast<int>(g2)] += sign;
    }
    return s;
}

/// Generating function for t-cores: prod (1-z^n)^{-1} (1-z^{tn})^t.
/// Coefficient N is c_t(N).
inline IntSeries tcore_series(int t, int degree) {
    if (t < 1) throw std::invalid_argument("tcore_series: t must be >= 1");
    IntSeries s = euler_series(degree);
    for (long n = 1; n * t <= degree; ++n)
        for (int rep = 0; rep < t; ++rep) s.mul_one_minus(static_cast<int>(n * t));
    return s;
}

/// Single coefficient c_t(N) without building the full product at degree N.
///
/// Write the t-core series as F(z) * E(z^t)^t with E the Euler product. E^t
/// truncated at y-degree D = floor(N/t) is cheap (E is pentagonal-sparse), and
/// then c_t(N) = sum_k [y^k]E^t * p(N - tk). This is what makes the exact Z_I
/// formula affordable at N in the thousands.
inline BigInt core_count_series(int t, int N) {
    if (t < 1) throw std::invalid_argument("core_count_series: t must be >= 1");
    if (N < 0) throw std::invalid_argument("core_count_series: N must be >= 0");
    int D = N / t;
    IntSeries e = euler_product(D);
    std::vector<std::pair<int, int>> support;
    for (int i = 1; i <= D; ++i)
        if (e[i] != 0) support.emplace_back(i, static_cast<int>(e[i].get_si()));
    std::vector<BigInt> arr(static_cast<std::size_t>(D) + 1);
    arr[0] = 1;
    for (int rep = 0; rep < t; ++rep)
        for (int j = D; j >= 1; --j) {
            BigInt& acc = arr[static_cast<std::size_t>(j)];
            for (const auto& [exp, c] : support) {
                if (exp > j) break;
                acc += c * arr[static_cast<std::size_t>(j - exp)];
            }
        }
    BigInt total = 0;
    for (int k = 0; k <= D; ++k)
        if (arr[static_cast<std::size_t>(k)] != 0)
            total += arr[static_cast<std::size_t>(k)] * partition_count(N - t * k);
    return total;
}

/// a_t(n): partitions of n with no part divisible by t,
/// prod_{t ∤ m} (1 - z^m)^{-1}.
inline IntSeries nondiv_series(int t, int degree) {
    if (t < 2) throw std::invalid_argument("nondiv_series: t must be >= 2");
    IntSeries s = IntSeries::one(degree);
    for (int m = 1; m <= degree; ++m)
        if (m % t != 0) s.mul_inv_one_minus(m);
    return s;
}

/// Coefficient table of Han's bivariate series
///   sum_N sum_{lambda |- N} z^N w^{H_t(lambda)}
///     = prod_n (1-z^n)^{-1} (1-z^{tn})^t / (1 - w^n z^{tn})^t,
/// stored as one z-series per w-degree. The w-degree bound floor(D/t) is
/// enough because removing a rim hook of length t removes exactly t boxes,
/// so H_t(lambda) <= n(lambda)/t.
struct BivariateTable {
    int t = 1;
    int n_degree = 0;
    int w_degree = 0;
    std::vector<std::vector<BigInt>> m;  // m[k][N]

    const BigInt& at(int N, int k) const {
        static const BigInt zero = 0;
        if (k > w_degree) return zero;
        return m[static_cast<std::size_t>(k)][static_cast<std::size_t>(N)];
    }

    BigInt row_sum(int N) const {
        BigInt s = 0;
        for (int k = 0; k <= w_degree; ++k) s += at(N, k);
        return s;
    }
};

inline BivariateTable han_table(int t, int n_degree) {
    if (t < 1) throw std::invalid_argument("han_table: t must be >= 1");
    BivariateTable table;
    table.t = t;
    table.n_degree = n_degree;
    table.w_degree = n_degree / t;
    table.m.assign(static_cast<std::size_t>(table.w_degree) + 1,
                   std::vector<BigInt>(static_cast<std::size_t>(n_degree) + 1));

    IntSeries base = tcore_series(t, n_degree);
    for (int d = 0; d <= n_degree; ++d) table.m[0][static_cast<std::size_t>(d)] = base[d];

    // multiply by each 1/(1 - w^n z^{tn}), t times: ascending in-place
    // knapsack over the (w, z) grid
    for (long n = 1; n * t <= n_degree; ++n) {
        int zs = static_cast<int>(n * t);
        int ws = static_cast<int>(n);
        for (int rep = 0; rep < t; ++rep)
            for (int k = ws; k <= table.w_degree; ++k)
                for (int d = zs; d <= n_degree; ++d)
                    table.m[static_cast<std::size_t>(k)][static_cast<std::size_t>(d)] +=
                        table.m[static_cast<std::size_t>(k - ws)][static_cast<std::size_t>(d - zs)];
    }
    return table;
}

}  // namespace symchar
