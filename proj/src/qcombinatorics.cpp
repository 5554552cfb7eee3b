#include "liecoh/qcombinatorics.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "liecoh/errors.hpp"

namespace liecoh {

IntPolynomial IntPolynomial::one_minus_qpow(int e) {
    std::vector<long long> c(e + 1, 0);
    c[0] = 1;
    c[e] -= 1;  // e = 0 gives the zero polynomial
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return IntPolynomial();
    std::vector<long long> out(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::divide_by_one_minus_qpow(int e) const {
    if (e <= 0) throw Error("divide_by_one_minus_qpow: exponent must be positive");
    if (is_zero()) return IntPolynomial();
    if (degree() < e) throw Error("inexact polynomial division");
    // Low-end synthetic division: the divisor has constant term 1, so
    // quotient[t] accumulates as quotient[t] = r[t], r[t+e] += quotient[t].
    std::vector<long long> r = c_;
    std::vector<long long> q(r.size() - e, 0);
    for (std::size_t t = 0; t < r.size(); ++t) {
        if (r[t] == 0) continue;
        if (t >= q.size()) throw Error("inexact polynomial division");
        q[t] = r[t];
        r[t + e] += q[t];
    }
    return IntPolynomial(std::move(q));
}

long long IntPolynomial::coefficient_sum() const {
    long long s = 0;
    for (long long x : c_) s += x;
    return s;
}

bool IntPolynomial::palindromic() const {
    for (std::size_t i = 0, j = c_.size(); i < j; ++i)
        if (c_[i] != c_[j - 1 - i]) return false;
    return true;
}

IntPolynomial gaussian_binomial(int j, int k) {
    if (j < 0 || k < 0) throw Error("gaussian_binomial: negative argument");
    // Stepwise [j+i, i]_q = [j+i-1, i-1]_q * (1-q^{j+i})/(1-q^i); every
    // intermediate value is again a Gaussian binomial, so division is exact.
    IntPolynomial result = IntPolynomial::one();
    for (int i = 1; i <= k; ++i)
        result = (result * IntPolynomial::one_minus_qpow(j + i)).divide_by_one_minus_qpow(i);
    return result;
}

long long partition_count(int j, int k, long long n) {
    if (n < 0) return 0;
    if (n == 0) return 1;
    if (j < 0 || k < 0) return 0;
    if (n > static_cast<long long>(j) * k) return 0;
    // p(j,k,n) = p(j,k-1,n) + p(j-1,k,n-k): split on whether every part is
    // positive after subtracting one from each of k parts.
    static thread_local std::map<std::tuple<int, int, long long>, long long> memo;
    const auto key = std::make_tuple(j, k, n);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const long long value = partition_count(j, k - 1, n) + partition_count(j - 1, k, n - k);
    memo.emplace(key, value);
    return value;
}

long long multiplicity_N(int j, int k, long long n) {
    return partition_count(j, k, n) - partition_count(j, k, n - 1);
}

std::vector<long long> c_coefficients(int up_to) {
    std::vector<long long> c(up_to + 1, 0);
    if (up_to >= 0) c[0] = 1;
    for (int part : {2, 3, 4})
        for (int i = part; i <= up_to; ++i) c[i] += c[i - part];
    return c;
}

long long lambda4_multiplicity(int ell, int k) {
    if (ell < 1 || k < 1) throw Error("lambda4_multiplicity: arguments must be >= 1");
    const int hi = 2 * k - ell;
    const int lo = 2 * k - 2 * ell + 1;  // lo <= hi since ell >= 1
    if (hi < 0) return 0;
    const auto c = c_coefficients(hi);
    return c[hi] - (lo < 0 ? 0 : c[lo]);
}

long long lambda3_self_multiplicity(int m) {
    if (m < 0) throw Error("lambda3_self_multiplicity: m must be >= 0");
    const int q = m / 6;
    const int r = m % 6;
    return (r == 3 || r == 5) ? q + 1 : q;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace liecoh
