#pragma once

#include <cstdint>
#include <vector>

namespace liecoh {

/// Integer polynomial in q, coefficient index = degree. Trailing coefficient
/// is nonzero unless the polynomial is zero.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<long long> coeffs) : c_(std::move(coeffs)) { trim(); }
    static IntPolynomial one() { return IntPolynomial({1}); }
    /// 1 - q^e
    static IntPolynomial one_minus_qpow(int e);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    long long coeff(int n) const {
        return (n < 0 || n >= static_cast<int>(c_.size())) ? 0 : c_[n];
    }
    const std::vector<long long>& coeffs() const { return c_; }

    IntPolynomial operator*(const IntPolynomial& o) const;
    /// Exact division by (1 - q^e); throws if the division leaves a remainder.
    IntPolynomial divide_by_one_minus_qpow(int e) const;

    long long coefficient_sum() const;
    bool palindromic() const;

    bool operator==(const IntPolynomial& o) const = default;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<long long> c_;
};

/// Gaussian binomial [j+k, k]_q; degree j*k, nonnegative palindromic
/// coefficients, value binomial(j+k, k) at q = 1.
IntPolynomial gaussian_binomial(int j, int k);

/// Number of partitions of n into at most k parts, each part at most j.
/// Zero outside 0 <= n <= j*k; one for n = 0.
long long partition_count(int j, int k, long long n);

/// partition_count(j,k,n) - partition_count(j,k,n-1): the coefficient of q^n
/// in (1-q)*gaussian_binomial(j,k). Defined (as zero) for all integer n.
long long multiplicity_N(int j, int k, long long n);

/// Coefficients of 1/((1-x^2)(1-x^3)(1-x^4)): partitions with parts in {2,3,4}.
std::vector<long long> c_coefficients(int up_to);

/// Multiplicity of V_{2*ell} inside the fourth exterior power of V_{k+3}.
long long lambda4_multiplicity(int ell, int k);

/// Multiplicity of V_m inside the third exterior power of V_m.
long long lambda3_self_multiplicity(int m);

long long binomial(int n, int k);

}  // namespace liecoh
