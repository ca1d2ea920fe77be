#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "graphlie/errors.hpp"

namespace graphlie::series {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Truncated power series with exact rational coefficients.
/// coeffs[d] is the degree-d coefficient; arithmetic never extends past the
/// truncation order.
struct PowerSeries {
    std::vector<Rational> c;  // size order()+1

    PowerSeries() = default;
    explicit PowerSeries(int order) : c(size_t(order) + 1, Rational(0)) {}

    int order() const { return int(c.size()) - 1; }
    const Rational& at(int d) const { return c[size_t(d)]; }
    Rational& at(int d) { return c[size_t(d)]; }

    static PowerSeries one(int order);
    static PowerSeries from_ints(const std::vector<long long>& coeffs, int order);

    bool operator==(const PowerSeries& o) const { return c == o.c; }

    std::string to_string() const;
    std::vector<std::string> coeff_strings() const;
};

/// Graded dimension vector; ell[k-1] = dimension in degree k.
struct DimensionVector {
    std::vector<long long> ell;

    int order() const { return int(ell.size()); }
    long long at(int k) const { return ell[size_t(k) - 1]; }  // k >= 1
    bool operator==(const DimensionVector& o) const { return ell == o.ell; }
    std::string to_string() const;
};

/// Mod-2 Mobius function: mu(n) for odd n, 2^{s-1} mu(m) for n = 2^s m, m odd.
long long mobius2(long long n);

/// Generalized mod-2 necklace polynomial M_{2,k}(t) = (1/k) sum_{j|k} mu2(k/j) t^j.
Rational necklace2(long long k, const Rational& t);
long long necklace2_int(long long k, long long t);

PowerSeries series_add(const PowerSeries& a, const PowerSeries& b);
PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b);
PowerSeries series_scale(const Rational& s, const PowerSeries& a);
/// Requires constant term 1.
PowerSeries series_inverse(const PowerSeries& a);
/// Requires constant term 1.
PowerSeries series_log(const PowerSeries& a);
/// a(z^n), truncated to a.order().
PowerSeries series_substitute_power(const PowerSeries& a, int n);

/// Truncated inverse of p(-z); errors with NonpositiveCoefficient when the
/// result has a negative coefficient (p was not a clique polynomial).
PowerSeries froberg_reciprocal(const std::vector<long long>& clique_poly, int order);

/// Dimensions ell_k with prod_k (1+z^k)^{ell_k} = phi, obtained from
/// L_2(phi) = sum_{n>=1} (mu2(n)/n) ln phi(z^n). Errors with
/// NonIntegralDimension when some coefficient is not a nonnegative integer.
DimensionVector petrogradsky_dims(const PowerSeries& phi, int order);

/// prod_{k>=1} (1+z^k)^{ell_k}, truncated.
PowerSeries pbw_product(const DimensionVector& ell, int order);

/// Power sums p_m = sum_i lambda_i^m for the eigenvalues of
/// p(z) = prod_i (1 + lambda_i z), via Newton's identities (no roots).
std::vector<Rational> power_sums(const std::vector<Rational>& poly, int order);
std::vector<Rational> power_sums_int(const std::vector<long long>& poly, int order);

/// ell_k = (1/k) sum_{d|k} mu2(k/d) p_d; errors with NonIntegralDimension.
DimensionVector witt_dims_from_power_sums(const std::vector<Rational>& p, int order);

}  // namespace graphlie::series
