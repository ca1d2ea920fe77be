#include "graphlie/series.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>

namespace graphlie::series {

PowerSeries PowerSeries::one(int order) {
    PowerSeries s(order);
    s.c[0] = 1;
    return s;
}

PowerSeries PowerSeries::from_ints(const std::vector<long long>& coeffs, int order) {
    PowerSeries s(order);
    for (size_t i = 0; i < coeffs.size() && int(i) <= order; ++i) s.c[i] = coeffs[i];
    return s;
}

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    if (boost::multiprecision::denominator(r) == 1)
        os << boost::multiprecision::numerator(r);
    else
        os << r;
    return os.str();
}

std::string PowerSeries::to_string() const {
    std::string out;
    for (int d = 0; d <= order(); ++d) {
        if (d) out += " + ";
        std::string coeff = rational_str(c[size_t(d)]);
        if (d == 0)
            out += coeff;
        else if (d == 1)
            out += coeff + "*z";
        else
            out += coeff + "*z^" + std::to_string(d);
    }
    out += " + O(z^" + std::to_string(order() + 1) + ")";
    return out;
}

std::vector<std::string> PowerSeries::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(c.size());
    for (const auto& r : c) out.push_back(rational_str(r));
    return out;
}

std::string DimensionVector::to_string() const {
    std::string out;
    for (size_t i = 0; i < ell.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(ell[i]);
    }
    return out;
}

long long mobius2(long long n) {
    require(n >= 1, errc::usage, "mobius2 needs n >= 1");
    long long twopow = 1;
    while (n % 2 == 0) {
        n /= 2;
        twopow *= 2;
    }
    // squarefree Mobius of the odd part
    long long mu = 1;
    for (long long p = 3; p * p <= n; p += 2) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return twopow == 1 ? mu : (twopow / 2) * mu;
}

Rational necklace2(long long k, const Rational& t) {
    require(k >= 1, errc::usage, "necklace2 needs k >= 1");
    Rational sum = 0;
    for (long long j = 1; j <= k; ++j) {
        if (k % j) continue;
        Rational tj = 1;
        for (long long e = 0; e < j; ++e) tj *= t;
        sum += Rational(mobius2(k / j)) * tj;
    }
    return sum / k;
}

long long necklace2_int(long long k, long long t) {
    Rational r = necklace2(k, Rational(t));
    require(boost::multiprecision::denominator(r) == 1, errc::internal, "necklace2 not integral");
    return r.convert_to<long long>();
}

PowerSeries series_add(const PowerSeries& a, const PowerSeries& b) {
    int n = std::min(a.order(), b.order());
    PowerSeries s(n);
    for (int d = 0; d <= n; ++d) s.c[size_t(d)] = a.at(d) + b.at(d);
    return s;
}

PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b) {
    int n = std::min(a.order(), b.order());
    PowerSeries s(n);
    for (int i = 0; i <= n; ++i) {
        if (a.at(i) == 0) continue;
        for (int j = 0; i + j <= n; ++j) s.c[size_t(i + j)] += a.at(i) * b.at(j);
    }
    return s;
}

PowerSeries series_scale(const Rational& s, const PowerSeries& a) {
    PowerSeries out(a.order());
    for (int d = 0; d <= a.order(); ++d) out.c[size_t(d)] = s * a.at(d);
    return out;
}

PowerSeries series_inverse(const PowerSeries& a) {
    require(a.at(0) == 1, errc::bad_constant_term, "series inverse needs constant term 1");
    int n = a.order();
    PowerSeries b(n);
    b.c[0] = 1;
    for (int d = 1; d <= n; ++d) {
        Rational acc = 0;
        for (int i = 1; i <= d; ++i) acc += a.at(i) * b.at(d - i);
        b.c[size_t(d)] = -acc;
    }
    return b;
}

PowerSeries series_log(const PowerSeries& a) {
    require(a.at(0) == 1, errc::bad_constant_term, "series log needs constant term 1");
    int n = a.order();
    // log(1+h) = sum (-1)^{j+1} h^j / j with h = a - 1 (order >= 1)
    PowerSeries h = a;
    h.c[0] = 0;
    PowerSeries out(n);
    PowerSeries pw = PowerSeries::one(n);
    for (int j = 1; j <= n; ++j) {
        pw = series_mul(pw, h);
        Rational sign = (j % 2 == 1) ? Rational(1) : Rational(-1);
        for (int d = 0; d <= n; ++d) out.c[size_t(d)] += sign * pw.at(d) / j;
    }
    return out;
}

PowerSeries series_substitute_power(const PowerSeries& a, int n) {
    require(n >= 1, errc::usage, "substitution power must be >= 1");
    PowerSeries out(a.order());
    for (int d = 0; d * n <= a.order(); ++d) out.c[size_t(d * n)] = a.at(d);
    return out;
}

PowerSeries froberg_reciprocal(const std::vector<long long>& clique_poly, int order) {
    require(!clique_poly.empty() && clique_poly[0] == 1, errc::bad_constant_term,
            "clique polynomial must have constant term 1");
    PowerSeries p(order);
    for (size_t i = 0; i < clique_poly.size() && int(i) <= order; ++i)
        p.c[i] = (i % 2 == 0) ? Rational(clique_poly[i]) : Rational(-clique_poly[i]);
    PowerSeries inv = series_inverse(p);
    for (int d = 0; d <= order; ++d)
        require(inv.at(d) >= 0, errc::nonpositive_coefficient,
                "reciprocal has negative coefficient at degree " + std::to_string(d));
    return inv;
}

namespace {

long long to_dim(const Rational& r, int degree) {
    require(boost::multiprecision::denominator(r) == 1 && r >= 0, errc::non_integral_dimension,
            "dimension at degree " + std::to_string(degree) + " is not a nonnegative integer: " + rational_str(r));
    return r.convert_to<long long>();
}

}  // namespace

DimensionVector petrogradsky_dims(const PowerSeries& phi, int order) {
    require(phi.at(0) == 1, errc::bad_constant_term, "Hilbert series must have constant term 1");
    PowerSeries acc(order);
    for (int n = 1; n <= order; ++n) {
        long long mu = mobius2(n);
        if (mu == 0) continue;
        PowerSeries trunc(order);
        for (int d = 0; d <= order; ++d) trunc.c[size_t(d)] = phi.order() >= d ? phi.at(d) : Rational(0);
        PowerSeries lg = series_log(series_substitute_power(trunc, n));
        for (int d = 0; d <= order; ++d) acc.c[size_t(d)] += Rational(mu, n) * lg.at(d);
    }
    DimensionVector out;
    out.ell.resize(size_t(order));
    for (int k = 1; k <= order; ++k) out.ell[size_t(k) - 1] = to_dim(acc.at(k), k);
    return out;
}

PowerSeries pbw_product(const DimensionVector& ell, int order) {
    PowerSeries out = PowerSeries::one(order);
    for (int k = 1; k <= order && k <= ell.order(); ++k) {
        long long e = ell.at(k);
        if (e == 0) continue;
        // (1+z^k)^e expanded binomially; only floor(order/k) terms survive
        PowerSeries factor(order);
        Integer binom = 1;
        for (long long j = 0; k * j <= order && j <= e; ++j) {
            factor.c[size_t(k * j)] = Rational(binom);
            binom = binom * (e - j) / (j + 1);
        }
        out = series_mul(out, factor);
    }
    return out;
}

std::vector<Rational> power_sums(const std::vector<Rational>& poly, int order) {
    require(!poly.empty() && poly[0] == 1, errc::bad_constant_term, "polynomial must have constant term 1");
    // poly[i] is the i-th elementary symmetric function of the eigenvalues
    auto e = [&](int i) { return i < int(poly.size()) ? poly[size_t(i)] : Rational(0); };
    std::vector<Rational> p(size_t(order) + 1, Rational(0));
    for (int m = 1; m <= order; ++m) {
        Rational acc = 0;
        for (int i = 1; i < m; ++i) {
            Rational term = e(i) * p[size_t(m - i)];
            acc += (i % 2 == 1) ? term : -term;
        }
        Rational last = Rational(m) * e(m);
        acc += (m % 2 == 1) ? last : -last;
        p[size_t(m)] = acc;
    }
    return std::vector<Rational>(p.begin() + 1, p.end());
}

std::vector<Rational> power_sums_int(const std::vector<long long>& poly, int order) {
    std::vector<Rational> q(poly.size());
    for (size_t i = 0; i < poly.size(); ++i) q[i] = poly[i];
    return power_sums(q, order);
}

DimensionVector witt_dims_from_power_sums(const std::vector<Rational>& p, int order) {
    require(int(p.size()) >= order, errc::usage, "not enough power sums");
    DimensionVector out;
    out.ell.resize(size_t(order));
    for (int k = 1; k <= order; ++k) {
        Rational acc = 0;
        for (int d = 1; d <= k; ++d) {
            if (k % d) continue;
            acc += Rational(mobius2(k / d)) * p[size_t(d) - 1];
        }
        out.ell[size_t(k) - 1] = to_dim(acc / k, k);
    }
    return out;
}

}  // namespace graphlie::series
