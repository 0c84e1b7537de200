#include "djcm/frequency.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "djcm/errors.hpp"

namespace djcm {
namespace {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigRat to_bigrat(const Fraction& f) { return BigRat(f.num, f.den); }

Fraction to_fraction(const BigRat& r) {
    return Fraction{boost::multiprecision::numerator(r).convert_to<std::int64_t>(),
                    boost::multiprecision::denominator(r).convert_to<std::int64_t>()};
}

/// Exact square root of a non-negative rational, if it is one.
bool rational_sqrt(const BigRat& r, BigRat* root) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    const BigInt sn = boost::multiprecision::sqrt(num);
    const BigInt sd = boost::multiprecision::sqrt(den);
    if (sn * sn != num || sd * sd != den) return false;
    *root = BigRat(sn, sd);
    return true;
}

/// Continued-fraction rational reconstruction of x, |error| <= tol * |x|.
bool reconstruct_rational(double x, BigRat* out, double tol = 1e-12,
                          long max_den = 1000000) {
    const double target = std::abs(x);
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double v = target;
    for (int iter = 0; iter < 64; ++iter) {
        const double fl = std::floor(v);
        if (fl > 1e15) return false;
        const long a = static_cast<long>(fl);
        const long p2 = a * p1 + p0;
        const long q2 = a * q1 + q0;
        if (q2 > max_den) return false;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        const double approx = static_cast<double>(p1) / static_cast<double>(q1);
        if (std::abs(approx - target) <= tol * std::max(1.0, target)) {
            *out = BigRat(x < 0 ? -p1 : p1, q1);
            return true;
        }
        const double rem = v - fl;
        if (rem < 1e-15) return false;
        v = 1.0 / rem;
    }
    return false;
}

BigRat rational_gcd(const BigRat& a, const BigRat& b) {
    const BigInt an = boost::multiprecision::abs(boost::multiprecision::numerator(a));
    const BigInt ad = boost::multiprecision::denominator(a);
    const BigInt bn = boost::multiprecision::abs(boost::multiprecision::numerator(b));
    const BigInt bd = boost::multiprecision::denominator(b);
    return BigRat(boost::multiprecision::gcd(an * bd, bn * ad), ad * bd);
}

} // namespace

std::string convention_name(FrequencyConvention c) {
    return c == FrequencyConvention::PaperText ? "paper-text" : "sz-derived";
}

FrequencyConvention parse_convention(const std::string& name) {
    if (name == "paper-text") return FrequencyConvention::PaperText;
    if (name == "sz-derived") return FrequencyConvention::SzDerived;
    throw InvalidInput("unknown frequency convention '" + name +
                       "' (expected paper-text or sz-derived)");
}

FrequencyTable build_frequency_table(const LevelSpec& levels,
                                     const TransitionCoefficients& coeffs,
                                     double omega, FrequencyConvention convention) {
    if (coeffs.size() == 0)
        throw InvalidInput("frequency table: empty coefficient table");
    if (coeffs.Jb != levels.Jb || coeffs.Jc != levels.Jc)
        throw InvalidInput("frequency table: coefficient table does not match levels");

    FrequencyTable t;
    t.ms = coeffs.ms;
    t.dim_b = levels.dim_b();
    t.dim_c = levels.dim_c();

    if (convention == FrequencyConvention::SzDerived) {
        // omega_m = alpha_m^2 * Omega / 2, exactly rational over base Omega/2.
        t.base = 0.5 * omega;
        t.exact = true;
        for (int i = 0; i < coeffs.size(); ++i) {
            t.coeff.push_back(coeffs.alpha_sq[i]);
            t.omega.push_back(coeffs.alpha_sq[i].to_double() * t.base);
        }
        return t;
    }

    // PaperText: omega_m = alpha_m * Omega. The alpha_m are square roots of
    // rationals; they share a base exactly when every pairwise ratio of the
    // squares is the square of a rational.
    int ref = -1;
    for (int i = 0; i < coeffs.size(); ++i) {
        if (coeffs.alpha_sq[i].num == 0) continue;
        if (ref < 0 || to_bigrat(coeffs.alpha_sq[i]) < to_bigrat(coeffs.alpha_sq[ref]))
            ref = i;
    }

    t.exact = ref >= 0;
    std::vector<BigRat> ratios(coeffs.size(), BigRat(0));
    if (ref >= 0) {
        const BigRat ref_sq = to_bigrat(coeffs.alpha_sq[ref]);
        for (int i = 0; i < coeffs.size() && t.exact; ++i) {
            if (coeffs.alpha_sq[i].num == 0) continue;
            BigRat root;
            if (!rational_sqrt(to_bigrat(coeffs.alpha_sq[i]) / ref_sq, &root)) {
                t.exact = false;
                break;
            }
            ratios[i] = coeffs.alpha[i] < 0 ? -root : root;
        }
        t.base = std::sqrt(coeffs.alpha_sq[ref].to_double()) * omega;
    }

    for (int i = 0; i < coeffs.size(); ++i) {
        t.omega.push_back(coeffs.alpha[i] * omega);
        if (t.exact) t.coeff.push_back(to_fraction(ratios[i]));
    }
    if (!t.exact) t.coeff.clear();
    return t;
}

FrequencyTable custom_frequency_table(const std::vector<double>& omegas,
                                      int dim_b, int dim_c) {
    if (omegas.empty()) throw InvalidInput("custom frequency table: no frequencies");
    if (dim_b < 1 || dim_c < 1) throw InvalidInput("custom frequency table: bad weight dims");

    FrequencyTable t;
    t.omega = omegas;
    t.dim_b = dim_b;
    t.dim_c = dim_c;

    int ref = -1;
    for (int i = 0; i < t.size(); ++i) {
        if (t.omega[i] == 0.0) continue;
        if (ref < 0 || std::abs(t.omega[i]) < std::abs(t.omega[ref])) ref = i;
    }
    if (ref < 0) return t; // all zero: inexact, period undefined

    t.base = std::abs(t.omega[ref]);
    t.exact = true;
    for (int i = 0; i < t.size(); ++i) {
        if (t.omega[i] == 0.0) {
            t.coeff.push_back(Fraction{0, 1});
            continue;
        }
        BigRat r;
        if (!reconstruct_rational(t.omega[i] / t.base, &r)) {
            t.exact = false;
            t.coeff.clear();
            break;
        }
        t.coeff.push_back(to_fraction(r));
    }
    return t;
}

double disentanglement_period(const FrequencyTable& table) {
    if (!table.exact)
        throw NoFinitePeriod("frequency table is not commensurate; no finite period");

    BigRat g(0);
    for (int i = 0; i < table.size(); ++i) {
        for (int j = i; j < table.size(); ++j) {
            const BigRat ci = to_bigrat(table.coeff[i]);
            const BigRat cj = to_bigrat(table.coeff[j]);
            const BigRat pair[2] = {BigRat(ci - cj), BigRat(ci + cj)};
            for (const BigRat& v : pair) {
                if (v == 0) continue;
                g = (g == 0) ? BigRat(boost::multiprecision::abs(v)) : rational_gcd(g, v);
            }
        }
    }
    if (g == 0)
        throw NoFinitePeriod("all pair frequencies vanish; no finite period");

    const double g_d = boost::multiprecision::numerator(g).convert_to<double>() /
                       boost::multiprecision::denominator(g).convert_to<double>();
    const double pi = std::acos(-1.0);
    return pi / (g_d * table.base);
}

} // namespace djcm
