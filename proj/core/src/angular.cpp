#include "djcm/angular.hpp"

#include <algorithm>
#include <limits>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "djcm/errors.hpp"

namespace djcm {
namespace {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;
using BigFloat = boost::multiprecision::cpp_bin_float_50;

BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

BigFloat to_float(const BigRat& r) {
    return BigFloat(boost::multiprecision::numerator(r)) /
           BigFloat(boost::multiprecision::denominator(r));
}

void require_valid_pair(HalfInt j, HalfInt m) {
    if (j.twice() < 0)
        throw InvalidInput("wigner_3j: negative angular momentum j = " + j.str());
    if (j.twice() > 200)
        throw InvalidInput("wigner_3j: 2j > 200 exceeds the factorial bound (j = " + j.str() + ")");
    if ((m.twice() - j.twice()) % 2 != 0)
        throw InvalidInput("wigner_3j: projection parity mismatch, m = " + m.str() +
                           " against j = " + j.str());
    if (std::abs(m.twice()) > j.twice())
        throw InvalidInput("wigner_3j: |m| > j with m = " + m.str() + ", j = " + j.str());
}

struct Exact3j {
    BigRat sum;        // signed Racah sum, including the (-1)^(j1-j2-m3) prefactor
    BigRat norm;       // triangle coefficient times the projection factorials
};

// Racah single-sum form. All index arithmetic is exact in doubled units;
// every factorial argument is a non-negative integer by the time it is used.
Exact3j racah_sum(HalfInt j1, HalfInt j2, HalfInt j3,
                  HalfInt m1, HalfInt m2, HalfInt m3) {
    const int a1 = (j1.twice() + j2.twice() - j3.twice()) / 2; // j1+j2-j3
    const int a2 = (j1.twice() - j2.twice() + j3.twice()) / 2;
    const int a3 = (-j1.twice() + j2.twice() + j3.twice()) / 2;
    const int per = (j1.twice() + j2.twice() + j3.twice()) / 2 + 1;

    BigRat norm = BigRat(factorial(a1) * factorial(a2) * factorial(a3), factorial(per));
    norm *= BigRat(factorial((j1.twice() + m1.twice()) / 2) * factorial((j1.twice() - m1.twice()) / 2) *
                   factorial((j2.twice() + m2.twice()) / 2) * factorial((j2.twice() - m2.twice()) / 2) *
                   factorial((j3.twice() + m3.twice()) / 2) * factorial((j3.twice() - m3.twice()) / 2));

    const int b1 = a1;                                          // j1+j2-j3
    const int b2 = (j1.twice() - m1.twice()) / 2;               // j1-m1
    const int b3 = (j2.twice() + m2.twice()) / 2;               // j2+m2
    const int c1 = (j3.twice() - j2.twice() + m1.twice()) / 2;  // j3-j2+m1
    const int c2 = (j3.twice() - j1.twice() - m2.twice()) / 2;  // j3-j1-m2

    const int k_lo = std::max({0, -c1, -c2});
    const int k_hi = std::min({b1, b2, b3});

    BigRat sum = 0;
    for (int k = k_lo; k <= k_hi; ++k) {
        BigInt den = factorial(k) * factorial(b1 - k) * factorial(b2 - k) *
                     factorial(b3 - k) * factorial(c1 + k) * factorial(c2 + k);
        BigRat term(1, den);
        if (k % 2 != 0) term = -term;
        sum += term;
    }

    const int phase = (j1.twice() - j2.twice() - m3.twice()) / 2; // j1-j2-m3
    if (phase % 2 != 0) sum = -sum;
    return {sum, norm};
}

// Returns the numeric value; optionally the exact square (always rational).
double wigner_3j_impl(HalfInt j1, HalfInt j2, HalfInt j3,
                      HalfInt m1, HalfInt m2, HalfInt m3,
                      BigRat* square_out) {
    require_valid_pair(j1, m1);
    require_valid_pair(j2, m2);
    require_valid_pair(j3, m3);

    if (square_out) *square_out = 0;

    // Selection rules: legal zeros, not errors.
    if (m1.twice() + m2.twice() + m3.twice() != 0) return 0.0;
    if ((j1.twice() + j2.twice() + j3.twice()) % 2 != 0) return 0.0; // perimeter not integer
    if (j3.twice() > j1.twice() + j2.twice()) return 0.0;
    if (j3.twice() < std::abs(j1.twice() - j2.twice())) return 0.0;

    const Exact3j e = racah_sum(j1, j2, j3, m1, m2, m3);
    if (e.sum == 0) return 0.0; // e.g. all-zero projections with odd perimeter

    if (square_out) *square_out = e.sum * e.sum * e.norm;

    BigFloat value = to_float(e.sum) * boost::multiprecision::sqrt(to_float(e.norm));
    return value.convert_to<double>();
}

Fraction to_fraction(const BigRat& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    const BigInt lim = std::numeric_limits<std::int64_t>::max();
    if (boost::multiprecision::abs(num) > lim || den > lim)
        throw InvalidInput("transition coefficient square does not fit a 64-bit fraction");
    return Fraction{num.convert_to<std::int64_t>(), den.convert_to<std::int64_t>()};
}

double transition_coefficient_impl(HalfInt Jb, HalfInt Jc, HalfInt m, Fraction* sq_out) {
    if (!m.is_projection_of(Jb) || !m.is_projection_of(Jc))
        throw InvalidInput("transition coefficient: m = " + m.str() +
                           " is outside the projection range of Jb = " + Jb.str() +
                           " or Jc = " + Jc.str());
    BigRat square;
    double threej = wigner_3j_impl(Jb, HalfInt::whole(1), Jc, -m, HalfInt::whole(0), m, &square);
    if (sq_out) *sq_out = to_fraction(square);
    const int phase = (Jb.twice() - m.twice()) / 2; // Jb - m, an integer
    return (phase % 2 != 0) ? -threej : threej;
}

} // namespace

double wigner_3j(HalfInt j1, HalfInt j2, HalfInt j3,
                 HalfInt m1, HalfInt m2, HalfInt m3) {
    return wigner_3j_impl(j1, j2, j3, m1, m2, m3, nullptr);
}

double transition_coefficient(HalfInt Jb, HalfInt Jc, HalfInt m) {
    return transition_coefficient_impl(Jb, Jc, m, nullptr);
}

bool TransitionCoefficients::contains(HalfInt m) const {
    return std::find(ms.begin(), ms.end(), m) != ms.end();
}

int TransitionCoefficients::index_of(HalfInt m) const {
    auto it = std::find(ms.begin(), ms.end(), m);
    if (it == ms.end())
        throw InvalidInput("projection m = " + m.str() + " not in the coefficient table");
    return static_cast<int>(it - ms.begin());
}

double TransitionCoefficients::coeff(HalfInt m) const { return alpha[index_of(m)]; }

Fraction TransitionCoefficients::coeff_sq(HalfInt m) const { return alpha_sq[index_of(m)]; }

TransitionCoefficients build_coefficient_table(HalfInt Jb, HalfInt Jc) {
    if (Jb.twice() < 0 || Jc.twice() < 0)
        throw InvalidInput("coefficient table requires Jb, Jc >= 0");
    if (Jb.twice() == 0 && Jc.twice() == 0)
        throw InvalidInput("forbidden transition: J = 0 -> J = 0");
    if (std::abs(Jb.twice() - Jc.twice()) > 2)
        throw InvalidInput("forbidden transition: |Jb - Jc| > 1 with Jb = " + Jb.str() +
                           ", Jc = " + Jc.str());
    if ((Jb.twice() - Jc.twice()) % 2 != 0)
        throw InvalidInput("forbidden transition: Jb - Jc is not an integer");

    TransitionCoefficients table;
    table.Jb = Jb;
    table.Jc = Jc;
    const int lo = std::max(-Jb.twice(), -Jc.twice());
    const int hi = std::min(Jb.twice(), Jc.twice());
    for (int tm = lo; tm <= hi; tm += 2) {
        const HalfInt m = HalfInt::from_twice(tm);
        Fraction sq;
        const double a = transition_coefficient_impl(Jb, Jc, m, &sq);
        table.ms.push_back(m);
        table.alpha.push_back(a);
        table.alpha_sq.push_back(sq);
    }
    return table;
}

} // namespace djcm
