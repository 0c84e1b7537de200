#ifndef DJCM_HALF_INT_HPP
#define DJCM_HALF_INT_HPP

#include <compare>
#include <cstdlib>
#include <string>
#include <vector>

namespace djcm {

/// Exact half-integer, stored as twice its value. All angular momentum
/// quantum numbers (j and m) are carried this way so that selection rules
/// and parity checks are integer arithmetic, never float comparisons.
class HalfInt {
public:
    constexpr HalfInt() = default;

    static constexpr HalfInt from_twice(int twice) {
        HalfInt h;
        h.twice_ = twice;
        return h;
    }
    static constexpr HalfInt whole(int value) { return from_twice(2 * value); }

    constexpr int twice() const { return twice_; }
    constexpr bool is_whole() const { return twice_ % 2 == 0; }
    constexpr double value() const { return 0.5 * twice_; }

    /// True when this could be a projection of j: |m| <= j and 2m has the
    /// same parity as 2j.
    constexpr bool is_projection_of(HalfInt j) const {
        return std::abs(twice_) <= j.twice_ &&
               (twice_ - j.twice_) % 2 == 0;
    }

    constexpr HalfInt operator-() const { return from_twice(-twice_); }
    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) {
        return from_twice(a.twice_ + b.twice_);
    }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) {
        return from_twice(a.twice_ - b.twice_);
    }
    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

    /// "3/2", "-1/2", "2", ...
    std::string str() const {
        if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }

private:
    int twice_ = 0;
};

/// Projections -j, -j+1, ..., j in ascending order.
inline std::vector<HalfInt> projection_range(HalfInt j) {
    std::vector<HalfInt> out;
    for (int tm = -j.twice(); tm <= j.twice(); tm += 2)
        out.push_back(HalfInt::from_twice(tm));
    return out;
}

} // namespace djcm

#endif
