#pragma once

#include <cstdlib>
#include <string>

namespace qdouble {

// Half-integer quantum number, stored as twice its value. Floating-point j
// never enters an API; everything is exact integer arithmetic on `twice`.
struct HalfInt {
    int twice = 0;

    static constexpr HalfInt from_twice(int t) { return HalfInt{t}; }
    static constexpr HalfInt whole(int n) { return HalfInt{2 * n}; }

    constexpr double value() const { return twice / 2.0; }
    constexpr bool is_integer() const { return twice % 2 == 0; }
    // valid only when is_integer()
    constexpr int as_int() const { return twice / 2; }

    constexpr HalfInt operator-() const { return HalfInt{-twice}; }
    constexpr HalfInt operator+(HalfInt o) const { return HalfInt{twice + o.twice}; }
    constexpr HalfInt operator-(HalfInt o) const { return HalfInt{twice - o.twice}; }
    constexpr HalfInt& operator+=(int n) { twice += 2 * n; return *this; }
    constexpr HalfInt& operator-=(int n) { twice -= 2 * n; return *this; }

    constexpr bool operator==(HalfInt o) const { return twice == o.twice; }
    constexpr bool operator!=(HalfInt o) const { return twice != o.twice; }
    constexpr bool operator<(HalfInt o) const { return twice < o.twice; }
    constexpr bool operator<=(HalfInt o) const { return twice <= o.twice; }
    constexpr bool operator>(HalfInt o) const { return twice > o.twice; }
    constexpr bool operator>=(HalfInt o) const { return twice >= o.twice; }

    // true when this and o differ by a whole integer
    constexpr bool same_ladder(HalfInt o) const { return (twice - o.twice) % 2 == 0; }
};

inline HalfInt abs(HalfInt h) { return HalfInt::from_twice(std::abs(h.twice)); }
inline HalfInt max(HalfInt a, HalfInt b) { return a < b ? b : a; }
inline HalfInt min(HalfInt a, HalfInt b) { return a < b ? a : b; }

inline std::string to_string(HalfInt h) {
    if (h.twice % 2 == 0) return std::to_string(h.twice / 2);
    return std::to_string(h.twice) + "/2";
}

} // namespace qdouble
