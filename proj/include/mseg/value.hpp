#pragma once

#include <compare>
#include <string>

namespace mseg {

// A coordinate on the value line, stored as twice its mathematical value so
// that integer and half-integer labels are both exact.
struct Value {
  int twice = 0;

  friend constexpr auto operator<=>(const Value&, const Value&) = default;

  constexpr Value next() const { return Value{twice + 2}; }
  constexpr Value prev() const { return Value{twice - 2}; }
  constexpr bool integral() const { return twice % 2 == 0; }
};

constexpr bool same_coset(Value a, Value b) { return ((a.twice ^ b.twice) & 1) == 0; }

// b names the point a+1.
constexpr bool consecutive(Value a, Value b) { return b.twice - a.twice == 2; }

// Exact when a and b share a coset.
constexpr Value midpoint(Value a, Value b) { return Value{(a.twice + b.twice) / 2}; }

// Reflection of x through c.
constexpr Value mirror(Value c, Value x) { return Value{2 * c.twice - x.twice}; }

// "3", "-1/2", ...
std::string to_string(Value v);

}  // namespace mseg
