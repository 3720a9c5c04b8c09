#pragma once

#include <array>
#include <cstdint>

namespace starpi {

// Element of Z/4Z. Construction reduces mod 4.
class Z4 {
 public:
  constexpr Z4() : v_(0) {}
  constexpr explicit Z4(unsigned v) : v_(static_cast<uint8_t>(v & 3u)) {}

  constexpr unsigned value() const { return v_; }

  friend constexpr Z4 operator+(Z4 a, Z4 b) { return Z4(unsigned(a.v_) + b.v_); }
  friend constexpr bool operator==(Z4 a, Z4 b) { return a.v_ == b.v_; }
  friend constexpr bool operator<(Z4 a, Z4 b) { return a.v_ < b.v_; }

 private:
  uint8_t v_;
};

constexpr std::array<Z4, 4> all_z4() { return {Z4(0), Z4(1), Z4(2), Z4(3)}; }

// Grades 1 and 3 are the odd ones: their Grassmann components anticommute.
constexpr bool is_odd(Z4 g) { return (g.value() & 1u) != 0; }

// Sign selector used by the envelope involution: 0 on grades {0,1},
// 1 on grades {2,3}. Satisfies eta(a)+eta(b) = eta(a+b)+1 mod 2 when a and b
// are both odd, and eta(a)+eta(b) = eta(a+b) mod 2 otherwise.
constexpr int eta(Z4 g) { return g.value() >= 2 ? 1 : 0; }

}  // namespace starpi
