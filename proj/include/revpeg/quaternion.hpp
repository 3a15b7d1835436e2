#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace revpeg {

/// Element of the quaternion group Q8 = {±1, ±i, ±j, ±k}.
class Quaternion {
 public:
  enum class Unit : std::uint8_t { One, I, J, K };

  constexpr Quaternion() = default;
  constexpr Quaternion(Unit u, bool negative = false) : unit_(u), negative_(negative) {}

  static constexpr Quaternion one() { return {Unit::One}; }
  static constexpr Quaternion minus_one() { return {Unit::One, true}; }
  static constexpr Quaternion i() { return {Unit::I}; }
  static constexpr Quaternion j() { return {Unit::J}; }
  static constexpr Quaternion k() { return {Unit::K}; }

  /// All eight elements: +1, -1, +i, -i, +j, -j, +k, -k.
  static constexpr std::array<Quaternion, 8> elements() {
    return {one(), minus_one(), i(), -i(), j(), -j(), k(), -k()};
  }

  constexpr Unit unit() const { return unit_; }
  constexpr bool negative() const { return negative_; }

  constexpr Quaternion operator-() const { return {unit_, !negative_}; }

  friend constexpr Quaternion operator*(Quaternion p, Quaternion q) {
    // kTable[a][b] = (unit, sign flip) of unit_a * unit_b.
    struct Entry {
      Unit u;
      bool neg;
    };
    constexpr Entry kTable[4][4] = {
        {{Unit::One, false}, {Unit::I, false}, {Unit::J, false}, {Unit::K, false}},
        {{Unit::I, false}, {Unit::One, true}, {Unit::K, false}, {Unit::J, true}},
        {{Unit::J, false}, {Unit::K, true}, {Unit::One, true}, {Unit::I, false}},
        {{Unit::K, false}, {Unit::J, false}, {Unit::I, true}, {Unit::One, true}},
    };
    const Entry e = kTable[static_cast<int>(p.unit_)][static_cast<int>(q.unit_)];
    return {e.u, e.neg != (p.negative_ != q.negative_)};
  }

  Quaternion& operator*=(Quaternion q) { return *this = *this * q; }

  constexpr Quaternion inverse() const {
    return unit_ == Unit::One ? *this : Quaternion{unit_, !negative_};
  }

  friend constexpr bool operator==(Quaternion, Quaternion) = default;

  std::string str() const {
    static constexpr std::string_view kNames[] = {"1", "i", "j", "k"};
    return std::string(negative_ ? "-" : "+") + std::string(kNames[static_cast<int>(unit_)]);
  }

  static std::optional<Quaternion> parse(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
      neg = s.front() == '-';
      s.remove_prefix(1);
    }
    if (s == "1") return Quaternion{Unit::One, neg};
    if (s == "i") return Quaternion{Unit::I, neg};
    if (s == "j") return Quaternion{Unit::J, neg};
    if (s == "k") return Quaternion{Unit::K, neg};
    return std::nullopt;
  }

 private:
  Unit unit_ = Unit::One;
  bool negative_ = false;
};

inline Quaternion q_mul(Quaternion p, Quaternion q) { return p * q; }

}  // namespace revpeg
