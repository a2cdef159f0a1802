#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace ibox {

using Position = int;

// Integer extended by -inf and +inf. Only produced by the navigation
// operators on a ColorSequence; never stored inside an IBox.
class ExtInt {
 public:
  enum class Kind : std::uint8_t { NegInf = 0, Finite = 1, PosInf = 2 };

  constexpr ExtInt(Position v) : kind_(Kind::Finite), value_(v) {}  // NOLINT(implicit)

  static constexpr ExtInt neg_inf() { return ExtInt(Kind::NegInf); }
  static constexpr ExtInt pos_inf() { return ExtInt(Kind::PosInf); }

  constexpr bool is_finite() const { return kind_ == Kind::Finite; }
  constexpr bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  constexpr bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  constexpr Kind kind() const { return kind_; }

  Position value() const {
    if (!is_finite()) throw std::logic_error("ExtInt: value() of an infinite sentinel");
    return value_;
  }

  constexpr std::strong_ordering operator<=>(const ExtInt& o) const {
    if (kind_ != o.kind_) return kind_ <=> o.kind_;
    if (kind_ != Kind::Finite) return std::strong_ordering::equal;
    return value_ <=> o.value_;
  }
  constexpr bool operator==(const ExtInt& o) const { return (*this <=> o) == 0; }

  std::string to_string() const {
    switch (kind_) {
      case Kind::NegInf: return "-inf";
      case Kind::PosInf: return "inf";
      default: return std::to_string(value_);
    }
  }

 private:
  constexpr explicit ExtInt(Kind k) : kind_(k), value_(0) {}

  Kind kind_;
  Position value_;
};

inline std::ostream& operator<<(std::ostream& os, const ExtInt& v) { return os << v.to_string(); }

}  // namespace ibox
