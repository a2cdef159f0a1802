#pragma once

#include <compare>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "ibox/ext_int.hpp"

namespace ibox {

// Colors index the rows of a Cartan matrix (0-based).
using Color = int;

// Closed integer interval [lo, hi].
struct Interval {
  Position lo = 0;
  Position hi = 0;

  constexpr Position length() const { return hi - lo + 1; }
  constexpr bool contains(Position s) const { return lo <= s && s <= hi; }
  constexpr bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  constexpr auto operator<=>(const Interval&) const = default;

  std::string to_string() const;
};

// An interval [x, y] whose end points carry the same color.
struct IBox {
  Position x = 0;
  Position y = 0;

  constexpr bool contains(const IBox& o) const { return x <= o.x && o.y <= y; }
  constexpr auto operator<=>(const IBox&) const = default;

  std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, const Interval& v);
std::ostream& operator<<(std::ostream& os, const IBox& b);

// A color at every position of a finite interval. Immutable; the
// navigation tables are built once in the constructor.
class ColorSequence {
 public:
  ColorSequence(Position lo, std::vector<Color> colors);

  Position lo() const { return lo_; }
  Position hi() const { return lo_ + static_cast<Position>(colors_.size()) - 1; }
  Interval support() const { return {lo(), hi()}; }
  std::size_t size() const { return colors_.size(); }
  bool contains(Position s) const { return lo() <= s && s <= hi(); }

  // One past the largest color used.
  int color_bound() const { return color_bound_; }
  std::span<const Color> colors() const { return colors_; }
  Color color(Position s) const;
  Color color(const IBox& b) const { return color(b.x); }
  bool occurs_in(Color j, Interval range) const;

  // s_+ and s_-: next / previous position with the color of s.
  ExtInt next_same(Position s) const;
  ExtInt prev_same(Position s) const;
  // s(j)^+ and s(j)^-: weak inequalities, so both return s when color(s) == j.
  ExtInt next_color(Position s, Color j) const;
  ExtInt prev_color(Position s, Color j) const;

  bool is_ibox(Position x, Position y) const;
  bool is_ibox(const IBox& b) const { return is_ibox(b.x, b.y); }
  // Same test on extended integers; false whenever an end is infinite.
  bool is_ibox(ExtInt x, ExtInt y) const;
  IBox make_box(Position x, Position y) const;

  std::vector<Position> phi_positions(const IBox& b) const;

  // [x, y} = [x, y(i_x)^-] and {x, y] = [x(i_y)^+, y].
  IBox close_left(Position x, Position y) const;
  IBox close_right(Position x, Position y) const;

  bool commutes(const IBox& b1, const IBox& b2) const;

  std::string to_string() const;

 private:
  std::size_t offset(Position s) const;
  void check(Position s) const;

  Position lo_;
  std::vector<Color> colors_;
  int color_bound_ = 0;
  // Offsets into colors_, or -1 for "none".
  std::vector<int> next_same_;
  std::vector<int> prev_same_;
  // next_color_[j * n + k], prev_color_[j * n + k].
  std::vector<int> next_color_;
  std::vector<int> prev_color_;
};

using SequencePtr = std::shared_ptr<const ColorSequence>;

inline SequencePtr make_sequence(Position lo, std::vector<Color> colors) {
  return std::make_shared<const ColorSequence>(lo, std::move(colors));
}

// Periodic-up-to-involution extension of a word w of length r placed at
// positions 1..r: i_{k+r} = star(i_k) for every k. Returns the restriction
// to `range`.
ColorSequence extend_hat_w0(std::span<const Color> word, std::span<const Color> star, Interval range);

}  // namespace ibox
