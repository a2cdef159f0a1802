#include "ibox/sequence.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ibox {

std::string Interval::to_string() const {
  return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
}

std::string IBox::to_string() const {
  return "[" + std::to_string(x) + "," + std::to_string(y) + "]";
}

std::ostream& operator<<(std::ostream& os, const Interval& v) { return os << v.to_string(); }
std::ostream& operator<<(std::ostream& os, const IBox& b) { return os << b.to_string(); }

ColorSequence::ColorSequence(Position lo, std::vector<Color> colors) : lo_(lo), colors_(std::move(colors)) {
  if (colors_.empty()) throw std::invalid_argument("ColorSequence: empty sequence");
  for (Color c : colors_) {
    if (c < 0) throw std::invalid_argument("ColorSequence: negative color " + std::to_string(c));
    color_bound_ = std::max(color_bound_, c + 1);
  }
  const int n = static_cast<int>(colors_.size());
  next_same_.assign(n, -1);
  prev_same_.assign(n, -1);
  next_color_.assign(static_cast<std::size_t>(color_bound_) * n, -1);
  prev_color_.assign(static_cast<std::size_t>(color_bound_) * n, -1);

  std::vector<int> last(color_bound_, -1);
  for (int k = 0; k < n; ++k) {
    const Color c = colors_[k];
    if (last[c] >= 0) {
      prev_same_[k] = last[c];
      next_same_[last[c]] = k;
    }
    last[c] = k;
    for (Color j = 0; j < color_bound_; ++j) prev_color_[static_cast<std::size_t>(j) * n + k] = last[j];
  }
  std::vector<int> next(color_bound_, -1);
  for (int k = n - 1; k >= 0; --k) {
    next[colors_[k]] = k;
    for (Color j = 0; j < color_bound_; ++j) next_color_[static_cast<std::size_t>(j) * n + k] = next[j];
  }
}

void ColorSequence::check(Position s) const {
  if (!contains(s)) {
    throw std::out_of_range("position " + std::to_string(s) + " outside " + support().to_string());
  }
}

std::size_t ColorSequence::offset(Position s) const {
  check(s);
  return static_cast<std::size_t>(s - lo_);
}

Color ColorSequence::color(Position s) const { return colors_[offset(s)]; }

bool ColorSequence::occurs_in(Color j, Interval range) const {
  if (j < 0 || j >= color_bound_) return false;
  const ExtInt t = next_color(range.lo, j);
  return t.is_finite() && t.value() <= range.hi;
}

ExtInt ColorSequence::next_same(Position s) const {
  const int t = next_same_[offset(s)];
  return t < 0 ? ExtInt::pos_inf() : ExtInt(lo_ + t);
}

ExtInt ColorSequence::prev_same(Position s) const {
  const int t = prev_same_[offset(s)];
  return t < 0 ? ExtInt::neg_inf() : ExtInt(lo_ + t);
}

ExtInt ColorSequence::next_color(Position s, Color j) const {
  const std::size_t k = offset(s);
  if (j < 0) throw std::invalid_argument("negative color " + std::to_string(j));
  if (j >= color_bound_) return ExtInt::pos_inf();
  const int t = next_color_[static_cast<std::size_t>(j) * colors_.size() + k];
  return t < 0 ? ExtInt::pos_inf() : ExtInt(lo_ + t);
}

ExtInt ColorSequence::prev_color(Position s, Color j) const {
  const std::size_t k = offset(s);
  if (j < 0) throw std::invalid_argument("negative color " + std::to_string(j));
  if (j >= color_bound_) return ExtInt::neg_inf();
  const int t = prev_color_[static_cast<std::size_t>(j) * colors_.size() + k];
  return t < 0 ? ExtInt::neg_inf() : ExtInt(lo_ + t);
}

bool ColorSequence::is_ibox(Position x, Position y) const {
  return contains(x) && contains(y) && x <= y && colors_[x - lo_] == colors_[y - lo_];
}

bool ColorSequence::is_ibox(ExtInt x, ExtInt y) const {
  return x.is_finite() && y.is_finite() && is_ibox(x.value(), y.value());
}

IBox ColorSequence::make_box(Position x, Position y) const {
  if (!is_ibox(x, y)) throw std::invalid_argument(IBox{x, y}.to_string() + " is not an i-box");
  return {x, y};
}

std::vector<Position> ColorSequence::phi_positions(const IBox& b) const {
  const IBox box = make_box(b.x, b.y);
  std::vector<Position> out;
  for (ExtInt s = box.x; s.is_finite() && s.value() <= box.y; s = next_same(s.value())) out.push_back(s.value());
  return out;
}

IBox ColorSequence::close_left(Position x, Position y) const {
  check(x);
  check(y);
  if (x > y) throw std::invalid_argument("close_left: empty interval " + Interval{x, y}.to_string());
  const ExtInt end = prev_color(y, color(x));
  // end >= x always holds since color(x) occurs at x.
  return {x, end.value()};
}

IBox ColorSequence::close_right(Position x, Position y) const {
  check(x);
  check(y);
  if (x > y) throw std::invalid_argument("close_right: empty interval " + Interval{x, y}.to_string());
  const ExtInt start = next_color(x, color(y));
  return {start.value(), y};
}

bool ColorSequence::commutes(const IBox& b1, const IBox& b2) const {
  auto nested = [this](const IBox& outer, const IBox& inner) {
    return prev_same(outer.x) < inner.x && inner.y < next_same(outer.y);
  };
  return nested(b1, b2) || nested(b2, b1);
}

std::string ColorSequence::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < colors_.size(); ++k) os << (k ? "," : "") << colors_[k];
  os << ") on " << support();
  return os.str();
}

ColorSequence extend_hat_w0(std::span<const Color> word, std::span<const Color> star, Interval range) {
  if (word.empty()) throw std::invalid_argument("extend_hat_w0: empty word");
  if (range.lo > range.hi) throw std::invalid_argument("extend_hat_w0: empty range " + range.to_string());
  const auto n = static_cast<Color>(star.size());
  for (Color c = 0; c < n; ++c) {
    if (star[c] < 0 || star[c] >= n || star[star[c]] != c) {
      throw std::invalid_argument("extend_hat_w0: star is not an involution at color " + std::to_string(c));
    }
  }
  for (Color c : word) {
    if (c < 0 || c >= n) throw std::invalid_argument("extend_hat_w0: word color " + std::to_string(c) + " outside star domain");
  }
  const auto r = static_cast<Position>(word.size());
  std::vector<Color> colors;
  colors.reserve(range.length());
  for (Position k = range.lo; k <= range.hi; ++k) {
    // k = q * r + m with m in [1, r]; star is applied q times.
    const Position m0 = ((k - 1) % r + r) % r;
    const Position q = (k - 1 - m0) / r;
    Color c = word[m0];
    if (q % 2 != 0) c = star[c];
    colors.push_back(c);
  }
  return ColorSequence(range.lo, std::move(colors));
}

}  // namespace ibox
