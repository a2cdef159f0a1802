#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ibox/cartan.hpp"
#include "ibox/family.hpp"

namespace ibox {

// Which rule produced a positive entry b_{src,dst}.
enum class EntryTag { None, Horizontal, A, B, C, D };

const char* to_string(EntryTag tag);

struct PositiveEntry {
  int value = 0;
  EntryTag tag = EntryTag::None;
};

// Raised when an input violates a law the construction relies on
// (both directions positive, a non-integral skew entry, ...).
class ExchangeError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Positive part of b_{src,dst}: 1 for a horizontal arrow, -c_{i_src,i_dst}
// when c < 0 and one of the vertical conditions (a)-(d) holds, else 0.
PositiveEntry positive_entry(const Family& family, const CartanMatrix& cartan, const IBox& src, const IBox& dst);

// All four vertical conditions evaluated independently (for diagnostics
// and for checking that at most one ever fires).
struct VerticalConditions {
  bool a = false, b = false, c = false, d = false;
  int count() const { return int(a) + int(b) + int(c) + int(d); }
};
VerticalConditions vertical_conditions(const Family& family, const IBox& src, const IBox& dst);

// The integer matrix on F x F with skew-symmetrizer d_[x,y] = d_{i_x}; the
// seed matrix is its restriction to F x F_ex. Rows and columns follow the
// canonical (effective end) order of the family it was built from.
class ExchangeMatrix {
 public:
  ExchangeMatrix(std::vector<IBox> boxes, std::vector<Color> colors, std::vector<int> d, std::vector<bool> frozen,
                 std::vector<int> full);

  std::size_t size() const { return boxes_.size(); }
  const std::vector<IBox>& boxes() const { return boxes_; }
  const IBox& box(std::size_t idx) const { return boxes_.at(idx); }
  Color color(std::size_t idx) const { return colors_.at(idx); }
  int d(std::size_t idx) const { return d_.at(idx); }
  bool is_frozen(std::size_t idx) const { return frozen_.at(idx); }
  std::optional<std::size_t> index_of(const IBox& b) const;

  // Full F x F entry.
  int at(std::size_t row, std::size_t col) const { return full_[row * boxes_.size() + col]; }
  int at(const IBox& row, const IBox& col) const;

  // Indices of exchangeable boxes, increasing.
  const std::vector<std::size_t>& exchangeable() const { return exchangeable_; }
  // Seed matrix: rows = all boxes, columns = exchangeable boxes.
  std::vector<std::vector<int>> tilde() const;

  friend bool operator==(const ExchangeMatrix&, const ExchangeMatrix&) = default;

 private:
  std::vector<IBox> boxes_;
  std::vector<Color> colors_;
  std::vector<int> d_;
  std::vector<bool> frozen_;
  std::vector<int> full_;
  std::vector<std::size_t> exchangeable_;
};

// Builds the full matrix from positive_entry and the relation
// d_s b_{s,t} = -d_t b_{t,s}. Throws ExchangeError if both directions of a
// pair are positive or a negative entry is not integral.
ExchangeMatrix exchange_matrix(const Family& family, const CartanMatrix& cartan);

// Fomin-Zelevinsky mutation in direction k (an exchangeable box), applied
// to the full matrix. Throws std::invalid_argument for frozen or unknown k.
ExchangeMatrix mutate(const ExchangeMatrix& m, const IBox& k);

// d_s b_{s,t} = -d_t b_{t,s} on every cell.
bool is_skew_symmetrizable(const ExchangeMatrix& m);

struct QuiverVertex {
  IBox box;
  Color color = 0;
  bool frozen = false;
};

struct QuiverArrow {
  std::size_t source = 0;
  std::size_t target = 0;
  int weight = 0;
  bool horizontal = false;  // same color at both ends
};

struct Quiver {
  std::vector<QuiverVertex> vertices;
  std::vector<QuiverArrow> arrows;  // sorted by (source, target)
};

// Arrow s -> t of weight d_s b_{s,t} for every positive entry.
Quiver quiver(const ExchangeMatrix& m);

// Graphviz text. Vertices in canonical order, frozen vertices drawn as
// boxes, weights as edge labels. `labels` maps 0-based colors to names;
// when empty, 1-based numbers are used.
std::string to_dot(const Quiver& q, const std::vector<std::string>& labels = {});

}  // namespace ibox
