#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ibox/cartan.hpp"
#include "ibox/exchange.hpp"
#include "ibox/family.hpp"

namespace ibox {

// How the horizontal arrows meet an exchangeable box [x,y].
enum class HorizontalContext {
  BothLeft,        // >>  [x_+,y], [x_-,y] in F
  BothRight,       // <<  [x,y_-], [x,y_+] in F
  SplitLR,         // <>  [x,y_-], [x_-,y] in F
  SplitRL,         // ><  [x_+,y], [x,y_+] in F
  SingletonLeft,   // >   x = y, [x_-,x] in F
  SingletonRight,  // <   x = y, [x,x_+] in F
};

// ">>", "<<", ...
const char* symbol(HorizontalContext c);
// "BOTH_LEFT", ...
const char* name(HorizontalContext c);

// Throws std::invalid_argument for a frozen box or one outside the family,
// ExchangeError when no tag (or more than one) applies.
HorizontalContext horizontal_context(const Family& family, const IBox& box);

// V^in_j / V^out_j read off the matrix column of `box`, one entry per color
// j with c_{i,j} < 0, increasing j. Boxes follow the matrix order.
struct VerticalSets {
  Color color = 0;
  std::vector<IBox> vin;
  std::vector<IBox> vout;
  friend bool operator==(const VerticalSets&, const VerticalSets&) = default;
};
std::vector<VerticalSets> vertical_sets(const ExchangeMatrix& m, const CartanMatrix& cartan, const IBox& box);

// A predicted member with its part: "e"/"o" for the even/odd split,
// "a".."d" for the four classes.
struct LabeledBox {
  IBox box;
  std::string part;
  friend bool operator==(const LabeledBox&, const LabeledBox&) = default;
};

struct ColorReport {
  Color color = 0;
  // Which case of the context applied, e.g. "generic_corners".
  std::string branch;
  std::vector<LabeledBox> vin;
  std::vector<LabeledBox> vout;
  std::optional<Position> z, w, u;
  // x^(k), y^(k) of the corner chain, outermost first.
  std::vector<IBox> corners;
  // Contradictions with the structural claims; empty when all hold.
  std::vector<std::string> diagnostics;
};

struct VerticalReport {
  IBox box;
  HorizontalContext context = HorizontalContext::BothLeft;
  std::vector<ColorReport> colors;
  bool ok() const;
};

// Predicted V^in_j / V^out_j from witnesses and corner scans only; the
// matrix is never consulted. Two descriptions are evaluated per color (the
// set-builder form and the witness/corner construction) and any
// disagreement is recorded as a diagnostic.
VerticalReport classify_vertical(const Family& family, const CartanMatrix& cartan, const IBox& box);

// Boxes of a labeled list, in family order.
std::vector<IBox> plain(const Family& family, const std::vector<LabeledBox>& parts);

// Every "context:branch" the corpus is expected to reach. Branches outside
// this list (e.g. "inapplicable") may occur but are not required.
const std::vector<std::string>& required_branches();
std::string branch_key(HorizontalContext c, const std::string& branch);

}  // namespace ibox
