#include "ibox/arrows.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace ibox {

const char* symbol(HorizontalContext c) {
  switch (c) {
    case HorizontalContext::BothLeft: return ">>";
    case HorizontalContext::BothRight: return "<<";
    case HorizontalContext::SplitLR: return "<>";
    case HorizontalContext::SplitRL: return "><";
    case HorizontalContext::SingletonLeft: return ">";
    default: return "<";
  }
}

const char* name(HorizontalContext c) {
  switch (c) {
    case HorizontalContext::BothLeft: return "BOTH_LEFT";
    case HorizontalContext::BothRight: return "BOTH_RIGHT";
    case HorizontalContext::SplitLR: return "SPLIT_LR";
    case HorizontalContext::SplitRL: return "SPLIT_RL";
    case HorizontalContext::SingletonLeft: return "SINGLETON_LEFT";
    default: return "SINGLETON_RIGHT";
  }
}

HorizontalContext horizontal_context(const Family& family, const IBox& box) {
  if (!family.contains(box)) throw std::invalid_argument(box.to_string() + " is not in the family");
  if (family.is_frozen(box)) throw std::invalid_argument(box.to_string() + " is frozen; no horizontal context");
  const ColorSequence& s = family.seq();
  const ExtInt xm = s.prev_same(box.x), xp = s.next_same(box.x);
  const ExtInt ym = s.prev_same(box.y), yp = s.next_same(box.y);
  std::vector<HorizontalContext> hits;
  if (box.x == box.y) {
    if (family.contains(xm, box.x)) hits.push_back(HorizontalContext::SingletonLeft);
    if (family.contains(box.x, xp)) hits.push_back(HorizontalContext::SingletonRight);
  } else {
    const bool in_xp_y = family.contains(xp, box.y);
    const bool in_x_ym = family.contains(box.x, ym);
    const bool in_xm_y = family.contains(xm, box.y);
    const bool in_x_yp = family.contains(box.x, yp);
    if (in_xp_y && in_xm_y) hits.push_back(HorizontalContext::BothLeft);
    if (in_x_ym && in_x_yp) hits.push_back(HorizontalContext::BothRight);
    if (in_x_ym && in_xm_y) hits.push_back(HorizontalContext::SplitLR);
    if (in_xp_y && in_x_yp) hits.push_back(HorizontalContext::SplitRL);
  }
  if (hits.size() != 1) {
    throw ExchangeError("box " + box.to_string() + " has " + std::to_string(hits.size()) + " horizontal contexts");
  }
  return hits.front();
}

std::vector<VerticalSets> vertical_sets(const ExchangeMatrix& m, const CartanMatrix& cartan, const IBox& box) {
  const auto col = m.index_of(box);
  if (!col) throw std::invalid_argument(box.to_string() + " is not a vertex of the matrix");
  if (m.is_frozen(*col)) throw std::invalid_argument(box.to_string() + " is frozen");
  const Color i = m.color(*col);
  std::vector<VerticalSets> out;
  for (Color j = 0; j < cartan.rank(); ++j) {
    if (j == i || cartan.entry(i, j) >= 0) continue;
    VerticalSets v{j, {}, {}};
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (m.color(r) != j) continue;
      if (m.at(r, *col) > 0) v.vin.push_back(m.box(r));
      if (m.at(r, *col) < 0) v.vout.push_back(m.box(r));
    }
    out.push_back(std::move(v));
  }
  return out;
}

bool VerticalReport::ok() const {
  return std::all_of(colors.begin(), colors.end(), [](const ColorReport& c) { return c.diagnostics.empty(); });
}

std::vector<IBox> plain(const Family& family, const std::vector<LabeledBox>& parts) {
  std::vector<IBox> out;
  for (const LabeledBox& p : parts) out.push_back(p.box);
  std::sort(out.begin(), out.end(),
            [&](const IBox& l, const IBox& r) { return *family.index_of(l) < *family.index_of(r); });
  return out;
}

std::string branch_key(HorizontalContext c, const std::string& branch) {
  return std::string(symbol(c)) + ":" + branch;
}

const std::vector<std::string>& required_branches() {
  static const std::vector<std::string> names = {
      ">>:empty", ">>:generic_flat", ">>:generic_corners",
      "<<:empty", "<<:generic_flat", "<<:generic_corners",
      "<>:empty", "<>:inner", "<>:in_family", "<>:generic_point", "<>:generic_corners",
      "><:empty", "><:inner", "><:in_family", "><:generic_point", "><:generic_corners",
      ">:empty", ">:in_family", ">:generic_w", ">:generic_u",
      "<:empty", "<:in_family", "<:generic_w", "<:generic_u",
  };
  return names;
}

namespace {

using Labeled = std::vector<LabeledBox>;

std::string show(const Labeled& parts) {
  std::ostringstream os;
  os << "{";
  for (std::size_t k = 0; k < parts.size(); ++k) os << (k ? " " : "") << parts[k].box.to_string() << parts[k].part;
  os << "}";
  return os.str();
}

bool lt(std::initializer_list<ExtInt> values) {
  return std::adjacent_find(values.begin(), values.end(), [](ExtInt l, ExtInt r) { return !(l < r); }) ==
         values.end();
}

// Everything one color j needs: navigation around [x,y] and the fiber F_j.
class Scope {
 public:
  Scope(const Family& family, const IBox& box, Color j)
      : f_(family), s_(family.seq()), j_(j), x(box.x), y(box.y) {
    x_minus = s_.prev_same(x);
    x_plus = s_.next_same(x);
    y_minus = s_.prev_same(y);
    y_plus = s_.next_same(y);
    xj_minus = s_.prev_color(x, j);
    xj_plus = s_.next_color(x, j);
    yj_minus = s_.prev_color(y, j);
    yj_plus = s_.next_color(y, j);
    p = after(x_minus);
    q = before(y_plus);
    for (const IBox& b : family.boxes()) {
      if (s_.color(b) == j) fiber.push_back(b);
    }
  }

  // s(j)^+ / s(j)^- for an extended s.
  ExtInt after(ExtInt v) const {
    if (v.is_pos_inf()) return v;
    return s_.next_color(v.is_neg_inf() ? s_.lo() : v.value(), j_);
  }
  ExtInt before(ExtInt v) const {
    if (v.is_neg_inf()) return v;
    return s_.prev_color(v.is_pos_inf() ? s_.hi() : v.value(), j_);
  }

  bool in(ExtInt a, ExtInt b) const { return f_.contains(a, b); }
  Position efe(const IBox& b) const { return f_.stored_efe(b); }
  ExtInt ps(Position v) const { return s_.prev_same(v); }
  ExtInt ns(Position v) const { return s_.next_same(v); }
  bool right_corner(const IBox& b) const { return is_right_corner(f_, b); }
  bool left_corner(const IBox& b) const { return is_left_corner(f_, b); }

  Labeled where(const std::string& part, const std::function<bool(const IBox&)>& pred) const {
    Labeled out;
    for (const IBox& b : fiber) {
      if (pred(b)) out.push_back({b, part});
    }
    return out;
  }

  // Member [a,b] of F_j, if any.
  std::optional<IBox> member(ExtInt a, ExtInt b) const {
    if (!in(a, b) || s_.color(a.value()) != j_) return std::nullopt;
    return IBox{a.value(), b.value()};
  }
  // First box of F_j with left (right) end a satisfying pred.
  std::optional<IBox> with_left(ExtInt a, std::function<bool(const IBox&)> pred) const {
    for (const IBox& b : fiber) {
      if (ExtInt(b.x) == a && pred(b)) return b;
    }
    return std::nullopt;
  }
  std::optional<IBox> with_right(ExtInt c, std::function<bool(const IBox&)> pred) const {
    for (const IBox& b : fiber) {
      if (ExtInt(b.y) == c && pred(b)) return b;
    }
    return std::nullopt;
  }
  std::optional<Position> smallest_y(Position x0) const {
    std::optional<Position> best;
    for (const IBox& b : fiber) {
      if (b.x == x0 && (!best || b.y < *best)) best = b.y;
    }
    return best;
  }
  std::optional<Position> largest_x(Position y0) const {
    std::optional<Position> best;
    for (const IBox& b : fiber) {
      if (b.y == y0 && (!best || b.x > *best)) best = b.x;
    }
    return best;
  }
  // Right (or left) corners of F_j between two boxes, outermost first.
  std::vector<IBox> corners_between(bool right, const IBox& inner, bool inner_strict, const IBox& outer,
                                    bool outer_strict) const {
    std::vector<IBox> out;
    for (const IBox& b : fiber) {
      // A singleton next to its neighbor box closes a corner chain too.
      const bool corner = right ? right_corner(b) || (b.x == b.y && in(ps(b.x), b.x))
                                : left_corner(b) || (b.x == b.y && in(b.x, ns(b.x)));
      if (!corner) continue;
      if (!b.contains(inner) || (inner_strict && b == inner)) continue;
      if (!outer.contains(b) || (outer_strict && b == outer)) continue;
      out.push_back(b);
    }
    std::sort(out.begin(), out.end(), [](const IBox& l, const IBox& r) { return l.y - l.x > r.y - r.x; });
    return out;
  }

  const Family& f_;
  const ColorSequence& s_;
  Color j_;
  Position x, y;
  ExtInt x_minus = 0, x_plus = 0, y_minus = 0, y_plus = 0;
  ExtInt xj_minus = 0, xj_plus = 0, yj_minus = 0, yj_plus = 0;
  ExtInt p = 0;  // x_-(j)^+
  ExtInt q = 0;  // y_+(j)^-
  std::vector<IBox> fiber;
};

struct Sides {
  Labeled vin, vout;
};

void add(Labeled& dst, const Labeled& src) { dst.insert(dst.end(), src.begin(), src.end()); }

// --- set-builder descriptions ------------------------------------------------

Sides describe(const Scope& c, HorizontalContext ctx) {
  Sides out;
  const ExtInt x = c.x, y = c.y;
  switch (ctx) {
    case HorizontalContext::BothLeft:
      out.vout = c.where("e", [&](const IBox& b) { return c.right_corner(b) && lt({c.p, b.x}) && ExtInt(b.x) <= c.xj_minus; });
      add(out.vout, c.where("o", [&](const IBox& b) { return ExtInt(b.x) == c.xj_plus && c.in(c.xj_minus, b.y) && lt({c.p, x}); }));
      out.vin = c.where("e", [&](const IBox& b) {
        const bool shape = c.left_corner(b) || (b.x == b.y && c.in(b.x, c.ns(b.x)));
        return shape && lt({c.p, b.x}) && ExtInt(b.x) <= c.xj_minus;
      });
      add(out.vin, c.where("o", [&](const IBox& b) { return ExtInt(b.x) == c.p && c.efe(b) == b.x && lt({c.p, x}); }));
      break;
    case HorizontalContext::BothRight:
      out.vin = c.where("e", [&](const IBox& b) { return c.left_corner(b) && c.yj_plus <= b.y && lt({b.y, c.q}); });
      add(out.vin, c.where("o", [&](const IBox& b) { return ExtInt(b.y) == c.yj_minus && c.in(b.x, c.yj_plus) && lt({y, c.q}); }));
      out.vout = c.where("e", [&](const IBox& b) {
        const bool shape = c.right_corner(b) || (b.x == b.y && c.in(c.ps(b.x), b.x));
        return shape && c.yj_plus <= b.y && lt({b.y, c.q});
      });
      add(out.vout, c.where("o", [&](const IBox& b) { return ExtInt(b.y) == c.q && c.efe(b) == b.y && lt({y, c.q}); }));
      break;
    case HorizontalContext::SplitLR:
    case HorizontalContext::SingletonLeft: {
      // The singleton case is the split case with y = x.
      const bool single = ctx == HorizontalContext::SingletonLeft;
      out.vout = c.where("e", [&](const IBox& b) {
        const bool right = single ? lt({x, b.y}) : c.yj_plus <= b.y;
        return c.right_corner(b) && lt({c.p, b.x}) && ExtInt(b.x) <= c.xj_minus && right;
      });
      add(out.vout, c.where("o", [&](const IBox& b) {
        const bool right = single || c.yj_plus <= b.y;
        return ExtInt(b.x) == c.xj_plus && c.in(c.xj_minus, b.y) && lt({c.p, x}) && right;
      }));
      out.vin = c.where("a", [&](const IBox& b) {
        return c.in(b.x, c.ns(b.y)) && c.efe(b) == b.x && lt({c.x_minus, c.ps(b.x), b.x, x}) &&
               lt({y, b.y, c.ns(b.y), c.y_plus});
      });
      add(out.vin, c.where("b", [&](const IBox& b) {
        return ExtInt(b.y) == c.yj_minus && c.in(b.x, c.yj_plus) && lt({c.p, b.x}) && lt({c.yj_plus, c.y_plus});
      }));
      add(out.vin, c.where("c", [&](const IBox& b) { return ExtInt(b.x) == c.p && ExtInt(b.y) == c.yj_minus; }));
      add(out.vin, c.where("d", [&](const IBox& b) {
        return ExtInt(b.x) == c.p && c.efe(b) == b.x && lt({c.p, x}) && lt({y, b.y});
      }));
      break;
    }
    case HorizontalContext::SplitRL:
    case HorizontalContext::SingletonRight: {
      const bool single = ctx == HorizontalContext::SingletonRight;
      out.vin = c.where("e", [&](const IBox& b) {
        const bool left = single ? lt({b.x, x}) : ExtInt(b.x) <= c.xj_minus;
        return c.left_corner(b) && c.yj_plus <= b.y && lt({b.y, c.q}) && left;
      });
      add(out.vin, c.where("o", [&](const IBox& b) {
        const bool left = single || ExtInt(b.x) <= c.xj_minus;
        return ExtInt(b.y) == c.yj_minus && c.in(b.x, c.yj_plus) && lt({y, c.q}) && left;
      }));
      out.vout = c.where("a", [&](const IBox& b) {
        return c.in(c.ps(b.x), b.y) && c.efe(b) == b.y && lt({y, b.y, c.ns(b.y), c.y_plus}) &&
               lt({c.x_minus, c.ps(b.x), b.x, x});
      });
      add(out.vout, c.where("b", [&](const IBox& b) {
        return ExtInt(b.x) == c.xj_plus && c.in(c.xj_minus, b.y) && lt({b.y, c.q}) && lt({c.x_minus, c.xj_minus});
      }));
      add(out.vout, c.where("c", [&](const IBox& b) { return ExtInt(b.x) == c.xj_plus && ExtInt(b.y) == c.q; }));
      add(out.vout, c.where("d", [&](const IBox& b) {
        return ExtInt(b.y) == c.q && c.efe(b) == b.y && lt({y, c.q}) && lt({b.x, x});
      }));
      break;
    }
  }
  return out;
}

// --- witness / corner constructions -----------------------------------------

class Builder {
 public:
  Builder(const Scope& c, ColorReport& r) : c_(c), r_(r) {}

  void fail(const std::string& what) { r_.diagnostics.push_back(what); }
  void expect(bool cond, const std::string& what) {
    if (!cond) fail(what);
  }
  void in(const IBox& b, const std::string& part) { r_.vin.push_back({b, part}); }
  void out(const IBox& b, const std::string& part) { r_.vout.push_back({b, part}); }
  void in(const std::vector<IBox>& bs, const std::string& part) {
    for (const IBox& b : bs) in(b, part);
  }
  void out(const std::vector<IBox>& bs, const std::string& part) {
    for (const IBox& b : bs) out(b, part);
  }

  // Box with given ends that must be a member; records a diagnostic otherwise.
  std::optional<IBox> need(ExtInt a, ExtInt b, const std::string& what) {
    auto m = c_.member(a, b);
    if (!m) fail(what + " [" + a.to_string() + "," + b.to_string() + "] is not in F_j");
    return m;
  }

  void both_left() {
    const Scope& c = c_;
    if (c.x < c.p) {
      r_.branch = "empty";
      return;
    }
    auto zb = c.with_left(c.p, [&](const IBox& b) { return c.efe(b) == b.x; });
    auto wb = c.with_left(c.xj_minus, [&](const IBox& b) { return c.efe(b) == b.x; });
    if (!zb || !wb) {
      fail("witness [x_-(j)^+,z] or [x(j)^-,w] missing");
      r_.branch = "inapplicable";
      return;
    }
    const Position z = zb->y, w = wb->y;
    r_.z = z;
    r_.w = w;
    expect(w <= z, "w > z");
    in(*zb, "o");
    if (c.xj_plus <= w) out(IBox{c.xj_plus.value(), w}, "o");
    if (w == z) {
      r_.branch = "generic_flat";
      return;
    }
    r_.branch = "generic_corners";
    Position cx = *c.largest_x(z);
    expect(c.p < cx, "x^(1) <= x_-(j)^+");
    Position cy = z;
    for (std::size_t guard = 0; guard <= c.fiber.size(); ++guard) {
      r_.corners.push_back({cx, cy});
      out({cx, cy}, "e");
      const Position v = *c.smallest_y(cx);
      in({cx, v}, "e");
      if (v == w) return;
      if (v < w) break;
      const Position nx = *c.largest_x(v);
      if (nx <= cx) break;
      cx = nx;
      cy = v;
    }
    fail("corner chain did not close at w");
  }

  void both_right() {
    const Scope& c = c_;
    if (c.q < c.y) {
      r_.branch = "empty";
      return;
    }
    auto zb = c.with_right(c.q, [&](const IBox& b) { return c.efe(b) == b.y; });
    auto wb = c.with_right(c.yj_plus, [&](const IBox& b) { return c.efe(b) == b.y; });
    if (!zb || !wb) {
      fail("witness [z,y_+(j)^-] or [w,y(j)^+] missing");
      r_.branch = "inapplicable";
      return;
    }
    const Position z = zb->x, w = wb->x;
    r_.z = z;
    r_.w = w;
    expect(z <= w, "z > w");
    out(*zb, "o");
    if (ExtInt(w) < c.yj_plus) {
      if (auto b = need(w, c.yj_minus, "odd in-box")) in(*b, "o");
    }
    if (z == w) {
      r_.branch = "generic_flat";
      return;
    }
    r_.branch = "generic_corners";
    Position cx = z;
    Position cy = *c.smallest_y(z);
    for (std::size_t guard = 0; guard <= c.fiber.size(); ++guard) {
      r_.corners.push_back({cx, cy});
      in({cx, cy}, "e");
      const Position v = *c.largest_x(cy);
      out({v, cy}, "e");
      if (v == w) return;
      if (v > w) break;
      const Position ny = *c.smallest_y(v);
      if (ny >= cy) break;
      cx = v;
      cy = ny;
    }
    fail("corner chain did not close at w");
  }

  void split_lr() {
    const Scope& c = c_;
    const ExtInt x = c.x, y = c.y;
    if (y < c.p) {
      r_.branch = "empty";
      expect(c.yj_minus < c.p, "x_-(j)^+ <= y(j)^-");
      return;
    }
    if (x < c.p) {
      r_.branch = "inner";
      if (auto b = need(c.p, c.yj_minus, "inner box")) in(*b, "c");
      return;
    }
    if (auto b = c.member(c.p, c.yj_minus)) {
      r_.branch = "in_family";
      in(*b, "c");
      return;
    }
    auto zb = c.with_left(c.p, [&](const IBox& b) { return c.efe(b) == b.x; });
    auto ub = c.with_right(c.yj_plus, [&](const IBox& b) { return c.efe(b) == b.y; });
    if (!zb || !ub) {
      fail("witness [x_-(j)^+,z] or [u,y(j)^+] missing");
      r_.branch = "inapplicable";
      return;
    }
    const Position z = zb->y, u = ub->x;
    r_.z = z;
    r_.u = u;
    expect(lt({y, z, c.y_plus}), "not y < z < y_+");
    expect(lt({c.ps(u), x}), "not u_- < x");
    expect(lt({c.p, u}), "not x_-(j)^+ < u");
    in(*zb, "d");
    if (ExtInt(u) < c.yj_plus) {
      if (auto b = need(u, c.yj_minus, "class (b) box")) in(*b, "b");
    }
    const Position x1 = *c.largest_x(z);
    expect(IBox{x1, z}.contains(*ub) && x1 > zb->x, "[u,y(j)^+] within [x^(1),z] within [x_-(j)^+,z] fails");
    if (x1 == z) {
      r_.branch = "generic_point";
      expect(c.xj_plus == c.yj_plus && c.yj_plus == u && u == z, "x(j)^+ = y(j)^+ = u = z fails");
      out(IBox{z, z}, "o");
      return;
    }
    r_.branch = "generic_corners";
    const auto rc = c.corners_between(true, *ub, false, *zb, false);
    r_.corners = rc;
    if (rc.empty()) {
      fail("no right corners between [u,y(j)^+] and [x_-(j)^+,z]");
      return;
    }
    expect(rc.front().y == z, "y^(1) != z");
    expect(rc.back().x == u, "x^(t) != u");
    expect(c.yj_plus <= rc.back().y, "y^(t) < y(j)^+");
    for (std::size_t k = 0; k + 1 < rc.size(); ++k) {
      expect(ExtInt(rc[k].x) <= c.yj_minus, "x^(k) > y(j)^- before the last corner");
      in({rc[k].x, rc[k + 1].y}, "a");
    }
    for (const IBox& b : rc) out(b, b.x > c.x ? "o" : "e");
  }

  void split_rl() {
    const Scope& c = c_;
    const ExtInt x = c.x, y = c.y;
    if (c.q < x) {
      r_.branch = "empty";
      expect(c.q < c.xj_plus, "y_+(j)^- >= x(j)^+");
      return;
    }
    if (c.q < y) {
      r_.branch = "inner";
      if (auto b = need(c.xj_plus, c.q, "inner box")) out(*b, "c");
      return;
    }
    if (auto b = c.member(c.xj_plus, c.q)) {
      r_.branch = "in_family";
      out(*b, "c");
      return;
    }
    auto zb = c.with_right(c.q, [&](const IBox& b) { return c.efe(b) == b.y; });
    auto ub = c.with_left(c.xj_minus, [&](const IBox& b) { return c.efe(b) == b.x; });
    if (!zb || !ub) {
      fail("witness [z,y_+(j)^-] or [x(j)^-,u] missing");
      r_.branch = "inapplicable";
      return;
    }
    const Position z = zb->x, u = ub->y;
    r_.z = z;
    r_.u = u;
    expect(lt({c.x_minus, z, x}), "not x_- < z < x");
    expect(lt({y, c.ns(u)}), "not y < u_+");
    expect(lt({u, c.q}), "not u < y_+(j)^-");
    out(*zb, "d");
    if (c.xj_minus < u) {
      if (auto b = need(c.xj_plus, u, "class (b) box")) out(*b, "b");
    }
    const Position y1 = *c.smallest_y(z);
    expect(IBox{z, y1}.contains(*ub) && y1 < zb->y, "[x(j)^-,u] within [z,y^(1)] within [z,y_+(j)^-] fails");
    if (y1 == z) {
      r_.branch = "generic_point";
      expect(c.xj_minus == c.yj_minus && c.yj_minus == u && u == z, "x(j)^- = y(j)^- = u = z fails");
      in(IBox{z, z}, "o");
      return;
    }
    r_.branch = "generic_corners";
    const auto lc = c.corners_between(false, *ub, false, *zb, false);
    r_.corners = lc;
    if (lc.empty()) {
      fail("no left corners between [x(j)^-,u] and [z,y_+(j)^-]");
      return;
    }
    expect(lc.front().x == z, "x^(1) != z");
    expect(lc.back().y == u, "y^(t) != u");
    expect(ExtInt(lc.back().x) <= c.xj_minus, "x^(t) > x(j)^-");
    for (std::size_t k = 0; k + 1 < lc.size(); ++k) {
      expect(c.xj_plus <= lc[k].y, "y^(k) < x(j)^+ before the last corner");
      out({lc[k + 1].x, lc[k].y}, "a");
    }
    for (const IBox& b : lc) in(b, b.y < c.y ? "o" : "e");
  }

  void singleton_left() {
    const Scope& c = c_;
    const ExtInt x = c.x;
    if (x < c.p) {
      r_.branch = "empty";
      expect(c.xj_minus < c.p, "x(j)^- >= x_-(j)^+");
      return;
    }
    if (auto b = c.member(c.p, c.xj_minus)) {
      r_.branch = "in_family";
      in(*b, "c");
      return;
    }
    auto zb = c.with_left(c.p, [&](const IBox& b) { return c.efe(b) == b.x; });
    if (!zb) {
      fail("witness [x_-(j)^+,z] missing");
      r_.branch = "inapplicable";
      return;
    }
    const Position z = zb->y;
    r_.z = z;
    expect(lt({x, z, c.x_plus}), "not x < z < x_+");
    in(*zb, "d");
    const IBox point{c.x, c.x};
    const auto rc = c.corners_between(true, point, true, *zb, true);
    const auto lc = c.corners_between(false, point, true, *zb, true);
    r_.corners = rc;
    out(rc, "e");
    in(lc, "a");

    auto wb = c.with_left(c.xj_minus, [&](const IBox& b) { return b.y > b.x && c.efe(b) == b.x; });
    auto ub = c.with_right(c.xj_plus, [&](const IBox& b) { return b.x < b.y && c.efe(b) == b.y; });
    expect(!(wb && ub), "both [x(j)^-,w] and [u,x(j)^+] apply");
    std::vector<IBox> chain_a;
    for (std::size_t k = 0; k + 1 < rc.size(); ++k) chain_a.push_back({rc[k].x, rc[k + 1].y});
    if (wb) {
      r_.branch = "generic_w";
      r_.w = wb->y;
      out(IBox{c.xj_plus.value(), wb->y}, "o");
      if (!rc.empty()) {
        expect(rc.front().y == z, "y^(1) != z");
        chain_a.push_back({rc.back().x, wb->y});
      }
    } else if (ub) {
      r_.branch = "generic_u";
      r_.u = ub->x;
      if (auto b = need(ub->x, c.xj_minus, "class (b) box")) in(*b, "b");
      if (!rc.empty()) {
        expect(rc.front().y == z, "y^(1) != z");
        expect(rc.back().x == ub->x, "x^(t) != u");
      }
    } else {
      r_.branch = "inapplicable";
      return;
    }
    if (!rc.empty()) check_chain(lc, chain_a);
  }

  void singleton_right() {
    const Scope& c = c_;
    const ExtInt x = c.x;
    if (c.q < x) {
      r_.branch = "empty";
      return;
    }
    if (auto b = c.member(c.xj_plus, c.q)) {
      r_.branch = "in_family";
      out(*b, "c");
      return;
    }
    auto zb = c.with_right(c.q, [&](const IBox& b) { return c.efe(b) == b.y; });
    if (!zb) {
      fail("witness [z,x_+(j)^-] missing");
      r_.branch = "inapplicable";
      return;
    }
    const Position z = zb->x;
    r_.z = z;
    expect(lt({c.x_minus, z, x}), "not x_- < z < x");
    out(*zb, "d");
    const IBox point{c.x, c.x};
    const auto lc = c.corners_between(false, point, true, *zb, true);
    const auto rc = c.corners_between(true, point, true, *zb, true);
    r_.corners = lc;
    in(lc, "e");
    out(rc, "a");

    auto wb = c.with_right(c.xj_plus, [&](const IBox& b) { return b.x < b.y && c.efe(b) == b.y; });
    auto ub = c.with_left(c.xj_minus, [&](const IBox& b) { return b.y > b.x && c.efe(b) == b.x; });
    expect(!(wb && ub), "both [w,x(j)^+] and [x(j)^-,u] apply");
    std::vector<IBox> chain_a;
    for (std::size_t k = 0; k + 1 < lc.size(); ++k) chain_a.push_back({lc[k + 1].x, lc[k].y});
    if (wb) {
      r_.branch = "generic_w";
      r_.w = wb->x;
      if (auto b = need(wb->x, c.xj_minus, "odd in-box")) in(*b, "o");
      if (!lc.empty()) {
        expect(lc.front().x == z, "x^(1) != z");
        chain_a.push_back({wb->x, lc.back().y});
      }
    } else if (ub) {
      r_.branch = "generic_u";
      r_.u = ub->y;
      out(IBox{c.xj_plus.value(), ub->y}, "b");
      if (!lc.empty()) {
        expect(lc.front().x == z, "x^(1) != z");
        expect(lc.back().y == ub->y, "y^(t) != u");
      }
    } else {
      r_.branch = "inapplicable";
      return;
    }
    if (!lc.empty()) check_chain(rc, chain_a);
  }

 private:
  void check_chain(std::vector<IBox> filtered, std::vector<IBox> chained) {
    std::sort(filtered.begin(), filtered.end());
    std::sort(chained.begin(), chained.end());
    if (filtered != chained) fail("corner-chain formula disagrees with the corner scan");
  }

  const Scope& c_;
  ColorReport& r_;
};

void canonicalize(const Family& f, Labeled& parts) {
  std::sort(parts.begin(), parts.end(), [&](const LabeledBox& l, const LabeledBox& r) {
    return std::pair(*f.index_of(l.box), l.part) < std::pair(*f.index_of(r.box), r.part);
  });
}

void check_partition(const Labeled& parts, const std::string& side, ColorReport& r) {
  for (std::size_t k = 1; k < parts.size(); ++k) {
    if (parts[k].box == parts[k - 1].box) r.diagnostics.push_back(side + " parts overlap at " + parts[k].box.to_string());
  }
}

}  // namespace

VerticalReport classify_vertical(const Family& family, const CartanMatrix& cartan, const IBox& box) {
  VerticalReport report{box, horizontal_context(family, box), {}};
  const Color i = family.seq().color(box);
  for (Color j = 0; j < cartan.rank(); ++j) {
    if (j == i || cartan.entry(i, j) >= 0) continue;
    const Scope scope(family, box, j);
    ColorReport r;
    r.color = j;
    Builder build(scope, r);
    switch (report.context) {
      case HorizontalContext::BothLeft: build.both_left(); break;
      case HorizontalContext::BothRight: build.both_right(); break;
      case HorizontalContext::SplitLR: build.split_lr(); break;
      case HorizontalContext::SplitRL: build.split_rl(); break;
      case HorizontalContext::SingletonLeft: build.singleton_left(); break;
      case HorizontalContext::SingletonRight: build.singleton_right(); break;
    }
    canonicalize(family, r.vin);
    canonicalize(family, r.vout);
    check_partition(r.vin, "Vin", r);
    check_partition(r.vout, "Vout", r);

    Sides described = describe(scope, report.context);
    canonicalize(family, described.vin);
    canonicalize(family, described.vout);
    check_partition(described.vin, "described Vin", r);
    check_partition(described.vout, "described Vout", r);
    if (r.branch != "inapplicable") {
      if (described.vin != r.vin) r.diagnostics.push_back("Vin: described " + show(described.vin) + " vs built " + show(r.vin));
      if (described.vout != r.vout) {
        r.diagnostics.push_back("Vout: described " + show(described.vout) + " vs built " + show(r.vout));
      }
    } else {
      r.vin = described.vin;
      r.vout = described.vout;
    }
    if (report.context == HorizontalContext::BothLeft || report.context == HorizontalContext::BothRight) {
      for (const Labeled* side : {&described.vin, &described.vout}) {
        if (std::count_if(side->begin(), side->end(), [](const LabeledBox& b) { return b.part == "o"; }) > 1) {
          r.diagnostics.push_back("odd part has more than one box");
        }
      }
    }
    report.colors.push_back(std::move(r));
  }
  return report;
}

}  // namespace ibox
