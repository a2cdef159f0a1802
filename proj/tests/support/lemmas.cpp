#include "lemmas.hpp"

#include <algorithm>

#include "oracle.hpp"

namespace ibox::testing {

void Tally::check(bool ok, const std::string& what) {
  ++checks;
  if (!ok) {
    ++violations;
    if (first.empty()) first = what;
  }
}

void Tally::merge(const Tally& o) {
  checks += o.checks;
  violations += o.violations;
  if (first.empty()) first = o.first;
}

namespace {

using oracle::next_same;
using oracle::prev_same;

struct View {
  const Family& f;
  const ColorSequence& s;
  explicit View(const Family& fam) : f(fam), s(fam.seq()) {}
  bool has(ExtInt x, ExtInt y) const { return f.contains(x, y); }
  Position efe(const IBox& b) const { return f.stored_efe(b); }
  // Which end is effective; a singleton counts as neither.
  bool x_efe(const IBox& b) const { return b.x < b.y && efe(b) == b.x; }
  bool y_efe(const IBox& b) const { return b.x < b.y && efe(b) == b.y; }
  ExtInt nx(Position p) const { return next_same(s, p); }
  ExtInt px(Position p) const { return prev_same(s, p); }
  std::vector<IBox> boxes() const { return {f.boxes().begin(), f.boxes().end()}; }
  std::string where(const IBox& b) const { return s.to_string() + " F" + f.range().to_string() + " " + b.to_string(); }
  std::string where(const IBox& b, const IBox& c) const { return where(b) + " " + c.to_string(); }
  // Corners in the strict sense: both neighbours are members, no singletons.
  bool right_corner(const IBox& b) const { return b.x < b.y && has(b.x, px(b.y)) && has(px(b.x), b.y); }
  bool left_corner(const IBox& b) const { return b.x < b.y && has(nx(b.x), b.y) && has(b.x, nx(b.y)); }
  std::vector<IBox> fiber(Color j) const {
    std::vector<IBox> out;
    for (const IBox& b : boxes()) {
      if (s.color(b.x) == j) out.push_back(b);
    }
    std::sort(out.begin(), out.end(), [](const IBox& p, const IBox& q) { return p.y - p.x < q.y - q.x; });
    return out;
  }
};

int phi_size(const ColorSequence& s, const IBox& b) {
  int n = 0;
  for (Position p = b.x; p <= b.y; ++p) n += s.color(p) == s.color(b.x);
  return n;
}

}  // namespace

Tally lemma_middle(const Family& f) {
  View v(f);
  Tally t;
  for (const IBox& b : v.boxes()) {
    for (const IBox& c : v.boxes()) {
      if (c.y == b.y && c.x < b.x) {
        for (Position x2 = c.x; x2 <= b.x; ++x2) {
          if (oracle::is_ibox(v.s, x2, b.y)) t.check(v.has(x2, b.y), "middle (i) " + v.where(b, c));
        }
      }
      if (c.x == b.x && b.y < c.y) {
        for (Position y2 = b.y; y2 <= c.y; ++y2) {
          if (oracle::is_ibox(v.s, b.x, y2)) t.check(v.has(b.x, y2), "middle (ii) " + v.where(b, c));
        }
      }
    }
  }
  return t;
}

Tally lemma_fourboxes(const Family& f) {
  View v(f);
  Tally t;
  const Interval r = f.range();
  for (Position s = r.lo; s <= r.hi; ++s) {
    for (Position e = s; e <= r.hi; ++e) {
      int starts = 0, ends = 0;
      for (const IBox& b : v.boxes()) {
        starts += b.x == s && b.y <= e;
        ends += b.y == e && s <= b.x;
      }
      t.check(starts <= 1 || ends <= 1, "fourboxes " + v.where(IBox{s, e}));
    }
  }
  return t;
}

Tally lemma_equicolored(const Family& f) {
  View v(f);
  Tally t;
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (f.is_frozen(k)) continue;
    const IBox& b = f.box(k);
    const bool left = v.has(v.px(b.x), b.y);
    const bool right = v.has(b.x, v.nx(b.y));
    t.check(left != right, "equicolored " + v.where(b));
  }
  return t;
}

Tally lemma_oppefe(const Family& f) {
  View v(f);
  Tally t;
  for (const IBox& b : v.boxes()) {
    if (!v.x_efe(b)) continue;
    for (const IBox& c : v.boxes()) {
      if (!v.y_efe(c)) continue;
      if (c.x < b.x) t.check(b.y < c.y, "oppefe (i) " + v.where(b, c));
      if (c.y < b.y) t.check(b.x < c.x, "oppefe (ii) " + v.where(b, c));
    }
  }
  return t;
}

Tally lemma_ydyp(const Family& f) {
  View v(f);
  Tally t;
  for (const IBox& b : v.boxes()) {
    for (const IBox& c : v.boxes()) {
      if (v.x_efe(b) && v.x_efe(c) && b.x <= c.x) {
        t.check(ExtInt(c.y) < v.nx(b.y), "ydyp (i) " + v.where(b, c));
      }
      if (v.y_efe(b) && v.y_efe(c) && c.y <= b.y) {
        t.check(v.px(b.x) < ExtInt(c.x), "ydyp (ii) " + v.where(b, c));
      }
    }
  }
  return t;
}

Tally lemma_fj(const Family& f) {
  View v(f);
  Tally t;
  const Interval r = f.range();
  for (Color j = 0; j < v.s.color_bound(); ++j) {
    int m = 0;
    for (Position p = r.lo; p <= r.hi; ++p) m += v.s.color(p) == j;
    const std::vector<IBox> fj = v.fiber(j);
    t.check(static_cast<int>(fj.size()) == m, "Fj size " + v.where(IBox{r.lo, r.hi}));
    if (m == 0 || static_cast<int>(fj.size()) != m) continue;
    for (int k = 0; k < m; ++k) {
      const IBox& b = fj[k];
      t.check(phi_size(v.s, b) == k + 1, "Fj (b) " + v.where(b));
      if (k + 1 < m) {
        const IBox& up = fj[k + 1];
        const bool strip_left = v.nx(up.x) == ExtInt(b.x) && up.y == b.y;
        const bool strip_right = up.x == b.x && v.px(up.y) == ExtInt(b.y);
        t.check(strip_left || strip_right, "Fj (c) " + v.where(b, up));
      }
      t.check(f.is_frozen(b) == (k == m - 1), "Fj (d) " + v.where(b));
    }
    const IBox top{oracle::next_color(v.s, r.lo, j).value(), oracle::prev_color(v.s, r.hi, j).value()};
    t.check(fj.back() == top, "Fj (d) top " + v.where(top));
    t.check(color_fiber(f, j).boxes == fj, "Fj enumeration " + v.where(top));
  }
  return t;
}

Tally lemma_corner_segments(const Family& f) {
  View v(f);
  Tally t;
  for (Color j = 0; j < v.s.color_bound(); ++j) {
    const std::vector<IBox> fj = v.fiber(j);
    const int m = static_cast<int>(fj.size());
    auto rc = [&](int k) { return v.right_corner(fj[k]); };
    auto lc = [&](int k) { return v.left_corner(fj[k]); };
    auto x_efe = [&](int k) { return v.efe(fj[k]) == fj[k].x; };
    auto y_efe = [&](int k) { return v.efe(fj[k]) == fj[k].y; };
    for (int p = 0; p < m; ++p) {
      for (int q = p + 1; q < m; ++q) {
        bool plain = true;
        for (int k = p + 1; k < q; ++k) plain = plain && !rc(k) && !lc(k);
        if (!plain) continue;
        const bool frozen_q = q == m - 1;
        // constant left ends with y effective, or constant right ends with x effective
        auto keep_x = [&] {
          bool ok = true;
          for (int k = p + 1; k <= q; ++k) ok = ok && y_efe(k) && fj[k].x == fj[p].x;
          return ok;
        };
        auto keep_y = [&] {
          bool ok = true;
          for (int k = p + 1; k <= q; ++k) ok = ok && x_efe(k) && fj[k].y == fj[p].y;
          return ok;
        };
        const std::string at = v.where(fj[p], fj[q]);
        if ((p == 0 || lc(p)) && rc(q)) t.check(keep_x(), "corner (i) " + at);
        if ((p == 0 || rc(p)) && lc(q)) t.check(keep_y(), "corner (ii) " + at);
        if ((frozen_q || lc(q)) && rc(p)) t.check(keep_y(), "corner (iii) " + at);
        if ((frozen_q || rc(q)) && lc(p)) t.check(keep_x(), "corner (iv) " + at);
      }
    }
  }
  return t;
}

Tally lemma_rightleft(const Family& f) {
  View v(f);
  Tally t;
  for (const IBox& b : v.boxes()) {
    if (v.efe(b) == b.y) {
      int found = 0;
      for (const IBox& c : v.boxes()) {
        if (c.x == b.x && c.y <= b.y && (v.left_corner(c) || c.x == c.y)) ++found;
      }
      t.check(found == 1, "rightleft (i) " + v.where(b));
    }
    if (v.efe(b) == b.x) {
      int found = 0;
      for (const IBox& c : v.boxes()) {
        if (c.y == b.y && c.x >= b.x && (v.right_corner(c) || c.x == c.y)) ++found;
      }
      t.check(found == 1, "rightleft (ii) " + v.where(b));
    }
  }
  return t;
}

std::map<std::string, Tally> all_lemmas(const Family& f) {
  return {{"interpolation", lemma_middle(f)},         {"four-box exclusion", lemma_fourboxes(f)},
          {"neighbor existence", lemma_equicolored(f)}, {"opposite-efe ordering", lemma_oppefe(f)},
          {"bound", lemma_ydyp(f)},                     {"fiber structure", lemma_fj(f)},
          {"corner segments", lemma_corner_segments(f)}, {"corner uniqueness", lemma_rightleft(f)}};
}

}  // namespace ibox::testing
