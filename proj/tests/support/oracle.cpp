#include "oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace ibox::oracle {

ExtInt next_same(const ColorSequence& s, Position p) {
  for (Position q = p + 1; q <= s.hi(); ++q) {
    if (s.color(q) == s.color(p)) return q;
  }
  return ExtInt::pos_inf();
}

ExtInt prev_same(const ColorSequence& s, Position p) {
  for (Position q = p - 1; q >= s.lo(); --q) {
    if (s.color(q) == s.color(p)) return q;
  }
  return ExtInt::neg_inf();
}

ExtInt next_color(const ColorSequence& s, Position p, Color j) {
  for (Position q = p; q <= s.hi(); ++q) {
    if (s.color(q) == j) return q;
  }
  return ExtInt::pos_inf();
}

ExtInt prev_color(const ColorSequence& s, Position p, Color j) {
  for (Position q = p; q >= s.lo(); --q) {
    if (s.color(q) == j) return q;
  }
  return ExtInt::neg_inf();
}

bool is_ibox(const ColorSequence& s, Position x, Position y) {
  return s.lo() <= x && x <= y && y <= s.hi() && s.color(x) == s.color(y);
}

bool commutes(const ColorSequence& s, const IBox& b1, const IBox& b2) {
  auto inside = [&](const IBox& outer, const IBox& inner) {
    return prev_same(s, outer.x) < ExtInt(inner.x) && ExtInt(inner.y) < next_same(s, outer.y);
  };
  return inside(b1, b2) || inside(b2, b1);
}

std::vector<IBox> iboxes(const ColorSequence& s, Interval range) {
  std::vector<IBox> out;
  for (Position x = range.lo; x <= range.hi; ++x) {
    for (Position y = x; y <= range.hi; ++y) {
      if (is_ibox(s, x, y)) out.push_back({x, y});
    }
  }
  return out;
}

namespace {

// Bron-Kerbosch with pivoting on a small graph.
void bron_kerbosch(const std::vector<std::vector<bool>>& adj, std::vector<int> r, std::vector<int> p,
                   std::vector<int> x, std::vector<std::vector<int>>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  int pivot = !p.empty() ? p.front() : x.front();
  std::size_t best = 0;
  for (const auto& cand : {p, x}) {
    for (int u : cand) {
      std::size_t deg = 0;
      for (int v : p) deg += adj[u][v];
      if (deg >= best) best = deg, pivot = u;
    }
  }
  const std::vector<int> todo = [&] {
    std::vector<int> t;
    for (int v : p) {
      if (!adj[pivot][v]) t.push_back(v);
    }
    return t;
  }();
  for (int v : todo) {
    std::vector<int> r2 = r, p2, x2;
    r2.push_back(v);
    for (int u : p) {
      if (adj[v][u]) p2.push_back(u);
    }
    for (int u : x) {
      if (adj[v][u]) x2.push_back(u);
    }
    bron_kerbosch(adj, r2, p2, x2, out);
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace

std::vector<std::vector<IBox>> maximal_families(const ColorSequence& s, Interval range) {
  const std::vector<IBox> all = iboxes(s, range);
  const int n = static_cast<int>(all.size());
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) adj[u][v] = u != v && commutes(s, all[u], all[v]);
  }
  std::vector<int> p(n);
  for (int k = 0; k < n; ++k) p[k] = k;
  std::vector<std::vector<int>> cliques;
  bron_kerbosch(adj, {}, p, {}, cliques);
  std::vector<std::vector<IBox>> out;
  for (const auto& c : cliques) {
    std::vector<IBox> f;
    for (int v : c) f.push_back(all[v]);
    std::sort(f.begin(), f.end());
    out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IBox> extensions(const ColorSequence& s, Interval range, const std::vector<IBox>& boxes) {
  std::vector<IBox> out;
  for (const IBox& c : iboxes(s, range)) {
    if (std::find(boxes.begin(), boxes.end(), c) != boxes.end()) continue;
    if (std::all_of(boxes.begin(), boxes.end(), [&](const IBox& b) { return commutes(s, b, c); })) out.push_back(c);
  }
  return out;
}

bool BoxSet::has(ExtInt x, ExtInt y) const {
  if (!x.is_finite() || !y.is_finite()) return false;
  return boxes.count(IBox{x.value(), y.value()}) > 0;
}

Position BoxSet::efe(const IBox& b) const {
  if (!has(b)) throw std::invalid_argument("efe of a non-member");
  if (b.x == b.y) return b.x;
  const bool left = has(next_same(*seq, b.x), b.y);
  const bool right = has(b.x, prev_same(*seq, b.y));
  if (left == right) throw std::logic_error("efe criterion inconclusive at " + b.to_string());
  return left ? b.x : b.y;
}

bool BoxSet::frozen(const IBox& b) const {
  return prev_same(*seq, b.x) < ExtInt(range.lo) && ExtInt(range.hi) < next_same(*seq, b.y);
}

namespace {

int positive(const BoxSet& f, const CartanMatrix& cartan, const IBox& s, const IBox& t) {
  const ColorSequence& q = *f.seq;
  const Position x = s.x, y = s.y, x2 = t.x, y2 = t.y;
  const ExtInt xm = prev_same(q, x), yp = next_same(q, y), ym = prev_same(q, y);
  const ExtInt x2m = prev_same(q, x2), y2p = next_same(q, y2);
  if ((x == x2 && ExtInt(y2) == ym) || (y == y2 && ExtInt(x2) == xm)) return 1;
  const int c = cartan.entry(q.color(x), q.color(x2));
  if (c >= 0) return 0;
  const bool x_efe = f.efe(s) == x;
  const bool y2_efe = f.efe(t) == y2;
  const ExtInt X = x, Y = y, X2 = x2, Y2 = y2;
  const bool a = f.has(X, yp) && x_efe && x2m < X && X < X2 && Y2 < yp && yp < y2p;
  const bool b = f.has(X, yp) && y2_efe && x2m < X && Y < Y2 && Y2 < yp && yp < y2p;
  const bool cc = f.has(x2m, Y2) && y2_efe && xm < x2m && x2m < X && Y < Y2 && Y2 < yp;
  const bool d = f.has(x2m, Y2) && x_efe && xm < x2m && x2m < X && X < X2 && Y2 < yp;
  return (a || b || cc || d) ? -c : 0;
}

}  // namespace

std::vector<std::vector<int>> matrix(const BoxSet& f, const CartanMatrix& cartan, const std::vector<IBox>& order) {
  const std::size_t n = order.size();
  std::vector<std::vector<int>> b(n, std::vector<int>(n, 0));
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      if (s != t) b[s][t] = positive(f, cartan, order[s], order[t]);
    }
  }
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      if (b[s][t] > 0 && b[t][s] > 0) throw std::logic_error("both directions positive");
      if (b[s][t] > 0) {
        const int ds = cartan.symmetrizer(f.seq->color(order[s].x));
        const int dt = cartan.symmetrizer(f.seq->color(order[t].x));
        if ((ds * b[s][t]) % dt != 0) throw std::logic_error("non-integral skew entry");
        b[t][s] = -(ds * b[s][t]) / dt;
      }
    }
  }
  return b;
}

std::vector<std::vector<int>> mutate(const std::vector<std::vector<int>>& b, std::size_t k) {
  auto out = b;
  for (std::size_t s = 0; s < b.size(); ++s) {
    for (std::size_t t = 0; t < b.size(); ++t) {
      if (s == k || t == k) {
        out[s][t] = -b[s][t];
      } else {
        const int prod = std::max(b[s][k] * b[k][t], 0);
        out[s][t] = b[s][t] + (b[s][k] < 0 ? -prod : prod);
      }
    }
  }
  return out;
}

TSystem t_system(const ColorSequence& s, const CartanMatrix& cartan, const IBox& box) {
  const Color i = s.color(box.x);
  const Position xp = next_same(s, box.x).value();
  const Position ym = prev_same(s, box.y).value();
  TSystem out;
  for (Color j = 0; j < cartan.rank(); ++j) {
    if (j == i || cartan.entry(j, i) >= 0) continue;
    const ExtInt lo = next_color(s, box.x, j), hi = prev_color(s, box.y, j);
    if (lo.is_finite() && hi.is_finite() && lo <= hi) out.left[{lo.value(), hi.value()}] += -cartan.entry(j, i);
  }
  out.right[box] += 1;
  if (xp <= ym) out.right[{xp, ym}] += 1;
  return out;
}

}  // namespace ibox::oracle
