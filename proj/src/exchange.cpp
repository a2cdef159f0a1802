#include "ibox/exchange.hpp"

#include <algorithm>
#include <sstream>

namespace ibox {

const char* to_string(EntryTag tag) {
  switch (tag) {
    case EntryTag::Horizontal: return "H";
    case EntryTag::A: return "a";
    case EntryTag::B: return "b";
    case EntryTag::C: return "c";
    case EntryTag::D: return "d";
    default: return "-";
  }
}

namespace {

bool chain_lt(std::initializer_list<ExtInt> values) {
  return std::adjacent_find(values.begin(), values.end(), [](ExtInt l, ExtInt r) { return !(l < r); }) ==
         values.end();
}

void require_member(const Family& family, const IBox& b) {
  if (!family.contains(b)) throw std::invalid_argument(b.to_string() + " is not in the family");
}

}  // namespace

VerticalConditions vertical_conditions(const Family& family, const IBox& src, const IBox& dst) {
  require_member(family, src);
  require_member(family, dst);
  const ColorSequence& s = family.seq();
  const Position x = src.x, y = src.y, xp = dst.x, yp = dst.y;
  const ExtInt x_minus = s.prev_same(x);
  const ExtInt y_plus = s.next_same(y);
  const ExtInt xp_minus = s.prev_same(xp);
  const ExtInt yp_plus = s.next_same(yp);
  const bool src_efe_x = family.stored_efe(src) == x;
  const bool dst_efe_y = family.stored_efe(dst) == yp;
  const bool has_x_yplus = family.contains(ExtInt(x), y_plus);
  const bool has_xpminus_yp = family.contains(xp_minus, ExtInt(yp));

  VerticalConditions out;
  out.a = has_x_yplus && src_efe_x && chain_lt({xp_minus, x, xp}) && chain_lt({yp, y_plus, yp_plus});
  out.b = has_x_yplus && dst_efe_y && chain_lt({xp_minus, x}) && chain_lt({y, yp, y_plus, yp_plus});
  out.c = has_xpminus_yp && dst_efe_y && chain_lt({x_minus, xp_minus, x}) && chain_lt({y, yp, y_plus});
  out.d = has_xpminus_yp && src_efe_x && chain_lt({x_minus, xp_minus, x, xp}) && chain_lt({yp, y_plus});
  return out;
}

PositiveEntry positive_entry(const Family& family, const CartanMatrix& cartan, const IBox& src, const IBox& dst) {
  require_member(family, src);
  require_member(family, dst);
  const ColorSequence& s = family.seq();
  if ((src.x == dst.x && s.prev_same(src.y) == dst.y) || (src.y == dst.y && s.prev_same(src.x) == dst.x)) {
    return {1, EntryTag::Horizontal};
  }
  const int c = cartan.entry(s.color(src), s.color(dst));
  if (c >= 0) return {};
  const VerticalConditions v = vertical_conditions(family, src, dst);
  if (v.a) return {-c, EntryTag::A};
  if (v.b) return {-c, EntryTag::B};
  if (v.c) return {-c, EntryTag::C};
  if (v.d) return {-c, EntryTag::D};
  return {};
}

ExchangeMatrix::ExchangeMatrix(std::vector<IBox> boxes, std::vector<Color> colors, std::vector<int> d,
                               std::vector<bool> frozen, std::vector<int> full)
    : boxes_(std::move(boxes)), colors_(std::move(colors)), d_(std::move(d)), frozen_(std::move(frozen)),
      full_(std::move(full)) {
  const std::size_t n = boxes_.size();
  if (colors_.size() != n || d_.size() != n || frozen_.size() != n || full_.size() != n * n) {
    throw std::invalid_argument("ExchangeMatrix: inconsistent dimensions");
  }
  for (std::size_t idx = 0; idx < n; ++idx) {
    if (!frozen_[idx]) exchangeable_.push_back(idx);
  }
}

std::optional<std::size_t> ExchangeMatrix::index_of(const IBox& b) const {
  const auto it = std::find(boxes_.begin(), boxes_.end(), b);
  if (it == boxes_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - boxes_.begin());
}

int ExchangeMatrix::at(const IBox& row, const IBox& col) const {
  const auto r = index_of(row);
  const auto c = index_of(col);
  if (!r || !c) throw std::invalid_argument("matrix has no entry for (" + row.to_string() + "," + col.to_string() + ")");
  return at(*r, *c);
}

std::vector<std::vector<int>> ExchangeMatrix::tilde() const {
  std::vector<std::vector<int>> out(size());
  for (std::size_t r = 0; r < size(); ++r) {
    for (std::size_t c : exchangeable_) out[r].push_back(at(r, c));
  }
  return out;
}

ExchangeMatrix exchange_matrix(const Family& family, const CartanMatrix& cartan) {
  const std::size_t n = family.size();
  const ColorSequence& s = family.seq();
  std::vector<int> positive(n * n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (r != c) positive[r * n + c] = positive_entry(family, cartan, family.box(r), family.box(c)).value;
    }
  }
  std::vector<Color> colors(n);
  std::vector<int> d(n);
  std::vector<bool> frozen(n);
  for (std::size_t idx = 0; idx < n; ++idx) {
    colors[idx] = s.color(family.box(idx));
    d[idx] = cartan.symmetrizer(colors[idx]);
    frozen[idx] = family.is_frozen(idx);
  }
  std::vector<int> full(n * n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const int forward = positive[r * n + c];
      const int backward = positive[c * n + r];
      if (forward > 0 && backward > 0) {
        throw ExchangeError("both b" + family.box(r).to_string() + family.box(c).to_string() + " and its transpose are positive");
      }
      if (forward > 0) {
        full[r * n + c] = forward;
      } else if (backward > 0) {
        if ((d[c] * backward) % d[r] != 0) {
          throw ExchangeError("skew entry at " + family.box(r).to_string() + family.box(c).to_string() + " is not integral");
        }
        full[r * n + c] = -(d[c] * backward) / d[r];
      }
    }
  }
  return ExchangeMatrix(std::vector<IBox>(family.boxes().begin(), family.boxes().end()), std::move(colors), std::move(d),
                        std::move(frozen), std::move(full));
}

ExchangeMatrix mutate(const ExchangeMatrix& m, const IBox& k) {
  const auto kidx = m.index_of(k);
  if (!kidx) throw std::invalid_argument("mutation direction " + k.to_string() + " is not a vertex");
  if (m.is_frozen(*kidx)) throw std::invalid_argument("mutation direction " + k.to_string() + " is frozen");
  const std::size_t n = m.size();
  std::vector<int> full(n * n);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      const int b = m.at(s, t);
      if (s == *kidx || t == *kidx) {
        full[s * n + t] = -b;
        continue;
      }
      const int bsk = m.at(s, *kidx);
      const int prod = std::max(bsk * m.at(*kidx, t), 0);
      full[s * n + t] = b + (bsk < 0 ? -prod : prod);
    }
  }
  std::vector<Color> colors(n);
  std::vector<int> d(n);
  std::vector<bool> frozen(n);
  for (std::size_t idx = 0; idx < n; ++idx) {
    colors[idx] = m.color(idx);
    d[idx] = m.d(idx);
    frozen[idx] = m.is_frozen(idx);
  }
  return ExchangeMatrix(m.boxes(), std::move(colors), std::move(d), std::move(frozen), std::move(full));
}

bool is_skew_symmetrizable(const ExchangeMatrix& m) {
  for (std::size_t s = 0; s < m.size(); ++s) {
    for (std::size_t t = 0; t < m.size(); ++t) {
      if (m.d(s) * m.at(s, t) != -m.d(t) * m.at(t, s)) return false;
    }
  }
  return true;
}

Quiver quiver(const ExchangeMatrix& m) {
  Quiver q;
  for (std::size_t idx = 0; idx < m.size(); ++idx) q.vertices.push_back({m.box(idx), m.color(idx), m.is_frozen(idx)});
  for (std::size_t s = 0; s < m.size(); ++s) {
    for (std::size_t t = 0; t < m.size(); ++t) {
      if (m.at(s, t) > 0) q.arrows.push_back({s, t, m.d(s) * m.at(s, t), m.color(s) == m.color(t)});
    }
  }
  return q;
}

std::string to_dot(const Quiver& q, const std::vector<std::string>& labels) {
  auto color_name = [&](Color c) {
    return c < static_cast<Color>(labels.size()) ? labels[c] : std::to_string(c + 1);
  };
  std::ostringstream os;
  os << "digraph Q {\n";
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    const QuiverVertex& vx = q.vertices[v];
    os << "  v" << v << " [label=\"" << vx.box.to_string() << " " << color_name(vx.color) << "\", shape="
       << (vx.frozen ? "box" : "ellipse") << "];\n";
  }
  for (const QuiverArrow& a : q.arrows) {
    os << "  v" << a.source << " -> v" << a.target << " [label=\"" << a.weight << "\""
       << (a.horizontal ? "" : ", style=dashed") << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace ibox
