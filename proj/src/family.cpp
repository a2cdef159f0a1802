#include "ibox/family.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ibox {

Family Family::from_chain(const AdmissibleChain& chain) {
  Family f(chain.seq_ptr(), chain.extent());
  const auto n = static_cast<std::size_t>(chain.length());
  f.boxes_.resize(n);
  for (int k = 1; k <= chain.length(); ++k) {
    f.boxes_[static_cast<std::size_t>(chain.added_position(k) - f.range_.lo)] = chain.box(k);
  }
  f.lookup_.assign(n * n, -1);
  f.frozen_.resize(n);
  for (std::size_t idx = 0; idx < n; ++idx) {
    const IBox& b = f.boxes_[idx];
    f.lookup_[static_cast<std::size_t>(b.x - f.range_.lo) * n + static_cast<std::size_t>(b.y - f.range_.lo)] =
        static_cast<int>(idx);
    f.frozen_[idx] = f.seq().prev_same(b.x) < f.range_.lo && f.range_.hi < f.seq().next_same(b.y);
  }
  return f;
}

Family Family::from_boxes(SequencePtr seq, Interval range, const std::vector<IBox>& boxes) {
  return from_chain(canonical_chain_for_boxes(seq, range, boxes));
}

bool Family::is_frozen(const IBox& b) const {
  const auto idx = index_of(b);
  if (!idx) throw std::invalid_argument(b.to_string() + " is not in the family");
  return frozen_[*idx];
}

std::optional<std::size_t> Family::index_of(const IBox& b) const {
  if (!range_.contains(b.x) || !range_.contains(b.y)) return std::nullopt;
  const auto n = boxes_.size();
  const int idx =
      lookup_[static_cast<std::size_t>(b.x - range_.lo) * n + static_cast<std::size_t>(b.y - range_.lo)];
  if (idx < 0) return std::nullopt;
  return static_cast<std::size_t>(idx);
}

std::optional<std::size_t> Family::index_of(ExtInt x, ExtInt y) const {
  if (!x.is_finite() || !y.is_finite()) return std::nullopt;
  return index_of(IBox{x.value(), y.value()});
}

const IBox& Family::box_with_efe(Position p) const {
  if (!range_.contains(p)) throw std::out_of_range("position " + std::to_string(p) + " outside " + range_.to_string());
  return boxes_[static_cast<std::size_t>(p - range_.lo)];
}

Position Family::stored_efe(const IBox& b) const {
  const auto idx = index_of(b);
  if (!idx) throw std::invalid_argument(b.to_string() + " is not in the family");
  return efe(*idx);
}

std::vector<IBox> Family::sorted_boxes() const {
  std::vector<IBox> out(boxes_.begin(), boxes_.end());
  std::sort(out.begin(), out.end());
  return out;
}

Position effective_end(const Family& family, const IBox& box) {
  if (!family.contains(box)) throw std::invalid_argument(box.to_string() + " is not in the family");
  if (box.x == box.y) return box.x;
  const ColorSequence& s = family.seq();
  const bool left = family.contains(s.next_same(box.x), box.y);
  const bool right = family.contains(box.x, s.prev_same(box.y));
  if (left == right) {
    throw std::invalid_argument("effective end of " + box.to_string() + " is not determined; family is not maximal");
  }
  return left ? box.x : box.y;
}

bool is_commuting(const ColorSequence& seq, std::span<const IBox> boxes) {
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    for (std::size_t j = i + 1; j < boxes.size(); ++j) {
      if (!seq.commutes(boxes[i], boxes[j])) return false;
    }
  }
  return true;
}

bool is_maximal(const ColorSequence& seq, Interval range, std::span<const IBox> boxes) {
  for (const IBox& b : boxes) {
    if (!range.contains(b.x) || !range.contains(b.y) || !seq.is_ibox(b)) return false;
  }
  if (!is_commuting(seq, boxes)) return false;
  const std::set<IBox> members(boxes.begin(), boxes.end());
  for (Position x = range.lo; x <= range.hi; ++x) {
    for (Position y = x; y <= range.hi; ++y) {
      const IBox cand{x, y};
      if (!seq.is_ibox(cand) || members.contains(cand)) continue;
      const bool commutes_all =
          std::all_of(boxes.begin(), boxes.end(), [&](const IBox& b) { return seq.commutes(b, cand); });
      if (commutes_all) return false;
    }
  }
  return true;
}

ColorFiber color_fiber(const Family& family, Color j) {
  if (!family.seq().occurs_in(j, family.range())) {
    throw std::invalid_argument("color " + std::to_string(j) + " does not occur in " + family.range().to_string());
  }
  ColorFiber fiber{j, {}};
  for (const IBox& b : family.boxes()) {
    if (family.seq().color(b) == j) fiber.boxes.push_back(b);
  }
  // Same-colored members are nested, so sorting by length orders by inclusion.
  std::sort(fiber.boxes.begin(), fiber.boxes.end(),
            [](const IBox& l, const IBox& r) { return (l.y - l.x) < (r.y - r.x); });
  return fiber;
}

bool is_right_corner(const Family& family, const IBox& box) {
  if (!family.contains(box)) return false;
  const ColorSequence& s = family.seq();
  return family.contains(box.x, s.prev_same(box.y)) && family.contains(s.prev_same(box.x), box.y);
}

bool is_left_corner(const Family& family, const IBox& box) {
  if (!family.contains(box)) return false;
  const ColorSequence& s = family.seq();
  return family.contains(s.next_same(box.x), box.y) && family.contains(box.x, s.next_same(box.y));
}

Partition partition(const Family& family) {
  Partition p;
  for (std::size_t idx = 0; idx < family.size(); ++idx) {
    (family.is_frozen(idx) ? p.frozen : p.exchangeable).push_back(family.box(idx));
  }
  return p;
}

std::vector<Family> enumerate_maximal_families(const SequencePtr& seq, Interval range) {
  std::vector<Family> out;
  std::set<std::vector<IBox>> seen;
  for (const AdmissibleChain& chain : enumerate_chains(seq, range)) {
    Family f = Family::from_chain(chain);
    if (seen.insert(f.sorted_boxes()).second) out.push_back(std::move(f));
  }
  return out;
}

AdmissibleChain canonical_chain_for_family(const Family& family) {
  return canonical_chain_for_boxes(family.seq_ptr(), family.range(), family.sorted_boxes());
}

}  // namespace ibox
