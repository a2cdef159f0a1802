#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ibox/chain.hpp"
#include "ibox/sequence.hpp"

namespace ibox {

// A maximal commuting family of i-boxes on [a,b]. Boxes are kept in the
// canonical order of increasing effective end; since the effective end is
// a bijection onto [a,b], box k of the order has effective end a + k.
class Family {
 public:
  // Effective ends read off the envelopes: efe(c_k) = tc_k \ tc_{k-1}.
  static Family from_chain(const AdmissibleChain& chain);
  // Validates maximality via canonical_chain_for_boxes; throws ChainError.
  static Family from_boxes(SequencePtr seq, Interval range, const std::vector<IBox>& boxes);

  const ColorSequence& seq() const { return *seq_; }
  const SequencePtr& seq_ptr() const { return seq_; }
  Interval range() const { return range_; }
  std::size_t size() const { return boxes_.size(); }

  std::span<const IBox> boxes() const { return boxes_; }
  const IBox& box(std::size_t idx) const { return boxes_.at(idx); }
  Position efe(std::size_t idx) const { return range_.lo + static_cast<Position>(idx); }
  bool is_frozen(std::size_t idx) const { return frozen_.at(idx); }
  bool is_frozen(const IBox& b) const;

  std::optional<std::size_t> index_of(const IBox& b) const;
  std::optional<std::size_t> index_of(ExtInt x, ExtInt y) const;
  bool contains(const IBox& b) const { return index_of(b).has_value(); }
  // Membership of [x, y] for possibly infinite ends; false unless both are
  // finite and the interval is a member.
  bool contains(ExtInt x, ExtInt y) const { return index_of(x, y).has_value(); }

  // The box whose effective end is p.
  const IBox& box_with_efe(Position p) const;
  // Effective end as stored from the realizing chain; throws if b is absent.
  Position stored_efe(const IBox& b) const;

  // Boxes sorted by (x, y); used for set equality and deduplication.
  std::vector<IBox> sorted_boxes() const;

 private:
  Family(SequencePtr seq, Interval range) : seq_(std::move(seq)), range_(range) {}

  SequencePtr seq_;
  Interval range_;
  std::vector<IBox> boxes_;
  std::vector<bool> frozen_;
  // Dense lookup over (x - a, y - a); -1 for absent.
  std::vector<int> lookup_;
};

// Chain-free effective end: x iff x = y or [x_+, y] is a member, y iff
// x = y or [x, y_-] is a member. Throws std::invalid_argument when b is
// absent or the criterion is inconclusive.
Position effective_end(const Family& family, const IBox& box);

bool is_commuting(const ColorSequence& seq, std::span<const IBox> boxes);
// Commuting and no other i-box inside `range` commutes with every member.
bool is_maximal(const ColorSequence& seq, Interval range, std::span<const IBox> boxes);

// Boxes of color j in increasing order; |[x_k,y_k]_phi| = k.
struct ColorFiber {
  Color color = 0;
  std::vector<IBox> boxes;
};
ColorFiber color_fiber(const Family& family, Color j);

// Right corner: [x, y_-] and [x_-, y] are members.
bool is_right_corner(const Family& family, const IBox& box);
// Left corner: [x_+, y] and [x, y_+] are members.
bool is_left_corner(const Family& family, const IBox& box);

struct Partition {
  std::vector<IBox> frozen;
  std::vector<IBox> exchangeable;
};
// Frozen: x_- < a and b < y_+. Both lists follow the canonical order.
Partition partition(const Family& family);

// Distinct maximal families on `range`, one per distinct chain box set,
// in order of the first chain (lexicographic word order) producing them.
std::vector<Family> enumerate_maximal_families(const SequencePtr& seq, Interval range);

AdmissibleChain canonical_chain_for_family(const Family& family);

}  // namespace ibox
