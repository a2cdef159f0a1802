#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ibox/sequence.hpp"

namespace ibox {

// Direction in which an envelope grows: L prepends a position, R appends one.
enum class Step : char { L = 'L', R = 'R' };

// A start position and an L/R word of length l-1; the minimal faithful
// description of an admissible chain.
struct ChainSpec {
  Position start = 0;
  std::vector<Step> word;

  int length() const { return static_cast<int>(word.size()) + 1; }
  // Extent of the chain: [start - #L, start + #R].
  Interval extent() const;

  auto operator<=>(const ChainSpec&) const = default;

  // Text syntax "x;RLLR", or "x" for a chain of length 1.
  std::string to_string() const;
  static ChainSpec parse(std::string_view text);
};

class ChainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class AdmissibleChain {
 public:
  // Builds boxes and envelopes; throws ChainError if an envelope escapes
  // the sequence support.
  AdmissibleChain(SequencePtr seq, ChainSpec spec);

  const ColorSequence& seq() const { return *seq_; }
  const SequencePtr& seq_ptr() const { return seq_; }
  const ChainSpec& spec() const { return spec_; }
  int length() const { return spec_.length(); }
  Interval extent() const { return envelopes_.back(); }

  // 1-based, k = 1..l.
  const IBox& box(int k) const { return boxes_.at(k - 1); }
  const Interval& envelope(int k) const { return envelopes_.at(k - 1); }
  const std::vector<IBox>& boxes() const { return boxes_; }
  const std::vector<Interval>& envelopes() const { return envelopes_; }
  // The position tc_k \ tc_{k-1}.
  Position added_position(int k) const;
  // T_k for k = 1..l-1.
  Step step(int k) const { return spec_.word.at(k - 1); }

 private:
  SequencePtr seq_;
  ChainSpec spec_;
  std::vector<IBox> boxes_;
  std::vector<Interval> envelopes_;
};

// k = 1 or T_{k-1} != T_k, and k < l.
bool is_movable(const AdmissibleChain& chain, int k);

enum class MoveKind { Transposition, Mutation };

struct BoxMove {
  AdmissibleChain chain;
  MoveKind kind;
  // Set for Mutation: c_k before and after the move.
  std::optional<IBox> old_box;
  std::optional<IBox> new_box;
};

// Box move B_k. Throws ChainError when c_k is not movable.
BoxMove box_move(const AdmissibleChain& chain, int k);

// All 2^{l-1} chains with extent `range`, words in lexicographic order
// with L < R.
std::vector<AdmissibleChain> enumerate_chains(const SequencePtr& seq, Interval range);
// The word for index `code` in that order (bit l-2-s of code set means T_{s+1} = R).
ChainSpec chain_spec_for_code(Interval range, unsigned long long code);

// Peels the last box off a maximal commuting family. At each step the box
// [a,b} can be last when it is the only member with a as an end, and {a,b]
// when it is the only member with b as an end; the right end wins a tie.
// Throws ChainError when `boxes` is not a maximal commuting family on `range`.
AdmissibleChain canonical_chain_for_boxes(const SequencePtr& seq, Interval range, const std::vector<IBox>& boxes);

}  // namespace ibox
