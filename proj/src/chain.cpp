#include "ibox/chain.hpp"

#include <algorithm>
#include <charconv>

namespace ibox {

Interval ChainSpec::extent() const {
  const auto lefts = static_cast<Position>(std::count(word.begin(), word.end(), Step::L));
  const auto rights = static_cast<Position>(word.size()) - lefts;
  return {start - lefts, start + rights};
}

std::string ChainSpec::to_string() const {
  std::string out = std::to_string(start);
  if (!word.empty()) out += ";";
  for (Step s : word) out.push_back(static_cast<char>(s));
  return out;
}

ChainSpec ChainSpec::parse(std::string_view text) {
  // "x" alone is a chain of length 1
  const auto semi = std::min(text.find(';'), text.size());
  ChainSpec spec;
  const std::string_view head = text.substr(0, semi);
  const auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), spec.start);
  if (ec != std::errc() || ptr != head.data() + head.size() || head.empty()) {
    throw ChainError("chain '" + std::string(text) + "': bad start position '" + std::string(head) + "'");
  }
  for (char ch : text.substr(std::min(semi + 1, text.size()))) {
    if (ch == 'L' || ch == 'l') {
      spec.word.push_back(Step::L);
    } else if (ch == 'R' || ch == 'r') {
      spec.word.push_back(Step::R);
    } else {
      throw ChainError("chain '" + std::string(text) + "': unexpected symbol '" + std::string(1, ch) + "'");
    }
  }
  return spec;
}

AdmissibleChain::AdmissibleChain(SequencePtr seq, ChainSpec spec) : seq_(std::move(seq)), spec_(std::move(spec)) {
  const ColorSequence& s = *seq_;
  const Interval ext = spec_.extent();
  if (!s.support().contains(ext)) {
    throw ChainError("chain " + spec_.to_string() + ": envelope escapes range " + s.support().to_string() +
                     " (extent " + ext.to_string() + ")");
  }
  Interval env{spec_.start, spec_.start};
  boxes_.reserve(spec_.length());
  envelopes_.reserve(spec_.length());
  boxes_.push_back({spec_.start, spec_.start});
  envelopes_.push_back(env);
  for (Step t : spec_.word) {
    if (t == Step::L) {
      --env.lo;
      boxes_.push_back(s.close_left(env.lo, env.hi));
    } else {
      ++env.hi;
      boxes_.push_back(s.close_right(env.lo, env.hi));
    }
    envelopes_.push_back(env);
  }
}

Position AdmissibleChain::added_position(int k) const {
  if (k == 1) return spec_.start;
  return step(k - 1) == Step::L ? envelope(k).lo : envelope(k).hi;
}

bool is_movable(const AdmissibleChain& chain, int k) {
  if (k < 1 || k >= chain.length()) return false;
  return k == 1 || chain.step(k - 1) != chain.step(k);
}

namespace {

Step flip(Step s) { return s == Step::L ? Step::R : Step::L; }

}  // namespace

BoxMove box_move(const AdmissibleChain& chain, int k) {
  if (!is_movable(chain, k)) {
    throw ChainError("chain " + chain.spec().to_string() + ": box " + std::to_string(k) + " is not movable");
  }
  ChainSpec next = chain.spec();
  if (k == 1) next.start += chain.step(1) == Step::R ? 1 : -1;
  if (k >= 2) next.word[k - 2] = flip(next.word[k - 2]);
  next.word[k - 1] = flip(next.word[k - 1]);

  AdmissibleChain moved(chain.seq_ptr(), std::move(next));
  const Interval env = chain.envelope(k + 1);
  if (!chain.seq().is_ibox(env.lo, env.hi)) {
    return BoxMove{std::move(moved), MoveKind::Transposition, std::nullopt, std::nullopt};
  }
  const IBox old_box = chain.box(k);
  const IBox new_box = moved.box(k);
  return BoxMove{std::move(moved), MoveKind::Mutation, old_box, new_box};
}

ChainSpec chain_spec_for_code(Interval range, unsigned long long code) {
  const int steps = range.length() - 1;
  ChainSpec spec;
  spec.word.resize(steps);
  Position lefts = 0;
  for (int s = 0; s < steps; ++s) {
    const bool right = ((code >> (steps - 1 - s)) & 1ULL) != 0;
    spec.word[s] = right ? Step::R : Step::L;
    if (!right) ++lefts;
  }
  spec.start = range.lo + lefts;
  return spec;
}

std::vector<AdmissibleChain> enumerate_chains(const SequencePtr& seq, Interval range) {
  if (range.lo > range.hi) throw ChainError("empty range " + range.to_string());
  if (range.length() > 31) throw ChainError("range " + range.to_string() + " too long to enumerate");
  const unsigned long long count = 1ULL << (range.length() - 1);
  std::vector<AdmissibleChain> out;
  out.reserve(count);
  for (unsigned long long code = 0; code < count; ++code) out.emplace_back(seq, chain_spec_for_code(range, code));
  return out;
}

AdmissibleChain canonical_chain_for_boxes(const SequencePtr& seq, Interval range, const std::vector<IBox>& boxes) {
  const ColorSequence& s = *seq;
  auto fail = [&](const std::string& why) {
    return ChainError("family on " + range.to_string() + " is not a maximal commuting family: " + why);
  };
  if (!s.support().contains(range)) throw fail("range escapes " + s.support().to_string());
  std::vector<IBox> rest(boxes);
  std::sort(rest.begin(), rest.end());
  if (std::adjacent_find(rest.begin(), rest.end()) != rest.end()) throw fail("duplicate boxes");

  std::vector<Step> reversed;
  Interval cur = range;
  while (cur.lo < cur.hi) {
    const IBox left_box = s.close_left(cur.lo, cur.hi);
    const IBox right_box = s.close_right(cur.lo, cur.hi);
    auto count_end = [&](Position p) {
      return std::count_if(rest.begin(), rest.end(), [&](const IBox& b) { return b.x == p || b.y == p; });
    };
    const bool has_left = std::binary_search(rest.begin(), rest.end(), left_box);
    const bool has_right = std::binary_search(rest.begin(), rest.end(), right_box);
    if (has_right && count_end(cur.hi) == 1) {
      reversed.push_back(Step::R);
      rest.erase(std::lower_bound(rest.begin(), rest.end(), right_box));
      --cur.hi;
    } else if (has_left && count_end(cur.lo) == 1) {
      reversed.push_back(Step::L);
      rest.erase(std::lower_bound(rest.begin(), rest.end(), left_box));
      ++cur.lo;
    } else {
      throw fail("no admissible last box on " + cur.to_string());
    }
  }
  if (rest.size() != 1 || rest.front() != IBox{cur.lo, cur.lo}) {
    throw fail("expected exactly the singleton [" + std::to_string(cur.lo) + "," + std::to_string(cur.lo) +
               "] to remain");
  }
  ChainSpec spec{cur.lo, std::vector<Step>(reversed.rbegin(), reversed.rend())};
  AdmissibleChain chain(seq, std::move(spec));
  std::vector<IBox> got = chain.boxes();
  std::sort(got.begin(), got.end());
  std::vector<IBox> want(boxes);
  std::sort(want.begin(), want.end());
  if (got != want) throw fail("reconstructed chain " + chain.spec().to_string() + " has a different box set");
  return chain;
}

}  // namespace ibox
