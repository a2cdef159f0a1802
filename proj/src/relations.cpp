#include "ibox/relations.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ibox {

Monomial::Monomial(std::vector<std::pair<IBox, int>> factors) {
  std::map<IBox, int> merged;
  for (const auto& [b, e] : factors) {
    if (e <= 0) throw std::invalid_argument("monomial exponent must be positive");
    merged[b] += e;
  }
  factors_.assign(merged.begin(), merged.end());
}

int Monomial::exponent(const IBox& b) const {
  for (const auto& [box, e] : factors_) {
    if (box == b) return e;
  }
  return 0;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (k) os << " ";
    os << factors_[k].first.to_string();
    if (factors_[k].second != 1) os << "^" << factors_[k].second;
  }
  return os.str();
}

MutationMonomials mutation_monomials(const ExchangeMatrix& m, const IBox& box) {
  const auto col = m.index_of(box);
  if (!col) throw std::invalid_argument(box.to_string() + " is not a vertex of the matrix");
  if (m.is_frozen(*col)) throw std::invalid_argument(box.to_string() + " is frozen");
  std::vector<std::pair<IBox, int>> in, out;
  for (std::size_t r = 0; r < m.size(); ++r) {
    const int b = m.at(r, *col);
    if (b > 0) in.emplace_back(m.box(r), b);
    if (b < 0) out.emplace_back(m.box(r), -b);
  }
  return {Monomial(std::move(in)), Monomial(std::move(out))};
}

TSystem t_system(const ColorSequence& seq, const CartanMatrix& cartan, const IBox& box) {
  if (!seq.is_ibox(box)) throw std::invalid_argument(box.to_string() + " is not an i-box");
  if (box.x == box.y) throw std::invalid_argument("no T-system for the singleton " + box.to_string());
  const Color i = seq.color(box);
  const Position xp = seq.next_same(box.x).value();
  const Position ym = seq.prev_same(box.y).value();

  std::vector<std::pair<IBox, int>> left;
  for (Color j = 0; j < cartan.rank(); ++j) {
    if (j == i || cartan.entry(j, i) >= 0) continue;
    const ExtInt lo = seq.next_color(box.x, j);
    const ExtInt hi = seq.prev_color(box.y, j);
    if (!lo.is_finite() || !hi.is_finite() || hi < lo) continue;
    left.emplace_back(IBox{lo.value(), hi.value()}, -cartan.entry(j, i));
  }
  std::vector<std::pair<IBox, int>> right{{box, 1}};
  if (xp <= ym) right.emplace_back(IBox{xp, ym}, 1);
  return {Monomial({{IBox{xp, box.y}, 1}, {IBox{box.x, ym}, 1}}), Monomial(std::move(left)),
          Monomial(std::move(right))};
}

namespace {

void fail(ConsistencyReport& r, const std::string& why) {
  r.verdict = Verdict::Fail;
  if (r.message.empty()) r.message = why;
}

}  // namespace

ConsistencyReport verify_boxmove_mutation(const AdmissibleChain& chain, const CartanMatrix& cartan, int k0) {
  BoxMove mv = box_move(chain, k0);
  const Family before = Family::from_chain(chain);
  const Family after = Family::from_chain(mv.chain);
  ConsistencyReport r{chain.spec(), mv.chain.spec(), k0, mv.kind, mv.old_box, mv.new_box,
                      exchange_matrix(before, cartan), exchange_matrix(after, cartan), Verdict::Pass, std::nullopt, {},
                      TSystemSide::None, true};

  if (mv.kind == MoveKind::Transposition) {
    if (before.sorted_boxes() != after.sorted_boxes()) {
      fail(r, "transposition changed the family");
    } else if (!(r.before == r.after)) {
      fail(r, "transposition changed the matrix");
    }
    return r;
  }

  const IBox old_box = *mv.old_box;
  const IBox new_box = *mv.new_box;
  const auto old_idx = before.index_of(old_box);
  const auto new_idx = after.index_of(new_box);
  if (!old_idx || !new_idx || before.contains(new_box) || after.contains(old_box)) {
    fail(r, "move does not exchange exactly one box");
    return r;
  }
  if (before.is_frozen(*old_idx) || after.is_frozen(*new_idx)) {
    fail(r, "mutated box " + old_box.to_string() + " is frozen");
    return r;
  }
  // phi: F -> F', identity except old -> new.
  std::vector<std::size_t> phi(before.size());
  for (std::size_t s = 0; s < before.size(); ++s) {
    const IBox& b = before.box(s);
    const auto t = after.index_of(b == old_box ? new_box : b);
    if (!t) {
      fail(r, "box " + b.to_string() + " missing after the move");
      return r;
    }
    if (before.is_frozen(s) != after.is_frozen(*t)) {
      fail(r, "frozen status of " + b.to_string() + " changed");
      return r;
    }
    phi[s] = *t;
  }

  const ExchangeMatrix mu = mutate(r.before, old_box);
  for (std::size_t row = 0; row < before.size() && r.verdict == Verdict::Pass; ++row) {
    for (std::size_t col : r.before.exchangeable()) {
      const int expected = mu.at(row, col);
      const int actual = r.after.at(phi[row], phi[col]);
      if (expected != actual) {
        r.mismatch = MismatchCell{before.box(row), before.box(col), expected, actual};
        fail(r, "cell (" + before.box(row).to_string() + "," + before.box(col).to_string() + "): mutated " +
                    std::to_string(expected) + ", moved " + std::to_string(actual));
        break;
      }
    }
  }

  // The envelope [x,y] that triggered the mutation.
  const Interval env = chain.envelope(k0 + 1);
  const ColorSequence& s = chain.seq();
  const IBox whole{env.lo, env.hi};
  const MutationMonomials mm = mutation_monomials(r.before, old_box);
  const TSystem ts = t_system(s, cartan, whole);
  if (s.next_same(whole.x) == old_box.x && old_box.y == whole.y) {
    r.side = TSystemSide::DropLeft;
    r.tsystem_ok = mm.in == ts.left && mm.out == ts.right;
  } else if (old_box.x == whole.x && s.prev_same(whole.y) == old_box.y) {
    r.side = TSystemSide::DropRight;
    r.tsystem_ok = mm.in == ts.right && mm.out == ts.left;
  }
  return r;
}

}  // namespace ibox
