#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ibox/cartan.hpp"
#include "ibox/chain.hpp"
#include "ibox/exchange.hpp"
#include "ibox/family.hpp"

namespace ibox {

// A product of boxes with positive exponents. Factors are kept sorted by
// (x, y) with equal boxes merged, so equality is syntactic. The empty
// monomial is the unit.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::pair<IBox, int>> factors);

  const std::vector<std::pair<IBox, int>>& factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }
  int exponent(const IBox& b) const;
  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::pair<IBox, int>> factors_;
};

struct MutationMonomials {
  Monomial in;   // boxes with b_{s,k} > 0, exponent b_{s,k}
  Monomial out;  // boxes with b_{s,k} < 0, exponent -b_{s,k}
};
// Throws std::invalid_argument for a frozen or unknown box.
MutationMonomials mutation_monomials(const ExchangeMatrix& m, const IBox& box);

struct TSystem {
  Monomial middle;  // [x_+,y] [x,y_-]
  Monomial left;    // prod over j != i of [x(j)^+, y(j)^-]^{-c_{j,i}}
  Monomial right;   // [x_+,y_-] [x,y], the first factor omitted when empty
};
// Throws std::invalid_argument unless [x,y] is an i-box with x < y.
TSystem t_system(const ColorSequence& seq, const CartanMatrix& cartan, const IBox& box);

enum class Verdict { Pass, Fail };

// Which side of the envelope the mutated box sits on, for the T-system check.
enum class TSystemSide { None, DropLeft, DropRight };  // [x_+,y] resp. [x,y_-]

struct MismatchCell {
  IBox row;
  IBox col;
  int expected = 0;  // entry of the mutated matrix
  int actual = 0;    // entry of the matrix of the moved chain
};

struct ConsistencyReport {
  ChainSpec chain;
  ChainSpec moved;
  int k0 = 0;
  MoveKind kind = MoveKind::Transposition;
  std::optional<IBox> old_box, new_box;
  ExchangeMatrix before;
  ExchangeMatrix after;
  Verdict verdict = Verdict::Pass;
  std::optional<MismatchCell> mismatch;
  std::string message;  // reason for a failure, empty on pass

  // T-system comparison; meaningful when side != None.
  TSystemSide side = TSystemSide::None;
  bool tsystem_ok = true;
};

// Compares the box move at k0 with matrix mutation. Throws ChainError when
// k0 is not movable.
ConsistencyReport verify_boxmove_mutation(const AdmissibleChain& chain, const CartanMatrix& cartan, int k0);

}  // namespace ibox
