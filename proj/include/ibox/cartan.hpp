#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ibox {

struct CartanViolation {
  std::string kind;  // shape, diagonal, off-diagonal, zero-pattern, symmetrizer
  int row = -1;
  int col = -1;
  std::string message;
};

class CartanError : public std::invalid_argument {
 public:
  explicit CartanError(std::vector<CartanViolation> report);
  const std::vector<CartanViolation>& report() const { return report_; }

 private:
  std::vector<CartanViolation> report_;
};

// Symmetrizable Cartan matrix with labels for its index set and a
// symmetrizer d satisfying d_i c_ij = d_j c_ji. Construction does not
// validate; use make_cartan() or preset() for checked instances.
class CartanMatrix {
 public:
  CartanMatrix() = default;
  CartanMatrix(std::vector<std::string> labels, std::vector<std::vector<int>> entries, std::vector<int> symmetrizer);

  int rank() const { return static_cast<int>(entries_.size()); }
  int entry(int i, int j) const { return entries_.at(i).at(j); }
  int symmetrizer(int i) const { return symmetrizer_.at(i); }
  const std::vector<std::vector<int>>& entries() const { return entries_; }
  const std::vector<int>& symmetrizer() const { return symmetrizer_; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Index of a label, or nullopt.
  std::optional<int> index_of(std::string_view label) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> entries_;
  std::vector<int> symmetrizer_;
};

// Checks c_ii = 2, c_ij <= 0 off the diagonal, the zero pattern, and the
// symmetrizer relation. An empty report means the matrix is valid.
std::vector<CartanViolation> validate(const CartanMatrix& m);

// Least positive integer symmetrizer (gcd 1 on every connected component),
// or nullopt when the divisibility system has no positive solution.
std::optional<std::vector<int>> solve_symmetrizer(const std::vector<std::vector<int>>& entries);

// Validated construction; solves for d when it is not supplied.
// Throws CartanError carrying the violation report.
CartanMatrix make_cartan(std::vector<std::string> labels, std::vector<std::vector<int>> entries,
                         std::optional<std::vector<int>> symmetrizer = std::nullopt);

// Finite-type presets: A_n, B_n, C_n, D_n, E6, E7, E8, F4, G2 ("B3" or "B_3").
// Labels are "1".."n". Throws std::invalid_argument on unknown names.
CartanMatrix preset(std::string_view name);

}  // namespace ibox
