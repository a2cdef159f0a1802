#include "ibox/cartan.hpp"

#include <cctype>
#include <numeric>
#include <queue>
#include <utility>

namespace ibox {

namespace {

std::string describe(const std::vector<CartanViolation>& report) {
  std::string msg = "invalid Cartan matrix:";
  for (const auto& v : report) msg += " [" + v.kind + "] " + v.message + ";";
  return msg;
}

struct Rational {
  long long num = 0;
  long long den = 1;
};

Rational reduce(long long num, long long den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long g = std::gcd(num, den);
  return g == 0 ? Rational{num, den} : Rational{num / g, den / g};
}

std::vector<std::vector<int>> identity_block(int n) {
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  return c;
}

void link(std::vector<std::vector<int>>& c, int i, int j, int cij = -1, int cji = -1) {
  c[i][j] = cij;
  c[j][i] = cji;
}

std::vector<std::vector<int>> type_a(int n) {
  auto c = identity_block(n);
  for (int i = 0; i + 1 < n; ++i) link(c, i, i + 1);
  return c;
}

std::vector<std::vector<int>> type_e(int n) {
  // Bourbaki numbering: 1-3-4-5-6(-7-8) with 2 attached to 4.
  auto c = identity_block(n);
  link(c, 0, 2);
  link(c, 1, 3);
  for (int i = 2; i + 1 < n; ++i) link(c, i, i + 1);
  return c;
}

std::pair<char, int> parse_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) {
    throw std::invalid_argument("unknown Cartan type '" + std::string(name) + "'");
  }
  const char family = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  std::string_view digits = name.substr(1);
  if (!digits.empty() && digits[0] == '_') digits.remove_prefix(1);
  if (digits.empty()) throw std::invalid_argument("Cartan type '" + std::string(name) + "' is missing its rank");
  int rank = 0;
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch)) || rank > 1000) {
      throw std::invalid_argument("invalid rank in Cartan type '" + std::string(name) + "'");
    }
    rank = rank * 10 + (ch - '0');
  }
  return {family, rank};
}

}  // namespace

CartanError::CartanError(std::vector<CartanViolation> report)
    : std::invalid_argument(describe(report)), report_(std::move(report)) {}

CartanMatrix::CartanMatrix(std::vector<std::string> labels, std::vector<std::vector<int>> entries,
                           std::vector<int> symmetrizer)
    : labels_(std::move(labels)), entries_(std::move(entries)), symmetrizer_(std::move(symmetrizer)) {}

std::optional<int> CartanMatrix::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::vector<CartanViolation> validate(const CartanMatrix& m) {
  std::vector<CartanViolation> report;
  const int n = m.rank();
  if (n == 0) {
    report.push_back({"shape", -1, -1, "empty index set"});
    return report;
  }
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m.entries()[i].size()) != n) {
      report.push_back({"shape", i, -1, "row " + std::to_string(i) + " has " +
                                            std::to_string(m.entries()[i].size()) + " entries, expected " +
                                            std::to_string(n)});
    }
  }
  if (static_cast<int>(m.labels().size()) != n) {
    report.push_back({"shape", -1, -1, "index has " + std::to_string(m.labels().size()) + " labels for rank " +
                                           std::to_string(n)});
  }
  if (static_cast<int>(m.symmetrizer().size()) != n) {
    report.push_back({"shape", -1, -1, "symmetrizer has " + std::to_string(m.symmetrizer().size()) +
                                           " entries for rank " + std::to_string(n)});
  }
  if (!report.empty()) return report;

  auto cell = [](int i, int j) { return "c[" + std::to_string(i) + "][" + std::to_string(j) + "]"; };
  for (int i = 0; i < n; ++i) {
    if (m.entry(i, i) != 2) {
      report.push_back({"diagonal", i, i, cell(i, i) + " = " + std::to_string(m.entry(i, i)) + ", expected 2"});
    }
    if (m.symmetrizer(i) <= 0) {
      report.push_back({"symmetrizer", i, -1, "d[" + std::to_string(i) + "] = " + std::to_string(m.symmetrizer(i)) +
                                                  " is not positive"});
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (m.entry(i, j) > 0) {
        report.push_back({"off-diagonal", i, j, cell(i, j) + " = " + std::to_string(m.entry(i, j)) + " is positive"});
      }
      if (i < j && ((m.entry(i, j) == 0) != (m.entry(j, i) == 0))) {
        report.push_back({"zero-pattern", i, j, cell(i, j) + " and " + cell(j, i) + " disagree on vanishing"});
      }
      if (i < j && m.symmetrizer(i) * m.entry(i, j) != m.symmetrizer(j) * m.entry(j, i)) {
        report.push_back({"symmetrizer", i, j, "d[" + std::to_string(i) + "]*" + cell(i, j) + " != d[" +
                                                   std::to_string(j) + "]*" + cell(j, i)});
      }
    }
  }
  return report;
}

std::optional<std::vector<int>> solve_symmetrizer(const std::vector<std::vector<int>>& entries) {
  const int n = static_cast<int>(entries.size());
  std::vector<Rational> d(n);
  std::vector<bool> seen(n, false);
  std::vector<int> component(n, -1);
  int components = 0;
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    d[root] = {1, 1};
    seen[root] = true;
    component[root] = components;
    std::queue<int> todo;
    todo.push(root);
    while (!todo.empty()) {
      const int i = todo.front();
      todo.pop();
      for (int j = 0; j < n; ++j) {
        if (j == i || entries[i][j] == 0) continue;
        if (entries[j][i] == 0) return std::nullopt;
        // d_j = d_i c_ij / c_ji
        const Rational want = reduce(d[i].num * entries[i][j], d[i].den * entries[j][i]);
        if (want.num <= 0) return std::nullopt;
        if (!seen[j]) {
          seen[j] = true;
          d[j] = want;
          component[j] = components;
          todo.push(j);
        } else if (want.num != d[j].num || want.den != d[j].den) {
          return std::nullopt;
        }
      }
    }
    ++components;
  }
  std::vector<int> out(n);
  for (int comp = 0; comp < components; ++comp) {
    long long lcm = 1;
    for (int i = 0; i < n; ++i) {
      if (component[i] == comp) lcm = std::lcm(lcm, d[i].den);
    }
    long long g = 0;
    for (int i = 0; i < n; ++i) {
      if (component[i] == comp) g = std::gcd(g, d[i].num * (lcm / d[i].den));
    }
    for (int i = 0; i < n; ++i) {
      if (component[i] == comp) out[i] = static_cast<int>(d[i].num * (lcm / d[i].den) / g);
    }
  }
  return out;
}

CartanMatrix make_cartan(std::vector<std::string> labels, std::vector<std::vector<int>> entries,
                         std::optional<std::vector<int>> symmetrizer) {
  if (!symmetrizer) {
    bool square = !entries.empty();
    for (const auto& row : entries) square = square && row.size() == entries.size();
    if (square) symmetrizer = solve_symmetrizer(entries);
    if (!symmetrizer) {
      // Report structural problems first when there are any.
      CartanMatrix probe(labels, entries, std::vector<int>(entries.size(), 1));
      auto report = validate(probe);
      std::erase_if(report, [](const CartanViolation& v) { return v.kind == "symmetrizer"; });
      report.push_back({"symmetrizer", -1, -1, "no positive integer symmetrizer exists"});
      throw CartanError(std::move(report));
    }
  }
  CartanMatrix m(std::move(labels), std::move(entries), std::move(*symmetrizer));
  auto report = validate(m);
  if (!report.empty()) throw CartanError(std::move(report));
  return m;
}

CartanMatrix preset(std::string_view name) {
  const auto [family, rank] = parse_name(name);
  std::vector<std::vector<int>> c;
  auto bad_rank = [&] {
    return std::invalid_argument("invalid rank " + std::to_string(rank) + " for Cartan type " + std::string(1, family));
  };
  switch (family) {
    case 'A':
      if (rank < 1) throw bad_rank();
      c = type_a(rank);
      break;
    case 'B':
      if (rank < 2) throw bad_rank();
      c = type_a(rank);
      link(c, rank - 2, rank - 1, -2, -1);
      break;
    case 'C':
      if (rank < 2) throw bad_rank();
      c = type_a(rank);
      link(c, rank - 2, rank - 1, -1, -2);
      break;
    case 'D':
      if (rank < 4) throw bad_rank();
      c = identity_block(rank);
      for (int i = 0; i + 2 < rank; ++i) link(c, i, i + 1);
      link(c, rank - 3, rank - 1);
      break;
    case 'E':
      if (rank < 6 || rank > 8) throw bad_rank();
      c = type_e(rank);
      break;
    case 'F':
      if (rank != 4) throw bad_rank();
      c = type_a(4);
      link(c, 1, 2, -2, -1);
      break;
    case 'G':
      if (rank != 2) throw bad_rank();
      c = identity_block(2);
      link(c, 0, 1, -1, -3);
      break;
    default:
      throw std::invalid_argument("unknown Cartan type '" + std::string(name) + "'");
  }
  std::vector<std::string> labels;
  for (int i = 1; i <= rank; ++i) labels.push_back(std::to_string(i));
  return make_cartan(std::move(labels), std::move(c));
}

}  // namespace ibox
