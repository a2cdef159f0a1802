#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ibox/arrows.hpp"
#include "ibox/json_io.hpp"
#include "ibox/relations.hpp"
#include "ibox/sweep.hpp"

using namespace ibox;

namespace {

struct Options {
  std::string cartan;
  std::string word;
  std::string hat_word;
  std::string star;
  std::string range;
  std::string interval;
  std::string chain;
  std::string family;
  std::string box;
  std::string format = "json";
  int k = 0;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, sep)) out.push_back(tok);
  return out;
}

int parse_int(const std::string& tok, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw UsageError(what + ": '" + tok + "' is not an integer");
  }
}

Interval parse_interval(const std::string& text, const std::string& what) {
  const auto parts = split(text, ':');
  if (parts.size() != 2) throw UsageError(what + ": expected a:b, got '" + text + "'");
  const Interval r{parse_int(parts[0], what), parse_int(parts[1], what)};
  if (r.lo > r.hi) throw UsageError(what + ": empty interval '" + text + "'");
  return r;
}

IBox parse_box(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw UsageError("--box: expected x,y, got '" + text + "'");
  return {parse_int(parts[0], "--box"), parse_int(parts[1], "--box")};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError("'" + path + "': " + e.what());
  }
}

struct Context {
  Options opt;
  std::optional<CartanMatrix> cartan;
  SequencePtr seq;
  Interval range;

  const CartanMatrix& need_cartan() const {
    if (!cartan) throw UsageError("--cartan is required for this command");
    return *cartan;
  }

  Color color_of(const std::string& label) const {
    if (cartan) {
      const auto idx = cartan->index_of(label);
      if (!idx) throw UsageError("color '" + label + "' is not in the Cartan index set");
      return *idx;
    }
    const int v = parse_int(label, "color");
    if (v < 1) throw UsageError("color '" + label + "': colors are 1-based");
    return v - 1;
  }

  std::string label_of(Color c) const {
    if (cartan) return cartan->labels().at(c);
    return std::to_string(c + 1);
  }

  std::vector<std::string> labels() const {
    if (cartan) return cartan->labels();
    std::vector<std::string> out;
    for (Color c = 0; c < seq->color_bound(); ++c) out.push_back(std::to_string(c + 1));
    return out;
  }

  AdmissibleChain chain() const {
    if (opt.chain.empty()) throw UsageError("--chain is required for this command");
    AdmissibleChain c(seq, ChainSpec::parse(opt.chain));
    if (!range.contains(c.extent())) {
      throw ChainError("chain " + c.spec().to_string() + ": envelope escapes range " + range.to_string());
    }
    return c;
  }

  Family family() const {
    if (!opt.family.empty()) return family_from_json(seq, read_json_file(opt.family));
    return Family::from_chain(chain());
  }
};

Context load(const Options& opt) {
  Context ctx{opt, std::nullopt, nullptr, {}};
  if (!opt.cartan.empty()) {
    std::ifstream probe(opt.cartan);
    ctx.cartan = probe ? cartan_from_json(read_json_file(opt.cartan)) : preset(opt.cartan);
  }
  const bool inline_word = !opt.word.empty();
  const bool hat = !opt.hat_word.empty();
  if (inline_word == hat) throw UsageError("give exactly one of --word or --hat-word");
  if (inline_word) {
    std::vector<Color> colors;
    for (const auto& tok : split(opt.word, ',')) colors.push_back(ctx.color_of(tok));
    ctx.seq = make_sequence(1, std::move(colors));
  } else {
    if (opt.range.empty()) throw UsageError("--hat-word needs --range");
    std::vector<Color> word;
    for (const auto& tok : split(opt.hat_word, ',')) word.push_back(ctx.color_of(tok));
    const int rank = ctx.cartan ? ctx.cartan->rank() : *std::max_element(word.begin(), word.end()) + 1;
    std::vector<Color> star(rank);
    if (opt.star.empty()) {
      for (int c = 0; c < rank; ++c) star[c] = c;
    } else {
      const auto toks = split(opt.star, ',');
      if (static_cast<int>(toks.size()) != rank) {
        throw UsageError("--star: expected " + std::to_string(rank) + " images, got " + std::to_string(toks.size()));
      }
      for (int c = 0; c < rank; ++c) star[c] = ctx.color_of(toks[c]);
    }
    const Interval r = parse_interval(opt.range, "--range");
    ctx.seq = std::make_shared<const ColorSequence>(extend_hat_w0(word, star, r));
  }
  ctx.range = opt.interval.empty() ? ctx.seq->support() : parse_interval(opt.interval, "--interval");
  if (!ctx.seq->support().contains(ctx.range)) {
    throw UsageError("--interval " + ctx.range.to_string() + " escapes the sequence support " +
                     ctx.seq->support().to_string());
  }
  return ctx;
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string matrix_text(const ExchangeMatrix& m) {
  std::ostringstream os;
  os << "columns:";
  for (std::size_t c : m.exchangeable()) os << " " << m.box(c).to_string();
  os << "\n";
  const auto rows = m.tilde();
  for (std::size_t r = 0; r < m.size(); ++r) {
    os << m.box(r).to_string() << (m.is_frozen(r) ? "*" : "") << ":";
    for (int v : rows[r]) os << " " << v;
    os << "\n";
  }
  return os.str();
}

int cmd_chain(const Context& ctx) {
  const AdmissibleChain c = ctx.chain();
  Json out;
  out["chain"] = c.spec().to_string();
  Json steps = Json::array();
  for (int k = 1; k <= c.length(); ++k) {
    steps.push_back({{"k", k},
                     {"box", to_json(c.box(k))},
                     {"envelope", Json::array({c.envelope(k).lo, c.envelope(k).hi})},
                     {"efe", c.added_position(k)},
                     {"movable", is_movable(c, k)}});
  }
  out["steps"] = steps;
  if (ctx.opt.format == "text") {
    for (int k = 1; k <= c.length(); ++k) {
      std::cout << k << " " << c.box(k) << " envelope " << c.envelope(k) << " efe " << c.added_position(k)
                << (is_movable(c, k) ? " movable" : "") << "\n";
    }
  } else {
    print(out);
  }
  return 0;
}

int cmd_move(const Context& ctx) {
  const AdmissibleChain c = ctx.chain();
  if (ctx.cartan) {
    const ConsistencyReport r = verify_boxmove_mutation(c, *ctx.cartan, ctx.opt.k);
    if (ctx.opt.format == "text") {
      std::cout << (r.kind == MoveKind::Mutation ? "Mutation " + r.old_box->to_string() + "->" + r.new_box->to_string()
                                                 : std::string("Transposition"))
                << " " << r.chain.to_string() << " -> " << r.moved.to_string() << "\n";
    } else {
      print(to_json(r));
    }
    return r.verdict == Verdict::Pass ? 0 : 1;
  }
  const BoxMove mv = box_move(c, ctx.opt.k);
  Json out;
  out["chain"] = c.spec().to_string();
  out["moved"] = mv.chain.spec().to_string();
  out["k"] = ctx.opt.k;
  out["kind"] = mv.kind == MoveKind::Mutation ? "mutation" : "transposition";
  if (mv.old_box) out["old"] = to_json(*mv.old_box);
  if (mv.new_box) out["new"] = to_json(*mv.new_box);
  if (ctx.opt.format == "text") {
    std::cout << (mv.kind == MoveKind::Mutation ? "Mutation " + mv.old_box->to_string() + "->" + mv.new_box->to_string()
                                                : std::string("Transposition"))
              << " " << c.spec().to_string() << " -> " << mv.chain.spec().to_string() << "\n";
  } else {
    print(out);
  }
  return 0;
}

Json analyze_json(const Context& ctx, const Family& f) {
  const CartanMatrix& cartan = ctx.need_cartan();
  Json out = to_json(f);
  Json colors = Json::array();
  for (const IBox& b : f.boxes()) colors.push_back(ctx.label_of(f.seq().color(b)));
  out["colors"] = colors;
  const ExchangeMatrix m = exchange_matrix(f, cartan);
  out["matrix"] = to_json(m);
  Json reports = Json::array();
  for (std::size_t idx : m.exchangeable()) reports.push_back(to_json(classify_vertical(f, cartan, m.box(idx)), cartan));
  out["vertical"] = reports;
  return out;
}

int cmd_analyze(const Context& ctx) {
  const Family f = ctx.family();
  const CartanMatrix& cartan = ctx.need_cartan();
  if (ctx.opt.format == "dot") {
    std::cout << to_dot(quiver(exchange_matrix(f, cartan)), ctx.labels());
    return 0;
  }
  if (ctx.opt.format == "text") {
    const ExchangeMatrix m = exchange_matrix(f, cartan);
    for (std::size_t k = 0; k < f.size(); ++k) {
      std::cout << f.box(k) << " color " << ctx.label_of(m.color(k)) << " efe " << f.efe(k)
                << (f.is_frozen(k) ? " frozen" : "") << "\n";
    }
    std::cout << matrix_text(m);
    return 0;
  }
  print(analyze_json(ctx, f));
  return 0;
}

int cmd_matrix(const Context& ctx) {
  const ExchangeMatrix m = exchange_matrix(ctx.family(), ctx.need_cartan());
  if (ctx.opt.format == "text") {
    std::cout << matrix_text(m);
  } else {
    print(to_json(m));
  }
  return 0;
}

int cmd_quiver(const Context& ctx) {
  const ExchangeMatrix m = exchange_matrix(ctx.family(), ctx.need_cartan());
  const Quiver q = quiver(m);
  if (ctx.opt.format == "json") {
    Json out;
    Json vs = Json::array(), as = Json::array();
    for (const QuiverVertex& v : q.vertices) {
      vs.push_back({{"box", to_json(v.box)}, {"color", ctx.label_of(v.color)}, {"frozen", v.frozen}});
    }
    for (const QuiverArrow& a : q.arrows) {
      as.push_back({{"source", to_json(q.vertices[a.source].box)},
                    {"target", to_json(q.vertices[a.target].box)},
                    {"weight", a.weight},
                    {"horizontal", a.horizontal}});
    }
    out["vertices"] = vs;
    out["arrows"] = as;
    print(out);
  } else {
    std::cout << to_dot(q, ctx.labels());
  }
  return 0;
}

int cmd_mutate(const Context& ctx) {
  if (ctx.opt.box.empty()) throw UsageError("--box is required for mutate");
  const ExchangeMatrix m = mutate(exchange_matrix(ctx.family(), ctx.need_cartan()), parse_box(ctx.opt.box));
  if (ctx.opt.format == "text") {
    std::cout << matrix_text(m);
  } else {
    print(to_json(m));
  }
  return 0;
}

int cmd_relations(const Context& ctx) {
  if (ctx.opt.box.empty()) throw UsageError("--box is required for relations");
  const IBox box = parse_box(ctx.opt.box);
  const CartanMatrix& cartan = ctx.need_cartan();
  Json out;
  out["box"] = to_json(box);
  if (!ctx.opt.chain.empty() || !ctx.opt.family.empty()) {
    const Family f = ctx.family();
    const MutationMonomials mm = mutation_monomials(exchange_matrix(f, cartan), box);
    out["mutation"] = {{"in", to_json(mm.in)}, {"out", to_json(mm.out)}};
  }
  if (box.x < box.y) {
    const TSystem ts = t_system(*ctx.seq, cartan, box);
    out["t_system"] = {{"middle", to_json(ts.middle)}, {"left", to_json(ts.left)}, {"right", to_json(ts.right)}};
  }
  if (ctx.opt.format == "text") {
    if (out.contains("mutation")) {
      const MutationMonomials mm = mutation_monomials(exchange_matrix(ctx.family(), cartan), box);
      std::cout << "in: " << mm.in.to_string() << "\nout: " << mm.out.to_string() << "\n";
    }
    if (box.x < box.y) {
      const TSystem ts = t_system(*ctx.seq, cartan, box);
      std::cout << "middle: " << ts.middle.to_string() << "\nleft: " << ts.left.to_string()
                << "\nright: " << ts.right.to_string() << "\n";
    }
  } else {
    print(out);
  }
  return 0;
}

int workers_from_env() {
  const char* v = std::getenv("IBOX_WORKERS");
  if (!v || !*v) return 0;
  return parse_int(v, "IBOX_WORKERS");
}

int cmd_verify(const Context& ctx) {
  const CartanMatrix& cartan = ctx.need_cartan();
  if (!ctx.opt.chain.empty()) {
    const ConsistencyReport r = verify_boxmove_mutation(ctx.chain(), cartan, ctx.opt.k);
    if (ctx.opt.format == "text") {
      std::cout << (r.verdict == Verdict::Pass ? "pass" : "fail: " + r.message) << "\n";
    } else {
      print(to_json(r));
    }
    return r.verdict == Verdict::Pass ? 0 : 1;
  }
  const SweepSummary s = sweep_verify(ctx.seq, cartan, ctx.range, workers_from_env());
  const long bad = s.failures + s.tsystem_mismatches + s.vertical_mismatches + s.structural_failures;
  if (ctx.opt.format == "json") {
    print(to_json(s));
  } else {
    std::cout << s.chains << " chains, " << bad << " failures\n";
    if (!s.first_failure.empty()) std::cout << "first failure: " << s.first_failure << "\n";
  }
  return bad == 0 ? 0 : 1;
}

int cmd_enumerate(const Context& ctx) {
  const auto families = enumerate_maximal_families(ctx.seq, ctx.range);
  if (ctx.opt.format == "text") {
    std::cout << families.size() << " families\n";
    for (const Family& f : families) {
      for (std::size_t k = 0; k < f.size(); ++k) std::cout << (k ? " " : "") << f.box(k);
      std::cout << "\n";
    }
    return 0;
  }
  Json out;
  out["count"] = families.size();
  Json list = Json::array();
  for (const Family& f : families) list.push_back(to_json(f));
  out["families"] = list;
  print(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"i-box families, exchange matrices and box-move verification"};
  app.require_subcommand(1);
  Options opt;

  auto common = [&](CLI::App* sub, const std::string& default_format) {
    opt.format = default_format;
    sub->add_option("--cartan", opt.cartan, "Cartan preset (A2, B3, G2, ...) or JSON file");
    sub->add_option("--word", opt.word, "Colors by label, comma separated, at positions 1..n");
    sub->add_option("--hat-word", opt.hat_word, "Word to extend periodically up to the involution --star");
    sub->add_option("--star", opt.star, "Image of each color label under the involution, in label order");
    sub->add_option("--range", opt.range, "Support a:b of the extended word");
    sub->add_option("--interval", opt.interval, "Interval a:b inside the support (default: all of it)");
    sub->add_option("--format", opt.format, "json | dot | text")->check(CLI::IsMember({"json", "dot", "text"}));
  };
  struct Sub {
    const char* name;
    const char* help;
    int (*run)(const Context&);
    const char* format;
  };
  const std::vector<Sub> subs = {
      {"analyze", "Family, efe, partition, matrix and vertical reports", cmd_analyze, "json"},
      {"chain", "Boxes and envelopes of a chain", cmd_chain, "json"},
      {"move", "Box move at --k", cmd_move, "json"},
      {"matrix", "Seed matrix of a family", cmd_matrix, "json"},
      {"quiver", "Quiver of a family", cmd_quiver, "dot"},
      {"mutate", "Seed matrix mutated at --box", cmd_mutate, "json"},
      {"relations", "Mutation monomials and T-system at --box", cmd_relations, "json"},
      {"verify", "Box-move / mutation consistency (one move or the whole sweep)", cmd_verify, "text"},
      {"enumerate", "All maximal commuting families", cmd_enumerate, "json"},
  };
  std::map<CLI::App*, const Sub*> runners;
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--chain", opt.chain, "Chain x;LR... ");
    sub->add_option("--family", opt.family, "Family JSON file {\"range\":[a,b],\"boxes\":[[x,y],...]}");
    sub->add_option("--k", opt.k, "Box index (1-based)");
    sub->add_option("--box", opt.box, "Box x,y");
    sub->preparse_callback([&opt, f = s.format](std::size_t) { opt.format = f; });
    common(sub, s.format);
    runners[sub] = &s;
  }

  CLI11_PARSE(app, argc, argv);
  try {
    for (const auto& [sub, s] : runners) {
      if (sub->parsed()) return s->run(load(opt));
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CartanError& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const auto& v : e.report()) std::cerr << "  " << v.message << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
