#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "icc/beta.hpp"
#include "icc/language.hpp"
#include "icc/reproduce.hpp"
#include "io.hpp"

namespace icc::cli {

namespace {

using io::Json;

/// A shift argument: an SFT when one is available, always a sofic view.
struct ShiftArg {
  std::optional<SftPresentation> sft;
  SoficPresentation sofic;
};

ShiftArg from_sft(SftPresentation s) {
  ShiftArg a;
  a.sofic = sofic_from_sft(s);
  a.sft = std::move(s);
  return a;
}

ShiftArg from_sofic(SoficPresentation s) {
  ShiftArg a;
  a.sofic = std::move(s);
  return a;
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw InputError("bad " + what + " '" + s + "'");
}

std::vector<int> parse_int_list(const std::string& s, const std::string& what) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, ',')) out.push_back(parse_int(part, what));
  return out;
}

bool is_file(const std::string& arg) { return std::filesystem::is_regular_file(arg); }

RelationMatrix resolve_relation(const std::string& arg) {
  if (starts_with(arg, "eq:")) return RelationMatrix::eq(parse_int(arg.substr(3), "k"));
  if (starts_with(arg, "neq:")) return RelationMatrix::neq(parse_int(arg.substr(4), "k"));
  if (starts_with(arg, "id:")) return RelationMatrix::identity(static_cast<std::size_t>(parse_int(arg.substr(3), "size")));
  if (starts_with(arg, "ones:")) {
    const auto dims = parse_int_list(arg.substr(5), "dimensions");
    if (dims.size() != 2 || dims[0] < 1 || dims[1] < 1) throw InputError("ones:X,Y needs two positive sizes");
    return RelationMatrix::all_ones(static_cast<std::size_t>(dims[0]), static_cast<std::size_t>(dims[1]));
  }
  if (!is_file(arg)) throw InputError("unknown relation '" + arg + "'");
  return io::relation_from_json(io::load_json(arg));
}

bool looks_like_relation(const std::string& arg) {
  for (const char* p : {"eq:", "neq:", "id:", "ones:"}) {
    if (starts_with(arg, p)) return true;
  }
  if (!is_file(arg)) return false;
  const Json j = io::load_json(arg);
  return j.is_object() && j.contains("x_labels");
}

ShiftArg resolve_shift(const std::string& arg) {
  if (arg == "golden") return from_sft(golden_mean_shift());
  if (arg == "even") return from_sofic(even_shift());
  if (arg == "leq") return from_sft(leq_shift());
  if (starts_with(arg, "full:")) return from_sft(full_shift(Alphabet::digits(parse_int(arg.substr(5), "k"))));
  if (starts_with(arg, "beta:")) return from_sft(beta_shift(parse_int_list(arg.substr(5), "digit")));
  if (starts_with(arg, "diag:")) {
    const ShiftArg t = resolve_shift(arg.substr(5));
    if (t.sft) return from_sft(diagonal_shift(*t.sft));
    return from_sofic(diagonal_shift(t.sofic));
  }
  if (starts_with(arg, "rel:")) return from_sft(relation_shift(resolve_relation(arg.substr(4))));
  if (!is_file(arg)) throw InputError("unknown shift '" + arg + "'");
  const Json j = io::load_json(arg);
  if (io::is_sofic_json(j)) return from_sofic(io::sofic_from_json(j));
  return from_sft(io::sft_from_json(j));
}

TileSet resolve_tiles(const std::string& arg) {
  if (arg == "five") return paper_tileset();
  if (!is_file(arg)) throw InputError("unknown tile set '" + arg + "'");
  return io::tileset_from_json(io::load_json(arg));
}

LanguageOracle resolve_oracle(const std::string& arg) {
  if (arg == "counterexample") return counterexample_oracle();
  return oracle_from_sofic(resolve_shift(arg).sofic);
}

/// Protocol argument: eq:<shift>, or a file holding a protocol (bare or under
/// a "protocol" key as written by `lift`).
struct ProtocolArg {
  std::optional<ProtocolTriple> sft;
  std::optional<SoficProtocol> sofic;
};

ProtocolArg resolve_protocol(const std::string& arg) {
  ProtocolArg out;
  if (starts_with(arg, "eq:")) {
    const ShiftArg t = resolve_shift(arg.substr(3));
    if (t.sft) {
      out.sft = eq_protocol(*t.sft);
    } else {
      out.sofic = eq_protocol(t.sofic);
    }
    return out;
  }
  if (!is_file(arg)) throw InputError("unknown protocol '" + arg + "'");
  Json j = io::load_json(arg);
  if (j.is_object() && j.contains("protocol")) j = j.at("protocol");
  if (io::protocol_is_sofic(j)) {
    out.sofic = io::sofic_protocol_from_json(j);
  } else {
    out.sft = io::protocol_from_json(j);
  }
  return out;
}

Json big_to_json(const BigCount& c) {
  if (c <= BigCount(std::numeric_limits<std::uint64_t>::max())) return c.convert_to<std::uint64_t>();
  return c.str();
}

Json optional_word(const Alphabet& a, const std::optional<Word>& w) {
  if (!w) return nullptr;
  return io::word_to_json(a, *w);
}

std::string csv_field(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

/// Rows are objects sharing the first row's keys.
void write_csv(std::ostream& out, const Json& rows) {
  if (rows.empty()) return;
  bool first = true;
  for (const auto& [key, value] : rows.front().items()) {
    out << (first ? "" : ",") << csv_field(key);
    first = false;
  }
  out << '\n';
  for (const auto& row : rows) {
    first = true;
    for (const auto& [key, value] : rows.front().items()) {
      out << (first ? "" : ",") << (row.contains(key) ? csv_field(row.at(key)) : "");
      first = false;
    }
    out << '\n';
  }
}

struct Output {
  Output(Json d, std::optional<Json> r = std::nullopt, int c = 0) : doc(std::move(d)), rows(std::move(r)), code(c) {}

  Json doc;
  /// CSV view; defaults to the document as a single row.
  std::optional<Json> rows;
  int code = 0;
};

class Runner {
 public:
  explicit Runner(const RunConfig& cfg) : cfg_(cfg) {}

  Output entropy_cmd(const std::string& shift) const {
    const ShiftArg s = resolve_shift(shift);
    const EntropyValue h = s.sft ? entropy(*s.sft, cfg_.tol) : entropy(s.sofic, cfg_.tol);
    return {Json{{"bits", io::to_json(h)}}};
  }

  Output words_cmd(const std::string& shift, std::size_t n, bool list) const {
    const ShiftArg s = resolve_shift(shift);
    Json doc{{"n", n}, {"count", big_to_json(count_words(s.sofic, n, cfg_.guard_states))}};
    if (list) {
      Json words = Json::array();
      const auto ws = s.sft ? s.sft->words(n, cfg_.guard_states) : factors(s.sofic, n, cfg_.guard_states);
      for (const auto& w : ws) words.push_back(io::word_to_json(s.sofic.alphabet(), w));
      doc["words"] = words;
    }
    return {doc};
  }

  Output sofic_eq_cmd(const std::string& a, const std::string& b) const {
    const ShiftArg x = resolve_shift(a), y = resolve_shift(b);
    if (!(x.sofic.alphabet() == y.sofic.alphabet())) throw InputError("shifts are over different alphabets");
    const auto w = distinguishing_word(x.sofic, y.sofic, cfg_.guard_states);
    return {Json{{"equal", !w.has_value()}, {"witness", optional_word(x.sofic.alphabet(), w)}}};
  }

  Output cover_cmd(const std::string& rel, bool exact) const {
    const RelationMatrix r = resolve_relation(rel);
    check_ones(r);
    const CoverResult c = exact ? cover_number_exact(r, cfg_.budget) : cover_number_greedy(r);
    Json doc = io::to_json(c);
    doc["verified"] = !cover_defect(r, c.rectangles).has_value();
    Json row = doc;
    row.erase("rectangles");
    return {doc, Json::array({row})};
  }

  Output frac_cmd(const std::string& rel, double eps) const {
    const RelationMatrix r = resolve_relation(rel);
    check_ones(r);
    const FractionalCover f = fractional_cover(r, eps);
    Json weights = Json::array();
    for (std::size_t i = 0; i < f.rectangles.size(); ++i) {
      if (f.weights[i] > 0) weights.push_back(Json{{"rectangle", io::to_json(f.rectangles[i])}, {"weight", f.weights[i]}});
    }
    Json doc{{"value", f.value},     {"upper", f.upper}, {"bits", f.bits}, {"converged", f.converged},
             {"iterations", f.iterations}, {"weights", weights}};
    Json row = doc;
    row.erase("weights");
    return {doc, Json::array({row})};
  }

  Output amortized_cmd(const std::string& rel, int n_max, double eps) const {
    const RelationMatrix r = resolve_relation(rel);
    check_ones(r);
    const AmortizedSequence seq = amortized_sequence(r, n_max, cfg_.budget, eps, cfg_.guard_ones);
    Json rows = Json::array();
    for (const auto& row : seq.rows) {
      rows.push_back(Json{{"n", row.n},
                          {"upper_bits", row.upper_bits},
                          {"lower_bits", row.lower_bits},
                          {"upper", big_to_json(row.upper)},
                          {"lower", big_to_json(row.lower)},
                          {"exact", row.exact},
                          {"fekete_bits", row.fekete_bits}});
    }
    return {Json{{"fractional_bits", seq.fractional_bits}, {"rows", rows}}, rows};
  }

  Output validate_cmd(const std::string& shift, const std::string& protocol) const {
    const ShiftArg s = resolve_shift(shift);
    const ProtocolArg p = resolve_protocol(protocol);
    const ValidationReport rep = (s.sft && p.sft)
                                     ? protocol_validate(*s.sft, *p.sft, cfg_.tol, cfg_.guard_states)
                                     : protocol_validate(s.sofic, p.sofic ? *p.sofic : to_sofic(*p.sft), cfg_.tol,
                                                         cfg_.guard_states);
    return report_output(rep, s.sofic.alphabet());
  }

  Output lift_cmd(const std::string& rel, int n, const std::string& cover_path) const {
    const RelationMatrix r = resolve_relation(rel);
    std::vector<Rectangle> cover;
    if (cover_path.empty()) {
      const RelationMatrix rn = tensor_power(r, n, cfg_.guard_ones);
      cover = cover_number_exact(rn, cfg_.budget).rectangles;
    } else {
      cover = io::rectangles_from_json(io::load_json(cover_path));
    }
    const ProtocolTriple p = lift_protocol(r, cover, n);
    const SftPresentation s = relation_shift(r);
    const ValidationReport rep = protocol_validate(s, p, cfg_.tol, cfg_.guard_states);
    Json doc{{"n", n},
             {"messages", cover.size()},
             {"entropy_Z", io::to_json(rep.entropy_z)},
             {"valid", rep.valid},
             {"witness", optional_word(s.alphabet(), rep.witness)},
             {"protocol", io::to_json(p)}};
    Json row = doc;
    row.erase("protocol");
    return {doc, Json::array({row}), rep.valid ? 0 : 1};
  }

  Output extract_cmd(const std::string& protocol, const std::string& rel, int n) const {
    const RelationMatrix r = resolve_relation(rel);
    const ProtocolArg p = resolve_protocol(protocol);
    if (!p.sft) throw InputError("extraction needs a protocol of finite type");
    const ExtractedProtocol e = extract_protocol(*p.sft, r, n, cfg_.guard_states);
    Json rects = Json::array();
    for (const auto& rect : e.rectangles) rects.push_back(io::to_json(rect));
    Json doc{{"n", e.n},
             {"r", e.r},
             {"c_n", big_to_json(e.c_n)},
             {"bits", e.bits},
             {"messages", e.messages},
             {"sound", e.sound},
             {"complete", e.complete},
             {"defect", e.defect ? Json(*e.defect) : Json(nullptr)},
             {"rectangles", rects}};
    Json row = doc;
    row.erase("rectangles");
    return {doc, Json::array({row}), e.sound && e.complete ? 0 : 1};
  }

  Output cond_entropy_cmd(const std::string& shift, const std::string& x) const {
    const ShiftArg s = resolve_shift(shift);
    if (!s.sft) throw InputError("conditional entropy needs a shift of finite type");
    if (!s.sft->alphabet().is_product() || s.sft->alphabet().arity() != 2) {
      throw InputError("conditional entropy needs a shift over a product A x B");
    }
    const Alphabet& a = s.sft->alphabet().factors()[0];
    if (!x.empty()) {
      const PeriodicWord p{io::word_from_json(a, Json(x))};
      const EntropyValue h = conditional_entropy(*s.sft, p, std::min(cfg_.tol, 1e-9));
      return {Json{{"x", io::word_to_json(a, p.cycle)}, {"bits", io::to_json(h)}}};
    }
    if (cfg_.max_period < 1) throw InputError("cond-entropy needs --x or --max-period");
    const ConditionalReport rep = conditional_entropy_sup(*s.sft, cfg_.max_period, std::min(cfg_.tol, 1e-9),
                                                          cfg_.guard_states);
    return {Json{{"estimate", rep.estimate},
                 {"argmax", io::word_to_json(a, rep.argmax.cycle)},
                 {"h_Y", io::to_json(rep.h_y)},
                 {"bound_estimate", rep.bound_estimate},
                 {"cycles_checked", rep.cycles_checked},
                 {"max_period", cfg_.max_period}}};
  }

  Output fooling_cmd(const std::string& s_arg, const std::string& f_arg) const {
    if (looks_like_relation(s_arg)) {
      const RelationMatrix r = resolve_relation(s_arg);
      const Json pairs_json = io::load_json(f_arg);
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (const auto& p : pairs_json.is_object() ? pairs_json.at("pairs") : pairs_json) {
        if (!p.is_array() || p.size() != 2) throw InputError("fooling pairs are [row, col]");
        pairs.emplace_back(p[0].get<std::size_t>(), p[1].get<std::size_t>());
      }
      const FoolingCheck c = fooling_check(r, pairs);
      Json violation = nullptr;
      if (c.violation) violation = Json(*c.violation);
      return {Json{{"accepted", c.accepted}, {"bits", c.bits}, {"violation", violation}}, std::nullopt,
              c.accepted ? 0 : 1};
    }
    const ShiftArg s = resolve_shift(s_arg), f = resolve_shift(f_arg);
    const FoolingReport rep = (s.sft && f.sft) ? fooling_certificate(*s.sft, *f.sft, cfg_.tol, cfg_.guard_states)
                                               : fooling_certificate(s.sofic, f.sofic, cfg_.tol, cfg_.guard_states);
    return {Json{{"h_F", io::to_json(rep.h_f)},
                 {"h_cross", io::to_json(rep.h_cross)},
                 {"certified", rep.certified},
                 {"bound", rep.bound}},
            std::nullopt, rep.certified ? 0 : 1};
  }

  Output wang_enum_cmd(const std::string& tiles_arg, int w, int h) const {
    const TileSet tiles = resolve_tiles(tiles_arg);
    const auto patterns = enumerate_patterns(tiles, w, h, cfg_.extend_radius, cfg_.guard_states);
    std::map<std::string, std::size_t> most;
    for (const auto& tok : tiles.symbols().tokens()) most[tok] = 0;
    Json list = Json::array();
    for (const auto& p : patterns) {
      std::map<std::string, std::size_t> count;
      Json rows = Json::array();
      for (const auto& row : p) {
        rows.push_back(io::word_to_json(tiles.symbols(), row));
        for (Symbol s : row) ++count[tiles.symbols().token(s)];
      }
      for (const auto& [tok, c] : count) most[tok] = std::max(most[tok], c);
      list.push_back(rows);
    }
    Json doc{{"w", w},
             {"h", h},
             {"extend_radius", cfg_.extend_radius},
             {"count", patterns.size()},
             {"max_occurrences", most},
             {"patterns", list}};
    Json row{{"w", w}, {"h", h}, {"extend_radius", cfg_.extend_radius}, {"count", patterns.size()}};
    return {doc, Json::array({row})};
  }

  Output wang_strip_cmd(const std::string& tiles_arg, int n) const {
    const TileSet tiles = resolve_tiles(tiles_arg);
    const StripPresentation s = strip_language(tiles, n, cfg_.guard_states);
    Json doc{{"n", n},
             {"columns", s.columns},
             {"states", s.graph.num_states()},
             {"edges", s.graph.edges().size()},
             {"entropy", io::to_json(entropy(s.graph, cfg_.tol))},
             {"presentation", io::to_json(s.graph)}};
    Json row = doc;
    row.erase("presentation");
    return {doc, Json::array({row})};
  }

  Output wang_border_cmd(const std::string& tiles_arg, int n, int m) const {
    const TileSet tiles = resolve_tiles(tiles_arg);
    const SoficPresentation rel = concat_relation(tiles, n, m, cfg_.guard_states);
    const SoficProtocol p = border_protocol(tiles, n, m, cfg_.guard_states);
    const ValidationReport rep = protocol_validate(rel, p, cfg_.tol, cfg_.guard_states);
    Output o = report_output(rep, rel.alphabet());
    o.doc["n"] = n;
    o.doc["m"] = m;
    o.rows = Json::array({o.doc});
    return o;
  }

  Output residuals_cmd(const std::string& oracle_arg, int k, int m, bool exhaustive) const {
    const LanguageOracle oracle = resolve_oracle(oracle_arg);
    const auto counts = exhaustive ? residual_profile_count_exhaustive(oracle, k, m, cfg_.guard_states)
                                   : residual_profile_count(oracle, k, m, cfg_.guard_states);
    Json rows = Json::array();
    for (std::size_t l = 0; l < counts.size(); ++l) rows.push_back(Json{{"length", l}, {"count", counts[l]}});
    return {Json{{"depth", m}, {"counts", rows}}, rows};
  }

  Output reproduce_cmd() const {
    Json rows = Json::array();
    bool all = true;
    for (const auto& c : reproduce_paper(cfg_.tol)) {
      rows.push_back(Json{{"name", c.name}, {"expected", c.expected}, {"observed", c.observed}, {"pass", c.pass}});
      all = all && c.pass;
    }
    return {Json{{"checks", rows}, {"all_pass", all}}, rows, all ? 0 : 1};
  }

 private:
  void check_ones(const RelationMatrix& r) const {
    if (r.count_ones() > cfg_.guard_ones) {
      throw GuardError("relation has " + std::to_string(r.count_ones()) + " ones, over the guard of " +
                       std::to_string(cfg_.guard_ones));
    }
  }

  static Output report_output(const ValidationReport& rep, const Alphabet& ab) {
    Json doc{{"valid", rep.valid},
             {"witness", optional_word(ab, rep.witness)},
             {"entropy_Z", io::to_json(rep.entropy_z)}};
    return {doc, std::nullopt, rep.valid ? 0 : 1};
  }

  const RunConfig& cfg_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Entropy, rectangle covers and infinite protocols for subshifts", "icc"};
  app.set_help_flag("--help", "print help");
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--tol", cfg.tol, "numeric tolerance")->check(CLI::PositiveNumber);
  app.add_option("--guard-states", cfg.guard_states, "cap on states, words and patterns")->check(CLI::PositiveNumber);
  app.add_option("--guard-ones", cfg.guard_ones, "cap on relation cells")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed; every subcommand is currently deterministic");
  app.add_option("--format", cfg.format, "json, csv or auto")->check(CLI::IsMember({"json", "csv", "auto"}));
  app.add_option("--extend-radius", cfg.extend_radius, "extendability radius for wang-enum")->check(CLI::NonNegativeNumber);
  app.add_option("--max-period", cfg.max_period, "longest period for cond-entropy")->check(CLI::NonNegativeNumber);
  app.add_option("--budget", cfg.budget, "branch-and-bound node budget")->check(CLI::PositiveNumber);

  std::string a1, a2, cover_path, x_word;
  std::size_t n_words = 0;
  int n = 1, m = 1, n_max = 1, w = 1, h = 1, k = 0, depth = 0;
  double eps = 1e-3;
  bool list = false, exhaustive = false;

  std::function<Output(const Runner&)> action;
  auto sub = [&](const char* name, const char* about, std::function<Output(const Runner&)> f) {
    CLI::App* s = app.add_subcommand(name, about);
    s->callback([&action, f] { action = f; });
    return s;
  };

  auto* c = sub("entropy", "entropy of a shift in bits", [&](const Runner& r) { return r.entropy_cmd(a1); });
  c->add_option("shift", a1)->required();
  c = sub("words", "count (and list) the words of length n",
          [&](const Runner& r) { return r.words_cmd(a1, n_words, list); });
  c->add_option("shift", a1)->required();
  c->add_option("--n", n_words)->required();
  c->add_flag("--list", list, "list the words");
  c = sub("sofic-eq", "exact equality of two shifts", [&](const Runner& r) { return r.sofic_eq_cmd(a1, a2); });
  c->add_option("a", a1)->required();
  c->add_option("b", a2)->required();
  c = sub("cc-exact", "minimum rectangle cover", [&](const Runner& r) { return r.cover_cmd(a1, true); });
  c->add_option("relation", a1)->required();
  c = sub("cc-greedy", "greedy rectangle cover", [&](const Runner& r) { return r.cover_cmd(a1, false); });
  c->add_option("relation", a1)->required();
  c = sub("cc-frac", "fractional cover number", [&](const Runner& r) { return r.frac_cmd(a1, eps); });
  c->add_option("relation", a1)->required();
  c->add_option("--eps", eps, "relative accuracy")->check(CLI::PositiveNumber);
  c = sub("amortized", "brackets on log2 C(R^n) / n", [&](const Runner& r) { return r.amortized_cmd(a1, n_max, eps); });
  c->add_option("relation", a1)->required();
  c->add_option("--n-max", n_max)->required()->check(CLI::PositiveNumber);
  c->add_option("--eps", eps, "relative accuracy of the fractional bound")->check(CLI::PositiveNumber);
  c = sub("validate-protocol", "check that a protocol computes a shift",
          [&](const Runner& r) { return r.validate_cmd(a1, a2); });
  c->add_option("shift", a1)->required();
  c->add_option("protocol", a2)->required();
  c = sub("lift", "protocol for R^Z from a cover of R^n",
          [&](const Runner& r) { return r.lift_cmd(a1, n, cover_path); });
  c->add_option("relation", a1)->required();
  c->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  c->add_option("--cover", cover_path, "cover JSON; default is a minimum cover of R^n");
  c = sub("extract", "finite protocol for R^n from an infinite one",
          [&](const Runner& r) { return r.extract_cmd(a1, a2, n); });
  c->add_option("protocol", a1)->required();
  c->add_option("relation", a2)->required();
  c->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  c = sub("cond-entropy", "H(Y|x) for periodic x", [&](const Runner& r) { return r.cond_entropy_cmd(a1, x_word); });
  c->add_option("shift", a1)->required();
  c->add_option("--x", x_word, "one period of x");
  c = sub("fooling", "fooling set or fooling shift lower bound",
          [&](const Runner& r) { return r.fooling_cmd(a1, a2); });
  c->add_option("s", a1, "relation or shift")->required();
  c->add_option("f", a2, "pairs JSON or fooling shift")->required();
  c = sub("wang-enum", "central patterns of valid tilings", [&](const Runner& r) { return r.wang_enum_cmd(a1, w, h); });
  c->add_option("tiles", a1)->required();
  c->add_option("--w", w)->required()->check(CLI::PositiveNumber);
  c->add_option("--h", h)->required()->check(CLI::PositiveNumber);
  c = sub("wang-strip", "strip language of height n", [&](const Runner& r) { return r.wang_strip_cmd(a1, n); });
  c->add_option("tiles", a1)->required();
  c->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  c = sub("wang-border", "validate the border protocol for an n over m split",
          [&](const Runner& r) { return r.wang_border_cmd(a1, n, m); });
  c->add_option("tiles", a1)->required();
  c->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  c->add_option("--m", m)->required()->check(CLI::PositiveNumber);
  c = sub("residuals", "distinct residual profiles per word length",
          [&](const Runner& r) { return r.residuals_cmd(a1, k, depth, exhaustive); });
  c->add_option("oracle", a1)->required();
  c->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
  c->add_option("--m", depth)->required()->check(CLI::NonNegativeNumber);
  c->add_flag("--exhaustive", exhaustive, "ignore the recognizer");
  sub("reproduce-paper", "recompute every anchored value", [](const Runner& r) { return r.reproduce_cmd(); });

  if (!args.empty() && !starts_with(args.front(), "-") && app.get_subcommand_no_throw(args.front()) == nullptr) {
    err << "error: unknown subcommand '" << args.front() << "'\n";
    return 2;
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();

  try {
    const Runner runner(cfg);
    const Output o = action(runner);
    std::string format = cfg.format;
    if (format == "auto") format = (cfg.subcommand == "residuals" || cfg.subcommand == "reproduce-paper") ? "csv" : "json";
    if (format == "csv") {
      write_csv(out, o.rows ? *o.rows : Json::array({o.doc}));
    } else {
      out << o.doc.dump(2) << '\n';
    }
    return o.code;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
  } catch (const GuardError& e) {
    err << "guard exceeded: " << e.what() << '\n';
  } catch (const Json::exception& e) {
    err << "input error: " << e.what() << '\n';
  }
  return 2;
}

}  // namespace icc::cli
