#include "io.hpp"

#include <algorithm>
#include <fstream>

namespace icc::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string as_string(const Json& j, const char* what) {
  if (!j.is_string()) throw InputError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::size_t as_index(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw InputError(std::string(what) + " must be a nonnegative integer");
  }
  return j.get<std::size_t>();
}

bool single_char_tokens(const Alphabet& a) {
  for (const auto& t : a.tokens()) {
    if (t.size() != 1) return false;
  }
  return true;
}

Symbol symbol_from_json(const Alphabet& a, const Json& j) {
  if (j.is_string()) return a.index(j.get<std::string>());
  if (j.is_array()) {
    if (!a.is_product() || j.size() != a.arity()) throw InputError("tuple symbol does not match the alphabet");
    std::vector<Symbol> parts;
    for (std::size_t k = 0; k < j.size(); ++k) parts.push_back(symbol_from_json(a.factors()[k], j[k]));
    return a.combine(parts);
  }
  if (j.is_number_integer()) return a.index(std::to_string(j.get<long long>()));
  throw InputError("symbols must be strings or arrays");
}

}  // namespace

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
}

Json to_json(const Alphabet& a) {
  if (a.is_product()) {
    Json parts = Json::array();
    for (const auto& f : a.factors()) parts.push_back(to_json(f));
    return Json{{"product", parts}};
  }
  return Json(a.tokens());
}

Alphabet alphabet_from_json(const Json& j) {
  if (j.is_object() && j.contains("product")) {
    std::vector<Alphabet> parts;
    for (const auto& f : j.at("product")) parts.push_back(alphabet_from_json(f));
    return Alphabet::product(parts);
  }
  if (!j.is_array() || j.empty()) throw InputError("alphabet must be a nonempty array of tokens");
  std::vector<std::string> tokens;
  for (const auto& t : j) tokens.push_back(t.is_string() ? t.get<std::string>() : t.dump());
  return Alphabet(std::move(tokens));
}

Word word_from_json(const Alphabet& a, const Json& j) {
  Word w;
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (!single_char_tokens(a)) {
      w.push_back(a.index(s));
      return w;
    }
    for (char ch : s) w.push_back(a.index(std::string(1, ch)));
    return w;
  }
  if (!j.is_array()) throw InputError("words must be strings or arrays");
  for (const auto& s : j) w.push_back(symbol_from_json(a, s));
  return w;
}

Json word_to_json(const Alphabet& a, WordView w) {
  if (single_char_tokens(a)) {
    std::string s;
    for (Symbol x : w) s += a.token(x);
    return s;
  }
  Json out = Json::array();
  for (Symbol x : w) out.push_back(a.token(x));
  return out;
}

SftPresentation sft_from_json(const Json& j) {
  const Alphabet a = alphabet_from_json(field(j, "alphabet"));
  if (j.contains("allowed")) {
    const std::size_t k = as_index(field(j, "window"), "window");
    std::vector<Word> words;
    for (const auto& w : j.at("allowed")) words.push_back(word_from_json(a, w));
    return SftPresentation::from_allowed_words(a, static_cast<int>(k), std::move(words));
  }
  std::vector<Word> forbidden;
  if (j.contains("forbidden")) {
    for (const auto& w : j.at("forbidden")) forbidden.push_back(word_from_json(a, w));
  }
  return build_sft(a, forbidden);
}

Json to_json(const SftPresentation& s) {
  Json allowed = Json::array();
  for (const auto& e : s.edges()) allowed.push_back(word_to_json(s.alphabet(), s.edge_word(e)));
  return Json{{"alphabet", to_json(s.alphabet())}, {"window", s.window()}, {"allowed", allowed}};
}

bool is_sofic_json(const Json& j) { return j.is_object() && j.contains("edges"); }

SoficPresentation sofic_from_json(const Json& j) {
  const Alphabet a = alphabet_from_json(field(j, "alphabet"));
  const std::size_t n = as_index(field(j, "states"), "states");
  std::vector<SoficPresentation::Edge> edges;
  for (const auto& e : field(j, "edges")) {
    if (!e.is_array() || e.size() != 3) throw InputError("edges are [src, label, dst] triples");
    edges.push_back({as_index(e[0], "edge source"), symbol_from_json(a, e[1]), as_index(e[2], "edge target")});
  }
  return SoficPresentation(a, n, std::move(edges));
}

Json to_json(const SoficPresentation& s) {
  Json edges = Json::array();
  for (const auto& e : s.edges()) edges.push_back(Json::array({e.from, s.alphabet().token(e.label), e.to}));
  return Json{{"alphabet", to_json(s.alphabet())}, {"states", s.num_states()}, {"edges", edges}};
}

RelationMatrix relation_from_json(const Json& j) {
  std::vector<std::string> xl, yl;
  for (const auto& t : field(j, "x_labels")) xl.push_back(as_string(t, "label"));
  for (const auto& t : field(j, "y_labels")) yl.push_back(as_string(t, "label"));
  RelationMatrix r(std::move(xl), std::move(yl));
  for (const auto& e : field(j, "ones")) {
    if (!e.is_array() || e.size() != 2) throw InputError("ones are [row, col] pairs");
    r.set(as_index(e[0], "row"), as_index(e[1], "col"));
  }
  return r;
}

Json to_json(const RelationMatrix& r) {
  Json ones = Json::array();
  for (auto [x, y] : r.ones()) ones.push_back(Json::array({x, y}));
  return Json{{"x_labels", r.x_labels()}, {"y_labels", r.y_labels()}, {"ones", ones}};
}

Json to_json(const Rectangle& r) { return Json{{"rows", r.rows}, {"cols", r.cols}}; }

std::vector<Rectangle> rectangles_from_json(const Json& j) {
  const Json& list = j.is_object() ? field(j, "rectangles") : j;
  std::vector<Rectangle> out;
  for (const auto& r : list) {
    Rectangle rect;
    for (const auto& x : field(r, "rows")) rect.rows.push_back(as_index(x, "row"));
    for (const auto& y : field(r, "cols")) rect.cols.push_back(as_index(y, "col"));
    std::sort(rect.rows.begin(), rect.rows.end());
    std::sort(rect.cols.begin(), rect.cols.end());
    out.push_back(std::move(rect));
  }
  return out;
}

Json to_json(const CoverResult& c) {
  Json rects = Json::array();
  for (const auto& r : c.rectangles) rects.push_back(to_json(r));
  return Json{{"cover", c.cover_number}, {"bits", c.bits},         {"exact", c.exact},
              {"lower_bound", c.lower_bound}, {"nodes", c.nodes}, {"rectangles", rects}};
}

ProtocolTriple protocol_from_json(const Json& j) {
  ProtocolTriple p;
  p.a = alphabet_from_json(field(j, "a"));
  p.b = alphabet_from_json(field(j, "b"));
  p.c = alphabet_from_json(field(j, "c"));
  p.z = sft_from_json(field(j, "z"));
  p.sx = sft_from_json(field(j, "sx"));
  p.sy = sft_from_json(field(j, "sy"));
  return p;
}

Json to_json(const ProtocolTriple& p) {
  return Json{{"a", to_json(p.a)},   {"b", to_json(p.b)},   {"c", to_json(p.c)},
              {"z", to_json(p.z)},   {"sx", to_json(p.sx)}, {"sy", to_json(p.sy)}};
}

SoficProtocol sofic_protocol_from_json(const Json& j) {
  auto shift = [&](const char* key) {
    const Json& s = field(j, key);
    return is_sofic_json(s) ? sofic_from_json(s) : sofic_from_sft(sft_from_json(s));
  };
  SoficProtocol p;
  p.a = alphabet_from_json(field(j, "a"));
  p.b = alphabet_from_json(field(j, "b"));
  p.c = alphabet_from_json(field(j, "c"));
  p.z = shift("z");
  p.sx = shift("sx");
  p.sy = shift("sy");
  return p;
}

Json to_json(const SoficProtocol& p) {
  return Json{{"a", to_json(p.a)},   {"b", to_json(p.b)},   {"c", to_json(p.c)},
              {"z", to_json(p.z)},   {"sx", to_json(p.sx)}, {"sy", to_json(p.sy)}};
}

bool protocol_is_sofic(const Json& j) {
  for (const char* key : {"z", "sx", "sy"}) {
    if (j.contains(key) && is_sofic_json(j.at(key))) return true;
  }
  return false;
}

TileSet tileset_from_json(const Json& j) {
  std::vector<WangTile> tiles;
  for (const auto& t : field(j, "tiles")) {
    tiles.push_back({as_string(field(t, "n"), "n"), as_string(field(t, "s"), "s"), as_string(field(t, "e"), "e"),
                     as_string(field(t, "w"), "w"), as_string(field(t, "sym"), "sym")});
  }
  return TileSet(std::move(tiles));
}

Json to_json(const TileSet& t) {
  Json tiles = Json::array();
  for (const auto& tile : t.tiles()) {
    tiles.push_back(Json{{"n", tile.north}, {"s", tile.south}, {"e", tile.east}, {"w", tile.west}, {"sym", tile.symbol}});
  }
  return Json{{"tiles", tiles}};
}

Json to_json(const EntropyValue& e) {
  if (e.is_negative_infinity()) return "-inf";
  return e.bits();
}

}  // namespace icc::io
