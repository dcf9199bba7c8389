#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "icc/cover.hpp"
#include "icc/entropy.hpp"
#include "icc/protocol.hpp"
#include "icc/wang.hpp"

namespace icc::io {

using Json = nlohmann::ordered_json;

/// Parses a file; malformed JSON becomes an InputError.
Json load_json(const std::string& path);

Json to_json(const Alphabet& a);
Alphabet alphabet_from_json(const Json& j);

/// Strings split per character when every token is one character; arrays hold
/// one token per symbol, product symbols as a token string "x,y" or an array
/// of component tokens.
Word word_from_json(const Alphabet& a, const Json& j);
Json word_to_json(const Alphabet& a, WordView w);

/// {"alphabet", "forbidden"} or {"alphabet", "window", "allowed"}.
SftPresentation sft_from_json(const Json& j);
/// Always the window/allowed form.
Json to_json(const SftPresentation& s);

/// {"alphabet", "states", "edges": [[src, label, dst], ...]}.
SoficPresentation sofic_from_json(const Json& j);
Json to_json(const SoficPresentation& s);
bool is_sofic_json(const Json& j);

/// {"x_labels", "y_labels", "ones": [[i, j], ...]}.
RelationMatrix relation_from_json(const Json& j);
Json to_json(const RelationMatrix& r);

Json to_json(const Rectangle& r);
std::vector<Rectangle> rectangles_from_json(const Json& j);
Json to_json(const CoverResult& c);

/// {"a", "b", "c", "z", "sx", "sy"}; constituents are SFT objects.
ProtocolTriple protocol_from_json(const Json& j);
Json to_json(const ProtocolTriple& p);
/// Same layout with any constituent given in sofic form.
SoficProtocol sofic_protocol_from_json(const Json& j);
Json to_json(const SoficProtocol& p);
bool protocol_is_sofic(const Json& j);

/// {"tiles": [{"n", "s", "e", "w", "sym"}, ...]}.
TileSet tileset_from_json(const Json& j);
Json to_json(const TileSet& t);

/// Number, or the string "-inf".
Json to_json(const EntropyValue& e);

}  // namespace icc::io
