#pragma once

// Text and JSON forms of grids, braid words, PD codes, polynomials, move
// paths and braiding traces. Formats are described in docs/formats.md.

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "braidforge/braid.hpp"
#include "braidforge/braiding.hpp"
#include "braidforge/error.hpp"
#include "braidforge/grid.hpp"
#include "braidforge/invariants.hpp"
#include "braidforge/laurent.hpp"
#include "braidforge/markov.hpp"
#include "braidforge/pd.hpp"

namespace braidforge {

using json = nlohmann::json;

namespace detail {

// Cursor over a single-line text form; error messages carry 1-based columns.
class TextCursor {
public:
  explicit TextCursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  int integer() {
    skip_space();
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    if (first != last && *first == '+')
      ++first;
    int v = 0;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr == first)
      fail("expected an integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return v;
  }
  std::vector<int> integer_list() {
    std::vector<int> out{integer()};
    while (peek(',')) {
      ++pos_;
      out.push_back(integer());
    }
    return out;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("column " + std::to_string(pos_ + 1) + ": " + what);
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

inline std::string join(const std::vector<int>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

template <class F>
auto json_guard(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

} // namespace detail

// ---------------------------------------------------------------------------
// Grid: "G<n>: X=<c1,...,cn> O=<c1,...,cn>"

inline GridDiagram parse_grid(std::string_view text) {
  detail::TextCursor cur(text);
  cur.expect('G');
  const int n = cur.integer();
  cur.expect(':');
  cur.expect('X');
  cur.expect('=');
  std::vector<int> x = cur.integer_list();
  cur.expect('O');
  cur.expect('=');
  std::vector<int> o = cur.integer_list();
  if (!cur.at_end())
    cur.fail("trailing characters");
  if (static_cast<int>(x.size()) != n || static_cast<int>(o.size()) != n)
    throw InputError("size mismatch: header says " + std::to_string(n) + " but X has " +
                     std::to_string(x.size()) + " and O has " + std::to_string(o.size()) +
                     " entries");
  return GridDiagram(std::move(x), std::move(o));
}

inline std::string to_text(const GridDiagram& g) {
  return "G" + std::to_string(g.size()) + ": X=" + detail::join(g.xcols(), ",") +
         " O=" + detail::join(g.ocols(), ",");
}

inline json to_json(const GridDiagram& g) {
  return {{"size", g.size()}, {"xcol", g.xcols()}, {"ocol", g.ocols()}};
}

inline GridDiagram grid_from_json(const json& j) {
  return detail::json_guard([&] {
    const int n = j.at("size").get<int>();
    auto x = j.at("xcol").get<std::vector<int>>();
    auto o = j.at("ocol").get<std::vector<int>>();
    if (static_cast<int>(x.size()) != n || static_cast<int>(o.size()) != n)
      throw InputError("size mismatch: size is " + std::to_string(n) + " but xcol has " +
                       std::to_string(x.size()) + " and ocol has " +
                       std::to_string(o.size()) + " entries");
    return GridDiagram(std::move(x), std::move(o));
  });
}

// ---------------------------------------------------------------------------
// Braid word: "B<n>: g1 g2 ..."

inline BraidWord parse_braid(std::string_view text) {
  detail::TextCursor cur(text);
  cur.expect('B');
  const int n = cur.integer();
  cur.expect(':');
  std::vector<int> letters;
  while (!cur.at_end())
    letters.push_back(cur.integer());
  return BraidWord(n, std::move(letters));
}

inline std::string to_text(const BraidWord& w) {
  std::string out = "B" + std::to_string(w.strands()) + ":";
  for (int g : w.letters())
    out += " " + std::to_string(g);
  return out;
}

inline json to_json(const BraidWord& w) {
  return {{"strands", w.strands()}, {"letters", w.letters()}};
}

inline BraidWord braid_from_json(const json& j) {
  return detail::json_guard([&] {
    return BraidWord(j.at("strands").get<int>(), j.at("letters").get<std::vector<int>>());
  });
}

// ---------------------------------------------------------------------------
// PD code

inline json to_json(const PDCode& pd) {
  json xs = json::array();
  for (const Crossing& x : pd.crossings)
    xs.push_back({{"arcs", x.arcs()}, {"sign", x.sign}});
  return {{"crossings", xs}, {"free_loops", pd.free_loops}};
}

inline PDCode pd_from_json(const json& j) {
  PDCode pd = detail::json_guard([&] {
    PDCode out;
    for (const auto& jx : j.at("crossings")) {
      const auto arcs = jx.at("arcs").get<std::vector<int>>();
      if (arcs.size() != 4)
        throw InputError("crossing needs exactly 4 arcs");
      out.crossings.push_back({arcs[0], arcs[1], arcs[2], arcs[3], jx.at("sign").get<int>()});
    }
    out.free_loops = j.value("free_loops", 0);
    return out;
  });
  validate(pd);
  return pd;
}

inline PDCode parse_pd(std::string_view text) {
  json j = detail::json_guard([&] { return json::parse(text); });
  return pd_from_json(j);
}

// ---------------------------------------------------------------------------
// Polynomials and invariant records

inline json to_json(const LaurentPoly& p) {
  json j = json::object();
  for (const auto& [e, c] : p.terms())
    j[std::to_string(e)] = c;
  return j;
}

inline LaurentPoly poly_from_json(const json& j) {
  return detail::json_guard([&] {
    LaurentPoly p;
    for (const auto& [key, value] : j.items()) {
      int e = 0;
      auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), e);
      if (ec != std::errc() || ptr != key.data() + key.size())
        throw InputError("polynomial exponent '" + key + "' is not an integer");
      p.add_term(e, value.get<std::int64_t>());
    }
    return p;
  });
}

inline json to_json(const InvariantRecord& r) {
  return {{"components", r.components},
          {"writhe", r.writhe},
          {"normalized_bracket", to_json(r.normalized_bracket)},
          {"normalized_bracket_text", r.normalized_bracket.to_string()},
          {"linking_matrix", r.linking_matrix},
          {"seifert_circles", r.seifert_circles}};
}

// ---------------------------------------------------------------------------
// Move paths

inline json to_json(const MarkovMove& m) {
  struct Visitor {
    json operator()(const moves::Conjugate& c) const {
      return {{"move", "conjugate"}, {"index", c.index}, {"sign", c.sign}};
    }
    json operator()(const moves::Stabilize& s) const {
      return {{"move", "stabilize"}, {"sign", s.sign}};
    }
    json operator()(const moves::Destabilize&) const { return {{"move", "destabilize"}}; }
    json operator()(const moves::LMove& l) const {
      return {{"move", "l_move"},
              {"kind", l.kind == LMoveKind::Over ? "over" : "under"},
              {"position", l.position},
              {"depth", l.depth}};
    }
    json operator()(const moves::Relation& r) const {
      return {{"move", "relation"},
              {"site", r.site},
              {"kind", r.kind == RelationKind::Commute ? "commute" : "yang_baxter"},
              {"direction", r.direction == Direction::Forward ? "forward" : "backward"}};
    }
    json operator()(const moves::FreeReduce&) const { return {{"move", "free_reduce"}}; }
  };
  return std::visit(Visitor{}, m);
}

inline json to_json(const std::vector<MarkovMove>& path) {
  json j = json::array();
  for (const auto& m : path)
    j.push_back(to_json(m));
  return j;
}

inline MarkovMove move_from_json(const json& j) {
  return detail::json_guard([&]() -> MarkovMove {
    const auto tag = j.at("move").get<std::string>();
    auto sign_of = [&](const char* key) {
      const int s = j.at(key).get<int>();
      if (s != 1 && s != -1)
        throw InputError(tag + ": " + key + " must be +1 or -1");
      return s;
    };
    if (tag == "conjugate")
      return moves::Conjugate{j.at("index").get<int>(), sign_of("sign")};
    if (tag == "stabilize")
      return moves::Stabilize{sign_of("sign")};
    if (tag == "destabilize")
      return moves::Destabilize{};
    if (tag == "free_reduce")
      return moves::FreeReduce{};
    if (tag == "l_move") {
      const auto kind = j.at("kind").get<std::string>();
      if (kind != "over" && kind != "under")
        throw InputError("l_move kind must be \"over\" or \"under\"");
      return moves::LMove{kind == "over" ? LMoveKind::Over : LMoveKind::Under,
                          j.at("position").get<int>(), j.at("depth").get<int>()};
    }
    if (tag == "relation") {
      const auto kind = j.at("kind").get<std::string>();
      if (kind != "commute" && kind != "yang_baxter")
        throw InputError("relation kind must be \"commute\" or \"yang_baxter\"");
      const auto dir = j.value("direction", std::string("forward"));
      if (dir != "forward" && dir != "backward")
        throw InputError("relation direction must be \"forward\" or \"backward\"");
      const long site = j.at("site").get<long>();
      if (site < 0)
        throw InputError("relation site must be non-negative");
      return moves::Relation{static_cast<std::size_t>(site),
                             kind == "commute" ? RelationKind::Commute : RelationKind::YangBaxter,
                             dir == "forward" ? Direction::Forward : Direction::Backward};
    }
    throw InputError("unknown move \"" + tag + "\"");
  });
}

inline std::vector<MarkovMove> moves_from_json(const json& j) {
  if (!j.is_array())
    throw InputError("move path must be a JSON array");
  std::vector<MarkovMove> out;
  for (const auto& item : j)
    out.push_back(move_from_json(item));
  return out;
}

// ---------------------------------------------------------------------------
// Braiding trace

inline json to_json(const BraidingTrace& t) {
  json moves = json::array(), sweep = json::array();
  for (const auto& m : t.moves)
    moves.push_back({{"column", m.column},
                     {"o_row", m.o_row},
                     {"x_row", m.x_row},
                     {"type", m.type == BraidingType::Over ? "over" : "under"}});
  for (const auto& s : t.sweep_log)
    sweep.push_back({{"row", s.row},
                     {"source_rank", s.source_rank},
                     {"target_rank", s.target_rank},
                     {"letters", s.letters}});
  return {{"moves", moves}, {"sweep", sweep}};
}

// ---------------------------------------------------------------------------
// Any supported object, detected from its first character and JSON keys.

using DiagramObject = std::variant<GridDiagram, BraidWord, PDCode>;

inline DiagramObject parse_object(std::string_view text) {
  text = detail::trim(text);
  if (text.empty())
    throw InputError("empty input");
  switch (text.front()) {
  case 'G':
    return parse_grid(text);
  case 'B':
    return parse_braid(text);
  case '{': {
    json j = detail::json_guard([&] { return json::parse(text); });
    if (j.contains("size"))
      return grid_from_json(j);
    if (j.contains("strands"))
      return braid_from_json(j);
    if (j.contains("crossings"))
      return pd_from_json(j);
    throw InputError("JSON object is not a grid, braid word or PD code");
  }
  default:
    throw InputError("column 1: expected 'G', 'B' or '{'");
  }
}

} // namespace braidforge
