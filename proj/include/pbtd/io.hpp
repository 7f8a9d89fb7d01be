#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "pbtd/design.hpp"
#include "pbtd/orbit_template.hpp"
#include "pbtd/search.hpp"
#include "pbtd/verifier.hpp"

// Text format:
//
//   # comment
//   PBTD n=9
//   2,16 | 3,17 | ... | 0,1
//
// Line 1 of a document is `KIND key=value ...`; each following line is one
// grid row with cells separated by `|`. Pair cells are `a,b` with a < b, `-`
// is an empty Howell cell, template slots are `g<id>` (free) or `g<id>^<k>`.
// A file may hold several documents; each header line starts a new one.

namespace pbtd {

enum class DocumentKind { PBTD, HOWELL, TEMPLATE, CHECKPOINT };

inline std::string_view to_string(DocumentKind k) {
  switch (k) {
    case DocumentKind::PBTD: return "PBTD";
    case DocumentKind::HOWELL: return "HOWELL";
    case DocumentKind::TEMPLATE: return "TEMPLATE";
    case DocumentKind::CHECKPOINT: return "CHECKPOINT";
  }
  return "?";
}

using BodyCell = std::variant<Cell, Slot>;

struct DesignDocument {
  DocumentKind kind = DocumentKind::PBTD;
  std::vector<std::pair<std::string, std::string>> header;
  std::vector<std::vector<BodyCell>> body;

  const std::string* find(std::string_view key) const {
    for (const auto& [k, v] : header)
      if (k == key) return &v;
    return nullptr;
  }

  bool operator==(const DesignDocument&) const = default;
};

namespace detail {

inline bool is_kind_word(std::string_view w, DocumentKind& out) {
  for (auto k : {DocumentKind::PBTD, DocumentKind::HOWELL, DocumentKind::TEMPLATE, DocumentKind::CHECKPOINT}) {
    if (w == to_string(k)) {
      out = k;
      return true;
    }
  }
  return false;
}

inline std::size_t skip_space(std::string_view s, std::size_t i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

inline std::string_view trim(std::string_view s) {
  std::size_t b = skip_space(s, 0);
  std::size_t e = s.size();
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

// Parses a non-negative decimal integer occupying all of `s`.
inline bool parse_uint(std::string_view s, std::int64_t& out) {
  if (s.empty() || s.size() > 18) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  std::from_chars(s.data(), s.data() + s.size(), out);
  return true;
}

struct LineCursor {
  int line;
  std::string_view text;  // full line
  int column_of(std::string_view part) const { return static_cast<int>(part.data() - text.data()) + 1; }
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<DesignDocument> run() {
    std::vector<DesignDocument> docs;
    int expected_rows = -1;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      std::size_t nl = text_.find('\n', pos);
      std::string_view raw = text_.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
      pos = nl == std::string_view::npos ? text_.size() + 1 : nl + 1;
      ++line_no;
      if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
      LineCursor cur{line_no, raw};
      std::string_view body = trim(raw);
      if (body.empty() || body.front() == '#') continue;

      std::size_t word_end = 0;
      while (word_end < body.size() && !std::isspace(static_cast<unsigned char>(body[word_end]))) ++word_end;
      DocumentKind kind;
      if (is_kind_word(body.substr(0, word_end), kind)) {
        if (!docs.empty()) finish(docs.back(), cur);
        docs.push_back(parse_header(kind, body, cur));
        expected_rows = rows_expected(docs.back(), cur);
        continue;
      }
      if (docs.empty()) throw ParseError(ErrorKind::Parse, line_no, cur.column_of(body), "expected a header line");
      parse_row(docs.back(), body, cur);
      if (expected_rows >= 0 && static_cast<int>(docs.back().body.size()) > expected_rows) {
        throw ParseError(ErrorKind::Shape, line_no, cur.column_of(body), "more body rows than the header allows");
      }
    }
    if (!docs.empty()) finish(docs.back(), LineCursor{line_no, {}});
    return docs;
  }

 private:
  static int header_int(const DesignDocument& d, std::string_view key, const LineCursor& cur, bool required = true) {
    const std::string* v = d.find(key);
    if (!v) {
      if (!required) return -1;
      throw ParseError(ErrorKind::Parse, cur.line, 1, "missing header field '" + std::string(key) + "'");
    }
    std::int64_t x = 0;
    if (!parse_uint(*v, x) || x > 1'000'000) {
      throw ParseError(ErrorKind::Parse, cur.line, 1, "header field '" + std::string(key) + "' is not a count");
    }
    return static_cast<int>(x);
  }

  DesignDocument parse_header(DocumentKind kind, std::string_view body, const LineCursor& cur) {
    DesignDocument d;
    d.kind = kind;
    std::size_t i = to_string(kind).size();
    while (true) {
      i = skip_space(body, i);
      if (i >= body.size()) break;
      std::size_t end = i;
      while (end < body.size() && !std::isspace(static_cast<unsigned char>(body[end]))) ++end;
      std::string_view tok = body.substr(i, end - i);
      std::size_t eq = tok.find('=');
      if (eq == std::string_view::npos || eq == 0 || eq + 1 == tok.size()) {
        throw ParseError(ErrorKind::Parse, cur.line, cur.column_of(tok), "expected key=value");
      }
      d.header.emplace_back(std::string(tok.substr(0, eq)), std::string(tok.substr(eq + 1)));
      i = end;
    }
    switch (kind) {
      case DocumentKind::PBTD: {
        int n = header_int(d, "n", cur);
        if (n < 1 || n > kMaxSide) throw ParseError(ErrorKind::Range, cur.line, 1, "n outside [1, 32]");
        universe_ = 2 * n;
        break;
      }
      case DocumentKind::HOWELL: {
        header_int(d, "s", cur);
        universe_ = header_int(d, "v", cur);
        if (universe_ < 2 || universe_ > 64) throw ParseError(ErrorKind::Range, cur.line, 1, "v outside [2, 64]");
        break;
      }
      case DocumentKind::TEMPLATE: {
        header_int(d, "rows", cur);
        header_int(d, "cols", cur);
        universe_ = header_int(d, "v", cur);
        if (!d.find("pi")) throw ParseError(ErrorKind::Parse, cur.line, 1, "missing header field 'pi'");
        break;
      }
      case DocumentKind::CHECKPOINT: {
        int n = header_int(d, "n", cur);
        if (n < 1 || n > kMaxSide) throw ParseError(ErrorKind::Range, cur.line, 1, "n outside [1, 32]");
        universe_ = 2 * n;
        break;
      }
    }
    return d;
  }

  static int rows_expected(const DesignDocument& d, const LineCursor& cur) {
    switch (d.kind) {
      case DocumentKind::PBTD: return header_int(d, "n", cur);
      case DocumentKind::HOWELL: return header_int(d, "s", cur);
      case DocumentKind::TEMPLATE: return header_int(d, "rows", cur);
      case DocumentKind::CHECKPOINT: return -1;
    }
    return -1;
  }

  static int cols_expected(const DesignDocument& d, const LineCursor& cur) {
    switch (d.kind) {
      case DocumentKind::PBTD: return 2 * header_int(d, "n", cur) - 1;
      case DocumentKind::HOWELL: return header_int(d, "s", cur);
      case DocumentKind::TEMPLATE: return header_int(d, "cols", cur);
      case DocumentKind::CHECKPOINT: return -1;
    }
    return -1;
  }

  void finish(const DesignDocument& d, const LineCursor& cur) const {
    int rows = rows_expected(d, cur);
    if (rows >= 0 && static_cast<int>(d.body.size()) != rows) {
      throw ParseError(ErrorKind::Shape, cur.line, 1,
                       std::string(to_string(d.kind)) + " document has " + std::to_string(d.body.size()) +
                           " rows, expected " + std::to_string(rows));
    }
  }

  BodyCell parse_cell(DocumentKind kind, std::string_view tok, const LineCursor& cur) const {
    const int col = cur.column_of(tok);
    if (tok.empty()) throw ParseError(ErrorKind::Parse, cur.line, col, "empty cell");
    if (kind == DocumentKind::TEMPLATE) {
      if (tok.front() != 'g') throw ParseError(ErrorKind::Parse, cur.line, col, "expected a slot like g3 or g3^2");
      std::string_view rest = tok.substr(1);
      std::size_t caret = rest.find('^');
      std::int64_t g = 0;
      std::int64_t k = 0;
      if (!parse_uint(trim(rest.substr(0, caret)), g) ||
          (caret != std::string_view::npos && !parse_uint(trim(rest.substr(caret + 1)), k))) {
        throw ParseError(ErrorKind::Parse, cur.line, col, "malformed slot '" + std::string(tok) + "'");
      }
      if (g > 100000 || k > 100000) throw ParseError(ErrorKind::Range, cur.line, col, "slot index too large");
      if (caret == std::string_view::npos) return Slot::free(static_cast<int>(g));
      return Slot::image(static_cast<int>(g), static_cast<int>(k));
    }
    if (tok == "-") {
      if (kind != DocumentKind::HOWELL) {
        throw ParseError(ErrorKind::Parse, cur.line, col, "empty cells are only allowed in HOWELL documents");
      }
      return Cell{};
    }
    std::size_t comma = tok.find(',');
    std::int64_t a = 0;
    std::int64_t b = 0;
    if (comma == std::string_view::npos || !parse_uint(trim(tok.substr(0, comma)), a) ||
        !parse_uint(trim(tok.substr(comma + 1)), b)) {
      throw ParseError(ErrorKind::Parse, cur.line, col, "expected a cell 'a,b', got '" + std::string(tok) + "'");
    }
    if (a >= b || b >= universe_) {
      throw ParseError(ErrorKind::Range, cur.line, col,
                       "cell '" + std::string(tok) + "' needs 0 <= a < b < " + std::to_string(universe_));
    }
    return Cell(UnorderedPair(static_cast<int>(a), static_cast<int>(b)));
  }

  void parse_row(DesignDocument& d, std::string_view body, const LineCursor& cur) const {
    std::vector<BodyCell> row;
    std::size_t start = 0;
    while (true) {
      std::size_t bar = body.find('|', start);
      std::string_view tok = trim(body.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start));
      if (tok.empty()) tok = body.substr(start, 0);
      if (d.kind == DocumentKind::CHECKPOINT && tok == "-" && row.empty() && bar == std::string_view::npos) {
        break;  // empty prefix
      }
      row.push_back(parse_cell(d.kind, tok, cur));
      if (bar == std::string_view::npos) break;
      start = bar + 1;
    }
    int cols = cols_expected(d, cur);
    if (cols >= 0 && static_cast<int>(row.size()) != cols) {
      throw ParseError(ErrorKind::Shape, cur.line, 1,
                       "row has " + std::to_string(row.size()) + " cells, expected " + std::to_string(cols));
    }
    d.body.push_back(std::move(row));
  }

  std::string_view text_;
  int universe_ = 0;
};

}  // namespace detail

inline std::vector<DesignDocument> parse_all(std::string_view text) { return detail::Parser(text).run(); }

// Exactly one document.
inline DesignDocument parse(std::string_view text) {
  auto docs = parse_all(text);
  if (docs.size() != 1) {
    throw ParseError(ErrorKind::Parse, 1, 1, "expected exactly one document, found " + std::to_string(docs.size()));
  }
  return std::move(docs.front());
}

inline std::string serialize(const DesignDocument& d) {
  std::string out(to_string(d.kind));
  for (const auto& [k, v] : d.header) out += " " + k + "=" + v;
  out += '\n';
  for (const auto& row : d.body) {
    if (row.empty()) {
      out += "-\n";
      continue;
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += " | ";
      if (const Cell* cell = std::get_if<Cell>(&row[c])) {
        out += *cell ? to_string(**cell) : "-";
      } else {
        const Slot& s = std::get<Slot>(row[c]);
        out += "g" + std::to_string(s.generator);
        if (s.kind == Slot::Kind::Image) out += "^" + std::to_string(s.exponent);
      }
    }
    out += '\n';
  }
  return out;
}

// Documents separated by one blank line.
inline std::string serialize(const std::vector<DesignDocument>& docs) {
  std::string out;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (i) out += '\n';
    out += serialize(docs[i]);
  }
  return out;
}

// ---- typed conversions ----

inline PairGrid body_grid(const DesignDocument& d) {
  const int rows = static_cast<int>(d.body.size());
  const int cols = rows ? static_cast<int>(d.body.front().size()) : 0;
  PairGrid g(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(d.body[static_cast<std::size_t>(r)].size()) != cols) throw Error(ErrorKind::Shape, "ragged body");
    for (int c = 0; c < cols; ++c) {
      const auto* cell = std::get_if<Cell>(&d.body[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
      if (!cell) throw Error(ErrorKind::Parse, "slot token in a pair document");
      g(r, c) = *cell;
    }
  }
  return g;
}

inline std::vector<std::vector<BodyCell>> grid_body(const PairGrid& g) {
  std::vector<std::vector<BodyCell>> body;
  for (int r = 0; r < g.rows(); ++r) {
    std::vector<BodyCell> row;
    for (int c = 0; c < g.cols(); ++c) row.emplace_back(g(r, c));
    body.push_back(std::move(row));
  }
  return body;
}

inline DesignDocument to_document(const PBTDesign& t) {
  return {DocumentKind::PBTD, {{"n", std::to_string(t.n())}}, grid_body(t.cells())};
}

inline DesignDocument to_document(const HowellGrid& h) {
  return {DocumentKind::HOWELL, {{"s", std::to_string(h.s())}, {"v", std::to_string(h.v())}}, grid_body(h.cells())};
}

inline DesignDocument to_document(const OrbitTemplate& t) {
  DesignDocument d{DocumentKind::TEMPLATE,
                   {{"rows", std::to_string(t.rows())},
                    {"cols", std::to_string(t.cols())},
                    {"v", std::to_string(t.elements())},
                    {"pi", t.pi().to_cycle_string()}},
                   {}};
  for (int r = 0; r < t.rows(); ++r) {
    std::vector<BodyCell> row;
    for (int c = 0; c < t.cols(); ++c) row.emplace_back(t.slots()(r, c));
    d.body.push_back(std::move(row));
  }
  return d;
}

inline PBTDesign to_design(const DesignDocument& d) {
  if (d.kind != DocumentKind::PBTD) throw Error(ErrorKind::Parse, "expected a PBTD document");
  return PBTDesign(static_cast<int>(d.body.size()), body_grid(d));
}

inline HowellGrid to_howell(const DesignDocument& d) {
  if (d.kind != DocumentKind::HOWELL) throw Error(ErrorKind::Parse, "expected a HOWELL document");
  return HowellGrid(std::stoi(*d.find("v")), body_grid(d));
}

inline OrbitTemplate to_template(const DesignDocument& d) {
  if (d.kind != DocumentKind::TEMPLATE) throw Error(ErrorKind::Parse, "expected a TEMPLATE document");
  const int v = std::stoi(*d.find("v"));
  const int rows = std::stoi(*d.find("rows"));
  const int cols = std::stoi(*d.find("cols"));
  Grid<Slot> slots(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const auto* s = std::get_if<Slot>(&d.body[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
      if (!s) throw Error(ErrorKind::Parse, "pair token in a TEMPLATE document");
      slots(r, c) = *s;
    }
  }
  return OrbitTemplate(Permutation::from_cycles(v, *d.find("pi")), std::move(slots));
}

// Resumable search state: the subtrees still to explore.
struct Checkpoint {
  int n = 1;
  SearchMode mode = SearchMode::Full;
  bool symmetry_break = true;
  std::uint64_t seed = 0;
  std::uint64_t nodes = 0;  // nodes spent before the checkpoint
  std::vector<Prefix> frontier;

  bool operator==(const Checkpoint&) const = default;
};

inline DesignDocument to_document(const Checkpoint& cp) {
  DesignDocument d{DocumentKind::CHECKPOINT,
                   {{"n", std::to_string(cp.n)},
                    {"mode", std::string(to_string(cp.mode))},
                    {"symmetry", cp.symmetry_break ? "1" : "0"},
                    {"seed", std::to_string(cp.seed)},
                    {"nodes", std::to_string(cp.nodes)}},
                   {}};
  for (const auto& prefix : cp.frontier) {
    std::vector<BodyCell> row;
    for (const auto& p : prefix) row.emplace_back(Cell(p));
    d.body.push_back(std::move(row));
  }
  return d;
}

inline Checkpoint to_checkpoint(const DesignDocument& d) {
  if (d.kind != DocumentKind::CHECKPOINT) throw Error(ErrorKind::Parse, "expected a CHECKPOINT document");
  Checkpoint cp;
  cp.n = std::stoi(*d.find("n"));
  auto get = [&d](const char* key, const char* fallback) {
    const std::string* v = d.find(key);
    return v ? *v : std::string(fallback);
  };
  std::string mode = get("mode", "full");
  if (mode == "full") {
    cp.mode = SearchMode::Full;
  } else if (mode == "template") {
    cp.mode = SearchMode::Template;
  } else if (mode == "mate") {
    cp.mode = SearchMode::Mate;
  } else {
    throw Error(ErrorKind::Parse, "unknown checkpoint mode '" + mode + "'");
  }
  cp.symmetry_break = get("symmetry", "1") != "0";
  cp.seed = std::stoull(get("seed", "0"));
  cp.nodes = std::stoull(get("nodes", "0"));
  for (const auto& row : d.body) {
    Prefix prefix;
    for (const auto& cell : row) {
      const auto* c = std::get_if<Cell>(&cell);
      if (!c || !*c) throw Error(ErrorKind::Parse, "checkpoint prefixes hold pairs only");
      prefix.push_back(**c);
    }
    cp.frontier.push_back(std::move(prefix));
  }
  return cp;
}

// ---- JSON report mode ----

inline nlohmann::json to_json(const VerificationReport& rep) {
  nlohmann::json j;
  j["subject"] = rep.subject;
  j["valid"] = rep.valid();
  if (rep.pairs_expected) j["pairs_expected"] = rep.pairs_expected;
  j["violations"] = nlohmann::json::array();
  for (const auto& v : rep.violations) {
    nlohmann::json jv;
    jv["condition"] = std::string(condition_id(v.condition));
    if (v.row >= 0) jv["row"] = v.row;
    if (v.column >= 0) jv["column"] = v.column;
    if (v.element >= 0) jv["element"] = v.element;
    if (v.pair) jv["pair"] = {v.pair->lo(), v.pair->hi()};
    jv["note"] = v.note;
    j["violations"].push_back(std::move(jv));
  }
  return j;
}

inline std::string format_violation(const Violation& v) {
  std::string out(condition_id(v.condition));
  if (v.row >= 0) out += " row=" + std::to_string(v.row);
  if (v.column >= 0) out += " column=" + std::to_string(v.column);
  if (v.element >= 0) out += " element=" + std::to_string(v.element);
  if (v.pair) out += " pair=" + to_string(*v.pair);
  out += ": " + v.note;
  return out;
}

}  // namespace pbtd
