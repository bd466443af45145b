// Copyright 2026 The bidi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BIDI_IO_HPP
#define BIDI_IO_HPP

// Line-oriented text formats.
//
// Graph document:
//
//   <kind> <vertex_count> <edge_count>        kind: signed | bidirected | di2
//   dn <n> <vertex_count> <edge_count>
//   <u> <v> <sign>...                          one line per edge, in id order
//
// Edge lines carry 1 sign (signed), 2 (bidirected: side 0 then side 1;
// di2: the label read from u to v) or n (dn). Signs are '+' and '-'.
// Blank lines and lines starting with '#' are ignored on input. Output is
// canonical: LF line ends, single spaces, no comments.
//
// A decomposition is "decomposition <n>" followed by n/2 bidirected
// documents and, for odd n, one signed document.
//
// Certificates are blocks of keyword lines:
//
//   verdict <word>
//   signature <sign>...           one sign per vertex
//   v1 <vertex>...                + side of the signature
//   v2 <vertex>...
//   witness <sign> <even|odd> <edge>...
//   signs <sign>...               edge signs along the witness
//   reorient <edge>...
//   uniform                       followed by a bidirected document

#include <charconv>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bidi/balance.hpp"
#include "bidi/convert.hpp"
#include "bidi/structures.hpp"
#include "bidi/uniform.hpp"

namespace bidi {

enum class DocumentKind { Signed, Bidirected, Di2, Dn };

inline const char* to_string(DocumentKind k) noexcept {
  switch (k) {
    case DocumentKind::Signed: return "signed";
    case DocumentKind::Bidirected: return "bidirected";
    case DocumentKind::Di2: return "di2";
    case DocumentKind::Dn: return "dn";
  }
  return "?";
}

/// A parsed graph file. The alternative index matches DocumentKind.
struct Document {
  std::variant<SignedGraph, BidirectedGraph, Di2SignedGraph, DnSignedGraph> payload;

  DocumentKind kind() const noexcept { return static_cast<DocumentKind>(payload.index()); }
  const Graph& graph() const {
    return std::visit([](const auto& x) -> const Graph& { return x.graph(); }, payload);
  }

  friend bool operator==(const Document&, const Document&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

namespace detail {

struct Token {
  std::string_view text;
  std::size_t column;
};

struct Line {
  std::size_t number = 0;
  std::vector<Token> tokens;
};

/// Splits text into non-empty, non-comment lines of whitespace-separated
/// tokens, keeping 1-based line and column positions.
class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  std::optional<Line> next() {
    while (pos_ < text_.size()) {
      std::size_t eol = text_.find('\n', pos_);
      if (eol == std::string_view::npos) eol = text_.size();
      std::string_view raw = text_.substr(pos_, eol - pos_);
      pos_ = eol + 1;
      ++line_no_;
      if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

      Line line{line_no_, {}};
      std::size_t i = 0;
      while (i < raw.size()) {
        while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
        if (i == raw.size()) break;
        std::size_t j = i;
        while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t') ++j;
        line.tokens.push_back({raw.substr(i, j - i), i + 1});
        i = j;
      }
      if (line.tokens.empty() || line.tokens.front().text.front() == '#') continue;
      return line;
    }
    return std::nullopt;
  }

  std::optional<Line> peek() {
    if (!peeked_) peeked_ = next();
    return peeked_;
  }

  std::optional<Line> take() {
    if (peeked_) {
      auto l = std::move(peeked_);
      peeked_.reset();
      return l;
    }
    return next();
  }

  std::size_t last_line() const noexcept { return line_no_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
  std::optional<Line> peeked_;
};

inline std::size_t parse_count(const Line& line, const Token& t, const char* what) {
  std::size_t value = 0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line.number, t.column,
                     std::string("expected ") + what + ", got '" + std::string(t.text) + "'");
  }
  return value;
}

inline Sign parse_sign(const Line& line, const Token& t) {
  if (t.text.size() == 1) {
    if (auto s = sign_from_char(t.text[0])) return *s;
  }
  throw ParseError(line.number, t.column, "bad sign '" + std::string(t.text) + "'");
}

inline void expect_tokens(const Line& line, std::size_t want, const char* what) {
  if (line.tokens.size() != want) {
    const std::size_t col =
        line.tokens.size() > want ? line.tokens[want].column : line.tokens.back().column;
    throw ParseError(line.number, col,
                     std::string(what) + " needs " + std::to_string(want) + " fields, got " +
                         std::to_string(line.tokens.size()));
  }
}

inline Document read_document(LineReader& reader) {
  auto header = reader.take();
  if (!header) throw ParseError(reader.last_line() + 1, 1, "missing document header");
  const Token& kind_tok = header->tokens.front();
  DocumentKind kind;
  if (kind_tok.text == "signed") {
    kind = DocumentKind::Signed;
  } else if (kind_tok.text == "bidirected") {
    kind = DocumentKind::Bidirected;
  } else if (kind_tok.text == "di2") {
    kind = DocumentKind::Di2;
  } else if (kind_tok.text == "dn") {
    kind = DocumentKind::Dn;
  } else {
    throw ParseError(header->number, kind_tok.column,
                     "unknown kind '" + std::string(kind_tok.text) + "'");
  }

  std::size_t n = 0;
  std::size_t at = 1;
  if (kind == DocumentKind::Dn) {
    expect_tokens(*header, 4, "dn header");
    n = parse_count(*header, header->tokens[1], "tuple length");
    if (n == 0) throw ParseError(header->number, header->tokens[1].column, "tuple length must be positive");
    at = 2;
  } else {
    expect_tokens(*header, 3, "header");
    n = kind == DocumentKind::Signed ? 1 : 2;
  }
  const std::size_t vertex_count = parse_count(*header, header->tokens[at], "vertex count");
  const std::size_t edge_count = parse_count(*header, header->tokens[at + 1], "edge count");

  std::vector<std::pair<VertexId, VertexId>> ends;
  std::vector<Sign> signs;
  if (vertex_count > std::numeric_limits<VertexId>::max()) {
    throw ParseError(header->number, header->tokens[at].column, "vertex count too large");
  }
  for (std::size_t i = 0; i < edge_count; ++i) {
    auto line = reader.take();
    if (!line) {
      throw ParseError(reader.last_line() + 1, 1,
                       "expected " + std::to_string(edge_count) + " edge lines, found " +
                           std::to_string(i));
    }
    expect_tokens(*line, 2 + n, "edge line");
    std::array<VertexId, 2> uv{};
    for (int k = 0; k < 2; ++k) {
      const Token& t = line->tokens[k];
      const std::size_t x = parse_count(*line, t, "vertex id");
      if (x >= vertex_count) {
        throw ParseError(line->number, t.column,
                         "vertex " + std::to_string(x) + " out of range for " +
                             std::to_string(vertex_count) + " vertices");
      }
      uv[k] = static_cast<VertexId>(x);
    }
    ends.emplace_back(uv[0], uv[1]);
    for (std::size_t k = 0; k < n; ++k) signs.push_back(parse_sign(*line, line->tokens[2 + k]));
  }

  Graph g(vertex_count, ends);
  switch (kind) {
    case DocumentKind::Signed:
      return {SignedGraph(std::move(g), std::move(signs))};
    case DocumentKind::Bidirected:
    case DocumentKind::Di2: {
      std::vector<std::array<Sign, 2>> pairs(edge_count);
      for (std::size_t e = 0; e < edge_count; ++e) pairs[e] = {signs[2 * e], signs[2 * e + 1]};
      if (kind == DocumentKind::Bidirected) return {BidirectedGraph(std::move(g), std::move(pairs))};
      return {Di2SignedGraph(std::move(g), std::move(pairs))};
    }
    case DocumentKind::Dn:
      return {DnSignedGraph(n, std::move(g), std::move(signs))};
  }
  throw std::logic_error("unreachable");
}

inline void expect_end(LineReader& reader) {
  if (auto extra = reader.take()) {
    throw ParseError(extra->number, extra->tokens.front().column, "unexpected content after document");
  }
}

inline void write_edge_line(std::string& out, const Graph& g, EdgeId e, std::span<const Sign> signs) {
  out += std::to_string(g.end(e, 0));
  out += ' ';
  out += std::to_string(g.end(e, 1));
  for (Sign s : signs) {
    out += ' ';
    out += to_char(s);
  }
  out += '\n';
}

}  // namespace detail

/// Parses exactly one document. Throws ParseError.
inline Document parse(std::string_view text) {
  detail::LineReader reader(text);
  Document d = detail::read_document(reader);
  detail::expect_end(reader);
  return d;
}

inline std::string serialize(const Document& d) {
  const Graph& g = d.graph();
  std::string out;
  out += to_string(d.kind());
  if (const auto* dn = std::get_if<DnSignedGraph>(&d.payload)) {
    out += ' ';
    out += std::to_string(dn->n());
  }
  out += ' ' + std::to_string(g.vertex_count()) + ' ' + std::to_string(g.edge_count()) + '\n';
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, SignedGraph>) {
            const Sign s = x.sigma(e);
            detail::write_edge_line(out, g, e, std::span(&s, 1));
          } else if constexpr (std::is_same_v<T, BidirectedGraph>) {
            detail::write_edge_line(out, g, e, x.ends(e));
          } else if constexpr (std::is_same_v<T, Di2SignedGraph>) {
            detail::write_edge_line(out, g, e, x.label(e));
          } else {
            detail::write_edge_line(out, g, e, x.label(e));
          }
        },
        d.payload);
  }
  return out;
}

inline DnDecomposition parse_decomposition(std::string_view text) {
  detail::LineReader reader(text);
  auto header = reader.take();
  if (!header) throw ParseError(1, 1, "missing decomposition header");
  if (header->tokens.front().text != "decomposition") {
    throw ParseError(header->number, header->tokens.front().column, "expected 'decomposition'");
  }
  detail::expect_tokens(*header, 2, "decomposition header");
  const std::size_t n = detail::parse_count(*header, header->tokens[1], "tuple length");
  if (n == 0) throw ParseError(header->number, header->tokens[1].column, "tuple length must be positive");

  DnDecomposition dec;
  for (std::size_t i = 0; i < n / 2; ++i) {
    const std::size_t at = reader.peek() ? reader.peek()->number : reader.last_line() + 1;
    Document d = detail::read_document(reader);
    auto* b = std::get_if<BidirectedGraph>(&d.payload);
    if (!b) throw ParseError(at, 1, "expected a bidirected component");
    dec.bidirections.push_back(std::move(*b));
  }
  if (n % 2 == 1) {
    const std::size_t at = reader.peek() ? reader.peek()->number : reader.last_line() + 1;
    Document d = detail::read_document(reader);
    auto* s = std::get_if<SignedGraph>(&d.payload);
    if (!s) throw ParseError(at, 1, "expected a signed center component");
    dec.center = std::move(*s);
  }
  detail::expect_end(reader);
  return dec;
}

inline std::string serialize_decomposition(const DnDecomposition& dec) {
  std::string out = "decomposition " + std::to_string(dec.n()) + '\n';
  for (const auto& b : dec.bidirections) out += serialize(Document{b});
  if (dec.center) out += serialize(Document{*dec.center});
  return out;
}

// ---------------------------------------------------------------------------
// Certificates

struct Certificate {
  std::string verdict;
  std::optional<VertexSignature> signature;
  std::optional<Bipartition> bipartition;
  std::optional<CycleWitness> witness;
  std::optional<std::vector<Sign>> witness_signs;
  std::optional<std::vector<EdgeId>> reorient;
  std::optional<BidirectedGraph> uniform;
};

namespace detail {

template <typename T>
void append_list(std::string& out, const char* key, const std::vector<T>& items) {
  out += key;
  for (const auto& x : items) {
    out += ' ';
    if constexpr (std::is_same_v<T, Sign>) {
      out += to_char(x);
    } else {
      out += std::to_string(x);
    }
  }
  out += '\n';
}

inline void append_signature(std::string& out, const VertexSignature& mu) {
  append_list(out, "signature", mu.mu);
  const Bipartition parts = signature_to_bipartition(mu);
  append_list(out, "v1", parts.v1);
  append_list(out, "v2", parts.v2);
}

inline void append_witness(std::string& out, const SignedGraph& s, const CycleWitness& w) {
  out += "witness ";
  out += to_char(w.sign);
  out += ' ';
  out += to_string(w.parity());
  for (EdgeId e : w.edges) out += ' ' + std::to_string(e);
  out += '\n';
  std::vector<Sign> signs;
  for (EdgeId e : w.edges) signs.push_back(s.sigma(e));
  append_list(out, "signs", signs);
}

}  // namespace detail

inline std::string format_balance(const SignedGraph& s, const BalanceResult& r,
                                  SignatureMode mode) {
  const bool anti = mode == SignatureMode::Antibalance;
  std::string out = "verdict ";
  if (const auto* ok = std::get_if<Balanced>(&r)) {
    out += anti ? "antibalanced\n" : "balanced\n";
    detail::append_signature(out, ok->signature);
  } else {
    out += anti ? "not-antibalanced\n" : "unbalanced\n";
    detail::append_witness(out, s, std::get<Unbalanced>(r).witness);
  }
  return out;
}

inline std::string format_uniformization(const BidirectedGraph& b, const UniformizationResult& r) {
  std::string out = "verdict ";
  if (const auto* ok = std::get_if<Uniformizable>(&r)) {
    out += "uniformizable\n";
    detail::append_list(out, "reorient", ok->reorient_set);
    detail::append_signature(out, ok->signature);
    out += "uniform\n";
    out += serialize(Document{ok->uniform});
  } else {
    out += "not-uniformizable\n";
    detail::append_witness(out, associated_signed(b), std::get<NotUniformizable>(r).witness);
  }
  return out;
}

inline Certificate parse_certificate(std::string_view text) {
  detail::LineReader reader(text);
  Certificate c;
  auto signs_of = [](const detail::Line& line, std::size_t from) {
    std::vector<Sign> v;
    for (std::size_t i = from; i < line.tokens.size(); ++i) v.push_back(detail::parse_sign(line, line.tokens[i]));
    return v;
  };
  auto ids_of = [](const detail::Line& line, std::size_t from) {
    std::vector<VertexId> v;
    for (std::size_t i = from; i < line.tokens.size(); ++i) {
      v.push_back(static_cast<VertexId>(detail::parse_count(line, line.tokens[i], "id")));
    }
    return v;
  };
  while (auto line = reader.take()) {
    const auto key = line->tokens.front().text;
    if (key == "verdict") {
      detail::expect_tokens(*line, 2, "verdict");
      c.verdict = std::string(line->tokens[1].text);
    } else if (key == "signature") {
      c.signature = VertexSignature{signs_of(*line, 1)};
    } else if (key == "v1") {
      if (!c.bipartition) c.bipartition.emplace();
      c.bipartition->v1 = ids_of(*line, 1);
    } else if (key == "v2") {
      if (!c.bipartition) c.bipartition.emplace();
      c.bipartition->v2 = ids_of(*line, 1);
    } else if (key == "witness") {
      if (line->tokens.size() < 3) throw ParseError(line->number, 1, "witness needs sign and parity");
      CycleWitness w;
      w.sign = detail::parse_sign(*line, line->tokens[1]);
      const auto parity = line->tokens[2].text;
      if (parity != "even" && parity != "odd") {
        throw ParseError(line->number, line->tokens[2].column, "bad parity");
      }
      w.edges = ids_of(*line, 3);
      if ((w.parity() == Parity::Even) != (parity == "even")) {
        throw ParseError(line->number, line->tokens[2].column, "parity does not match cycle length");
      }
      c.witness = std::move(w);
    } else if (key == "signs") {
      c.witness_signs = signs_of(*line, 1);
    } else if (key == "reorient") {
      c.reorient = ids_of(*line, 1);
    } else if (key == "uniform") {
      Document d = detail::read_document(reader);
      auto* b = std::get_if<BidirectedGraph>(&d.payload);
      if (!b) throw ParseError(line->number, 1, "uniform block must be a bidirected document");
      c.uniform = std::move(*b);
    } else {
      throw ParseError(line->number, line->tokens.front().column,
                       "unknown certificate field '" + std::string(key) + "'");
    }
  }
  if (c.verdict.empty()) throw ParseError(1, 1, "certificate has no verdict");
  return c;
}

/// Re-checks a certificate against the graph it was issued for. A balance
/// verdict is checked against `s`; a uniformization verdict needs `b`.
inline bool check_certificate(const Certificate& c, const SignedGraph& s,
                              const BidirectedGraph* b = nullptr) {
  auto witness_ok = [&](bool anti) {
    if (!c.witness) return false;
    if (cycle_vertices(s.graph(), c.witness->edges).empty()) return false;
    const Sign p = cycle_sign(s, *c.witness);
    if (p != c.witness->sign) return false;
    if (c.witness_signs) {
      if (c.witness_signs->size() != c.witness->edges.size()) return false;
      for (std::size_t i = 0; i < c.witness->edges.size(); ++i) {
        if ((*c.witness_signs)[i] != s.sigma(c.witness->edges[i])) return false;
      }
    }
    const Sign expected = anti ? parity_sign(c.witness->length()) : Sign::Plus;
    return p != expected;
  };
  auto signature_ok = [&](SignatureMode mode) {
    if (!c.signature || c.signature->size() != s.graph().vertex_count()) return false;
    if (!verify_signature(s, *c.signature, mode)) return false;
    return !c.bipartition || *c.bipartition == signature_to_bipartition(*c.signature);
  };

  if (c.verdict == "balanced") return signature_ok(SignatureMode::Balance);
  if (c.verdict == "unbalanced") return witness_ok(false);
  if (c.verdict == "antibalanced") return signature_ok(SignatureMode::Antibalance);
  if (c.verdict == "not-antibalanced") return witness_ok(true);
  if (c.verdict == "not-uniformizable") return witness_ok(true);
  if (c.verdict == "uniformizable") {
    if (!b || !c.reorient || !c.uniform || !c.signature) return false;
    for (EdgeId e : *c.reorient) {
      if (!b->graph().has_edge(e)) return false;
    }
    const BidirectedGraph u = reorient(*b, *c.reorient);
    if (!(u == *c.uniform) || !is_uniform(u)) return false;
    if (!(associated_signed(u) == s)) return false;
    if (c.signature->size() != u.graph().vertex_count()) return false;
    for (VertexId v = 0; v < u.graph().vertex_count(); ++v) {
      const VertexRole role = vertex_role(u, v);
      const Sign want = role == VertexRole::Source ? Sign::Minus : Sign::Plus;
      if ((*c.signature)[v] != want) return false;
    }
    return signature_ok(SignatureMode::Antibalance);
  }
  return false;
}

// ---------------------------------------------------------------------------
// DOT export

namespace detail {

// '+' is an arrowhead pointing into the vertex. A '-' end gets a reversed
// arrowhead unless the other end is '+', whose arrowhead already shows the
// edge leaving this end.
inline const char* end_arrow(Sign here, Sign other) {
  if (here == Sign::Plus) return "normal";
  return other == Sign::Minus ? "inv" : "none";
}

inline void dot_bidirected_edge(std::string& out, const Graph& g, EdgeId e,
                                const std::array<Sign, 2>& ends, const std::string& label) {
  out += "  " + std::to_string(g.end(e, 0)) + " -> " + std::to_string(g.end(e, 1));
  out += " [dir=both, arrowtail=";
  out += end_arrow(ends[0], ends[1]);
  out += ", arrowhead=";
  out += end_arrow(ends[1], ends[0]);
  if (!label.empty()) out += ", label=\"" + label + "\"";
  out += "];\n";
}

}  // namespace detail

/// Graphviz rendering. Bidirected and di2 graphs draw end signs as
/// arrowheads; signed and dn graphs put the signs in edge labels.
inline std::string export_dot(const Document& d) {
  const Graph& g = d.graph();
  const bool undirected = d.kind() == DocumentKind::Signed;
  std::string out = undirected ? "graph G {\n" : "digraph G {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, SignedGraph>) {
            out += "  " + std::to_string(g.end(e, 0)) + " -- " + std::to_string(g.end(e, 1)) +
                   " [label=\"" + to_char(x.sigma(e)) + "\"];\n";
          } else if constexpr (std::is_same_v<T, BidirectedGraph>) {
            detail::dot_bidirected_edge(out, g, e, x.ends(e), "");
          } else if constexpr (std::is_same_v<T, Di2SignedGraph>) {
            const auto& l = x.label(e);
            detail::dot_bidirected_edge(out, g, e, l, to_string(std::span<const Sign>(l)));
          } else {
            out += "  " + std::to_string(g.end(e, 0)) + " -> " + std::to_string(g.end(e, 1)) +
                   " [label=\"" + to_string(x.label(e)) + "\"];\n";
          }
        },
        d.payload);
  }
  out += "}\n";
  return out;
}

}  // namespace bidi

#endif  // BIDI_IO_HPP
