#pragma once

#include <array>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include "hypergvl/core.hpp"

namespace hgvl {

enum class TextFormat { LO_Inc, N_Pair, Adj_Mat, HO_Neigh, HO_Inc, N_Set, Inc_Mat };

inline constexpr std::array<TextFormat, 7> kAllTextFormats = {
    TextFormat::LO_Inc, TextFormat::N_Pair, TextFormat::Adj_Mat, TextFormat::HO_Neigh,
    TextFormat::HO_Inc, TextFormat::N_Set,  TextFormat::Inc_Mat};

inline std::string_view text_format_name(TextFormat f) {
  switch (f) {
    case TextFormat::LO_Inc: return "LO-Inc";
    case TextFormat::N_Pair: return "N-Pair";
    case TextFormat::Adj_Mat: return "Adj-Mat";
    case TextFormat::HO_Neigh: return "HO-Neigh";
    case TextFormat::HO_Inc: return "HO-Inc";
    case TextFormat::N_Set: return "N-Set";
    case TextFormat::Inc_Mat: return "Inc-Mat";
  }
  return "?";
}

inline std::optional<TextFormat> find_text_format(std::string_view name) {
  for (TextFormat f : kAllTextFormats)
    if (text_format_name(f) == name) return f;
  return std::nullopt;
}

// "a", "a and b", "a, b, and c" with oxford; plain ", " join otherwise.
inline std::string english_join(const std::vector<std::string>& items, bool oxford) {
  if (items.empty()) throw contract_error("english_join needs at least one item");
  std::string out = items[0];
  if (!oxford) {
    for (std::size_t i = 1; i < items.size(); ++i) out += ", " + items[i];
    return out;
  }
  if (items.size() == 2) return items[0] + " and " + items[1];
  for (std::size_t i = 1; i < items.size(); ++i) out += (i + 1 == items.size() ? ", and " : ", ") + items[i];
  return out;
}

namespace detail {

inline std::vector<std::string> vertex_names(const std::vector<std::size_t>& ids) {
  std::vector<std::string> out;
  for (std::size_t v : ids) out.push_back("v" + std::to_string(v));
  return out;
}

inline std::vector<std::string> edge_names(const std::vector<std::size_t>& ids) {
  std::vector<std::string> out;
  for (std::size_t j : ids) out.push_back("e" + std::to_string(j));
  return out;
}

inline std::vector<std::size_t> iota_ids(std::size_t n) {
  std::vector<std::size_t> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = i;
  return ids;
}

// The listings vary the connective before the hyperedge list per format.
enum class HeaderJoin { plain, among, comma_among };

inline std::string header(const Hypergraph& h, std::string_view name, HeaderJoin join) {
  std::string out(name);
  out += " describes a hypergraph among vertices ";
  out += english_join(vertex_names(iota_ids(h.num_vertices())), true);
  switch (join) {
    case HeaderJoin::plain: out += " and hyperedges "; break;
    case HeaderJoin::among: out += " and among hyperedges "; break;
    case HeaderJoin::comma_among: out += ", and among hyperedges "; break;
  }
  out += h.num_edges() ? english_join(edge_names(iota_ids(h.num_edges())), true) : std::string("none");
  return out + ".";
}

inline std::string vertex_phrase(const std::vector<std::size_t>& vs) {
  if (vs.empty()) return "no vertices";
  return (vs.size() == 1 ? "vertex " : "vertices ") + english_join(vertex_names(vs), false);
}

inline std::string matrix(const std::vector<std::vector<int>>& rows) {
  std::string out = "[";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) out += ",\n";
    out += "[";
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c) out += ",";
      out += std::to_string(rows[r][c]);
    }
    out += "]";
  }
  return out + "]";
}

inline std::vector<std::size_t> to_indices(const VertexSet& s) {
  std::vector<std::size_t> out;
  for (VertexId v : s) out.push_back(v.index);
  return out;
}

}  // namespace detail

// Renders `h` in one of the seven textual encodings. `name` is the symbol the
// text uses for the hypergraph ("G", or "H" for the first graph of a pair).
inline std::string render_text(const Hypergraph& h, TextFormat fmt, std::string_view name = "G") {
  using detail::HeaderJoin;
  const std::size_t n = h.num_vertices();
  std::string out;
  switch (fmt) {
    case TextFormat::LO_Inc: {
      out = detail::header(h, name, HeaderJoin::plain) + "\nIn this hypergraph:";
      for (std::size_t v = 0; v < n; ++v)
        out += "\nVertex v" + std::to_string(v) + " is connected to " +
               detail::vertex_phrase(detail::to_indices(neighbors(h, VertexId{v}))) + ".";
      break;
    }
    case TextFormat::N_Pair: {
      out = "In an undirected hypergraph, (i,j) means that vertex i and vertex j are connected with an undirected "
            "hyperedge. " +
            detail::header(h, name, HeaderJoin::plain) + "\nThe connection relation between vertices in " +
            std::string(name) + " are:";
      for (auto [u, v] : clique_pairs(h)) out += " (v" + std::to_string(u) + ", v" + std::to_string(v) + ")";
      out += ".";
      break;
    }
    case TextFormat::Adj_Mat: {
      std::vector<std::vector<int>> rows(n, std::vector<int>(n, 0));
      for (auto [u, v] : clique_pairs(h)) rows[u][v] = rows[v][u] = 1;
      out = detail::header(h, name, HeaderJoin::among) +
            "\nThe adjacency matrix between the vertices of the hypergraph is\n" + detail::matrix(rows);
      break;
    }
    case TextFormat::HO_Neigh: {
      out = detail::header(h, name, HeaderJoin::plain) + "\nIn this hypergraph:";
      for (std::size_t v = 0; v < n; ++v) {
        const auto& inc = h.incident(VertexId{v});
        out += "\nVertex v" + std::to_string(v) + " is connected to ";
        if (inc.empty())
          out += "no hyperedges.";
        else
          out += (inc.size() == 1 ? "hyperedge " : "hyperedges ") + english_join(detail::edge_names(inc), false) + ".";
      }
      for (std::size_t j = 0; j < h.num_edges(); ++j)
        out += "\nHyperedge e" + std::to_string(j) + " is connected to " + detail::vertex_phrase(h.edges()[j]) + ".";
      break;
    }
    case TextFormat::HO_Inc: {
      out = detail::header(h, name, HeaderJoin::among) + "\nIn this hypergraph:";
      for (std::size_t v = 0; v < n; ++v) {
        out += "\nVertex v" + std::to_string(v) + " is connected ";
        const auto& inc = h.incident(VertexId{v});
        if (inc.empty()) out += "to no vertices";
        for (std::size_t i = 0; i < inc.size(); ++i) {
          std::vector<std::size_t> others;
          for (std::size_t w : h.edges()[inc[i]])
            if (w != v) others.push_back(w);
          if (i) out += ", ";
          out += "to " + detail::vertex_phrase(others) + " with hyperedge e" + std::to_string(inc[i]);
        }
        out += ".";
      }
      break;
    }
    case TextFormat::N_Set: {
      out = "In an undirected hypergraph, (i, j, k) means that vertex i, vertex j, and vertex k are connected with an "
            "undirected hyperedge. " +
            detail::header(h, name, HeaderJoin::comma_among) + "\nThe hyperedges in " + std::string(name) + " are: ";
      if (h.num_edges() == 0) out += "none";
      for (std::size_t j = 0; j < h.num_edges(); ++j) {
        if (j) out += ", ";
        out += "(" + english_join(detail::vertex_names(h.edges()[j]), false) + ")";
      }
      out += ".";
      break;
    }
    case TextFormat::Inc_Mat: {
      std::vector<std::vector<int>> rows(n, std::vector<int>(h.num_edges(), 0));
      for (std::size_t j = 0; j < h.num_edges(); ++j)
        for (std::size_t v : h.edges()[j]) rows[v][j] = 1;
      out = detail::header(h, name, HeaderJoin::plain) + "\nThe incidence matrix of the hypergraph is\n" +
            detail::matrix(rows);
      break;
    }
  }
  return out;
}

namespace detail {

// Byte cursor used by the round-trip parsers; every failure reports the
// offset where the expected text did not match.
class TextCursor {
 public:
  explicit TextCursor(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }
  bool done() const { return pos_ == text_.size(); }

  [[noreturn]] void fail(const std::string& what) const { throw parse_error(what, pos_); }

  bool peek(std::string_view lit) const { return text_.substr(pos_, lit.size()) == lit; }

  bool accept(std::string_view lit) {
    if (!peek(lit)) return false;
    pos_ += lit.size();
    return true;
  }

  void expect(std::string_view lit) {
    if (!accept(lit)) fail("expected \"" + std::string(lit) + "\"");
  }

  std::size_t number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }

  std::size_t id(char prefix) {
    expect(std::string(1, prefix));
    return number();
  }

  // Next character is `prefix` followed by a digit.
  bool at_id(char prefix, std::size_t ahead = 0) const {
    const std::size_t p = pos_ + ahead;
    return p + 1 < text_.size() && text_[p] == prefix && std::isdigit(static_cast<unsigned char>(text_[p + 1]));
  }

  // Ids joined by ", " / " and " / ", and ".
  std::vector<std::size_t> id_list(char prefix) {
    std::vector<std::size_t> ids{id(prefix)};
    for (;;) {
      bool more = false;
      for (std::string_view sep : {", and ", ", ", " and "}) {
        if (peek(sep) && at_id(prefix, sep.size())) {
          pos_ += sep.size();
          more = true;
          break;
        }
      }
      if (!more) return ids;
      ids.push_back(id(prefix));
    }
  }

  std::string_view word() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a word");
    return text_.substr(start, pos_ - start);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

struct ParsedHeader {
  std::size_t vertices = 0;
  std::size_t edges = 0;
};

inline ParsedHeader parse_header(TextCursor& cur) {
  cur.word();
  cur.expect(" describes a hypergraph among vertices ");
  auto vs = cur.id_list('v');
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (vs[i] != i) cur.fail("vertex list must be v0..v" + std::to_string(vs.size() - 1));
  if (!cur.accept(", and among hyperedges ") && !cur.accept(" and among hyperedges ") &&
      !cur.accept(" and hyperedges "))
    cur.fail("expected the hyperedge list");
  ParsedHeader out{vs.size(), 0};
  if (cur.accept("none")) {
    cur.expect(".");
    return out;
  }
  auto es = cur.id_list('e');
  for (std::size_t j = 0; j < es.size(); ++j)
    if (es[j] != j) cur.fail("hyperedge list must be e0..e" + std::to_string(es.size() - 1));
  out.edges = es.size();
  cur.expect(".");
  return out;
}

inline void expect_end(TextCursor& cur) {
  if (!cur.done()) cur.fail("trailing text");
}

inline std::vector<std::vector<int>> parse_matrix(TextCursor& cur) {
  std::vector<std::vector<int>> rows;
  cur.expect("[");
  if (cur.accept("]")) return rows;
  do {
    cur.accept("\n");
    cur.expect("[");
    std::vector<int> row;
    if (!cur.peek("]")) {
      do {
        if (cur.accept("0"))
          row.push_back(0);
        else if (cur.accept("1"))
          row.push_back(1);
        else
          cur.fail("matrix entries must be 0 or 1");
      } while (cur.accept(","));
    }
    cur.expect("]");
    rows.push_back(std::move(row));
  } while (cur.accept(","));
  cur.expect("]");
  return rows;
}

}  // namespace detail

inline Hypergraph parse_nset(std::string_view text) {
  detail::TextCursor cur(text);
  cur.expect("In an undirected hypergraph, (i, j, k) means that vertex i, vertex j, and vertex k are connected with "
             "an undirected hyperedge. ");
  auto head = detail::parse_header(cur);
  cur.expect("\nThe hyperedges in ");
  cur.word();
  cur.expect(" are: ");
  std::vector<Edge> edges;
  if (!cur.accept("none")) {
    do {
      cur.expect("(");
      edges.push_back(cur.id_list('v'));
      cur.expect(")");
    } while (cur.accept(", "));
  }
  cur.expect(".");
  detail::expect_end(cur);
  if (edges.size() != head.edges) cur.fail("hyperedge count disagrees with the header");
  try {
    return Hypergraph(head.vertices, std::move(edges));
  } catch (const std::invalid_argument& e) {
    cur.fail(e.what());
  }
}

inline Hypergraph parse_incmat(std::string_view text) {
  detail::TextCursor cur(text);
  auto head = detail::parse_header(cur);
  cur.expect("\nThe incidence matrix of the hypergraph is\n");
  auto rows = detail::parse_matrix(cur);
  detail::expect_end(cur);
  if (rows.size() != head.vertices) cur.fail("row count disagrees with the vertex count");
  std::vector<Edge> edges(head.edges);
  for (std::size_t v = 0; v < rows.size(); ++v) {
    if (rows[v].size() != head.edges) cur.fail("row v" + std::to_string(v) + " has the wrong column count");
    for (std::size_t j = 0; j < head.edges; ++j)
      if (rows[v][j]) edges[j].push_back(v);
  }
  try {
    return Hypergraph(head.vertices, std::move(edges));
  } catch (const std::invalid_argument& e) {
    cur.fail(e.what());
  }
}

inline Hypergraph parse_honeigh(std::string_view text) {
  detail::TextCursor cur(text);
  auto head = detail::parse_header(cur);
  cur.expect("\nIn this hypergraph:");
  std::vector<std::vector<std::size_t>> incident(head.vertices);
  for (std::size_t v = 0; v < head.vertices; ++v) {
    cur.expect("\nVertex v" + std::to_string(v) + " is connected to ");
    if (cur.accept("no hyperedges")) {
    } else if (cur.accept("hyperedges ") || cur.accept("hyperedge ")) {
      incident[v] = cur.id_list('e');
    } else {
      cur.fail("expected a hyperedge list");
    }
    cur.expect(".");
  }
  std::vector<Edge> edges(head.edges);
  for (std::size_t j = 0; j < head.edges; ++j) {
    cur.expect("\nHyperedge e" + std::to_string(j) + " is connected to ");
    if (!cur.accept("vertices ") && !cur.accept("vertex ")) cur.fail("expected a vertex list");
    edges[j] = cur.id_list('v');
    cur.expect(".");
  }
  detail::expect_end(cur);
  for (std::size_t v = 0; v < head.vertices; ++v)
    for (std::size_t j : incident[v])
      if (j >= head.edges || std::find(edges[j].begin(), edges[j].end(), v) == edges[j].end())
        cur.fail("vertex block and hyperedge block disagree on v" + std::to_string(v));
  try {
    Hypergraph h(head.vertices, std::move(edges));
    for (std::size_t v = 0; v < head.vertices; ++v)
      if (h.incident(VertexId{v}).size() != incident[v].size())
        cur.fail("vertex block and hyperedge block disagree on v" + std::to_string(v));
    return h;
  } catch (const std::invalid_argument& e) {
    cur.fail(e.what());
  }
}

}  // namespace hgvl
