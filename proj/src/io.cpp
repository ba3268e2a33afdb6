#include "bvc/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "bvc/errors.hpp"

namespace bvc {

namespace {

using Kind = ParseError::Kind;

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string raw(text.substr(pos, end - pos));
    pos = end + 1;
    std::istringstream in(raw);
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(tok);
    if (line.tokens.empty() || line.tokens[0][0] == '#' || line.tokens[0] == "c") continue;
    out.push_back(std::move(line));
    if (end == text.size()) break;
  }
  return out;
}

bool to_int(std::string_view s, int& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

int expect_int(const std::string& tok, int line, Kind kind, const char* what) {
  int v = 0;
  if (!to_int(tok, v)) throw ParseError(kind, line, std::string("expected integer ") + what + ", got '" + tok + "'");
  return v;
}

// Shared edge validation for the graph and instance formats.
class EdgeCollector {
 public:
  explicit EdgeCollector(int n) : n_(n) {}

  void add(int u, int v, int line) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw ParseError(Kind::id_out_of_range, line,
                       "vertex id out of range in edge " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw ParseError(Kind::self_loop, line, "self-loop at vertex " + std::to_string(u));
    Edge e = u < v ? Edge{u, v} : Edge{v, u};
    if (!seen_.insert(e).second)
      throw ParseError(Kind::duplicate_edge, line, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    edges_.push_back(e);
  }

  Graph build() const { return Graph::from_edges(n_, edges_); }
  std::size_t size() const { return edges_.size(); }

 private:
  int n_;
  std::set<Edge> seen_;
  std::vector<Edge> edges_;
};

Graph parse_graph_lines(const std::vector<Line>& lines) {
  if (lines.empty()) throw ParseError(Kind::malformed_header, 1, "missing 'p vc' header");
  const Line& head = lines[0];
  if (head.tokens.size() != 4 || head.tokens[0] != "p" || head.tokens[1] != "vc")
    throw ParseError(Kind::malformed_header, head.number, "expected 'p vc <n> <m>'");
  int n = expect_int(head.tokens[2], head.number, Kind::malformed_header, "vertex count");
  int m = expect_int(head.tokens[3], head.number, Kind::malformed_header, "edge count");
  if (n < 0 || m < 0) throw ParseError(Kind::malformed_header, head.number, "negative count");
  EdgeCollector edges(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens.size() != 3 || l.tokens[0] != "e") throw ParseError(Kind::malformed_line, l.number, "expected 'e <u> <v>'");
    int u = expect_int(l.tokens[1], l.number, Kind::malformed_line, "endpoint");
    int v = expect_int(l.tokens[2], l.number, Kind::malformed_line, "endpoint");
    edges.add(u, v, l.number);
  }
  if (static_cast<int>(edges.size()) != m)
    throw ParseError(Kind::malformed_header, head.number,
                     "header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  return edges.build();
}

Hypergraph parse_hypergraph_lines(const std::vector<Line>& lines) {
  if (lines.empty()) throw ParseError(Kind::malformed_header, 1, "missing 'p hvc' header");
  const Line& head = lines[0];
  if (head.tokens.size() != 5 || head.tokens[0] != "p" || head.tokens[1] != "hvc")
    throw ParseError(Kind::malformed_header, head.number, "expected 'p hvc <n> <m> <d>'");
  Hypergraph h;
  h.n = expect_int(head.tokens[2], head.number, Kind::malformed_header, "vertex count");
  int m = expect_int(head.tokens[3], head.number, Kind::malformed_header, "edge count");
  h.arity = expect_int(head.tokens[4], head.number, Kind::malformed_header, "arity");
  if (h.n < 0 || m < 0 || h.arity < 2) throw ParseError(Kind::malformed_header, head.number, "invalid header values");
  std::set<VertexSet> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens.empty() || l.tokens[0] != "h" || static_cast<int>(l.tokens.size()) != h.arity + 1)
      throw ParseError(Kind::malformed_line, l.number, "expected 'h' followed by " + std::to_string(h.arity) + " ids");
    std::vector<Vertex> e;
    for (std::size_t t = 1; t < l.tokens.size(); ++t) {
      int v = expect_int(l.tokens[t], l.number, Kind::malformed_line, "vertex");
      if (v < 0 || v >= h.n) throw ParseError(Kind::id_out_of_range, l.number, "vertex id " + std::to_string(v) + " out of range");
      e.push_back(v);
    }
    VertexSet sorted = make_vertex_set(e);
    if (static_cast<int>(sorted.size()) != h.arity)
      throw ParseError(Kind::self_loop, l.number, "hyperedge repeats a vertex");
    if (!seen.insert(sorted).second) throw ParseError(Kind::duplicate_edge, l.number, "duplicate hyperedge");
    h.edges.push_back(std::move(sorted));
  }
  if (static_cast<int>(h.edges.size()) != m)
    throw ParseError(Kind::malformed_header, head.number, "header edge count does not match body");
  return h;
}

ModulatorInstance parse_modulator_lines(const std::vector<Line>& lines) {
  ModulatorInstance inst;
  std::set<std::string> seen;
  int graph_line = 0;
  for (const Line& l : lines) {
    const std::string& key = l.tokens[0];
    if (key != "graph" && key != "k" && key != "modulator" && key != "class" && key != "depth")
      throw ParseError(Kind::unknown_key, l.number, "unknown key '" + key + "'");
    if (!seen.insert(key).second) throw ParseError(Kind::malformed_line, l.number, "key '" + key + "' repeated");
    if (key == "graph") {
      graph_line = l.number;
      if (l.tokens.size() < 2) throw ParseError(Kind::malformed_line, l.number, "graph needs a vertex count");
      int n = expect_int(l.tokens[1], l.number, Kind::malformed_line, "vertex count");
      if (n < 0) throw ParseError(Kind::malformed_line, l.number, "negative vertex count");
      EdgeCollector edges(n);
      for (std::size_t t = 2; t < l.tokens.size(); ++t) {
        const std::string& tok = l.tokens[t];
        auto dash = tok.find('-', 1);
        int u = 0, v = 0;
        if (dash == std::string::npos || !to_int(std::string_view(tok).substr(0, dash), u) ||
            !to_int(std::string_view(tok).substr(dash + 1), v))
          throw ParseError(Kind::malformed_line, l.number, "expected edge token '<u>-<v>', got '" + tok + "'");
        edges.add(u, v, l.number);
      }
      inst.g = edges.build();
    } else if (key == "k") {
      if (l.tokens.size() != 2) throw ParseError(Kind::malformed_line, l.number, "expected 'k <int>'");
      inst.k = expect_int(l.tokens[1], l.number, Kind::malformed_line, "k");
      if (inst.k < -1) throw ParseError(Kind::malformed_line, l.number, "k must be >= -1");
    } else if (key == "modulator") {
      std::vector<Vertex> ids;
      for (std::size_t t = 1; t < l.tokens.size(); ++t)
        ids.push_back(expect_int(l.tokens[t], l.number, Kind::malformed_line, "modulator id"));
      inst.x = make_vertex_set(ids);
      if (inst.x.size() != ids.size()) throw ParseError(Kind::malformed_line, l.number, "modulator repeats a vertex");
    } else if (key == "class") {
      if (l.tokens.size() != 2) throw ParseError(Kind::malformed_line, l.number, "expected 'class <tag>'");
      try {
        inst.tag = ClassTag::parse(l.tokens[1]);
      } catch (const InputError& e) {
        throw ParseError(Kind::malformed_line, l.number, e.what());
      }
    } else {
      if (l.tokens.size() != 2) throw ParseError(Kind::malformed_line, l.number, "expected 'depth <d>'");
      inst.depth = expect_int(l.tokens[1], l.number, Kind::malformed_line, "depth");
      if (inst.depth < 0) throw ParseError(Kind::malformed_line, l.number, "depth must be >= 0");
    }
  }
  int last = lines.empty() ? 1 : lines.back().number;
  for (const char* required : {"graph", "k", "class"})
    if (!seen.count(required)) throw ParseError(Kind::missing_key, last, std::string("missing key '") + required + "'");
  for (Vertex v : inst.x)
    if (v < 0 || v >= inst.g.num_vertices())
      throw ParseError(Kind::id_out_of_range, graph_line, "modulator vertex " + std::to_string(v) + " out of range");
  return inst;
}

}  // namespace

ParsedInstance parse_instance(std::string_view text) {
  auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError(Kind::malformed_header, 1, "empty input");
  const auto& first = lines[0].tokens;
  if (first[0] == "p") {
    if (first.size() >= 2 && first[1] == "hvc") return parse_hypergraph_lines(lines);
    return parse_graph_lines(lines);
  }
  return parse_modulator_lines(lines);
}

Graph parse_graph(std::string_view text) { return parse_graph_lines(significant_lines(text)); }
Hypergraph parse_hypergraph(std::string_view text) { return parse_hypergraph_lines(significant_lines(text)); }
ModulatorInstance parse_modulator_instance(std::string_view text) { return parse_modulator_lines(significant_lines(text)); }

std::string emit_instance(const Graph& g) {
  std::ostringstream out;
  out << "p vc " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
  return out.str();
}

std::string emit_instance(const Hypergraph& h) {
  std::ostringstream out;
  out << "p hvc " << h.n << ' ' << h.edges.size() << ' ' << h.arity << '\n';
  for (const auto& e : h.edges) {
    out << 'h';
    for (Vertex v : e) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

std::string emit_instance(const ModulatorInstance& inst) {
  std::ostringstream out;
  out << "graph " << inst.g.num_vertices();
  for (auto [u, v] : inst.g.edges()) out << ' ' << u << '-' << v;
  out << "\nk " << inst.k << "\nmodulator";
  for (Vertex v : inst.x) out << ' ' << v;
  out << "\nclass " << inst.tag.name() << "\ndepth " << inst.depth << '\n';
  return out.str();
}

std::string emit_instance(const ParsedInstance& any) {
  return std::visit([](const auto& x) { return emit_instance(x); }, any);
}

std::string format_set(const VertexSet& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out;
}

VertexSet parse_set(std::string_view text) {
  std::vector<Vertex> ids;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) return;
    int v = 0;
    if (!to_int(tok, v) || v < 0) throw InputError("invalid vertex id '" + tok + "'");
    ids.push_back(v);
    tok.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t' || c == '\n') flush();
    else tok += c;
  }
  flush();
  return make_vertex_set(ids);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << contents;
}

}  // namespace bvc
