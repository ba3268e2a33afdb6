#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "bvc/graph.hpp"
#include "bvc/instance.hpp"

namespace bvc {

// Text formats:
//   graph       p vc <n> <m>          then m lines  e <u> <v>
//   hypergraph  p hvc <n> <m> <d>     then m lines  h <v1> ... <vd>
//   instance    key lines: graph <n> <u>-<v> ...   k <int>   modulator <ids>
//               class <tag>   depth <d>
// Blank lines and lines starting with '#' or 'c ' are ignored.
using ParsedInstance = std::variant<Graph, Hypergraph, ModulatorInstance>;

ParsedInstance parse_instance(std::string_view text);
Graph parse_graph(std::string_view text);
Hypergraph parse_hypergraph(std::string_view text);
ModulatorInstance parse_modulator_instance(std::string_view text);

std::string emit_instance(const Graph& g);
std::string emit_instance(const Hypergraph& h);
std::string emit_instance(const ModulatorInstance& inst);
std::string emit_instance(const ParsedInstance& any);

// "0,1,2"; the empty set renders as "".
std::string format_set(const VertexSet& s);
// Accepts comma- or whitespace-separated ids; throws InputError.
VertexSet parse_set(std::string_view text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view contents);

}  // namespace bvc
