#include "bvc/instance.hpp"

#include <charconv>

#include "bvc/errors.hpp"

namespace bvc {

std::string ClassTag::name() const {
  switch (kind) {
    case ClassKind::empty: return "empty";
    case ClassKind::indset: return "indset";
    case ClassKind::forest: return "forest";
    case ClassKind::bipartite: return "bipartite";
    case ClassKind::cluster: return "cluster:" + std::to_string(q);
    case ClassKind::lp: return "lp";
  }
  return "?";
}

ClassTag ClassTag::parse(std::string_view text) {
  if (text == "empty") return {ClassKind::empty, 0};
  if (text == "indset") return {ClassKind::indset, 0};
  if (text == "forest") return {ClassKind::forest, 0};
  if (text == "bipartite") return {ClassKind::bipartite, 0};
  if (text == "lp") return {ClassKind::lp, 0};
  constexpr std::string_view prefix = "cluster:";
  if (text.starts_with(prefix)) {
    auto digits = text.substr(prefix.size());
    int q = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), q);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && q >= 1) return {ClassKind::cluster, q};
  }
  throw InputError("unknown class tag '" + std::string(text) + "'");
}

ModulatorInstance ModulatorInstance::canonical_no(const ClassTag& tag, int depth) {
  ModulatorInstance inst;
  inst.k = -1;
  inst.tag = tag;
  inst.depth = depth;
  return inst;
}

void ModulatorInstance::validate() const {
  if (k < -1) throw InputError("k must be >= 0, or -1 for the canonical NO");
  if (depth < 0) throw InputError("depth must be >= 0");
  if (make_vertex_set(x) != x) throw InputError("modulator must be sorted and duplicate-free");
  for (Vertex v : x)
    if (v < 0 || v >= g.num_vertices()) throw InputError("modulator vertex out of range");
}

}  // namespace bvc
