#include "cayley_ricci/cayley.hpp"

#include <algorithm>
#include <charconv>
#include <queue>

#include "cayley_ricci/error.hpp"

namespace ricci {

std::string_view to_string(EdgeType type) {
  switch (type) {
    case EdgeType::A: return "A";
    case EdgeType::B: return "B";
    case EdgeType::AB: return "AB";
  }
  return "?";
}

EdgeType parse_edge_type(std::string_view text) {
  if (text == "A") return EdgeType::A;
  if (text == "B") return EdgeType::B;
  if (text == "AB") return EdgeType::AB;
  throw Error(ErrorCode::ParseError, "unknown edge type '" + std::string(text) + "'");
}

namespace {

bool is_unit_rotation(const GroupSpec& spec, const GroupElement& g) {
  return g.flip == 0 && (g == rotation(spec, 1) || g == rotation(spec, -1));
}

}  // namespace

GeneratorSet validate_symmetric(const GroupSpec& spec, const std::vector<GroupElement>& gens) {
  std::vector<GroupElement> unique = gens;
  for (const auto& g : unique) {
    if (!is_canonical(spec, g)) throw Error(ErrorCode::NotCanonical, "generator not canonical for " + spec.to_string());
  }
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());

  for (const auto& g : unique) {
    if (g == identity(spec)) throw Error(ErrorCode::ContainsIdentity, "generating set contains e");
  }
  for (const auto& g : unique) {
    const GroupElement inv = inverse(spec, g);
    if (!std::binary_search(unique.begin(), unique.end(), inv)) {
      throw Error(ErrorCode::NonSymmetricSet, "generator " + element_label(spec, g) + " present but its inverse " +
                                                  element_label(spec, inv) + " is missing");
    }
  }

  GeneratorSet out;
  for (const auto& g : unique) {
    const bool a = is_unit_rotation(spec, g);
    out.generators_.push_back({g, a, !a});
  }
  return out;
}

GeneratorSet make_generators(const GroupSpec& spec, std::string_view description) {
  std::vector<GroupElement> elements;
  std::vector<GroupElement> forced_b;

  if (description == "sigma-tau") {
    if (!spec.has_reflection()) throw Error(ErrorCode::ParseError, "sigma-tau needs a dihedral or quaternion group");
    const GroupElement t = reflection(spec);
    elements = {rotation(spec, 1), rotation(spec, -1), t, inverse(spec, t)};
  } else if (description == "s1") {
    elements = {rotation(spec, 1), rotation(spec, -1)};
  } else if (description.starts_with("s1k:")) {
    if (spec.has_reflection()) throw Error(ErrorCode::ParseError, "s1k:<k> needs a cyclic group");
    const std::string_view digits = description.substr(4);
    int k = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw Error(ErrorCode::ParseError, "bad k in '" + std::string(description) + "'");
    }
    forced_b = {rotation(spec, k), rotation(spec, -k)};
    elements = {rotation(spec, 1), rotation(spec, -1), forced_b[0], forced_b[1]};
  } else if (description == "complete") {
    for (const auto& g : enumerate(spec)) {
      if (g != identity(spec)) elements.push_back(g);
    }
  } else if (description.starts_with("list:")) {
    std::string_view rest = description.substr(5);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      elements.push_back(parse_element(spec, rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (elements.empty()) throw Error(ErrorCode::ParseError, "empty generator list");
  } else {
    throw Error(ErrorCode::ParseError, "unknown generating set '" + std::string(description) + "'");
  }

  GeneratorSet out = validate_symmetric(spec, elements);
  for (auto& gen : out.generators_) {
    if (std::find(forced_b.begin(), forced_b.end(), gen.element) != forced_b.end()) gen.type_b = true;
  }
  return out;
}

std::size_t CayleyGraph::parse_vertex(std::string_view label) const { return index_of(parse_element(spec_, label)); }

bool CayleyGraph::has_edge(std::size_t u, std::size_t v) const {
  return edge_lookup_.contains({std::min(u, v), std::max(u, v)});
}

EdgeType CayleyGraph::edge_type(std::size_t u, std::size_t v) const {
  const auto it = edge_lookup_.find({std::min(u, v), std::max(u, v)});
  if (it == edge_lookup_.end()) {
    throw Error(ErrorCode::NotAnEdge, "(" + (u < vertex_count() ? label(u) : std::to_string(u)) + ", " +
                                          (v < vertex_count() ? label(v) : std::to_string(v)) + ") is not an edge");
  }
  return edges_[it->second].type;
}

CayleyGraph build_cayley(const GroupSpec& spec, const GeneratorSet& gens) {
  if (spec.order() < 3) {
    throw Error(ErrorCode::InvalidGroup, "Cayley graphs of groups of order < 3 are degenerate: " + spec.to_string());
  }
  CayleyGraph graph(spec);
  graph.vertices_ = enumerate(spec);
  const std::size_t n = graph.vertices_.size();

  // Edge classes accumulate over every generator that produces the same pair.
  std::map<std::pair<std::size_t, std::size_t>, std::pair<bool, bool>> classes;
  for (std::size_t u = 0; u < n; ++u) {
    for (const auto& gen : gens.generators()) {
      const std::size_t v = graph.index_of(mul(spec, graph.vertices_[u], gen.element));
      auto& cls = classes[{std::min(u, v), std::max(u, v)}];
      cls.first = cls.first || gen.type_a;
      cls.second = cls.second || gen.type_b;
    }
  }

  graph.adjacency_.assign(n, {});
  for (const auto& [key, cls] : classes) {
    const auto [u, v] = key;
    const EdgeType type = cls.first && cls.second ? EdgeType::AB : (cls.first ? EdgeType::A : EdgeType::B);
    graph.edge_lookup_[key] = graph.edges_.size();
    graph.edges_.push_back({u, v, type});
    graph.adjacency_[u].push_back(v);
    graph.adjacency_[v].push_back(u);
  }
  for (auto& adj : graph.adjacency_) std::sort(adj.begin(), adj.end());

  std::vector<bool> seen(n, false);
  std::queue<std::size_t> frontier;
  frontier.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const std::size_t u = frontier.front();
    frontier.pop();
    for (std::size_t v : graph.adjacency_[u]) {
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        frontier.push(v);
      }
    }
  }
  if (reached != n) {
    throw Error(ErrorCode::NotGenerating, "generating set reaches " + std::to_string(reached) + " of " +
                                              std::to_string(n) + " elements of " + spec.to_string());
  }
  return graph;
}

CayleyGraph build_cayley(std::string_view group, std::string_view gens) {
  const GroupSpec spec = GroupSpec::parse(group);
  return build_cayley(spec, make_generators(spec, gens));
}

}  // namespace ricci
