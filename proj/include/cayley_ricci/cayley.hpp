#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cayley_ricci/groups.hpp"

namespace ricci {

/// A: produced by s^{+-1} (or residues +-1). B: produced by the second
/// generator pair (t^{+-1}, or +-k). AB: both classes produce the same edge.
enum class EdgeType { A, B, AB };

std::string_view to_string(EdgeType type);
EdgeType parse_edge_type(std::string_view text);

struct Generator {
  GroupElement element;
  bool type_a = false;
  bool type_b = false;
};

/// Symmetric identity-free generating set, deduplicated, each element tagged
/// with the edge classes it contributes to.
class GeneratorSet {
 public:
  const std::vector<Generator>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }

 private:
  friend GeneratorSet validate_symmetric(const GroupSpec&, const std::vector<GroupElement>&);
  friend GeneratorSet make_generators(const GroupSpec&, std::string_view);
  std::vector<Generator> generators_;
};

/// Deduplicates gens and checks e not in S, S = S^-1. Elements s^{+-1} are
/// tagged type A, everything else type B.
GeneratorSet validate_symmetric(const GroupSpec& spec, const std::vector<GroupElement>& gens);

/// Named generating sets:
///   "sigma-tau"        {s, s^-1, t, t^-1} for D_n and Q_4m
///   "s1"               {+1, -1}
///   "s1k:<k>"          {+1, -1, +k, -k}; +-k tagged B even when they coincide with +-1
///   "complete"         every non-identity element
///   "list:a,b,..."     explicit elements (element labels, residues may be negative)
GeneratorSet make_generators(const GroupSpec& spec, std::string_view description);

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;  // u < v
  EdgeType type = EdgeType::A;
};

class CayleyGraph {
 public:
  const GroupSpec& spec() const { return spec_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  const std::vector<GroupElement>& vertices() const { return vertices_; }
  const GroupElement& vertex(std::size_t index) const { return vertices_.at(index); }
  std::size_t index_of(const GroupElement& g) const { return element_index(spec_, g); }
  std::string label(std::size_t index) const { return element_label(spec_, vertices_.at(index)); }
  /// Parses an element label (see element_label) into a vertex index.
  std::size_t parse_vertex(std::string_view label) const;

  const std::vector<std::size_t>& neighbors(std::size_t index) const { return adjacency_.at(index); }
  std::size_t degree(std::size_t index) const { return adjacency_.at(index).size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(std::size_t u, std::size_t v) const;
  /// Throws NotAnEdge.
  EdgeType edge_type(std::size_t u, std::size_t v) const;

 private:
  friend CayleyGraph build_cayley(const GroupSpec&, const GeneratorSet&);
  explicit CayleyGraph(GroupSpec spec) : spec_(spec) {}

  GroupSpec spec_;
  std::vector<GroupElement> vertices_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<Edge> edges_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_lookup_;
};

/// Vertices are group elements in enumerate() order; {g, gs} is an edge for
/// every s in S. Throws InvalidGroup for groups of order < 3 and NotGenerating
/// when the result is disconnected.
CayleyGraph build_cayley(const GroupSpec& spec, const GeneratorSet& gens);

/// Convenience: parse both descriptors and build.
CayleyGraph build_cayley(std::string_view group, std::string_view gens);

}  // namespace ricci
