#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <utility>

#include "cayley_ricci/cayley.hpp"
#include "cayley_ricci/rational.hpp"
#include "cayley_ricci/transport.hpp"

namespace ricci {

// Plain-text certificate files. Vertices are element labels ("e", "s2t", or
// residues for cyclic groups). '#' starts a comment.
//
//   plan file        edge <u> <v>            the edge whose measures are coupled
//                    alpha <p/q>             optional, the idleness the masses assume
//                    <src> <dst> <p/q>       one coupling entry per line
//
//   potential file   edge <u> <v>            optional
//                    <vertex> <integer>      one value per line
struct CertificateFile {
  std::optional<std::pair<std::size_t, std::size_t>> edge;
  std::optional<Rational> alpha;
  TransportPlan plan;
  LipschitzPotential potential;
};

/// Throws ParseError with the offending line number.
CertificateFile read_plan(const CayleyGraph& graph, std::istream& in);
CertificateFile read_potential(const CayleyGraph& graph, std::istream& in);

void write_plan(const CayleyGraph& graph, std::ostream& out, std::size_t u, std::size_t v, const Rational& alpha,
                const TransportPlan& plan);
void write_potential(const CayleyGraph& graph, std::ostream& out, std::size_t u, std::size_t v,
                     const LipschitzPotential& potential);

}  // namespace ricci
