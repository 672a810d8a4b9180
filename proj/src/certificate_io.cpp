#include "cayley_ricci/certificate_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cayley_ricci/error.hpp"

namespace ricci {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream stream(line.substr(0, line.find('#')));
  std::vector<std::string> out;
  for (std::string token; stream >> token;) out.push_back(token);
  return out;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + what);
}

std::size_t vertex_at(const CayleyGraph& graph, const std::string& token, std::size_t line_no) {
  try {
    return graph.parse_vertex(token);
  } catch (const Error& e) {
    fail(line_no, "bad vertex '" + token + "'");
  }
}

// Shared directives; returns true when the line was one of them.
bool read_directive(const CayleyGraph& graph, const std::vector<std::string>& tokens, std::size_t line_no,
                    CertificateFile& out) {
  if (tokens[0] == "edge") {
    if (tokens.size() != 3) fail(line_no, "expected 'edge <u> <v>'");
    out.edge = std::make_pair(vertex_at(graph, tokens[1], line_no), vertex_at(graph, tokens[2], line_no));
    return true;
  }
  if (tokens[0] == "alpha") {
    if (tokens.size() != 2) fail(line_no, "expected 'alpha <p/q>'");
    out.alpha = Rational::parse(tokens[1]);
    return true;
  }
  return false;
}

}  // namespace

CertificateFile read_plan(const CayleyGraph& graph, std::istream& in) {
  CertificateFile out;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto tokens = tokens_of(line);
    if (tokens.empty() || read_directive(graph, tokens, line_no, out)) continue;
    if (tokens.size() != 3) fail(line_no, "expected '<src> <dst> <p/q>'");
    const std::size_t src = vertex_at(graph, tokens[0], line_no);
    const std::size_t dst = vertex_at(graph, tokens[1], line_no);
    Rational mass;
    try {
      mass = Rational::parse(tokens[2]);
    } catch (const Error&) {
      fail(line_no, "bad mass '" + tokens[2] + "'");
    }
    out.plan[{src, dst}] += mass;
  }
  return out;
}

CertificateFile read_potential(const CayleyGraph& graph, std::istream& in) {
  CertificateFile out;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto tokens = tokens_of(line);
    if (tokens.empty() || read_directive(graph, tokens, line_no, out)) continue;
    if (tokens.size() != 2) fail(line_no, "expected '<vertex> <integer>'");
    const std::size_t v = vertex_at(graph, tokens[0], line_no);
    std::int64_t value = 0;
    const auto& t = tokens[1];
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc() || ptr != t.data() + t.size()) fail(line_no, "bad potential value '" + t + "'");
    if (!out.potential.emplace(v, value).second) fail(line_no, "vertex '" + tokens[0] + "' listed twice");
  }
  return out;
}

void write_plan(const CayleyGraph& graph, std::ostream& out, std::size_t u, std::size_t v, const Rational& alpha,
                const TransportPlan& plan) {
  out << "edge " << graph.label(u) << ' ' << graph.label(v) << '\n';
  out << "alpha " << alpha << '\n';
  for (const auto& [key, mass] : plan) out << graph.label(key.first) << ' ' << graph.label(key.second) << ' ' << mass << '\n';
}

void write_potential(const CayleyGraph& graph, std::ostream& out, std::size_t u, std::size_t v,
                     const LipschitzPotential& potential) {
  out << "edge " << graph.label(u) << ' ' << graph.label(v) << '\n';
  for (const auto& [vertex, value] : potential) out << graph.label(vertex) << ' ' << value << '\n';
}

}  // namespace ricci
