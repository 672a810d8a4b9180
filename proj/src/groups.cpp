#include "cayley_ricci/groups.hpp"

#include <cctype>
#include <charconv>

#include "cayley_ricci/error.hpp"

namespace ricci {

namespace {

int mod(long long value, int modulus) {
  const long long r = value % modulus;
  return static_cast<int>(r < 0 ? r + modulus : r);
}

int parse_positive(std::string_view text, std::string_view what) {
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::ParseError, "bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

void require_canonical(const GroupSpec& spec, const GroupElement& g) {
  if (!is_canonical(spec, g)) {
    throw Error(ErrorCode::NotCanonical, "element (" + std::to_string(g.rotation) + "," +
                                             std::to_string(g.flip) + ") is not canonical for " +
                                             spec.to_string());
  }
}

}  // namespace

GroupSpec GroupSpec::dihedral(int n) {
  if (n < 3) throw Error(ErrorCode::InvalidGroup, "dihedral group needs n >= 3, got " + std::to_string(n));
  return {GroupKind::Dihedral, n};
}

GroupSpec GroupSpec::quaternion(int m) {
  if (m < 2) throw Error(ErrorCode::InvalidGroup, "generalized quaternion group needs m >= 2, got " + std::to_string(m));
  return {GroupKind::GeneralizedQuaternion, m};
}

GroupSpec GroupSpec::cyclic(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidGroup, "cyclic group needs n >= 1, got " + std::to_string(n));
  return {GroupKind::Cyclic, n};
}

GroupSpec GroupSpec::parse(std::string_view text) {
  if (text.size() < 3 || text[1] != ':') {
    throw Error(ErrorCode::ParseError, "group must look like D:<n>, Q:<4m> or Z:<n>, got '" + std::string(text) + "'");
  }
  const int value = parse_positive(text.substr(2), "group order");
  switch (text[0]) {
    case 'D': return dihedral(value);
    case 'Z': return cyclic(value);
    case 'Q':
      if (value % 4 != 0) {
        throw Error(ErrorCode::InvalidGroup, "Q:<order> needs an order divisible by 4, got " + std::to_string(value));
      }
      return quaternion(value / 4);
    default:
      throw Error(ErrorCode::ParseError, "unknown group family '" + std::string(1, text[0]) + "'");
  }
}

std::string GroupSpec::to_string() const {
  switch (kind_) {
    case GroupKind::Dihedral: return "D:" + std::to_string(parameter_);
    case GroupKind::GeneralizedQuaternion: return "Q:" + std::to_string(4 * parameter_);
    case GroupKind::Cyclic: return "Z:" + std::to_string(parameter_);
  }
  return {};
}

int GroupSpec::rotation_order() const {
  return kind_ == GroupKind::GeneralizedQuaternion ? 2 * parameter_ : parameter_;
}

int GroupSpec::order() const { return has_reflection() ? 2 * rotation_order() : rotation_order(); }

GroupElement identity(const GroupSpec&) { return {}; }

GroupElement rotation(const GroupSpec& spec, int exponent) { return {mod(exponent, spec.rotation_order()), 0}; }

GroupElement reflection(const GroupSpec& spec) {
  if (!spec.has_reflection()) throw Error(ErrorCode::InvalidGroup, spec.to_string() + " has no reflection generator");
  return {0, 1};
}

bool is_canonical(const GroupSpec& spec, const GroupElement& g) {
  if (g.rotation < 0 || g.rotation >= spec.rotation_order()) return false;
  return spec.has_reflection() ? (g.flip == 0 || g.flip == 1) : g.flip == 0;
}

GroupElement mul(const GroupSpec& spec, const GroupElement& a, const GroupElement& b) {
  require_canonical(spec, a);
  require_canonical(spec, b);
  const int order = spec.rotation_order();
  if (!spec.has_reflection()) return {mod(static_cast<long long>(a.rotation) + b.rotation, order), 0};

  // Both presentations satisfy t s^c = s^-c t, so
  // (s^a t^x)(s^c t^y) = s^(a + (-1)^x c) t^(x + y).
  long long exponent = a.flip == 0 ? a.rotation + b.rotation : a.rotation - b.rotation;
  int flip = a.flip + b.flip;
  if (flip == 2) {
    flip = 0;
    // t^2 = e in D_n, t^2 = s^m in Q_4m.
    if (spec.kind() == GroupKind::GeneralizedQuaternion) exponent += spec.parameter();
  }
  return {mod(exponent, order), flip};
}

GroupElement inverse(const GroupSpec& spec, const GroupElement& a) {
  require_canonical(spec, a);
  const int order = spec.rotation_order();
  if (a.flip == 0) return {mod(-static_cast<long long>(a.rotation), order), 0};
  if (spec.kind() == GroupKind::Dihedral) return a;  // reflections are involutions
  // (s^i t)^-1 = t^-1 s^-i = s^m t s^-i = s^(m+i) t.
  return {mod(static_cast<long long>(a.rotation) + spec.parameter(), order), 1};
}

std::vector<GroupElement> enumerate(const GroupSpec& spec) {
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(spec.order()));
  const int flips = spec.has_reflection() ? 2 : 1;
  for (int i = 0; i < spec.rotation_order(); ++i) {
    for (int j = 0; j < flips; ++j) out.push_back({i, j});
  }
  return out;
}

std::size_t element_index(const GroupSpec& spec, const GroupElement& g) {
  require_canonical(spec, g);
  const int flips = spec.has_reflection() ? 2 : 1;
  return static_cast<std::size_t>(g.rotation * flips + g.flip);
}

std::string element_label(const GroupSpec& spec, const GroupElement& g) {
  require_canonical(spec, g);
  if (!spec.has_reflection()) return std::to_string(g.rotation);
  std::string label;
  if (g.rotation == 1) label = "s";
  else if (g.rotation > 1) label = "s" + std::to_string(g.rotation);
  if (g.flip == 1) label += "t";
  return label.empty() ? "e" : label;
}

GroupElement parse_element(const GroupSpec& spec, std::string_view label) {
  if (!spec.has_reflection()) {
    bool negative = !label.empty() && label.front() == '-';
    if (negative) label.remove_prefix(1);
    const int value = parse_positive(label, "residue");
    return rotation(spec, negative ? -value : value);
  }
  if (label == "e") return identity(spec);
  GroupElement g;
  std::string_view rest = label;
  if (!rest.empty() && rest.front() == 's') {
    rest.remove_prefix(1);
    std::size_t digits = 0;
    while (digits < rest.size() && std::isdigit(static_cast<unsigned char>(rest[digits]))) ++digits;
    const int exponent = digits == 0 ? 1 : parse_positive(rest.substr(0, digits), "exponent");
    g.rotation = mod(exponent, spec.rotation_order());
    rest.remove_prefix(digits);
  }
  if (rest == "t") {
    g.flip = 1;
    rest.remove_prefix(1);
  }
  if (!rest.empty() || label.empty()) {
    throw Error(ErrorCode::ParseError, "bad element label '" + std::string(label) + "' for " + spec.to_string());
  }
  return g;
}

}  // namespace ricci
