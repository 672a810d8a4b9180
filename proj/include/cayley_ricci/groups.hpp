#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ricci {

enum class GroupKind { Dihedral, GeneralizedQuaternion, Cyclic };

/// A finite group given by one of three fixed presentations:
///   Dihedral(n)              <s, t | s^n = t^2 = e, t s = s^(n-1) t>,  n >= 3
///   GeneralizedQuaternion(m) <s, t | s^2m = e, t^2 = s^m, t^-1 s t = s^-1>, m >= 2
///   Cyclic(n)                integers modulo n, n >= 1
class GroupSpec {
 public:
  static GroupSpec dihedral(int n);
  static GroupSpec quaternion(int m);
  static GroupSpec cyclic(int n);

  /// "D:<n>", "Q:<4m>" (the group order, divisible by 4) or "Z:<n>".
  static GroupSpec parse(std::string_view text);
  std::string to_string() const;

  GroupKind kind() const { return kind_; }
  /// n for Dihedral and Cyclic, m for GeneralizedQuaternion.
  int parameter() const { return parameter_; }
  /// Order of the rotation generator s (n, 2m, or n).
  int rotation_order() const;
  int order() const;
  bool has_reflection() const { return kind_ != GroupKind::Cyclic; }

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  GroupSpec(GroupKind kind, int parameter) : kind_(kind), parameter_(parameter) {}

  GroupKind kind_;
  int parameter_;
};

/// Canonical word s^rotation t^flip. Cyclic elements use rotation as the
/// residue and flip = 0.
struct GroupElement {
  int rotation = 0;
  int flip = 0;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

GroupElement identity(const GroupSpec& spec);
/// The element s (residue 1 for cyclic groups).
GroupElement rotation(const GroupSpec& spec, int exponent = 1);
/// The element t. Throws InvalidGroup for cyclic groups.
GroupElement reflection(const GroupSpec& spec);

bool is_canonical(const GroupSpec& spec, const GroupElement& g);

/// Throws NotCanonical if either operand is out of range for spec.
GroupElement mul(const GroupSpec& spec, const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupSpec& spec, const GroupElement& a);

/// All elements, rotation-major then flip; residue order for cyclic groups.
std::vector<GroupElement> enumerate(const GroupSpec& spec);
/// Position of g in enumerate(spec).
std::size_t element_index(const GroupSpec& spec, const GroupElement& g);

/// "e", "s", "s3", "t", "st", "s3t"; decimal residues for cyclic groups.
std::string element_label(const GroupSpec& spec, const GroupElement& g);
GroupElement parse_element(const GroupSpec& spec, std::string_view label);

}  // namespace ricci
