#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "cayley_ricci/error.hpp"
#include "cayley_ricci/groups.hpp"

using namespace ricci;

namespace {

std::vector<GroupSpec> sample_groups() {
  return {GroupSpec::dihedral(3), GroupSpec::dihedral(4), GroupSpec::dihedral(7), GroupSpec::quaternion(2),
          GroupSpec::quaternion(3), GroupSpec::quaternion(5), GroupSpec::cyclic(1), GroupSpec::cyclic(12)};
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::ParseError;
}

}  // namespace

TEST(Groups, Orders) {
  EXPECT_EQ(GroupSpec::dihedral(5).order(), 10);
  EXPECT_EQ(GroupSpec::quaternion(3).order(), 12);
  EXPECT_EQ(GroupSpec::cyclic(9).order(), 9);
}

TEST(Groups, ParseAndPrint) {
  EXPECT_EQ(GroupSpec::parse("D:6"), GroupSpec::dihedral(6));
  EXPECT_EQ(GroupSpec::parse("Q:12"), GroupSpec::quaternion(3));
  EXPECT_EQ(GroupSpec::parse("Z:5").to_string(), "Z:5");
  EXPECT_EQ(GroupSpec::quaternion(2).to_string(), "Q:8");
  for (const char* bad : {"D:2", "Q:10", "Q:4", "Z:0"}) {
    EXPECT_EQ(code_of([&] { GroupSpec::parse(bad); }), ErrorCode::InvalidGroup) << bad;
  }
  for (const char* bad : {"X:3", "D:", "D:3x", "D6"}) {
    EXPECT_EQ(code_of([&] { GroupSpec::parse(bad); }), ErrorCode::ParseError) << bad;
  }
}

TEST(Groups, DihedralRelations) {
  const auto d = GroupSpec::dihedral(5);
  const auto s = rotation(d), t = reflection(d), e = identity(d);
  EXPECT_EQ(mul(d, t, s), mul(d, rotation(d, 4), t));  // t s = s^-1 t
  EXPECT_EQ(mul(d, t, t), e);
  GroupElement p = e;
  for (int i = 0; i < 5; ++i) p = mul(d, p, s);
  EXPECT_EQ(p, e);
}

TEST(Groups, QuaternionRelations) {
  const auto q = GroupSpec::quaternion(2);
  const auto s = rotation(q), t = reflection(q), e = identity(q);
  EXPECT_EQ(mul(q, t, t), rotation(q, 2));  // t^2 = s^m
  EXPECT_EQ(inverse(q, t), (GroupElement{2, 1}));
  EXPECT_EQ(element_label(q, inverse(q, t)), "s2t");
  EXPECT_EQ(mul(q, mul(q, inverse(q, t), s), t), inverse(q, s));  // t^-1 s t = s^-1
  EXPECT_NE(mul(q, t, t), e);
}

TEST(Groups, AxiomsOnEveryTriple) {
  for (const auto& spec : sample_groups()) {
    const auto elems = enumerate(spec);
    ASSERT_EQ(static_cast<int>(elems.size()), spec.order());
    const auto e = identity(spec);
    for (const auto& a : elems) {
      EXPECT_EQ(mul(spec, a, e), a);
      EXPECT_EQ(mul(spec, e, a), a);
      EXPECT_EQ(mul(spec, a, inverse(spec, a)), e);
      EXPECT_EQ(mul(spec, inverse(spec, a), a), e);
      for (const auto& b : elems) {
        EXPECT_TRUE(is_canonical(spec, mul(spec, a, b)));
        for (const auto& c : elems) {
          ASSERT_EQ(mul(spec, mul(spec, a, b), c), mul(spec, a, mul(spec, b, c))) << spec.to_string();
        }
      }
    }
  }
}

TEST(Groups, LeftMultiplicationIsBijection) {
  for (const auto& spec : sample_groups()) {
    const auto elems = enumerate(spec);
    for (const auto& g : elems) {
      std::set<GroupElement> image;
      for (const auto& h : elems) image.insert(mul(spec, g, h));
      EXPECT_EQ(image.size(), elems.size());
    }
  }
}

TEST(Groups, IndexAndLabelRoundTrip) {
  for (const auto& spec : sample_groups()) {
    const auto elems = enumerate(spec);
    for (std::size_t i = 0; i < elems.size(); ++i) {
      EXPECT_EQ(element_index(spec, elems[i]), i);
      EXPECT_EQ(parse_element(spec, element_label(spec, elems[i])), elems[i]);
    }
  }
  const auto d = GroupSpec::dihedral(6);
  EXPECT_EQ(element_label(d, GroupElement{0, 0}), "e");
  EXPECT_EQ(element_label(d, GroupElement{1, 1}), "st");
  EXPECT_EQ(element_label(d, GroupElement{3, 1}), "s3t");
  EXPECT_EQ(parse_element(GroupSpec::cyclic(7), "-2"), (GroupElement{5, 0}));
}

TEST(Groups, NonCanonicalOperandsThrow) {
  const auto d = GroupSpec::dihedral(4);
  EXPECT_EQ(code_of([&] { mul(d, GroupElement{4, 0}, identity(d)); }), ErrorCode::NotCanonical);
  EXPECT_EQ(code_of([&] { inverse(d, GroupElement{0, 2}); }), ErrorCode::NotCanonical);
  EXPECT_EQ(code_of([&] { mul(GroupSpec::cyclic(5), GroupElement{1, 1}, GroupElement{0, 0}); }),
            ErrorCode::NotCanonical);
  EXPECT_EQ(code_of([] { reflection(GroupSpec::cyclic(5)); }), ErrorCode::InvalidGroup);
}
