#include <set>

#include "doctest.h"
#include "qudo/group.hpp"

using qudo::DihedralHandles;
using qudo::FiniteGroup;
using qudo::GroupElement;
using qudo::GroupKind;

namespace {

void check_group_axioms(const FiniteGroup& g) {
  auto elts = g.elements();
  for (const auto& a : elts) {
    CHECK(g.multiply(a, g.identity()) == a);
    CHECK(g.multiply(g.identity(), a) == a);
    CHECK(g.multiply(a, g.inverse(a)) == g.identity());
    CHECK(g.multiply(g.inverse(a), a) == g.identity());
  }
  int violations = 0;
  for (const auto& a : elts)
    for (const auto& b : elts)
      for (const auto& c : elts)
        if (!(g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c))))
          ++violations;
  CHECK(violations == 0);
}

}  // namespace

TEST_CASE("dihedral multiplication table") {
  FiniteGroup d8 = FiniteGroup::dihedral(8);  // D_8: r^8 = s^2 = id
  GroupElement r3s{3, 1}, r5s{5, 1};
  CHECK(d8.multiply(r3s, r5s) == GroupElement{6, 0});  // r^3 s r^5 s = r^{-2}
  CHECK(d8.multiply(GroupElement{1, 0}, GroupElement{1, 0}) == GroupElement{2, 0});
  CHECK(d8.inverse(GroupElement{1, 0}) == GroupElement{7, 0});
  CHECK(d8.inverse(r3s) == r3s);  // reflections are involutions
  CHECK(d8.conjugate(GroupElement{1, 0}, GroupElement{0, 1}) == GroupElement{2, 1});
  CHECK(d8.element_order(GroupElement{1, 0}) == 8);
  CHECK(d8.element_order(GroupElement{0, 1}) == 2);
  CHECK(d8.power(GroupElement{1, 0}, -3) == GroupElement{5, 0});
}

TEST_CASE("group axioms hold exhaustively for all supported groups up to order 64") {
  for (int n = 1; n <= 8; ++n) check_group_axioms(FiniteGroup::dihedral(4 * n));
  check_group_axioms(FiniteGroup::cyclic(1));
  check_group_axioms(FiniteGroup::cyclic(7));
  check_group_axioms(FiniteGroup::parse_spec("Z2xZ2"));
  check_group_axioms(FiniteGroup::product2(FiniteGroup::cyclic(3), FiniteGroup::cyclic(4)));
}

TEST_CASE("canonical enumeration: rotations first, then reflections") {
  FiniteGroup d4 = FiniteGroup::dihedral(4);
  CHECK(d4.index(GroupElement{0, 0}) == 0);
  CHECK(d4.index(GroupElement{3, 0}) == 3);
  CHECK(d4.index(GroupElement{0, 1}) == 4);
  CHECK(d4.index(GroupElement{3, 1}) == 7);
  for (int i = 0; i < d4.size(); ++i) CHECK(d4.index(d4.element(i)) == i);
}

TEST_CASE("conjugacy classes partition the group with orbit-stabilizer sizes") {
  for (int n : {1, 2}) {
    FiniteGroup g = FiniteGroup::dihedral(4 * n);
    auto classes = g.conjugacy_classes();
    std::set<int> covered;
    for (const auto& cls : classes) {
      for (const auto& e : cls) covered.insert(g.index(e));
      CHECK(static_cast<int>(cls.size()) * g.centralizer(cls[0]).size() == g.size());
    }
    CHECK(static_cast<int>(covered.size()) == g.size());
  }
  // D_4: {id}, {r^2}, {r, r^3}, {s, r^2 s}, {rs, r^3 s}
  CHECK(FiniteGroup::dihedral(4).conjugacy_classes().size() == 5);
  // D_8: {id}, {r^4}, three rotation pairs, even and odd reflections
  CHECK(FiniteGroup::dihedral(8).conjugacy_classes().size() == 7);
}

TEST_CASE("centralizers in D_{4N}") {
  for (int n : {1, 2, 3}) {
    FiniteGroup g = FiniteGroup::dihedral(4 * n);
    DihedralHandles h = DihedralHandles::make(g);
    // C(s) = {id, s, r^{2N}, r^{2N}s}, a Klein four-group
    auto cs = g.centralizer(h.s);
    CHECK(cs.size() == 4);
    CHECK(cs.contains(h.r2N));
    CHECK(cs.contains(g.multiply(h.r2N, h.s)));
    // C(r) = <r>
    auto cr = g.centralizer(h.r);
    CHECK(cr.size() == 4 * n);
    for (const auto& e : cr.elements) CHECK(e.y == 0);
    // central elements
    CHECK(g.centralizer(g.identity()).size() == g.size());
    CHECK(g.centralizer(h.r2N).size() == g.size());
  }
}

TEST_CASE("subgroup generation") {
  FiniteGroup d4 = FiniteGroup::dihedral(4);
  auto rs = d4.subgroup_generated({GroupElement{1, 1}});
  CHECK(rs.size() == 2);
  CHECK(rs.contains(GroupElement{0, 0}));
  CHECK(rs.contains(GroupElement{1, 1}));
  CHECK(rs.name == "<rs>");
  auto r = d4.subgroup_generated({GroupElement{1, 0}});
  CHECK(r.size() == 4);
  auto trivial = d4.subgroup_generated({d4.identity()});
  CHECK(trivial.size() == 1);
  auto whole = d4.subgroup_generated({GroupElement{1, 0}, GroupElement{0, 1}});
  CHECK(whole.size() == 8);
}

TEST_CASE("element formatting and parsing round-trip") {
  FiniteGroup d8 = FiniteGroup::dihedral(8);
  CHECK(d8.format(GroupElement{0, 0}) == "id");
  CHECK(d8.format(GroupElement{1, 0}) == "r");
  CHECK(d8.format(GroupElement{2, 0}) == "r^2");
  CHECK(d8.format(GroupElement{0, 1}) == "s");
  CHECK(d8.format(GroupElement{1, 1}) == "rs");
  CHECK(d8.format(GroupElement{3, 1}) == "r^3s");
  for (const auto& e : d8.elements()) CHECK(d8.parse(d8.format(e)) == e);
  CHECK(d8.parse("r^3 s") == GroupElement{3, 1});  // tolerant of a space
  CHECK_THROWS(d8.parse("q"));

  FiniteGroup z4 = FiniteGroup::cyclic(4);
  CHECK(z4.format(GroupElement{0, 0}) == "id");
  CHECK(z4.format(GroupElement{1, 0}) == "g");
  CHECK(z4.format(GroupElement{3, 0}) == "g^3");
  for (const auto& e : z4.elements()) CHECK(z4.parse(z4.format(e)) == e);

  FiniteGroup v = FiniteGroup::parse_spec("Z2xZ2");
  CHECK(v.format(GroupElement{1, 1}) == "(g,g)");
  for (const auto& e : v.elements()) CHECK(v.parse(v.format(e)) == e);
}

TEST_CASE("group spec strings round-trip") {
  CHECK(FiniteGroup::parse_spec("D4N:N=2").size() == 16);
  CHECK(FiniteGroup::parse_spec("D4N:N=2").spec() == "D4N:N=2");
  CHECK(FiniteGroup::parse_spec("Z:5").size() == 5);
  CHECK(FiniteGroup::parse_spec("Z:5").spec() == "Z:5");
  CHECK(FiniteGroup::parse_spec("Z2xZ2").size() == 4);
  CHECK(FiniteGroup::parse_spec("Z2xZ2").spec() == "Z2xZ2");
  CHECK(FiniteGroup::parse_spec("Z2xZ2").is_abelian());
  CHECK_FALSE(FiniteGroup::parse_spec("D4N:N=1").is_abelian());
  CHECK_THROWS(FiniteGroup::parse_spec("Q8"));
}

TEST_CASE("dihedral handles expose the boundary subgroups") {
  FiniteGroup g = FiniteGroup::parse_spec("D4N:N=2");
  DihedralHandles h = DihedralHandles::make(g);
  CHECK(h.r2N == GroupElement{4, 0});
  CHECK(h.gen_r.size() == 8);
  CHECK(h.gen_s.size() == 2);
  CHECK(h.gen_rs.size() == 2);
  CHECK(h.gen_rs.contains(GroupElement{1, 1}));
  // r^{2N} is central
  for (const auto& e : g.elements()) CHECK(g.commutes(e, h.r2N));
}
