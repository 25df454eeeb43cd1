#include <algorithm>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "doctest.h"
#include "qudo/stabilizers.hpp"

using qudo::boundary_stabilizer;
using qudo::boundary_stabilizers;
using qudo::CommutatorReport;
using qudo::DihedralHandles;
using qudo::EdgeConfig;
using qudo::FiniteGroup;
using qudo::GroupElement;
using qudo::logical_representative;
using qudo::logical_state;
using qudo::MonomialOp;
using qudo::monomial_equal;
using qudo::PatchGeometry;
using qudo::Phase;
using qudo::Region;
using qudo::SparseState;
using qudo::stabilizer_S_r;
using qudo::stabilizer_S_r_lattice_form;
using qudo::stabilizer_S_s;
using qudo::stabilizer_S_s_lattice_form;
using qudo::StabilizerKind;
using qudo::syndrome;
using qudo::vertex_op;
using qudo::verify_commutators;
using qudo::verify_projector_reconstruction;
using qudo::verify_stabilization;

namespace {

Phase eigenvalue_of(const MonomialOp& op, const EdgeConfig& c) {
  EdgeConfig copy = c;
  Phase ph = Phase::one();
  op.apply(copy, ph);
  REQUIRE(copy == c);  // diagonal operators never move the config
  return ph;
}

}  // namespace

TEST_CASE("plaquette stabilizers read the flux exponents exactly") {
  for (int N : {1, 2}) {
    CAPTURE(N);
    PatchGeometry geo = PatchGeometry::dihedral_patch(N, 4, 4);
    const FiniteGroup& g = geo.group();
    int m = g.rotation_order();  // 4N
    MonomialOp Sr = stabilizer_S_r(geo, 1, 1);
    MonomialOp Ss = stabilizer_S_s(geo, 1, 1);
    auto pe = geo.plaquette_edges(1, 1);

    // Exhaustive over all 4-edge plaquette configs: the eigenvalues are the
    // two exponents of the flux computed independently here.
    EdgeConfig c = geo.identity_config();
    for (int i1 = 0; i1 < g.size(); ++i1)
      for (int i2 = 0; i2 < g.size(); ++i2)
        for (int i3 = 0; i3 < g.size(); ++i3)
          for (int i4 = 0; i4 < g.size(); ++i4) {
            c[static_cast<std::size_t>(pe.left)] = static_cast<std::uint8_t>(i1);
            c[static_cast<std::size_t>(pe.top)] = static_cast<std::uint8_t>(i2);
            c[static_cast<std::size_t>(pe.right)] = static_cast<std::uint8_t>(i3);
            c[static_cast<std::size_t>(pe.bottom)] = static_cast<std::uint8_t>(i4);
            GroupElement f = g.multiply(
                g.multiply(g.multiply(g.element(i1), g.element(i2)),
                           g.inverse(g.element(i3))),
                g.inverse(g.element(i4)));
            if (!(eigenvalue_of(Sr, c) == Phase::root_of_unity(m, f.x))) {
              REQUIRE(eigenvalue_of(Sr, c) == Phase::root_of_unity(m, f.x));
            }
            if (!(eigenvalue_of(Ss, c) == Phase::root_of_unity(m, f.y))) {
              REQUIRE(eigenvalue_of(Ss, c) == Phase::root_of_unity(m, f.y));
            }
          }
  }
}

TEST_CASE("stabilizer eigenvalue pins: flux r gives i, reflections give -1 under (S_s)^2N") {
  PatchGeometry geo = PatchGeometry::dihedral_patch(1, 4, 4);
  DihedralHandles h = DihedralHandles::make(geo.group());

  EdgeConfig c = geo.identity_config();
  CHECK(eigenvalue_of(stabilizer_S_r(geo, 2, 2), c) == Phase::one());
  CHECK(eigenvalue_of(stabilizer_S_s(geo, 2, 2), c) == Phase::one());

  // Flux r at plaquette (2,2): set its top edge to r.
  c[static_cast<std::size_t>(geo.h_edge(2, 3))] =
      static_cast<std::uint8_t>(geo.group().index(h.r));
  CHECK(geo.flux(c, 2, 2) == h.r);
  CHECK(eigenvalue_of(stabilizer_S_r(geo, 2, 2), c) == Phase::i());
  CHECK(eigenvalue_of(stabilizer_S_s(geo, 2, 2), c) == Phase::one());

  // Reflection flux: top edge s -> flux s, beta = 1.
  c[static_cast<std::size_t>(geo.h_edge(2, 3))] =
      static_cast<std::uint8_t>(geo.group().index(h.s));
  CHECK(geo.flux(c, 2, 2) == h.s);
  CHECK(eigenvalue_of(stabilizer_S_s(geo, 2, 2).pow(2), c) == Phase::minus_one());

  // S_r has order 4N and S_s^2 squares to the identity on every config.
  CHECK(monomial_equal(geo, stabilizer_S_r(geo, 2, 2).pow(4),
                       MonomialOp::identity_op()).equal);
  CHECK(monomial_equal(geo, stabilizer_S_s(geo, 2, 2).pow(4),
                       MonomialOp::identity_op()).equal);
}

TEST_CASE("lattice-form stabilizers agree with the flux route on every config") {
  for (int N : {1, 2, 3}) {
    CAPTURE(N);
    PatchGeometry geo = PatchGeometry::dihedral_patch(N, 4, 4);
    auto cr = monomial_equal(geo, stabilizer_S_r(geo, 1, 2),
                             stabilizer_S_r_lattice_form(geo, 1, 2));
    CHECK(cr.equal);
    CHECK(cr.exhaustive);
    CHECK(cr.checked ==
          static_cast<unsigned long long>(geo.group().size()) *
              geo.group().size() * geo.group().size() * geo.group().size());
    auto cs = monomial_equal(geo, stabilizer_S_s(geo, 1, 2),
                             stabilizer_S_s_lattice_form(geo, 1, 2));
    CHECK(cs.equal);
    CHECK(cs.exhaustive);
  }
  // Large N: seeded sampling (the joint space is beyond the stream budget).
  for (int N : {4, 8}) {
    CAPTURE(N);
    PatchGeometry geo = PatchGeometry::dihedral_patch(N, 4, 4);
    auto cr = monomial_equal(geo, stabilizer_S_r(geo, 1, 2),
                             stabilizer_S_r_lattice_form(geo, 1, 2),
                             /*exhaustive_limit=*/1ull << 19, /*samples=*/100000);
    CHECK(cr.equal);
    CHECK(!cr.exhaustive);
    CHECK(cr.checked == 100000u);
    CHECK(monomial_equal(geo, stabilizer_S_s(geo, 1, 2),
                         stabilizer_S_s_lattice_form(geo, 1, 2),
                         1ull << 19, 100000).equal);
  }
}

TEST_CASE("boundary stabilizers take +1 exactly on their boundary subgroup") {
  for (int N : {1, 2}) {
    CAPTURE(N);
    PatchGeometry geo = PatchGeometry::dihedral_patch(N, 4, 4);
    const FiniteGroup& g = geo.group();
    for (int e : {geo.v_edge(0, 1), geo.h_edge(1, 4), geo.v_edge(4, 2),
                  geo.h_edge(2, 0)}) {
      CAPTURE(geo.edge_name(e));
      MonomialOp sb = boundary_stabilizer(geo, e);
      const qudo::Subgroup& k = geo.edge_group(e);
      for (int i = 0; i < g.size(); ++i) {
        EdgeConfig c = geo.identity_config();
        c[static_cast<std::size_t>(e)] = static_cast<std::uint8_t>(i);
        bool inside = k.contains(g.element(i));
        CHECK((eigenvalue_of(sb, c) == Phase::one()) == inside);
      }
    }
    CHECK_THROWS_AS(boundary_stabilizer(geo, geo.h_edge(1, 1)),
                    std::invalid_argument);
  }
}

TEST_CASE("boundary stabilizer pins match the subgroup characters") {
  PatchGeometry geo = PatchGeometry::dihedral_patch(1, 4, 4);
  DihedralHandles h = DihedralHandles::make(geo.group());

  // <r> boundary edge holding r: beta exponent 0 -> +1.
  EdgeConfig c = geo.identity_config();
  int er = geo.h_edge(2, 0);
  c[static_cast<std::size_t>(er)] = static_cast<std::uint8_t>(geo.group().index(h.r));
  CHECK(eigenvalue_of(boundary_stabilizer(geo, er), c) == Phase::one());

  // <s> boundary edge holding s: alpha exponent 0 -> +1.
  int es = geo.h_edge(1, 4);
  c = geo.identity_config();
  c[static_cast<std::size_t>(es)] = static_cast<std::uint8_t>(geo.group().index(h.s));
  CHECK(eigenvalue_of(boundary_stabilizer(geo, es), c) == Phase::one());

  // <rs> boundary edge holding r (not in <rs>): zeta^{1-0} = i != 1.
  int el = geo.v_edge(0, 2);
  c = geo.identity_config();
  c[static_cast<std::size_t>(el)] = static_cast<std::uint8_t>(geo.group().index(h.r));
  CHECK(eigenvalue_of(boundary_stabilizer(geo, el), c) == Phase::i());
}

TEST_CASE("boundary generator lists: diagonals on edges plus truncated gauge moves") {
  PatchGeometry geo = PatchGeometry::dihedral_patch(1, 4, 4);
  auto gens = boundary_stabilizers(geo, Region::Left);

  int diagonals = 0, vertex_moves = 0;
  std::set<int> edges;
  for (const auto& sg : gens) {
    if (sg.kind == StabilizerKind::BoundaryDiagonal) {
      ++diagonals;
      edges.insert(sg.edge);
      CHECK(geo.edge_region(sg.edge) == Region::Left);
    } else {
      ++vertex_moves;
      CHECK(sg.kind == StabilizerKind::VertexGauge);
      CHECK(sg.x == 0);
    }
  }
  CHECK(diagonals == 4);  // one per left-boundary edge
  CHECK(edges.size() == 4u);
  // Vertices (0,1),(0,2),(0,3) carry <rs> (one non-identity move each); the
  // two corners are pinned to the identity and contribute nothing.
  CHECK(vertex_moves == 3);

  auto bottom = boundary_stabilizers(geo, Region::Bottom);
  int bottom_moves = 0;
  for (const auto& sg : bottom)
    if (sg.kind == StabilizerKind::VertexGauge) ++bottom_moves;
  // (1,0),(2,0),(3,0) carry <r> (3 moves each) and corner (4,0) keeps all of
  // <r> too; corner (0,0) is trivial.
  CHECK(bottom_moves == 4 * 3);
  CHECK_THROWS_AS(boundary_stabilizers(geo, Region::Bulk), std::invalid_argument);
}

TEST_CASE("commutator relations hold exhaustively at N=1") {
  CommutatorReport report = verify_commutators(1);
  CHECK(report.N == 1);
  CHECK(report.all_hold);
  REQUIRE(report.checks.size() == 12u);
  for (const auto& chk : report.checks) {
    CAPTURE(chk.identity);
    CHECK(chk.result.equal);
    CHECK(!chk.result.witness.has_value());
    // The distinct-site pair checks span 7 edges and may sample; every
    // check on <= 6 edges must stream its whole joint support.
    if (chk.identity.find("adjacent") == std::string::npos)
      CHECK(chk.result.exhaustive);
  }
  // The three non-trivial identities stream the full 6-edge joint support.
  CHECK(report.checks[0].identity == "[A_v^r, A_v^s] = (A_v^r)^-2");
  CHECK(report.checks[1].result.checked == (1ull << 18));  // 8^6
  CHECK(report.checks[2].result.checked == (1ull << 18));
}

TEST_CASE("commutator relations hold under sampling at N=2") {
  CommutatorReport report = verify_commutators(2);
  CHECK(report.all_hold);
  bool any_sampled = false;
  for (const auto& chk : report.checks) {
    CAPTURE(chk.identity);
    CHECK(chk.result.equal);
    if (!chk.result.exhaustive) {
      any_sampled = true;
      CHECK(chk.result.checked >= 100000u);
    }
  }
  CHECK(any_sampled);
}

TEST_CASE("a wrong commutator claim is detected with a witness") {
  PatchGeometry geo = PatchGeometry::dihedral_patch(1, 4, 4);
  DihedralHandles h = DihedralHandles::make(geo.group());
  MonomialOp Ar = vertex_op(geo, 2, 2, h.r);
  MonomialOp SrNE = stabilizer_S_r(geo, 2, 2);
  // Correct identity: [A_v^r, S_NE^r] = (S_NE^s)^-2.  Claiming (S_NE^r)^-2
  // instead must fail (the exponents differ on flux r).
  auto cmp = monomial_equal(geo, MonomialOp::commutator(Ar, SrNE), SrNE.pow(-2));
  CHECK(!cmp.equal);
  CHECK(cmp.witness.has_value());
}

TEST_CASE("syndrome extraction: flat, defected, and boundary-violating configs") {
  PatchGeometry geo = PatchGeometry::dihedral_patch(1, 4, 4);
  DihedralHandles h = DihedralHandles::make(geo.group());

  CHECK(syndrome(geo, geo.identity_config()).clean());
  CHECK(syndrome(geo, logical_representative(geo, 1)).clean());

  // One bulk edge set to r: exactly the two adjacent plaquettes light up,
  // with inverse exponents.
  EdgeConfig c = geo.identity_config();
  c[static_cast<std::size_t>(geo.h_edge(1, 2))] =
      static_cast<std::uint8_t>(geo.group().index(h.r));
  auto rep = syndrome(geo, c);
  REQUIRE(rep.plaquettes.size() == 2u);
  CHECK(rep.boundary_violations.empty());
  CHECK(rep.plaquettes[0].px == 1);
  CHECK(rep.plaquettes[0].py == 1);
  CHECK(rep.plaquettes[0].alpha == 1);  // flux r
  CHECK(rep.plaquettes[0].beta == 0);
  CHECK(rep.plaquettes[1].px == 1);
  CHECK(rep.plaquettes[1].py == 2);
  CHECK(rep.plaquettes[1].alpha == 3);  // flux r^-1
  CHECK(rep.plaquettes[1].beta == 0);

  // A flux ribbon terminated in the bulk: one syndrome at the terminal
  // plaquette only (the crossed plaquettes stay flat).
  EdgeConfig rib = geo.identity_config();
  rib[static_cast<std::size_t>(geo.h_edge(2, 0))] =
      static_cast<std::uint8_t>(geo.group().index(h.r));
  rib[static_cast<std::size_t>(geo.h_edge(2, 1))] =
      static_cast<std::uint8_t>(geo.group().index(h.r));
  auto rep2 = syndrome(geo, rib);
  REQUIRE(rep2.plaquettes.size() == 1u);
  CHECK(rep2.plaquettes[0].px == 2);
  CHECK(rep2.plaquettes[0].py == 1);

  // <r>-boundary edge holding s: a domain violation, no flux story.
  EdgeConfig b = geo.identity_config();
  int e = geo.v_edge(4, 1);
  b[static_cast<std::size_t>(e)] = static_cast<std::uint8_t>(geo.group().index(h.s));
  auto rep3 = syndrome(geo, b);
  REQUIRE(rep3.boundary_violations.size() == 1u);
  CHECK(rep3.boundary_violations[0] == e);
}

TEST_CASE("logical representatives and materialized states are stabilized") {
  PatchGeometry geo4 = PatchGeometry::dihedral_patch(1, 4, 4);
  for (int m : {0, 1}) {
    auto rep = verify_stabilization(geo4, logical_representative(geo4, m));
    CHECK(rep.stabilized);
    CHECK(rep.first_syndrome.clean());
  }

  PatchGeometry geo = PatchGeometry::dihedral_patch(1, 2, 2);
  for (int m : {0, 1}) {
    CAPTURE(m);
    auto rep = verify_stabilization(geo, logical_state(geo, m));
    CHECK(rep.stabilized);
    CHECK(rep.configs_checked == 2048u);
    CHECK(rep.vertex_checks == 18);  // sum over vertices of |K_v| - 1
    CHECK(rep.max_vertex_deviation < 1e-9);
  }

  // An unsymmetrized basis state is flux-flat but not gauge-invariant.
  auto bad = verify_stabilization(geo, SparseState::basis(geo.identity_config()));
  CHECK(!bad.stabilized);
  CHECK(bad.first_syndrome.clean());  // no flux or domain trouble...
  CHECK(bad.max_vertex_deviation > 1.0);  // ...but the gauge moves displace it

  // A defected representative reports its syndromes.
  DihedralHandles h = DihedralHandles::make(geo4.group());
  EdgeConfig c = logical_representative(geo4, 0);
  c[static_cast<std::size_t>(geo4.h_edge(1, 2))] =
      static_cast<std::uint8_t>(geo4.group().index(h.r));
  auto broken = verify_stabilization(geo4, c);
  CHECK(!broken.stabilized);
  CHECK(broken.first_syndrome.plaquettes.size() == 2u);
}

TEST_CASE("flux projectors reconstruct exactly from stabilizer powers") {
  PatchGeometry geo = PatchGeometry::dihedral_patch(1, 2, 2);
  const FiniteGroup& g = geo.group();
  for (int i = 0; i < g.size(); ++i) {
    CAPTURE(g.format(g.element(i)));
    auto rep = verify_projector_reconstruction(geo, 1, 1, g.element(i));
    CHECK(rep.N == 1);
    CHECK(rep.configs == 4096u);  // 8^4 plaquette configs
    CHECK(rep.exact);
    CHECK(!rep.witness.has_value());
  }
}

TEST_CASE("stabilizer eigenvalue pairs separate all flux sectors") {
  for (int N : {1, 2, 3, 4}) {
    CAPTURE(N);
    FiniteGroup g = FiniteGroup::dihedral(4 * N);
    std::set<std::pair<Phase, Phase>> seen;
    for (int i = 0; i < g.size(); ++i) {
      GroupElement f = g.element(i);
      seen.insert({Phase::root_of_unity(4 * N, f.x),
                   Phase::root_of_unity(4 * N, f.y)});
    }
    CHECK(seen.size() == static_cast<std::size_t>(8 * N));
  }
}
