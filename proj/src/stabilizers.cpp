#include "qudo/stabilizers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace qudo {

namespace {

void require_dihedral(const PatchGeometry& geo, const char* who) {
  if (geo.group().kind() != GroupKind::Dihedral)
    throw std::invalid_argument(std::string(who) + ": dihedral patch required");
}

/// Flux of plaquette edges (left, top, right, bottom) read from a config,
/// self-contained so the closure owns everything it touches.
GroupElement flux_of(const FiniteGroup& g, const PatchGeometry::PlaquetteEdges& pe,
                     const EdgeConfig& c) {
  GroupElement g1 = g.element(c[static_cast<std::size_t>(pe.left)]);
  GroupElement g2 = g.element(c[static_cast<std::size_t>(pe.top)]);
  GroupElement g3 = g.element(c[static_cast<std::size_t>(pe.right)]);
  GroupElement g4 = g.element(c[static_cast<std::size_t>(pe.bottom)]);
  return g.multiply(g.multiply(g.multiply(g1, g2), g.inverse(g3)), g.inverse(g4));
}

std::vector<int> plaquette_support(const PatchGeometry::PlaquetteEdges& pe) {
  return {pe.left, pe.top, pe.right, pe.bottom};
}

std::string site_tag(int px, int py) {
  return "(" + std::to_string(px) + "," + std::to_string(py) + ")";
}

}  // namespace

MonomialOp stabilizer_S_r(const PatchGeometry& geo, int px, int py) {
  require_dihedral(geo, "stabilizer_S_r");
  FiniteGroup g = geo.group();
  auto pe = geo.plaquette_edges(px, py);
  int m = g.rotation_order();  // 4N
  return diagonal_op("S_r" + site_tag(px, py), plaquette_support(pe),
                     [g, pe, m](const EdgeConfig& c) {
                       return Phase::root_of_unity(m, flux_of(g, pe, c).x);
                     });
}

MonomialOp stabilizer_S_s(const PatchGeometry& geo, int px, int py) {
  require_dihedral(geo, "stabilizer_S_s");
  FiniteGroup g = geo.group();
  auto pe = geo.plaquette_edges(px, py);
  int m = g.rotation_order();
  return diagonal_op("S_s" + site_tag(px, py), plaquette_support(pe),
                     [g, pe, m](const EdgeConfig& c) {
                       return Phase::root_of_unity(m, flux_of(g, pe, c).y);
                     });
}

MonomialOp stabilizer_S_r_lattice_form(const PatchGeometry& geo, int px, int py) {
  require_dihedral(geo, "stabilizer_S_r_lattice_form");
  FiniteGroup g = geo.group();
  auto pe = geo.plaquette_edges(px, py);
  int m = g.rotation_order();
  return diagonal_op(
      "S_r~" + site_tag(px, py), plaquette_support(pe),
      [g, pe, m](const EdgeConfig& c) {
        GroupElement g1 = g.element(c[static_cast<std::size_t>(pe.left)]);
        GroupElement g2 = g.element(c[static_cast<std::size_t>(pe.top)]);
        GroupElement g3 = g.element(c[static_cast<std::size_t>(pe.right)]);
        GroupElement g4 = g.element(c[static_cast<std::size_t>(pe.bottom)]);
        // Signs track which reflections have acted before each rotation.
        int s12 = (g1.y + g2.y) % 2 ? -1 : 1;
        int s123 = (g1.y + g2.y + g3.y) % 2 ? -1 : 1;
        std::int64_t a = g1.x + (1 - 2 * g1.y) * g2.x - s12 * (1 - 2 * g3.y) * g3.x -
                         s123 * (1 - 2 * g4.y) * g4.x;
        return Phase::root_of_unity(m, ((a % m) + m) % m);
      });
}

MonomialOp stabilizer_S_s_lattice_form(const PatchGeometry& geo, int px, int py) {
  require_dihedral(geo, "stabilizer_S_s_lattice_form");
  FiniteGroup g = geo.group();
  auto pe = geo.plaquette_edges(px, py);
  int m = g.rotation_order();
  return diagonal_op(
      "S_s~" + site_tag(px, py), plaquette_support(pe),
      [g, pe, m](const EdgeConfig& c) {
        int j = 0;
        for (int e : {pe.left, pe.top, pe.right, pe.bottom})
          j += g.element(c[static_cast<std::size_t>(e)]).y;
        return Phase::root_of_unity(m, j % 2);
      });
}

MonomialOp boundary_stabilizer(const PatchGeometry& geo, int edge) {
  require_dihedral(geo, "boundary_stabilizer");
  Region side = geo.edge_region(edge);
  if (side == Region::Bulk)
    throw std::invalid_argument("boundary_stabilizer: " + geo.edge_name(edge) +
                                " is a bulk edge");
  FiniteGroup g = geo.group();
  int m = g.rotation_order();
  auto eigen = [g, m, side, edge](const EdgeConfig& c) {
    GroupElement h = g.element(c[static_cast<std::size_t>(edge)]);
    switch (side) {
      case Region::Left:  // <rs>: S_r S_s^{-1}
        return Phase::root_of_unity(m, ((h.x - h.y) % m + m) % m);
      case Region::Top:  // <s>: S_r
        return Phase::root_of_unity(m, h.x);
      default:  // right/bottom <r>: S_s
        return Phase::root_of_unity(m, h.y);
    }
  };
  return diagonal_op("S_B@" + geo.edge_name(edge), {edge}, eigen);
}

std::vector<StabilizerGenerator> boundary_stabilizers(const PatchGeometry& geo,
                                                      Region side) {
  if (side == Region::Bulk)
    throw std::invalid_argument("boundary_stabilizers: pick a boundary side");
  std::vector<StabilizerGenerator> out;
  for (int e = 0; e < geo.num_edges(); ++e)
    if (geo.edge_region(e) == side) {
      auto [x, y] = geo.edge_coords(e);
      out.push_back({StabilizerKind::BoundaryDiagonal, x, y, e,
                     boundary_stabilizer(geo, e)});
    }
  auto add_vertex = [&](int vx, int vy) {
    for (const GroupElement& k : geo.vertex_group(vx, vy).elements)
      if (!(k == geo.group().identity()))
        out.push_back({StabilizerKind::VertexGauge, vx, vy, -1,
                       vertex_op(geo, vx, vy, k)});
  };
  switch (side) {
    case Region::Left:
      for (int vy = 0; vy <= geo.height(); ++vy) add_vertex(0, vy);
      break;
    case Region::Right:
      for (int vy = 0; vy <= geo.height(); ++vy) add_vertex(geo.width(), vy);
      break;
    case Region::Top:
      for (int vx = 0; vx <= geo.width(); ++vx) add_vertex(vx, geo.height());
      break;
    default:  // Bottom
      for (int vx = 0; vx <= geo.width(); ++vx) add_vertex(vx, 0);
      break;
  }
  return out;
}

CommutatorReport verify_commutators(int N, unsigned long long exhaustive_limit,
                                    int samples, std::uint64_t seed) {
  PatchGeometry geo = PatchGeometry::dihedral_patch(N, 4, 4);
  DihedralHandles h = DihedralHandles::make(geo.group());

  // Bulk vertex with all four adjacent plaquettes (and their edges) in the
  // bulk, so every joint-support edge ranges over the whole group.
  const int vx = 2, vy = 2;
  MonomialOp Ar = vertex_op(geo, vx, vy, h.r);
  MonomialOp As = vertex_op(geo, vx, vy, h.s);
  MonomialOp SrNE = stabilizer_S_r(geo, vx, vy);
  MonomialOp SsNE = stabilizer_S_s(geo, vx, vy);

  CommutatorReport report;
  report.N = N;
  auto add = [&](std::string identity, const MonomialOp& lhs, const MonomialOp& rhs) {
    OpComparison cmp = monomial_equal(geo, lhs, rhs, exhaustive_limit, samples, seed);
    report.all_hold = report.all_hold && cmp.equal;
    report.checks.push_back({std::move(identity), std::move(cmp)});
  };

  add("[A_v^r, A_v^s] = (A_v^r)^-2", MonomialOp::commutator(Ar, As), Ar.pow(-2));
  add("[A_v^r, S_NE^r] = (S_NE^s)^-2", MonomialOp::commutator(Ar, SrNE), SsNE.pow(-2));
  add("[A_v^s, S_NE^r] = (S_NE^r)^2", MonomialOp::commutator(As, SrNE), SrNE.pow(2));

  struct Corner { const char* tag; int px, py; };
  for (const Corner& cr : {Corner{"NW", vx - 1, vy}, Corner{"SW", vx - 1, vy - 1},
                           Corner{"SE", vx, vy - 1}}) {
    MonomialOp Sr = stabilizer_S_r(geo, cr.px, cr.py);
    add(std::string("[A_v^r, S_") + cr.tag + "^r] = 1",
        MonomialOp::commutator(Ar, Sr), MonomialOp::identity_op());
    add(std::string("[A_v^s, S_") + cr.tag + "^r] = 1",
        MonomialOp::commutator(As, Sr), MonomialOp::identity_op());
  }

  add("[S_NE^r, S_NE^s] = 1", MonomialOp::commutator(SrNE, SsNE),
      MonomialOp::identity_op());
  add("[A_v^r, A_w^s] = 1 (adjacent vertices)",
      MonomialOp::commutator(Ar, vertex_op(geo, vx, vy + 1, h.s)),
      MonomialOp::identity_op());
  add("[S_NE^r, S_NW^r] = 1 (adjacent plaquettes)",
      MonomialOp::commutator(SrNE, stabilizer_S_r(geo, vx - 1, vy)),
      MonomialOp::identity_op());
  return report;
}

SyndromeReport syndrome(const PatchGeometry& geo, const EdgeConfig& c) {
  SyndromeReport report;
  for (int py = 0; py < geo.height(); ++py)
    for (int px = 0; px < geo.width(); ++px) {
      GroupElement f = geo.flux(c, px, py);
      if (!(f == geo.group().identity()))
        report.plaquettes.push_back({px, py, f.x, f.y, f});
    }
  for (int e = 0; e < geo.num_edges(); ++e)
    if (!geo.edge_group(e).contains(
            geo.group().element(c[static_cast<std::size_t>(e)])))
      report.boundary_violations.push_back(e);
  return report;
}

StabilizationReport verify_stabilization(const PatchGeometry& geo,
                                         const EdgeConfig& rep) {
  StabilizationReport report;
  report.configs_checked = 1;
  SyndromeReport syn = syndrome(geo, rep);
  if (!syn.clean()) {
    report.stabilized = false;
    report.first_syndrome = std::move(syn);
  }
  return report;
}

StabilizationReport verify_stabilization(const PatchGeometry& geo,
                                         const SparseState& s, double tol) {
  StabilizationReport report;
  for (const auto& [c, a] : s.amplitudes()) {
    ++report.configs_checked;
    SyndromeReport syn = syndrome(geo, c);
    if (!syn.clean() && report.stabilized) {
      report.stabilized = false;
      report.first_syndrome = std::move(syn);
    }
  }
  double n2 = s.norm2();
  for (int vy = 0; vy <= geo.height(); ++vy)
    for (int vx = 0; vx <= geo.width(); ++vx)
      for (const GroupElement& g : geo.vertex_group(vx, vy).elements) {
        if (g == geo.group().identity()) continue;
        SparseState moved = s.applied(vertex_op(geo, vx, vy, g));
        double dev2 = moved.norm2() + n2 - 2.0 * s.inner(moved).real();
        double dev = std::sqrt(std::max(0.0, dev2));
        ++report.vertex_checks;
        report.max_vertex_deviation = std::max(report.max_vertex_deviation, dev);
      }
  if (report.max_vertex_deviation > tol) report.stabilized = false;
  return report;
}

ReconstructionReport verify_projector_reconstruction(const PatchGeometry& geo,
                                                     int px, int py,
                                                     const GroupElement& g) {
  require_dihedral(geo, "verify_projector_reconstruction");
  const FiniteGroup& grp = geo.group();
  int m = grp.rotation_order();        // 4N
  int order = grp.size();              // 8N
  auto pe = geo.plaquette_edges(px, py);
  std::vector<int> edges = plaquette_support(pe);

  ReconstructionReport report;
  report.N = m / 4;
  EdgeConfig c = geo.identity_config();
  std::vector<int> idx(4, 0);
  while (true) {
    for (int k = 0; k < 4; ++k)
      c[static_cast<std::size_t>(edges[static_cast<std::size_t>(k)])] =
          static_cast<std::uint8_t>(idx[static_cast<std::size_t>(k)]);
    ++report.configs;

    GroupElement f = flux_of(grp, pe, c);
    Cyclotomic sum;
    for (int gamma = 0; gamma < m; ++gamma)
      for (int delta = 0; delta < 2; ++delta) {
        Phase term = Phase::root_of_unity(m, (((f.x - g.x) * gamma) % m + m) % m) *
                     Phase::minus_one().pow((g.y + f.y) * delta);
        sum += Cyclotomic::from_phase(term);
      }
    bool match = sum.equals_integer(f == g ? order : 0);
    if (!match && report.exact) {
      report.exact = false;
      report.witness = c;
    }

    int k = 3;
    while (k >= 0 && ++idx[static_cast<std::size_t>(k)] == order) {
      idx[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return report;
}

}  // namespace qudo
