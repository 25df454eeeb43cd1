#include "qudo/logical_gate.hpp"

#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qudo {

namespace {

void require_dihedral(const PatchGeometry& geo, const char* who) {
  if (geo.group().kind() != GroupKind::Dihedral)
    throw std::invalid_argument(std::string(who) + ": dihedral patch required");
}

/// Everything the diagonal gate needs, owned by value so the operator's
/// closures never dangle.
struct GateEvaluator {
  FiniteGroup g;
  Cocycle2 a;  // alpha_N on the whole group
  Cochain1 b1, b2, b3;
  std::vector<PatchGeometry::PlaquetteEdges> plaquettes;
  struct BoundaryEdge {
    int edge;
    int which;  // 1 = left (dagger), 2 = top (dagger), 3 = right/bottom
    std::string name;
  };
  std::vector<BoundaryEdge> boundary;

  const Cochain1& beta(int which) const {
    return which == 1 ? b1 : which == 2 ? b2 : b3;
  }

  Phase operator()(const EdgeConfig& c) const {
    Phase ph = Phase::one();
    for (const auto& pe : plaquettes) {
      GroupElement g1 = g.element(c[static_cast<std::size_t>(pe.left)]);
      GroupElement g2 = g.element(c[static_cast<std::size_t>(pe.top)]);
      GroupElement g3 = g.element(c[static_cast<std::size_t>(pe.right)]);
      GroupElement g4 = g.element(c[static_cast<std::size_t>(pe.bottom)]);
      // Orientation fixed by gauge invariance on this patch frame: the
      // (left,top) triangle carries alpha, the (bottom,right) one its inverse.
      ph = ph * a.value(g1, g2) * a.value(g4, g3).inverse();
    }
    for (const auto& be : boundary) {
      GroupElement ge = g.element(c[static_cast<std::size_t>(be.edge)]);
      const Cochain1& b = beta(be.which);
      if (!b.domain().contains(ge))
        throw std::domain_error("M_beta@" + be.name + ": " + g.format(ge) +
                                " is outside the boundary subgroup " +
                                b.domain().name);
      Phase v = b.value(ge);
      ph = ph * (be.which == 3 ? v : v.inverse());
    }
    return ph;
  }
};

// `validate_spec = false` builds the evaluator without the trivialization
// check so sweeps can report a corrupted spec as a gauge failure instead of
// refusing to run.
GateEvaluator make_evaluator(const PatchGeometry& geo, const GateSpec& spec,
                             bool validate_spec = true) {
  require_dihedral(geo, "transversal gate");
  if (validate_spec) spec.validate();
  if (geo.group().rotation_order() != 4 * spec.N)
    throw std::invalid_argument("transversal gate: patch group is not D_{4N} for N = " +
                                std::to_string(spec.N));
  GateEvaluator ev{geo.group(), alpha(spec.N), spec.beta1, spec.beta2, spec.beta3,
                   {}, {}};
  for (int py = 0; py < geo.height(); ++py)
    for (int px = 0; px < geo.width(); ++px)
      ev.plaquettes.push_back(geo.plaquette_edges(px, py));
  for (int e = 0; e < geo.num_edges(); ++e) {
    int which = 0;
    switch (geo.edge_region(e)) {
      case Region::Left: which = 1; break;
      case Region::Top: which = 2; break;
      case Region::Right:
      case Region::Bottom: which = 3; break;
      case Region::Bulk: continue;
    }
    // The cochain must live exactly on this boundary's subgroup.
    if (geo.edge_group(e).elements != ev.beta(which).domain().elements)
      throw std::invalid_argument(
          "transversal gate: cochain domain " + ev.beta(which).domain().name +
          " does not match the subgroup of boundary edge " + geo.edge_name(e));
    ev.boundary.push_back({e, which, geo.edge_name(e)});
  }
  return ev;
}

bool same_syndrome(const SyndromeReport& x, const SyndromeReport& y) {
  if (x.plaquettes.size() != y.plaquettes.size()) return false;
  if (x.boundary_violations != y.boundary_violations) return false;
  for (std::size_t i = 0; i < x.plaquettes.size(); ++i) {
    const FluxSyndrome& p = x.plaquettes[i];
    const FluxSyndrome& q = y.plaquettes[i];
    if (p.px != q.px || p.py != q.py || p.alpha != q.alpha || p.beta != q.beta)
      return false;
  }
  return true;
}

}  // namespace

GateSpec GateSpec::canonical(int N) {
  if (N < 1) throw std::invalid_argument("GateSpec: N >= 1 required");
  FiniteGroup g = FiniteGroup::dihedral(4 * N);
  DihedralHandles h = DihedralHandles::make(g);
  GateSpec spec{N, Cochain1(h.gen_rs), Cochain1(h.gen_s), beta_closed_form(N)};
  spec.validate();
  return spec;
}

GateSpec GateSpec::with_character_twist(int k) const {
  GateSpec t = *this;
  int m = 4 * N;
  for (const GroupElement& g : t.beta3.domain().elements)
    t.beta3.set(g, beta3.value(g) *
                       Phase::root_of_unity(m, ((k * g.x) % m + m) % m));
  return t;
}

void GateSpec::validate() const {
  if (N < 1) throw std::invalid_argument("GateSpec: N >= 1 required");
  Cocycle2 a = alpha(N);
  struct Named { const char* tag; const Cochain1* b; };
  for (const Named& nb : {Named{"beta1", &beta1}, Named{"beta2", &beta2},
                          Named{"beta3", &beta3}}) {
    const Subgroup& k = nb.b->domain();
    if (!(k.group.kind() == GroupKind::Dihedral &&
          k.group.rotation_order() == 4 * N))
      throw std::invalid_argument(std::string("GateSpec: ") + nb.tag +
                                  " is not defined on a subgroup of D_{4N}");
    Cocycle2 want = restrict_cocycle(a, k);
    Cocycle2 got = coboundary(*nb.b);
    for (const GroupElement& g : k.elements)
      for (const GroupElement& h : k.elements)
        if (got.value(g, h) != want.value(g, h))
          throw std::invalid_argument(
              std::string("GateSpec: d(") + nb.tag + ")(" + k.group.format(g) +
              ", " + k.group.format(h) + ") = " + got.value(g, h).str() +
              " but alpha_N restricted to " + k.name + " needs " +
              want.value(g, h).str());
  }
  // Corner compatibility: the cochains agree on pairwise intersections.
  struct Pair { const Cochain1* x; const Cochain1* y; };
  for (const Pair& p : {Pair{&beta1, &beta2}, Pair{&beta1, &beta3},
                        Pair{&beta2, &beta3}}) {
    for (const GroupElement& g : p.x->domain().elements)
      if (p.y->domain().contains(g) && p.x->value(g) != p.y->value(g))
        throw std::invalid_argument(
            "GateSpec: corner mismatch at " + p.x->domain().group.format(g) +
            ": " + p.x->value(g).str() + " vs " + p.y->value(g).str());
  }
}

MonomialOp M_beta_edge(const PatchGeometry& geo, const GateSpec& spec, int edge) {
  require_dihedral(geo, "M_beta_edge");
  Region side = geo.edge_region(edge);
  if (side == Region::Bulk)
    throw std::invalid_argument("M_beta_edge: " + geo.edge_name(edge) +
                                " is a bulk edge");
  const Cochain1& b = side == Region::Left ? spec.beta1
                      : side == Region::Top ? spec.beta2
                                            : spec.beta3;
  FiniteGroup g = geo.group();
  Cochain1 bv = b;
  std::string name = geo.edge_name(edge);
  return diagonal_op(
      "M_beta@" + name, {edge}, [g, bv, edge, name](const EdgeConfig& c) {
        GroupElement ge = g.element(c[static_cast<std::size_t>(edge)]);
        if (!bv.domain().contains(ge))
          throw std::domain_error("M_beta@" + name + ": " + g.format(ge) +
                                  " is outside the boundary subgroup " +
                                  bv.domain().name);
        return bv.value(ge);
      });
}

MonomialOp M_alpha_plaquette(const PatchGeometry& geo, int N, int px, int py) {
  require_dihedral(geo, "M_alpha_plaquette");
  if (geo.group().rotation_order() != 4 * N)
    throw std::invalid_argument("M_alpha_plaquette: patch group is not D_{4N}");
  FiniteGroup g = geo.group();
  Cocycle2 a = alpha(N);
  auto pe = geo.plaquette_edges(px, py);
  return diagonal_op(
      "M_alpha(" + std::to_string(px) + "," + std::to_string(py) + ")",
      {pe.left, pe.top, pe.right, pe.bottom}, [g, a, pe](const EdgeConfig& c) {
        GroupElement g1 = g.element(c[static_cast<std::size_t>(pe.left)]);
        GroupElement g2 = g.element(c[static_cast<std::size_t>(pe.top)]);
        GroupElement g3 = g.element(c[static_cast<std::size_t>(pe.right)]);
        GroupElement g4 = g.element(c[static_cast<std::size_t>(pe.bottom)]);
        return a.value(g1, g2) * a.value(g4, g3).inverse();
      });
}

MonomialOp transversal_gate(const PatchGeometry& geo, const GateSpec& spec) {
  GateEvaluator ev = make_evaluator(geo, spec);
  std::vector<int> support(static_cast<std::size_t>(geo.num_edges()));
  for (int e = 0; e < geo.num_edges(); ++e)
    support[static_cast<std::size_t>(e)] = e;
  return diagonal_op("U_{alpha,beta}[N=" + std::to_string(spec.N) + "]",
                     std::move(support),
                     [ev](const EdgeConfig& c) { return ev(c); });
}

Phase gate_phase_on(const PatchGeometry& geo, const GateSpec& spec,
                    const EdgeConfig& c) {
  return make_evaluator(geo, spec)(c);
}

GaugeVerdict verify_gauge_invariance(const PatchGeometry& geo,
                                     const GateSpec& spec, int trials,
                                     std::uint64_t seed) {
  // No validation here: a spec whose beta fails to trivialize alpha must show
  // up as a sweep failure with a witness, not as a constructor error.
  GateEvaluator ev = make_evaluator(geo, spec, /*validate_spec=*/false);
  GaugeVerdict verdict;
  std::mt19937_64 rng(seed);

  struct Move {
    int vx, vy;
    GroupElement g;
    MonomialOp op;
  };
  std::vector<Move> moves;
  for (int vy = 0; vy <= geo.height(); ++vy)
    for (int vx = 0; vx <= geo.width(); ++vx)
      for (const GroupElement& g : geo.vertex_group(vx, vy).elements)
        if (!(g == geo.group().identity()))
          moves.push_back({vx, vy, g, vertex_op(geo, vx, vy, g)});

  for (int m : {0, 1}) {
    EdgeConfig rep = logical_representative(geo, m);
    Phase base = ev(rep);
    for (const Move& mv : moves) {
      EdgeConfig c = rep;
      Phase ph = Phase::one();
      mv.op.apply(c, ph);
      ++verdict.moves_checked;
      if (ev(c) != base) {
        verdict.invariant = false;
        if (!verdict.witness) verdict.witness = {mv.vx, mv.vy, mv.g, c};
      }
    }
    std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
    int depth = geo.num_vertices();
    for (int t = 0; t < trials; ++t) {
      EdgeConfig c = rep;
      Phase ph = Phase::one();
      for (int step = 0; step < depth; ++step) moves[pick(rng)].op.apply(c, ph);
      ++verdict.moves_checked;
      if (ev(c) != base) {
        verdict.invariant = false;
        if (!verdict.witness)
          verdict.witness = {-1, -1, geo.group().identity(), c};
      }
    }
  }
  return verdict;
}

PreservationReport verify_codespace_preservation(const PatchGeometry& geo,
                                                 const GateSpec& spec) {
  MonomialOp U = transversal_gate(geo, spec);
  PreservationReport report;
  DihedralHandles h = DihedralHandles::make(geo.group());

  auto check = [&](const EdgeConfig& c) {
    SyndromeReport before = syndrome(geo, c);
    EdgeConfig t = c;
    Phase ph = Phase::one();
    U.apply(t, ph);
    ++report.configs_checked;
    if (t != c || !same_syndrome(before, syndrome(geo, t)))
      report.preserved = false;
  };

  for (int m : {0, 1}) {
    EdgeConfig rep = logical_representative(geo, m);
    check(rep);
    // Flux-defected variants: single bulk-edge errors of both types on top
    // of each logical sector must keep their syndromes under U.
    for (const GroupElement& err : {h.r, h.s}) {
      EdgeConfig c = rep;
      std::size_t e = static_cast<std::size_t>(geo.h_edge(0, 1));
      GroupElement cur = geo.group().element(c[e]);
      c[e] = static_cast<std::uint8_t>(
          geo.group().index(geo.group().multiply(err, cur)));
      check(c);
    }
  }
  return report;
}

GateReport extract_logical_phase(const PatchGeometry& geo, const GateSpec& spec,
                                 int trials, std::uint64_t seed) {
  GateEvaluator ev = make_evaluator(geo, spec);
  GateReport report;
  report.N = spec.N;
  report.width = geo.width();
  report.height = geo.height();
  report.phase_m0 = ev(logical_representative(geo, 0));
  report.phase_m1 = ev(logical_representative(geo, 1));

  GaugeVerdict gv = verify_gauge_invariance(geo, spec, trials, seed);
  report.gauge_invariant = gv.invariant;
  report.moves_checked = gv.moves_checked;
  report.witness = gv.witness;
  report.codespace_preserved = verify_codespace_preservation(geo, spec).preserved;

  if (gv.invariant) {
    report.relative = report.phase_m1 * report.phase_m0.inverse();
    report.relative_float = report.relative->to_complex();
  }
  return report;
}

}  // namespace qudo
