#pragma once
// Rectangular surface-code patch for a quantum double: oriented edges labeled
// by group elements, three subgroup boundary types, monomial lattice
// operators (basis permutations with exact phases), sparse superpositions,
// and the logical-qubit wiring (dual ribbons plus the electric triangle).

#include <complex>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qudo/group.hpp"
#include "qudo/phase.hpp"

namespace qudo {

/// One group-element index per edge, in canonical edge order.
using EdgeConfig = std::vector<std::uint8_t>;

struct ConfigHash {
  std::size_t operator()(const EdgeConfig& c) const noexcept;
};

enum class EdgeKind { Horizontal, Vertical };
enum class Region { Bulk, Left, Top, Right, Bottom };

/// W x H plaquette patch.  Horizontal edges point right, vertical edges point
/// up.  Edge order: all horizontal edges h(x,y) (x in [0,W), y in [0,H],
/// index y*W + x), then all vertical edges v(x,y) (x in [0,W], y in [0,H),
/// index offset + y*(W+1) + x).  Boundary edges and vertices are restricted
/// to the boundary subgroup; at a corner, to the intersection.
class PatchGeometry {
 public:
  /// k_left, k_top, k_right_bottom are the boundary subgroups (the right and
  /// bottom boundaries share one type).  W, H must be even and >= 2.
  PatchGeometry(const FiniteGroup& group, int width, int height,
                const Subgroup& k_left, const Subgroup& k_top,
                const Subgroup& k_right_bottom);
  /// D_{4N} patch with boundaries left = <rs>, top = <s>, right/bottom = <r>.
  static PatchGeometry dihedral_patch(int N, int width, int height);

  const FiniteGroup& group() const { return group_; }
  int width() const { return w_; }
  int height() const { return h_; }
  int num_edges() const { return static_cast<int>(edge_groups_.size()); }
  int num_vertices() const { return (w_ + 1) * (h_ + 1); }
  int num_plaquettes() const { return w_ * h_; }

  int h_edge(int x, int y) const;
  int v_edge(int x, int y) const;
  EdgeKind edge_kind(int e) const;
  std::pair<int, int> edge_coords(int e) const;
  Region edge_region(int e) const;
  /// Admissible elements on this edge (boundary subgroup, or the whole group).
  const Subgroup& edge_group(int e) const { return edge_groups_[e]; }
  /// Human-readable edge name like "h(2,1)" or "v(0,3)".
  std::string edge_name(int e) const;

  int vertex(int vx, int vy) const { return vy * (w_ + 1) + vx; }
  /// Gauge group at a vertex: whole group in the bulk, boundary subgroup on a
  /// boundary, intersection of the two subgroups at a corner.
  const Subgroup& vertex_group(int vx, int vy) const;
  /// Incident edges as (edge, outbound?) pairs in the fixed order
  /// left-in, right-out, down-in, up-out (absent edges skipped).
  std::vector<std::pair<int, bool>> vertex_star(int vx, int vy) const;

  struct PlaquetteEdges {
    int left, top, right, bottom;  // g1, g2, g3, g4 of the flux convention
  };
  PlaquetteEdges plaquette_edges(int px, int py) const;
  /// Oriented boundary product g1 g2 g3^{-1} g4^{-1} (left, top, right up;
  /// bottom right), read from the config.
  GroupElement flux(const EdgeConfig& c, int px, int py) const;

  EdgeConfig identity_config() const;
  /// First plaquette with non-identity flux, or nullopt if flux-flat.
  std::optional<std::pair<int, int>> first_nonflat_plaquette(const EdgeConfig& c) const;
  /// First boundary edge whose element is outside its boundary subgroup.
  std::optional<int> first_domain_violation(const EdgeConfig& c) const;

  /// Central junction: plaquette (W/2, H/2) and its south-west vertex.
  std::pair<int, int> junction_plaquette() const { return {w_ / 2, h_ / 2}; }
  std::pair<int, int> junction_vertex() const { return {w_ / 2, h_ / 2}; }
  /// Dual ribbon i in {1,2,3}: the edges it crosses, ordered from the
  /// boundary towards the junction plaquette.
  ///   1: left boundary -> junction, crossing vertical edges of row H/2
  ///   2: top boundary -> junction, crossing horizontal edges of column W/2
  ///   3: bottom boundary -> junction, crossing horizontal edges of column W/2
  std::vector<int> ribbon(int i) const;
  /// Direct-lattice electric path i in {1,2,3}, from the junction vertex to
  /// boundary i (left, top, right respectively).
  std::vector<int> electric_path(int i) const;

 private:
  FiniteGroup group_;
  int w_ = 0, h_ = 0;
  std::vector<Subgroup> edge_groups_;    // by edge index
  std::vector<Subgroup> vertex_groups_;  // by vertex index
};

/// Basis permutation with an exact phase: O|c> = ph(c) |pi(c)>.  The forward
/// action mutates (config, phase) in place; the backward action is its exact
/// inverse.  Closures may only read and write the declared support edges.
class MonomialOp {
 public:
  using Action = std::function<void(EdgeConfig&, Phase&)>;

  MonomialOp(std::string name, std::vector<int> support, Action fwd, Action bwd);
  static MonomialOp identity_op();

  const std::string& name() const { return name_; }
  const std::vector<int>& support() const { return support_; }  // sorted, unique
  void apply(EdgeConfig& c, Phase& ph) const { fwd_(c, ph); }
  void apply_inverse(EdgeConfig& c, Phase& ph) const { bwd_(c, ph); }

  MonomialOp inverse() const;
  /// Operator product a.b (apply b first).
  static MonomialOp product(const MonomialOp& a, const MonomialOp& b);
  MonomialOp pow(int k) const;
  /// Multiplicative commutator a^{-1} b^{-1} a b.
  static MonomialOp commutator(const MonomialOp& a, const MonomialOp& b);

 private:
  std::string name_;
  std::vector<int> support_;
  Action fwd_, bwd_;
};

/// Diagonal operator |c> -> eigen(c) |c>.  The eigenvalue function may only
/// read the declared support edges.
MonomialOp diagonal_op(std::string name, std::vector<int> support,
                       std::function<Phase(const EdgeConfig&)> eigen);

/// L^g on one edge: |h> -> |gh>.
MonomialOp left_mult(const PatchGeometry& geo, int edge, const GroupElement& g);
/// R^g on one edge: |h> -> |h g^{-1}>.
MonomialOp right_mult(const PatchGeometry& geo, int edge, const GroupElement& g);
/// Gauge move A_v^g: L^g on outbound incident edges, R^g on inbound ones.
/// Throws if g is outside the vertex's gauge group.
MonomialOp vertex_op(const PatchGeometry& geo, int vx, int vy, const GroupElement& g);
/// L_xi^g: left multiplication by g on every edge crossed by ribbon i.
MonomialOp ribbon_op(const PatchGeometry& geo, int i, const GroupElement& g);

/// B_p^g as a predicate: keeps configs whose flux at p equals g.
struct PlaquetteProjector {
  const PatchGeometry* geo;
  int px, py;
  GroupElement g;
  bool keeps(const EdgeConfig& c) const;
};
PlaquetteProjector plaquette_projector(const PatchGeometry& geo, int px, int py,
                                       const GroupElement& g);

struct OpComparison {
  bool equal = true;
  unsigned long long checked = 0;
  bool exhaustive = true;
  std::optional<EdgeConfig> witness;  // first config where the ops disagree
};

/// Compare two monomial operators config-by-config over their joint support
/// (all other edges held at id).  Exhaustive when |G|^support fits under
/// exhaustive_limit, otherwise `samples` seeded random configs.
OpComparison monomial_equal(const PatchGeometry& geo, const MonomialOp& a,
                            const MonomialOp& b,
                            unsigned long long exhaustive_limit = 1ull << 24,
                            int samples = 100000,
                            std::uint64_t seed = 0xD4D4);

/// Term cap: QUDO_TERM_CAP env var, else 10^7 stored basis configs.
std::size_t default_term_cap();

class SparseState {
 public:
  using Map = std::unordered_map<EdgeConfig, std::complex<double>, ConfigHash>;

  explicit SparseState(std::size_t term_cap = default_term_cap());
  static SparseState basis(const EdgeConfig& c,
                           std::size_t term_cap = default_term_cap());

  static double prune_tolerance() { return 1e-12; }

  /// Accumulate amplitude; throws std::runtime_error when the term cap would
  /// be exceeded (no silent truncation).
  void add(const EdgeConfig& c, std::complex<double> amp);
  const Map& amplitudes() const { return amps_; }
  std::size_t terms() const { return amps_.size(); }
  std::size_t term_cap() const { return cap_; }

  double norm2() const;
  void scale(std::complex<double> z);
  void prune(double tol = prune_tolerance());
  SparseState applied(const MonomialOp& op) const;
  /// <this | other>.
  std::complex<double> inner(const SparseState& other) const;

 private:
  Map amps_;
  std::size_t cap_;
};

/// (1/|K_v|) sum_{g in K_v} A_v^g applied to the state.
SparseState vertex_average(const PatchGeometry& geo, int vx, int vy,
                           const SparseState& s);
/// Upper bound on the gauge-orbit size of any single config: prod_v |K_v|.
double orbit_estimate(const PatchGeometry& geo);
/// Project onto the gauge-invariant subspace by averaging every vertex in
/// sequence (the per-vertex averages are commuting projectors).  Throws when
/// terms * orbit_estimate exceeds the term cap, naming the estimate.
SparseState symmetrize(const PatchGeometry& geo, const SparseState& s);

/// Pre-symmetrization representative of logical state m in {0,1} on a
/// dihedral patch: all edges id, plus (for m = 1) ribbon 1 edges holding rs,
/// ribbon 2 edges holding s, ribbon 3 edges holding r.
EdgeConfig logical_representative(const PatchGeometry& geo, int m);
/// Symmetrized logical state (materialized; subject to the term cap).
SparseState logical_state(const PatchGeometry& geo, int m);

/// Product of the boundary characters along the three electric paths:
/// 1_rs on path 1, 1_s on path 2, 1_r on path 3.  This is the logical-Z
/// measurement; it takes +1 on m=0 and -1 on m=1.
Phase electric_triangle_phase(const PatchGeometry& geo, const EdgeConfig& c);
/// Same on a state: every support config must share one eigenphase; throws
/// std::runtime_error naming two conflicting configs otherwise.
Phase electric_triangle(const PatchGeometry& geo, const SparseState& s);

/// Edge names joined with ';' (debugging / CSV key).
std::string config_to_string(const PatchGeometry& geo, const EdgeConfig& c);
/// "config,re,im" rows in lexicographic config order.
void export_csv(const PatchGeometry& geo, const SparseState& s, std::ostream& out);

}  // namespace qudo
