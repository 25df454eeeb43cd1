#pragma once
// Symbolic anyon content of D(D_{4N}): labels ([g], centralizer irrep) with
// quantum dimensions, the three Lagrangian algebras defining the boundary
// conditions, the anyon permutation induced by the SPT layer, and the two
// code-switching condensation maps onto D(Z2xZ2) and D(Z2).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qudo/group.hpp"

namespace qudo {

/// Anyon of D(D_{4N}): a conjugacy class (canonical representative) plus an
/// irrep of that representative's centralizer, stored in one of three shapes:
///   Full   - centralizer is the whole group (reps id and r^{2N});
///            irrep_name is one of "1", "1_r", "1_s", "1_rs", "E_l"
///   Cyclic - centralizer <r> = Z_{4N} for [r^a] with 0 < a < 2N;
///            chi_b indexes the character chi_b(r^c) = zeta_{4N}^{bc}
///   Eps    - centralizer {id, refl, r^{2N}, r^{2N} refl} = Z2 x Z2 for [s]
///            and [rs]; eps1 = chi(refl), eps2 = chi(r^{2N}), both +-1
struct AnyonLabel {
  enum class Kind { Full, Cyclic, Eps };
  Kind kind = Kind::Full;
  GroupElement rep;
  std::string irrep_name = "1";
  int chi_b = 0;
  int eps1 = +1, eps2 = +1;

  bool operator==(const AnyonLabel& o) const {
    return kind == o.kind && rep == o.rep && irrep_name == o.irrep_name &&
           chi_b == o.chi_b && eps1 == o.eps1 && eps2 == o.eps2;
  }
  bool operator!=(const AnyonLabel& o) const { return !(*this == o); }
};

/// "1", "1_r", "E_2" (vacuum class); "[r^2]", "[r^2]1_s" (central rotation);
/// "[r]", "[r]_-1", "[r^3]chi_5" (rotation dyons); "[s]_++", "[rs]_+-".
/// Render a label; pass N > 0 to print the chi_{2N} subscript as "_-1".
std::string to_string(const AnyonLabel& a, int N = 0);
/// Inverse of to_string; accepts brace-decorated signs like "[s]_{+-}".
AnyonLabel anyon_parse(int N, const std::string& text);

int quantum_dim(int N, const AnyonLabel& a);
int class_size(int N, const AnyonLabel& a);
int irrep_dim(const AnyonLabel& a);

struct Anyon {
  AnyonLabel label;
  int class_size = 1;
  int irrep_dim = 1;
  int quantum_dim = 1;
};

/// All 8N^2 + 14 anyons of D(D_{4N}) in canonical class-then-irrep order.
std::vector<Anyon> enumerate_anyons(int N);
/// Spec-string entry point; requires a dihedral group with 4 | m.
std::vector<Anyon> enumerate_anyons(const FiniteGroup& g);

struct LagrangianAlgebra {
  std::string name;  // "L_<rs>", "L_<s>", "L_<r>"
  std::vector<std::pair<AnyonLabel, int>> summands;  // (anyon, multiplicity)

  int total_dim(int N) const;  // sum of n_a * d_a; must equal 8N
};

/// The three gapped-boundary algebras of D(D_{4N}), in the order
/// (L_<rs>, L_<s>, L_<r>).
std::vector<LagrangianAlgebra> lagrangians(int N);

/// Involutive relabeling of anyons; labels not in the swap list are fixed.
class AnyonPermutation {
 public:
  void add_swap(const AnyonLabel& a, const AnyonLabel& b);
  AnyonLabel apply(const AnyonLabel& a) const;
  const std::vector<std::pair<AnyonLabel, AnyonLabel>>& swaps() const {
    return swaps_;
  }

 private:
  std::vector<std::pair<AnyonLabel, AnyonLabel>> swaps_;
};

/// Anyon permutation induced by stacking the alpha_N SPT layer:
/// [r^{2N}] <-> [r^{2N}]1_r, [r^{2N}]1_s <-> [r^{2N}]1_rs, and the reflection
/// dyons flip their eps2 sign; every other anyon (in particular every pure
/// irrep) is fixed.
AnyonPermutation spt_permutation(int N);

/// One condensation row: a bundle of source anyons identified with a single
/// target anyon.  Some sources appear in several rows with different targets
/// ("split images"); those rows are kept verbatim.
struct CondensationRow {
  std::vector<AnyonLabel> bundle;
  std::string target;
};

struct CondensationMap {
  std::string target_theory;  // "Z2xZ2" or "Z:2"
  std::vector<CondensationRow> rows;

  /// Targets of every row whose bundle contains `a` (empty if confined).
  std::vector<std::string> images(const AnyonLabel& a) const;
  bool is_confined(const AnyonLabel& a) const;
  /// Source labels that appear in more than one row.
  std::vector<AnyonLabel> split_sources() const;
  /// Anyons of D(D_{4N}) not covered by any row.
  std::vector<AnyonLabel> confined_anyons(int N) const;
};

/// Condense A = sum_{a=0..N} [r^{2a}]: maps the sixteen listed bundles onto
/// the sixteen anyons of D(Z2xZ2) (e_i, m_i alphabet).
CondensationMap codeswitch_z2z2(int N);
/// Condense A = sum [r^{2a}] + [s]_{++}: four bundles onto {1, e, m, em}.
CondensationMap codeswitch_z2(int N);

struct MappedAlgebra {
  std::map<std::string, int> mult;  // target label -> multiplicity
  int confined_dropped = 0;         // summands (with multiplicity) dropped

  int total_dim() const;  // all target anyons have d = 1
};

/// Push a Lagrangian through a condensation map: each summand contributes its
/// multiplicity to every image target; confined summands are dropped and
/// counted.
MappedAlgebra map_lagrangian(const LagrangianAlgebra& alg, const CondensationMap& map);

}  // namespace qudo
