#pragma once
// Irreducible representations, in closed form, for the groups in scope:
// dihedral D_m with m even, cyclic Z_k, and products of two such factors.
// Every irrep matrix here is monomial (at most one nonzero entry per row,
// and that entry a root of unity), so entries are stored as an optional
// exact Phase and characters are exact Cyclotomic sums.

#include <vector>

#include "qudo/group.hpp"
#include "qudo/phase.hpp"

namespace qudo {

class Irrep {
 public:
  struct Entry {
    bool nonzero = false;
    Phase ph;
  };

  Irrep(const FiniteGroup* group, std::string name, int dim);

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  const FiniteGroup& group() const { return *group_; }

  Entry entry(const GroupElement& g, int row, int col) const;
  void set_entry(const GroupElement& g, int row, int col, const Phase& ph);

  /// Exact trace of M(g).
  Cyclotomic character(const GroupElement& g) const;

  /// M(g) M(h) == M(gh) for all pairs (exact).
  bool is_homomorphism() const;

 private:
  const FiniteGroup* group_;
  std::string name_;
  int dim_;
  std::vector<std::vector<Entry>> table_;  // [element index][row*dim+col]
};

/// Complete irrep list for a supported group; throws std::invalid_argument
/// for unsupported kinds (e.g. dihedral with odd rotation order).
/// Dihedral order: 1, 1_r, 1_s, 1_rs, E_1..E_{m/2-1}.  Cyclic: chi_0..chi_{k-1}.
/// Product: pairs in factor-major order, named "(na,nb)".
std::vector<Irrep> irreps(const FiniteGroup& g);

/// Exact character value (same as r.character(g); free-function spelling).
Cyclotomic character(const Irrep& r, const GroupElement& g);

/// Sum over the group of chi_a(g) * conj(chi_b(g)); equals |G| * delta_{a,b}.
Cyclotomic character_inner_sum(const FiniteGroup& g, const Irrep& a, const Irrep& b);

}  // namespace qudo
