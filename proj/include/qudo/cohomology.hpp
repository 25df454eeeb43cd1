#pragma once
// Group 2-cocycles on D_{4N} and their boundary trivializations, all in exact
// Phase arithmetic.  The distinguished cocycle alpha_N = alpha'_N * (d kappa_N)
// drives both the transversal-gate layer and its boundary counter-terms; the
// closed-form 1-cochain beta_N trivializes alpha_N on the rotation subgroup.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qudo/group.hpp"
#include "qudo/phase.hpp"

namespace qudo {

/// Total map domain -> Phase with value(id) == 1 by default construction.
class Cochain1 {
 public:
  explicit Cochain1(Subgroup domain);

  const Subgroup& domain() const { return dom_; }
  Phase value(const GroupElement& g) const;
  void set(const GroupElement& g, const Phase& p);

 private:
  Subgroup dom_;
  std::vector<Phase> val_;  // by position in dom_.elements
};

/// Total map domain x domain -> Phase (dense table).
class Cocycle2 {
 public:
  explicit Cocycle2(Subgroup domain);  // identically 1

  const Subgroup& domain() const { return dom_; }
  Phase value(const GroupElement& g, const GroupElement& h) const;
  void set(const GroupElement& g, const GroupElement& h, const Phase& p);

 private:
  Subgroup dom_;
  std::vector<Phase> val_;  // [pos(g) * |K| + pos(h)]
};

/// The sign cocycle on D_{4N}: alpha'_N(r^a s^j, r^b s^k) = -1 exactly when
/// the rotation exponents add with a carry past 4N in the double cover D_{8N}
/// (i.e. (a + (1-2j) b) mod 8N >= 4N), else +1.
Cocycle2 alpha_prime(int N);

/// Normalizing 1-cochain: kappa_N(r^a) = -i at a = 2N, -1 for a > 2N, and +1
/// on everything else (including all reflections).
Cochain1 kappa(int N);

/// (d beta)(g, h) = beta(g) beta(h) / beta(gh).
Cocycle2 coboundary(const Cochain1& beta);

/// alpha_N = alpha'_N * d(kappa_N); normalized representative cocycle.
Cocycle2 alpha(int N);

struct CocycleWitness {
  GroupElement g, h, k;
};

/// Exhaustive 2-cocycle condition a(g,h) a(gh,k) == a(g,hk) a(h,k); on failure
/// fills `witness` (if given) with the first violating triple.
bool is_cocycle(const Cocycle2& a, CocycleWitness* witness = nullptr);

/// The four normalization conditions: unit modulus (structural), identity
/// slices, a(g, g^{-1}) = 1, and a(h^{-1}, g^{-1}) = a(g, h)^{-1}.  On failure
/// `which` (if given) names the condition and witness pair.
bool normalization_conditions(const Cocycle2& a, std::string* which = nullptr);

/// Pointwise restriction to a subgroup K of the same ambient group.
Cocycle2 restrict_cocycle(const Cocycle2& a, const Subgroup& K);
Cochain1 restrict_cochain(const Cochain1& b, const Subgroup& K);

/// Closed form on <r> in D_{4N}: beta_N(r^a) = e^{i pi a / 4N} for a < 2N,
/// +1 at a = 2N, -e^{i pi a / 4N} for a > 2N.  Satisfies
/// d(beta_N) = alpha_N restricted to <r>, exactly.
Cochain1 beta_closed_form(int N);

/// On commuting pairs, eps(g,h) = a(g,h)/a(h,g) is unchanged by multiplying
/// `a` with any coboundary, so eps(g,h) != 1 certifies that `a` is not a
/// coboundary over U(1).  Returns such a pair if one exists.
std::optional<std::pair<GroupElement, GroupElement>> commuting_pair_obstruction(
    const Cocycle2& a);

struct TrivializationResult {
  enum class Verdict { Trivial, Nontrivial, Undecided };
  Verdict verdict;
  std::optional<Cochain1> beta;  // set when Trivial: d(beta) = a, beta(id) = 1
  std::optional<std::pair<GroupElement, GroupElement>> obstruction;  // Nontrivial
  std::string note;
};

/// Decide whether `a` (on a cyclic subgroup, or any subgroup of order <= 16)
/// is a coboundary.  Search values live in the cyclotomic group mu_{m*d}
/// (m = generator order, d = lcm of the cocycle's value denominators), which
/// is exactly what the propagation relation beta(k^{t+1}) =
/// beta(k^t) beta(k) / a(k^t, k) can require.  Verdicts:
///   Trivial     with an explicit beta,
///   Nontrivial  with a commuting-pair obstruction (a proof, not a search),
///   Undecided   when the bounded search is exhausted without either — never
///               silently mapped to Nontrivial.
TrivializationResult trivialize(const Cocycle2& a);

}  // namespace qudo
