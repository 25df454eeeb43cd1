#pragma once
// Finite groups: dihedral D_m (m even), cyclic Z_k, and products of two such
// factors.  Elements are reduced coordinate tuples with a fixed enumeration
// order so that states and operators serialize deterministically.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace qudo {

/// Coordinate tuple of a group element.
///   dihedral:  x = rotation exponent in [0, m), y = reflection bit in {0, 1}
///   cyclic:    x = exponent in [0, k), y = 0
///   product:   x = element index in factor 0, y = element index in factor 1
struct GroupElement {
  int x = 0;
  int y = 0;

  bool operator==(const GroupElement& o) const { return x == o.x && y == o.y; }
  bool operator!=(const GroupElement& o) const { return !(*this == o); }
  bool operator<(const GroupElement& o) const {
    return y != o.y ? y < o.y : x < o.x;
  }
};

enum class GroupKind { Dihedral, Cyclic, Product };

struct Subgroup;

class FiniteGroup {
 public:
  FiniteGroup() = default;  // trivial group Z_1
  /// Dihedral group with rotation subgroup Z_m (order 2m).  Presentation
  /// r^m = s^2 = id, s r s = r^{-1}.
  static FiniteGroup dihedral(int rotation_order);
  /// Cyclic group Z_k, generator g.
  static FiniteGroup cyclic(int k);
  /// Direct product of two supported groups.
  static FiniteGroup product2(const FiniteGroup& a, const FiniteGroup& b);
  /// Parse "D4N:N=<int>", "Z:<k>", "Z2xZ2".
  static FiniteGroup parse_spec(const std::string& spec);

  GroupKind kind() const { return kind_; }
  int size() const { return size_; }
  /// Dihedral only: m such that the group is D_m of order 2m.
  int rotation_order() const;
  const FiniteGroup& factor(int i) const;  // product only, i in {0, 1}

  GroupElement identity() const { return {0, 0}; }
  GroupElement multiply(const GroupElement& g, const GroupElement& h) const;
  GroupElement inverse(const GroupElement& g) const;
  /// h g h^{-1}
  GroupElement conjugate(const GroupElement& h, const GroupElement& g) const;
  GroupElement power(const GroupElement& g, std::int64_t k) const;
  int element_order(const GroupElement& g) const;
  bool commutes(const GroupElement& g, const GroupElement& h) const;
  bool is_abelian() const;

  /// Canonical enumeration index in [0, size()).
  int index(const GroupElement& g) const;
  GroupElement element(int idx) const;
  std::vector<GroupElement> elements() const;

  /// Classes sorted by their minimal element index; each class sorted by index.
  std::vector<std::vector<GroupElement>> conjugacy_classes() const;
  Subgroup centralizer(const GroupElement& g) const;
  Subgroup subgroup_generated(const std::vector<GroupElement>& gens,
                              const std::string& name = "") const;
  /// The group itself as a Subgroup (domain for whole-group cochains).
  Subgroup whole(const std::string& name = "G") const;

  /// "id", "r", "r^2", "s", "rs", "r^3s" (dihedral); "g^a" (cyclic);
  /// "(u,v)" with factor names (product).
  std::string format(const GroupElement& g) const;
  /// Inverse of format; throws std::invalid_argument on unknown names.
  GroupElement parse(const std::string& name) const;

  /// Canonical spec string ("D4N:N=2", "Z:4", "Z2xZ2", generic "ZjxZk").
  std::string spec() const;

 private:
  GroupKind kind_ = GroupKind::Cyclic;
  int size_ = 1;
  int m_ = 1;  // rotation order (dihedral) or modulus (cyclic)
  std::shared_ptr<const FiniteGroup> fa_, fb_;  // product factors
};

/// A subgroup is a sorted (by parent index) list of closed elements together
/// with a value copy of the ambient group (FiniteGroup is cheap to copy), so
/// Subgroup-valued domains never dangle.
struct Subgroup {
  FiniteGroup group;
  std::string name;                     // e.g. "<r>", "<s>", "<rs>", "G"
  std::vector<GroupElement> elements;   // ascending parent index, id first

  int size() const { return static_cast<int>(elements.size()); }
  bool contains(const GroupElement& g) const;
  /// Position of g within `elements`; -1 if absent.
  int position(const GroupElement& g) const;
  bool is_whole_group() const { return size() == group.size(); }
};

/// Convenience handles into D_{4N}: the named generators and subgroups used
/// for boundaries.  rotation_order of the group must be even.
struct DihedralHandles {
  GroupElement r, s, rs, r2N;  // r2N = central rotation r^{m/2}
  Subgroup gen_r, gen_s, gen_rs;

  static DihedralHandles make(const FiniteGroup& g);
};

}  // namespace qudo
