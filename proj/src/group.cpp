#include "qudo/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qudo {

namespace {
int positive_mod(std::int64_t a, int m) {
  int r = static_cast<int>(a % m);
  return r < 0 ? r + m : r;
}
}  // namespace

bool Subgroup::contains(const GroupElement& g) const { return position(g) >= 0; }

int Subgroup::position(const GroupElement& g) const {
  for (size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == g) return static_cast<int>(i);
  return -1;
}

FiniteGroup FiniteGroup::dihedral(int rotation_order) {
  if (rotation_order < 1) throw std::invalid_argument("dihedral: rotation_order < 1");
  FiniteGroup g;
  g.kind_ = GroupKind::Dihedral;
  g.m_ = rotation_order;
  g.size_ = 2 * rotation_order;
  return g;
}

FiniteGroup FiniteGroup::cyclic(int k) {
  if (k < 1) throw std::invalid_argument("cyclic: k < 1");
  FiniteGroup g;
  g.kind_ = GroupKind::Cyclic;
  g.m_ = k;
  g.size_ = k;
  return g;
}

FiniteGroup FiniteGroup::product2(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.kind_ == GroupKind::Product || b.kind_ == GroupKind::Product)
    throw std::invalid_argument("product2: factors must not themselves be products");
  FiniteGroup g;
  g.kind_ = GroupKind::Product;
  g.fa_ = std::make_shared<FiniteGroup>(a);
  g.fb_ = std::make_shared<FiniteGroup>(b);
  g.size_ = a.size_ * b.size_;
  g.m_ = 0;
  return g;
}

FiniteGroup FiniteGroup::parse_spec(const std::string& spec) {
  if (spec == "Z2xZ2") return product2(cyclic(2), cyclic(2));
  if (spec.rfind("D4N:N=", 0) == 0) {
    int n = std::stoi(spec.substr(6));
    if (n < 1) throw std::invalid_argument("parse_spec: need N >= 1 in " + spec);
    return dihedral(4 * n);
  }
  if (spec.rfind("Z:", 0) == 0) {
    int k = std::stoi(spec.substr(2));
    if (k < 1) throw std::invalid_argument("parse_spec: need k >= 1 in " + spec);
    return cyclic(k);
  }
  throw std::invalid_argument("parse_spec: unrecognized group spec \"" + spec + "\"");
}

std::string FiniteGroup::spec() const {
  switch (kind_) {
    case GroupKind::Dihedral:
      if (m_ % 4 == 0) return "D4N:N=" + std::to_string(m_ / 4);
      return "D:" + std::to_string(m_);
    case GroupKind::Cyclic:
      return "Z:" + std::to_string(m_);
    case GroupKind::Product:
      if (fa_->kind_ == GroupKind::Cyclic && fa_->m_ == 2 &&
          fb_->kind_ == GroupKind::Cyclic && fb_->m_ == 2)
        return "Z2xZ2";
      return fa_->spec() + "x" + fb_->spec();
  }
  return "?";
}

int FiniteGroup::rotation_order() const {
  if (kind_ != GroupKind::Dihedral) throw std::logic_error("rotation_order: not dihedral");
  return m_;
}

const FiniteGroup& FiniteGroup::factor(int i) const {
  if (kind_ != GroupKind::Product) throw std::logic_error("factor: not a product");
  return i == 0 ? *fa_ : *fb_;
}

GroupElement FiniteGroup::multiply(const GroupElement& g, const GroupElement& h) const {
  switch (kind_) {
    case GroupKind::Dihedral: {
      // (r^a s^j)(r^b s^k) = r^{a + (1-2j) b} s^{j xor k}
      int a = positive_mod(g.x + (g.y ? -h.x : h.x), m_);
      return {a, g.y ^ h.y};
    }
    case GroupKind::Cyclic:
      return {positive_mod(g.x + h.x, m_), 0};
    case GroupKind::Product: {
      GroupElement u = fa_->multiply(fa_->element(g.x), fa_->element(h.x));
      GroupElement v = fb_->multiply(fb_->element(g.y), fb_->element(h.y));
      return {fa_->index(u), fb_->index(v)};
    }
  }
  return {};
}

GroupElement FiniteGroup::inverse(const GroupElement& g) const {
  switch (kind_) {
    case GroupKind::Dihedral:
      // reflections are involutions; rotations invert the exponent
      return g.y ? g : GroupElement{positive_mod(-g.x, m_), 0};
    case GroupKind::Cyclic:
      return {positive_mod(-g.x, m_), 0};
    case GroupKind::Product:
      return {fa_->index(fa_->inverse(fa_->element(g.x))),
              fb_->index(fb_->inverse(fb_->element(g.y)))};
  }
  return {};
}

GroupElement FiniteGroup::conjugate(const GroupElement& h, const GroupElement& g) const {
  return multiply(multiply(h, g), inverse(h));
}

GroupElement FiniteGroup::power(const GroupElement& g, std::int64_t k) const {
  GroupElement acc = identity();
  GroupElement base = k < 0 ? inverse(g) : g;
  std::int64_t n = k < 0 ? -k : k;
  for (std::int64_t i = 0; i < n; ++i) acc = multiply(acc, base);
  return acc;
}

int FiniteGroup::element_order(const GroupElement& g) const {
  GroupElement acc = g;
  int n = 1;
  while (!(acc == identity())) {
    acc = multiply(acc, g);
    ++n;
  }
  return n;
}

bool FiniteGroup::commutes(const GroupElement& g, const GroupElement& h) const {
  return multiply(g, h) == multiply(h, g);
}

bool FiniteGroup::is_abelian() const {
  switch (kind_) {
    case GroupKind::Dihedral: return m_ <= 2;
    case GroupKind::Cyclic: return true;
    case GroupKind::Product: return fa_->is_abelian() && fb_->is_abelian();
  }
  return false;
}

int FiniteGroup::index(const GroupElement& g) const {
  switch (kind_) {
    case GroupKind::Dihedral: return g.y * m_ + g.x;
    case GroupKind::Cyclic: return g.x;
    case GroupKind::Product: return g.x * fb_->size_ + g.y;
  }
  return 0;
}

GroupElement FiniteGroup::element(int idx) const {
  if (idx < 0 || idx >= size_) throw std::out_of_range("element: index out of range");
  switch (kind_) {
    case GroupKind::Dihedral: return {idx % m_, idx / m_};
    case GroupKind::Cyclic: return {idx, 0};
    case GroupKind::Product: return {idx / fb_->size_, idx % fb_->size_};
  }
  return {};
}

std::vector<GroupElement> FiniteGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(size_);
  for (int i = 0; i < size_; ++i) out.push_back(element(i));
  return out;
}

std::vector<std::vector<GroupElement>> FiniteGroup::conjugacy_classes() const {
  std::vector<bool> seen(size_, false);
  std::vector<std::vector<GroupElement>> classes;
  for (int i = 0; i < size_; ++i) {
    if (seen[i]) continue;
    GroupElement g = element(i);
    std::set<int> cls;
    for (int j = 0; j < size_; ++j) cls.insert(index(conjugate(element(j), g)));
    std::vector<GroupElement> members;
    for (int idx : cls) {
      seen[idx] = true;
      members.push_back(element(idx));
    }
    classes.push_back(std::move(members));
  }
  return classes;
}

Subgroup FiniteGroup::centralizer(const GroupElement& g) const {
  Subgroup sub;
  sub.group = *this;
  sub.name = "C(" + format(g) + ")";
  for (int i = 0; i < size_; ++i)
    if (commutes(element(i), g)) sub.elements.push_back(element(i));
  return sub;
}

Subgroup FiniteGroup::subgroup_generated(const std::vector<GroupElement>& gens,
                                         const std::string& name) const {
  std::set<int> closure{index(identity())};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> snapshot(closure.begin(), closure.end());
    for (int i : snapshot)
      for (const auto& gen : gens) {
        int j = index(multiply(element(i), gen));
        if (closure.insert(j).second) grew = true;
      }
  }
  Subgroup sub;
  sub.group = *this;
  if (!name.empty()) {
    sub.name = name;
  } else {
    sub.name = "<";
    for (size_t k = 0; k < gens.size(); ++k)
      sub.name += (k ? "," : "") + format(gens[k]);
    sub.name += ">";
  }
  for (int idx : closure) sub.elements.push_back(element(idx));
  return sub;
}

Subgroup FiniteGroup::whole(const std::string& name) const {
  Subgroup sub;
  sub.group = *this;
  sub.name = name;
  sub.elements = elements();
  return sub;
}

std::string FiniteGroup::format(const GroupElement& g) const {
  switch (kind_) {
    case GroupKind::Dihedral: {
      if (g.x == 0 && g.y == 0) return "id";
      std::string rot;
      if (g.x == 1) rot = "r";
      else if (g.x > 1) rot = "r^" + std::to_string(g.x);
      return g.y ? rot + "s" : rot;
    }
    case GroupKind::Cyclic: {
      if (g.x == 0) return "id";
      if (g.x == 1) return "g";
      return "g^" + std::to_string(g.x);
    }
    case GroupKind::Product:
      return "(" + fa_->format(fa_->element(g.x)) + "," +
             fb_->format(fb_->element(g.y)) + ")";
  }
  return "?";
}

GroupElement FiniteGroup::parse(const std::string& name) const {
  for (int i = 0; i < size_; ++i)
    if (format(element(i)) == name) return element(i);
  // accept a tolerant "r^a s^j" spelling with optional spaces
  std::string squeezed;
  for (char c : name)
    if (c != ' ') squeezed += c;
  for (int i = 0; i < size_; ++i)
    if (format(element(i)) == squeezed) return element(i);
  throw std::invalid_argument("parse: unknown element \"" + name + "\" in " + spec());
}

DihedralHandles DihedralHandles::make(const FiniteGroup& g) {
  if (g.kind() != GroupKind::Dihedral || g.rotation_order() % 2 != 0)
    throw std::invalid_argument("DihedralHandles: need dihedral with even rotation order");
  DihedralHandles h;
  h.r = {1, 0};
  h.s = {0, 1};
  h.rs = {1, 1};
  h.r2N = {g.rotation_order() / 2, 0};
  h.gen_r = g.subgroup_generated({h.r}, "<r>");
  h.gen_s = g.subgroup_generated({h.s}, "<s>");
  h.gen_rs = g.subgroup_generated({h.rs}, "<rs>");
  return h;
}

}  // namespace qudo
