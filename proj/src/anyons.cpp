#include "qudo/anyons.hpp"

#include <algorithm>
#include <stdexcept>

#include "qudo/irreps.hpp"

namespace qudo {

namespace {

AnyonLabel full_label(const GroupElement& rep, const std::string& irrep_name) {
  AnyonLabel a;
  a.kind = AnyonLabel::Kind::Full;
  a.rep = rep;
  a.irrep_name = irrep_name;
  return a;
}

AnyonLabel cyclic_label(int a_exp, int chi_b) {
  AnyonLabel a;
  a.kind = AnyonLabel::Kind::Cyclic;
  a.rep = {a_exp, 0};
  a.chi_b = chi_b;
  return a;
}

AnyonLabel eps_label(const GroupElement& rep, int e1, int e2) {
  AnyonLabel a;
  a.kind = AnyonLabel::Kind::Eps;
  a.rep = rep;
  a.eps1 = e1;
  a.eps2 = e2;
  return a;
}

std::string rotation_bracket(int a_exp) {
  return a_exp == 1 ? "[r]" : "[r^" + std::to_string(a_exp) + "]";
}

void validate(int N, const AnyonLabel& a) {
  switch (a.kind) {
    case AnyonLabel::Kind::Full: {
      if (!(a.rep == GroupElement{0, 0} || a.rep == GroupElement{2 * N, 0}))
        throw std::invalid_argument("anyon: Full irrep needs a central class");
      const std::string& n = a.irrep_name;
      bool known = n == "1" || n == "1_r" || n == "1_s" || n == "1_rs";
      if (!known && n.size() > 2 && n.rfind("E_", 0) == 0 &&
          n.find_first_not_of("0123456789", 2) == std::string::npos) {
        int l = std::stoi(n.substr(2));
        known = 1 <= l && l <= 2 * N - 1 && n == "E_" + std::to_string(l);
      }
      if (!known)
        throw std::invalid_argument("anyon: unknown irrep \"" + n + "\" for D_{4N}");
      return;
    }
    case AnyonLabel::Kind::Cyclic:
      if (a.rep.y != 0 || a.rep.x < 1 || a.rep.x > 2 * N - 1)
        throw std::invalid_argument("anyon: Cyclic label needs [r^a], 0 < a < 2N");
      if (a.chi_b < 0 || a.chi_b >= 4 * N)
        throw std::invalid_argument("anyon: chi_b out of range");
      return;
    case AnyonLabel::Kind::Eps:
      if (!(a.rep == GroupElement{0, 1} || a.rep == GroupElement{1, 1}))
        throw std::invalid_argument("anyon: Eps label needs [s] or [rs]");
      if ((a.eps1 != 1 && a.eps1 != -1) || (a.eps2 != 1 && a.eps2 != -1))
        throw std::invalid_argument("anyon: eps signs must be +-1");
      return;
  }
}

}  // namespace

std::string to_string(const AnyonLabel& a, int N) {
  switch (a.kind) {
    case AnyonLabel::Kind::Full:
      if (a.rep == GroupElement{0, 0}) return a.irrep_name;
      return rotation_bracket(a.rep.x) + (a.irrep_name == "1" ? "" : a.irrep_name);
    case AnyonLabel::Kind::Cyclic: {
      std::string cls = rotation_bracket(a.rep.x);
      if (a.chi_b == 0) return cls;
      // with N known, the character taking -1 on r keeps its "_-1" subscript
      if (N > 0 && a.chi_b == 2 * N) return cls + "_-1";
      return cls + "chi_" + std::to_string(a.chi_b);
    }
    case AnyonLabel::Kind::Eps: {
      std::string cls = a.rep.x == 0 ? "[s]_" : "[rs]_";
      cls += a.eps1 > 0 ? '+' : '-';
      cls += a.eps2 > 0 ? '+' : '-';
      return cls;
    }
  }
  return "?";
}

AnyonLabel anyon_parse(int N, const std::string& text) {
  std::string t;
  for (char c : text)
    if (c != '{' && c != '}' && c != ' ') t += c;

  auto finish = [&](AnyonLabel a) {
    validate(N, a);
    return a;
  };

  if (!t.empty() && t[0] != '[') return finish(full_label({0, 0}, t));

  auto close = t.find(']');
  if (t.size() < 3 || close == std::string::npos)
    throw std::invalid_argument("anyon_parse: bad label \"" + text + "\"");
  std::string cls = t.substr(1, close - 1), rest = t.substr(close + 1);

  if (cls == "s" || cls == "rs") {
    GroupElement rep = cls == "s" ? GroupElement{0, 1} : GroupElement{1, 1};
    if (rest.size() != 3 || rest[0] != '_')
      throw std::invalid_argument("anyon_parse: reflection label needs _+- signs");
    auto sign = [&](char c) {
      if (c == '+') return +1;
      if (c == '-') return -1;
      throw std::invalid_argument("anyon_parse: bad sign in \"" + text + "\"");
    };
    return finish(eps_label(rep, sign(rest[1]), sign(rest[2])));
  }

  int a_exp;
  if (cls == "r") a_exp = 1;
  else if (cls.rfind("r^", 0) == 0) a_exp = std::stoi(cls.substr(2));
  else throw std::invalid_argument("anyon_parse: bad class \"" + text + "\"");

  if (a_exp == 2 * N)  // central rotation carries a full irrep
    return finish(full_label({a_exp, 0}, rest.empty() ? "1" : rest));

  if (rest.empty()) return finish(cyclic_label(a_exp, 0));
  if (rest == "_-1") return finish(cyclic_label(a_exp, 2 * N));
  if (rest.rfind("chi_", 0) == 0)
    return finish(cyclic_label(a_exp, std::stoi(rest.substr(4))));
  throw std::invalid_argument("anyon_parse: bad character suffix \"" + text + "\"");
}

int class_size(int N, const AnyonLabel& a) {
  switch (a.kind) {
    case AnyonLabel::Kind::Full: return 1;
    case AnyonLabel::Kind::Cyclic: return 2;      // {r^a, r^-a}
    case AnyonLabel::Kind::Eps: return 2 * N;     // a full reflection parity class
  }
  return 1;
}

int irrep_dim(const AnyonLabel& a) {
  if (a.kind == AnyonLabel::Kind::Full && a.irrep_name.rfind("E_", 0) == 0) return 2;
  return 1;
}

int quantum_dim(int N, const AnyonLabel& a) { return class_size(N, a) * irrep_dim(a); }

std::vector<Anyon> enumerate_anyons(int N) {
  if (N < 1) throw std::invalid_argument("enumerate_anyons: N >= 1 required");
  FiniteGroup g = FiniteGroup::dihedral(4 * N);
  std::vector<std::string> full_names;
  for (const auto& r : irreps(g)) full_names.push_back(r.name());

  std::vector<Anyon> out;
  auto push = [&](const AnyonLabel& label) {
    validate(N, label);
    Anyon a;
    a.label = label;
    a.class_size = class_size(N, label);
    a.irrep_dim = irrep_dim(label);
    a.quantum_dim = a.class_size * a.irrep_dim;
    out.push_back(a);
  };

  for (const auto& name : full_names) push(full_label({0, 0}, name));
  for (int a = 1; a <= 2 * N - 1; ++a)
    for (int b = 0; b < 4 * N; ++b) push(cyclic_label(a, b));
  for (const auto& name : full_names) push(full_label({2 * N, 0}, name));
  for (const GroupElement rep : {GroupElement{0, 1}, GroupElement{1, 1}})
    for (int e1 : {+1, -1})
      for (int e2 : {+1, -1}) push(eps_label(rep, e1, e2));
  return out;
}

std::vector<Anyon> enumerate_anyons(const FiniteGroup& g) {
  if (g.kind() != GroupKind::Dihedral || g.rotation_order() % 4 != 0)
    throw std::invalid_argument("enumerate_anyons: need D_{4N}");
  return enumerate_anyons(g.rotation_order() / 4);
}

int LagrangianAlgebra::total_dim(int N) const {
  int sum = 0;
  for (const auto& [label, mult] : summands) sum += mult * quantum_dim(N, label);
  return sum;
}

std::vector<LagrangianAlgebra> lagrangians(int N) {
  if (N < 1) throw std::invalid_argument("lagrangians: N >= 1 required");
  std::vector<LagrangianAlgebra> out(3);

  auto electric_tail = [&](LagrangianAlgebra& L) {
    for (int l = 1; l <= 2 * N - 1; ++l)
      L.summands.push_back({full_label({0, 0}, "E_" + std::to_string(l)), 1});
  };

  out[0].name = "L_<rs>";
  out[0].summands.push_back({full_label({0, 0}, "1"), 1});
  out[0].summands.push_back({full_label({0, 0}, "1_rs"), 1});
  electric_tail(out[0]);
  out[0].summands.push_back({eps_label({1, 1}, +1, +1), 1});
  out[0].summands.push_back({eps_label({1, 1}, +1, -1), 1});

  out[1].name = "L_<s>";
  out[1].summands.push_back({full_label({0, 0}, "1"), 1});
  out[1].summands.push_back({full_label({0, 0}, "1_s"), 1});
  electric_tail(out[1]);
  out[1].summands.push_back({eps_label({0, 1}, +1, +1), 1});
  out[1].summands.push_back({eps_label({0, 1}, +1, -1), 1});

  out[2].name = "L_<r>";
  out[2].summands.push_back({full_label({0, 0}, "1"), 1});
  out[2].summands.push_back({full_label({0, 0}, "1_r"), 1});
  for (int a = 1; a <= 2 * N - 1; ++a)
    out[2].summands.push_back({cyclic_label(a, 0), 2});
  out[2].summands.push_back({full_label({2 * N, 0}, "1"), 1});
  out[2].summands.push_back({full_label({2 * N, 0}, "1_r"), 1});

  return out;
}

void AnyonPermutation::add_swap(const AnyonLabel& a, const AnyonLabel& b) {
  swaps_.push_back({a, b});
}

AnyonLabel AnyonPermutation::apply(const AnyonLabel& a) const {
  for (const auto& [x, y] : swaps_) {
    if (a == x) return y;
    if (a == y) return x;
  }
  return a;
}

AnyonPermutation spt_permutation(int N) {
  if (N < 1) throw std::invalid_argument("spt_permutation: N >= 1 required");
  AnyonPermutation p;
  GroupElement central{2 * N, 0};
  p.add_swap(full_label(central, "1"), full_label(central, "1_r"));
  p.add_swap(full_label(central, "1_s"), full_label(central, "1_rs"));
  for (const GroupElement rep : {GroupElement{0, 1}, GroupElement{1, 1}})
    for (int e1 : {+1, -1})
      p.add_swap(eps_label(rep, e1, +1), eps_label(rep, e1, -1));
  return p;
}

std::vector<std::string> CondensationMap::images(const AnyonLabel& a) const {
  std::vector<std::string> out;
  for (const auto& row : rows)
    for (const auto& src : row.bundle)
      if (src == a) {
        out.push_back(row.target);
        break;
      }
  return out;
}

bool CondensationMap::is_confined(const AnyonLabel& a) const {
  return images(a).empty();
}

std::vector<AnyonLabel> CondensationMap::split_sources() const {
  std::vector<AnyonLabel> out;
  for (const auto& row : rows)
    for (const auto& src : row.bundle) {
      bool already = false;
      for (const auto& seen : out)
        if (seen == src) { already = true; break; }
      if (!already && images(src).size() > 1) out.push_back(src);
    }
  return out;
}

std::vector<AnyonLabel> CondensationMap::confined_anyons(int N) const {
  std::vector<AnyonLabel> out;
  for (const auto& a : enumerate_anyons(N))
    if (is_confined(a.label)) out.push_back(a.label);
  return out;
}

namespace {

/// sum_{a=0..N} [r^{2a}] tensored with a one-dimensional irrep R: the central
/// endpoint classes keep the full irrep name; the middle classes carry its
/// restriction to <r>, which is chi_0 when R(r) = +1 and chi_{2N} when
/// R(r) = -1.
std::vector<AnyonLabel> even_bundle(int N, const std::string& irrep_name) {
  int restricted_b = (irrep_name == "1_s" || irrep_name == "1_rs") ? 2 * N : 0;
  std::vector<AnyonLabel> bundle;
  bundle.push_back(full_label({0, 0}, irrep_name));
  for (int a = 1; a <= N - 1; ++a) bundle.push_back(cyclic_label(2 * a, restricted_b));
  bundle.push_back(full_label({2 * N, 0}, irrep_name));
  return bundle;
}

/// sum_{a=1..N} [r^{2a-1}] with centralizer character chi_b.
std::vector<AnyonLabel> odd_bundle(int N, int chi_b) {
  std::vector<AnyonLabel> bundle;
  for (int a = 1; a <= N; ++a) bundle.push_back(cyclic_label(2 * a - 1, chi_b));
  return bundle;
}

}  // namespace

CondensationMap codeswitch_z2z2(int N) {
  if (N < 1) throw std::invalid_argument("codeswitch_z2z2: N >= 1 required");
  CondensationMap m;
  m.target_theory = "Z2xZ2";
  m.rows = {
      {even_bundle(N, "1"), "1"},
      {even_bundle(N, "1_s"), "e1"},
      {even_bundle(N, "1_r"), "e2"},
      {even_bundle(N, "1_rs"), "e1e2"},
      {odd_bundle(N, 0), "m1"},
      {odd_bundle(N, 0), "m1e2"},
      {odd_bundle(N, 2 * N), "m1e1"},
      {odd_bundle(N, 2 * N), "m1e1e2"},
      {{eps_label({0, 1}, +1, +1)}, "m2"},
      {{eps_label({0, 1}, +1, +1)}, "m2e1"},
      {{eps_label({0, 1}, -1, +1)}, "m2e2"},
      {{eps_label({0, 1}, -1, +1)}, "m2e1e2"},
      {{eps_label({1, 1}, +1, +1)}, "m1m2"},
      {{eps_label({1, 1}, +1, +1)}, "m1m2e1e2"},
      {{eps_label({1, 1}, -1, +1)}, "m1m2e1"},
      {{eps_label({1, 1}, -1, +1)}, "m1m2e2"},
  };
  return m;
}

CondensationMap codeswitch_z2(int N) {
  if (N < 1) throw std::invalid_argument("codeswitch_z2: N >= 1 required");
  CondensationMap m;
  m.target_theory = "Z:2";
  auto with_tail = [](std::vector<AnyonLabel> bundle, const AnyonLabel& tail) {
    bundle.push_back(tail);
    return bundle;
  };
  m.rows = {
      {with_tail(even_bundle(N, "1"), eps_label({0, 1}, +1, +1)), "1"},
      {with_tail(even_bundle(N, "1_s"), eps_label({0, 1}, +1, +1)), "e"},
      {with_tail(odd_bundle(N, 0), eps_label({1, 1}, +1, +1)), "m"},
      {with_tail(odd_bundle(N, 2 * N), eps_label({1, 1}, -1, +1)), "em"},
  };
  return m;
}

int MappedAlgebra::total_dim() const {
  int sum = 0;
  for (const auto& [label, n] : mult) sum += n;
  return sum;
}

MappedAlgebra map_lagrangian(const LagrangianAlgebra& alg, const CondensationMap& map) {
  MappedAlgebra out;
  for (const auto& [label, n] : alg.summands) {
    std::vector<std::string> targets = map.images(label);
    if (targets.empty()) {
      out.confined_dropped += n;
      continue;
    }
    for (const auto& t : targets) out.mult[t] += n;
  }
  return out;
}

}  // namespace qudo
