#include "qudo/cohomology.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace qudo {

namespace {

int position_or_throw(const Subgroup& dom, const GroupElement& g) {
  int p = dom.position(g);
  if (p < 0)
    throw std::out_of_range("cochain domain does not contain " + dom.group.format(g));
  return p;
}

}  // namespace

Cochain1::Cochain1(Subgroup domain)
    : dom_(std::move(domain)), val_(dom_.elements.size(), Phase::one()) {}

Phase Cochain1::value(const GroupElement& g) const {
  return val_[position_or_throw(dom_, g)];
}

void Cochain1::set(const GroupElement& g, const Phase& p) {
  val_[position_or_throw(dom_, g)] = p;
}

Cocycle2::Cocycle2(Subgroup domain)
    : dom_(std::move(domain)),
      val_(dom_.elements.size() * dom_.elements.size(), Phase::one()) {}

Phase Cocycle2::value(const GroupElement& g, const GroupElement& h) const {
  return val_[static_cast<size_t>(position_or_throw(dom_, g)) * dom_.elements.size() +
              position_or_throw(dom_, h)];
}

void Cocycle2::set(const GroupElement& g, const GroupElement& h, const Phase& p) {
  val_[static_cast<size_t>(position_or_throw(dom_, g)) * dom_.elements.size() +
       position_or_throw(dom_, h)] = p;
}

Cocycle2 alpha_prime(int N) {
  if (N < 1) throw std::invalid_argument("alpha_prime: N >= 1 required");
  FiniteGroup g = FiniteGroup::dihedral(4 * N);
  Cocycle2 a(g.whole());
  int two_m = 8 * N;
  for (const auto& x : g.elements())
    for (const auto& y : g.elements()) {
      // rotation exponents add in the double cover Z_{8N}; a carry past 4N
      // is the sign of the lifted multiplication
      int t = (x.x + (x.y ? -y.x : y.x)) % two_m;
      if (t < 0) t += two_m;
      if (t >= 4 * N) a.set(x, y, Phase::minus_one());
    }
  return a;
}

Cochain1 kappa(int N) {
  if (N < 1) throw std::invalid_argument("kappa: N >= 1 required");
  FiniteGroup g = FiniteGroup::dihedral(4 * N);
  Cochain1 k(g.whole());
  for (const auto& x : g.elements()) {
    if (x.y != 0) continue;
    if (x.x == 2 * N) k.set(x, Phase::minus_i());
    else if (x.x > 2 * N) k.set(x, Phase::minus_one());
  }
  return k;
}

Cocycle2 coboundary(const Cochain1& beta) {
  const Subgroup& dom = beta.domain();
  Cocycle2 d(dom);
  for (const auto& g : dom.elements)
    for (const auto& h : dom.elements) {
      GroupElement gh = dom.group.multiply(g, h);
      d.set(g, h, beta.value(g) * beta.value(h) * beta.value(gh).inverse());
    }
  return d;
}

Cocycle2 alpha(int N) {
  Cocycle2 ap = alpha_prime(N);
  Cocycle2 dk = coboundary(kappa(N));
  Cocycle2 a(ap.domain());
  for (const auto& g : a.domain().elements)
    for (const auto& h : a.domain().elements)
      a.set(g, h, ap.value(g, h) * dk.value(g, h));
  return a;
}

bool is_cocycle(const Cocycle2& a, CocycleWitness* witness) {
  const Subgroup& dom = a.domain();
  for (const auto& g : dom.elements)
    for (const auto& h : dom.elements) {
      GroupElement gh = dom.group.multiply(g, h);
      for (const auto& k : dom.elements) {
        GroupElement hk = dom.group.multiply(h, k);
        if (a.value(g, h) * a.value(gh, k) != a.value(g, hk) * a.value(h, k)) {
          if (witness) *witness = {g, h, k};
          return false;
        }
      }
    }
  return true;
}

bool normalization_conditions(const Cocycle2& a, std::string* which) {
  const Subgroup& dom = a.domain();
  const FiniteGroup& grp = dom.group;
  GroupElement id = grp.identity();
  // unit modulus holds structurally: Phase is a root of unity by construction
  for (const auto& g : dom.elements) {
    if (a.value(id, g) != Phase::one() || a.value(g, id) != Phase::one()) {
      if (which) *which = "identity slice at " + grp.format(g);
      return false;
    }
    if (a.value(g, grp.inverse(g)) != Phase::one()) {
      if (which) *which = "a(g, g^-1) != 1 at g = " + grp.format(g);
      return false;
    }
  }
  for (const auto& g : dom.elements)
    for (const auto& h : dom.elements)
      if (a.value(grp.inverse(h), grp.inverse(g)) != a.value(g, h).inverse()) {
        if (which)
          *which = "a(h^-1, g^-1) != a(g, h)^-1 at (" + grp.format(g) + ", " +
                   grp.format(h) + ")";
        return false;
      }
  return true;
}

namespace {

void check_same_ambient(const Subgroup& a, const Subgroup& b, const char* who) {
  if (a.group.spec() != b.group.spec())
    throw std::invalid_argument(std::string(who) + ": ambient groups differ");
}

}  // namespace

Cocycle2 restrict_cocycle(const Cocycle2& a, const Subgroup& K) {
  check_same_ambient(a.domain(), K, "restrict_cocycle");
  Cocycle2 r(K);
  for (const auto& g : K.elements)
    for (const auto& h : K.elements) r.set(g, h, a.value(g, h));
  return r;
}

Cochain1 restrict_cochain(const Cochain1& b, const Subgroup& K) {
  check_same_ambient(b.domain(), K, "restrict_cochain");
  Cochain1 r(K);
  for (const auto& g : K.elements) r.set(g, b.value(g));
  return r;
}

Cochain1 beta_closed_form(int N) {
  if (N < 1) throw std::invalid_argument("beta_closed_form: N >= 1 required");
  FiniteGroup g = FiniteGroup::dihedral(4 * N);
  DihedralHandles h = DihedralHandles::make(g);
  Cochain1 beta(h.gen_r);
  for (int a = 0; a < 4 * N; ++a) {
    Phase v = Phase::turns(a, 8 * N);  // e^{i pi a / 4N}
    if (a == 2 * N) v = Phase::one();
    else if (a > 2 * N) v = Phase::minus_one() * v;
    beta.set({a, 0}, v);
  }
  return beta;
}

std::optional<std::pair<GroupElement, GroupElement>> commuting_pair_obstruction(
    const Cocycle2& a) {
  const Subgroup& dom = a.domain();
  for (const auto& g : dom.elements)
    for (const auto& h : dom.elements)
      if (dom.group.commutes(g, h) && a.value(g, h) != a.value(h, g))
        return std::make_pair(g, h);
  return std::nullopt;
}

namespace {

/// Breadth-first factorization of every subgroup element as prev * gen, used
/// to propagate generator phases through the coboundary relation.
struct Factorization {
  // discovery[t]: t-th element found; id first
  std::vector<GroupElement> discovery;
  // for discovery[t], t > 0: element = prev * gens[gen_idx]
  std::vector<GroupElement> prev;
  std::vector<int> gen_idx;
};

Factorization factorize(const Subgroup& K, const std::vector<GroupElement>& gens) {
  Factorization f;
  std::vector<bool> seen(K.elements.size(), false);
  GroupElement id = K.group.identity();
  seen[K.position(id)] = true;
  f.discovery.push_back(id);
  f.prev.push_back(id);
  f.gen_idx.push_back(-1);
  std::deque<GroupElement> queue{id};
  while (!queue.empty()) {
    GroupElement e = queue.front();
    queue.pop_front();
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      GroupElement next = K.group.multiply(e, gens[gi]);
      int p = K.position(next);
      if (p < 0 || seen[p]) continue;
      seen[p] = true;
      f.discovery.push_back(next);
      f.prev.push_back(e);
      f.gen_idx.push_back(static_cast<int>(gi));
      queue.push_back(next);
    }
  }
  return f;
}

/// Smallest generating set by greedy scan in enumeration order; a single
/// generator iff the subgroup is cyclic.
std::vector<GroupElement> greedy_generators(const Subgroup& K) {
  // prefer a single generator of full order (cyclic case)
  for (const auto& g : K.elements)
    if (K.group.element_order(g) == K.size()) return {g};
  std::vector<GroupElement> gens;
  std::vector<GroupElement> span{K.group.identity()};
  while (static_cast<int>(span.size()) < K.size()) {
    for (const auto& g : K.elements) {
      bool in_span = false;
      for (const auto& e : span)
        if (e == g) { in_span = true; break; }
      if (!in_span) {
        gens.push_back(g);
        span = K.group.subgroup_generated(gens).elements;
        break;
      }
    }
  }
  return gens;
}

}  // namespace

TrivializationResult trivialize(const Cocycle2& a) {
  const Subgroup& K = a.domain();
  const FiniteGroup& grp = K.group;

  if (auto obs = commuting_pair_obstruction(a)) {
    TrivializationResult res;
    res.verdict = TrivializationResult::Verdict::Nontrivial;
    res.obstruction = obs;
    res.note = "commuting pair (" + grp.format(obs->first) + ", " +
               grp.format(obs->second) +
               ") with a(g,h) != a(h,g); this ratio is invariant under "
               "multiplication by any coboundary";
    return res;
  }

  std::vector<GroupElement> gens = greedy_generators(K);
  if (gens.size() > 1 && K.size() > 16)
    throw std::invalid_argument(
        "trivialize: non-cyclic subgroup of order > 16 unsupported");

  // If a = d(beta), the product of a(k^t, k) around a generator cycle
  // telescopes to beta(k)^m, so beta(k) must be an m-th root of that product.
  std::vector<int> orders;
  std::vector<std::vector<Phase>> candidates;
  std::int64_t combos = 1;
  for (const auto& gen : gens) {
    int m = grp.element_order(gen);
    Phase cycle = Phase::one();
    GroupElement acc = grp.identity();
    for (int t = 0; t < m; ++t) {
      cycle = cycle * a.value(acc, gen);
      acc = grp.multiply(acc, gen);
    }
    std::vector<Phase> roots;
    for (int k = 0; k < m; ++k)
      roots.push_back(Phase::turns(cycle.num() + k * cycle.den(), cycle.den() * m));
    orders.push_back(m);
    candidates.push_back(std::move(roots));
    combos *= m;
  }
  if (combos > 65536) {
    TrivializationResult res;
    res.verdict = TrivializationResult::Verdict::Undecided;
    res.note = "undecided with current value group: generator root search needs " +
               std::to_string(combos) + " combinations (cap 65536)";
    return res;
  }

  Factorization f = factorize(K, gens);
  std::vector<size_t> pick(gens.size(), 0);
  while (true) {
    // propagate beta over the factorization
    Cochain1 beta(K);
    beta.set(grp.identity(), a.value(grp.identity(), grp.identity()));
    for (size_t t = 1; t < f.discovery.size(); ++t) {
      const GroupElement& prev = f.prev[t];
      const GroupElement& gen = gens[f.gen_idx[t]];
      Phase v = beta.value(prev) * candidates[f.gen_idx[t]][pick[f.gen_idx[t]]] *
                a.value(prev, gen).inverse();
      beta.set(f.discovery[t], v);
    }
    bool ok = true;
    for (const auto& g : K.elements) {
      for (const auto& h : K.elements) {
        GroupElement gh = grp.multiply(g, h);
        if (beta.value(g) * beta.value(h) * beta.value(gh).inverse() != a.value(g, h)) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) {
      TrivializationResult res;
      res.verdict = TrivializationResult::Verdict::Trivial;
      res.beta = std::move(beta);
      res.note = "d(beta) = a verified on all pairs";
      return res;
    }
    // next candidate tuple
    size_t i = 0;
    while (i < pick.size() && ++pick[i] == candidates[i].size()) {
      pick[i] = 0;
      ++i;
    }
    if (i == pick.size()) break;
  }

  TrivializationResult res;
  res.verdict = TrivializationResult::Verdict::Undecided;
  res.note = "undecided with current value group: no generator-root assignment "
             "yields d(beta) = a, and no commuting-pair obstruction exists";
  return res;
}

}  // namespace qudo
