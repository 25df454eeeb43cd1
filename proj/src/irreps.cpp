#include "qudo/irreps.hpp"

#include <stdexcept>

namespace qudo {

Irrep::Irrep(const FiniteGroup* group, std::string name, int dim)
    : group_(group), name_(std::move(name)), dim_(dim),
      table_(group->size(), std::vector<Entry>(static_cast<size_t>(dim) * dim)) {}

Irrep::Entry Irrep::entry(const GroupElement& g, int row, int col) const {
  return table_[group_->index(g)][static_cast<size_t>(row) * dim_ + col];
}

void Irrep::set_entry(const GroupElement& g, int row, int col, const Phase& ph) {
  table_[group_->index(g)][static_cast<size_t>(row) * dim_ + col] = {true, ph};
}

Cyclotomic Irrep::character(const GroupElement& g) const {
  Cyclotomic tr;
  for (int i = 0; i < dim_; ++i) {
    Entry e = entry(g, i, i);
    if (e.nonzero) tr += Cyclotomic::from_phase(e.ph);
  }
  return tr;
}

bool Irrep::is_homomorphism() const {
  for (const auto& g : group_->elements())
    for (const auto& h : group_->elements()) {
      GroupElement gh = group_->multiply(g, h);
      for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
          // (M(g) M(h))_{ij}: monomial matrices have at most one term
          Cyclotomic acc;
          for (int k = 0; k < dim_; ++k) {
            Entry a = entry(g, i, k), b = entry(h, k, j);
            if (a.nonzero && b.nonzero) acc += Cyclotomic::from_phase(a.ph * b.ph);
          }
          Entry c = entry(gh, i, j);
          Cyclotomic want = c.nonzero ? Cyclotomic::from_phase(c.ph) : Cyclotomic();
          if (acc != want) return false;
        }
    }
  return true;
}

namespace {

std::vector<Irrep> dihedral_irreps(const FiniteGroup& g) {
  int m = g.rotation_order();
  if (m % 2 != 0)
    throw std::invalid_argument("irreps: dihedral rotation order must be even");
  std::vector<Irrep> out;
  // four 1-dim irreps; signs on (r, s): (+,+), (+,-), (-,+), (-,-)
  const struct { const char* nm; int sr, ss; } ones[] = {
      {"1", 0, 0}, {"1_r", 0, 1}, {"1_s", 1, 0}, {"1_rs", 1, 1}};
  for (const auto& o : ones) {
    Irrep rep(&g, o.nm, 1);
    for (const auto& e : g.elements()) {
      int sign = (o.sr * e.x + o.ss * e.y) % 2;
      rep.set_entry(e, 0, 0, sign ? Phase::minus_one() : Phase::one());
    }
    out.push_back(std::move(rep));
  }
  // 2-dim irreps E_l, l = 1..m/2-1, with zeta = primitive m-th root of unity:
  //   M(r^a)   = diag(zeta^{a l}, zeta^{-a l})
  //   M(r^a s) = antidiag(zeta^{a l}, zeta^{-a l})
  for (int l = 1; l < m / 2; ++l) {
    Irrep rep(&g, "E_" + std::to_string(l), 2);
    for (const auto& e : g.elements()) {
      Phase up = Phase::root_of_unity(m, static_cast<std::int64_t>(e.x) * l);
      Phase dn = up.inverse();
      if (e.y == 0) {
        rep.set_entry(e, 0, 0, up);
        rep.set_entry(e, 1, 1, dn);
      } else {
        rep.set_entry(e, 0, 1, up);
        rep.set_entry(e, 1, 0, dn);
      }
    }
    out.push_back(std::move(rep));
  }
  return out;
}

std::vector<Irrep> cyclic_irreps(const FiniteGroup& g) {
  int k = g.size();
  std::vector<Irrep> out;
  for (int b = 0; b < k; ++b) {
    Irrep rep(&g, "chi_" + std::to_string(b), 1);
    for (const auto& e : g.elements())
      rep.set_entry(e, 0, 0, Phase::root_of_unity(k, static_cast<std::int64_t>(e.x) * b));
    out.push_back(std::move(rep));
  }
  return out;
}

std::vector<Irrep> product_irreps(const FiniteGroup& g) {
  const FiniteGroup& fa = g.factor(0);
  const FiniteGroup& fb = g.factor(1);
  std::vector<Irrep> ra = irreps(fa), rb = irreps(fb);
  std::vector<Irrep> out;
  for (const auto& a : ra)
    for (const auto& b : rb) {
      Irrep rep(&g, "(" + a.name() + "," + b.name() + ")", a.dim() * b.dim());
      for (const auto& e : g.elements()) {
        GroupElement ea = fa.element(e.x), eb = fb.element(e.y);
        for (int i1 = 0; i1 < a.dim(); ++i1)
          for (int j1 = 0; j1 < a.dim(); ++j1) {
            Irrep::Entry u = a.entry(ea, i1, j1);
            if (!u.nonzero) continue;
            for (int i2 = 0; i2 < b.dim(); ++i2)
              for (int j2 = 0; j2 < b.dim(); ++j2) {
                Irrep::Entry v = b.entry(eb, i2, j2);
                if (!v.nonzero) continue;
                rep.set_entry(e, i1 * b.dim() + i2, j1 * b.dim() + j2, u.ph * v.ph);
              }
          }
      }
      out.push_back(std::move(rep));
    }
  return out;
}

}  // namespace

std::vector<Irrep> irreps(const FiniteGroup& g) {
  switch (g.kind()) {
    case GroupKind::Dihedral: return dihedral_irreps(g);
    case GroupKind::Cyclic: return cyclic_irreps(g);
    case GroupKind::Product: return product_irreps(g);
  }
  throw std::invalid_argument("irreps: unsupported group kind");
}

Cyclotomic character(const Irrep& r, const GroupElement& g) { return r.character(g); }

Cyclotomic character_inner_sum(const FiniteGroup& g, const Irrep& a, const Irrep& b) {
  Cyclotomic sum;
  for (const auto& e : g.elements()) sum += a.character(e) * b.character(e).conj();
  return sum;
}

}  // namespace qudo
