#include "qudo/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "qudo/irreps.hpp"

namespace qudo {

std::size_t ConfigHash::operator()(const EdgeConfig& c) const noexcept {
  std::size_t h = 1469598103934665603ull;  // FNV-1a 64-bit
  for (std::uint8_t b : c) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

Subgroup intersect(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  std::vector<GroupElement> common;
  for (const auto& e : a.elements)
    if (b.contains(e)) common.push_back(e);
  Subgroup out;
  out.group = g;
  out.elements = common;
  if (common.size() == a.elements.size())
    out.name = a.name;
  else if (common.size() == b.elements.size())
    out.name = b.name;
  else
    out.name = a.name + "&" + b.name;
  return out;
}

void check_same_group(const FiniteGroup& g, const Subgroup& k, const char* which) {
  if (k.group.spec() != g.spec())
    throw std::invalid_argument(std::string("PatchGeometry: boundary subgroup ") +
                                which + " belongs to a different group");
}

}  // namespace

PatchGeometry::PatchGeometry(const FiniteGroup& group, int width, int height,
                             const Subgroup& k_left, const Subgroup& k_top,
                             const Subgroup& k_right_bottom)
    : group_(group), w_(width), h_(height) {
  if (width < 2 || height < 2 || width % 2 != 0 || height % 2 != 0)
    throw std::invalid_argument("PatchGeometry: width and height must be even and >= 2");
  if (group.size() > 255)
    throw std::invalid_argument("PatchGeometry: group too large for byte-indexed configs");
  check_same_group(group, k_left, "left");
  check_same_group(group, k_top, "top");
  check_same_group(group, k_right_bottom, "right/bottom");

  const Subgroup whole = group_.whole();
  edge_groups_.assign(w_ * (h_ + 1) + (w_ + 1) * h_, whole);
  for (int y = 0; y <= h_; ++y)
    for (int x = 0; x < w_; ++x) {
      if (y == 0) edge_groups_[h_edge(x, y)] = k_right_bottom;
      if (y == h_) edge_groups_[h_edge(x, y)] = k_top;
    }
  for (int y = 0; y < h_; ++y) {
    edge_groups_[v_edge(0, y)] = k_left;
    edge_groups_[v_edge(w_, y)] = k_right_bottom;
  }

  vertex_groups_.assign(num_vertices(), whole);
  for (int vy = 0; vy <= h_; ++vy)
    for (int vx = 0; vx <= w_; ++vx) {
      Subgroup k = whole;
      if (vx == 0) k = intersect(group_, k, k_left);
      if (vx == w_) k = intersect(group_, k, k_right_bottom);
      if (vy == 0) k = intersect(group_, k, k_right_bottom);
      if (vy == h_) k = intersect(group_, k, k_top);
      vertex_groups_[vertex(vx, vy)] = k;
    }
}

PatchGeometry PatchGeometry::dihedral_patch(int N, int width, int height) {
  if (N < 1) throw std::invalid_argument("dihedral_patch: N >= 1 required");
  FiniteGroup g = FiniteGroup::dihedral(4 * N);
  DihedralHandles d = DihedralHandles::make(g);
  return PatchGeometry(g, width, height, d.gen_rs, d.gen_s, d.gen_r);
}

int PatchGeometry::h_edge(int x, int y) const {
  if (x < 0 || x >= w_ || y < 0 || y > h_)
    throw std::out_of_range("h_edge: coordinates outside patch");
  return y * w_ + x;
}

int PatchGeometry::v_edge(int x, int y) const {
  if (x < 0 || x > w_ || y < 0 || y >= h_)
    throw std::out_of_range("v_edge: coordinates outside patch");
  return w_ * (h_ + 1) + y * (w_ + 1) + x;
}

EdgeKind PatchGeometry::edge_kind(int e) const {
  return e < w_ * (h_ + 1) ? EdgeKind::Horizontal : EdgeKind::Vertical;
}

std::pair<int, int> PatchGeometry::edge_coords(int e) const {
  if (e < 0 || e >= num_edges()) throw std::out_of_range("edge_coords: bad edge");
  if (edge_kind(e) == EdgeKind::Horizontal) return {e % w_, e / w_};
  int r = e - w_ * (h_ + 1);
  return {r % (w_ + 1), r / (w_ + 1)};
}

Region PatchGeometry::edge_region(int e) const {
  auto [x, y] = edge_coords(e);
  if (edge_kind(e) == EdgeKind::Horizontal) {
    if (y == 0) return Region::Bottom;
    if (y == h_) return Region::Top;
  } else {
    if (x == 0) return Region::Left;
    if (x == w_) return Region::Right;
  }
  return Region::Bulk;
}

std::string PatchGeometry::edge_name(int e) const {
  auto [x, y] = edge_coords(e);
  std::ostringstream os;
  os << (edge_kind(e) == EdgeKind::Horizontal ? 'h' : 'v') << '(' << x << ',' << y
     << ')';
  return os.str();
}

const Subgroup& PatchGeometry::vertex_group(int vx, int vy) const {
  if (vx < 0 || vx > w_ || vy < 0 || vy > h_)
    throw std::out_of_range("vertex_group: coordinates outside patch");
  return vertex_groups_[vertex(vx, vy)];
}

std::vector<std::pair<int, bool>> PatchGeometry::vertex_star(int vx, int vy) const {
  if (vx < 0 || vx > w_ || vy < 0 || vy > h_)
    throw std::out_of_range("vertex_star: coordinates outside patch");
  std::vector<std::pair<int, bool>> star;
  if (vx > 0) star.push_back({h_edge(vx - 1, vy), false});  // left, inbound
  if (vx < w_) star.push_back({h_edge(vx, vy), true});      // right, outbound
  if (vy > 0) star.push_back({v_edge(vx, vy - 1), false});  // down, inbound
  if (vy < h_) star.push_back({v_edge(vx, vy), true});      // up, outbound
  return star;
}

PatchGeometry::PlaquetteEdges PatchGeometry::plaquette_edges(int px, int py) const {
  if (px < 0 || px >= w_ || py < 0 || py >= h_)
    throw std::out_of_range("plaquette_edges: coordinates outside patch");
  return {v_edge(px, py), h_edge(px, py + 1), v_edge(px + 1, py), h_edge(px, py)};
}

GroupElement PatchGeometry::flux(const EdgeConfig& c, int px, int py) const {
  PlaquetteEdges e = plaquette_edges(px, py);
  GroupElement g1 = group_.element(c[e.left]);
  GroupElement g2 = group_.element(c[e.top]);
  GroupElement g3 = group_.element(c[e.right]);
  GroupElement g4 = group_.element(c[e.bottom]);
  return group_.multiply(
      group_.multiply(group_.multiply(g1, g2), group_.inverse(g3)),
      group_.inverse(g4));
}

EdgeConfig PatchGeometry::identity_config() const {
  return EdgeConfig(num_edges(), 0);
}

std::optional<std::pair<int, int>> PatchGeometry::first_nonflat_plaquette(
    const EdgeConfig& c) const {
  for (int py = 0; py < h_; ++py)
    for (int px = 0; px < w_; ++px)
      if (flux(c, px, py) != group_.identity()) return std::make_pair(px, py);
  return std::nullopt;
}

std::optional<int> PatchGeometry::first_domain_violation(const EdgeConfig& c) const {
  for (int e = 0; e < num_edges(); ++e)
    if (!edge_groups_[e].contains(group_.element(c[e]))) return e;
  return std::nullopt;
}

std::vector<int> PatchGeometry::ribbon(int i) const {
  auto [px, py] = junction_plaquette();
  std::vector<int> edges;
  switch (i) {
    case 1:  // left boundary to junction, crossing vertical edges
      for (int x = 0; x <= px; ++x) edges.push_back(v_edge(x, py));
      return edges;
    case 2:  // top boundary down to junction, crossing horizontal edges
      for (int y = h_; y >= py + 1; --y) edges.push_back(h_edge(px, y));
      return edges;
    case 3:  // bottom boundary up to junction, crossing horizontal edges
      for (int y = 0; y <= py; ++y) edges.push_back(h_edge(px, y));
      return edges;
    default:
      throw std::invalid_argument("ribbon: index must be 1, 2, or 3");
  }
}

std::vector<int> PatchGeometry::electric_path(int i) const {
  auto [px, py] = junction_vertex();
  std::vector<int> edges;
  switch (i) {
    case 1:  // junction vertex to the left boundary
      for (int x = px - 1; x >= 0; --x) edges.push_back(h_edge(x, py));
      return edges;
    case 2:  // junction vertex up to the top boundary
      for (int y = py; y < h_; ++y) edges.push_back(v_edge(px, y));
      return edges;
    case 3:  // junction vertex to the right boundary
      for (int x = px; x < w_; ++x) edges.push_back(h_edge(x, py));
      return edges;
    default:
      throw std::invalid_argument("electric_path: index must be 1, 2, or 3");
  }
}

MonomialOp::MonomialOp(std::string name, std::vector<int> support, Action fwd,
                       Action bwd)
    : name_(std::move(name)), support_(std::move(support)), fwd_(std::move(fwd)),
      bwd_(std::move(bwd)) {
  std::sort(support_.begin(), support_.end());
  support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
}

MonomialOp MonomialOp::identity_op() {
  auto noop = [](EdgeConfig&, Phase&) {};
  return MonomialOp("id", {}, noop, noop);
}

MonomialOp MonomialOp::inverse() const {
  return MonomialOp(name_ + "^-1", support_, bwd_, fwd_);
}

MonomialOp MonomialOp::product(const MonomialOp& a, const MonomialOp& b) {
  std::vector<int> support = a.support_;
  support.insert(support.end(), b.support_.begin(), b.support_.end());
  Action fwd = [af = a.fwd_, bf = b.fwd_](EdgeConfig& c, Phase& ph) {
    bf(c, ph);  // operator product a.b acts with b first
    af(c, ph);
  };
  Action bwd = [ab = a.bwd_, bb = b.bwd_](EdgeConfig& c, Phase& ph) {
    ab(c, ph);
    bb(c, ph);
  };
  return MonomialOp(a.name_ + "*" + b.name_, std::move(support), std::move(fwd),
                    std::move(bwd));
}

MonomialOp MonomialOp::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  MonomialOp out = identity_op();
  for (int i = 0; i < k; ++i) out = product(*this, out);
  return MonomialOp("(" + name_ + ")^" + std::to_string(k), out.support_, out.fwd_,
                    out.bwd_);
}

MonomialOp MonomialOp::commutator(const MonomialOp& a, const MonomialOp& b) {
  MonomialOp c = product(product(a.inverse(), b.inverse()), product(a, b));
  return MonomialOp("[" + a.name_ + "," + b.name_ + "]", c.support_, c.fwd_, c.bwd_);
}

namespace {

using PermTable = std::vector<std::uint8_t>;

PermTable left_table(const FiniteGroup& g, const GroupElement& a) {
  PermTable t(g.size());
  for (int i = 0; i < g.size(); ++i)
    t[i] = static_cast<std::uint8_t>(g.index(g.multiply(a, g.element(i))));
  return t;
}

PermTable right_inv_table(const FiniteGroup& g, const GroupElement& a) {
  GroupElement ai = g.inverse(a);
  PermTable t(g.size());
  for (int i = 0; i < g.size(); ++i)
    t[i] = static_cast<std::uint8_t>(g.index(g.multiply(g.element(i), ai)));
  return t;
}

MonomialOp table_op(std::string name, int edge, PermTable fwd, PermTable bwd) {
  auto mk = [edge](PermTable t) {
    return [edge, t = std::move(t)](EdgeConfig& c, Phase&) { c[edge] = t[c[edge]]; };
  };
  return MonomialOp(std::move(name), {edge}, mk(std::move(fwd)), mk(std::move(bwd)));
}

}  // namespace

MonomialOp diagonal_op(std::string name, std::vector<int> support,
                       std::function<Phase(const EdgeConfig&)> eigen) {
  auto fwd = [eigen](EdgeConfig& c, Phase& ph) { ph = ph * eigen(c); };
  auto bwd = [eigen](EdgeConfig& c, Phase& ph) { ph = ph * eigen(c).conj(); };
  return MonomialOp(std::move(name), std::move(support), std::move(fwd),
                    std::move(bwd));
}

MonomialOp left_mult(const PatchGeometry& geo, int edge, const GroupElement& g) {
  const FiniteGroup& grp = geo.group();
  return table_op("L^" + grp.format(g) + "@" + geo.edge_name(edge), edge,
                  left_table(grp, g), left_table(grp, grp.inverse(g)));
}

MonomialOp right_mult(const PatchGeometry& geo, int edge, const GroupElement& g) {
  const FiniteGroup& grp = geo.group();
  return table_op("R^" + grp.format(g) + "@" + geo.edge_name(edge), edge,
                  right_inv_table(grp, g), right_inv_table(grp, grp.inverse(g)));
}

MonomialOp vertex_op(const PatchGeometry& geo, int vx, int vy, const GroupElement& g) {
  const FiniteGroup& grp = geo.group();
  const Subgroup& k = geo.vertex_group(vx, vy);
  if (!k.contains(g))
    throw std::invalid_argument("vertex_op: " + grp.format(g) +
                                " is outside the gauge group " + k.name +
                                " of vertex (" + std::to_string(vx) + "," +
                                std::to_string(vy) + ")");
  GroupElement gi = grp.inverse(g);
  std::vector<int> support;
  std::vector<std::pair<int, PermTable>> fwd_tabs, bwd_tabs;
  for (auto [edge, outbound] : geo.vertex_star(vx, vy)) {
    support.push_back(edge);
    if (outbound) {
      fwd_tabs.push_back({edge, left_table(grp, g)});
      bwd_tabs.push_back({edge, left_table(grp, gi)});
    } else {
      fwd_tabs.push_back({edge, right_inv_table(grp, g)});
      bwd_tabs.push_back({edge, right_inv_table(grp, gi)});
    }
  }
  auto mk = [](std::vector<std::pair<int, PermTable>> tabs) {
    return [tabs = std::move(tabs)](EdgeConfig& c, Phase&) {
      for (const auto& [edge, t] : tabs) c[edge] = t[c[edge]];
    };
  };
  return MonomialOp("A(" + std::to_string(vx) + "," + std::to_string(vy) + ")^" +
                        grp.format(g),
                    std::move(support), mk(std::move(fwd_tabs)),
                    mk(std::move(bwd_tabs)));
}

MonomialOp ribbon_op(const PatchGeometry& geo, int i, const GroupElement& g) {
  MonomialOp out = MonomialOp::identity_op();
  for (int edge : geo.ribbon(i)) out = MonomialOp::product(left_mult(geo, edge, g), out);
  return MonomialOp("L_xi" + std::to_string(i) + "^" + geo.group().format(g),
                    out.support(), [out](EdgeConfig& c, Phase& ph) { out.apply(c, ph); },
                    [out](EdgeConfig& c, Phase& ph) { out.apply_inverse(c, ph); });
}

bool PlaquetteProjector::keeps(const EdgeConfig& c) const {
  return geo->flux(c, px, py) == g;
}

PlaquetteProjector plaquette_projector(const PatchGeometry& geo, int px, int py,
                                       const GroupElement& g) {
  return PlaquetteProjector{&geo, px, py, g};
}

OpComparison monomial_equal(const PatchGeometry& geo, const MonomialOp& a,
                            const MonomialOp& b,
                            unsigned long long exhaustive_limit, int samples,
                            std::uint64_t seed) {
  std::vector<int> joint = a.support();
  joint.insert(joint.end(), b.support().begin(), b.support().end());
  std::sort(joint.begin(), joint.end());
  joint.erase(std::unique(joint.begin(), joint.end()), joint.end());

  const int gsize = geo.group().size();
  unsigned long long total = 1;
  bool exhaustive = true;
  for (std::size_t i = 0; i < joint.size(); ++i) {
    if (total > exhaustive_limit / gsize) {
      exhaustive = false;
      break;
    }
    total *= gsize;
  }
  if (exhaustive && total > exhaustive_limit) exhaustive = false;

  OpComparison out;
  out.exhaustive = exhaustive;
  EdgeConfig base = geo.identity_config();

  auto differs = [&](const EdgeConfig& input) {
    EdgeConfig ca = input, cb = input;
    Phase pa = Phase::one(), pb = Phase::one();
    a.apply(ca, pa);
    b.apply(cb, pb);
    return ca != cb || pa != pb;
  };

  if (exhaustive) {
    std::vector<int> digits(joint.size(), 0);
    while (true) {
      for (std::size_t i = 0; i < joint.size(); ++i)
        base[joint[i]] = static_cast<std::uint8_t>(digits[i]);
      ++out.checked;
      if (differs(base)) {
        out.equal = false;
        out.witness = base;
        return out;
      }
      std::size_t i = 0;
      for (; i < joint.size(); ++i) {
        if (++digits[i] < gsize) break;
        digits[i] = 0;
      }
      if (i == joint.size()) break;
    }
    return out;
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, gsize - 1);
  for (int n = 0; n < samples; ++n) {
    for (int e : joint) base[e] = static_cast<std::uint8_t>(pick(rng));
    ++out.checked;
    if (differs(base)) {
      out.equal = false;
      out.witness = base;
      return out;
    }
  }
  return out;
}

std::size_t default_term_cap() {
  if (const char* env = std::getenv("QUDO_TERM_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return 10'000'000;
}

SparseState::SparseState(std::size_t term_cap) : cap_(term_cap) {}

SparseState SparseState::basis(const EdgeConfig& c, std::size_t term_cap) {
  SparseState s(term_cap);
  s.add(c, 1.0);
  return s;
}

void SparseState::add(const EdgeConfig& c, std::complex<double> amp) {
  amps_[c] += amp;
  if (amps_.size() > cap_)
    throw std::runtime_error("SparseState: term count " +
                             std::to_string(amps_.size()) + " exceeds cap " +
                             std::to_string(cap_));
}

double SparseState::norm2() const {
  double n = 0;
  for (const auto& [c, a] : amps_) n += std::norm(a);
  return n;
}

void SparseState::scale(std::complex<double> z) {
  for (auto& [c, a] : amps_) a *= z;
}

void SparseState::prune(double tol) {
  for (auto it = amps_.begin(); it != amps_.end();)
    it = std::abs(it->second) < tol ? amps_.erase(it) : std::next(it);
}

SparseState SparseState::applied(const MonomialOp& op) const {
  SparseState out(cap_);
  for (const auto& [c, a] : amps_) {
    EdgeConfig c2 = c;
    Phase ph = Phase::one();
    op.apply(c2, ph);
    out.add(c2, a * ph.to_complex());
  }
  out.prune();
  return out;
}

std::complex<double> SparseState::inner(const SparseState& other) const {
  std::complex<double> s = 0;
  for (const auto& [c, a] : amps_) {
    auto it = other.amps_.find(c);
    if (it != other.amps_.end()) s += std::conj(a) * it->second;
  }
  return s;
}

SparseState vertex_average(const PatchGeometry& geo, int vx, int vy,
                           const SparseState& s) {
  const Subgroup& k = geo.vertex_group(vx, vy);
  SparseState out(s.term_cap());
  const double w = 1.0 / k.size();
  for (const GroupElement& g : k.elements) {
    MonomialOp op = vertex_op(geo, vx, vy, g);
    for (const auto& [c, a] : s.amplitudes()) {
      EdgeConfig c2 = c;
      Phase ph = Phase::one();
      op.apply(c2, ph);
      out.add(c2, a * ph.to_complex() * w);
    }
  }
  out.prune();
  return out;
}

double orbit_estimate(const PatchGeometry& geo) {
  double est = 1;
  for (int vy = 0; vy <= geo.height(); ++vy)
    for (int vx = 0; vx <= geo.width(); ++vx)
      est *= geo.vertex_group(vx, vy).size();
  return est;
}

SparseState symmetrize(const PatchGeometry& geo, const SparseState& s) {
  double est = static_cast<double>(s.terms()) * orbit_estimate(geo);
  if (est > static_cast<double>(s.term_cap())) {
    std::ostringstream os;
    os << "symmetrize: estimated orbit size " << est << " exceeds the term cap "
       << s.term_cap() << " (set QUDO_TERM_CAP to raise it)";
    throw std::runtime_error(os.str());
  }
  SparseState out = s;
  for (int vy = 0; vy <= geo.height(); ++vy)
    for (int vx = 0; vx <= geo.width(); ++vx) out = vertex_average(geo, vx, vy, out);
  return out;
}

EdgeConfig logical_representative(const PatchGeometry& geo, int m) {
  if (m != 0 && m != 1)
    throw std::invalid_argument("logical_representative: m must be 0 or 1");
  if (geo.group().kind() != GroupKind::Dihedral)
    throw std::invalid_argument("logical_representative: dihedral patch required");
  EdgeConfig c = geo.identity_config();
  if (m == 1) {
    DihedralHandles d = DihedralHandles::make(geo.group());
    const FiniteGroup& g = geo.group();
    for (int e : geo.ribbon(1)) c[e] = static_cast<std::uint8_t>(g.index(d.rs));
    for (int e : geo.ribbon(2)) c[e] = static_cast<std::uint8_t>(g.index(d.s));
    for (int e : geo.ribbon(3)) c[e] = static_cast<std::uint8_t>(g.index(d.r));
  }
  return c;
}

SparseState logical_state(const PatchGeometry& geo, int m) {
  return symmetrize(geo, SparseState::basis(logical_representative(geo, m)));
}

namespace {

/// Per-element phase table of a one-dimensional irrep, by name.
std::vector<Phase> character_table(const FiniteGroup& g, const std::string& name) {
  for (const Irrep& r : irreps(g)) {
    if (r.name() != name) continue;
    if (r.dim() != 1)
      throw std::invalid_argument("character_table: " + name + " is not 1-dim");
    std::vector<Phase> t(g.size(), Phase::one());
    for (int i = 0; i < g.size(); ++i) t[i] = r.entry(g.element(i), 0, 0).ph;
    return t;
  }
  throw std::invalid_argument("character_table: no irrep named " + name);
}

}  // namespace

Phase electric_triangle_phase(const PatchGeometry& geo, const EdgeConfig& c) {
  const FiniteGroup& g = geo.group();
  static const char* names[3] = {"1_rs", "1_s", "1_r"};
  Phase ph = Phase::one();
  for (int i = 1; i <= 3; ++i) {
    std::vector<Phase> chi = character_table(g, names[i - 1]);
    for (int e : geo.electric_path(i)) ph = ph * chi[c[e]];
  }
  return ph;
}

Phase electric_triangle(const PatchGeometry& geo, const SparseState& s) {
  if (s.terms() == 0)
    throw std::runtime_error("electric_triangle: empty state");
  const EdgeConfig* first = nullptr;
  Phase common = Phase::one();
  for (const auto& [c, a] : s.amplitudes()) {
    Phase ph = electric_triangle_phase(geo, c);
    if (!first) {
      first = &c;
      common = ph;
    } else if (ph != common) {
      throw std::runtime_error(
          "electric_triangle: state is not an eigenstate; config " +
          config_to_string(geo, *first) + " gives " + common.str() + " but " +
          config_to_string(geo, c) + " gives " + ph.str());
    }
  }
  return common;
}

std::string config_to_string(const PatchGeometry& geo, const EdgeConfig& c) {
  std::string out;
  for (int e = 0; e < geo.num_edges(); ++e) {
    if (e) out += ';';
    out += geo.group().format(geo.group().element(c[e]));
  }
  return out;
}

void export_csv(const PatchGeometry& geo, const SparseState& s, std::ostream& out) {
  std::vector<std::pair<std::string, std::complex<double>>> rows;
  rows.reserve(s.terms());
  for (const auto& [c, a] : s.amplitudes())
    rows.push_back({config_to_string(geo, c), a});
  std::sort(rows.begin(), rows.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  out << "config,re,im\n" << std::setprecision(17);
  for (const auto& [cfg, a] : rows)
    out << cfg << ',' << a.real() << ',' << a.imag() << '\n';
}

}  // namespace qudo
