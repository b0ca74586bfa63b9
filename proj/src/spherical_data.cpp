#include "wreal/spherical_data.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "linalg.hpp"

namespace wreal {

namespace {

std::vector<int> one_based(NodeSet s) {
  auto v = s.indices();
  for (int& x : v) ++x;
  return v;
}

std::string format_vector(const std::vector<int>& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ")";
  return out.str();
}

int find_root(const std::vector<RootVector>& list, const RootVector& v) {
  auto it = std::find(list.begin(), list.end(), v);
  return it == list.end() ? -1 : static_cast<int>(it - list.begin());
}

// Node i if v is the simple root alpha_i, else -1.
int simple_index(const RootVector& v) {
  int idx = -1;
  for (int i = 0; i < v.rank(); ++i) {
    if (v.coords[i] == 0) continue;
    if (v.coords[i] != 1 || idx >= 0) return -1;
    idx = i;
  }
  return idx;
}

// Node i if v = 2 alpha_i, else -1.
int doubled_simple_index(const RootVector& v) {
  int idx = -1;
  for (int i = 0; i < v.rank(); ++i) {
    if (v.coords[i] == 0) continue;
    if (v.coords[i] != 2 || idx >= 0) return -1;
    idx = i;
  }
  return idx;
}

std::vector<std::vector<int>> as_int_vectors(const std::vector<RootVector>& roots) {
  std::vector<std::vector<int>> out;
  for (const auto& r : roots) out.push_back(r.coords);
  return out;
}

std::vector<std::vector<int>> as_int_vectors(const std::vector<Weight>& weights) {
  std::vector<std::vector<int>> out;
  for (const auto& w : weights) out.push_back(w.coords);
  return out;
}

// Images of `sys`'s A-elements after eps, reindexed to sys's root order via
// pi (pi[k] = position of eps(gamma_k) in sigma).
std::vector<AElement> reindexed(const std::vector<AElement>& elems, const std::vector<int>& pi,
                                const DiagramAutomorphism* eps) {
  std::vector<AElement> out;
  for (const auto& e : elems) {
    AElement t;
    t.pairings.assign(e.pairings.size(), 0);
    for (std::size_t k = 0; k < e.pairings.size(); ++k) t.pairings[pi[k]] = e.pairings[k];
    t.owners = eps ? eps->apply(e.owners) : e.owners;
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

std::vector<std::string> validate_system(const SphericalSystem& sys) {
  std::vector<std::string> bad;
  if (!sys.root_system) return {"missing root system"};
  const int n = sys.root_system->rank();
  if (!sys.sp.subset_of(NodeSet::all(n))) bad.push_back("sp contains a node out of range");
  bool shapes_ok = true;
  for (std::size_t k = 0; k < sys.sigma.size(); ++k) {
    const auto& g = sys.sigma[k];
    std::ostringstream where;
    where << "spherical root " << (k + 1);
    if (g.rank() != n) {
      bad.push_back(where.str() + " has wrong length");
      shapes_ok = false;
      continue;
    }
    if (g.is_zero()) bad.push_back(where.str() + " is zero");
    if (std::any_of(g.coords.begin(), g.coords.end(), [](int c) { return c < 0; }))
      bad.push_back(where.str() + " has a negative coordinate");
  }
  if (shapes_ok && linalg::rank(as_int_vectors(sys.sigma)) != sys.rank())
    bad.push_back("spherical roots are not linearly independent");

  NodeSet simple_in_sigma;
  for (const auto& g : sys.sigma)
    if (g.rank() == n) {
      int i = simple_index(g);
      if (i >= 0) simple_in_sigma.insert(i);
    }
  NodeSet owned;
  for (std::size_t k = 0; k < sys.a.size(); ++k) {
    const auto& e = sys.a[k];
    std::ostringstream where;
    where << "A-element " << (k + 1);
    if (static_cast<int>(e.pairings.size()) != sys.rank())
      bad.push_back(where.str() + " has wrong number of pairings");
    if (e.owners.empty()) bad.push_back(where.str() + " has no owner");
    if (!e.owners.subset_of(simple_in_sigma))
      bad.push_back(where.str() + " is owned by a simple root outside Sigma");
    owned = owned | e.owners;
  }
  for (int i : simple_in_sigma.minus(owned).indices()) {
    std::ostringstream msg;
    msg << "simple spherical root a" << (i + 1) << " owns no A-element";
    bad.push_back(msg.str());
  }
  return bad;
}

SphericalSystem apply_epsilon(const DiagramAutomorphism& eps, const SphericalSystem& sys) {
  SphericalSystem out = sys;
  out.sp = eps.apply(sys.sp);
  for (auto& g : out.sigma) g = eps.apply(g);
  for (auto& e : out.a) e.owners = eps.apply(e.owners);
  return out;
}

bool same_system(const SphericalSystem& x, const SphericalSystem& y) {
  if (x.root_system != y.root_system && (x.root_system->name() != y.root_system->name()))
    return false;
  if (x.sp != y.sp || x.rank() != y.rank()) return false;
  std::vector<int> pi(x.rank());
  for (int k = 0; k < x.rank(); ++k) {
    pi[k] = find_root(y.sigma, x.sigma[k]);
    if (pi[k] < 0) return false;
  }
  auto xa = reindexed(x.a, pi, nullptr);
  auto ya = y.a;
  std::sort(xa.begin(), xa.end());
  std::sort(ya.begin(), ya.end());
  return xa == ya;
}

StabilityCheck is_epsilon_stable(const DiagramAutomorphism& eps, const SphericalSystem& sys) {
  StabilityCheck out;
  std::vector<int> pi(sys.rank(), -1);
  bool sigma_ok = true;
  for (int k = 0; k < sys.rank(); ++k) {
    auto img = eps.apply(sys.sigma[k]);
    pi[k] = find_root(sys.sigma, img);
    if (pi[k] < 0) {
      sigma_ok = false;
      out.witnesses.push_back({"spherical_root", sys.sigma[k].coords, img.coords,
                               format_root(sys.sigma[k]) + " -> " + format_root(img) +
                                   " is not a spherical root"});
    }
  }
  for (int i : sys.sp.indices()) {
    int j = eps(i);
    if (!sys.sp.contains(j)) {
      std::ostringstream text;
      text << "parabolic node a" << (i + 1) << " -> a" << (j + 1) << " is not in S^p";
      out.witnesses.push_back({"parabolic_node", {i + 1}, {j + 1}, text.str()});
    }
  }
  if (sigma_ok) {
    auto images = reindexed(sys.a, pi, &eps);
    std::multiset<AElement> pool(sys.a.begin(), sys.a.end());
    for (std::size_t k = 0; k < images.size(); ++k) {
      auto it = pool.find(images[k]);
      if (it != pool.end()) {
        pool.erase(it);
        continue;
      }
      std::ostringstream text;
      text << "A-element " << format_vector(sys.a[k].pairings) << " owned by "
           << format_nodes(sys.a[k].owners) << " -> " << format_vector(images[k].pairings)
           << " owned by " << format_nodes(images[k].owners) << " has no counterpart";
      out.witnesses.push_back({"a_element", one_based(sys.a[k].owners),
                               one_based(images[k].owners), text.str()});
    }
  }
  out.stable = out.witnesses.empty();
  return out;
}

NodeSet support(std::span<const RootVector> roots) {
  NodeSet s;
  for (const auto& r : roots)
    for (int i = 0; i < r.rank(); ++i)
      if (r.coords[i] != 0) s.insert(i);
  return s;
}

std::vector<OrbitDescriptor> orbit_closures(const SphericalSystem& sys) {
  const int r = sys.rank();
  if (r > kMaxOrbitRank) {
    std::ostringstream msg;
    msg << "rank " << r << " exceeds the orbit enumeration limit " << kMaxOrbitRank;
    throw Error(ErrorKind::SizeLimit, msg.str());
  }
  std::vector<OrbitDescriptor> out;
  out.reserve(std::size_t{1} << r);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << r); ++mask) {
    OrbitDescriptor d;
    d.index_set = NodeSet(mask);
    for (int k = 0; k < r; ++k)
      if (!d.index_set.contains(k)) d.sigma_sub.push_back(sys.sigma[k]);
    d.s_sub = sys.sp | support(d.sigma_sub);
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<SystemColor> colors(const SphericalSystem& sys) {
  const auto& rs = *sys.root_system;
  const int n = rs.rank();
  std::vector<SystemColor> out;

  NodeSet simple_in_sigma, doubled;
  for (const auto& g : sys.sigma) {
    if (int i = simple_index(g); i >= 0) simple_in_sigma.insert(i);
    if (int i = doubled_simple_index(g); i >= 0) doubled.insert(i);
  }

  for (const auto& e : sys.a) {
    Weight w = Weight::zero(n);
    for (int i : e.owners.indices()) w.coords[i] += 1;
    out.push_back({"a", e.owners, e.pairings, w});
  }

  for (int i : doubled.indices()) {
    std::vector<int> rho;
    for (const auto& g : sys.sigma) {
      int p = rs.pairing(g, i);
      if (p % 2 != 0) {
        std::ostringstream msg;
        msg << "<a" << (i + 1) << "^vee, " << format_root(g) << "> is odd although 2a" << (i + 1)
            << " is a spherical root";
        throw Error(ErrorKind::InvalidInput, msg.str());
      }
      rho.push_back(p / 2);
    }
    Weight w = Weight::zero(n);
    w.coords[i] = 2;
    out.push_back({"a'", NodeSet{i}, rho, w});
  }

  NodeSet rest = NodeSet::all(n).minus(sys.sp).minus(simple_in_sigma).minus(doubled);
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root_of = [&](int i) {
    while (parent[i] != i) i = parent[i];
    return i;
  };
  for (int i : rest.indices())
    for (int j : rest.indices()) {
      if (j <= i || !rs.orthogonal(i, j)) continue;
      RootVector sum = RootVector::zero(n);
      sum.coords[i] = sum.coords[j] = 1;
      if (find_root(sys.sigma, sum) >= 0) parent[root_of(j)] = root_of(i);
    }
  std::map<int, NodeSet> classes;
  for (int i : rest.indices()) classes[root_of(i)].insert(i);
  for (const auto& [rep, moved] : classes) {
    std::vector<int> rho;
    for (const auto& g : sys.sigma) rho.push_back(rs.pairing(g, rep));
    Weight w = Weight::zero(n);
    for (int i : moved.indices()) w.coords[i] = 1;
    out.push_back({"b", moved, rho, w});
  }
  return out;
}

Weight color_weight_sum(const SphericalSystem& sys) {
  Weight total = Weight::zero(sys.root_system->rank());
  for (const auto& c : colors(sys)) total = total + c.weight;
  return total;
}

// ---------------------------------------------------------------------------

std::vector<std::string> validate_datum(const LunaVustDatum& d) {
  std::vector<std::string> bad;
  if (!d.root_system) return {"missing root system"};
  const int n = d.root_system->rank();
  const int r = d.lattice_rank();
  bool shapes_ok = true;
  for (const auto& b : d.lattice_basis)
    if (b.rank() != n) {
      bad.push_back("lattice basis vector has wrong length");
      shapes_ok = false;
    }
  if (shapes_ok && linalg::rank(as_int_vectors(d.lattice_basis)) != r)
    bad.push_back("lattice basis is not linearly independent");
  for (const auto& v : d.valuation_generators) {
    if (static_cast<int>(v.size()) != r) {
      bad.push_back("valuation generator has wrong length");
      continue;
    }
    if (std::all_of(v.begin(), v.end(), [](int x) { return x == 0; }))
      bad.push_back("valuation generator is zero");
  }
  for (const auto& c : d.colors) {
    if (static_cast<int>(c.rho.size()) != r) bad.push_back("color rho has wrong length");
    if (c.moved.empty()) bad.push_back("color is moved by no simple root");
    if (!c.moved.subset_of(NodeSet::all(n))) bad.push_back("color moved set out of range");
  }
  return bad;
}

LunaVustDatum apply_epsilon_lv(const DiagramAutomorphism& eps, const LunaVustDatum& d) {
  LunaVustDatum out = d;
  for (auto& b : out.lattice_basis) b = eps.apply(b);
  for (auto& c : out.colors) c.moved = eps.apply(c.moved);
  return out;
}

namespace {

// Witness texts name image element k by its preimage when one is given.
StabilityCheck compare_data_impl(const LunaVustDatum& base, const LunaVustDatum& image,
                                 const LunaVustDatum* preimage) {
  StabilityCheck out;
  const int r = base.lattice_rank();
  auto base_vecs = as_int_vectors(base.lattice_basis);
  auto image_vecs = as_int_vectors(image.lattice_basis);

  std::vector<std::vector<int>> columns;  // image basis in base coordinates
  for (int k = 0; k < image.lattice_rank(); ++k) {
    auto c = linalg::lattice_coords(base_vecs, image_vecs[k]);
    if (!c) {
      std::vector<int> from = preimage ? preimage->lattice_basis[k].coords : std::vector<int>{};
      out.witnesses.push_back({"lattice_basis", from, image_vecs[k],
                               format_weight(image.lattice_basis[k]) + " is not in the lattice"});
      continue;
    }
    columns.push_back(*c);
  }
  for (int k = 0; k < r; ++k)
    if (!linalg::lattice_coords(image_vecs, base_vecs[k]))
      out.witnesses.push_back({"lattice_basis", base_vecs[k], {},
                               format_weight(base.lattice_basis[k]) +
                                   " is not in the transformed lattice"});
  if (!out.witnesses.empty() || image.lattice_rank() != r) {
    out.stable = false;
    return out;
  }

  // M has columns c_k; a functional with coordinates w on the image basis
  // has coordinates u = M^{-T} w on the base basis.
  std::vector<std::vector<int>> m_rows(r, std::vector<int>(r));
  for (int j = 0; j < r; ++j)
    for (int k = 0; k < r; ++k) m_rows[j][k] = columns[k][j];
  auto to_base = [&](const std::vector<int>& w) {
    if (r == 0) return linalg::RatVector{};
    auto u = linalg::solve_transposed(m_rows, w);
    if (!u) throw Error(ErrorKind::CorruptData, "lattice change of basis is singular");
    return *u;
  };

  std::vector<linalg::RatVector> base_rays, image_rays;
  for (const auto& v : base.valuation_generators) base_rays.push_back(linalg::to_rational(v));
  for (const auto& v : image.valuation_generators) image_rays.push_back(to_base(v));
  for (std::size_t k = 0; k < image_rays.size(); ++k) {
    bool found = std::any_of(base_rays.begin(), base_rays.end(), [&](const auto& g) {
      return linalg::positive_multiple(g, image_rays[k]);
    });
    if (!found) {
      std::vector<int> from = preimage ? preimage->valuation_generators[k] : std::vector<int>{};
      out.witnesses.push_back({"valuation_generator", from, image.valuation_generators[k],
                               "transformed valuation generator " +
                                   format_vector(image.valuation_generators[k]) +
                                   " spans no ray of the valuation cone"});
    }
  }
  for (std::size_t k = 0; k < base_rays.size(); ++k) {
    bool found = std::any_of(image_rays.begin(), image_rays.end(), [&](const auto& g) {
      return linalg::positive_multiple(g, base_rays[k]);
    });
    if (!found)
      out.witnesses.push_back({"valuation_generator", base.valuation_generators[k], {},
                               "valuation generator " + format_vector(base.valuation_generators[k]) +
                                   " spans no ray of the transformed cone"});
  }

  std::multiset<ColorDatum> pool(base.colors.begin(), base.colors.end());
  for (std::size_t k = 0; k < image.colors.size(); ++k) {
    const auto& c = image.colors[k];
    auto rho = linalg::to_integer(to_base(c.rho));
    ColorDatum t{rho ? *rho : std::vector<int>{}, c.moved};
    auto it = rho ? pool.find(t) : pool.end();
    if (it != pool.end()) {
      pool.erase(it);
      continue;
    }
    std::vector<int> from = preimage ? one_based(preimage->colors[k].moved) : std::vector<int>{};
    std::string text = preimage ? "color moved by " + format_nodes(preimage->colors[k].moved) + " -> "
                                : std::string("color ");
    text += "moved by " + format_nodes(c.moved) + " with rho " + format_vector(t.rho) +
            " has no matching color";
    out.witnesses.push_back({"color", from, one_based(c.moved), text});
  }
  out.stable = out.witnesses.empty();
  return out;
}

}  // namespace

StabilityCheck compare_data(const LunaVustDatum& base, const LunaVustDatum& image) {
  return compare_data_impl(base, image, nullptr);
}

StabilityCheck is_epsilon_stable_lv(const DiagramAutomorphism& eps, const LunaVustDatum& d) {
  return compare_data_impl(d, apply_epsilon_lv(eps, d), &d);
}

bool has_wonderful_cone(const LunaVustDatum& d) {
  const int r = d.lattice_rank();
  if (linalg::rank(as_int_vectors(d.lattice_basis)) != r) return false;
  if (static_cast<int>(d.valuation_generators.size()) != r) return false;
  return r == 0 || linalg::rank(d.valuation_generators) == r;
}

LunaVustDatum luna_vust_from_system(const SphericalSystem& sys) {
  LunaVustDatum d;
  d.root_system = sys.root_system;
  const int r = sys.rank();
  for (const auto& g : sys.sigma) d.lattice_basis.push_back(sys.root_system->to_weight(g));
  for (int k = 0; k < r; ++k) {
    std::vector<int> v(r, 0);
    v[k] = -1;
    d.valuation_generators.push_back(v);
  }
  for (const auto& c : colors(sys)) d.colors.push_back({c.rho, c.moved});
  return d;
}

LunaVustDatum flag_variety_datum(std::shared_ptr<const RootSystem> rs) {
  LunaVustDatum d;
  d.root_system = std::move(rs);
  for (int i = 0; i < d.root_system->rank(); ++i) d.colors.push_back({{}, NodeSet{i}});
  return d;
}

// ---------------------------------------------------------------------------

namespace {

// Whether target is a nonnegative integer combination of gens[start..],
// all vectors having nonnegative coordinates.
bool in_monoid(const std::vector<int>& target, const std::vector<std::vector<int>>& gens,
               std::size_t start, std::set<std::pair<std::vector<int>, std::size_t>>& dead) {
  if (std::all_of(target.begin(), target.end(), [](int x) { return x == 0; })) return true;
  if (dead.count({target, start})) return false;
  for (std::size_t k = start; k < gens.size(); ++k) {
    const auto& g = gens[k];
    if (std::all_of(g.begin(), g.end(), [](int x) { return x == 0; })) continue;
    bool fits = true;
    for (std::size_t i = 0; i < g.size() && fits; ++i) fits = g[i] <= target[i];
    if (!fits) continue;
    std::vector<int> rest = target;
    for (std::size_t i = 0; i < g.size(); ++i) rest[i] -= g[i];
    if (in_monoid(rest, gens, k, dead)) return true;
  }
  dead.insert({target, start});
  return false;
}

}  // namespace

std::vector<std::string> validate_monoid(const WeightMonoid& m) {
  std::vector<std::string> bad;
  if (!m.root_system) return {"missing root system"};
  const int n = m.root_system->rank();
  for (const auto& g : m.generators) {
    if (g.rank() != n) {
      bad.push_back("generator has wrong length");
      return bad;
    }
    if (!g.is_dominant()) bad.push_back("generator " + format_weight(g) + " is not dominant");
  }
  if (!bad.empty()) return bad;
  for (std::size_t k = 0; k < m.generators.size(); ++k) {
    std::vector<std::vector<int>> others;
    for (std::size_t j = 0; j < m.generators.size(); ++j)
      if (j != k) others.push_back(m.generators[j].coords);
    std::set<std::pair<std::vector<int>, std::size_t>> dead;
    if (in_monoid(m.generators[k].coords, others, 0, dead))
      bad.push_back("generator " + format_weight(m.generators[k]) +
                    " is a combination of the others (generators not minimal)");
  }
  return bad;
}

StabilityCheck is_epsilon_stable_monoid(const DiagramAutomorphism& eps, const WeightMonoid& m) {
  auto bad = validate_monoid(m);
  if (!bad.empty()) throw Error(ErrorKind::InvalidInput, "weight monoid: " + bad.front());
  StabilityCheck out;
  std::set<Weight> gens(m.generators.begin(), m.generators.end());
  for (const auto& g : m.generators) {
    auto img = eps.apply(g);
    if (!gens.count(img))
      out.witnesses.push_back({"generator", g.coords, img.coords,
                               format_weight(g) + " -> " + format_weight(img) +
                                   " is not a generator"});
  }
  out.stable = out.witnesses.empty();
  return out;
}

}  // namespace wreal
