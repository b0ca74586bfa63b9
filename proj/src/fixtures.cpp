#include "wreal/fixtures.hpp"

#include <algorithm>

namespace wreal {

namespace {

// Sum of alpha_i (1-based) with the given coefficients.
RootVector combo(int rank, std::initializer_list<std::pair<int, int>> terms) {
  RootVector v = RootVector::zero(rank);
  for (auto [node, coeff] : terms) v.coords[node - 1] += coeff;
  return v;
}

NodeSet nodes(std::initializer_list<int> one_based) {
  NodeSet s;
  for (int i : one_based) s.insert(i - 1);
  return s;
}

Fixture system_fixture(std::string name, std::string description, std::string note,
                       char type, int rank, NodeSet sp, std::vector<RootVector> sigma,
                       std::vector<AElement> a = {}) {
  Fixture f;
  f.name = std::move(name);
  f.description = std::move(description);
  f.data_note = std::move(note);
  f.kind = FixtureKind::SphericalSystem;
  f.original_sigma = sigma;
  SphericalSystem sys;
  sys.root_system = root_system(type, rank);
  sys.sp = sp;
  sys.sigma = std::move(sigma);
  sys.a = std::move(a);
  sys.spherically_closed = true;
  f.system = std::move(sys);
  return f;
}

// Relabels the stored system; original_sigma keeps the roots as given.
void relabel(Fixture& f, DiagramAutomorphism tau) {
  f.system = apply_epsilon(tau, *f.system);
  f.relabel = std::move(tau);
  f.labeling_reconciled = true;
}

// (SO_{4m}, N(GL_{2m})) in D_n, n = 2m.
Fixture ngl_family(int n) {
  std::vector<RootVector> sigma;
  NodeSet sp;
  for (int i = 1; i + 2 <= n - 1; i += 2) {
    sigma.push_back(combo(n, {{i, 1}, {i + 1, 2}, {i + 2, 1}}));
    sp.insert(i - 1);
  }
  sp.insert(n - 2);
  sigma.push_back(combo(n, {{n, 2}}));
  auto f = system_fixture("D" + std::to_string(n) + "-NGL" + std::to_string(n),
                          "SO(" + std::to_string(2 * n) + ") / N(GL(" + std::to_string(n) + "))",
                          "Sigma given; S^p = odd nodes below n and A = empty completed "
                          "from the classification of primitive wonderful systems",
                          'D', n, sp, std::move(sigma));
  f.primitive = true;
  f.labeling_reconciled = (n == 4);
  return f;
}

std::vector<Fixture> build_catalog() {
  std::vector<Fixture> out;
  const auto tau13 = DiagramAutomorphism{{2, 1, 0, 3}};

  {
    auto f = system_fixture("D4-SL2Sp4", "SO(8) / SL(2).Sp(4)",
                            "Sigma given in the triality labeling; relabeled by (1 3) into "
                            "the vector labeling. S^p = A = empty completed",
                            'D', 4, NodeSet{},
                            {combo(4, {{1, 2}}), combo(4, {{2, 2}}), combo(4, {{3, 1}, {4, 1}})});
    f.primitive = true;
    relabel(f, tau13);
    out.push_back(std::move(f));
  }
  {
    auto f = system_fixture("D4-Spin7", "SO(8) / Spin(7)",
                            "Sigma given in the triality labeling; relabeled by (1 3) into "
                            "the vector labeling. S^p = {2,3,4} (triality labels) and A = empty "
                            "completed",
                            'D', 4, nodes({2, 3, 4}),
                            {combo(4, {{1, 2}, {2, 2}, {3, 1}, {4, 1}})});
    f.primitive = true;
    relabel(f, tau13);
    out.push_back(std::move(f));
  }
  for (int n : {4, 6, 8}) out.push_back(ngl_family(n));

  out.push_back(system_fixture(
      "A3-fiber-product", "non-stable example under su(2,2)",
      "S^p and Sigma given; A completed so that alpha_1 owns two elements",
      'A', 3, NodeSet{}, {combo(3, {{1, 1}}), combo(3, {{2, 1}, {3, 1}})},
      {AElement{{1, 0}, nodes({1})}, AElement{{1, -1}, nodes({1})}}));

  {
    auto f = system_fixture("E6-000100", "normalizer of a nilpotent stabilizer, orbit (000100)",
                            "triple given", 'E', 6, NodeSet{},
                            {combo(6, {{1, 1}, {6, 1}}), combo(6, {{3, 1}, {5, 1}}),
                             combo(6, {{2, 1}, {4, 1}})});
    f.primitive = true;
    out.push_back(std::move(f));
  }
  {
    auto f = system_fixture(
        "E7-EVI-nilpotent", "normalizer of a nilpotent stabilizer, orbit (0100001)",
        "Sigma unknown; placeholder chosen so that the seven colors are moved by one simple "
        "root each (omega_X = sum of fundamental weights). Strictness assumed",
        'E', 7, NodeSet{},
        {combo(7, {{1, 1}, {3, 1}}), combo(7, {{2, 1}, {4, 1}}), combo(7, {{5, 1}, {6, 1}})});
    f.system->strict = true;
    f.primitive = true;
    out.push_back(std::move(f));
  }
  {
    auto f = system_fixture(
        "E8-00000010", "stabilizer of [e], orbit (00000010)",
        "S^p given; Sigma unknown, placeholder with support outside S^p. Strictness "
        "assumed",
        'E', 8, nodes({2, 3, 4, 5}),
        {combo(8, {{1, 2}, {2, 1}, {3, 2}, {4, 2}, {5, 1}}),
         combo(8, {{2, 1}, {3, 1}, {4, 2}, {5, 2}, {6, 2}}), combo(8, {{7, 2}}),
         combo(8, {{8, 2}})});
    f.system->strict = true;
    f.primitive = true;
    out.push_back(std::move(f));
  }

  {
    Fixture f;
    f.name = "A3-single-color";
    f.description = "rank-0 datum with one color, moved by alpha_1";
    f.data_note = "constructed";
    f.kind = FixtureKind::LunaVust;
    LunaVustDatum d;
    d.root_system = root_system('A', 3);
    d.colors.push_back({{}, nodes({1})});
    f.datum = std::move(d);
    out.push_back(std::move(f));
  }
  auto monoid = [](std::string name, std::string description, std::vector<Weight> gens) {
    Fixture f;
    f.name = std::move(name);
    f.description = std::move(description);
    f.data_note = "generators given";
    f.kind = FixtureKind::WeightMonoid;
    f.monoid = WeightMonoid{root_system('A', 2), std::move(gens)};
    return f;
  };
  out.push_back(monoid("A2-monoid-line-bundle", "weight monoid <w1+w2, w2> in SL(3)",
                       {Weight({1, 1}), Weight({0, 1})}));
  out.push_back(monoid("A2-monoid-fundamental", "weight monoid <w1, w2> in SL(3)",
                       {Weight({1, 0}), Weight({0, 1})}));
  return out;
}

}  // namespace

const char* to_string(FixtureKind kind) {
  switch (kind) {
    case FixtureKind::SphericalSystem: return "spherical_system";
    case FixtureKind::LunaVust: return "luna_vust";
    case FixtureKind::WeightMonoid: return "weight_monoid";
  }
  return "unknown";
}

const std::vector<Fixture>& fixture_catalog() {
  static const std::vector<Fixture> catalog = build_catalog();
  return catalog;
}

Fixture find_fixture(const std::string& name) {
  for (const auto& f : fixture_catalog())
    if (f.name == name) return f;

  auto generated = [&](const std::string& prefix) -> std::shared_ptr<const RootSystem> {
    if (name.rfind(prefix, 0) != 0) return nullptr;
    try {
      return parse_root_system(name.substr(prefix.size()));
    } catch (const Error&) {
      return nullptr;
    }
  };
  if (auto rs = generated("rank0-")) {
    Fixture f;
    f.name = name;
    f.description = "G/B, the wonderful variety of rank 0";
    f.data_note = "constructed";
    SphericalSystem sys;
    sys.root_system = rs;
    sys.spherically_closed = true;
    sys.strict = true;
    f.system = std::move(sys);
    return f;
  }
  if (auto rs = generated("GBminus-")) {
    Fixture f;
    f.name = name;
    f.description = "Luna-Vust datum of G/B^-";
    f.data_note = "constructed";
    f.kind = FixtureKind::LunaVust;
    f.datum = flag_variety_datum(rs);
    return f;
  }
  throw Error(ErrorKind::NotFound, "unknown fixture '" + name + "'");
}

}  // namespace wreal
