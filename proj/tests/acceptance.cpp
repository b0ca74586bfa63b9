// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any
// criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "random_data.hpp"
#include "report.hpp"
#include "weyl_oracle.hpp"
#include "wreal/criteria.hpp"

using namespace wreal;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

const SatakeDiagram& form(char t, int n, const char* id) {
  return SatakeCatalog::builtin().find(*root_system(t, n), id);
}

SphericalSystem sys_of(const std::string& name) { return *find_fixture(name).system; }

std::vector<std::pair<char, int>> types_up_to(int max_rank) {
  std::vector<std::pair<char, int>> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back({'A', n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({'B', n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({'C', n});
  for (int n = 4; n <= max_rank; ++n) out.push_back({'D', n});
  for (int n = 6; n <= std::min(8, max_rank); ++n) out.push_back({'E', n});
  if (max_rank >= 4) out.push_back({'F', 4});
  out.push_back({'G', 2});
  return out;
}

bool has_witness(const Verdict& v, const std::string& text) {
  for (const auto& r : v.reasons)
    for (const auto& w : r.witnesses)
      if (w.text == text) return true;
  return false;
}

Outcome ac1() {
  Outcome o;
  auto report = scan_d_families(3);
  const std::set<std::string> families = {"D4-SL2Sp4", "D4-Spin7", "D4-NGL4", "D6-NGL6"};
  int failures = 0, family_rows = 0;
  for (const auto& row : report.rows) {
    const bool family = families.count(row.fixture) > 0;
    if (family) ++family_rows;
    const auto& rs = *find_fixture(row.fixture).system->root_system;
    const auto& sd = SatakeCatalog::builtin().find(rs, row.form);
    const bool expect_unstable = family && is_odd_signature(sd);
    if (!row.stable) ++failures;
    o.require(row.stable != expect_unstable, row.fixture + " / " + row.form + " has the wrong verdict");
    if (family)
      o.require(row.labeling_reconciled == (rs.rank() == 4),
                row.fixture + " has the wrong labeling flag");
  }
  o.require(report.matches_expected(), "scan report does not match the expected set");
  o.require(family_rows == 3 * 6 + 8, "unexpected number of family rows");
  if (o.pass) o.detail = std::to_string(failures) + " failures, all on p,q odd";
  return o;
}

Outcome ac2() {
  Outcome o;
  int checked = 0;
  for (auto [t, n] : types_up_to(8)) {
    auto rs = root_system(t, n);
    auto forms = SatakeCatalog::builtin().forms(*rs);
    o.require(!forms.empty(), rs->name() + " has no catalog entries");
    bool split = false, compact = false;
    for (const auto& sd : forms) {
      auto eps = epsilon_sigma(sd);
      o.require(eps.is_involution(), sd.name + " epsilon is not an involution");
      o.require(eps.preserves(rs->cartan()), sd.name + " epsilon is not a diagram automorphism");
      if (sd.is_split()) {
        split = true;
        o.require(eps.is_identity(), sd.name + " is split but epsilon is not the identity");
      }
      if (sd.is_compact()) {
        compact = true;
        o.require(eps == opposition_involution(*rs), sd.name + " is compact but epsilon is not -w_0");
      }
      ++checked;
    }
    o.require(split && compact, rs->name() + " lacks a split or compact form");
  }
  if (o.pass) o.detail = std::to_string(checked) + " forms";
  return o;
}

Outcome ac3() {
  Outcome o;
  int subsets = 0;
  for (auto [t, n] : types_up_to(4)) {
    auto rs = root_system(t, n);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      NodeSet J(mask);
      auto ref = oracle::longest(rs->cartan(), J);
      auto w = longest_element(*rs, J);
      bool same = true;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) same = same && w.matrix(i, j) == ref.matrix[i][j];
      const std::string where = rs->name() + " J=" + format_nodes(J);
      o.require(same, where + ": matrices differ");
      o.require(w.length() == ref.length, where + ": lengths differ");
      o.require(w.length() == static_cast<int>(oracle::positive_roots(rs->cartan(), J).size()),
                where + ": length is not the positive-root count");
      ++subsets;
    }
  }
  if (o.pass) o.detail = std::to_string(subsets) + " (type, J) pairs";
  return o;
}

Outcome ac4() {
  Outcome o;
  auto v = real_structure_exists(sys_of("A3-fiber-product"), form('A', 3, "su(2,2)"));
  o.require(v.answer == Answer::No, "verdict is not NO");
  o.require(has_witness(v, "a1 -> a3 is not a spherical root"), "witness a1 -> a3 missing");
  if (o.pass) o.detail = "NO, witness a1 -> a3";
  return o;
}

Outcome ac5() {
  Outcome o;
  auto v = conjugate_affine(*find_fixture("A2-monoid-line-bundle").monoid, form('A', 2, "compact"));
  o.require(v.answer == Answer::No, "verdict is not NO");
  o.require(has_witness(v, "w2 -> w1 is not a generator"), "witness w2 -> w1 missing");
  if (o.pass) o.detail = "NO, witness w2 -> w1";
  return o;
}

Outcome ac6() {
  Outcome o;
  auto sys = sys_of("E7-EVI-nilpotent");
  const auto& evi = form('E', 7, "EVI");
  o.require(omega_x(sys) == Weight(std::vector<int>(7, 1)), "omega_X is not the sum of fundamental weights");
  o.require(cartan_index(evi, omega_x(sys)) == -1, "Cartan index is not -1");
  auto v = cartan_index_obstruction(sys, evi);
  o.require(v.answer == Answer::No, "obstruction verdict is not NO");
  if (o.pass) o.detail = "index -1, no real points";
  return o;
}

Outcome ac7() {
  Outcome o;
  auto forms = real_form_catalog('E', 8);
  o.require(forms.size() == 3, "E8 does not have three forms");
  auto sys = sys_of("E8-00000010");
  for (const auto& sd : forms) {
    o.require(epsilon_sigma(sd).is_identity(), sd.name + ": epsilon is not the identity");
    for (const char* name : {"E8-00000010", "rank0-E8"})
      o.require(real_structure_exists(sys_of(name), sd).answer == Answer::Yes,
                std::string(name) + " / " + sd.name + " is not YES");
    o.require(conjugate_general(*find_fixture("GBminus-E8").datum, sd).answer == Answer::Yes,
              "GBminus-E8 / " + sd.name + " is not YES");
    o.require(cartan_index(sd, omega_x(sys)) == 1, sd.name + ": index is not +1");
    o.require(cartan_index_obstruction(sys, sd).answer == Answer::Undetermined,
              sd.name + ": unexpected obstruction");
  }
  for (const char* id : {"EVIII", "EIX"})
    o.require(guaranteed_real_points(sys, form('E', 8, id)).answer == Answer::Yes,
              std::string(id) + ": real points not guaranteed");
  if (o.pass) o.detail = "epsilon = id, YES, index +1, EVIII/EIX guaranteed";
  return o;
}

Outcome ac8() {
  Outcome o;
  auto sys = sys_of("E6-000100");
  for (const auto& sd : real_form_catalog('E', 6))
    o.require(real_structure_exists(sys, sd).answer == Answer::Yes, sd.name + " is not YES");
  InputData input = input_from_fixture(find_fixture("E6-000100"));
  for (const char* id : {"compact", "EIII", "EIV"}) {
    const auto& sd = form('E', 6, id);
    o.require(guaranteed_real_points(sys, sd).answer == Answer::No, std::string(id) + ": guaranteed is not NO");
    auto filter = real_point_orbit_filter(sys, sd);
    o.require(filter.rows.front().orbit.index_set.empty() && filter.rows.front().candidate(),
              std::string(id) + ": open orbit is not a candidate");
    o.require(filter.verdict.answer == Answer::Undetermined, std::string(id) + ": filter claims more than necessity");
    auto rep = report::orbits(SatakeCatalog::builtin(), input, id);
    o.require(rep.contains("caveat") && rep["caveat"].get<std::string>().find("necessary") != std::string::npos,
              std::string(id) + ": report lacks the necessary-only caveat");
  }
  if (o.pass) o.detail = "YES for all forms, open orbit candidate with caveat";
  return o;
}

Outcome ac9() {
  Outcome o;
  std::mt19937 gen(20261019);
  int pairs = 0;
  for (; pairs < 1000; ++pairs) {
    auto rs = testdata::random_root_system(gen);
    auto d = testdata::random_datum(gen, rs);
    auto eps = testdata::random_automorphism(gen, *rs);
    o.require(wonderfulness_preserved(d, eps), "wonderfulness counterexample on " + rs->name());
  }
  int systems = 0;
  for (int trial = 0; trial < 500; ++trial) {
    auto rs = testdata::random_root_system(gen);
    auto sys = testdata::random_system(gen, rs);
    for (const auto& sd : SatakeCatalog::builtin().forms(*rs)) {
      auto eps = epsilon_sigma(sd);
      o.require(same_system(apply_epsilon(eps, apply_epsilon(eps, sys)), sys),
                "apply_epsilon is not involutive on " + rs->name() + " / " + sd.name);
      ++systems;
    }
  }
  int flag = 0;
  for (const auto& sd : SatakeCatalog::builtin().all()) {
    auto d = find_fixture("GBminus-" + sd.root_system->name()).datum;
    o.require(conjugate_general(*d, sd).answer == Answer::Yes, "G/B^- unstable under " + sd.name);
    ++flag;
  }
  if (o.pass)
    o.detail = std::to_string(pairs) + " wonderful pairs, " + std::to_string(systems) +
               " involution checks, " + std::to_string(flag) + " flag checks";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    double budget_s;  // 0 means no time bound
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"AC1", 5, ac1},  {"AC2", 1, ac2}, {"AC3", 30, ac3}, {"AC4", 0, ac4}, {"AC5", 0, ac5},
      {"AC6", 0, ac6},  {"AC7", 0, ac7}, {"AC8", 0, ac8},  {"AC9", 10, ac9},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0 && secs >= c.budget_s) {
      if (o.pass) o.detail = "over time budget";
      o.pass = false;
    }
    if (!o.pass) ++failed;
    std::printf("%s %s  %.3f s  %s\n", c.id, o.pass ? "PASS" : "FAIL", secs, o.detail.c_str());
  }
  return failed == 0 ? 0 : 1;
}
