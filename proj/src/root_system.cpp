#include "wreal/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace wreal {

namespace {

struct DynkinShape {
  std::vector<std::pair<int, int>> edges;  // 0-based
  std::vector<int> lengths;                // squared lengths, short = 2
};

DynkinShape shape(char t, int n) {
  DynkinShape s;
  s.lengths.assign(n, 2);
  switch (t) {
    case 'A':
    case 'B':
    case 'C':
      for (int i = 0; i + 1 < n; ++i) s.edges.emplace_back(i, i + 1);
      if (t == 'B') std::fill(s.lengths.begin(), s.lengths.end() - 1, 4);
      if (t == 'C') s.lengths.back() = 4;
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) s.edges.emplace_back(i, i + 1);
      s.edges.emplace_back(n - 3, n - 1);
      break;
    case 'E':
      s.edges = {{0, 2}, {2, 3}, {3, 4}, {1, 3}};
      for (int i = 4; i + 1 < n; ++i) s.edges.emplace_back(i, i + 1);
      break;
    case 'F':
      s.edges = {{0, 1}, {1, 2}, {2, 3}};
      s.lengths = {4, 4, 2, 2};
      break;
    case 'G':
      s.edges = {{0, 1}};
      s.lengths = {2, 6};
      break;
  }
  return s;
}

bool valid_type(char t, int n) {
  switch (t) {
    case 'A': return n >= 1 && n <= 31;
    case 'B':
    case 'C': return n >= 2 && n <= 31;
    case 'D': return n >= 3 && n <= 31;
    case 'E': return n >= 6 && n <= 8;
    case 'F': return n == 4;
    case 'G': return n == 2;
  }
  return false;
}

}  // namespace

RootSystem RootSystem::build(char type_letter, int rank) {
  char t = static_cast<char>(std::toupper(static_cast<unsigned char>(type_letter)));
  if (!valid_type(t, rank)) {
    std::ostringstream msg;
    msg << "not a simple type: " << type_letter << rank;
    throw Error(ErrorKind::InvalidInput, msg.str());
  }
  if (t == 'D' && rank == 3) t = 'A';

  auto s = shape(t, rank);
  IntMatrix gram(rank);
  for (int i = 0; i < rank; ++i) gram(i, i) = s.lengths[i];
  for (auto [i, j] : s.edges) {
    int v = -std::max(s.lengths[i], s.lengths[j]) / 2;
    gram(i, j) = gram(j, i) = v;
  }
  return RootSystem(t, rank, gram);
}

RootSystem::RootSystem(char type, int rank, IntMatrix gram)
    : type_(type), rank_(rank), gram_(std::move(gram)), cartan_(rank) {
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) cartan_(i, j) = 2 * gram_(i, j) / gram_(i, i);

  // Root-string closure, height by height: for a positive root beta != alpha_i
  // with alpha_i-string beta - q alpha_i .. beta + p alpha_i, p = q - <beta, alpha_i^vee>.
  std::set<RootVector> known;
  std::vector<RootVector> layer;
  for (int i = 0; i < rank_; ++i) layer.push_back(RootVector::simple(rank_, i));
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end());
    for (const auto& b : layer) {
      known.insert(b);
      positive_.push_back(b);
    }
    std::set<RootVector> next;
    for (const auto& b : layer) {
      for (int i = 0; i < rank_; ++i) {
        if (b == RootVector::simple(rank_, i)) continue;
        int q = 0;
        RootVector down = b;
        while (true) {
          down.coords[i] -= 1;
          if (!known.count(down)) break;
          ++q;
        }
        int p = q - pairing(b, i);
        if (p > 0) {
          RootVector up = b;
          up.coords[i] += 1;
          next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
  }
}

std::string RootSystem::name() const {
  std::ostringstream out;
  out << type_ << rank_;
  return out.str();
}

bool RootSystem::is_root(const RootVector& v) const {
  if (v.rank() != rank_) return false;
  return std::find(positive_.begin(), positive_.end(), v) != positive_.end() ||
         std::find(positive_.begin(), positive_.end(), -v) != positive_.end();
}

int RootSystem::pairing(const RootVector& v, int i) const {
  int s = 0;
  for (int j = 0; j < rank_; ++j) s += v.coords[j] * cartan_(i, j);
  return s;
}

Weight RootSystem::to_weight(const RootVector& v) const {
  if (v.rank() != rank_) throw Error(ErrorKind::InvalidInput, "root rank mismatch");
  Weight w = Weight::zero(rank_);
  for (int i = 0; i < rank_; ++i) w.coords[i] = pairing(v, i);
  return w;
}

std::vector<RootVector> RootSystem::positive_roots_on(NodeSet nodes) const {
  std::vector<RootVector> out;
  for (const auto& b : positive_) {
    bool inside = true;
    for (int i = 0; i < rank_; ++i)
      if (b.coords[i] != 0 && !nodes.contains(i)) inside = false;
    if (inside) out.push_back(b);
  }
  return out;
}

NodeSet RootSystem::neighbours(int i) const {
  NodeSet s;
  for (int j = 0; j < rank_; ++j)
    if (j != i && cartan_(i, j) != 0) s.insert(j);
  return s;
}

std::shared_ptr<const RootSystem> root_system(char type_letter, int rank) {
  static std::mutex mu;
  static std::map<std::pair<char, int>, std::shared_ptr<const RootSystem>> cache;
  char t = static_cast<char>(std::toupper(static_cast<unsigned char>(type_letter)));
  std::lock_guard lock(mu);
  auto key = std::make_pair(t, rank);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto rs = std::make_shared<const RootSystem>(RootSystem::build(t, rank));
  cache.emplace(key, rs);
  return rs;
}

std::shared_ptr<const RootSystem> parse_root_system(const std::string& type_rank) {
  if (type_rank.size() < 2 || !std::isalpha(static_cast<unsigned char>(type_rank[0])))
    throw Error(ErrorKind::NotFound, "unknown type: '" + type_rank + "'");
  for (std::size_t k = 1; k < type_rank.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(type_rank[k])))
      throw Error(ErrorKind::NotFound, "unknown type: '" + type_rank + "'");
  if (type_rank.size() > 3) throw Error(ErrorKind::NotFound, "unknown type: '" + type_rank + "'");
  int rank = std::stoi(type_rank.substr(1));
  try {
    return root_system(type_rank[0], rank);
  } catch (const Error& e) {
    throw Error(ErrorKind::NotFound, "unknown type: '" + type_rank + "'");
  }
}

WeylElement weyl_identity(const RootSystem& rs) { return {IntMatrix::identity(rs.rank()), {}}; }

WeylElement simple_reflection(const RootSystem& rs, int i) {
  if (i < 0 || i >= rs.rank()) throw Error(ErrorKind::InvalidInput, "node index out of range");
  // Column j is s_i(alpha_j) = alpha_j - <alpha_j, alpha_i^vee> alpha_i.
  IntMatrix m = IntMatrix::identity(rs.rank());
  for (int j = 0; j < rs.rank(); ++j) m(i, j) -= rs.cartan()(i, j);
  return {m, {i}};
}

WeylElement compose(const WeylElement& a, const WeylElement& b) {
  WeylElement r{a.matrix * b.matrix, a.word};
  r.word.insert(r.word.end(), b.word.begin(), b.word.end());
  return r;
}

RootVector act(const WeylElement& w, const RootVector& v) {
  if (v.rank() != w.matrix.dim()) throw Error(ErrorKind::InvalidInput, "rank mismatch in act");
  return RootVector(w.matrix * v.coords);
}

WeylElement longest_element(const RootSystem& rs, NodeSet J) {
  const int n = rs.rank();
  // v starts at rho_J in fundamental-weight coordinates; every applied s_j
  // has <v, alpha_j^vee> > 0 so lengths add up. Stops at w_{0,J} rho_J,
  // which is antidominant on J.
  std::vector<int> v(n, 0);
  for (int j : J.indices()) v[j] = 1;
  std::vector<int> applied;
  while (true) {
    int pick = -1;
    for (int j : J.indices())
      if (v[j] > 0) {
        pick = j;
        break;
      }
    if (pick < 0) break;
    int c = v[pick];
    for (int k = 0; k < n; ++k) v[k] -= c * rs.cartan()(k, pick);
    applied.push_back(pick);
  }
  // v_final = s_{applied.back()} ... s_{applied.front()} rho_J.
  WeylElement w = weyl_identity(rs);
  for (int j : applied) w = compose(simple_reflection(rs, j), w);
  return w;
}

DiagramAutomorphism DiagramAutomorphism::identity(int rank) {
  DiagramAutomorphism d;
  d.perm.resize(rank);
  for (int i = 0; i < rank; ++i) d.perm[i] = i;
  return d;
}

bool DiagramAutomorphism::is_identity() const {
  for (int i = 0; i < rank(); ++i)
    if (perm[i] != i) return false;
  return true;
}

bool DiagramAutomorphism::is_involution() const {
  for (int i = 0; i < rank(); ++i)
    if (perm[perm[i]] != i) return false;
  return true;
}

bool DiagramAutomorphism::preserves(const IntMatrix& cartan) const {
  if (cartan.dim() != rank()) return false;
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < rank(); ++i)
    if (sorted[i] != i) return false;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j)
      if (cartan(i, j) != cartan(perm[i], perm[j])) return false;
  return true;
}

NodeSet DiagramAutomorphism::apply(NodeSet s) const {
  NodeSet r;
  for (int i : s.indices()) r.insert(perm[i]);
  return r;
}

RootVector DiagramAutomorphism::apply(const RootVector& v) const {
  if (v.rank() != rank()) throw Error(ErrorKind::InvalidInput, "rank mismatch");
  RootVector r = RootVector::zero(rank());
  for (int i = 0; i < rank(); ++i) r.coords[perm[i]] = v.coords[i];
  return r;
}

Weight DiagramAutomorphism::apply(const Weight& w) const {
  if (w.rank() != rank()) throw Error(ErrorKind::InvalidInput, "rank mismatch");
  Weight r = Weight::zero(rank());
  for (int i = 0; i < rank(); ++i) r.coords[perm[i]] = w.coords[i];
  return r;
}

DiagramAutomorphism DiagramAutomorphism::compose(const DiagramAutomorphism& inner) const {
  DiagramAutomorphism r;
  r.perm.resize(rank());
  for (int i = 0; i < rank(); ++i) r.perm[i] = perm[inner.perm[i]];
  return r;
}

std::string DiagramAutomorphism::to_string() const {
  std::ostringstream out;
  std::vector<bool> seen(rank(), false);
  for (int i = 0; i < rank(); ++i) {
    if (seen[i] || perm[i] == i) continue;
    out << "(";
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      out << (first ? "" : " ") << (j + 1);
      first = false;
      j = perm[j];
    }
    out << ")";
  }
  auto s = out.str();
  return s.empty() ? "id" : s;
}

DiagramAutomorphism opposition_involution(const RootSystem& rs) {
  auto w0 = longest_element(rs, NodeSet::all(rs.rank()));
  DiagramAutomorphism d;
  d.perm.resize(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) {
    auto img = -act(w0, RootVector::simple(rs.rank(), i));
    int target = -1;
    for (int j = 0; j < rs.rank(); ++j)
      if (img == RootVector::simple(rs.rank(), j)) target = j;
    if (target < 0) throw Error(ErrorKind::CorruptData, "-w0 does not permute simple roots");
    d.perm[i] = target;
  }
  return d;
}

std::vector<DiagramAutomorphism> diagram_automorphisms(const RootSystem& rs) {
  const int n = rs.rank();
  std::vector<DiagramAutomorphism> out;
  DiagramAutomorphism cur;
  cur.perm.assign(n, -1);
  std::vector<bool> used(n, false);
  // Backtracking with partial consistency on already-assigned pairs.
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (int t = 0; t < n; ++t) {
      if (used[t]) continue;
      bool ok = rs.cartan()(i, i) == rs.cartan()(t, t);
      for (int k = 0; k < i && ok; ++k)
        ok = rs.cartan()(i, k) == rs.cartan()(t, cur.perm[k]) &&
             rs.cartan()(k, i) == rs.cartan()(cur.perm[k], t);
      if (!ok) continue;
      used[t] = true;
      cur.perm[i] = t;
      self(self, i + 1);
      used[t] = false;
    }
  };
  rec(rec, 0);
  std::stable_partition(out.begin(), out.end(), [](const auto& d) { return d.is_identity(); });
  return out;
}

}  // namespace wreal
