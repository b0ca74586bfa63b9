#include "wreal/types.hpp"

#include <numeric>
#include <sstream>

namespace wreal {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid input";
    case ErrorKind::CorruptData: return "corrupt data";
    case ErrorKind::Inapplicable: return "criterion inapplicable";
    case ErrorKind::NotSelfConjugate: return "module not self-conjugate";
    case ErrorKind::IndexUnavailable: return "index data unavailable";
    case ErrorKind::SizeLimit: return "size limit";
    case ErrorKind::NotFound: return "not found";
  }
  return "unknown";
}

int RootVector::height() const { return std::accumulate(coords.begin(), coords.end(), 0); }

bool RootVector::is_zero() const {
  for (int c : coords)
    if (c != 0) return false;
  return true;
}

RootVector RootVector::operator-() const {
  RootVector r = *this;
  for (int& c : r.coords) c = -c;
  return r;
}

bool Weight::is_dominant() const {
  for (int c : coords)
    if (c < 0) return false;
  return true;
}

Weight Weight::operator+(const Weight& o) const {
  if (o.rank() != rank()) throw Error(ErrorKind::InvalidInput, "weight rank mismatch");
  Weight r = *this;
  for (int i = 0; i < rank(); ++i) r.coords[i] += o.coords[i];
  return r;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (o.n_ != n_) throw Error(ErrorKind::InvalidInput, "matrix dimension mismatch");
  IntMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      int a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < n_; ++j) r(i, j) += a * o(k, j);
    }
  return r;
}

std::vector<int> IntMatrix::operator*(const std::vector<int>& v) const {
  if (static_cast<int>(v.size()) != n_)
    throw Error(ErrorKind::InvalidInput, "vector length does not match rank");
  std::vector<int> r(n_, 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

namespace {

std::string format_combination(const std::vector<int>& coords, const char* symbol) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    int c = coords[i];
    if (c == 0) continue;
    if (c < 0)
      out << "-";
    else if (!first)
      out << "+";
    int a = c < 0 ? -c : c;
    if (a != 1) out << a;
    out << symbol << (i + 1);
    first = false;
  }
  if (first) return "0";
  return out.str();
}

}  // namespace

std::string format_root(const RootVector& v) { return format_combination(v.coords, "a"); }
std::string format_weight(const Weight& w) { return format_combination(w.coords, "w"); }

std::string format_nodes(NodeSet s) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (int i : s.indices()) {
    if (!first) out << ",";
    out << (i + 1);
    first = false;
  }
  out << "}";
  return out.str();
}

}  // namespace wreal
