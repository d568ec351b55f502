#include "matsuo/roots.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "matsuo/errors.hpp"

namespace matsuo {

namespace {

Eigen::MatrixXi cartan_matrix(RootType type, int n) {
  Eigen::MatrixXi c = 2 * Eigen::MatrixXi::Identity(n, n);
  auto link = [&](int i, int j) {
    c(i, j) = -1;
    c(j, i) = -1;
  };
  switch (type) {
    case RootType::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case RootType::D:
      // Bourbaki: chain alpha_1 .. alpha_{n-2}, with alpha_{n-1} and alpha_n
      // both attached to alpha_{n-2}.
      for (int i = 0; i + 1 < n - 1; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case RootType::E:
      // Bourbaki: alpha_1 - alpha_3 - alpha_4 - ... - alpha_n, alpha_2 - alpha_4.
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
  }
  return c;
}

bool lex_greater(const RootVector& a, const RootVector& b) {
  for (int i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

}  // namespace

bool is_positive(const RootVector& v) {
  for (int i = 0; i < v.size(); ++i) {
    if (v[i] != 0) return v[i] > 0;
  }
  return false;
}

RootSystem::RootSystem(RootType type, int rank) : type_(type), rank_(rank) {
  switch (type) {
    case RootType::A:
      if (rank < 1) throw UnsupportedType("A_n requires n >= 1");
      break;
    case RootType::D:
      if (rank < 4) throw UnsupportedType("D_n requires n >= 4");
      break;
    case RootType::E:
      if (rank < 6 || rank > 8) throw UnsupportedType("E_n requires 6 <= n <= 8");
      break;
  }
  cartan_ = cartan_matrix(type, rank);

  // Grow positive roots by adding simple roots: in a simply laced system
  // alpha + alpha_i is a root exactly when <alpha, alpha_i^vee> = -1.
  for (int i = 0; i < rank; ++i) positive_.push_back(simple_root(i));
  for (std::size_t k = 0; k < positive_.size(); ++k) {
    for (int i = 0; i < rank; ++i) {
      RootVector ai = simple_root(i);
      if (positive_[k] == ai) continue;
      if (pairing(positive_[k], ai) != -1) continue;
      RootVector next = positive_[k] + ai;
      if (std::find(positive_.begin(), positive_.end(), next) == positive_.end()) {
        positive_.push_back(next);
      }
    }
  }
  std::sort(positive_.begin(), positive_.end(), [](const RootVector& a, const RootVector& b) {
    int ha = a.sum();
    int hb = b.sum();
    if (ha != hb) return ha < hb;
    return lex_greater(a, b);
  });

  int m = num_positive();
  pairing_.resize(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) pairing_[i * m + j] = pairing(positive_[i], positive_[j]);
  }
}

RootSystem RootSystem::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw DescriptorError("empty root system type", s, 1);
  RootType type;
  switch (s[0]) {
    case 'A': type = RootType::A; break;
    case 'D': type = RootType::D; break;
    case 'E': type = RootType::E; break;
    default: throw DescriptorError("expected root system type A, D or E", s, 1);
  }
  if (s.size() < 2) throw DescriptorError("expected a rank", s, 2);
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw DescriptorError("expected a rank", s, i + 1);
    }
  }
  if (s.size() > 4) throw DescriptorError("rank too large", s, 2);
  int rank = std::stoi(s.substr(1));
  try {
    return RootSystem(type, rank);
  } catch (const UnsupportedType& e) {
    throw DescriptorError(e.what(), s, 2);
  }
}

std::string RootSystem::name() const {
  const char* letter = type_ == RootType::A ? "A" : type_ == RootType::D ? "D" : "E";
  return letter + std::to_string(rank_);
}

RootVector RootSystem::simple_root(int i) const { return RootVector::Unit(rank_, i); }

int RootSystem::pairing(const RootVector& alpha, const RootVector& beta) const {
  return alpha.dot(cartan_ * beta);
}

RootVector RootSystem::reflect(const RootVector& alpha, const RootVector& beta) const {
  return alpha - pairing(alpha, beta) * beta;
}

std::optional<std::pair<int, int>> RootSystem::signed_index_of(const RootVector& v) const {
  int sign = is_positive(v) ? 1 : -1;
  RootVector pos = sign * v;
  auto it = std::find(positive_.begin(), positive_.end(), pos);
  if (it == positive_.end()) return std::nullopt;
  return std::make_pair(static_cast<int>(it - positive_.begin()), sign);
}

std::optional<int> RootSystem::index_of(const RootVector& v) const {
  auto r = signed_index_of(v);
  if (!r) return std::nullopt;
  return r->first;
}

LatticeMap RootSystem::simple_reflection(int i) const {
  // v -> v - <v, alpha_i^vee> alpha_i; the pairing row is e_i^T C.
  LatticeMap m = LatticeMap::Identity(rank_, rank_);
  m.row(i) -= cartan_.row(i);
  return m;
}

std::vector<LatticeMap> RootSystem::diagram_automorphisms() const {
  std::vector<int> perm(rank_);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<LatticeMap> out;
  do {
    bool ok = true;
    for (int i = 0; i < rank_ && ok; ++i) {
      for (int j = 0; j < rank_ && ok; ++j) ok = cartan_(perm[i], perm[j]) == cartan_(i, j);
    }
    if (!ok) continue;
    LatticeMap m = LatticeMap::Zero(rank_, rank_);
    for (int i = 0; i < rank_; ++i) m(perm[i], i) = 1;
    out.push_back(m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::string RootSystem::format(const RootVector& v) {
  std::string s = "[";
  for (int i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

}  // namespace matsuo
