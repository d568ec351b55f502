#include "matsuo/transpo.hpp"

#include <algorithm>
#include <cctype>

#include "matsuo/errors.hpp"

namespace matsuo {

namespace {

int mod3(int v) { return ((v % 3) + 3) % 3; }

RootVector mod3(const RootVector& v) {
  RootVector r(v.size());
  for (int i = 0; i < v.size(); ++i) r[i] = mod3(v[i]);
  return r;
}

const char* eps_symbol(int eps) { return eps == 0 ? "0" : eps == 1 ? "+" : "-"; }

}  // namespace

TranspoGroup::TranspoGroup(Family family, std::string name, int n)
    : family_(family),
      name_(std::move(name)),
      conj_(static_cast<std::size_t>(n) * n),
      order_(static_cast<std::size_t>(n) * n),
      labels_(n),
      payloads_(n) {}

std::optional<int> TranspoGroup::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

std::vector<int> TranspoGroup::conjugation_permutation(int a) const {
  std::vector<int> perm(size());
  for (int b = 0; b < size(); ++b) perm[b] = conj(b, a);
  return perm;
}

TranspoGroup build_symmetric(int n) {
  if (n < 2) throw Error("S_n requires n >= 2");
  std::vector<TranspositionPoint> pts;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pts.push_back({i, j});
  }
  int m = static_cast<int>(pts.size());
  TranspoGroup g(Family::Symmetric, "S" + std::to_string(n), m);
  auto index = [&](int i, int j) {
    if (i > j) std::swap(i, j);
    // Position of {i, j} in the lexicographic enumeration above.
    return i * n - i * (i + 1) / 2 + (j - i - 1);
  };
  for (int k = 0; k < m; ++k) {
    auto [i, j] = pts[k];
    g.payloads_[k] = pts[k];
    if (n <= 9) {
      g.labels_[k] = "(" + std::to_string(i + 1) + std::to_string(j + 1) + ")";
    } else {
      g.labels_[k] = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
    }
  }
  for (int a = 0; a < m; ++a) {
    auto swap_by = [&](int x) {
      if (x == pts[a].i) return pts[a].j;
      if (x == pts[a].j) return pts[a].i;
      return x;
    };
    for (int b = 0; b < m; ++b) {
      int shared = (pts[a].i == pts[b].i) + (pts[a].i == pts[b].j) + (pts[a].j == pts[b].i) +
                   (pts[a].j == pts[b].j);
      g.conj_[a * m + b] = index(swap_by(pts[b].i), swap_by(pts[b].j));
      g.order_[a * m + b] = a == b ? 1 : shared == 0 ? 2 : 3;
    }
  }
  return g;
}

TranspoGroup build_weyl(const RootSystem& rs) {
  int m = rs.num_positive();
  TranspoGroup g(Family::Weyl, "W:" + rs.name(), m);
  g.roots_ = rs;
  for (int a = 0; a < m; ++a) {
    g.payloads_[a] = ReflectionPoint{a};
    g.labels_[a] = RootSystem::format(rs.root(a));
    for (int b = 0; b < m; ++b) {
      auto image = rs.index_of(rs.reflect(rs.root(b), rs.root(a)));
      g.conj_[a * m + b] = *image;
      g.order_[a * m + b] = a == b ? 1 : rs.pairing(a, b) == 0 ? 2 : 3;
    }
  }
  return g;
}

TranspoGroup build_affine_weyl(const RootSystem& rs) {
  int r = rs.num_positive();
  int m = 3 * r;
  TranspoGroup g(Family::AffineWeyl, "3W:" + rs.name(), m);
  g.roots_ = rs;
  auto index = [](int eps, int root) { return 3 * root + eps; };
  for (int root = 0; root < r; ++root) {
    for (int eps = 0; eps < 3; ++eps) {
      int k = index(eps, root);
      g.payloads_[k] = AffinePoint{eps, root};
      g.labels_[k] = std::string("(") + eps_symbol(eps) + "," + RootSystem::format(rs.root(root)) + ")";
    }
  }
  for (int a = 0; a < m; ++a) {
    const int eps_a = a % 3;
    const RootVector& beta = rs.root(a / 3);
    RootVector w = eps_a * beta;
    for (int b = 0; b < m; ++b) {
      const int eps_b = b % 3;
      const RootVector& alpha = rs.root(b / 3);
      RootVector v = eps_b * alpha;
      // (v, s_alpha)^(w, s_beta) = (w + s_beta v + s_beta s_alpha w, s_{s_beta alpha}).
      RootVector t = w + rs.reflect(v, beta) + rs.reflect(rs.reflect(w, alpha), beta);
      auto target = rs.index_of(rs.reflect(alpha, beta));
      const RootVector& gamma = rs.root(*target);
      RootVector tm = mod3(t);
      int found = -1;
      for (int eps = 0; eps < 3; ++eps) {
        if (mod3(RootVector(tm - eps * gamma)).isZero()) {
          found = eps;
          break;
        }
      }
      if (found < 0) throw Error("affine conjugation left the class of transpositions");
      g.conj_[a * m + b] = index(found, *target);
      int order = 3;
      if (a == b) {
        order = 1;
      } else if (a / 3 != b / 3 && rs.pairing(a / 3, b / 3) == 0) {
        order = 2;
      }
      g.order_[a * m + b] = order;
    }
  }
  return g;
}

TranspoGroup build_moufang(int n) {
  if (n < 1) throw Error("3^n:2 requires n >= 1");
  int m = 1;
  for (int i = 0; i < n; ++i) m *= 3;
  TranspoGroup g(Family::Moufang, "M3:" + std::to_string(n), m);
  auto coords = [n](int k) {
    std::vector<int> v(n);
    for (int i = n - 1; i >= 0; --i) {
      v[i] = k % 3;
      k /= 3;
    }
    return v;
  };
  auto index = [](const std::vector<int>& v) {
    int k = 0;
    for (int x : v) k = 3 * k + x;
    return k;
  };
  for (int k = 0; k < m; ++k) {
    std::vector<int> v = coords(k);
    std::string label = "(";
    for (int i = 0; i < n; ++i) label += (i ? "," : "") + std::to_string(v[i]);
    g.labels_[k] = label + ")";
    g.payloads_[k] = MoufangPoint{v};
  }
  for (int a = 0; a < m; ++a) {
    std::vector<int> w = coords(a);
    for (int b = 0; b < m; ++b) {
      std::vector<int> v = coords(b);
      std::vector<int> img(n);
      for (int i = 0; i < n; ++i) img[i] = mod3(-v[i] - w[i]);
      g.conj_[a * m + b] = index(img);
      g.order_[a * m + b] = a == b ? 1 : 3;
    }
  }
  return g;
}

TranspoGroup disjoint_union(const TranspoGroup& x, const TranspoGroup& y) {
  int nx = x.size();
  int m = nx + y.size();
  TranspoGroup g(Family::Sum, x.name() + "+" + y.name(), m);
  for (int a = 0; a < m; ++a) {
    bool ax = a < nx;
    int ai = ax ? a : a - nx;
    g.payloads_[a] = SummandPoint{ax ? 0 : 1, ai};
    g.labels_[a] = std::to_string(ax ? 0 : 1) + ":" + (ax ? x.label(ai) : y.label(ai));
    for (int b = 0; b < m; ++b) {
      bool bx = b < nx;
      int bi = bx ? b : b - nx;
      if (ax != bx) {
        g.conj_[a * m + b] = b;
        g.order_[a * m + b] = 2;
      } else if (ax) {
        g.conj_[a * m + b] = x.conj(bi, ai);
        g.order_[a * m + b] = x.order(ai, bi);
      } else {
        g.conj_[a * m + b] = nx + y.conj(bi, ai);
        g.order_[a * m + b] = y.order(ai, bi);
      }
    }
  }
  return g;
}

namespace {

TranspoGroup parse_summand(const std::string& s, std::size_t offset) {
  auto fail = [&](const std::string& what, std::size_t col) -> TranspoGroup {
    throw DescriptorError(what, s, offset + col);
  };
  auto parse_count = [&](std::size_t from) {
    if (from >= s.size()) fail("expected a number", from + 1);
    for (std::size_t i = from; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) fail("expected a digit", i + 1);
    }
    if (s.size() - from > 3) fail("number too large", from + 1);
    return std::stoi(s.substr(from));
  };
  auto parse_roots = [&](std::size_t from) {
    try {
      return RootSystem::parse(s.substr(from));
    } catch (const DescriptorError& e) {
      throw DescriptorError("bad root system type", s, offset + from + e.column());
    }
  };
  if (s.rfind("3W:", 0) == 0) return build_affine_weyl(parse_roots(3));
  if (s.rfind("W:", 0) == 0) return build_weyl(parse_roots(2));
  if (s.rfind("M3:", 0) == 0) {
    int n = parse_count(3);
    if (n < 1) fail("3^n:2 requires n >= 1", 4);
    return build_moufang(n);
  }
  if (s.rfind("S", 0) == 0) {
    int n = parse_count(1);
    if (n < 2) fail("S_n requires n >= 2", 2);
    return build_symmetric(n);
  }
  return fail("expected 'S<n>', 'W:<type>', '3W:<type>' or 'M3:<n>'", 1);
}

}  // namespace

TranspoGroup parse_group(std::string_view text) {
  std::string s(text);
  std::size_t start = 0;
  std::optional<TranspoGroup> result;
  while (true) {
    std::size_t plus = s.find('+', start);
    std::string part = s.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
    TranspoGroup g = [&] {
      try {
        return parse_summand(part, start);
      } catch (const DescriptorError& e) {
        throw DescriptorError("bad group descriptor", s, e.column());
      }
    }();
    result = result ? disjoint_union(*result, g) : g;
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return *result;
}

std::optional<std::string> check_transposition_axioms(const TranspoGroup& g) {
  int n = g.size();
  auto desc = [&](const std::string& what, int a, int b) {
    return what + " for a=" + g.label(a) + ", b=" + g.label(b);
  };
  for (int a = 0; a < n; ++a) {
    if (g.conj(a, a) != a) return desc("a^a != a", a, a);
    for (int b = 0; b < n; ++b) {
      int o = g.order(a, b);
      if (o != g.order(b, a)) return desc("order not symmetric", a, b);
      if ((o == 1) != (a == b)) return desc("order 1 off the diagonal", a, b);
      if (g.conj(g.conj(b, a), a) != b) return desc("conjugation is not an involution", a, b);
      bool fixed = g.conj(b, a) == b;
      if (fixed != (o <= 2)) return desc("b^a = b does not match o(ab) <= 2", a, b);
      if (o == 3 && g.conj(a, b) != g.conj(b, a)) return desc("a^b != b^a", a, b);
      for (int x = 0; x < n; ++x) {
        if (g.order(g.conj(x, a), g.conj(b, a)) != g.order(x, b)) {
          return desc("conjugation does not preserve orders", a, b);
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace matsuo
