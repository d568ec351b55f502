#include "matsuo/report.hpp"

#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <variant>

#include "matsuo/autos.hpp"
#include "matsuo/export.hpp"

#ifndef MATSUO_VERSION
#define MATSUO_VERSION "0.0.0"
#endif

namespace matsuo::report {

using nlohmann::json;

const std::vector<std::string>& catalog() {
  static const std::vector<std::string> groups{"S3",    "S4",    "S5",    "S6",    "W:A2",  "W:A3",
                                               "W:D4",  "3W:A1", "3W:A2", "3W:A3", "3W:D4", "M3:1",
                                               "M3:2",  "M3:3",  "S3+S3"};
  return groups;
}

const std::vector<std::string>& model_types() {
  static const std::vector<std::string> types{"A1", "A2", "A3", "D4"};
  return types;
}

namespace {

json header(const std::string& command) {
  json j;
  j["schema"] = kSchema;
  j["command"] = command;
  j["version"] = MATSUO_VERSION;
  return j;
}

template <ExactField F>
typename F::Element parse_eta(const F& f, const std::string& text) {
  return f.from_rational(Rational::parse(text));
}

// Runs fn on the field named by the descriptor.
template <class Fn>
auto with_field(const std::string& desc, Fn&& fn) {
  return std::visit(std::forward<Fn>(fn), parse_field(desc));
}

std::string point_list(const FischerSpace& fs, const Line& l) { return fs.format(l); }

// Near-solid flag per line index, computed on demand.
class NearSolidCache {
 public:
  explicit NearSolidCache(const FischerSpace& fs) : fs_(fs) {}
  bool operator()(int line) {
    auto it = memo_.find(line);
    if (it != memo_.end()) return it->second;
    bool v = fs_.is_near_solid(fs_.lines()[line]).near_solid;
    memo_.emplace(line, v);
    return v;
  }

 private:
  const FischerSpace& fs_;
  std::map<int, bool> memo_;
};

// --- verify ledger ---------------------------------------------------------

class Ledger {
 public:
  void add(const std::string& suite, const std::string& subject, const std::string& field, const std::string& check,
           const std::string& status, const std::string& detail = "") {
    if (status == "fail") pass_ = false;
    rows_.push_back({{"suite", suite},
                     {"subject", subject},
                     {"field", field},
                     {"check", check},
                     {"status", status},
                     {"detail", detail}});
  }
  void add(const std::string& suite, const std::string& subject, const std::string& field, const std::string& check,
           bool ok, const std::string& detail = "") {
    add(suite, subject, field, check, std::string(ok ? "pass" : "fail"), detail);
  }
  // Runs fn; a library error becomes a failed check.
  void guard(const std::string& suite, const std::string& subject, const std::string& field,
             const std::function<void()>& fn) {
    try {
      fn();
    } catch (const Error& e) {
      add(suite, subject, field, "error", std::string("fail"), e.what());
    }
  }
  bool pass() const { return pass_; }
  const json& rows() const { return rows_; }

 private:
  json rows_ = json::array();
  bool pass_ = true;
};

std::string dims_string(const std::array<int, 3>& d) {
  return std::to_string(d[0]) + "/" + std::to_string(d[1]) + "/" + std::to_string(d[2]);
}

void fusion_suite(Ledger& ledger, const std::vector<std::string>& groups, const Options& opt) {
  with_field(opt.field, [&](const auto& f) {
    const std::string fname = f.name();
    for (const auto& name : groups) {
      ledger.guard("fusion", name, fname, [&] {
        auto m = build_matsuo(parse_group(name), parse_eta(f, opt.eta), f);
        bool ok = true;
        bool sums = true;
        std::set<std::string> dims;
        std::string first;
        for (int a = 0; a < m.dim(); ++a) {
          auto rep = m.check_fusion(a);
          dims.insert(dims_string(rep.dims));
          sums = sums && rep.dims[0] + rep.dims[1] + rep.dims[2] == m.dim();
          if (!rep.pass() && ok) {
            ok = false;
            first = m.algebra().label(a) + " " + rep.violations.front().rule;
          }
        }
        std::string dim_text;
        for (const auto& d : dims) dim_text += (dim_text.empty() ? "" : ",") + d;
        ledger.add("fusion", name, fname, "fusion_law", ok, ok ? "dims " + dim_text : first);
        ledger.add("fusion", name, fname, "dimension_sum", sums, std::to_string(m.dim()));

        const auto half_eta = m.eta() * f.from_rational(Rational(1, 2));
        bool phi_ok = true;
        for (int a = 0; a < m.dim() && phi_ok; ++a) {
          for (int b = 0; b < m.dim(); ++b) {
            if (m.group().collinear(a, b) && !(m.phi(a, b) == half_eta)) {
              phi_ok = false;
              break;
            }
          }
        }
        ledger.add("fusion", name, fname, "phi_collinear", phi_ok, scalar_string(f, half_eta));
        bool connected = m.space().is_connected();
        ledger.add("fusion", name, fname, "connectivity", m.is_connected_algebra() == connected,
                   connected ? "connected" : "not connected");
      });
    }
  });
}

void equivalence_suite(Ledger& ledger, const std::vector<std::string>& groups, const Options& opt) {
  with_field(opt.field, [&](const auto& f) {
    using S = typename std::decay_t<decltype(f)>::Element;
    const std::string fname = f.name();
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
      const std::string& name = groups[gi];
      ledger.guard("equivalence", name, fname, [&] {
        auto m = build_matsuo(parse_group(name), parse_eta(f, opt.eta), f);
        const int n = m.dim();
        auto leib = derivations(m.algebra());
        auto rel = derivations_from_relations(m);
        ledger.add("equivalence", name, fname, "dimensions", leib.dim() == rel.dim(),
                   "leibniz " + std::to_string(leib.dim()) + ", relations " + std::to_string(rel.dim()));
        bool spans = span_contained(leib, rel, n, f.zero()) && span_contained(rel, leib, n, f.zero());
        ledger.add("equivalence", name, fname, "spans", spans);

        std::mt19937_64 rng(opt.seed + gi);
        int agree = 0;
        int derivs = 0;
        for (int k = 0; k < 20; ++k) {
          Matrix<S> d = m.algebra().zero_map();
          if (k < 10) {
            for (const auto& b : leib.basis) d += f.random(rng) * b;
          } else {
            for (int i = 0; i < n; ++i) {
              for (int j = 0; j < n; ++j) d(i, j) = f.random(rng);
            }
          }
          bool r_ok = satisfies_relations(m, d);
          bool l_ok = leibniz_residual(m.algebra(), d).zero();
          if (r_ok == l_ok) ++agree;
          if (l_ok) ++derivs;
        }
        ledger.add("equivalence", name, fname, "random_maps", agree == 20,
                   std::to_string(agree) + "/20 agree, " + std::to_string(derivs) + " derivations");
      });
    }
  });
}

template <ExactField F>
bool theta_orders(const ModelB<F>& b) {
  using S = typename F::Element;
  Block<S> id;
  id << b.field().one(), b.field().zero(), b.field().zero(), b.field().one();
  Block<S> t3 = b.theta() * b.theta() * b.theta();
  Block<S> t6 = t3 * t3;
  return t3 == Block<S>(-id) && t6 == id && Block<S>(b.theta() * b.theta_inverse()) == id;
}

void model_suite(Ledger& ledger, const std::vector<std::string>& types, const Options& opt) {
  with_field(opt.field, [&](const auto& f) {
    using Fd = std::decay_t<decltype(f)>;
    using S = typename Fd::Element;
    const std::string fname = f.name();
    for (const auto& type : types) {
      ledger.guard("model", type, fname, [&] {
        auto rs = RootSystem::parse(type);
        std::optional<ModelB<Fd>> b;
        try {
          b.emplace(rs, f);
        } catch (const NoSqrt3& e) {
          ledger.add("model", type, fname, "build", std::string("skip"), e.what());
          return;
        } catch (const BadCharacteristic& e) {
          ledger.add("model", type, fname, "build", std::string("skip"), e.what());
          return;
        }
        ledger.add("model", type, fname, "build", true, "dim " + std::to_string(b->dim()));
        bool form = true;
        for (int r = 0; r < rs.num_positive(); ++r) {
          Block<S> bf = b->bilinear_form(r);
          form = form && bf(0, 0) == f.from_rational(Rational(9, 2)) && bf(1, 1) == bf(0, 0) && bf(0, 1).is_zero() &&
                 bf(1, 0).is_zero();
        }
        ledger.add("model", type, fname, "bilinear_form", form, "9/2");
        ledger.add("model", type, fname, "theta_order", theta_orders(*b));
        bool orth = true;
        for (int a = 0; a < rs.num_positive(); ++a) {
          for (int c = 0; c < rs.num_positive(); ++c) {
            if (a == c || rs.pairing(a, c) != 0) continue;
            for (int i = 0; i < 3; ++i) {
              for (int j = 0; j < 3; ++j) orth = orth && b->algebra().product(3 * a + i, 3 * c + j).empty();
            }
          }
        }
        ledger.add("model", type, fname, "orthogonal_blocks", orth);
        auto m = build_matsuo(parse_group("3W:" + type), f.from_rational(Rational(1, 2)), f);
        Matrix<S> phi = model_b_iso(*b, m);
        ledger.add("model", type, fname, "isomorphism", true, "bijective and multiplicative");
        bool idem = true;
        for (int r = 0; r < rs.num_positive(); ++r) {
          Vector<S> u = phi.col(3 * r);
          idem = idem && is_zero(Vector<S>(m.multiply(u, u) - u));
        }
        ledger.add("model", type, fname, "idempotents", idem);
      });
    }
  });
}

void torus_suite(Ledger& ledger, const std::vector<std::string>& types, const Options& opt) {
  with_field(opt.field, [&](const auto& f) {
    using Fd = std::decay_t<decltype(f)>;
    using S = typename Fd::Element;
    const std::string fname = f.name();
    for (std::size_t ti = 0; ti < types.size(); ++ti) {
      const std::string& type = types[ti];
      ledger.guard("torus", type, fname, [&] {
        auto rs = RootSystem::parse(type);
        std::optional<ModelB<Fd>> b;
        try {
          b.emplace(rs, f);
        } catch (const NoSqrt3& e) {
          ledger.add("torus", type, fname, "build", std::string("skip"), e.what());
          return;
        } catch (const BadCharacteristic& e) {
          ledger.add("torus", type, fname, "build", std::string("skip"), e.what());
          return;
        }
        auto m = build_matsuo(parse_group("3W:" + type), f.from_rational(Rational(1, 2)), f);
        Matrix<S> phi = model_b_iso(*b, m);
        std::mt19937_64 rng(opt.seed + ti);
        std::vector<TorusParam<S>> samples;
        for (int k = 0; k < 25; ++k) samples.push_back(random_torus_param(f, rs.rank(), rng));

        TorusParam<S> unit;
        for (int i = 0; i < rs.rank(); ++i) unit.cs.emplace_back(f.one(), f.zero());
        Matrix<S> id = b->algebra().identity_map();
        Block<S> rot_id;
        rot_id << f.one(), f.zero(), f.zero(), f.one();
        ledger.add("torus", type, fname, "identity", torus_automorphism(*b, unit) == id);

        int autos = 0;
        int theta = 0;
        int pushed = 0;
        int composed = 0;
        int generic = 0;
        bool generic_ok = true;
        for (std::size_t k = 0; k < samples.size(); ++k) {
          Matrix<S> t = torus_automorphism(*b, samples[k]);
          if (is_automorphism(b->algebra(), t)) ++autos;
          if (theta_commutes(*b, samples[k])) ++theta;
          Matrix<S> g = pushforward(phi, t);
          if (is_automorphism(m.algebra(), g) && fixes_vertical_sums(m, g)) ++pushed;
          const auto& next = samples[(k + 1) % samples.size()];
          if (Matrix<S>(t * torus_automorphism(*b, next)) == torus_automorphism(*b, compose(samples[k], next))) {
            ++composed;
          }
          bool is_generic = true;
          for (const auto& blk : torus_blocks(rs, f, samples[k])) {
            is_generic = is_generic && !(blk == rot_id);
          }
          if (is_generic) {
            ++generic;
            generic_ok = generic_ok && fixed_dimension(t, f.one()) == rs.num_positive();
          }
        }
        auto count = [](int k) { return std::to_string(k) + "/25"; };
        ledger.add("torus", type, fname, "automorphisms", autos == 25, count(autos));
        ledger.add("torus", type, fname, "composition", composed == 25, count(composed));
        ledger.add("torus", type, fname, "theta_commutes", theta == 25, count(theta));
        ledger.add("torus", type, fname, "pushforward", pushed == 25, count(pushed));
        if (generic == 0) {
          ledger.add("torus", type, fname, "generic_fixed_space", std::string("skip"), "no generic sample");
        } else {
          ledger.add("torus", type, fname, "generic_fixed_space", generic_ok,
                     std::to_string(generic) + " generic samples, dim " + std::to_string(rs.num_positive()));
        }
        bool guarded = false;
        try {
          TorusParam<S> bad = unit;
          bad.cs[0] = {f.from_int(2), f.one()};
          torus_automorphism(*b, bad);
        } catch (const CircleRelationViolated&) {
          guarded = true;
        }
        ledger.add("torus", type, fname, "circle_guard", guarded);
        ledger.add("torus", type, fname, "rank", true, std::to_string(rs.rank()));
        if (!f.sqrt(-f.one())) {
          ledger.add("torus", type, fname, "characters", std::string("skip"), "-1 is not a square");
        } else {
          auto rep = character_additivity_check(*b, samples);
          ledger.add("torus", type, fname, "characters", rep.pass(),
                     rep.pass() ? "" : rep.failures.empty() ? "" : rep.failures.front());
        }
      });
    }
  });
}

void section_suite(Ledger& ledger, const std::vector<std::string>& types, const Options& opt) {
  with_field(opt.field, [&](const auto& f) {
    using S = typename std::decay_t<decltype(f)>::Element;
    const std::string fname = f.name();
    for (std::size_t ti = 0; ti < types.size(); ++ti) {
      const std::string& type = types[ti];
      ledger.guard("section", type, fname, [&] {
        auto rs = RootSystem::parse(type);
        auto m = build_matsuo(parse_group("3W:" + type), f.from_rational(Rational(1, 2)), f);
        auto diagrams = rs.diagram_automorphisms();
        for (const auto& d : diagrams) root_automorphism(m, d);
        ledger.add("section", type, fname, "diagram", true, std::to_string(diagrams.size()) + " symmetries");
        std::vector<LatticeMap> gens;
        for (int i = 0; i < rs.rank(); ++i) gens.push_back(rs.simple_reflection(i));
        for (const auto& s : gens) root_automorphism(m, s);
        ledger.add("section", type, fname, "weyl", true, std::to_string(gens.size()) + " simple reflections");
        root_automorphism(m, LatticeMap(-LatticeMap::Identity(rs.rank(), rs.rank())));
        ledger.add("section", type, fname, "minus_identity", true);

        std::mt19937_64 rng(opt.seed + ti);
        std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
        bool hom = true;
        for (int k = 0; k < 10; ++k) {
          LatticeMap a = LatticeMap::Identity(rs.rank(), rs.rank());
          LatticeMap c = a;
          for (int w = 0; w < 4; ++w) a = a * gens[pick(rng)];
          for (int w = 0; w < 4; ++w) c = c * gens[pick(rng)];
          Matrix<S> ga = root_automorphism(m, a);
          Matrix<S> gc = root_automorphism(m, c);
          hom = hom && Matrix<S>(ga * gc) == root_automorphism(m, LatticeMap(a * c));
        }
        ledger.add("section", type, fname, "composition", hom, "10 Weyl words");
        bool rejected = false;
        try {
          root_automorphism(m, LatticeMap(2 * LatticeMap::Identity(rs.rank(), rs.rank())));
        } catch (const NotRootAutomorphism&) {
          rejected = true;
        }
        ledger.add("section", type, fname, "negative_control", rejected);
      });
    }
  });
}

// Frozen regression value: dim Der M(3^3:2) over F3.
constexpr int kCharThreeDim = 52;

void char3_suite(Ledger& ledger) {
  ledger.guard("char3", "M3:3", "Fp:3", [&] {
    PrimeField f3(3);
    auto m = build_matsuo(parse_group("M3:3"), f3.from_rational(Rational(1, 2)), f3);
    int dim = derivations(m.algebra()).dim();
    ledger.add("char3", "M3:3", "Fp:3", "positive", dim > 0, std::to_string(dim));
    ledger.add("char3", "M3:3", "Fp:3", "frozen", dim == kCharThreeDim, std::to_string(kCharThreeDim));
    PrimeField f7(7);
    auto m7 = build_matsuo(parse_group("M3:3"), f7.from_rational(Rational(1, 2)), f7);
    int dim7 = derivations(m7.algebra()).dim();
    ledger.add("char3", "M3:3", "Fp:7", "contrast", dim7 == 0, std::to_string(dim7));
  });
}

std::string csv_cell(const json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.is_null() ? "" : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_table(const json& rows) {
  std::ostringstream out;
  if (rows.empty()) return "";
  std::vector<std::string> keys;
  for (const auto& [k, v] : rows.front().items()) keys.push_back(k);
  for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << keys[i];
  out << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << csv_cell(row.value(keys[i], json()));
    out << "\n";
  }
  return out.str();
}

}  // namespace

Result build(const std::string& group, const Options& opt) {
  TranspoGroup g = parse_group(group);
  auto fs = std::make_shared<const FischerSpace>(g);
  json j = header("build");
  j["group"] = g.name();
  j["points"] = g.size();
  j["lines"] = fs->lines().size();
  int dual = 0;
  int affine = 0;
  for (const auto& [pts, type] : fs->planes()) {
    if (type == PlaneType::DualAffine2) ++dual;
    if (type == PlaneType::Affine3) ++affine;
  }
  j["dual_affine_planes"] = dual;
  j["affine_planes"] = affine;
  j["components"] = fs->components().size();
  j["partial_linear_space"] = fs->is_partial_linear_space();
  if (g.family() == Family::AffineWeyl) {
    int vertical = 0;
    for (const auto& l : fs->lines()) vertical += fs->line_orbit_class(l) == LineOrbit::Vertical;
    j["vertical_lines"] = vertical;
  }
  with_field(opt.field, [&](const auto& f) {
    MatsuoAlgebra m(fs, parse_eta(f, opt.eta), f);
    j["field"] = f.name();
    j["eta"] = scalar_string(f, m.eta());
    j["dim"] = m.dim();
    try {
      j["axis_dims"] = m.eigendecompose(0).dims();
    } catch (const NotSemisimple&) {
      j["axis_dims"] = nullptr;
    }
    if (opt.constants) j["structure_constants"] = export_structure_constants(m.algebra(), scalar_string(f, m.eta()));
  });
  return {j, true};
}

Result derive(const std::string& group, const std::string& system, const Options& opt) {
  if (system != "leibniz" && system != "r" && system != "both") {
    throw DescriptorError("unknown system, expected leibniz, r or both", system, 1);
  }
  TranspoGroup g = parse_group(group);
  auto fs = std::make_shared<const FischerSpace>(g);
  json j = header("derive");
  j["group"] = g.name();
  j["system"] = system;
  bool pass = true;
  with_field(opt.field, [&](const auto& f) {
    using S = typename std::decay_t<decltype(f)>::Element;
    MatsuoAlgebra m(fs, parse_eta(f, opt.eta), f);
    j["field"] = f.name();
    j["eta"] = scalar_string(f, m.eta());
    std::optional<DerBasis<S>> leib;
    std::optional<DerBasis<S>> rel;
    if (system != "r") leib = derivations(m.algebra());
    if (system != "leibniz") rel = derivations_from_relations(m);
    const DerBasis<S>& main = leib ? *leib : *rel;
    j["dim"] = main.dim();
    j["unknowns"] = main.unknowns;
    j["rank"] = main.rank;
    if (leib && rel) {
      j["leibniz_dim"] = leib->dim();
      j["r_dim"] = rel->dim();
      bool spans = span_contained(*leib, *rel, m.dim(), f.zero()) && span_contained(*rel, *leib, m.dim(), f.zero());
      j["spans_agree"] = spans;
      pass = spans && leib->dim() == rel->dim();
    }
    json basis = json::array();
    for (const auto& d : main.basis) basis.push_back(export_map(m.algebra(), d));
    j["basis"] = basis;
    NearSolidCache near_solid(*fs);
    json vanish = json::array();
    int off = 0;
    for (const auto& e : vanishing_report(m, main)) {
      bool ns = near_solid(e.line);
      if (!e.forced_zero && !ns) ++off;
      vanish.push_back({{"a", m.algebra().label(e.a)},
                        {"b", m.algebra().label(e.b)},
                        {"line", fs->format(fs->lines()[e.line])},
                        {"near_solid", ns},
                        {"forced_zero", e.forced_zero}});
    }
    j["vanishing_report"] = vanish;
    j["nonzero_off_near_solid"] = off;
  });
  j["pass"] = pass;
  return {j, pass};
}

Result classify(const std::string& group) {
  TranspoGroup g = parse_group(group);
  FischerSpace fs(g);
  json j = header("classify");
  j["group"] = g.name();
  const bool affine = g.family() == Family::AffineWeyl;
  json lines = json::array();
  int near = 0;
  int vertical = 0;
  bool matches_vertical = true;
  std::vector<int> cover(g.size(), 0);
  for (const auto& l : fs.lines()) {
    NearSolidResult r = fs.is_near_solid(l);
    json row;
    row["line"] = point_list(fs, l);
    if (affine) {
      bool v = fs.line_orbit_class(l) == LineOrbit::Vertical;
      row["orbit_class"] = to_string(fs.line_orbit_class(l));
      vertical += v;
      matches_vertical = matches_vertical && v == r.near_solid;
    } else {
      row["orbit_class"] = nullptr;
    }
    row["near_solid"] = r.near_solid;
    row["witness"] = r.witness ? json(fs.format(*r.witness)) : json(nullptr);
    row["witness_type"] = r.witness_type ? json(to_string(*r.witness_type)) : json(nullptr);
    if (r.near_solid) {
      ++near;
      for (int p : l) ++cover[p];
    }
    lines.push_back(row);
  }
  j["lines"] = lines;
  j["line_count"] = fs.lines().size();
  j["near_solid"] = near;
  bool spread = true;
  for (int c : cover) spread = spread && c == 1;
  j["spread"] = spread;
  if (affine) {
    j["vertical"] = vertical;
    j["near_solid_is_vertical"] = matches_vertical;
  }
  return {j, true};
}

namespace {

Result run_suites(const std::string& name, const std::set<std::string>& parts, const Options& opt) {
  std::vector<std::string> groups = opt.group ? std::vector<std::string>{*opt.group} : catalog();
  std::vector<std::string> types = opt.type ? std::vector<std::string>{*opt.type} : model_types();
  // Bad descriptors are usage errors, not failed checks.
  for (const auto& t : types) RootSystem::parse(t);
  for (const auto& g : groups) parse_group(g);
  parse_field(opt.field);
  Ledger ledger;
  if (parts.count("fusion")) fusion_suite(ledger, groups, opt);
  if (parts.count("equivalence")) equivalence_suite(ledger, groups, opt);
  if (parts.count("model")) model_suite(ledger, types, opt);
  if (parts.count("torus")) torus_suite(ledger, types, opt);
  if (parts.count("section")) section_suite(ledger, types, opt);
  if (parts.count("char3")) char3_suite(ledger);
  json j = header("verify");
  j["suite"] = name;
  j["field"] = field_name(parse_field(opt.field));
  j["seed"] = opt.seed;
  j["checks"] = ledger.rows();
  int failed = 0;
  int skipped = 0;
  for (const auto& r : ledger.rows()) {
    failed += r["status"] == "fail";
    skipped += r["status"] == "skip";
  }
  j["failed"] = failed;
  j["skipped"] = skipped;
  j["pass"] = ledger.pass();
  return {j, ledger.pass()};
}

}  // namespace

Result verify(const std::string& suite, const Options& opt) {
  static const std::set<std::string> suites{"fusion", "equivalence", "model", "torus", "section", "char3"};
  if (suite == "all") return run_suites(suite, suites, opt);
  if (!suites.count(suite)) {
    throw DescriptorError("unknown suite, expected all, fusion, equivalence, model, torus, section or char3",
                          suite, 1);
  }
  return run_suites(suite, {suite}, opt);
}

Result verify_model(const std::string& type, const Options& opt) {
  Options o = opt;
  o.type = type;
  return run_suites("model-" + type, {"model", "torus", "section"}, o);
}

std::string to_csv(const json& report) {
  const std::string cmd = report.value("command", "");
  if (cmd == "classify") return csv_table(report["lines"]);
  if (cmd == "derive") return csv_table(report["vanishing_report"]);
  if (cmd == "verify") return csv_table(report["checks"]);
  json rows = json::array();
  for (const auto& [k, v] : report.items()) {
    if (k == "structure_constants") continue;
    rows.push_back({{"key", k}, {"value", v.is_string() ? v : json(v.dump())}});
  }
  return csv_table(rows);
}

std::string to_text(const json& report) {
  std::ostringstream out;
  for (const auto& [k, v] : report.items()) {
    if (v.is_array() && !v.empty() && v.front().is_object()) {
      out << k << ":\n";
      for (const auto& row : v) {
        out << " ";
        for (const auto& [rk, rv] : row.items()) out << " " << rk << "=" << (rv.is_string() ? rv.get<std::string>() : rv.dump());
        out << "\n";
      }
    } else if (k == "basis" || k == "structure_constants") {
      out << k << ": " << v.size() << " entries (use --json)\n";
    } else {
      out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
  return out.str();
}

}  // namespace matsuo::report
