// Acceptance run: one PASS/FAIL line per criterion. Known failures are listed
// in kExpected with the subject that fails; the process exits 0 only when the
// failing subjects are exactly those.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "matsuo/autos.hpp"
#include "matsuo/deriv.hpp"
#include "matsuo/report.hpp"

using namespace matsuo;

namespace {

using Clock = std::chrono::steady_clock;

// Wall-clock limits in seconds.
constexpr double kSymmetricLimit = 5.0;
constexpr double kAffineLimit = 60.0;
constexpr double kZeroLimit = 30.0;
constexpr double kNearSolidLimit = 120.0;
constexpr int kCharThree = 52;

// criterion -> subjects known to fail, with the reason.
const std::map<int, std::map<std::string, std::string>> kExpected{
    {1, {{"3W:A2", "Der has dimension 8 (sl_3 on AG(2,3)), not 2"}}},
    {8, {{"3W:A2", "dim Der = 8 exceeds the torus rank 2"}}},
};

struct Outcome {
  std::set<std::string> failed;
  std::vector<std::string> notes;
  void check(bool ok, const std::string& subject, const std::string& note) {
    if (!ok) failed.insert(subject);
    notes.push_back((ok ? "  ok    " : "  FAIL  ") + subject + ": " + note);
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fixed(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

const Rational kHalf(1, 2);

// Derivation bases over Q, shared by criteria 1, 4 and 8.
std::map<std::string, DerBasis<Rational>> g_der_q;

MatsuoAlgebra<RationalField> matsuo_q(const std::string& name) {
  RationalField q;
  return build_matsuo(parse_group(name), kHalf, q);
}

void criterion1(Outcome& out) {
  struct Case {
    std::string group;
    int expected;
    double limit;
  };
  const std::vector<Case> cases{{"S3", 1, kSymmetricLimit},    {"S4", 3, kSymmetricLimit},
                                {"S5", 6, kSymmetricLimit},    {"3W:A1", 1, kAffineLimit},
                                {"3W:A2", 2, kAffineLimit},    {"3W:A3", 3, kAffineLimit},
                                {"3W:D4", 4, kAffineLimit},    {"W:D4", 0, kZeroLimit},
                                {"M3:3", 0, kZeroLimit}};
  RationalField q;
  for (const auto& c : cases) {
    auto t0 = Clock::now();
    auto m = matsuo_q(c.group);
    auto leib = derivations(m.algebra());
    auto rel = derivations_from_relations(m);
    bool spans = span_contained(leib, rel, m.dim(), q.zero()) && span_contained(rel, leib, m.dim(), q.zero());
    double s = seconds_since(t0);
    g_der_q[c.group] = leib;
    bool ok = leib.dim() == c.expected && rel.dim() == c.expected && spans && s < c.limit;
    std::string note = "leibniz " + std::to_string(leib.dim()) + ", relations " + std::to_string(rel.dim()) +
                       ", expected " + std::to_string(c.expected) + (spans ? ", spans agree" : ", spans differ") +
                       ", " + fixed(s) + " (limit " + fixed(c.limit) + ")";
    if (c.group[0] == 'S') {
      int n = std::stoi(c.group.substr(1));
      ok = ok && (n - 1) * (n - 2) / 2 == c.expected;
      note += ", (n-1)(n-2)/2 = " + std::to_string((n - 1) * (n - 2) / 2);
    }
    out.check(ok, c.group, note);
  }
}

void from_ledger(Outcome& out, const report::Result& r) {
  std::map<std::string, std::pair<int, int>> tally;  // "suite subject over field" -> (checks, failures)
  for (const auto& row : r.json["checks"]) {
    std::string key = row["suite"].get<std::string>() + " " + row["subject"].get<std::string>() + " over " + row["field"].get<std::string>();
    auto& t = tally[key];
    ++t.first;
    if (row["status"] == "fail") {
      ++t.second;
      out.notes.push_back("  FAIL  " + key + ": " + row["check"].get<std::string>() + " " +
                          row["detail"].get<std::string>());
      out.failed.insert(row["subject"].get<std::string>());
    }
  }
  for (const auto& [key, t] : tally) {
    if (t.second == 0) out.notes.push_back("  ok    " + key + ": " + std::to_string(t.first) + " checks");
  }
}

report::Options options(const std::string& field) {
  report::Options o;
  o.field = field;
  return o;
}

void criterion2(Outcome& out) {
  for (const char* field : {"Q", "Fp:7"}) from_ledger(out, report::verify("equivalence", options(field)));
}

void criterion3(Outcome& out) {
  for (const char* field : {"Q", "Fp:7"}) from_ledger(out, report::verify("fusion", options(field)));
}

bool shares_root(const TranspoGroup& g, const Line& l) {
  int r = std::get<AffinePoint>(g.payload(l[0])).root;
  for (int p : l) {
    if (std::get<AffinePoint>(g.payload(p)).root != r) return false;
  }
  return true;
}

void criterion4(Outcome& out) {
  auto t0 = Clock::now();
  {
    FischerSpace fs(parse_group("S5"));
    int k = 0;
    for (const auto& l : fs.lines()) k += fs.is_near_solid(l).near_solid;
    out.check(k == 10 && fs.lines().size() == 10u, "S5", std::to_string(k) + "/10 near-solid");
  }
  for (const char* name : {"W:D4", "M3:3"}) {
    FischerSpace fs(parse_group(name));
    int k = 0;
    for (const auto& l : fs.lines()) k += fs.is_near_solid(l).near_solid;
    out.check(k == 0, name, std::to_string(k) + "/" + std::to_string(fs.lines().size()) + " near-solid");
  }
  // In a 3-generated space every line is near-solid with no witness.
  for (const char* name : {"S3", "S4", "W:A2", "W:A3", "3W:A1", "3W:A2", "M3:1", "M3:2"}) {
    FischerSpace fs(parse_group(name));
    bool ok = true;
    for (const auto& l : fs.lines()) {
      auto r = fs.is_near_solid(l);
      ok = ok && r.near_solid && !r.witness;
    }
    out.check(ok, name, "only vacuous near-solid lines");
  }
  for (const char* name : {"3W:A3", "3W:D4"}) {
    FischerSpace fs(parse_group(name));
    std::vector<int> cover(fs.num_points(), 0);
    bool match = true;
    int k = 0;
    for (const auto& l : fs.lines()) {
      bool ns = fs.is_near_solid(l).near_solid;
      match = match && ns == shares_root(fs.group(), l);
      if (ns) {
        ++k;
        for (int p : l) ++cover[p];
      }
    }
    bool spread = std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; });
    out.check(match && spread, name,
              std::to_string(k) + " near-solid" + (match ? ", all vertical" : ", not the vertical lines") +
                  (spread ? ", spread" : ", not a spread"));
  }
  for (const char* name : {"S5", "W:D4", "M3:3", "3W:A3", "3W:D4"}) {
    auto m = matsuo_q(name);
    auto it = g_der_q.find(name);
    DerBasis<Rational> der = it != g_der_q.end() ? it->second : derivations(m.algebra());
    int nonzero = 0;
    int off = 0;
    for (const auto& e : vanishing_report(m, der)) {
      if (e.forced_zero) continue;
      ++nonzero;
      off += !m.space().is_near_solid(m.space().lines()[e.line]).near_solid;
    }
    out.check(off == 0, std::string(name) + " vanishing",
              std::to_string(nonzero) + " nonzero coefficients, " + std::to_string(off) + " off near-solid lines");
  }
  double s = seconds_since(t0);
  out.check(s < kNearSolidLimit, "runtime", fixed(s) + " (limit " + fixed(kNearSolidLimit) + ")");
}

template <ExactField F>
void model_iso(Outcome& out, const std::string& type, const F& f) {
  const std::string subject = type + " over " + f.name();
  try {
    auto b = build_model_b(RootSystem::parse(type), f);
    auto m = build_matsuo(parse_group("3W:" + type), f.from_rational(kHalf), f);
    auto phi = model_b_iso(b, m);
    bool bij = inverse(phi).has_value();
    bool mult = !homomorphism_failure(b.algebra(), m.algebra(), phi);
    out.check(bij && mult, subject,
              std::string(bij ? "bijective" : "singular") + ", " + (mult ? "multiplicative" : "not multiplicative") +
                  " on " + std::to_string(b.dim() * b.dim()) + " basis pairs");
  } catch (const Error& e) {
    out.check(false, subject, e.what());
  }
}

void criterion5(Outcome& out) {
  RationalSqrtField q3(RationalField{}, Rational(3));
  PrimeField f13(13);
  for (const char* type : {"A2", "A3"}) {
    model_iso(out, type, q3);
    model_iso(out, type, f13);
  }
}

void criterion6(Outcome& out) {
  for (const char* field : {"Q(sqrt:3)", "Fp:13"}) {
    for (const char* type : {"A2", "A3"}) {
      auto o = options(field);
      o.type = type;
      auto torus = report::verify("torus", o);
      from_ledger(out, torus);
      from_ledger(out, report::verify("section", o));
      if (std::string(field) == "Fp:13") {
        bool characters = false;
        for (const auto& row : torus.json["checks"]) {
          characters = characters || (row["check"] == "characters" && row["status"] == "pass");
        }
        out.check(characters, std::string(type) + " characters", "additivity checked over F13");
      }
    }
  }
}

void criterion7(Outcome& out) {
  PrimeField f3(3);
  auto m = build_matsuo(parse_group("M3:3"), f3.from_rational(kHalf), f3);
  int dim = derivations(m.algebra()).dim();
  out.check(dim > 0 && dim == kCharThree, "M3:3 over F3",
            "dim " + std::to_string(dim) + ", frozen " + std::to_string(kCharThree));
  PrimeField f7(7);
  auto m7 = build_matsuo(parse_group("M3:3"), f7.from_rational(kHalf), f7);
  int dim7 = derivations(m7.algebra()).dim();
  out.check(dim7 == 0, "M3:3 over F7", "dim " + std::to_string(dim7));
}

// Infinitesimal torus: for each simple root a_i, the map acting on the
// (x_r, y_r) block of every positive root r by k_i(r) J, J = [[0,-1],[1,0]],
// where k_i(r) is the a_i coefficient of r.
template <ExactField F>
std::vector<Matrix<typename F::Element>> torus_generators(const ModelB<F>& b) {
  using S = typename F::Element;
  const F& f = b.field();
  const RootSystem& rs = b.roots();
  std::vector<Matrix<S>> out;
  for (int i = 0; i < rs.rank(); ++i) {
    Matrix<S> d = Matrix<S>::Constant(b.dim(), b.dim(), f.zero());
    for (int r = 0; r < rs.num_positive(); ++r) {
      S k = f.from_int(rs.root(r)[i]);
      d(ModelB<F>::y(r), ModelB<F>::x(r)) = k;
      d(ModelB<F>::x(r), ModelB<F>::y(r)) = -k;
    }
    out.push_back(d);
  }
  return out;
}

void criterion8(Outcome& out) {
  PrimeField f(13);
  for (const char* type : {"A1", "A2", "A3", "D4"}) {
    const std::string group = std::string("3W:") + type;
    auto rs = RootSystem::parse(type);
    auto b = build_model_b(rs, f);
    auto m = build_matsuo(parse_group(group), f.from_rational(kHalf), f);
    auto phi = model_b_iso(b, m);
    auto gens = torus_generators(b);
    bool derivs = true;
    std::vector<Matrix<ModP>> pushed;
    for (const auto& d : gens) {
      derivs = derivs && leibniz_residual(b.algebra(), d).zero();
      pushed.push_back(pushforward(phi, d));
      derivs = derivs && leibniz_residual(m.algebra(), pushed.back()).zero();
    }
    int torus_rank = span_rank(gens, b.dim(), f.zero());
    auto it = g_der_q.find(group);
    int der = it != g_der_q.end() ? it->second.dim() : derivations(matsuo_q(group).algebra()).dim();
    out.check(derivs && torus_rank == rs.rank() && der == torus_rank, group,
              "dim Der " + std::to_string(der) + ", torus rank " + std::to_string(torus_rank) +
                  (derivs ? ", tangent maps are derivations" : ", tangent map is not a derivation"));
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"derivation dimensions, both systems", criterion1},
      {"relation system equivalent to Leibniz", criterion2},
      {"fusion law on every axis", criterion3},
      {"near-solid classification", criterion4},
      {"model B isomorphism", criterion5},
      {"torus and section automorphisms", criterion6},
      {"characteristic 3 contrast", criterion7},
      {"dim Der equals torus rank", criterion8},
  };
  bool unexpected = false;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    Outcome out;
    auto t0 = Clock::now();
    try {
      criteria[i].second(out);
    } catch (const std::exception& e) {
      out.check(false, "exception", e.what());
    }
    double s = seconds_since(t0);
    for (const auto& n : out.notes) std::cout << n << "\n";
    std::set<std::string> known;
    if (auto it = kExpected.find(id); it != kExpected.end()) {
      for (const auto& [subject, why] : it->second) known.insert(subject);
    }
    std::cout << "criterion " << id << ": " << (out.failed.empty() ? "PASS" : "FAIL") << "  " << criteria[i].first
              << " (" << fixed(s) << ")";
    if (!out.failed.empty() && out.failed == known) {
      std::cout << "  [known:";
      for (const auto& [subject, why] : kExpected.at(id)) std::cout << " " << subject << ", " << why;
      std::cout << "]";
    } else if (out.failed != known) {
      unexpected = true;
      if (out.failed.empty()) std::cout << "  [listed as known failure but passed]";
    }
    std::cout << "\n" << std::endl;
  }
  std::cout << (unexpected ? "acceptance: unexpected result" : "acceptance: only known failures") << "\n";
  return unexpected ? 1 : 0;
}
