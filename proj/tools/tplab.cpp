// Command-line front end: every operation of the library behind one binary,
// with reproducible seeds, precision control, and machine-readable output.
// Exit codes: 0 ok, 1 violated positivity/identity check, 2 usage, 3 numeric
// non-convergence.  Errors go to stderr as one-line JSON objects.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tplab/alpha.hpp"
#include "tplab/asm.hpp"
#include "tplab/chebyshev.hpp"
#include "tplab/conjectures.hpp"
#include "tplab/delta.hpp"
#include "tplab/errors.hpp"
#include "tplab/kernel.hpp"
#include "tplab/numeric.hpp"
#include "tplab/real.hpp"

using json = nlohmann::ordered_json;
using namespace tplab;

namespace {

struct Cfg {
  long precisionBits = 256;
  std::string tolRel = "1e-20";
  std::uint64_t seed = 42;
  std::string format = "json";
};

Real parse_real(const std::string& s, mpfr_prec_t prec) {
  Real r = Real::zero(prec);
  char* end = nullptr;
  mpfr_strtofr(r.raw(), s.c_str(), &end, 0, MPFR_RNDN);
  if (end == s.c_str() || *end != '\0') throw domain_error("not a number: '" + s + "'");
  return r;
}

long parse_long(const std::string& s) {
  size_t used = 0;
  long v = std::stol(s, &used);
  if (used != s.size()) throw domain_error("not an integer: '" + s + "'");
  return v;
}

// "p/q" and plain integers become exact rationals (their degenerate trig
// values then come out exact); everything else is read as a decimal.
AlphaParam parse_alpha(const std::string& s, mpfr_prec_t prec) {
  auto slash = s.find('/');
  if (slash != std::string::npos)
    return AlphaParam::from_rational(parse_long(s.substr(0, slash)),
                                     parse_long(s.substr(slash + 1)), prec);
  if (s.find_first_of(".eE@pPxX") == std::string::npos)
    return AlphaParam::from_rational(parse_long(s), 1, prec);
  return AlphaParam::from_real(parse_real(s, prec), prec);
}

std::vector<Real> parse_list(const std::string& csv, mpfr_prec_t prec) {
  std::vector<Real> out;
  size_t pos = 0;
  while (pos <= csv.size()) {
    size_t comma = csv.find(',', pos);
    if (comma == std::string::npos) comma = csv.size();
    out.push_back(parse_real(csv.substr(pos, comma - pos), prec));
    pos = comma + 1;
  }
  return out;
}

json jreal(const Real& v) { return json{{"dec", v.dec()}, {"hex", v.hex()}}; }
json jcomplex(const Complex& z) { return json{{"re", jreal(z.re)}, {"im", jreal(z.im)}}; }

json jreal_list(const std::vector<Real>& v) {
  json a = json::array();
  for (const Real& x : v) a.push_back(jreal(x));
  return a;
}

void emit(const Cfg& cfg, const json& j, std::vector<std::string> csv = {}) {
  if (cfg.format == "csv") {
    if (csv.empty())  // flatten top-level scalars; tables pass their own rows
      for (auto& [k, v] : j.items()) {
        if (v.is_object() && v.contains("dec"))
          csv.push_back(k + "," + v["dec"].get<std::string>());
        else if (!v.is_object() && !v.is_array())
          csv.push_back(k + "," + (v.is_string() ? v.get<std::string>() : v.dump()));
      }
    for (const std::string& row : csv) std::cout << row << "\n";
  } else {
    std::cout << j.dump() << "\n";
  }
}

Real rel_diff(const Real& got, const Real& want) {
  Real floor_ = ldexp(Real(1l).at_prec(want.prec()), -int(want.prec()) * 4);
  return abs(got - want) / max(abs(want), floor_);
}

// deterministic strictly-increasing tuple in [0.5, 2] for identity spot checks
PointTuple draw_tuple(SplitMix64& g, int n, mpfr_prec_t prec) {
  std::vector<Real> v;
  for (int i = 0; i < n; ++i) v.push_back(Real(0.5, prec) + Real(1.5, prec) * g.unit(prec));
  std::sort(v.begin(), v.end());
  for (size_t i = 1; i < v.size(); ++i)
    if (!(v[i - 1] < v[i])) v[i] = v[i - 1] * Real(1.0 + 1e-9, prec);
  return PointTuple::of(std::move(v));
}

struct Args {
  std::string alpha, x = "1", y = "1", s = "0", q = "1", xs, ys, route = "all";
  std::vector<std::string> alphas;
  long n = 2, k = 0, order = 3, samples = 200, steps = 4, maxOrder = -1;
  double logMin = -0.6931471805599453, logMax = 0.6931471805599453;
  double lo = 0.5, hi = 2.0;
  bool clustered = false, rigorous = false;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for the kernel 1/(x^2 + 2 cos(pi a) x y + y^2)"};
  app.require_subcommand(1);

  Cfg cfg;
  if (const char* env = std::getenv("TPLAB_PRECISION_BITS"))
    cfg.precisionBits = std::strtol(env, nullptr, 10);
  app.add_option("--precision-bits", cfg.precisionBits, "working precision in bits (>= 64)")
      ->capture_default_str();
  app.add_option("--tol-rel", cfg.tolRel, "relative tolerance for identity checks")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for randomized scans")->capture_default_str();
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  Args A;
  auto sub = [](CLI::App* parent, const char* name, const char* desc) {
    CLI::App* s = parent->add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };

  CLI::App* kernel = sub(&app, "kernel", "kernel evaluations, determinants and scans");
  kernel->require_subcommand(1);
  CLI::App* kEval = sub(kernel, "eval", "evaluate the kernel at one point");
  kEval->add_option("--alpha", A.alpha)->required();
  kEval->add_option("--x", A.x)->required();
  kEval->add_option("--y", A.y)->required();
  CLI::App* kDet = sub(kernel, "det", "determinant of [K(x_i, y_j)]");
  kDet->add_option("--alpha", A.alpha)->required();
  kDet->add_option("--xs", A.xs, "comma-separated, strictly increasing")->required();
  kDet->add_option("--ys", A.ys, "comma-separated, strictly increasing")->required();
  CLI::App* kGram = sub(kernel, "gram", "determinant of [K(x_i, x_j)]");
  kGram->add_option("--alpha", A.alpha)->required();
  kGram->add_option("--xs", A.xs, "comma-separated, strictly increasing")->required();
  CLI::App* kScan = sub(kernel, "tp-scan", "randomized positivity scan of kernel minors");
  kScan->add_option("--alpha", A.alpha)->required();
  kScan->add_option("--order", A.order, "largest minor order")->required();
  kScan->add_option("--samples", A.samples)->capture_default_str();
  kScan->add_option("--log-min", A.logMin, "lower bound, natural log")->capture_default_str();
  kScan->add_option("--log-max", A.logMax, "upper bound, natural log")->capture_default_str();
  kScan->add_flag("--clustered", A.clustered, "nearly coincident tuples");
  CLI::App* kBor = sub(kernel, "borchardt", "det of squared-entry Cauchy matrix vs det*perm");
  kBor->add_option("--xs", A.xs)->required();
  kBor->add_option("--ys", A.ys)->required();
  CLI::App* kCau = sub(kernel, "cauchy", "Cauchy determinant vs closed product");
  kCau->add_option("--xs", A.xs)->required();
  kCau->add_option("--ys", A.ys)->required();

  CLI::App* logistic = sub(&app, "logistic", "the density the kernel transforms into");
  logistic->require_subcommand(1);
  CLI::App* lEval = sub(logistic, "eval", "density value");
  lEval->add_option("--alpha", A.alpha)->required();
  lEval->add_option("--x", A.x)->required();
  CLI::App* lMgf = sub(logistic, "mgf-check", "numeric moment integral vs closed form");
  lMgf->add_option("--alpha", A.alpha)->required();
  lMgf->add_option("--s", A.s, "|s| < 1")->required();

  CLI::App* cheb = sub(&app, "cheb", "trigonometric ratios U_k and products");
  cheb->require_subcommand(1);
  CLI::App* cU = sub(cheb, "u", "U_k = sin(k pi a)/sin(pi a)");
  cU->add_option("--alpha", A.alpha)->required();
  cU->add_option("--k", A.k)->required();
  CLI::App* cV = sub(cheb, "v", "V_n = U_1 ... U_n");
  cV->add_option("--alpha", A.alpha)->required();
  cV->add_option("--n", A.n)->required();
  CLI::App* cQ = sub(cheb, "qfact", "[n]_q! at q = e^{2 i pi a}");
  cQ->add_option("--alpha", A.alpha)->required();
  cQ->add_option("--n", A.n)->required();

  CLI::App* asmc = sub(&app, "asm", "alternating sign matrix enumeration");
  asmc->require_subcommand(1);
  CLI::App* aCount = sub(asmc, "count", "number of n x n matrices");
  aCount->add_option("--n", A.n)->required();
  CLI::App* aStats = sub(asmc, "stats", "per-matrix statistics table");
  aStats->add_option("--n", A.n)->required();
  CLI::App* aZnk = sub(asmc, "znk", "generating polynomial of nu over mu = k");
  aZnk->add_option("--n", A.n)->required();
  aZnk->add_option("--k", A.k)->required();
  CLI::App* aGroup = sub(asmc, "group", "counts grouped by (mu, nu)");
  aGroup->add_option("--n", A.n)->required();
  CLI::App* aIk = sub(asmc, "ik-check", "weighted-sum determinant identity at random points");
  aIk->add_option("--n", A.n)->required();
  aIk->add_option("--q", A.q)->capture_default_str();

  CLI::App* dlt = sub(&app, "delta", "derivative determinant of the kernel");
  dlt->add_option("--alpha", A.alpha);
  dlt->add_option("--n", A.n);
  dlt->add_option("--x", A.x);
  dlt->add_option("--y", A.y);
  dlt->add_option("--route", A.route, "fd|wronskian|schur|lascoux|asm|all")
      ->capture_default_str();
  CLI::App* dOrigin = sub(dlt, "origin", "boundary value at (1, 0+)");
  dOrigin->add_option("--alpha", A.alpha)->required();
  dOrigin->add_option("--n", A.n)->required();
  CLI::App* dDiag = sub(dlt, "diagonal", "value at x = y");
  dDiag->add_option("--alpha", A.alpha)->required();
  dDiag->add_option("--n", A.n)->required();
  dDiag->add_option("--x", A.x)->required();

  CLI::App* conj = sub(&app, "conj", "positivity conjecture laboratory");
  conj->require_subcommand(1);
  CLI::App* cFnk = sub(conj, "fnk", "grouped sum over matrices with mu = k");
  cFnk->add_option("--alpha", A.alpha)->required();
  cFnk->add_option("--n", A.n)->required();
  cFnk->add_option("--k", A.k)->required();
  cFnk->add_option("--x", A.x)->required();
  cFnk->add_option("--y", A.y)->required();
  CLI::App* cFn0 = sub(conj, "fn0", "closed product for the mu = 0 class");
  cFn0->add_option("--alpha", A.alpha)->required();
  cFn0->add_option("--n", A.n)->required();
  cFn0->add_option("--x", A.x)->required();
  cFn0->add_option("--y", A.y)->required();
  CLI::App* cCvec = sub(conj, "cvec", "coefficient vector of the power-sum quotient");
  cCvec->add_option("--alpha", A.alpha)->required();
  cCvec->add_option("--n", A.n)->required();
  CLI::App* cBand = sub(conj, "band", "banded matrix of binomial-weighted U values");
  cBand->add_option("--alpha", A.alpha)->required();
  cBand->add_option("--n", A.n)->required();
  CLI::App* cCheck = sub(conj, "check-tp", "minor sweep of the band matrix");
  cCheck->add_option("--alpha", A.alpha)->required();
  cCheck->add_option("--n", A.n)->required();
  cCheck->add_option("--max-order", A.maxOrder, "default n");
  cCheck->add_flag("--rigorous", A.rigorous, "re-check near-zero minors at doubled precision");
  CLI::App* cScan1 = sub(conj, "scan1", "positivity scan of the grouped sums");
  cScan1->add_option("--alpha", A.alphas, "repeatable")->required();
  cScan1->add_option("--n", A.n)->required();
  cScan1->add_option("--lo", A.lo)->capture_default_str();
  cScan1->add_option("--hi", A.hi)->capture_default_str();
  cScan1->add_option("--steps", A.steps)->capture_default_str();
  CLI::App* cScanT = sub(conj, "scan-theorem", "sign survey across the parameter strip");
  cScanT->add_option("--alpha", A.alphas, "repeatable")->required();
  cScanT->add_option("--n", A.n)->required();
  cScanT->add_option("--lo", A.lo)->capture_default_str();
  cScanT->add_option("--hi", A.hi)->capture_default_str();
  cScanT->add_option("--steps", A.steps)->capture_default_str();

  try {
    app.parse(argc, argv);

    if (cfg.precisionBits < 64 || cfg.precisionBits > 1l << 20)
      throw domain_error("--precision-bits must be in [64, 2^20]");
    mpfr_prec_t P = mpfr_prec_t(cfg.precisionBits);
    Real tol = parse_real(cfg.tolRel, P);
    if (!(tol > 0l)) throw domain_error("--tol-rel must be positive");

    auto alpha = [&]() { return parse_alpha(A.alpha, P); };
    auto tuple = [&](const std::string& s) { return PointTuple::of(parse_list(s, P)); };

    if (kEval->parsed()) {
      AlphaParam a = alpha();
      Real v = eval_kernel(a, parse_real(A.x, P), parse_real(A.y, P));
      emit(cfg, {{"alpha", a.describe()}, {"x", A.x}, {"y", A.y}, {"value", jreal(v)}});
      return 0;
    }
    if (kDet->parsed()) {
      AlphaParam a = alpha();
      PointTuple X = tuple(A.xs), Y = tuple(A.ys);
      if (X.size() != Y.size()) throw domain_error("xs and ys must have equal length");
      Real v = det_kernel_matrix(a, X, Y);
      emit(cfg, {{"alpha", a.describe()}, {"n", X.size()}, {"value", jreal(v)}});
      return 0;
    }
    if (kGram->parsed()) {
      AlphaParam a = alpha();
      PointTuple X = tuple(A.xs);
      Real v = gram_determinant(a, X);
      bool pos = v.sign() > 0;
      emit(cfg, {{"alpha", a.describe()}, {"n", X.size()}, {"value", jreal(v)}, {"positive", pos}});
      return pos ? 0 : 1;
    }
    if (kScan->parsed()) {
      AlphaParam a = alpha();
      TpScanReport r = tp_scan(a, int(A.order), int(A.samples), cfg.seed, A.logMin, A.logMax,
                               A.clustered ? ScanMode::kClustered : ScanMode::kLogUniform);
      json j{{"seed", r.seed},
             {"mode", A.clustered ? "clustered" : "logUniform"},
             {"logMin", r.logMin},
             {"logMax", r.logMax},
             {"order", r.maxOrder},
             {"samples", r.samplesPerOrder},
             {"alpha", a.describe()},
             {"negativeCount", r.negativeCount},
             {"minMinor", jreal(r.minMinor)},
             {"minOrder", r.minOrder},
             {"minSample", r.minSample},
             {"minByOrder", jreal_list(r.minByOrder)},
             {"witnessX", jreal_list(r.witnessX)},
             {"witnessY", jreal_list(r.witnessY)}};
      emit(cfg, j);
      return r.negativeCount > 0 ? 1 : 0;
    }
    if (kBor->parsed() || kCau->parsed()) {
      PointTuple X = tuple(A.xs), Y = tuple(A.ys);
      if (X.size() != Y.size()) throw domain_error("xs and ys must have equal length");
      auto [lhs, rhs] = kBor->parsed() ? borchardt_check(X, Y) : cauchy_check(X, Y);
      Real rd = rel_diff(lhs, rhs);
      emit(cfg, {{"n", X.size()},
                 {"lhs", jreal(lhs)},
                 {"rhs", jreal(rhs)},
                 {"relDiff", jreal(rd)}});
      return rd <= tol ? 0 : 1;
    }

    if (lEval->parsed()) {
      AlphaParam a = alpha();
      Real v = eval_logistic(a, parse_real(A.x, P));
      emit(cfg, {{"alpha", a.describe()}, {"x", A.x}, {"value", jreal(v)}});
      return 0;
    }
    if (lMgf->parsed()) {
      AlphaParam a = alpha();
      auto [numeric, closed] = logistic_mgf_check(a, parse_real(A.s, P));
      Real rd = rel_diff(numeric, closed);
      bool ok = rd < Real(1e-6, P);  // integration accuracy, not working precision
      emit(cfg, {{"alpha", a.describe()},
                 {"s", A.s},
                 {"numeric", jreal(numeric)},
                 {"closed", jreal(closed)},
                 {"relDiff", jreal(rd)},
                 {"pass", ok}});
      return ok ? 0 : 1;
    }

    if (cU->parsed()) {
      AlphaParam a = alpha();
      emit(cfg, {{"alpha", a.describe()}, {"k", A.k}, {"value", jreal(cheb_u(a, A.k))}});
      return 0;
    }
    if (cV->parsed()) {
      AlphaParam a = alpha();
      emit(cfg, {{"alpha", a.describe()}, {"n", A.n}, {"value", jreal(v_product(a, int(A.n)))}});
      return 0;
    }
    if (cQ->parsed()) {
      AlphaParam a = alpha();
      emit(cfg, {{"alpha", a.describe()}, {"n", A.n}, {"value", jcomplex(q_factorial(a.q(), int(A.n)))}});
      return 0;
    }

    if (aCount->parsed()) {
      emit(cfg, {{"n", A.n}, {"count", asm_count(int(A.n))}});
      return 0;
    }
    if (aStats->parsed()) {
      if (A.n < 1 || A.n > 6) throw cap_error("asm stats: n must be in [1, 6]");
      json rows = json::array();
      std::vector<std::string> csv = {"id,mu,nu,inv,j"};
      long id = 0;
      for_each_asm(int(A.n), [&](const AsmMatrix& M) {
        AsmStats s = asm_stats(M);
        rows.push_back({id, s.mu, s.nu, s.inv, s.j});
        csv.push_back(std::to_string(id) + "," + std::to_string(s.mu) + "," +
                      std::to_string(s.nu) + "," + std::to_string(s.inv) + "," +
                      std::to_string(s.j));
        ++id;
      });
      emit(cfg, {{"n", A.n}, {"columns", {"id", "mu", "nu", "inv", "j"}}, {"rows", rows}}, csv);
      return 0;
    }
    if (aZnk->parsed()) {
      IntPoly z = z_nk_poly(int(A.n), int(A.k));
      json coef = json::array();
      std::vector<std::string> csv;
      for (int i = 0; i <= z.degree(); ++i) {
        coef.push_back(z.coeff(i).get_str());
        csv.push_back(std::to_string(i) + "," + z.coeff(i).get_str());
      }
      emit(cfg, {{"n", A.n}, {"k", A.k}, {"coefficients", coef}, {"poly", z.str("x")}}, csv);
      return 0;
    }
    if (aGroup->parsed()) {
      json rows = json::array();
      std::vector<std::string> csv = {"mu,nu,count"};
      for (const auto& [key, cnt] : group_by_stats(int(A.n))) {
        rows.push_back({key.first, key.second, cnt});
        csv.push_back(std::to_string(key.first) + "," + std::to_string(key.second) + "," +
                      std::to_string(cnt));
      }
      emit(cfg, {{"n", A.n}, {"columns", {"mu", "nu", "count"}}, {"rows", rows}}, csv);
      return 0;
    }
    if (aIk->parsed()) {
      SplitMix64 g(cfg.seed);
      PointTuple X = draw_tuple(g, int(A.n), P), Y = draw_tuple(g, int(A.n), P);
      Complex q(parse_real(A.q, P));
      Complex lhs = ik_propp_sum(q, X, Y), rhs = ik_direct(q, X, Y);
      Real scale = max(abs(rhs), ldexp(Real(1l).at_prec(P), -int(P) * 4));
      Real rd = abs(lhs - rhs) / scale;
      bool ok = rd <= tol;
      emit(cfg, {{"seed", cfg.seed},
                 {"n", A.n},
                 {"q", A.q},
                 {"xs", jreal_list(X.v)},
                 {"ys", jreal_list(Y.v)},
                 {"weightedSum", jcomplex(lhs)},
                 {"determinant", jcomplex(rhs)},
                 {"relDiff", jreal(rd)},
                 {"pass", ok}});
      return ok ? 0 : 1;
    }

    if (dOrigin->parsed()) {
      AlphaParam a = alpha();
      emit(cfg, {{"alpha", a.describe()}, {"n", A.n}, {"value", jreal(delta_at_origin(a, int(A.n)))}});
      return 0;
    }
    if (dDiag->parsed()) {
      AlphaParam a = alpha();
      Real v = delta_diagonal(a, int(A.n), parse_real(A.x, P));
      emit(cfg, {{"alpha", a.describe()}, {"n", A.n}, {"x", A.x}, {"value", jreal(v)}});
      return 0;
    }
    if (dlt->parsed()) {
      if (A.alpha.empty()) throw domain_error("delta: --alpha is required");
      AlphaParam a = alpha();
      Real x = parse_real(A.x, P), y = parse_real(A.y, P);
      auto jroute = [&](const RouteResult& r) {
        return json{{"route", route_name(r.route)},
                    {"value", jreal(r.value)},
                    {"errorEstimate", jreal(r.errorEstimate)},
                    {"meta",
                     {{"epsilonUsed", jreal(r.meta.epsilonUsed)},
                      {"truncationK", r.meta.truncationK},
                      {"termCount", r.meta.termCount},
                      {"internalPrec", r.meta.internalPrec}}}};
      };
      json j{{"alpha", a.describe()}, {"n", A.n}, {"x", A.x}, {"y", A.y}};
      if (A.route == "all") {
        json routes = json::array();
        std::vector<std::string> csv;
        for (DeltaRoute rt : all_routes()) {
          RouteResult r = delta(a, int(A.n), x, y, rt);
          routes.push_back(jroute(r));
          csv.push_back(std::string(route_name(rt)) + "," + r.value.dec());
        }
        j["routes"] = routes;
        emit(cfg, j, csv);
      } else {
        DeltaRoute rt;
        if (!route_from_name(A.route, rt))
          throw domain_error("unknown route '" + A.route + "'");
        j["result"] = jroute(delta(a, int(A.n), x, y, rt));
        emit(cfg, j);
      }
      return 0;
    }

    if (cFnk->parsed() || cFn0->parsed()) {
      AlphaParam a = alpha();
      Real x = parse_real(A.x, P), y = parse_real(A.y, P);
      if (cFn0->parsed()) {
        emit(cfg, {{"alpha", a.describe()},
                   {"n", A.n},
                   {"value", jreal(f_n0_closed(a, int(A.n), x, y))}});
        return 0;
      }
      FnkValue f = f_nk(a, int(A.n), int(A.k), x, y);
      emit(cfg, {{"alpha", a.describe()},
                 {"n", f.n},
                 {"k", f.k},
                 {"value", jreal(f.value)},
                 {"imagResidue", jreal(f.imagResidue)}});
      return 0;
    }
    if (cCvec->parsed()) {
      AlphaParam a = alpha();
      std::vector<Real> c = c_coefficients(a, int(A.n));
      bool allPos = true;
      std::string row;
      for (const Real& v : c) {
        if (!(v > 0l)) allPos = false;
        row += (row.empty() ? "" : ",") + v.dec();
      }
      bool inside = a.alpha() * A.n <= 1l;
      emit(cfg,
           {{"alpha", a.describe()}, {"n", A.n}, {"coefficients", jreal_list(c)}, {"allPositive", allPos}},
           {row});
      return (inside && !allPos) ? 1 : 0;
    }
    if (cBand->parsed()) {
      AlphaParam a = alpha();
      BandMatrix b = band_matrix(int(A.n));
      Mat<Real> m = b.evaluate(a);
      json entries = json::array(), values = json::array();
      std::vector<std::string> csv;
      for (int i = 1; i <= b.n; ++i) {
        json erow = json::array(), vrow = json::array();
        std::string line;
        for (int k = 1; k <= 2 * b.n - 1; ++k) {
          erow.push_back(b.at(i, k).str());
          vrow.push_back(jreal(m(i - 1, k - 1)));
          line += (k == 1 ? "" : ",") + m(i - 1, k - 1).dec();
        }
        entries.push_back(erow);
        values.push_back(vrow);
        csv.push_back(line);
      }
      emit(cfg, {{"alpha", a.describe()}, {"n", A.n}, {"entries", entries}, {"values", values}}, csv);
      return 0;
    }
    if (cCheck->parsed()) {
      AlphaParam a = alpha();
      TpCheckReport r = check_tp_band(int(A.n), a, tol, A.rigorous);
      if (A.maxOrder > 0 && A.maxOrder != A.n)
        r = check_tp(band_matrix(int(A.n)).evaluate(a), int(A.maxOrder), tol);
      emit(cfg, {{"alpha", a.describe()},
                 {"n", A.n},
                 {"maxOrder", r.maxOrder},
                 {"minorCount", r.minorCount},
                 {"minMinor", jreal(r.minMinor)},
                 {"minOrder", r.minOrder},
                 {"minRows", r.minRows},
                 {"minCols", r.minCols},
                 {"negativeCount", r.negativeCount},
                 {"nearZeroCount", r.nearZeroCount},
                 {"rigorous", r.rigorous}});
      return r.negativeCount > 0 ? 1 : 0;
    }
    if (cScan1->parsed() || cScanT->parsed()) {
      std::vector<AlphaParam> as;
      for (const std::string& s : A.alphas) as.push_back(parse_alpha(s, P));
      XyGrid grid{A.lo, A.hi, int(A.steps)};
      json header{{"n", A.n},
                  {"alphas", A.alphas},
                  {"grid", {{"lo", A.lo}, {"hi", A.hi}, {"steps", A.steps}}}};
      if (cScan1->parsed()) {
        Conj1Report r = scan_conjecture1(int(A.n), as, grid);
        json j = header;
        j["pointsChecked"] = r.pointsChecked;
        j["counterexampleCount"] = r.counterexampleCount;
        j["minValue"] = jreal(r.minValue);
        j["minAlpha"] = jreal(r.minAlpha);
        j["minX"] = jreal(r.minX);
        j["minY"] = jreal(r.minY);
        j["minK"] = r.minK;
        j["identityChecks"] = r.identityChecks;
        j["identityMaxRel"] = jreal(r.identityMaxRel);
        json certs = json::array();
        for (const GridPointIssue& c : r.certificates)
          certs.push_back({{"alpha", jreal(c.alpha)},
                           {"k", c.k},
                           {"x", jreal(c.x)},
                           {"y", jreal(c.y)},
                           {"value", jreal(c.value)}});
        j["certificates"] = certs;
        emit(cfg, j);
        return r.counterexampleCount > 0 ? 1 : 0;
      }
      TheoremScanReport r = scan_theorem(int(A.n), as, grid);
      json rows = json::array();
      std::vector<std::string> csv = {"alpha,signs"};
      for (size_t i = 0; i < r.rowSigns.size(); ++i) {
        rows.push_back({{"alpha", jreal(r.rowAlpha[i])}, {"signs", r.rowSigns[i]}});
        csv.push_back(r.rowAlpha[i].dec() + "," + r.rowSigns[i]);
      }
      json j = header;
      j["threshold"] = jreal(r.threshold);
      j["ratios"] = jreal_list(r.ratios);
      j["rows"] = rows;
      j["positivePoints"] = r.positivePoints;
      j["positiveViolations"] = r.positiveViolations;
      j["originChecks"] = r.originChecks;
      j["originFailures"] = r.originFailures;
      emit(cfg, j, csv);
      return (r.positiveViolations > 0 || r.originFailures > 0) ? 1 : 0;
    }

    throw domain_error("no operation selected");
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cerr << json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const convergence_error& e) {
    std::cerr << json{{"error", "convergence"}, {"message", e.what()}}.dump() << "\n";
    return 3;
  } catch (const cap_error& e) {
    std::cerr << json{{"error", "cap"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const domain_error& e) {
    std::cerr << json{{"error", "domain"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
    return 3;
  }
}
