#include "apollonius/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "apollonius/errors.hpp"
#include "apollonius/localindex.hpp"
#include "apollonius/numtheory.hpp"

namespace apollo {

namespace {

FieldElement parse_number(const nlohmann::json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return FieldElement(Scalar::parse(j.get<std::string>()));
    } catch (const std::exception& e) {
      throw ParseError(where + ": cannot parse '" + j.get<std::string>() + "' as an exact rational");
    }
  }
  if (j.is_number_integer()) return FieldElement(Scalar(mpz_class(std::to_string(j.get<std::int64_t>()))));
  throw ParseError(where + ": expected an integer or a rational string such as \"5/6\"");
}

std::int64_t parse_prime(const nlohmann::json& j) {
  std::int64_t p = 0;
  if (j.is_number_integer()) {
    p = j.get<std::int64_t>();
  } else if (j.is_string()) {
    try {
      p = std::stoll(j.get<std::string>());
    } catch (const std::exception&) {
      throw ParseError("Fp: not an integer");
    }
  } else {
    throw ParseError("Fp: expected an integer");
  }
  if (p < 3 || !nt::is_prime_u64(static_cast<std::uint64_t>(p))) {
    throw ParseError("Fp: " + std::to_string(p) + " is not an odd prime");
  }
  return p;
}

void require_transverse(const Configuration& cfg) {
  const ConfigStatus st = cfg.check();
  switch (st.kind) {
    case ConfigStatus::Kind::Ok:
      return;
    case ConfigStatus::Kind::CollinearCenters:
      throw MathError(ErrorKind::CollinearCenters, st.str());
    case ConfigStatus::Kind::TangentPair:
      throw MathError(ErrorKind::TangentPair, st.str());
    case ConfigStatus::Kind::DegenerateInput:
      throw MathError(ErrorKind::DegenerateCircle, st.str());
  }
}

std::int64_t residue_of(const FieldElement& e, std::int64_t p) {
  const mpq_class q = e.base_value().q();
  const std::int64_t den = nt::normmod(q.get_den(), p);
  if (den == 0) throw MathError(ErrorKind::InvalidPrime, std::to_string(p) + " divides a denominator of the input");
  return nt::mulmod(nt::normmod(q.get_num(), p), nt::invmod(den, p), p);
}

std::vector<std::array<FieldElement, 3>> hints_from(const std::vector<ApolloniusSolution>& sols) {
  std::vector<std::array<FieldElement, 3>> out;
  for (auto& s : distinct_solutions(sols)) {
    if (!s.circle.is_degenerate()) out.push_back(affine_point(s.circle));
  }
  return out;
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

double mid(const FieldElement& x) {
  const auto [lo, hi] = real_enclosure(x, 30);
  return (lo + hi) / 2;
}

}  // namespace

ProblemConfig ProblemConfig::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("config must be a JSON object");
  ProblemConfig pc;
  const auto field = j.value("field", nlohmann::json("Q"));
  if (field.is_string() && field.get<std::string>() == "Q") {
    pc.field = FieldDescriptor::rationals();
  } else if (field.is_object() && field.contains("Fp")) {
    pc.field = FieldDescriptor::prime_field(parse_prime(field["Fp"]));
  } else {
    throw ParseError("field must be \"Q\" or {\"Fp\": p}");
  }

  if (!j.contains("objects") || !j["objects"].is_array() || j["objects"].size() != 3) {
    throw ParseError("objects must be a list of exactly three entries");
  }
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& o = j["objects"][i];
    const std::string where = "objects[" + std::to_string(i) + "]";
    if (o.contains("circle")) {
      const auto& c = o["circle"];
      if (!c.contains("center") || !c["center"].is_array() || c["center"].size() != 2 || !c.contains("r2")) {
        throw ParseError(where + ": circle needs center [x, y] and r2");
      }
      pc.objects[i] = InputObject::circle(parse_number(c["center"][0], where), parse_number(c["center"][1], where),
                                          parse_number(c["r2"], where));
    } else if (o.contains("point")) {
      const auto& p = o["point"];
      if (!p.is_array() || p.size() != 2) throw ParseError(where + ": point must be [x, y]");
      pc.objects[i] = InputObject::point(parse_number(p[0], where), parse_number(p[1], where));
    } else {
      throw ParseError(where + ": expected {\"circle\": ...} or {\"point\": ...}");
    }
  }

  if (j.contains("radii_branches")) {
    const auto& b = j["radii_branches"];
    if (!b.is_array() || b.size() != 3) throw ParseError("radii_branches must list three signs");
    for (std::size_t i = 0; i < 3; ++i) {
      if (!b[i].is_number_integer() || (b[i].get<int>() != 1 && b[i].get<int>() != -1)) {
        throw ParseError("radii_branches entries must be 1 or -1");
      }
      pc.branches[i] = b[i].get<int>();
    }
  }
  if (j.contains("options")) {
    const auto& o = j["options"];
    if (!o.is_object()) throw ParseError("options must be an object");
    try {
      pc.options.check_main = o.value("check_main", true);
      pc.options.per_point = o.value("per_point", true);
      pc.options.duality = o.value("duality", false);
      if (o.contains("svg") && !o["svg"].is_null()) pc.options.svg = o["svg"].get<std::string>();
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("options: ") + e.what());
    }
  }
  return pc;
}

ProblemConfig ProblemConfig::parse(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return from_json(j);
}

ProblemConfig ProblemConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

nlohmann::json ProblemConfig::to_json() const {
  nlohmann::json j;
  if (field.over_rationals()) {
    j["field"] = "Q";
  } else {
    j["field"] = {{"Fp", field.prime()}};
  }
  j["objects"] = nlohmann::json::array();
  for (auto& o : objects) j["objects"].push_back(o.to_json());
  j["radii_branches"] = branches;
  j["options"] = {{"check_main", options.check_main}, {"per_point", options.per_point}, {"duality", options.duality}};
  if (options.svg) j["options"]["svg"] = *options.svg;
  return j;
}

Configuration ProblemConfig::configuration() const {
  if (field.over_rationals()) return Configuration::over(field, objects);
  return reduced(field.prime());
}

Configuration ProblemConfig::reduced(std::int64_t p) const {
  if (p == 2) throw MathError(ErrorKind::InvalidPrime, "characteristic 2 is excluded");
  for (auto& o : objects) {
    for (const FieldElement* x : {&o.a, &o.b, &o.r2}) (void)residue_of(*x, p);
  }
  return Configuration::over(FieldDescriptor::prime_field(p), objects);
}

ProblemKind problem_kind(const Configuration& cfg) {
  switch (cfg.point_count()) {
    case 0:
      return ProblemKind::CCC;
    case 1:
      return ProblemKind::CCP;
    case 2:
      return ProblemKind::CPP;
    default:
      return ProblemKind::PPP;
  }
}

std::string kind_name(ProblemKind k) {
  switch (k) {
    case ProblemKind::CCC:
      return "CCC";
    case ProblemKind::CCP:
      return "CCP";
    case ProblemKind::CPP:
      return "CPP";
    case ProblemKind::PPP:
      return "PPP";
  }
  return "?";
}

std::optional<FormClass> expected_class(ProblemKind k, std::int64_t prime) {
  if (k == ProblemKind::CCC) return hyperbolic(4, prime);
  if (k == ProblemKind::CPP) return hyperbolic(1, prime);
  return std::nullopt;
}

nlohmann::json cmd_solve(const ProblemConfig& pc) {
  const Configuration cfg = pc.configuration();
  const Radii radii = choose_radii(cfg, pc.branches);
  const auto sols = solve_all(cfg, radii);
  nlohmann::json j;
  j["field"] = cfg.base.to_json();
  j["kind"] = kind_name(problem_kind(cfg));
  j["radii"] = {radii.r[0].str(), radii.r[1].str(), radii.r[2].str()};
  j["radii_split"] = radii.split;
  j["solutions"] = nlohmann::json::array();
  int real = 0;
  for (auto& s : sols) {
    j["solutions"].push_back(s.to_json());
    real += s.real ? 1 : 0;
  }
  j["distinct_solutions"] = distinct_solutions(sols).size();
  if (cfg.base.over_rationals()) j["real_solutions"] = real;
  return j;
}

nlohmann::json VerifyReport::to_json() const {
  auto opt = [](const std::optional<FormClass>& c) { return c ? c->to_json() : nlohmann::json(nullptr); };
  nlohmann::json j{{"kind", kind_name(kind)},
                   {"expected", opt(expected)},
                   {"per_point", {{"vol", opt(per_point_vol)}, {"area", opt(per_point_area)}, {"note", per_point_note}}},
                   {"paths_agree", paths_agree},
                   {"verdict", verdict}};
  j["zerodim"] = zerodim ? zerodim->to_json() : nlohmann::json(nullptr);
  j["zerodim_note"] = zerodim_note;
  return j;
}

VerifyReport verify_configuration(const Configuration& cfg, const std::array<int, 3>& branches, bool per_point) {
  require_transverse(cfg);
  VerifyReport rep;
  rep.kind = problem_kind(cfg);
  rep.expected = expected_class(rep.kind, cfg.base.prime());

  std::vector<ApolloniusSolution> sols;
  const Radii radii = choose_radii(cfg, branches);
  try {
    sols = solve_all(cfg, radii);
  } catch (const MathError& e) {
    rep.per_point_note = e.what();
  }
  if (per_point && !sols.empty()) {
    if (!radii.split) {
      rep.per_point_note = "radii are not split; per-point path skipped";
    } else {
      try {
        rep.per_point_vol = sum_over_closed_points(cfg, sols, IndexFormula::Vol);
        rep.per_point_area = sum_over_closed_points(cfg, sols, IndexFormula::Area);
      } catch (const MathError& e) {
        rep.per_point_note = e.what();
      }
    }
  }
  try {
    rep.zerodim = analyze(cfg, hints_from(sols));
  } catch (const MathError& e) {
    rep.zerodim_note = e.what();
  }

  std::vector<FormClass> results;
  if (rep.per_point_vol) results.push_back(*rep.per_point_vol);
  if (rep.per_point_area) results.push_back(*rep.per_point_area);
  if (rep.zerodim) results.push_back(rep.zerodim->formclass);
  for (auto& r : results) rep.paths_agree = rep.paths_agree && r == results.front();
  if (rep.zerodim && !rep.zerodim->crosscheck_ok) rep.paths_agree = false;

  if (results.empty()) {
    rep.verdict = "FAIL";
    return rep;
  }
  const FormClass& main = results.front();
  if (rep.kind == ProblemKind::CCP) {
    rep.verdict = "REPORT";
  } else if (rep.kind == ProblemKind::PPP) {
    rep.verdict = (rep.paths_agree && main.rank == 1) ? "PASS" : "FAIL";
  } else {
    rep.verdict = (rep.paths_agree && main == *rep.expected && main.complete()) ? "PASS" : "FAIL";
  }
  return rep;
}

VerifyReport cmd_verify(const ProblemConfig& pc) {
  return verify_configuration(pc.configuration(), pc.branches, pc.options.per_point);
}

nlohmann::json DualityReport::to_json() const {
  nlohmann::json j;
  j["thetas"] = nlohmann::json::array();
  for (auto& t : thetas) j["thetas"].push_back(t.to_json());
  j["product"] = (thetas[0] * thetas[1] * thetas[2]).to_json();
  j["matches_reference"] = matches_reference;
  j["cube"] = cube.to_json();
  auto list = [](const std::vector<SumCheck>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (auto& c : v) a.push_back(c.to_json());
    return a;
  };
  j["inversive_sum"] = list(inversive);
  j["degenerate_dual_sum"] = {list(degenerate[0]), list(degenerate[1]), list(degenerate[2])};
  return j;
}

DualityReport duality_report(const Configuration& cfg, const Radii& radii, bool sabotage) {
  DualityReport rep;
  for (int i = 1; i <= 3; ++i) rep.thetas[static_cast<std::size_t>(i - 1)] = theta(cfg, radii, i);
  if (sabotage) rep.thetas[1] = ThetaMatrix::identity();
  rep.matches_reference = rep.thetas == reference_thetas();
  rep.cube = cube_check(rep.thetas);
  rep.inversive = inversive_sum_check(cfg, radii);
  for (int i = 1; i <= 3; ++i) {
    const auto idx = static_cast<std::size_t>(i - 1);
    rep.degenerate[idx] = degen_dual_sum_check(cfg, radii, i, rep.thetas[idx]);
  }
  return rep;
}

DualityReport cmd_duality(const ProblemConfig& pc, bool sabotage) {
  const Configuration cfg = pc.configuration();
  return duality_report(cfg, choose_radii(cfg, pc.branches), sabotage);
}

std::pair<std::int64_t, std::int64_t> parse_prime_range(const std::string& text) {
  auto num = [&](const std::string& s) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw ParseError("bad prime range '" + text + "' (expected lo..hi)");
    return static_cast<std::int64_t>(v);
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto p = num(text);
    return {p, p};
  }
  return {num(text.substr(0, dots)), num(text.substr(dots + 2))};
}

std::vector<SweepRow> cmd_sweep(const ProblemConfig& pc, std::int64_t lo, std::int64_t hi, unsigned threads) {
  std::vector<std::int64_t> primes;
  for (std::int64_t p = std::max<std::int64_t>(lo, 2); p <= hi; ++p) {
    if (nt::is_prime_u64(static_cast<std::uint64_t>(p))) primes.push_back(p);
  }
  if (primes.empty()) throw ParseError("prime range " + std::to_string(lo) + ".." + std::to_string(hi) + " is empty");

  std::vector<SweepRow> rows(primes.size());
  auto run = [&](std::size_t k) {
    SweepRow& row = rows[k];
    row.p = primes[k];
    row.status = "skipped";
    if (row.p == 2) {
      row.reason = "char 2 excluded";
      return;
    }
    try {
      const Configuration cfg = pc.reduced(row.p);
      const ConfigStatus st = cfg.check();
      if (!st.ok()) {
        row.reason = st.str() + " mod " + std::to_string(row.p);
        return;
      }
      const VerifyReport v = verify_configuration(cfg, pc.branches, pc.options.per_point);
      if (!v.zerodim) {
        row.reason = v.zerodim_note;
        return;
      }
      row.status = "ok";
      row.rational_solutions = v.zerodim->rational_points().size();
      row.rank = v.zerodim->formclass.rank;
      row.disc = v.zerodim->formclass.disc.get_str();
      row.verdict = v.verdict;
      if (!v.paths_agree) row.reason = "per-point and global paths disagree";
    } catch (const MathError& e) {
      row.reason = e.what();
    }
  };
  unsigned n = threads != 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
  n = std::min<unsigned>(n, static_cast<unsigned>(primes.size()));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < n; ++t) {
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < primes.size(); k = next++) run(k);
    });
  }
  for (auto& th : pool) th.join();
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  auto field = [](const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += '"';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream os;
  os << "p,status,rational_solutions,rank,disc,verdict,reason\r\n";
  for (auto& r : rows) {
    os << r.p << "," << field(r.status) << ","
       << (r.rational_solutions ? std::to_string(*r.rational_solutions) : "") << ","
       << (r.rank ? std::to_string(*r.rank) : "") << "," << field(r.disc.value_or("")) << "," << field(r.verdict)
       << "," << field(r.reason) << "\r\n";
  }
  return os.str();
}

std::int64_t parse_field_prime(const std::string& text) {
  std::string t = text;
  for (const std::string prefix : {"Fp:", "fp:", "Fp", "F"}) {
    if (t.rfind(prefix, 0) == 0) {
      t = t.substr(prefix.size());
      break;
    }
  }
  return parse_prime(nlohmann::json(t));
}

std::vector<std::array<std::int64_t, 4>> enumerate_projective(const ProblemConfig& pc, std::int64_t p, bool corrupt) {
  struct Eq {
    bool point;
    std::int64_t a, b, r2;
  };
  std::array<Eq, 3> eqs;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& o = pc.objects[i];
    eqs[i] = {o.is_point(), residue_of(o.a, p), residue_of(o.b, p), o.is_point() ? 0 : residue_of(o.r2, p)};
  }
  if (corrupt) eqs[0].r2 = (eqs[0].r2 + 1) % p;

  auto m = [p](std::int64_t x) { return ((x % p) + p) % p; };
  auto on = [&](const Eq& e, std::int64_t c0, std::int64_t c1, std::int64_t c2, std::int64_t c3) {
    if (e.point) return m(c0 * m(e.a * e.a + e.b * e.b) + c1 * e.a + c2 * e.b + c3) == 0;
    const std::int64_t X = m(c1 + 2 * e.a * c0);
    const std::int64_t Y = m(c2 + 2 * e.b * c0);
    const std::int64_t Z = m(c3 + m(e.r2 - e.a * e.a - e.b * e.b) * c0);
    const std::int64_t L = m(e.a * X + e.b * Y + Z);
    return m(L * L - e.r2 * m(X * X + Y * Y)) == 0;
  };
  std::vector<std::array<std::int64_t, 4>> out;
  auto test = [&](std::int64_t c0, std::int64_t c1, std::int64_t c2, std::int64_t c3) {
    if (on(eqs[0], c0, c1, c2, c3) && on(eqs[1], c0, c1, c2, c3) && on(eqs[2], c0, c1, c2, c3)) {
      out.push_back({c0, c1, c2, c3});
    }
  };
  for (std::int64_t c1 = 0; c1 < p; ++c1) {
    for (std::int64_t c2 = 0; c2 < p; ++c2) {
      for (std::int64_t c3 = 0; c3 < p; ++c3) test(1, c1, c2, c3);
    }
  }
  for (std::int64_t c2 = 0; c2 < p; ++c2) {
    for (std::int64_t c3 = 0; c3 < p; ++c3) test(0, 1, c2, c3);
  }
  for (std::int64_t c3 = 0; c3 < p; ++c3) test(0, 0, 1, c3);
  test(0, 0, 0, 1);
  return out;
}

nlohmann::json OracleReport::to_json() const {
  auto pts = [](const std::vector<AffinePoint>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (auto& x : v) a.push_back({1, x[0], x[1], x[2]});
    return a;
  };
  return {{"p", p},
          {"enumerated", enumerated},
          {"brute_force", pts(brute_force)},
          {"at_infinity", at_infinity},
          {"computed", pts(computed)},
          {"notes", notes},
          {"verdict", pass ? "PASS" : "FAIL"}};
}

OracleReport cmd_oracle(const ProblemConfig& pc, std::int64_t p, bool corrupt) {
  if (p < 3 || p > 211 || !nt::is_prime_u64(static_cast<std::uint64_t>(p))) {
    throw ParseError("oracle needs an odd prime p <= 211");
  }
  OracleReport rep;
  rep.p = p;
  rep.enumerated = static_cast<std::size_t>(p * p * p + p * p + p + 1);
  std::set<AffinePoint> brute;
  for (auto& x : enumerate_projective(pc, p, corrupt)) {
    if (x[0] == 0) {
      ++rep.at_infinity;
    } else {
      brute.insert({x[1], x[2], x[3]});
    }
  }

  const Configuration cfg = pc.reduced(p);
  std::set<AffinePoint> computed;
  bool any = false;
  try {
    SolveOptions opts;
    opts.allow_degenerate = true;
    for (auto& s : solve_all(cfg, choose_radii(cfg, pc.branches), opts)) {
      const auto c = s.circle.coords();
      if (c[0].is_zero()) continue;
      if (!std::all_of(c.begin(), c.end(), [](const FieldElement& x) { return x.in_base(); })) continue;
      const Scalar inv0 = c[0].base_value().inv();
      computed.insert({(c[1].base_value() * inv0).residue(), (c[2].base_value() * inv0).residue(),
                       (c[3].base_value() * inv0).residue()});
    }
    any = true;
  } catch (const MathError& e) {
    rep.notes.push_back(std::string("solver: ") + e.what());
  }
  try {
    for (auto& pt : analyze(cfg).rational_points()) computed.insert({pt[0].residue(), pt[1].residue(), pt[2].residue()});
    any = true;
  } catch (const MathError& e) {
    rep.notes.push_back(std::string("zerodim: ") + e.what());
  }
  rep.brute_force.assign(brute.begin(), brute.end());
  rep.computed.assign(computed.begin(), computed.end());
  rep.pass = any && brute == computed;
  return rep;
}

std::string cmd_render(const ProblemConfig& pc, int width) {
  if (!pc.field.over_rationals()) throw ParseError("render needs field Q (nothing to draw over F_p)");
  if (width < 100) throw ParseError("width must be at least 100");
  const Configuration cfg = pc.configuration();
  struct Disk {
    double x, y, r;
    bool point;
    bool solution;
  };
  std::vector<Disk> disks;
  for (auto& o : cfg.objects) {
    const double r = o.is_point() ? 0.0 : std::sqrt(std::max(0.0, o.r2.base_value().q().get_d()));
    disks.push_back({o.a.base_value().q().get_d(), o.b.base_value().q().get_d(), r, o.is_point(), false});
  }
  for (auto& s : distinct_solutions(solve_all(cfg, choose_radii(cfg, pc.branches)))) {
    if (!s.real) continue;
    disks.push_back({mid(s.alpha), mid(s.beta), std::fabs(mid(s.rho)), false, true});
  }

  double x0 = disks[0].x - disks[0].r, x1 = disks[0].x + disks[0].r;
  double y0 = disks[0].y - disks[0].r, y1 = disks[0].y + disks[0].r;
  for (auto& d : disks) {
    x0 = std::min(x0, d.x - d.r);
    x1 = std::max(x1, d.x + d.r);
    y0 = std::min(y0, d.y - d.r);
    y1 = std::max(y1, d.y + d.r);
  }
  double w = x1 - x0, h = y1 - y0;
  if (w <= 0) w = 1;
  if (h <= 0) h = 1;
  x0 -= 0.1 * w;
  y0 -= 0.1 * h;
  w *= 1.2;
  h *= 1.2;
  const double span = std::max(w, h);
  const long height = std::lround(width * h / w);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"" << fixed6(x0) << " " << fixed6(-(y0 + h)) << " " << fixed6(w) << " " << fixed6(h) << "\">\n";
  os << "<g fill=\"none\" stroke-width=\"" << fixed6(span / 400) << "\">\n";
  for (auto& d : disks) {
    os << "<circle cx=\"" << fixed6(d.x) << "\" cy=\"" << fixed6(-d.y) << "\" r=\""
       << fixed6(d.point ? span / 200 : d.r) << "\" stroke=\"" << (d.solution ? "red" : "black") << "\"";
    if (d.point) os << " fill=\"black\"";
    os << "/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

Configuration random_ccc(std::mt19937_64& rng, bool square_radii) {
  for (;;) {
    std::array<InputObject, 3> o;
    for (auto& x : o) {
      const int r = uniform(rng, 1, 8);
      x = InputObject::circle(uniform(rng, -20, 20), uniform(rng, -20, 20), square_radii ? r * r : uniform(rng, 1, 40));
    }
    Configuration cfg = Configuration::over(FieldDescriptor::rationals(), o);
    if (cfg.check().ok()) return cfg;
  }
}

Configuration random_cpp(std::mt19937_64& rng) {
  for (;;) {
    const int r = uniform(rng, 1, 8);
    std::array<InputObject, 3> o{
        InputObject::circle(uniform(rng, -20, 20), uniform(rng, -20, 20), r * r),
        InputObject::point(uniform(rng, -20, 20), uniform(rng, -20, 20)),
        InputObject::point(uniform(rng, -20, 20), uniform(rng, -20, 20)),
    };
    Configuration cfg = Configuration::over(FieldDescriptor::rationals(), o);
    if (cfg.check().ok()) return cfg;
  }
}

TrialSummary theta_trials(std::uint64_t seed, int trials) {
  std::mt19937_64 rng(seed);
  TrialSummary out;
  while (out.trials < trials) {
    const Configuration cfg = random_ccc(rng);
    try {
      const DualityReport rep = duality_report(cfg, choose_radii(cfg));
      ++out.trials;
      out.matched += rep.matches_reference && rep.cube.ok() ? 1 : 0;
    } catch (const MathError& e) {
      if (e.kind() != ErrorKind::DegenerateMerge) throw;
      ++out.degenerate;
    }
  }
  return out;
}

}  // namespace apollo
