#include "demj/cli/commands.hpp"

#include "demj/chebyshev.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace demj::cli {

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty entry in list '" + text + "'");
    out.push_back(parse_rational(item.substr(b, e - b + 1)));
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

namespace {

RationalPoint parse_point(const std::string& text) {
  auto v = parse_rational_list(text);
  if (v.size() != 2) throw std::invalid_argument("a point needs two coordinates, got '" + text + "'");
  return {v[0], v[1]};
}

ResultEnvelope envelope(std::string command, std::string inputs) {
  ResultEnvelope e;
  e.command = std::move(command);
  e.inputs = std::move(inputs);
  e.toolkit_version = toolkit_version();
  e.timestamp = utc_timestamp();
  return e;
}

std::string points_text(const std::set<RationalPoint>& pts) {
  if (pts.empty()) return "{}";
  std::string s = "{";
  for (const auto& p : pts) s += (s.size() > 1 ? ", " : "") + to_string(p);
  return s + "}";
}

}  // namespace

CommandResult cmd_quartic(const QuarticArgs& args) {
  const SymQuartic F(parse_rational(args.a), parse_rational(args.b), parse_integer(args.alpha));
  std::optional<ECPoint> G;
  if (args.generator) {
    RationalPoint g = parse_point(*args.generator);
    G = ECPoint(g.x, g.y);
  }
  // a rank is never guessed: it comes from a generator or an explicit claim
  if (!G && !args.rank) throw std::invalid_argument("rank unknown: pass --generator for rank 1 or --rank 0");
  const int rank = args.rank.value_or(1);
  CertifyOptions opts;
  opts.min_window = args.min_window;
  DemjanenkoInput inp = prepare_input(F, G, rank, opts.tol);
  PointCertificate cert = certify_points(F, G, rank, opts);

  std::string inputs = "a=" + to_string(F.a()) + " b=" + to_string(F.b()) + " alpha=" + to_string(F.alpha()) +
                       " rank=" + std::to_string(rank);
  if (G) inputs += " generator=" + to_string(*G);
  inputs += " min_window=" + std::to_string(args.min_window);

  CommandResult r;
  r.envelope = envelope("quartic", inputs);
  json torsion = json::array();
  for (const auto& t : inp.torsion) torsion.push_back(to_json(t));
  r.envelope.payload = {{"certificate", to_json(cert)},
                        {"companion_curve", to_string(inp.E)},
                        {"torsion", torsion},
                        {"hhat_G", inp.hhat_G},
                        {"height_gap_upper", inp.height_gap_upper},
                        {"height_gap_lower", inp.height_gap_lower},
                        {"phi_gap", inp.phi_gap},
                        {"empty", cert.points.empty()}};
  r.envelope.assumptions = cert.conditional_on;

  std::ostringstream t;
  t << to_string(F) << "\ncompanion: " << to_string(inp.E) << "\nindex bound B = " << cert.index_bound
    << ", n-window = " << cert.n_window << ", enumerated |n| <= " << cert.enumerated_window << "\npoints ("
    << cert.points.size() << "): " << points_text(cert.points) << "\n";
  for (const auto& a : cert.conditional_on) t << "assumes: " << a << "\n";
  r.text = t.str();
  return r;
}

CommandResult cmd_cheb(int d, long scan_cap) {
  ChebCertificate c = chebyshev_curve_points(d, scan_cap);
  CommandResult r;
  r.envelope = envelope("cheb", "d=" + std::to_string(d) + " scan_cap=" + std::to_string(scan_cap));
  r.envelope.payload = to_json(c);
  r.envelope.assumptions = c.cert.conditional_on;
  std::ostringstream t;
  t << "X_" << d << " [" << c.case_tag << "]" << (c.proven ? "" : " (conjectural)") << "\npoints ("
    << c.cert.points.size() << "): " << points_text(c.cert.points) << "\n";
  if (c.evidence)
    t << "search |x| <= " << c.evidence->num_cap << ": " << c.evidence->inside.size() << " small, "
      << c.evidence->exceptional.size() << " exceptional\n";
  r.text = t.str();
  return r;
}

CommandResult cmd_hasse_scan(long lo, long hi, bool assume_parity, const std::optional<std::filesystem::path>& cache_dir) {
  if (lo < 3 || lo > hi) throw std::invalid_argument("hasse-scan requires 3 <= lo <= hi");
  std::optional<ScanCache> cache;
  if (cache_dir) cache.emplace(*cache_dir, "hasse-scan");
  const std::string threshold = to_string(hasse_threshold());

  CommandResult r;
  r.envelope = envelope("hasse-scan", "lo=" + std::to_string(lo) + " hi=" + std::to_string(hi) +
                                          " assume_parity=" + (assume_parity ? "true" : "false"));
  json verdicts = json::array();
  std::ostringstream t;
  bool undetermined = false;
  for (long p : primes_in_range(lo, hi)) {
    if (p % 24 != 1) continue;  // the residue class where local solvability is known; 25 mod 48 is gated per prime
    const std::string key = "p=" + std::to_string(p) + ";parity=" + (assume_parity ? "1" : "0") + ";threshold=" + threshold;
    std::optional<json> v = cache ? cache->lookup(key) : std::nullopt;
    if (!v) {
      v = to_json(hasse_candidate_verdict(p, assume_parity));
      if (cache) cache->store(key, *v);
    }
    if ((*v)["verdict"] == "undetermined" || (*v)["local_undetermined"].get<bool>()) undetermined = true;
    t << "p = " << p << ": ";
    if ((*v)["congruence_ok"].get<bool>())
      t << "W = " << (*v)["root_number"] << ", Selmer bound " << (*v)["selmer_bound"] << ", ";
    t << (*v)["verdict"].get<std::string>() << "\n";
    verdicts.push_back(*v);
  }
  r.envelope.payload = {{"lo", lo}, {"hi", hi}, {"assume_parity", assume_parity}, {"verdicts", verdicts}};
  if (assume_parity) r.envelope.assumptions.push_back("parity conjecture: (-1)^rank = W");
  if (cache) r.cache = cache->stats();
  r.exit_code = undetermined ? kExitUndetermined : kExitOk;
  r.text = t.str();
  return r;
}

CommandResult cmd_heights(const HeightsArgs& args) {
  if (args.curve.has_value() == args.quartic.has_value())
    throw std::invalid_argument("heights: give exactly one of --curve and --quartic");
  std::optional<EllipticCurve> E;
  if (args.curve) {
    auto c = parse_rational_list(*args.curve);
    if (c.size() != 3) throw std::invalid_argument("--curve expects a2,a4,a6");
    E.emplace(c[0], c[1], c[2]);
  } else {
    auto c = parse_rational_list(*args.quartic);
    if (c.size() != 2 && c.size() != 3) throw std::invalid_argument("--quartic expects a,b or a,b,alpha");
    if (c.size() == 3 && c[2].get_den() != 1) throw std::invalid_argument("alpha must be an integer");
    E.emplace(companion_curve(SymQuartic(c[0], c[1], c.size() == 3 ? BigInt(c[2].get_num()) : BigInt(1))));
  }
  RationalPoint pt = parse_point(args.point);
  ECPoint P(pt.x, pt.y);
  if (!E->contains(P)) throw std::invalid_argument("point " + to_string(P) + " is not on " + to_string(*E));

  const double hhat = canonical_height(*E, P, args.tol);
  const HeightGap gap = height_gap(*E);
  json torsion = json::array();
  for (const auto& t : torsion_subgroup(*E)) torsion.push_back(to_json(t));

  CommandResult r;
  std::ostringstream tol;
  tol << args.tol;
  r.envelope = envelope("heights", "curve=" + to_string(*E) + " point=" + to_string(P) + " tol=" + tol.str());
  r.envelope.payload = {{"curve", to_string(*E)},
                        {"point", to_json(P)},
                        {"naive_height", naive_height(P)},
                        {"canonical_height", hhat},
                        {"torsion_order", torsion_order(*E, P)},
                        {"hhat_minus_h_max", gap.hhat_minus_h},
                        {"h_minus_hhat_max", gap.h_minus_hhat},
                        {"torsion", torsion}};
  std::ostringstream t;
  t << to_string(*E) << "\nP = " << to_string(P) << "\nh(P) = " << naive_height(P) << "\nhhat(P) = " << hhat
    << "\n" << -gap.h_minus_hhat << " <= hhat - h <= " << gap.hhat_minus_h << "\n";
  r.text = t.str();
  return r;
}

CommandResult cmd_descent(long p) {
  RootNumberReport w = root_number(p);
  SelmerReport s = selmer_report(p);
  LocalSolvability loc = everywhere_locally_solvable(p);
  const bool qr = quartic_residue_criterion(p);
  CommandResult r;
  r.envelope = envelope("descent", "p=" + std::to_string(p));
  r.envelope.payload = {{"root_number", to_json(w)},
                        {"selmer", to_json(s)},
                        {"quartic_residue", qr},
                        {"local_solvability", to_json(loc)}};
  r.exit_code = (s.undetermined || loc.undetermined) ? kExitUndetermined : kExitOk;
  std::ostringstream t;
  t << "p = " << p << "\nW = " << w.W << " (W2 = " << w.W2 << ", Wp = " << w.Wp << ")\nSelmer 2-ranks " << s.s << " + "
    << s.s_dual << " - 2 = rank bound " << s.bound << (s.undetermined ? " (some place undetermined)" : "")
    << "\nx^4 - 4x^2 + 2 has a root mod p: " << (qr ? "yes" : "no")
    << "\neverywhere locally solvable: " << (loc.solvable ? "yes" : (loc.undetermined ? "undetermined" : "no")) << "\n";
  r.text = t.str();
  return r;
}

CommandResult cmd_orbit(const OrbitArgs& args) {
  std::vector<BigInt> coeffs;
  for (const auto& c : parse_rational_list(args.f)) {
    if (c.get_den() != 1) throw std::invalid_argument("--f coefficients must be integers");
    coeffs.push_back(c.get_num());
  }
  auto tw = parse_rational_list(args.twist);
  if (tw.size() != 2) throw std::invalid_argument("--twist expects u,v");
  PolyMap m{IntPoly(coeffs), tw[0], tw[1]};
  if (m.f.degree() < 2) throw std::invalid_argument("orbit: f must have degree >= 2");
  const Rational start = parse_rational(args.start);
  OrbitTail tail = orbit_tail(m, args.n, start, args.horizon);

  CommandResult r;
  std::string inputs = "f=" + to_string(m.f) + " n=" + std::to_string(args.n) + " start=" + to_string(start) +
                       " horizon=" + std::to_string(args.horizon);
  json values = json::array();
  for (const auto& v : tail.values) values.push_back(to_json(v));
  json payload{{"orbit", {{"values", values}, {"cycled", tail.cycled}}}};
  std::ostringstream t;
  t << "O_" << args.n << "(" << to_string(start) << ") = {";
  for (std::size_t i = 0; i < tail.values.size(); ++i) t << (i ? ", " : "") << to_string(tail.values[i]);
  t << "}" << (tail.cycled ? " (periodic)" : " (truncated)") << "\n";
  if (args.beta) {
    const Rational beta = parse_rational(*args.beta);
    inputs += " beta=" + to_string(beta) + " twist=" + to_string(m.u) + "+" + to_string(m.v) + "x";
    Intersection in = shifted_intersection(m, args.n, start, beta, args.horizon);
    json vals = json::array();
    for (const auto& v : in.values) vals.push_back(to_json(v));
    payload["intersection"] = {{"values", vals}, {"exact", in.exact}};
    t << "L(O_" << args.n << "(" << to_string(start) << ")) meets O_" << args.n << "(" << to_string(beta) << ") in {";
    bool first = true;
    for (const auto& v : in.values) t << (first ? "" : ", ") << to_string(v), first = false;
    t << "}" << (in.exact ? "" : " (partial)") << "\n";
  }
  if (args.preperiodic_cap) {
    inputs += " preperiodic_cap=" + std::to_string(*args.preperiodic_cap);
    json vals = json::array();
    t << "PrePer = {";
    bool first = true;
    for (const auto& v : preperiodic_points(m.f, *args.preperiodic_cap)) {
      vals.push_back(to_json(v));
      t << (first ? "" : ", ") << to_string(v);
      first = false;
    }
    t << "}\n";
    payload["preperiodic"] = vals;
  }
  r.envelope = envelope("orbit", inputs);
  r.envelope.payload = payload;
  r.text = t.str();
  return r;
}

// ---------------------------------------------------------------------------

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rational points on symmetric quartics and Chebychev curves"};
  app.set_version_flag("--version", toolkit_version());
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Print the result envelope as JSON");

  QuarticArgs qa;
  auto* quartic = app.add_subcommand("quartic", "Certify the rational points of x^4 + a x^2 + a y^2 + y^4 = b (twisted by alpha)");
  quartic->add_option("--a", qa.a, "Coefficient a")->required();
  quartic->add_option("--b", qa.b, "Coefficient b")->required();
  quartic->add_option("--alpha", qa.alpha, "Squarefree twist");
  quartic->add_option("--generator", qa.generator, "Generator of the companion curve, as x,y");
  quartic->add_option("--rank", qa.rank, "Externally certified rank (0 or 1)");
  quartic->add_option("--min-window", qa.min_window, "Enumerate at least |n| <= this");

  int cheb_d = 0;
  long scan_cap = 200;
  auto* cheb = app.add_subcommand("cheb", "Rational points of T_d(x) + T_d(y) = 1");
  cheb->add_option("--d", cheb_d, "Degree")->required();
  cheb->add_option("--scan-cap", scan_cap, "Bound on |x| for the consistency search");

  long lo = 3, hi = 500;
  bool parity = false;
  std::optional<std::string> cache_dir;
  auto* hasse = app.add_subcommand("hasse-scan", "Verdicts for primes p = 1 mod 24 in [lo, hi] (candidates need p = 25 mod 48)");
  hasse->add_option("--lo", lo, "Lower end")->required();
  hasse->add_option("--hi", hi, "Upper end")->required();
  hasse->add_flag("--assume-parity", parity, "Assume the parity conjecture");
  hasse->add_option("--cache-dir", cache_dir, "Cache directory (default $DEMJANENKO_CACHE)");

  HeightsArgs ha;
  auto* heights = app.add_subcommand("heights", "Naive and canonical heights of a point");
  heights->add_option("--curve", ha.curve, "a2,a4,a6");
  heights->add_option("--quartic", ha.quartic, "a,b[,alpha]: use the companion curve");
  heights->add_option("--point", ha.point, "x,y")->required();
  heights->add_option("--tol", ha.tol, "Absolute accuracy");

  long descent_p = 0;
  auto* descent = app.add_subcommand("descent", "Root number, 2-isogeny Selmer bound and local solvability for F^(p)");
  descent->add_option("--p", descent_p, "Odd prime")->required();

  OrbitArgs oa;
  auto* orbit = app.add_subcommand("orbit", "Orbits, shifted intersections and preperiodic points");
  orbit->add_option("--f", oa.f, "Coefficients, constant term first");
  orbit->add_option("--n", oa.n, "Skip the first n iterates");
  orbit->add_option("--start", oa.start, "Starting point");
  orbit->add_option("--horizon", oa.horizon, "Maximum number of iterates");
  orbit->add_option("--beta", oa.beta, "Second starting point for L(O(start)) meets O(beta)");
  orbit->add_option("--twist", oa.twist, "L(x) = u + v x as u,v");
  orbit->add_option("--preperiodic-cap", oa.preperiodic_cap, "List preperiodic points with |x| <= cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitPrecondition;
  }

  auto fail = [&](const char* kind, const std::exception& e, int code) {
    err << "error: " << e.what() << "\n";
    if (as_json) out << json{{"error", {{"type", kind}, {"message", e.what()}}}}.dump(2) << "\n";
    return code;
  };
  try {
    CommandResult r;
    if (*quartic) r = cmd_quartic(qa);
    else if (*cheb) r = cmd_cheb(cheb_d, scan_cap);
    else if (*hasse) r = cmd_hasse_scan(lo, hi, parity, resolve_cache_dir(cache_dir));
    else if (*heights) r = cmd_heights(ha);
    else if (*descent) r = cmd_descent(descent_p);
    else if (*orbit) r = cmd_orbit(oa);
    if (as_json)
      out << to_json(r.envelope).dump(2) << "\n";
    else
      out << r.text;
    if (r.cache)
      err << "cache: " << r.cache->hits << " hits, " << r.cache->misses << " misses, " << r.cache->corrupted
          << " corrupted\n";
    return r.exit_code;
  } catch (const std::invalid_argument& e) {
    return fail("precondition", e, kExitPrecondition);
  } catch (const std::domain_error& e) {
    return fail("precondition", e, kExitPrecondition);
  } catch (const std::runtime_error& e) {
    return fail("runtime", e, kExitInternal);
  } catch (const std::exception& e) {
    return fail("internal", e, kExitInternal);
  }
}

}  // namespace demj::cli
