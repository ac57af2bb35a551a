#include "gyro/cli.hpp"

#include <CLI11.hpp>

#include <sstream>
#include <stdexcept>

#include "gyro/action.hpp"
#include "gyro/ball.hpp"
#include "gyro/coset_action.hpp"
#include "gyro/equivalence.hpp"
#include "gyro/error.hpp"
#include "gyro/finite_gyrogroup.hpp"
#include "gyro/pair.hpp"
#include "gyro/report.hpp"

namespace gyro {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string setString(const std::vector<Elem>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

Subset parseSubset(const std::string& text, std::size_t order) {
  std::vector<Elem> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      throw UsageError("--subset: '" + item + "' is not a non-negative integer");
    }
    if (used != item.size()) throw UsageError("--subset: '" + item + "' is not a non-negative integer");
    if (v >= order) throw UsageError("--subset: element " + item + " out of range");
    out.push_back(static_cast<Elem>(v));
  }
  return normalized(std::move(out));
}

Elem elementArg(long long v, std::size_t order, const char* what) {
  if (v < 0 || static_cast<std::size_t>(v) >= order)
    throw UsageError(std::string(what) + " = " + std::to_string(v) + " is not an element of the table");
  return static_cast<Elem>(v);
}

/// Loads and validates; a table that is not a gyrogroup is an analysis failure.
FiniteGyrogroup loadGyrogroup(const std::string& path, Report& report) {
  auto v = validateGyrogroup(loadCayleyTable(path));
  if (!v.gyrogroup) {
    for (const auto& c : v.checks) report.add(c);
    report.lines.push_back("gyrogroup: invalid");
    throw PreconditionError("gyrogroup", path + " is not a gyrogroup");
  }
  return *v.gyrogroup;
}

FiniteGSet loadAction(const FiniteGyrogroup& g, const std::string& path, Report& report) {
  auto v = validateAction(g, loadActionTable(path));
  if (!v.gset) {
    for (const auto& c : v.checks) report.add(c);
    report.lines.push_back("action: invalid");
    throw PreconditionError("action", path + " is not an action of the gyrogroup");
  }
  return std::move(*v.gset);
}

CheckResult flag(const char* name, bool ok) {
  CheckResult c;
  c.name = name;
  if (!ok) c.fail({});
  return c;
}

// ---------------------------------------------------------------------------

void cmdValidate(const std::string& path, Report& r) {
  auto v = validateGyrogroup(loadCayleyTable(path));
  for (const auto& c : v.checks) r.add(c);
  if (!v.gyrogroup) {
    r.lines.push_back("gyrogroup: invalid");
    r.result["valid"] = false;
    return;
  }
  const auto& g = *v.gyrogroup;
  const auto elements = g.elements();
  r.add(checkCancellationLaws(g, std::span<const Elem>(elements)));
  const auto distinct = g.distinctGyrations().size();
  r.result["valid"] = true;
  r.result["order"] = g.order();
  r.result["degenerate"] = g.isDegenerate();
  r.result["distinct_gyrations"] = distinct;
  r.lines.push_back(g.isDegenerate() ? "gyrogroup: valid (degenerate: all gyrations identity)"
                                     : "gyrogroup: valid (nondegenerate: " + std::to_string(distinct) +
                                           " distinct gyrations)");
}

void cmdGyr(const std::string& path, long long a, long long b, std::optional<long long> c, Report& r) {
  const auto g = loadGyrogroup(path, r);
  const Elem ea = elementArg(a, g.order(), "a"), eb = elementArg(b, g.order(), "b");
  const auto perm = g.gyrationPermutation(ea, eb);
  r.result["a"] = ea;
  r.result["b"] = eb;
  r.result["permutation"] = std::vector<Elem>(perm.begin(), perm.end());
  r.result["cycles"] = cycleNotation(perm);
  r.lines.push_back("gyr[" + std::to_string(ea) + "," + std::to_string(eb) + "] = " + cycleNotation(perm));
  if (c) {
    const Elem ec = elementArg(*c, g.order(), "c");
    r.result["c"] = ec;
    r.result["value"] = perm[ec];
    r.lines.push_back("gyr[" + std::to_string(ea) + "," + std::to_string(eb) + "]" + std::to_string(ec) + " = " +
                      std::to_string(perm[ec]));
  }
}

void cmdSubgyro(const std::string& path, std::size_t cap, Report& r) {
  const auto g = loadGyrogroup(path, r);
  const auto subs = enumerateSubgyrogroups(g, cap);
  CheckResult divides;
  divides.name = "order-divides";
  Json list = Json::array();
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const auto& h = subs[i];
    const bool l = isLSubgyrogroup(g, h);
    const bool crit = cosetCriterion(g, h.members).passed();
    if (g.order() % h.order() != 0) divides.fail({static_cast<std::uint32_t>(i)});
    list.push_back({{"members", h.members}, {"order", h.order()}, {"l_subgyrogroup", l}, {"coset_criterion", crit}});
    r.lines.push_back("order " + std::to_string(h.order()) + "  " + setString(h.members) + (l ? "  L" : "") +
                      (crit ? "  coset-action" : ""));
  }
  r.add(divides);
  r.result["count"] = subs.size();
  r.result["subgyrogroups"] = list;
}

void cmdCosets(const std::string& path, const std::string& subset, Report& r) {
  const auto g = loadGyrogroup(path, r);
  const auto h = subgyrogroup(g, parseSubset(subset, g.order()));
  const bool l = isLSubgyrogroup(g, h);
  const auto p = leftCosets(g, h);
  r.result["subset"] = h.members;
  r.result["l_subgyrogroup"] = l;
  r.result["index"] = p.index;
  r.result["cosets"] = p.cosets;
  r.result["representatives"] = p.representatives;
  r.lines.push_back("H = " + setString(h.members) + (l ? " (L-subgyrogroup)" : " (not an L-subgyrogroup)"));
  for (std::size_t i = 0; i < p.cosets.size(); ++i)
    r.lines.push_back(std::to_string(p.representatives[i]) + " + H = " + setString(p.cosets[i]));
  if (l) {
    r.add(flag("disjoint", p.disjoint));
    r.add(flag("covers", p.covers));
    r.add(flag("equal-sizes", p.equalSizes));
    r.add(flag("index-formula", p.indexFormula));
    r.lines.push_back(std::to_string(g.order()) + " = " + std::to_string(p.index) + " * " + std::to_string(h.order()));
  } else {
    Json overlaps = Json::array();
    for (const auto& [i, j] : p.overlaps) overlaps.push_back({i, j});
    r.result["overlaps"] = overlaps;
    r.lines.push_back(std::to_string(p.overlaps.size()) + " overlapping coset pair(s)");
  }
}

void cmdAct(const std::string& tablePath, const std::string& actionPath, Report& r) {
  const auto g = loadGyrogroup(tablePath, r);
  const auto x = loadAction(g, actionPath, r);
  const auto d = orbitsAndStabilizers(x);
  const auto os = checkOrbitStabilizer(x);
  const auto dec = orbitDecompositionEquation(x);

  r.add(flag("stabilizers-are-subgyrogroups", d.stabilizersAreSubgyrogroups));
  r.add(flag("stabilizers-are-l-subgyrogroups", d.stabilizersAreLSubgyrogroups));
  r.add(flag("stabilizers-gyration-invariant", d.stabilizersGyrationInvariant));
  r.add(flag("kernel-is-intersection", d.kernelIsIntersection));
  r.add(os.equation);
  r.add(os.cosetBijection);
  r.add(flag("orbit-decomposition", dec.holds));

  CheckResult conj;
  conj.name = "translate-stabilizer";
  for (Elem a = 0; a < g.order(); ++a)
    for (Point p = 0; p < x.size(); ++p)
      if (!stabilizerOfTranslate(x, a, p).agree()) conj.fail({a, p});
  r.add(conj);

  r.result["orbits"] = d.orbits;
  r.result["stabilizers"] = d.stabilizers;
  r.result["fixed_points"] = d.fixedPoints;
  r.result["kernel"] = buildRepresentation(x).kernel;
  for (const auto& orb : d.orbits) {
    const Point rep = orb.front();
    r.lines.push_back("orbit " + setString(orb) + "  stab(" + std::to_string(rep) + ") = " +
                      setString(d.stabilizers[rep]));
  }
  r.lines.push_back("Fix(X) = " + setString(d.fixedPoints));
  std::string eq = std::to_string(dec.points) + " = " + std::to_string(dec.fixedPoints);
  for (const auto& [rep, index] : dec.terms) eq += " + " + std::to_string(index);
  r.lines.push_back(eq);
}

void cmdBurnside(const std::string& tablePath, const std::string& actionPath, Report& r) {
  const auto g = loadGyrogroup(tablePath, r);
  const auto x = loadAction(g, actionPath, r);
  const auto b = burnsideCount(x);
  const auto dec = orbitDecompositionEquation(x);
  r.add(flag("integral", b.integral));
  r.add(flag("matches-orbit-count", b.matchesOrbitCount));
  r.add(flag("orbit-decomposition", dec.holds));
  long long total = 0;
  for (auto f : b.fixCounts) total += static_cast<long long>(f);
  r.result["count"] = {{"numerator", b.count.numerator()}, {"denominator", b.count.denominator()}};
  r.result["orbits"] = b.orbitCount;
  r.result["fix_counts"] = b.fixCounts;
  r.result["stabilizer_counts"] = b.stabilizerCounts;
  r.lines.push_back("orbits: " + std::to_string(b.orbitCount) + "  (burnside: " + std::to_string(total) + "/" +
                    std::to_string(g.order()) + ")");
  r.lines.push_back("  a  |fix(a)|");
  for (Elem a = 0; a < g.order(); ++a)
    r.lines.push_back("  " + std::to_string(a) + "  " + std::to_string(b.fixCounts[a]));
  r.lines.push_back("  x  |stab(x)|");
  for (Point p = 0; p < x.size(); ++p)
    r.lines.push_back("  " + std::to_string(p) + "  " + std::to_string(b.stabilizerCounts[p]));
  std::string eq = std::to_string(dec.points) + " = " + std::to_string(dec.fixedPoints);
  for (const auto& [rep, index] : dec.terms) eq += " + " + std::to_string(index);
  r.lines.push_back(eq);
}

void cmdClassify(const std::string& tablePath, const std::string& actionPath, Report& r) {
  const auto g = loadGyrogroup(tablePath, r);
  const auto x = loadAction(g, actionPath, r);
  const auto c = classify(x);
  r.add(flag("flags-consistent", c.consistent()));
  r.result["faithful"] = c.faithful;
  r.result["transitive"] = c.transitive;
  r.result["free"] = c.free;
  r.result["semiregular"] = c.semiregular;
  r.result["sharply_transitive"] = c.sharplyTransitive;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  r.lines.push_back(std::string("faithful: ") + yn(c.faithful));
  r.lines.push_back(std::string("transitive: ") + yn(c.transitive));
  r.lines.push_back(std::string("free: ") + yn(c.free));
  r.lines.push_back(std::string("semiregular: ") + yn(c.semiregular));
  r.lines.push_back(std::string("sharply transitive: ") + yn(c.sharplyTransitive));
}

void cmdCosetAction(const std::string& path, const std::string& subset, bool build, Report& r) {
  const auto g = loadGyrogroup(path, r);
  const auto h = subgyrogroup(g, parseSubset(subset, g.order()));
  const auto crit = cosetCriterion(g, h.members);
  r.add(crit);
  r.result["subset"] = h.members;
  r.result["criterion"] = crit.passed();
  r.lines.push_back("H = " + setString(h.members) + ": left gyroaddition " +
                    (crit.passed() ? "is a coset action" : "is not a coset action"));
  if (!build || !crit.passed()) return;
  const auto action = buildCosetAction(g, h.members);
  for (const auto& c : action.postconditions) r.add(c);
  r.result["cosets"] = action.cosets.cosets;
  r.result["action"] = action.gset.table().entries;
  r.result["points"] = action.gset.size();
  for (std::size_t i = 0; i < action.cosets.cosets.size(); ++i)
    r.lines.push_back("coset " + std::to_string(i) + ": " + setString(action.cosets.cosets[i]));
  std::istringstream table(serializeActionTable(action.gset.table()));
  for (std::string line; std::getline(table, line);) r.lines.push_back(line);
}

void cmdEquiv(const std::string& a1, const std::string& a2, const std::string& tablePath, Report& r) {
  const auto g = loadGyrogroup(tablePath, r);
  const auto x = loadAction(g, a1, r);
  const auto y = loadAction(g, a2, r);
  const auto m = matchComponents(x, y);
  r.result["equivalent"] = m.equivalent;
  Json match = Json::array();
  for (const auto& j : m.match) match.push_back(j ? Json(*j) : Json(nullptr));
  r.result["matching"] = match;
  r.result["unmatched_left"] = m.unmatchedLeft;
  r.result["unmatched_right"] = m.unmatchedRight;
  if (m.equivalence) {
    r.result["map"] = m.equivalence->map;
    r.add(flag("assembled-map-is-equivalence", isEquivalence(*m.equivalence)));
  }
  if (m.left.size() == 1 && m.right.size() == 1) {
    const auto d = areEquivalentTransitive(x, y);
    r.add(flag("agrees-with-exhaustive-search", d.agreesWithExhaustive()));
    if (d.conjugator) r.result["conjugator"] = *d.conjugator;
  }
  r.lines.push_back(std::string("equivalent: ") + (m.equivalent ? "yes" : "no"));
  for (std::size_t i = 0; i < m.match.size(); ++i)
    r.lines.push_back("component " + setString(m.left[i].points) + " -> " +
                      (m.match[i] ? setString(m.right[*m.match[i]].points) : std::string("unmatched")));
  for (std::size_t j : m.unmatchedRight) r.lines.push_back("unmatched right component " + setString(m.right[j].points));
}

void cmdBall(std::size_t dim, const std::string& variant, double eps, std::uint64_t seed, std::size_t samples,
             Report& r) {
  const BallGyrogroup g(dim, parseBallModel(variant), eps);
  const auto b = analyzeBall(g, samples, seed);
  for (const auto& c : b.axioms) r.add(c);
  r.add(b.cancellation);
  r.add(b.orthogonality);
  r.add(b.linearity);
  r.add(b.closure);
  r.result["dimension"] = dim;
  r.result["variant"] = variant;
  r.result["epsilon"] = eps;
  r.result["seed"] = seed;
  r.result["samples"] = samples;
  r.lines.push_back(std::string(to_string(g.model())) + " ball, dimension " + std::to_string(dim) + ", " +
                    std::to_string(samples) + " samples, seed " + std::to_string(seed));
}

void cmdPairs(std::uint32_t m, const std::string& variant, std::size_t samples, std::uint64_t seed, Report& r) {
  const PairGyrogroup g(parseBallModel(variant), m);
  const auto p = analyzePairs(g, samples, seed);
  for (const auto& c : p.axioms) r.add(c);
  r.add(p.cancellation);
  r.add(p.gyrationFormula);
  r.add(p.criterion);
  for (const auto& c : p.cosetChecks) r.add(c);
  r.result["m"] = m;
  r.result["variant"] = variant;
  r.result["seed"] = seed;
  r.result["samples"] = samples;
  r.result["cosets_observed"] = p.cosetsObserved;
  r.lines.push_back("pairs over the " + variant + " disc, m = " + std::to_string(m) + ", " + std::to_string(samples) +
                    " samples, seed " + std::to_string(seed));
  r.lines.push_back("cosets of B^ observed: " + std::to_string(p.cosetsObserved));
  const bool transitive = !p.cosetChecks.empty() && std::all_of(p.cosetChecks.begin(), p.cosetChecks.end(),
                                                                [](const CheckResult& c) {
                                                                  return c.name != "transitive" || c.passed();
                                                                });
  r.lines.push_back(std::string("coset action transitive: ") + (transitive ? "yes" : "no"));
}

}  // namespace

int runCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"gyrogroup and gyrogroup-action toolkit", "gyro"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--report", format, "report format")->check(CLI::IsMember({"json", "text"}));
  app.fallthrough();

  std::string table, action1, action2, subset, variant = "mobius";
  long long ea = 0, eb = 0, ec = 0;
  std::size_t cap = kDefaultEnumerationCap, dim = 2, samples = 0;
  double eps = kDefaultEpsilon;
  std::uint64_t seed = 0;
  std::uint32_t m = 6;
  bool build = false;

  auto* validate = app.add_subcommand("validate", "check the gyrogroup axioms on a Cayley table");
  validate->add_option("table", table)->required();

  auto* gyr = app.add_subcommand("gyr", "print gyr[a,b] or gyr[a,b]c");
  gyr->add_option("table", table)->required();
  gyr->add_option("a", ea)->required();
  gyr->add_option("b", eb)->required();
  auto* cOpt = gyr->add_option("c", ec);

  auto* subgyro = app.add_subcommand("subgyro", "enumerate subgyrogroups");
  subgyro->add_option("table", table)->required();
  subgyro->add_option("--cap", cap, "refuse orders above this");

  auto* cosets = app.add_subcommand("cosets", "left cosets of a subgyrogroup");
  cosets->add_option("table", table)->required();
  cosets->add_option("--subset", subset, "comma-separated members")->required();

  auto* act = app.add_subcommand("act", "orbits, stabilizers and the orbit theorems");
  auto* burnside = app.add_subcommand("burnside", "orbit count by fixed points");
  auto* classifyCmd = app.add_subcommand("classify", "action-type flags");
  for (auto* sub : {act, burnside, classifyCmd}) {
    sub->add_option("table", table)->required();
    sub->add_option("action", action1)->required();
  }

  auto* cosetAction = app.add_subcommand("coset-action", "coset criterion and left gyroaddition action");
  cosetAction->add_option("table", table)->required();
  cosetAction->add_option("--subset", subset, "comma-separated members")->required();
  cosetAction->add_flag("--build", build, "construct the action and check its postconditions");

  auto* equiv = app.add_subcommand("equiv", "equivalence of two G-sets");
  equiv->add_option("action1", action1)->required();
  equiv->add_option("action2", action2)->required();
  equiv->add_option("--table", table)->required();

  auto* ball = app.add_subcommand("ball", "sampled checks on a ball gyrogroup");
  ball->add_option("--dim", dim)->check(CLI::PositiveNumber);
  ball->add_option("--variant", variant)->check(CLI::IsMember({"mobius", "einstein"}));
  ball->add_option("--eps", eps)->check(CLI::PositiveNumber);
  ball->add_option("--seed", seed)->required();
  auto* ballSamples = ball->add_option("--samples", samples);

  auto* pairs = app.add_subcommand("pairs", "sampled checks on the pair gyrogroup and its coset action");
  pairs->add_option("--m", m)->check(CLI::PositiveNumber);
  pairs->add_option("--variant", variant)->check(CLI::IsMember({"mobius", "einstein"}));
  pairs->add_option("--seed", seed)->required();
  auto* pairSamples = pairs->add_option("--samples", samples);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Report report;
  report.command = app.get_subcommands().front()->get_name();
  int code = 0;
  try {
    if (validate->parsed()) cmdValidate(table, report);
    else if (gyr->parsed()) cmdGyr(table, ea, eb, cOpt->count() ? std::optional<long long>(ec) : std::nullopt, report);
    else if (subgyro->parsed()) cmdSubgyro(table, cap, report);
    else if (cosets->parsed()) cmdCosets(table, subset, report);
    else if (act->parsed()) cmdAct(table, action1, report);
    else if (burnside->parsed()) cmdBurnside(table, action1, report);
    else if (classifyCmd->parsed()) cmdClassify(table, action1, report);
    else if (cosetAction->parsed()) cmdCosetAction(table, subset, build, report);
    else if (equiv->parsed()) cmdEquiv(action1, action2, table, report);
    else if (ball->parsed()) cmdBall(dim, variant, eps, seed, ballSamples->count() ? samples : 1000, report);
    else if (pairs->parsed()) cmdPairs(m, variant, pairSamples->count() ? samples : 10000, seed, report);
    code = report.failed ? 1 : 0;
  } catch (const ParseError& e) {
    err << "gyro: parse error: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    err << "gyro: " << e.what() << '\n';
    return 2;
  } catch (const CarrierMismatch& e) {
    err << "gyro: " << e.what() << '\n';
    return 2;
  } catch (const PreconditionError& e) {
    err << "gyro: " << e.what();
    if (!e.witness().empty()) {
      err << " (witness";
      for (auto w : e.witness()) err << ' ' << w;
      err << ')';
    }
    err << '\n';
    report.failed = true;
    report.result["error"] = e.what();
    report.result["hypothesis"] = e.hypothesis();
    code = 1;
  } catch (const InvalidElement& e) {
    err << "gyro: " << e.what() << '\n';
    return 2;
  } catch (const NumericalError& e) {
    err << "gyro: numerical error: " << e.what() << '\n';
    return 1;
  } catch (const InvariantViolation& e) {
    err << "gyro: internal invariant violated: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "gyro: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "gyro: " << e.what() << '\n';
    return 2;
  }

  if (format == "json") report.writeJson(out);
  else report.writeText(out);
  return code;
}

}  // namespace gyro
