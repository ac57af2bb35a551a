#include "gyro/action.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gyro/error.hpp"
#include "validate_common.hpp"

namespace gyro {

namespace detail {

FiniteGSet assembleGSet(FiniteGyrogroup g, ActionTable t) { return FiniteGSet(std::move(g), std::move(t)); }

}  // namespace detail

ActionTable parseActionTable(std::string_view text) {
  const auto lines = detail::tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "empty input, expected 'action <n> <k>'");
  const auto& header = lines.front();
  if (header.tokens[0].first != "action" || header.tokens.size() != 3)
    throw ParseError(header.number, header.tokens[0].second, "expected header 'action <n> <k>'");
  const auto order = detail::parseUnsigned(header, 1);
  const auto points = detail::parseUnsigned(header, 2);
  if (order == 0) throw ParseError(header.number, header.tokens[1].second, "order must be positive");
  if (points == 0) throw ParseError(header.number, header.tokens[2].second, "point count must be positive");

  if (lines.size() - 1 != order) {
    const std::size_t at = lines.size() > order + 1 ? lines[order + 1].number : lines.back().number + 1;
    throw ParseError(at, 1,
                     "expected " + std::to_string(order) + " action rows, got " + std::to_string(lines.size() - 1));
  }
  ActionTable t{order, points, {}};
  t.entries.reserve(order * points);
  for (std::size_t r = 0; r < order; ++r) {
    const auto& line = lines[r + 1];
    if (line.tokens.size() != points)
      throw ParseError(line.number, line.tokens.back().second,
                       "row " + std::to_string(r) + " has " + std::to_string(line.tokens.size()) +
                           " entries, expected " + std::to_string(points));
    for (std::size_t c = 0; c < points; ++c) {
      const auto v = detail::parseUnsigned(line, c);
      if (v >= points)
        throw ParseError(line.number, line.tokens[c].second,
                         "point " + std::to_string(v) + " out of range 0.." + std::to_string(points - 1));
      t.entries.push_back(static_cast<Point>(v));
    }
  }
  return t;
}

ActionTable loadActionTable(const std::string& path) { return parseActionTable(detail::readFile(path)); }

std::string serializeActionTable(const ActionTable& t) {
  std::string out = "action " + std::to_string(t.order) + " " + std::to_string(t.points) + "\n";
  for (std::size_t a = 0; a < t.order; ++a) {
    for (std::size_t x = 0; x < t.points; ++x) {
      if (x) out += ' ';
      out += std::to_string(t.entries[a * t.points + x]);
    }
    out += '\n';
  }
  return out;
}

ActionValidation validateAction(const FiniteGyrogroup& g, ActionTable t) {
  if (t.order != g.order() || t.points == 0 || t.entries.size() != t.order * t.points)
    throw PreconditionError("dimensions", "action table must be " + std::to_string(g.order()) + " x k with k >= 1, got " +
                                              std::to_string(t.order) + " x " + std::to_string(t.points));
  const auto n = static_cast<Elem>(g.order());
  const auto k = static_cast<Point>(t.points);
  ActionValidation v;
  v.checks.resize(3);
  v.checks[0].name = "point-range";
  v.checks[1].name = "identity-acts-trivially";
  v.checks[2].name = "action-compatibility";

  for (Elem a = 0; a < n; ++a)
    for (Point x = 0; x < k; ++x)
      if (t.at(a, x) >= k) v.checks[0].fail({a, x});
  if (!v.checks[0].passed()) {
    v.checks[1] = CheckResult::skipped(v.checks[1].name, "table entries out of range");
    v.checks[2] = CheckResult::skipped(v.checks[2].name, "table entries out of range");
    return v;
  }
  for (Point x = 0; x < k; ++x)
    if (t.at(0, x) != x) v.checks[1].fail({x});

  std::vector<CheckResult> rows(n);
  const auto sn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t sa = 0; sa < sn; ++sa) {
    const auto a = static_cast<Elem>(sa);
    for (Elem b = 0; b < n; ++b) {
      const Elem ab = g.add(a, b);
      for (Point x = 0; x < k; ++x)
        if (t.at(a, t.at(b, x)) != t.at(ab, x)) rows[a].fail({a, b, x});
    }
  }
  for (const auto& r : rows) detail::absorb(v.checks[2], r);

  if (allPassed(v.checks)) v.gset = detail::assembleGSet(g, std::move(t));
  return v;
}

FiniteGSet requireAction(const FiniteGyrogroup& g, ActionTable t) {
  auto v = validateAction(g, std::move(t));
  if (v.gset) return std::move(*v.gset);
  for (const auto& c : v.checks)
    if (c.status == Status::Fail)
      throw PreconditionError(c.name, "table is not an action: " + c.name + " fails",
                              c.witnesses.empty() ? Witness{} : c.witnesses.front());
  throw PreconditionError("action", "table is not an action");
}

ActionTable selfActionTable(const FiniteGyrogroup& g) {
  ActionTable t{g.order(), g.order(), {}};
  const auto e = g.table().entries();
  t.entries.assign(e.begin(), e.end());
  return t;
}

ActionTable trivialActionTable(const FiniteGyrogroup& g, std::size_t points) {
  ActionTable t{g.order(), points, {}};
  t.entries.reserve(g.order() * points);
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t x = 0; x < points; ++x) t.entries.push_back(static_cast<Point>(x));
  return t;
}

// ---------------------------------------------------------------------------

namespace {

CheckResult homomorphismCheck(const FiniteGyrogroup& g, const std::vector<std::vector<Point>>& perms,
                              std::size_t points) {
  CheckResult c;
  c.name = "homomorphism";
  const auto n = static_cast<Elem>(g.order());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const auto& pab = perms[g.add(a, b)];
      for (Point x = 0; x < points; ++x)
        if (pab[x] != perms[a][perms[b][x]]) {
          c.fail({a, b});
          break;
        }
    }
  return c;
}

bool isIdentity(std::span<const Point> p) {
  for (Point x = 0; x < p.size(); ++x)
    if (p[x] != x) return false;
  return true;
}

Subset intersect(const Subset& a, const Subset& b) {
  Subset out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Representation buildRepresentation(const FiniteGSet& x) {
  Representation r;
  const auto& g = x.carrier();
  r.perms.reserve(g.order());
  for (Elem a = 0; a < g.order(); ++a) {
    const auto p = x.permutation(a);
    r.perms.emplace_back(p.begin(), p.end());
    if (isIdentity(p)) r.kernel.push_back(a);
  }
  r.homomorphism = homomorphismCheck(g, r.perms, x.size());
  return r;
}

FiniteGSet actionFromHomomorphism(const FiniteGyrogroup& g, const std::vector<std::vector<Point>>& perms) {
  if (perms.size() != g.order())
    throw PreconditionError("homomorphism", "expected one permutation per element");
  const std::size_t k = perms.empty() ? 0 : perms.front().size();
  for (Elem a = 0; a < perms.size(); ++a) {
    const auto& p = perms[a];
    std::vector<char> seen(k, 0);
    if (p.size() != k) throw PreconditionError("homomorphism", "permutations differ in length", {a});
    for (Point y : p) {
      if (y >= k || seen[y]) throw PreconditionError("homomorphism", "image is not a permutation", {a});
      seen[y] = 1;
    }
  }
  const auto hom = homomorphismCheck(g, perms, k);
  if (!hom.passed())
    throw PreconditionError("homomorphism", "assignment is not a homomorphism into Sym(X)", hom.witnesses.front());
  ActionTable t{g.order(), k, {}};
  t.entries.reserve(g.order() * k);
  for (const auto& p : perms) t.entries.insert(t.entries.end(), p.begin(), p.end());
  return requireAction(g, std::move(t));
}

// ---------------------------------------------------------------------------

Subset stabilizer(const FiniteGSet& x, Point p) {
  Subset s;
  for (Elem a = 0; a < x.carrier().order(); ++a)
    if (x.act(a, p) == p) s.push_back(a);
  return s;
}

Subset conjugateSubset(const FiniteGyrogroup& g, Elem a, const Subset& s) {
  return normalized(conjugateSet(g, a, std::span<const Elem>(s)));
}

OrbitDecomposition orbitsAndStabilizers(const FiniteGSet& x) {
  const auto& g = x.carrier();
  const auto n = static_cast<Elem>(g.order());
  const auto k = static_cast<Point>(x.size());
  OrbitDecomposition d;
  d.orbitOf.assign(k, 0);
  d.stabilizers.resize(k);

  std::vector<Subset> orbitOfPoint(k);
  std::vector<char> subOk(k, 1), lOk(k, 1), invOk(k, 1);
  const auto sk = static_cast<std::ptrdiff_t>(k);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t sp = 0; sp < sk; ++sp) {
    const auto p = static_cast<Point>(sp);
    std::vector<Point> orb;
    for (Elem a = 0; a < n; ++a) orb.push_back(x.act(a, p));
    orbitOfPoint[p] = normalized(std::move(orb));
    d.stabilizers[p] = stabilizer(x, p);
    const auto& s = d.stabilizers[p];
    subOk[p] = isSubgyrogroup(g, s);
    if (subOk[p]) lOk[p] = isLSubgyrogroup(g, Subgyrogroup{g, s});
    invOk[p] = isGyrationInvariant(g, s);
  }

  for (Point p = 0; p < k; ++p) {
    d.stabilizersAreSubgyrogroups = d.stabilizersAreSubgyrogroups && subOk[p];
    d.stabilizersAreLSubgyrogroups = d.stabilizersAreLSubgyrogroups && subOk[p] && lOk[p];
    d.stabilizersGyrationInvariant = d.stabilizersGyrationInvariant && invOk[p];
  }

  std::vector<char> assigned(k, 0);
  for (Point p = 0; p < k; ++p) {
    if (assigned[p]) continue;
    for (Point q : orbitOfPoint[p]) {
      assigned[q] = 1;
      d.orbitOf[q] = d.orbits.size();
    }
    d.orbits.push_back(orbitOfPoint[p]);
  }

  for (Point p = 0; p < k; ++p)
    if (d.stabilizers[p].size() == n) d.fixedPoints.push_back(p);
  d.fixedBy.resize(n);
  for (Elem a = 0; a < n; ++a)
    for (Point p = 0; p < k; ++p)
      if (x.act(a, p) == p) d.fixedBy[a].push_back(p);

  Subset meet = g.elements();
  for (const auto& s : d.stabilizers) meet = intersect(meet, s);
  d.kernelIsIntersection = meet == buildRepresentation(x).kernel;
  return d;
}

OrbitStabilizerReport checkOrbitStabilizer(const FiniteGSet& x) {
  const auto& g = x.carrier();
  const auto n = static_cast<Elem>(g.order());
  const auto k = static_cast<Point>(x.size());
  OrbitStabilizerReport r;
  r.equation.name = "orbit-stabilizer";
  r.cosetBijection.name = "orbit-coset-bijection";
  r.rows.resize(k);
  std::vector<CheckResult> local(k);
  const auto sk = static_cast<std::ptrdiff_t>(k);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t sp = 0; sp < sk; ++sp) {
    const auto p = static_cast<Point>(sp);
    const Subset stab = stabilizer(x, p);
    std::vector<Point> orb;
    std::vector<Subset> cosets(n);
    for (Elem a = 0; a < n; ++a) {
      orb.push_back(x.act(a, p));
      std::vector<Elem> c;
      for (Elem s : stab) c.push_back(g.add(a, s));
      cosets[a] = normalized(std::move(c));
    }
    const std::size_t orbitSize = normalized(std::move(orb)).size();
    r.rows[p] = {p, orbitSize, stab.size(), orbitSize * stab.size() == n};
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if ((x.act(a, p) == x.act(b, p)) != (cosets[a] == cosets[b])) local[p].fail({p, a, b});
  }
  for (const auto& row : r.rows)
    if (!row.holds) r.equation.fail({row.point});
  for (const auto& l : local) detail::absorb(r.cosetBijection, l);
  return r;
}

OrbitDecompositionReport orbitDecompositionEquation(const FiniteGSet& x) {
  const auto d = orbitsAndStabilizers(x);
  OrbitDecompositionReport r;
  r.points = x.size();
  r.fixedPoints = d.fixedPoints.size();
  std::size_t total = r.fixedPoints;
  bool indexConsistent = true;
  const std::size_t n = x.carrier().order();
  for (const auto& orb : d.orbits) {
    if (orb.size() == 1) continue;
    const Point rep = orb.front();
    const std::size_t s = d.stabilizers[rep].size();
    // [G : stab x] from the coset count, not from the orbit size.
    const std::size_t index = leftCosets(x.carrier(), d.stabilizers[rep]).index;
    r.terms.emplace_back(rep, index);
    total += index;
    if (index * s != n) indexConsistent = false;
  }
  r.holds = indexConsistent && total == r.points;
  return r;
}

BurnsideReport burnsideCount(const FiniteGSet& x) {
  const auto& g = x.carrier();
  const auto n = static_cast<Elem>(g.order());
  const auto k = static_cast<Point>(x.size());
  BurnsideReport r;
  r.fixCounts.assign(n, 0);
  r.stabilizerCounts.assign(k, 0);
  for (Elem a = 0; a < n; ++a)
    for (Point p = 0; p < k; ++p)
      if (x.act(a, p) == p) {
        ++r.fixCounts[a];
        ++r.stabilizerCounts[p];
      }
  const auto total = std::accumulate(r.fixCounts.begin(), r.fixCounts.end(), 0LL);
  r.count = boost::rational<long long>(total, static_cast<long long>(n));
  r.orbitCount = orbitsAndStabilizers(x).orbits.size();
  r.integral = r.count.denominator() == 1;
  r.matchesOrbitCount = r.integral && r.count.numerator() == static_cast<long long>(r.orbitCount);
  return r;
}

bool ActionClassification::consistent() const {
  if (sharplyTransitive != (transitive && free)) return false;
  if (sharplyTransitive != (transitive && semiregular)) return false;
  if (free && !semiregular) return false;
  if (semiregular && !faithful) return false;
  if (transitive && free != semiregular) return false;
  return true;
}

ActionClassification classify(const FiniteGSet& x) {
  const auto& g = x.carrier();
  const auto n = static_cast<Elem>(g.order());
  const auto k = static_cast<Point>(x.size());
  const auto d = orbitsAndStabilizers(x);
  ActionClassification c;
  c.faithful = buildRepresentation(x).kernel == Subset{0};
  c.transitive = d.orbits.size() == 1;
  c.free = std::all_of(d.stabilizers.begin(), d.stabilizers.end(), [](const Subset& s) { return s == Subset{0}; });
  c.semiregular = std::any_of(d.stabilizers.begin(), d.stabilizers.end(), [](const Subset& s) { return s == Subset{0}; });

  // For every (x, y) count the solutions a of a . x = y.
  c.sharplyTransitive = k > 0;
  for (Point p = 0; p < k && c.sharplyTransitive; ++p) {
    std::vector<std::size_t> hits(k, 0);
    for (Elem a = 0; a < n; ++a) ++hits[x.act(a, p)];
    c.sharplyTransitive = std::all_of(hits.begin(), hits.end(), [](std::size_t h) { return h == 1; });
  }
  return c;
}

TranslateStabilizer stabilizerOfTranslate(const FiniteGSet& x, Elem a, Point p) {
  return {stabilizer(x, x.act(a, p)), conjugateSubset(x.carrier(), a, stabilizer(x, p))};
}

QuotientAction faithfulQuotientAction(const FiniteGSet& x) {
  const auto& g = x.carrier();
  const auto n = static_cast<Elem>(g.order());
  const Subset kernel = buildRepresentation(x).kernel;
  if (!isGyrationInvariant(g, kernel)) throw InvariantViolation("kernel is not invariant under gyrations");
  auto cosets = leftCosets(g, kernel);
  if (!cosets.isPartition()) throw InvariantViolation("cosets of the kernel do not partition G");

  const std::size_t q = cosets.index;
  std::vector<Elem> entries(q * q);
  std::vector<char> set(q * q, 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const std::size_t i = cosets.cosetOf[a], j = cosets.cosetOf[b];
      const auto v = static_cast<Elem>(cosets.cosetOf[g.add(a, b)]);
      if (set[i * q + j] && entries[i * q + j] != v)
        throw InvariantViolation("quotient operation depends on representatives at (" + std::to_string(a) + ", " +
                                 std::to_string(b) + ")");
      entries[i * q + j] = v;
      set[i * q + j] = 1;
    }
  auto validated = validateGyrogroup(CayleyTable(q, std::move(entries)));
  if (!validated.gyrogroup) throw InvariantViolation("quotient table fails the gyrogroup axioms");
  const FiniteGyrogroup quotient = *validated.gyrogroup;

  ActionTable t{q, x.size(), std::vector<Point>(q * x.size())};
  for (Elem a = 0; a < n; ++a) {
    const std::size_t i = cosets.cosetOf[a];
    for (Point p = 0; p < x.size(); ++p) {
      if (a != cosets.representatives[i] && x.act(a, p) != x.act(cosets.representatives[i], p))
        throw InvariantViolation("quotient action depends on representatives");
      t.entries[i * x.size() + p] = x.act(a, p);
    }
  }
  auto v = validateAction(quotient, std::move(t));
  if (!v.gset) throw InvariantViolation("quotient action fails the action axioms");
  return {kernel, std::move(cosets), quotient, std::move(*v.gset)};
}

FiniteGSet restrictToInvariant(const FiniteGSet& x, const Subset& y) {
  const Subset pts = normalized(y);
  if (pts.empty()) throw PreconditionError("invariant-subset", "subset is empty");
  std::map<Point, Point> index;
  for (Point p : pts) {
    if (p >= x.size()) throw PreconditionError("invariant-subset", "point out of range", {p});
    index.emplace(p, static_cast<Point>(index.size()));
  }
  const auto n = static_cast<Elem>(x.carrier().order());
  ActionTable t{n, pts.size(), {}};
  t.entries.reserve(n * pts.size());
  for (Elem a = 0; a < n; ++a)
    for (Point p : pts) {
      const auto it = index.find(x.act(a, p));
      if (it == index.end())
        throw PreconditionError("invariant-subset", "subset is not invariant: a . y leaves Y", {a, p});
      t.entries.push_back(it->second);
    }
  return requireAction(x.carrier(), std::move(t));
}

}  // namespace gyro
