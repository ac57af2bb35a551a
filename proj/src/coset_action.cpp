#include "gyro/coset_action.hpp"

#include <algorithm>

#include "gyro/error.hpp"
#include "validate_common.hpp"

namespace gyro {

CheckResult selfActionCheck(const FiniteGyrogroup& g) {
  CheckResult c;
  c.name = "trivial-gyrations";
  const auto n = static_cast<Elem>(g.order());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem x = 0; x < n; ++x)
        if (g.gyr(a, b, x) != x) {
          c.fail({a, b, x});
          return c;
        }
  return c;
}

CriterionReport cosetCriterion(const FiniteGyrogroup& g, const Subset& h) {
  const auto n = static_cast<Elem>(g.order());
  CriterionReport r = detail::emptyCriterionReport(h);
  std::vector<CheckResult> inv(n), disp(n);
  const auto sn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t sa = 0; sa < sn; ++sa) {
    const auto a = static_cast<Elem>(sa);
    for (Elem b = 0; b < n; ++b) {
      const auto gyr = g.gyrationPermutation(a, b);
      for (Elem x : h)
        if (!contains(h, gyr[x])) inv[a].fail({a, b, x});
      for (Elem x = 0; x < n; ++x)
        if (!contains(h, g.add(g.negate(x), gyr[x]))) disp[a].fail({a, b, x});
    }
  }
  for (Elem a = 0; a < n; ++a) {
    detail::absorb(r.gyrationInvariance, inv[a]);
    detail::absorb(r.cosetDisplacement, disp[a]);
  }
  return r;
}

std::optional<ActionTable> cosetActionTable(const FiniteGyrogroup& g, const Subset& h) {
  const auto cosets = leftCosets(g, h);
  if (!cosets.isPartition()) return std::nullopt;
  const auto n = static_cast<Elem>(g.order());
  ActionTable t{n, cosets.index, std::vector<Point>(n * cosets.index)};
  for (Elem a = 0; a < n; ++a)
    for (std::size_t i = 0; i < cosets.index; ++i) {
      const auto& coset = cosets.cosets[i];
      const auto target = cosets.cosetOf[g.add(a, coset.front())];
      for (Elem x : coset)
        if (cosets.cosetOf[g.add(a, x)] != target) return std::nullopt;
      t.entries[a * cosets.index + i] = static_cast<Point>(target);
    }
  return t;
}

namespace {

CheckResult check(const char* name) {
  CheckResult c;
  c.name = name;
  return c;
}

}  // namespace

CosetAction buildCosetAction(const FiniteGyrogroup& g, const Subset& hIn) {
  const Subset h = normalized(hIn);
  subgyrogroup(g, h);  // throws with a closure witness
  auto criterion = cosetCriterion(g, h);
  for (const CheckResult* c : {&criterion.gyrationInvariance, &criterion.cosetDisplacement})
    if (!c->passed())
      throw CriterionError(c->name, "coset criterion fails: " + c->name, c->witnesses.front());

  auto cosets = leftCosets(g, h);
  if (!cosets.isPartition()) {
    Witness w;
    if (!cosets.overlaps.empty())
      w = {static_cast<std::uint32_t>(cosets.overlaps[0].first), static_cast<std::uint32_t>(cosets.overlaps[0].second)};
    throw CriterionError("partition", "left cosets of H overlap", w);
  }

  const auto n = static_cast<Elem>(g.order());
  std::vector<CheckResult> post;

  auto wellDefined = check("well-defined");
  ActionTable t{n, cosets.index, std::vector<Point>(n * cosets.index)};
  for (Elem a = 0; a < n; ++a)
    for (std::size_t i = 0; i < cosets.index; ++i) {
      const auto& coset = cosets.cosets[i];
      const auto target = cosets.cosetOf[g.add(a, coset.front())];
      for (Elem x : coset)
        if (cosets.cosetOf[g.add(a, x)] != target) wellDefined.fail({a, coset.front(), x});
      t.entries[a * cosets.index + i] = static_cast<Point>(target);
    }
  post.push_back(wellDefined);

  auto v = validateAction(g, std::move(t));
  auto axioms = check("action-axioms");
  for (const auto& c : v.checks)
    if (!c.passed()) axioms.fail(c.witnesses.empty() ? Witness{} : c.witnesses.front());
  post.push_back(axioms);
  if (!v.gset) throw InvariantViolation("coset action fails the action axioms although the criterion holds");
  FiniteGSet gset = std::move(*v.gset);

  const auto flags = classify(gset);
  auto transitive = check("transitive");
  if (!flags.transitive) transitive.fail({});
  post.push_back(transitive);

  auto stab = check("stabilizer-is-conjugate");
  for (Elem x = 0; x < n; ++x)
    if (stabilizer(gset, static_cast<Point>(cosets.cosetOf[x])) != conjugateSubset(g, x, h)) stab.fail({x});
  post.push_back(stab);

  if (h.size() > 1) {
    auto notSemiregular = check("not-semiregular");
    if (flags.semiregular) notSemiregular.fail({});
    post.push_back(notSemiregular);
  } else {
    post.push_back(CheckResult::skipped("not-semiregular", "H = {0}"));
  }

  auto index = check("index-formula");
  if (g.order() != cosets.index * h.size()) index.fail({});
  post.push_back(index);

  for (const auto& c : post)
    if (c.status == Status::Fail) throw InvariantViolation("coset action postcondition fails: " + c.name);
  return {std::move(cosets), std::move(gset), std::move(criterion), std::move(post)};
}

CosetAction inducedActionOverSubgyrogroup(const FiniteGSet& x, const Subset& hIn) {
  const auto& g = x.carrier();
  const Subset h = normalized(hIn);
  if (!isSubgyrogroup(g, h)) throw PreconditionError("subgyrogroup", "H is not a subgyrogroup");
  for (Elem k : buildRepresentation(x).kernel)
    if (!contains(h, k)) throw PreconditionError("contains-kernel", "H does not contain the kernel", {k});
  const auto n = static_cast<Elem>(g.order());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem y : h)
        if (!contains(h, g.gyr(a, b, y)))
          throw PreconditionError("gyration-invariant", "gyr[a,b](H) is not contained in H", {a, b, y});
  try {
    return buildCosetAction(g, h);
  } catch (const CriterionError& e) {
    throw InvariantViolation(std::string("induced coset action: ") + e.what());
  }
}

}  // namespace gyro
