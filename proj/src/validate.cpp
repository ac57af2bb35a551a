// Parallel gyrogroup validator. Each heavy check is split by its first witness
// coordinate; per-row results are merged in row order so the witness lists are
// exactly those of the serial reference.

#include <map>

#include "gyro/finite_gyrogroup.hpp"
#include "validate_common.hpp"

namespace gyro {

namespace {

using detail::absorb;

struct PermFailures {
  std::size_t count = 0;
  std::vector<std::pair<Elem, Elem>> first;  // lexicographic, capped
};

}  // namespace

ValidationResult validateGyrogroup(const CayleyTable& t) {
  const auto n = static_cast<Elem>(t.order());
  const std::ptrdiff_t sn = n;
  ValidationResult result;
  result.checks.resize(kAxiomCheckCount);
  for (std::size_t i = 0; i < kAxiomCheckCount; ++i) result.checks[i].name = to_string(static_cast<AxiomCheck>(i));
  auto& identity = result.checks[0];
  auto& rows = result.checks[1];

  for (Elem b = 0; b < n; ++b)
    if (t.at(0, b) != b) identity.fail({b});

  {
    std::vector<CheckResult> perRow(n);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t sa = 0; sa < sn; ++sa) {
      const auto a = static_cast<Elem>(sa);
      const auto row = t.row(a);
      for (Elem b = 0; b < n; ++b)
        for (Elem c = b + 1; c < n; ++c)
          if (row[b] == row[c]) perRow[a].fail({a, b, c});
    }
    for (const auto& r : perRow) absorb(rows, r);
  }

  const auto inverse = detail::checkInverses(t, result.checks[2]);
  if (!inverse) {
    for (std::size_t i = 3; i < kAxiomCheckCount; ++i)
      result.checks[i] = CheckResult::skipped(result.checks[i].name, "inverse map is not well defined");
    return result;
  }
  const auto& inv = *inverse;
  const std::size_t nn = static_cast<std::size_t>(n) * n;

  std::vector<Elem> gyr(nn * n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t sa = 0; sa < sn; ++sa) {
    const auto a = static_cast<Elem>(sa);
    for (Elem b = 0; b < n; ++b) {
      const Elem back = inv[t.at(a, b)];
      Elem* out = gyr.data() + (static_cast<std::size_t>(a) * n + b) * n;
      for (Elem c = 0; c < n; ++c) out[c] = t.at(back, t.at(a, t.at(b, c)));
    }
  }

  // Distinct gyrations: the automorphism checks only depend on the permutation.
  std::map<std::vector<Elem>, std::size_t> ids;
  std::vector<std::size_t> permOf(nn);
  std::vector<const Elem*> distinct;
  for (std::size_t ab = 0; ab < nn; ++ab) {
    std::vector<Elem> p(gyr.begin() + static_cast<std::ptrdiff_t>(ab * n),
                        gyr.begin() + static_cast<std::ptrdiff_t>((ab + 1) * n));
    auto [it, inserted] = ids.try_emplace(std::move(p), distinct.size());
    if (inserted) distinct.push_back(gyr.data() + ab * n);
    permOf[ab] = it->second;
  }

  const std::ptrdiff_t nd = static_cast<std::ptrdiff_t>(distinct.size());
  std::vector<PermFailures> notBijective(distinct.size()), notHomomorphic(distinct.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t k = 0; k < nd; ++k) {
    const Elem* p = distinct[static_cast<std::size_t>(k)];
    auto& bij = notBijective[static_cast<std::size_t>(k)];
    auto& hom = notHomomorphic[static_cast<std::size_t>(k)];
    for (Elem c = 0; c < n; ++c)
      for (Elem d = c + 1; d < n; ++d)
        if (p[c] == p[d]) {
          ++bij.count;
          if (bij.first.size() < CheckResult::kMaxWitnesses) bij.first.emplace_back(c, d);
        }
    for (Elem u = 0; u < n; ++u)
      for (Elem v = 0; v < n; ++v)
        if (p[t.at(u, v)] != t.at(p[u], p[v])) {
          ++hom.count;
          if (hom.first.size() < CheckResult::kMaxWitnesses) hom.first.emplace_back(u, v);
        }
  }
  auto expand = [&](CheckResult& check, const std::vector<PermFailures>& failures) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        const auto& f = failures[permOf[static_cast<std::size_t>(a) * n + b]];
        if (f.count == 0) continue;
        check.status = Status::Fail;
        check.violations += f.count;
        for (const auto& [x, y] : f.first) {
          if (check.witnesses.size() >= CheckResult::kMaxWitnesses) break;
          check.witnesses.push_back({a, b, x, y});
        }
      }
  };
  expand(result.checks[3], notBijective);
  expand(result.checks[4], notHomomorphic);

  {
    std::vector<CheckResult> assoc(n), loop(n);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t sa = 0; sa < sn; ++sa) {
      const auto a = static_cast<Elem>(sa);
      for (Elem b = 0; b < n; ++b) {
        const Elem ab = t.at(a, b);
        const Elem* g = gyr.data() + (static_cast<std::size_t>(a) * n + b) * n;
        const Elem* gl = gyr.data() + (static_cast<std::size_t>(ab) * n + b) * n;
        for (Elem c = 0; c < n; ++c) {
          if (t.at(a, t.at(b, c)) != t.at(ab, g[c])) assoc[a].fail({a, b, c});
          if (gl[c] != g[c]) loop[a].fail({a, b, c});
        }
      }
    }
    for (Elem a = 0; a < n; ++a) {
      absorb(result.checks[5], assoc[a]);
      absorb(result.checks[6], loop[a]);
    }
  }

  if (allPassed(result.checks)) result.gyrogroup = detail::assembleGyrogroup(t, inv, std::move(gyr));
  return result;
}

}  // namespace gyro
