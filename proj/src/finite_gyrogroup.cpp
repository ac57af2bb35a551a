#include "gyro/finite_gyrogroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "gyro/error.hpp"

namespace gyro {

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

const char* to_string(AxiomCheck c) {
  switch (c) {
    case AxiomCheck::Identity: return "identity-row";
    case AxiomCheck::RowPermutation: return "row-permutation";
    case AxiomCheck::Inverse: return "two-sided-inverse";
    case AxiomCheck::GyrationBijective: return "gyration-bijective";
    case AxiomCheck::GyrationAutomorphism: return "gyration-automorphism";
    case AxiomCheck::LeftGyroassociative: return "left-gyroassociative-law";
    case AxiomCheck::LeftLoop: return "left-loop-property";
  }
  return "?";
}

Subset normalized(std::vector<Elem> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool contains(const Subset& s, Elem x) { return std::binary_search(s.begin(), s.end(), x); }

TableMagma::TableMagma(const CayleyTable& t) : table_(&t), inverse_(t.order(), 0) {
  const auto n = static_cast<Elem>(t.order());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (t.at(b, a) == 0) {
        inverse_[a] = b;
        break;
      }
}

namespace detail {

FiniteGyrogroup assembleGyrogroup(CayleyTable table, std::vector<Elem> inverse, std::vector<Elem> gyration) {
  auto d = std::make_shared<FiniteGyrogroup::Data>();
  const std::size_t n = table.order();
  d->table = std::move(table);
  d->inverse = std::move(inverse);
  d->gyration = std::move(gyration);
  for (std::size_t i = 0; i < d->gyration.size(); ++i)
    if (d->gyration[i] != i % n) {
      d->degenerate = false;
      break;
    }
  return FiniteGyrogroup(std::move(d));
}

}  // namespace detail

std::vector<std::vector<Elem>> FiniteGyrogroup::distinctGyrations() const {
  std::set<std::vector<Elem>> seen;
  const auto n = static_cast<Elem>(order());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const auto p = gyrationPermutation(a, b);
      seen.emplace(p.begin(), p.end());
    }
  return {seen.begin(), seen.end()};
}

std::vector<Elem> FiniteGyrogroup::elements() const {
  std::vector<Elem> e(order());
  for (Elem i = 0; i < e.size(); ++i) e[i] = i;
  return e;
}

std::string FiniteGyrogroup::label(Elem a) const {
  const auto& l = table().labels();
  return l.empty() ? std::to_string(a) : l[a];
}

FiniteGyrogroup requireGyrogroup(const CayleyTable& t) {
  auto r = validateGyrogroup(t);
  if (r.gyrogroup) return *r.gyrogroup;
  for (const auto& c : r.checks)
    if (c.status == Status::Fail)
      throw PreconditionError(c.name, "table is not a gyrogroup: " + c.name + " fails",
                              c.witnesses.empty() ? Witness{} : c.witnesses.front());
  throw PreconditionError("gyrogroup", "table is not a gyrogroup");
}

bool isSubgyrogroup(const FiniteGyrogroup& g, const Subset& s) {
  if (!contains(s, 0)) return false;
  for (Elem a : s) {
    if (a >= g.order() || !contains(s, g.negate(a))) return false;
    for (Elem b : s)
      if (!contains(s, g.add(a, b))) return false;
  }
  return true;
}

Subgyrogroup subgyrogroup(const FiniteGyrogroup& g, std::vector<Elem> s) {
  auto members = normalized(std::move(s));
  if (!contains(members, 0)) throw PreconditionError("subgyrogroup", "subset does not contain 0");
  for (Elem a : members) {
    if (a >= g.order()) throw PreconditionError("subgyrogroup", "element out of range", {a});
    if (!contains(members, g.negate(a)))
      throw PreconditionError("subgyrogroup", "subset is not closed under inverse", {a});
    for (Elem b : members)
      if (!contains(members, g.add(a, b)))
        throw PreconditionError("subgyrogroup", "subset is not closed under addition", {a, b});
  }
  return {g, std::move(members)};
}

Subset closure(const FiniteGyrogroup& g, std::span<const Elem> generators) {
  std::vector<char> in(g.order(), 0);
  std::vector<Elem> members{0};
  in[0] = 1;
  auto push = [&](Elem x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
    }
  };
  for (Elem x : generators) push(x);
  // Saturate: every new member is combined with every existing one.
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Elem a = members[i];
    push(g.negate(a));
    for (std::size_t j = 0; j <= i; ++j) {
      push(g.add(a, members[j]));
      push(g.add(members[j], a));
    }
  }
  return normalized(std::move(members));
}

std::vector<Subgyrogroup> enumerateSubgyrogroups(const FiniteGyrogroup& g, std::size_t maxOrder) {
  if (g.order() > maxOrder)
    throw PreconditionError("order-cap", "subgyrogroup enumeration refused: order " + std::to_string(g.order()) +
                                             " exceeds cap " + std::to_string(maxOrder));
  std::set<Subset> found;
  std::deque<Subset> queue;
  Subset trivial{0};
  found.insert(trivial);
  queue.push_back(trivial);
  while (!queue.empty()) {
    const Subset s = std::move(queue.front());
    queue.pop_front();
    for (Elem x = 0; x < g.order(); ++x) {
      if (contains(s, x)) continue;
      std::vector<Elem> gens = s;
      gens.push_back(x);
      auto next = closure(g, gens);
      if (found.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<Subgyrogroup> out;
  for (const auto& s : found) out.push_back({g, s});
  std::stable_sort(out.begin(), out.end(), [](const Subgyrogroup& a, const Subgyrogroup& b) {
    return a.order() != b.order() ? a.order() < b.order() : a.members < b.members;
  });
  return out;
}

Subset imageOf(std::span<const Elem> perm, const Subset& s) {
  std::vector<Elem> out;
  out.reserve(s.size());
  for (Elem x : s) out.push_back(perm[x]);
  return normalized(std::move(out));
}

bool isLSubgyrogroup(const FiniteGyrogroup& g, const Subgyrogroup& h) {
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem x : h.members)
      if (imageOf(g.gyrationPermutation(a, x), h.members) != h.members) return false;
  return true;
}

bool isGyrationInvariant(const FiniteGyrogroup& g, const Subset& h) {
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      if (imageOf(g.gyrationPermutation(a, b), h) != h) return false;
  return true;
}

std::size_t CosetPartition::containing(Elem x) const {
  for (std::size_t i = 0; i < cosets.size(); ++i)
    if (contains(cosets[i], x)) return i;
  return cosets.size();
}

CosetPartition leftCosets(const FiniteGyrogroup& g, const Subset& h) {
  CosetPartition p;
  p.subgroup = h;
  const auto n = static_cast<Elem>(g.order());
  p.cosetOf.resize(n);
  std::map<Subset, std::size_t> index;
  for (Elem a = 0; a < n; ++a) {
    std::vector<Elem> c;
    c.reserve(h.size());
    for (Elem x : h) c.push_back(g.add(a, x));
    auto coset = normalized(std::move(c));
    auto [it, inserted] = index.try_emplace(coset, p.cosets.size());
    if (inserted) {
      p.cosets.push_back(std::move(coset));
      p.representatives.push_back(a);
    }
    p.cosetOf[a] = it->second;
  }
  p.index = p.cosets.size();

  std::vector<int> hits(n, 0);
  for (const auto& c : p.cosets) {
    if (c.size() != h.size()) p.equalSizes = false;
    for (Elem x : c) ++hits[x];
  }
  for (Elem x = 0; x < n; ++x) {
    if (hits[x] == 0) p.covers = false;
    if (hits[x] > 1) p.disjoint = false;
  }
  if (!p.disjoint)
    for (std::size_t i = 0; i < p.cosets.size(); ++i)
      for (std::size_t j = i + 1; j < p.cosets.size(); ++j) {
        Subset common;
        std::set_intersection(p.cosets[i].begin(), p.cosets[i].end(), p.cosets[j].begin(), p.cosets[j].end(),
                              std::back_inserter(common));
        if (!common.empty()) p.overlaps.emplace_back(i, j);
      }
  p.indexFormula = g.order() == p.index * h.size();
  return p;
}

std::string cycleNotation(std::span<const Elem> perm) {
  std::ostringstream out;
  std::vector<char> seen(perm.size(), 0);
  bool any = false;
  for (Elem start = 0; start < perm.size(); ++start) {
    if (seen[start] || perm[start] == start) continue;
    any = true;
    out << '(';
    Elem x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = 1;
      if (!first) out << ' ';
      out << x;
      first = false;
      x = perm[x];
    }
    out << ')';
  }
  if (!any) out << "()";
  return out.str();
}

}  // namespace gyro
