#include "fixtures.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <filesystem>
#include <numeric>

#include "gyro/coset_action.hpp"

#ifndef GYRO_TEST_DATA_DIR
#define GYRO_TEST_DATA_DIR "tests/data"
#endif

namespace fixtures {

using gyro::ActionTable;
using gyro::FiniteGyrogroup;
using gyro::FiniteGSet;
using gyro::Point;

CayleyTable cyclic(std::size_t n) {
  std::vector<Elem> e(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) e[a * n + b] = static_cast<Elem>((a + b) % n);
  return CayleyTable(n, std::move(e));
}

CayleyTable klein() { return directProduct(cyclic(2), cyclic(2)); }

namespace {

std::uint32_t powMod(std::uint32_t r, std::uint32_t e, std::uint32_t p) {
  std::uint64_t out = 1;
  for (std::uint32_t i = 0; i < e; ++i) out = out * r % p;
  return static_cast<std::uint32_t>(out);
}

struct Semidirect {
  std::uint32_t p, q, r;
  std::uint32_t size() const { return p * q; }
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const {
    const std::uint32_t a = x % p, b = x / p, c = y % p, d = y / p;
    return ((b + d) % q) * p + (a + powMod(r, b, p) * c) % p;
  }
};

Semidirect makeSemidirect(std::uint32_t p, std::uint32_t q) {
  std::uint32_t r = 2;
  while (r < p && powMod(r, q, p) != 1) ++r;
  if (p == 2) r = 1;
  return {p, q, r};
}

}  // namespace

CayleyTable semidirect(std::uint32_t p, std::uint32_t q) {
  const auto s = makeSemidirect(p, q);
  const std::uint32_t n = s.size();
  std::vector<Elem> e(static_cast<std::size_t>(n) * n);
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) e[x * n + y] = s.mul(x, y);
  return CayleyTable(n, std::move(e));
}

CayleyTable symmetric3() { return semidirect(3, 2); }
CayleyTable dihedral4() { return semidirect(4, 2); }

CayleyTable quaternion8() {
  // Index = 4 * sign + unit, unit in {1, i, j, k}.
  static constexpr std::array<std::array<int, 4>, 4> unit = {{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}};
  static constexpr std::array<std::array<int, 4>, 4> sign = {{{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}}};
  std::vector<Elem> e(64);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const int s = (x / 4 + y / 4 + sign[x % 4][y % 4]) % 2;
      e[x * 8 + y] = static_cast<Elem>(4 * s + unit[x % 4][y % 4]);
    }
  return CayleyTable(8, std::move(e));
}

CayleyTable directProduct(const CayleyTable& a, const CayleyTable& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<Elem> e(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      e[x * n + y] = static_cast<Elem>(a.at(static_cast<Elem>(x / nb), static_cast<Elem>(y / nb)) * nb +
                                       b.at(static_cast<Elem>(x % nb), static_cast<Elem>(y % nb)));
  return CayleyTable(n, std::move(e));
}

CayleyTable glauberman(std::uint32_t p, std::uint32_t q) {
  const auto s = makeSemidirect(p, q);
  const std::uint32_t n = s.size();
  auto power = [&](std::uint32_t x, std::uint32_t k) {
    std::uint32_t out = 0;
    for (std::uint32_t i = 0; i < k; ++i) out = s.mul(out, x);
    return out;
  };
  std::vector<std::uint32_t> half(n);
  for (std::uint32_t x = 0; x < n; ++x) half[x] = power(x, (n + 1) / 2);
  std::vector<Elem> e(static_cast<std::size_t>(n) * n);
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) e[x * n + y] = s.mul(s.mul(half[x], y), half[x]);
  return CayleyTable(n, std::move(e));
}

std::vector<Named> groupTables() {
  std::vector<Named> out;
  for (std::size_t n = 1; n <= 8; ++n) out.push_back({"Z" + std::to_string(n), cyclic(n)});
  out.push_back({"Klein", klein()});
  out.push_back({"S3", symmetric3()});
  out.push_back({"D4", dihedral4()});
  out.push_back({"Q8", quaternion8()});
  out.push_back({"Z2xZ4", directProduct(cyclic(2), cyclic(4))});
  out.push_back({"Z2^3", directProduct(cyclic(2), klein())});
  return out;
}

std::vector<Named> finiteFixtures() {
  auto out = groupTables();
  out.push_back({"Glauberman21", glauberman(7, 3)});
  return out;
}

FiniteGyrogroup gyrogroup(const CayleyTable& t) { return gyro::requireGyrogroup(t); }

ActionTable conjugationAction(const FiniteGyrogroup& g) {
  const std::size_t n = g.order();
  ActionTable t{n, n, std::vector<Point>(n * n)};
  for (Elem a = 0; a < n; ++a)
    for (Elem x = 0; x < n; ++x) t.entries[a * n + x] = gyro::conjugate(g, a, x);
  return t;
}

FiniteGSet randomCosetUnionAction(const FiniteGyrogroup& g, std::mt19937_64& rng, std::size_t maxComponents) {
  std::vector<gyro::Subset> usable;
  for (const auto& h : gyro::enumerateSubgyrogroups(g))
    if (gyro::cosetCriterion(g, h.members).passed()) usable.push_back(h.members);

  const std::size_t components = std::uniform_int_distribution<std::size_t>(1, maxComponents)(rng);
  std::vector<ActionTable> parts;
  std::size_t points = 0;
  for (std::size_t c = 0; c < components; ++c) {
    const auto& h = usable[std::uniform_int_distribution<std::size_t>(0, usable.size() - 1)(rng)];
    parts.push_back(*gyro::cosetActionTable(g, h));
    points += parts.back().points;
  }
  std::vector<Point> relabel(points);
  std::iota(relabel.begin(), relabel.end(), Point{0});
  std::shuffle(relabel.begin(), relabel.end(), rng);

  std::vector<std::vector<Point>> perms(g.order(), std::vector<Point>(points));
  for (Elem a = 0; a < g.order(); ++a) {
    std::size_t offset = 0;
    for (const auto& part : parts) {
      for (Point x = 0; x < part.points; ++x)
        perms[a][relabel[offset + x]] = relabel[offset + part.at(a, x)];
      offset += part.points;
    }
  }
  return gyro::actionFromHomomorphism(g, perms);
}

std::optional<FiniteGSet> rejectionSampledAction(const FiniteGyrogroup& g, std::size_t points, std::mt19937_64& rng,
                                                 std::size_t tries) {
  std::vector<Point> base(points);
  std::iota(base.begin(), base.end(), Point{0});
  for (std::size_t t = 0; t < tries; ++t) {
    std::vector<std::vector<Point>> perms(g.order(), base);
    for (Elem a = 1; a < g.order(); ++a) std::shuffle(perms[a].begin(), perms[a].end(), rng);
    try {
      return gyro::actionFromHomomorphism(g, perms);
    } catch (const gyro::PreconditionError&) {
    }
  }
  return std::nullopt;
}

std::optional<std::string> g15TablePath() {
  if (const char* env = std::getenv("GYRO_G15_TABLE"); env && *env) {
    if (std::filesystem::exists(env)) return std::string(env);
    return std::nullopt;
  }
  const std::string local = std::string(GYRO_TEST_DATA_DIR) + "/g15.gyro";
  if (std::filesystem::exists(local)) return local;
  return std::nullopt;
}

}  // namespace fixtures
