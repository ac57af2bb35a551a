#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gyro/action.hpp"
#include "gyro/cayley_table.hpp"
#include "gyro/finite_gyrogroup.hpp"

namespace fixtures {

using gyro::CayleyTable;
using gyro::Elem;

CayleyTable cyclic(std::size_t n);
CayleyTable klein();
/// Z_p semidirect Z_q with the smallest r >= 2 of multiplicative order q mod p;
/// element (a, b) is encoded as b * p + a.
CayleyTable semidirect(std::uint32_t p, std::uint32_t q);
CayleyTable symmetric3();   // Z3 x| Z2
CayleyTable dihedral4();    // Z4 x| Z2
CayleyTable quaternion8();
CayleyTable directProduct(const CayleyTable& a, const CayleyTable& b);
/// x o y = x^(1/2) y x^(1/2) on Z_p x| Z_q (odd order): a nondegenerate
/// gyrogroup.
CayleyTable glauberman(std::uint32_t p, std::uint32_t q);

struct Named {
  std::string name;
  CayleyTable table;
};

/// Every group table used by the suites: orders 1 to 8.
std::vector<Named> groupTables();
/// Groups plus the nondegenerate order-21 loop.
std::vector<Named> finiteFixtures();

gyro::FiniteGyrogroup gyrogroup(const CayleyTable& t);

/// a . x = (a + x) [-] a on G itself.
gyro::ActionTable conjugationAction(const gyro::FiniteGyrogroup& g);

/// Disjoint union of 1..maxComponents coset actions over subgyrogroups that
/// satisfy the coset criterion, relabeled by a random permutation and rebuilt
/// through actionFromHomomorphism.
gyro::FiniteGSet randomCosetUnionAction(const gyro::FiniteGyrogroup& g, std::mt19937_64& rng,
                                        std::size_t maxComponents = 3);

/// Assigns a random permutation of `points` to every element and keeps the
/// first assignment that is a homomorphism. Practical only for tiny G.
std::optional<gyro::FiniteGSet> rejectionSampledAction(const gyro::FiniteGyrogroup& g, std::size_t points,
                                                       std::mt19937_64& rng, std::size_t tries);

/// GYRO_G15_TABLE, else tests/data/g15.gyro, if either exists.
std::optional<std::string> g15TablePath();

}  // namespace fixtures
