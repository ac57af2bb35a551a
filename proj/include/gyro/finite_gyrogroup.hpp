#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gyro/cayley_table.hpp"
#include "gyro/carrier.hpp"
#include "gyro/diagnostics.hpp"

namespace gyro {

/// Sorted, duplicate-free list of elements (or points).
using Subset = std::vector<Elem>;

Subset normalized(std::vector<Elem> s);
bool contains(const Subset& s, Elem x);

class FiniteGyrogroup;

namespace detail {
/// Only the validators build carriers.
FiniteGyrogroup assembleGyrogroup(CayleyTable table, std::vector<Elem> inverse, std::vector<Elem> gyration);
}  // namespace detail

/// An unvalidated table viewed as a carrier. The inverse of a is its first
/// left inverse (b with b + a = 0), or 0 when none exists. Useful for running
/// the derived-law checks on tables that fail validation.
class TableMagma {
 public:
  using Element = Elem;

  explicit TableMagma(const CayleyTable& t);

  Elem add(Elem a, Elem b) const { return table_->at(a, b); }
  Elem zero() const { return 0; }
  Elem negate(Elem a) const { return inverse_[a]; }
  bool equal(Elem a, Elem b) const { return a == b; }
  double distance(Elem a, Elem b) const { return a == b ? 0.0 : 1.0; }
  std::size_t order() const { return table_->order(); }

 private:
  const CayleyTable* table_;
  std::vector<Elem> inverse_;
};

/// A Cayley table certified against the gyrogroup axioms, with cached inverses
/// and the full gyration table gyr[a,b]c. Immutable; copies share state.
class FiniteGyrogroup {
 public:
  using Element = Elem;

  std::size_t order() const noexcept { return data_->table.order(); }
  const CayleyTable& table() const noexcept { return data_->table; }

  Elem add(Elem a, Elem b) const noexcept { return data_->table.at(a, b); }
  Elem zero() const noexcept { return 0; }
  Elem negate(Elem a) const noexcept { return data_->inverse[a]; }
  bool equal(Elem a, Elem b) const noexcept { return a == b; }
  double distance(Elem a, Elem b) const noexcept { return a == b ? 0.0 : 1.0; }

  /// Cached gyr[a,b]c.
  Elem gyr(Elem a, Elem b, Elem c) const noexcept { return data_->gyration[index(a, b) * order() + c]; }
  /// gyr[a,b] as a permutation of 0..n-1.
  std::span<const Elem> gyrationPermutation(Elem a, Elem b) const noexcept {
    return {data_->gyration.data() + index(a, b) * order(), order()};
  }

  /// True iff every gyration is the identity (the table is a group).
  bool isDegenerate() const noexcept { return data_->degenerate; }
  /// Distinct gyration permutations, sorted.
  std::vector<std::vector<Elem>> distinctGyrations() const;

  std::vector<Elem> elements() const;
  std::string label(Elem a) const;

  bool sameCarrier(const FiniteGyrogroup& other) const {
    return data_ == other.data_ || data_->table == other.data_->table;
  }

 private:
  struct Data {
    CayleyTable table;
    std::vector<Elem> inverse;
    std::vector<Elem> gyration;
    bool degenerate = true;
  };

  explicit FiniteGyrogroup(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::size_t index(Elem a, Elem b) const noexcept { return static_cast<std::size_t>(a) * order() + b; }

  std::shared_ptr<const Data> data_;

  friend FiniteGyrogroup detail::assembleGyrogroup(CayleyTable, std::vector<Elem>, std::vector<Elem>);
};

// ---------------------------------------------------------------------------
// Validation

/// The validator's checks, in the order they run.
enum class AxiomCheck {
  Identity,            // row 0 is the identity row
  RowPermutation,      // every row is a permutation (general left cancellation)
  Inverse,             // unique two-sided inverse
  GyrationBijective,   // each gyr[a,b] is a bijection
  GyrationAutomorphism,// each gyr[a,b] respects +
  LeftGyroassociative, // a + (b + c) = (a + b) + gyr[a,b]c
  LeftLoop,            // gyr[a + b, b] = gyr[a,b]
};

inline constexpr std::size_t kAxiomCheckCount = 7;
const char* to_string(AxiomCheck c);

struct ValidationResult {
  /// One entry per AxiomCheck, in enum order.
  std::vector<CheckResult> checks;
  std::optional<FiniteGyrogroup> gyrogroup;

  bool valid() const { return gyrogroup.has_value(); }
  const CheckResult& operator[](AxiomCheck c) const { return checks[static_cast<std::size_t>(c)]; }
};

/// Exhaustive O(n^3) (+ O(#distinct gyrations * n^2)) certification. The heavy
/// checks run under OpenMP; witnesses are merged in lexicographic order so the
/// result is identical to `validateGyrogroupSerial`.
ValidationResult validateGyrogroup(const CayleyTable& t);

/// Straight-line serial reference validator, kept for testing the parallel
/// kernel. Checks automorphisms pair-by-pair in O(n^4).
ValidationResult validateGyrogroupSerial(const CayleyTable& t);

/// Validates and returns the carrier; throws PreconditionError listing the
/// first failed check otherwise.
FiniteGyrogroup requireGyrogroup(const CayleyTable& t);

// ---------------------------------------------------------------------------
// Subgyrogroups and cosets

struct Subgyrogroup {
  FiniteGyrogroup parent;
  Subset members;

  std::size_t order() const { return members.size(); }
  bool contains(Elem x) const { return gyro::contains(members, x); }
};

/// 0 in s and s closed under + and -.
bool isSubgyrogroup(const FiniteGyrogroup& g, const Subset& s);

/// Checked constructor; throws PreconditionError with a closure witness.
Subgyrogroup subgyrogroup(const FiniteGyrogroup& g, std::vector<Elem> s);

/// Smallest subgyrogroup containing `generators`.
Subset closure(const FiniteGyrogroup& g, std::span<const Elem> generators);

inline constexpr std::size_t kDefaultEnumerationCap = 64;

/// All subgyrogroups, found by closing generating sets one element at a time.
/// Sorted by (order, members). Throws PreconditionError above `maxOrder`.
std::vector<Subgyrogroup> enumerateSubgyrogroups(const FiniteGyrogroup& g,
                                                 std::size_t maxOrder = kDefaultEnumerationCap);

/// gyr[a,h](H) = H for all a in G, h in H.
bool isLSubgyrogroup(const FiniteGyrogroup& g, const Subgyrogroup& h);

/// gyr[a,b](H) = H for all a, b in G.
bool isGyrationInvariant(const FiniteGyrogroup& g, const Subset& h);

/// Image of a subset under a permutation-valued map, normalized.
Subset imageOf(std::span<const Elem> perm, const Subset& s);

struct CosetPartition {
  Subset subgroup;
  /// Distinct sets a + H, ordered by their first representative.
  std::vector<Subset> cosets;
  /// Smallest a producing each coset.
  std::vector<Elem> representatives;
  /// cosetOf[a] = index of a + H in `cosets`.
  std::vector<std::size_t> cosetOf;
  std::size_t index = 0;

  bool disjoint = true;
  bool covers = true;
  bool equalSizes = true;
  /// |G| = [G:H] |H|
  bool indexFormula = true;
  /// Pairs of distinct cosets that intersect.
  std::vector<std::pair<std::size_t, std::size_t>> overlaps;

  bool isPartition() const { return disjoint && covers && equalSizes; }
  /// Index of the coset containing x (first one, when cosets overlap).
  std::size_t containing(Elem x) const;
};

CosetPartition leftCosets(const FiniteGyrogroup& g, const Subset& h);
inline CosetPartition leftCosets(const FiniteGyrogroup& g, const Subgyrogroup& h) { return leftCosets(g, h.members); }

/// Cycle notation of a permutation of 0..n-1, fixed points omitted; "()" for
/// the identity.
std::string cycleNotation(std::span<const Elem> perm);

}  // namespace gyro
