#pragma once

// Generic gyrogroup algebra shared by every concrete carrier.
//
// A carrier supplies the binary operation, the identity, the inverse and its
// own notion of element equality. Everything else (gyrations, coaddition,
// conjugation) is derived here from the gyrator identity
//     gyr[a,b]c = -(a + b) + (a + (b + c))
// so that no carrier can disagree with it.

#include <array>
#include <concepts>
#include <cstddef>
#include <exception>
#include <span>
#include <utility>
#include <vector>

#include "gyro/diagnostics.hpp"

namespace gyro {

template <class C>
concept GyrogroupCarrier = requires(const C& g, const typename C::Element& a, const typename C::Element& b) {
  typename C::Element;
  { g.add(a, b) } -> std::convertible_to<typename C::Element>;
  { g.zero() } -> std::convertible_to<typename C::Element>;
  { g.negate(a) } -> std::convertible_to<typename C::Element>;
  { g.equal(a, b) } -> std::convertible_to<bool>;
  { g.distance(a, b) } -> std::convertible_to<double>;
};

template <GyrogroupCarrier C>
using ElementOf = typename C::Element;

template <GyrogroupCarrier C>
ElementOf<C> gyration(const C& g, const ElementOf<C>& a, const ElementOf<C>& b, const ElementOf<C>& c) {
  return g.add(g.negate(g.add(a, b)), g.add(a, g.add(b, c)));
}

/// a [+] b = a + gyr[a, -b]b
template <GyrogroupCarrier C>
ElementOf<C> coaddition(const C& g, const ElementOf<C>& a, const ElementOf<C>& b) {
  return g.add(a, gyration(g, a, g.negate(b), b));
}

/// a [-] b = a [+] (-b)
template <GyrogroupCarrier C>
ElementOf<C> cominus(const C& g, const ElementOf<C>& a, const ElementOf<C>& b) {
  return coaddition(g, a, g.negate(b));
}

/// Conjugate of b by a: (a + b) [-] a.
template <GyrogroupCarrier C>
ElementOf<C> conjugate(const C& g, const ElementOf<C>& a, const ElementOf<C>& b) {
  return cominus(g, g.add(a, b), a);
}

template <GyrogroupCarrier C>
std::vector<ElementOf<C>> conjugateSet(const C& g, const ElementOf<C>& a, std::span<const ElementOf<C>> subset) {
  std::vector<ElementOf<C>> out;
  out.reserve(subset.size());
  for (const auto& b : subset) out.push_back(conjugate(g, a, b));
  return out;
}

/// The map c -> gyr[a,b]c, bound to its generators.
template <GyrogroupCarrier C>
class GyrationMap {
 public:
  using Element = ElementOf<C>;

  GyrationMap(const C& carrier, Element a, Element b) : carrier_(&carrier), a_(std::move(a)), b_(std::move(b)) {}

  Element operator()(const Element& c) const { return gyration(*carrier_, a_, b_, c); }
  Element apply(const Element& c) const { return (*this)(c); }

  const Element& a() const { return a_; }
  const Element& b() const { return b_; }

 private:
  const C* carrier_;
  Element a_;
  Element b_;
};

// ---------------------------------------------------------------------------
// Cancellation laws

enum class CancellationLaw : std::size_t { GeneralLeft = 0, Left = 1, RightI = 2, RightII = 3 };

inline constexpr std::array<const char*, 4> kCancellationLawNames = {
    "general-left-cancellation", "left-cancellation", "right-cancellation-I", "right-cancellation-II"};

/// Witnesses are indices into the sample list handed to the checker. For a
/// finite carrier checked over its full element list they coincide with the
/// elements themselves.
struct CancellationReport {
  std::array<CheckResult, 4> laws;
  std::array<double, 4> maxResidual{};

  const CheckResult& operator[](CancellationLaw law) const { return laws[static_cast<std::size_t>(law)]; }
  bool allPassed() const {
    for (const auto& l : laws)
      if (!l.passed()) return false;
    return true;
  }
};

namespace detail {

inline CancellationReport emptyCancellationReport() {
  CancellationReport r;
  for (std::size_t i = 0; i < 4; ++i) r.laws[i].name = kCancellationLawNames[i];
  return r;
}

template <GyrogroupCarrier C>
void checkPairLaws(const C& g, const ElementOf<C>& a, const ElementOf<C>& b, Witness w, CancellationReport& r) {
  auto record = [&](CancellationLaw law, const ElementOf<C>& lhs, const ElementOf<C>& rhs) {
    const auto i = static_cast<std::size_t>(law);
    const double d = g.distance(lhs, rhs);
    if (!(d <= r.maxResidual[i])) r.maxResidual[i] = d;
    if (!g.equal(lhs, rhs)) r.laws[i].fail(w);
  };
  // -a + (a + b) = b
  record(CancellationLaw::Left, g.add(g.negate(a), g.add(a, b)), b);
  // (b - a) [+] a = b
  record(CancellationLaw::RightI, coaddition(g, g.add(b, g.negate(a)), a), b);
  // (b [-] a) + a = b
  record(CancellationLaw::RightII, g.add(cominus(g, b, a), a), b);
}

}  // namespace detail

/// Exhaustive check over every pair (laws ii-iv) and every triple (law i) of
/// `elements`.
template <GyrogroupCarrier C>
CancellationReport checkCancellationLaws(const C& g, std::span<const ElementOf<C>> elements) {
  auto r = detail::emptyCancellationReport();
  const auto n = static_cast<std::uint32_t>(elements.size());
  for (std::uint32_t i = 0; i < n; ++i) {
    std::vector<ElementOf<C>> row;
    row.reserve(n);
    for (std::uint32_t j = 0; j < n; ++j) row.push_back(g.add(elements[i], elements[j]));
    for (std::uint32_t j = 0; j < n; ++j)
      for (std::uint32_t k = 0; k < n; ++k)
        if (j != k && g.equal(row[j], row[k]) && !g.equal(elements[j], elements[k])) r.laws[0].fail({i, j, k});
  }
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) detail::checkPairLaws(g, elements[i], elements[j], {i, j}, r);
  return r;
}

/// Sampled check over explicit pairs (a, b). Law (i) is exercised on
/// (a, b, c) with c taken from the following pair.
template <GyrogroupCarrier C>
CancellationReport checkCancellationLaws(const C& g, std::span<const std::pair<ElementOf<C>, ElementOf<C>>> pairs) {
  auto r = detail::emptyCancellationReport();
  const auto n = static_cast<std::uint32_t>(pairs.size());
  for (std::uint32_t k = 0; k < n; ++k) {
    const auto& [a, b] = pairs[k];
    const auto& c = pairs[(k + 1) % n].second;
    if (g.equal(g.add(a, b), g.add(a, c)) && !g.equal(b, c)) r.laws[0].fail({k});
    detail::checkPairLaws(g, a, b, {k}, r);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Sampled axiom suite

struct AxiomTolerances {
  double equality = 1e-9;
  double automorphism = 1e-8;
};

template <class E>
using Triple = std::array<E, 3>;

/// Residuals of the gyrogroup axioms over sampled triples (a, b, c):
///   a + (b + c) vs (a + b) + gyr[a,b]c
///   gyr[a + b, b]c vs gyr[a,b]c
///   -a + (a + b) vs b,   -a + a vs 0,   a + (-a) vs 0
///   gyr[a,b](c + a) vs gyr[a,b]c + gyr[a,b]a,   gyr[a,b]0 vs 0
/// Each triple is independent; the loop runs under OpenMP and the maxima are
/// reduced in index order.
template <GyrogroupCarrier C>
std::vector<ResidualCheck> checkAxiomsSampled(const C& g, std::span<const Triple<ElementOf<C>>> triples,
                                              AxiomTolerances tol = {}) {
  enum { kAssoc, kLoop, kCancel, kInverse, kHom, kFix, kCount };
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(triples.size());
  std::vector<std::array<double, kCount>> residual(triples.size());
  std::vector<std::exception_ptr> errors(triples.size());

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      const auto& [a, b, c] = triples[static_cast<std::size_t>(i)];
      const auto ab = g.add(a, b);
      const auto gc = gyration(g, a, b, c);
      auto& out = residual[static_cast<std::size_t>(i)];
      out[kAssoc] = g.distance(g.add(a, g.add(b, c)), g.add(ab, gc));
      out[kLoop] = g.distance(gyration(g, ab, b, c), gc);
      out[kCancel] = g.distance(g.add(g.negate(a), ab), b);
      out[kInverse] = std::max(g.distance(g.add(g.negate(a), a), g.zero()), g.distance(g.add(a, g.negate(a)), g.zero()));
      out[kHom] = g.distance(gyration(g, a, b, g.add(c, a)), g.add(gc, gyration(g, a, b, a)));
      out[kFix] = g.distance(gyration(g, a, b, g.zero()), g.zero());
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<ResidualCheck> checks = {
      {"left-gyroassociative-law", 0.0, tol.equality, 0}, {"left-loop-property", 0.0, tol.equality, 0},
      {"left-cancellation", 0.0, tol.equality, 0},        {"two-sided-inverse", 0.0, tol.equality, 0},
      {"gyration-respects-addition", 0.0, tol.automorphism, 0}, {"gyration-fixes-identity", 0.0, tol.equality, 0},
  };
  for (const auto& row : residual)
    for (std::size_t k = 0; k < kCount; ++k) checks[k].observe(row[k]);
  return checks;
}

}  // namespace gyro
