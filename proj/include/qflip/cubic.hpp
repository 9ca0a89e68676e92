#ifndef QFLIP_CUBIC_HPP
#define QFLIP_CUBIC_HPP

// Closed-form spectra of Alice's reduced matrices for the flip family.
//
// Both reduced matrices have unit trace and diagonal 1/3, so with t = 1 - 3x
// their characteristic equations read t^3 - 3 A t + B = 0 (before the flip)
// and t^3 - 3 A t + B' = 0 (after). The trigonometric solution is
//   x_1 = (1 - 2 sqrt(A) cos(2pi/3 + angle)) / 3
//   x_2 = (1 - 2 sqrt(A) cos(angle)) / 3
//   x_3 = (1 - 2 sqrt(A) cos(2pi/3 - angle)) / 3
// with cos(3 angle) = -B / (2 A^{3/2}). The labels follow that formula and
// are not sorted: under the principal angle x_1 >= x_3 >= x_2.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qflip/bloch.hpp"
#include "qflip/linalg.hpp"

namespace qflip {

inline constexpr double kCubicBoundTol = 1e-12;
inline constexpr double kDegeneracyTol = 1e-10;
inline constexpr double kOrderingTol = 1e-12;
inline constexpr double kRegionBoundaryTol = 1e-12;

class CubicError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DegenerateOrderingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnknownPatternError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CubicCoefficients {
  double A = 0.0;       // (2a^2c^2 + |<psi|phi>|^4) / 3
  double B = 0.0;       // 2a^2c^2 |<psi|phi>|^2, before the flip
  double Bprime = 0.0;  // 2a^2c^2 Re(<phi|psi>^2), after the flip
};

/// <psi|phi> = ac + bd e^{i theta}
inline Complex overlap(const FlipParams& p) {
  return p.a() * p.c() + p.b() * p.d() * std::polar(1.0, p.theta());
}

inline CubicCoefficients cubic_coefficients(const FlipParams& p) {
  const Complex ov = overlap(p);
  const double a2c2 = p.a() * p.a() * p.c() * p.c();
  const double ov2 = std::norm(ov);
  const Complex phi_psi = std::conj(ov);
  return {(2.0 * a2c2 + ov2 * ov2) / 3.0, 2.0 * a2c2 * ov2,
          2.0 * a2c2 * (phi_psi * phi_psi).real()};
}

enum class Branch {
  Principal,  // 3*angle = arccos(...) in [0, pi]
  Reflected,  // 3*angle = 2pi - arccos(...) in [pi, 2pi]
};

/// A root triple of t^3 - 3 A t + Bval = 0 mapped back to x = (1 - t)/3.
struct CubicSpectrum {
  double A = 0.0;
  double Bval = 0.0;
  double angle = 0.0;  // the trigonometric angle; 3*angle is what regions refer to
  Branch branch = Branch::Principal;
  std::array<double, 3> labeled{};  // x_1, x_2, x_3 in formula order

  RealSpectrum sorted() const {
    return RealSpectrum(std::vector<double>(labeled.begin(), labeled.end()));
  }

  /// The same roots expressed with the other admissible angle. Replacing
  /// 3*angle by 2pi - 3*angle exchanges the labels of x_2 and x_3.
  CubicSpectrum with_branch(Branch target) const;
};

namespace detail {

inline std::array<double, 3> trig_roots(double A, double angle) {
  const double r = 2.0 * std::sqrt(A);
  constexpr double k2pi3 = 2.0 * std::numbers::pi / 3.0;
  return {(1.0 - r * std::cos(k2pi3 + angle)) / 3.0,
          (1.0 - r * std::cos(angle)) / 3.0,
          (1.0 - r * std::cos(k2pi3 - angle)) / 3.0};
}

}  // namespace detail

/// Solves the cubic for A >= 0 and |Bval| <= 2 A^{3/2}. The arccos argument
/// is clamped to [-1, 1]; A = 0 gives the triple root 1/3.
inline CubicSpectrum cubic_roots(double A, double Bval) {
  if (!(A >= 0.0)) throw CubicError("cubic_roots: A must be non-negative");
  const double bound = 2.0 * std::sqrt(A * A * A);
  if (std::abs(Bval) > bound + kCubicBoundTol) {
    throw CubicError("cubic_roots: |B| exceeds 2 A^{3/2}; roots would be complex");
  }
  CubicSpectrum s;
  s.A = A;
  s.Bval = Bval;
  if (A == 0.0) {
    s.labeled = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
    return s;
  }
  const double cos3 = std::clamp(-Bval / bound, -1.0, 1.0);
  s.angle = std::acos(cos3) / 3.0;
  s.labeled = detail::trig_roots(A, s.angle);
  return s;
}

inline CubicSpectrum CubicSpectrum::with_branch(Branch target) const {
  if (target == branch) return *this;
  CubicSpectrum out = *this;
  out.branch = target;
  out.angle = 2.0 * std::numbers::pi / 3.0 - angle;
  out.labeled = A == 0.0 ? labeled : detail::trig_roots(A, out.angle);
  return out;
}

/// Quarter of the circle containing 3*angle, using half-open intervals
/// [lower, upper).
enum class Region { Q1, Q2, Q3, Q4 };

inline std::string_view to_string(Region r) {
  switch (r) {
    case Region::Q1: return "(0,pi/2)";
    case Region::Q2: return "(pi/2,pi)";
    case Region::Q3: return "(pi,3pi/2)";
    case Region::Q4: return "(3pi/2,2pi)";
  }
  return "?";
}

struct RegionInfo {
  Region region;
  bool on_boundary;
};

inline RegionInfo region_of(double three_angle) {
  constexpr double quarter = std::numbers::pi / 2.0;
  const double q = three_angle / quarter;
  const double nearest = std::round(q);
  const bool boundary = std::abs(q - nearest) * quarter <= kRegionBoundaryTol;
  // Snap boundary hits onto the lower edge of the next interval.
  const double idx = boundary ? nearest : std::floor(q);
  const int k = std::clamp(static_cast<int>(idx), 0, 3);
  return {static_cast<Region>(k), boundary};
}

enum class RootLabel { Alpha1, Alpha2, Alpha3, Beta1, Beta2, Beta3 };

inline std::string_view to_string(RootLabel l) {
  switch (l) {
    case RootLabel::Alpha1: return "a1";
    case RootLabel::Alpha2: return "a2";
    case RootLabel::Alpha3: return "a3";
    case RootLabel::Beta1: return "b1";
    case RootLabel::Beta2: return "b2";
    case RootLabel::Beta3: return "b3";
  }
  return "?";
}

using LabelChain = std::array<RootLabel, 6>;

inline std::string chain_label(const LabelChain& chain) {
  std::string out;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) out += '>';
    out += to_string(chain[i]);
  }
  return out;
}

/// One documented case: the region of 3*angle for the initial and final
/// spectra, and the descending order the six labeled roots take there.
struct DocumentedOrdering {
  Region initial;
  Region final;
  LabelChain chain;
};

namespace detail {
using enum RootLabel;
inline constexpr LabelChain kChainMain{Alpha1, Beta1, Beta3, Alpha3, Alpha2, Beta2};
inline constexpr LabelChain kChainBothReflected{Alpha1, Beta1, Beta2, Alpha2, Alpha3, Beta3};
inline constexpr LabelChain kChainFinalReflected{Alpha1, Beta1, Beta2, Alpha3, Alpha2, Beta3};
inline constexpr LabelChain kChainInitialReflected{Alpha1, Beta1, Beta3, Alpha2, Alpha3, Beta2};
}  // namespace detail

/// The eight region cases: one for 0 < B' < B with both angles in
/// (pi/2, pi), three more for 0 < B' < B, and four for B' < 0 < B.
inline constexpr std::array<DocumentedOrdering, 8> kDocumentedOrderings{{
    {Region::Q2, Region::Q2, detail::kChainMain},
    {Region::Q3, Region::Q3, detail::kChainBothReflected},
    {Region::Q2, Region::Q3, detail::kChainFinalReflected},
    {Region::Q3, Region::Q2, detail::kChainInitialReflected},
    {Region::Q2, Region::Q1, detail::kChainMain},
    {Region::Q2, Region::Q4, detail::kChainFinalReflected},
    {Region::Q3, Region::Q1, detail::kChainInitialReflected},
    {Region::Q3, Region::Q4, detail::kChainBothReflected},
}};

inline std::optional<std::size_t> documented_case_index(Region initial, Region final) {
  for (std::size_t i = 0; i < kDocumentedOrderings.size(); ++i) {
    if (kDocumentedOrderings[i].initial == initial &&
        kDocumentedOrderings[i].final == final) {
      return i;
    }
  }
  return std::nullopt;
}

struct OrderingPattern {
  LabelChain chain;          // descending order of the six labeled roots
  Region initial_region;
  Region final_region;
  std::size_t case_index;    // index into kDocumentedOrderings
  bool on_boundary = false;  // 3*angle sat on a multiple of pi/2
  bool has_ties = false;     // some adjacent gap in the chain is within tolerance

  std::string label() const { return chain_label(chain); }
};

/// The six labeled roots sorted by value (descending), ties broken by label.
inline LabelChain observed_chain(const CubicSpectrum& init, const CubicSpectrum& fin) {
  std::array<std::pair<double, RootLabel>, 6> roots{{
      {init.labeled[0], RootLabel::Alpha1}, {init.labeled[1], RootLabel::Alpha2},
      {init.labeled[2], RootLabel::Alpha3}, {fin.labeled[0], RootLabel::Beta1},
      {fin.labeled[1], RootLabel::Beta2},   {fin.labeled[2], RootLabel::Beta3},
  }};
  std::stable_sort(roots.begin(), roots.end(),
                   [](const auto& x, const auto& y) { return x.first > y.first; });
  LabelChain out;
  for (std::size_t i = 0; i < 6; ++i) out[i] = roots[i].second;
  return out;
}

inline double labeled_value(const CubicSpectrum& init, const CubicSpectrum& fin,
                            RootLabel l) {
  const auto i = static_cast<std::size_t>(l);
  return i < 3 ? init.labeled[i] : fin.labeled[i - 3];
}

/// Locates the region pair of (3 angle_initial, 3 angle_final) and checks
/// that the six roots follow the documented chain for that pair, allowing
/// ties within kOrderingTol.
inline OrderingPattern classify_ordering(const CubicSpectrum& init,
                                         const CubicSpectrum& fin) {
  if (std::abs(init.A - fin.A) > kDegeneracyTol) {
    throw std::invalid_argument("classify_ordering: spectra must share A");
  }
  if (std::abs(init.Bval - fin.Bval) <= kDegeneracyTol) {
    throw DegenerateOrderingError(
        "classify_ordering: B == B' (great-circle case); spectra coincide");
  }
  const RegionInfo ri = region_of(3.0 * init.angle);
  const RegionInfo rf = region_of(3.0 * fin.angle);
  const auto observed = observed_chain(init, fin);
  const auto idx = documented_case_index(ri.region, rf.region);
  if (!idx) {
    std::ostringstream msg;
    msg << "region pair " << to_string(ri.region) << " x " << to_string(rf.region)
        << " has no documented ordering; observed " << chain_label(observed);
    throw UnknownPatternError(msg.str());
  }
  const LabelChain& chain = kDocumentedOrderings[*idx].chain;
  bool ties = false;
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    const double gap = labeled_value(init, fin, chain[k]) -
                       labeled_value(init, fin, chain[k + 1]);
    if (gap < -kOrderingTol) {
      std::ostringstream msg;
      msg << "region pair " << to_string(ri.region) << " x " << to_string(rf.region)
          << " expects " << chain_label(chain) << " but observed "
          << chain_label(observed);
      throw UnknownPatternError(msg.str());
    }
    ties = ties || gap <= kOrderingTol;
  }
  return {chain, ri.region, rf.region, *idx, ri.on_boundary || rf.on_boundary, ties};
}

}  // namespace qflip

#endif  // QFLIP_CUBIC_HPP
