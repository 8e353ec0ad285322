#include "qzb/quaternion.hpp"

#include <algorithm>
#include <numbers>
#include <ostream>
#include <sstream>

#include "qzb/error.hpp"

namespace qzb {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroDivision: return "ZeroDivision";
    case ErrorCode::DegenerateReal: return "DegenerateReal";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::SideMismatch: return "SideMismatch";
    case ErrorCode::SymmetrizationNotReal: return "SymmetrizationNotReal";
    case ErrorCode::NonPositiveScale: return "NonPositiveScale";
    case ErrorCode::ZeroLeading: return "ZeroLeading";
    case ErrorCode::NonPositiveDiagonal: return "NonPositiveDiagonal";
    case ErrorCode::BadIndices: return "BadIndices";
    case ErrorCode::DegenerateAllZero: return "DegenerateAllZero";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::OracleInconsistent: return "OracleInconsistent";
    case ErrorCode::SpecInvalid: return "SpecInvalid";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

namespace {

double scaled_norm(double a, double b, double c, double d) {
  const double m = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
  if (m == 0.0 || !std::isfinite(m)) return m;
  if (m > 1e-150 && m < 1e150) return std::sqrt(a * a + b * b + c * c + d * d);
  a /= m;
  b /= m;
  c /= m;
  d /= m;
  return m * std::sqrt(a * a + b * b + c * c + d * d);
}

}  // namespace

double modulus(const Quaternion& q) { return scaled_norm(q.w, q.x, q.y, q.z); }

double imag_modulus(const Quaternion& q) { return scaled_norm(0.0, q.x, q.y, q.z); }

bool is_finite(const Quaternion& q) {
  return std::isfinite(q.w) && std::isfinite(q.x) && std::isfinite(q.y) && std::isfinite(q.z);
}

Quaternion inverse(const Quaternion& q) {
  const double m = modulus(q);
  if (!(m >= kInverseThreshold)) {
    std::ostringstream os;
    os << "cannot invert quaternion " << q << " of modulus " << m;
    throw Error(ErrorCode::ZeroDivision, os.str());
  }
  // Divide twice by m rather than once by m^2 so |q| near 1e-300 stays representable.
  return (conj(q) / m) / m;
}

double angle(const Quaternion& a, const Quaternion& b) {
  const double ma = modulus(a);
  const double mb = modulus(b);
  if (ma == 0.0 || mb == 0.0) {
    throw Error(ErrorCode::ZeroDivision, "angle with a zero quaternion is undefined");
  }
  // 2 atan2(|u - v|, |u + v|) equals arccos(u.v) for unit u, v, and keeps
  // full precision near 0 and pi where arccos loses half the digits.
  const Quaternion u = a / ma, v = b / mb;
  return 2.0 * std::atan2(modulus(u - v), modulus(u + v));
}

Quaternion imaginary_unit(const Quaternion& q) {
  const double im = imag_modulus(q);
  if (im < 1e-14 * std::max(1.0, modulus(q))) {
    std::ostringstream os;
    os << q << " is real to working precision";
    throw Error(ErrorCode::DegenerateReal, os.str());
  }
  return q.imag() / im;
}

double chord_bound(const Quaternion& q1, const Quaternion& q2, double theta) {
  constexpr double kSlack = 1e-12;
  if (!(theta >= 0.0 && theta <= std::numbers::pi / 2 + kSlack)) {
    throw Error(ErrorCode::HypothesisViolated, "theta must lie in [0, pi/2]");
  }
  const double m1 = modulus(q1);
  const double m2 = modulus(q2);
  if (m1 > m2 * (1.0 + kSlack)) {
    throw Error(ErrorCode::HypothesisViolated, "requires |q1| <= |q2|");
  }
  if (m1 > 0.0 && m2 > 0.0 && angle(q1, q2) > 2.0 * theta + kSlack) {
    throw Error(ErrorCode::HypothesisViolated, "requires angle(q1, q2) <= 2 theta");
  }
  return (m2 - m1) * std::cos(theta) + (m2 + m1) * std::sin(theta);
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '[' << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ']';
}

}  // namespace qzb
