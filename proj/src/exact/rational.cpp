#include "ghal/rational.hpp"

#include <ostream>

#include "ghal/error.hpp"

namespace ghal {

const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_argument: return "InvalidArgument";
    case errc::parse_error: return "ParseError";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::non_commuting_tuple: return "NonCommutingTuple";
    case errc::invalid_cartan: return "InvalidCartan";
    case errc::parameter_orbit_mismatch: return "ParameterOrbitMismatch";
    case errc::parameter_sign: return "ParameterSign";
    case errc::non_real_parameters: return "NonRealParameters";
    case errc::unsupported_element: return "UnsupportedElement";
    case errc::ambiguous_decomposition: return "AmbiguousDecomposition";
    case errc::no_decomposition: return "NoDecomposition";
    case errc::unknown_weights: return "UnknownWeights";
    case errc::unverified_weights: return "UnverifiedWeights";
    case errc::not_invariant: return "NotInvariant";
    case errc::not_simple_image: return "NotSimpleImage";
    case errc::not_positive: return "NotPositive";
    case errc::stabilizer_condition_failed: return "StabilizerConditionFailed";
    case errc::not_irreducible: return "NotIrreducible";
    case errc::schur_violation: return "SchurViolation";
    case errc::inconsistent_scalars: return "InconsistentScalars";
    case errc::triangularity_violation: return "TriangularityViolation";
    case errc::singular: return "Singular";
    case errc::indeterminate: return "Indeterminate";
    case errc::internal_error: return "InternalError";
  }
  return "UnknownError";
}

Rational::Rational(long n, long d) : q_(n, d) {
  if (d == 0) fail(errc::invalid_argument, "rational with zero denominator");
  q_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
  if (s.empty()) fail(errc::parse_error, "empty rational literal");
  for (char c : s) {
    if (!(c == '-' || c == '+' || c == '/' || (c >= '0' && c <= '9')))
      fail(errc::parse_error, "bad character in rational literal '" + s + "'");
  }
  try {
    mpq_class q(s, 10);
    if (q.get_den() == 0) fail(errc::parse_error, "zero denominator in '" + s + "'");
    q.canonicalize();
    return Rational(q);
  } catch (const std::invalid_argument&) {
    fail(errc::parse_error, "bad rational literal '" + s + "'");
  }
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(errc::invalid_argument, "division by zero rational");
  q_ /= o.q_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) fail(errc::invalid_argument, "inverse of zero rational");
  return Rational(mpq_class(1 / q_));
}

std::string Rational::str() const { return q_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace ghal
