#include "qtors/linalg.hpp"

#include <limits>

namespace qtors {

namespace {

std::int64_t to_int(const Rational& x) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(x) != 1) throw std::domain_error("entry is not an integer: " + x.str());
  const auto num = numerator(x);
  if (num > std::numeric_limits<std::int64_t>::max() ||
      num < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("entry does not fit in 64 bits: " + x.str());
  return num.convert_to<std::int64_t>();
}

}  // namespace

IntMatrix to_int_matrix(const RationalMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = to_int(m(i, j));
  return out;
}

RationalMatrix to_rational_matrix(const IntMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

IntVector to_int_vector(const RationalVector& v) {
  IntVector out(v.size());
  for (Index i = 0; i < v.size(); ++i) out(i) = to_int(v(i));
  return out;
}

RationalVector to_rational_vector(const IntVector& v) {
  RationalVector out(v.size());
  for (Index i = 0; i < v.size(); ++i) out(i) = Rational(v(i));
  return out;
}

}  // namespace qtors
