#include "iqh/scalar.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <sstream>

namespace iqh {

namespace {

using BigInt = boost::multiprecision::cpp_int;

BigInt integer_from(std::string_view text) {
  if (text.empty()) throw DataError("empty integer in rational literal");
  std::size_t start = (text[0] == '+' || text[0] == '-') ? 1 : 0;
  if (start == text.size()) throw DataError("sign without digits in rational literal");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw DataError("invalid character in rational literal: '" + std::string(text) + "'");
    }
  }
  return BigInt(std::string(text));
}

}  // namespace

Rational rational_from_string(std::string_view text) {
  std::size_t begin = text.find_first_not_of(" \t");
  std::size_t end = text.find_last_not_of(" \t");
  if (begin == std::string_view::npos) throw DataError("empty rational literal");
  text = text.substr(begin, end - begin + 1);

  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(integer_from(text));
  }
  BigInt num = integer_from(text.substr(0, slash));
  BigInt den = integer_from(text.substr(slash + 1));
  if (den == 0) throw DataError("zero denominator in rational literal");
  return Rational(num, den);
}

std::string to_string(const Rational& r) { return r.str(); }

double to_double(const Rational& r) { return r.convert_to<double>(); }

Complex& Complex::operator/=(const Complex& o) {
  Rational n = o.norm_sq();
  if (n == 0) throw DataError("division by zero complex scalar");
  Rational r = (re * o.re + im * o.im) / n;
  im = (im * o.re - re * o.im) / n;
  re = std::move(r);
  return *this;
}

std::string to_string(const Complex& z) {
  if (z.im == 0) return z.re.str();
  std::ostringstream out;
  out << "(" << z.re.str() << (z.im < 0 ? "-" : "+") << abs(z.im).str() << "i)";
  return out.str();
}

}  // namespace iqh
