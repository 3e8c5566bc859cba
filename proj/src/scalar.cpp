#include "realfn/scalar.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "realfn/errors.hpp"

namespace realfn {

GaussianRational GaussianRational::from_complex(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw InvalidInput("non-finite complex number cannot be made exact");
  }
  return {mpq_class(z.real()), mpq_class(z.imag())};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  mpq_class n = o.norm();
  if (sgn(n) == 0) {
    throw InvalidInput("division by zero Gaussian rational");
  }
  mpq_class re = (re_ * o.re_ + im_ * o.im_) / n;
  mpq_class im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpq_class parse_integer(std::string_view s) {
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!all_digits(body)) {
    throw InvalidInput("malformed integer '" + std::string(s) + "'");
  }
  std::string str(s.front() == '+' ? s.substr(1) : s);
  return mpq_class(mpz_class(str, 10));
}

mpq_class parse_decimal(std::string_view s) {
  bool negative = false;
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = body.substr(e + 1);
    std::string_view exp_digits = exp_text;
    if (!exp_digits.empty() && (exp_digits.front() == '-' || exp_digits.front() == '+')) {
      exp_digits.remove_prefix(1);
    }
    if (!all_digits(exp_digits) || exp_digits.size() > 6) {
      throw InvalidInput("malformed exponent in '" + std::string(s) + "'");
    }
    exponent = std::stol(std::string(exp_text));
    body = body.substr(0, e);
  }
  std::string digits;
  if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = body.substr(0, dot);
    std::string_view frac_part = body.substr(dot + 1);
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)) ||
        (int_part.empty() && frac_part.empty())) {
      throw InvalidInput("malformed decimal '" + std::string(s) + "'");
    }
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(body)) {
      throw InvalidInput("malformed number '" + std::string(s) + "'");
    }
    digits = std::string(body);
  }
  mpz_class mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  mpq_class out = exponent >= 0 ? mpq_class(mantissa * scale) : mpq_class(mantissa, scale);
  out.canonicalize();
  return out;
}

}  // namespace

mpq_class parse_rational(std::string_view text) {
  if (text.empty()) throw InvalidInput("empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpq_class num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) {
      throw InvalidInput("malformed denominator in '" + std::string(text) + "'");
    }
    mpz_class den(std::string(den_text), 10);
    if (den == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    mpq_class out(num.get_num(), den);
    out.canonicalize();
    return out;
  }
  return parse_decimal(text);
}

std::string format_rational(const mpq_class& q) { return q.get_str(10); }

double parse_double(std::string_view text) {
  std::string buf(text);
  if (buf.empty() || std::isspace(static_cast<unsigned char>(buf.front()))) {
    throw InvalidInput("malformed decimal '" + buf + "'");
  }
  char* end = nullptr;
  double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size() || !std::isfinite(v)) {
    throw InvalidInput("malformed decimal '" + buf + "'");
  }
  return v;
}

std::string format_double(double x) {
  if (x == 0.0) return "0";  // folds -0 so output is byte-stable
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace realfn
