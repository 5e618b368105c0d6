#include "trialg/scalar.hpp"

#include "trialg/errors.hpp"

#include <string>

namespace trialg {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotInSpan: return "NotInSpan";
    case ErrorKind::NonAssociative: return "NonAssociative";
    case ErrorKind::UnitLawViolation: return "UnitLawViolation";
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::ZeroModule: return "ZeroModule";
    case ErrorKind::NotFaithful: return "NotFaithful";
    case ErrorKind::CharTooSmall: return "CharTooSmall";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::Undecided: return "Undecided";
    case ErrorKind::SigmaMissing: return "SigmaMissing";
    case ErrorKind::SigmaNotAutomorphism: return "SigmaNotAutomorphism";
    case ErrorKind::NotAutomorphism: return "NotAutomorphism";
    case ErrorKind::NotEndomorphism: return "NotEndomorphism";
    case ErrorKind::NotBlockPreserving: return "NotBlockPreserving";
    case ErrorKind::NotMPreserving: return "NotMPreserving";
    case ErrorKind::NotSigmaCentral: return "NotSigmaCentral";
    case ErrorKind::CommutativeAlgebra: return "CommutativeAlgebra";
    case ErrorKind::CentralElement: return "CentralElement";
    case ErrorKind::PreconditionFails: return "PreconditionFails";
    case ErrorKind::NotSigmaDerivation: return "NotSigmaDerivation";
    case ErrorKind::NotSigmaBiderivation: return "NotSigmaBiderivation";
    case ErrorKind::NotSigmaCommuting: return "NotSigmaCommuting";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32) || !is_prime_number(p)) {
    throw Error(ErrorKind::InvalidArgument, "field characteristic " + std::to_string(p) + " is not a prime below 2^32");
  }
  return Field(p);
}

std::string Field::to_string() const {
  return is_rational() ? std::string("Q") : "F_" + std::to_string(p_);
}

namespace {

std::uint64_t mod_of(const mpz_class& z, std::uint64_t p) {
  mpz_class r = z % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

}  // namespace

Scalar Scalar::zero(Field f) {
  return f.is_rational() ? Scalar(f, mpq_class(0)) : Scalar(f, std::uint64_t{0});
}

Scalar Scalar::one(Field f) {
  return f.is_rational() ? Scalar(f, mpq_class(1)) : Scalar(f, std::uint64_t{1});
}

Scalar Scalar::from_int(Field f, long n) {
  if (f.is_rational()) return Scalar(f, mpq_class(n));
  return Scalar(f, mod_of(mpz_class(n), f.characteristic()));
}

Scalar Scalar::from_rational(Field f, const mpq_class& q) {
  if (f.is_rational()) {
    mpq_class c(q);
    c.canonicalize();
    return Scalar(f, c);
  }
  const std::uint64_t p = f.characteristic();
  const std::uint64_t den = mod_of(q.get_den(), p);
  if (den == 0) {
    throw Error(ErrorKind::Parse, "denominator " + q.get_den().get_str() + " vanishes in " + f.to_string());
  }
  const std::uint64_t num = mod_of(q.get_num(), p);
  return Scalar(f, num * pow_mod(den, p - 2, p) % p);
}

Scalar Scalar::parse(Field f, std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw Error(ErrorKind::Parse, "empty scalar");
  if (s.front() == '+') s.erase(s.begin());
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') return false;
    }
    return true;
  };
  const std::string num_s = s.substr(0, slash);
  const std::string den_s = slash == std::string::npos ? std::string("1") : s.substr(slash + 1);
  if (!valid_int(num_s) || !valid_int(den_s)) {
    throw Error(ErrorKind::Parse, "malformed scalar '" + s + "'");
  }
  mpz_class num(num_s, 10);
  mpz_class den(den_s, 10);
  if (den == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + s + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return from_rational(f, q);
}

bool Scalar::is_zero() const {
  if (field_.is_rational()) return sgn(std::get<mpq_class>(value_)) == 0;
  return std::get<std::uint64_t>(value_) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_) == 1;
  return std::get<std::uint64_t>(value_) == 1;
}

void Scalar::check_same(const Scalar& o) const {
  if (field_ != o.field_) {
    throw Error(ErrorKind::FieldMismatch, field_.to_string() + " vs " + o.field_.to_string());
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::InvalidArgument, "inverse of zero");
  if (field_.is_rational()) return Scalar(field_, mpq_class(1 / std::get<mpq_class>(value_)));
  const std::uint64_t p = field_.characteristic();
  return Scalar(field_, pow_mod(std::get<std::uint64_t>(value_), p - 2, p));
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_).get_str();
  return std::to_string(std::get<std::uint64_t>(value_));
}

Scalar Scalar::operator-() const {
  if (field_.is_rational()) return Scalar(field_, mpq_class(-std::get<mpq_class>(value_)));
  const std::uint64_t r = std::get<std::uint64_t>(value_);
  return Scalar(field_, r == 0 ? 0 : field_.characteristic() - r);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  } else {
    auto& r = std::get<std::uint64_t>(value_);
    r = (r + std::get<std::uint64_t>(o.value_)) % field_.characteristic();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
  } else {
    const std::uint64_t p = field_.characteristic();
    auto& r = std::get<std::uint64_t>(value_);
    r = (r + p - std::get<std::uint64_t>(o.value_)) % p;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  } else {
    auto& r = std::get<std::uint64_t>(value_);
    r = r * std::get<std::uint64_t>(o.value_) % field_.characteristic();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  return *this *= o.inverse();
}

void Scalar::sub_mul(const Scalar& c, const Scalar& b) {
  check_same(c);
  check_same(b);
  if (field_.is_rational()) {
    mpq_class t;
    mpq_mul(t.get_mpq_t(), std::get<mpq_class>(c.value_).get_mpq_t(), std::get<mpq_class>(b.value_).get_mpq_t());
    std::get<mpq_class>(value_) -= t;
  } else {
    const std::uint64_t p = field_.characteristic();
    auto& r = std::get<std::uint64_t>(value_);
    const std::uint64_t t = std::get<std::uint64_t>(c.value_) * std::get<std::uint64_t>(b.value_) % p;
    r = (r + p - t) % p;
  }
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) return false;
  if (a.field_.is_rational()) return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
  return std::get<std::uint64_t>(a.value_) == std::get<std::uint64_t>(b.value_);
}

}  // namespace trialg
