#include "incidence/scalar.hpp"

#include <cctype>
#include <ostream>

#include "incidence/error.hpp"

namespace incidence {

std::string_view to_string(ErrorKind kind)
{
  switch (kind) {
  case ErrorKind::ParseError: return "ParseError";
  case ErrorKind::IoError: return "IoError";
  case ErrorKind::InvalidArgument: return "InvalidArgument";
  case ErrorKind::UnknownLabel: return "UnknownLabel";
  case ErrorKind::DuplicateLabel: return "DuplicateLabel";
  case ErrorKind::DuplicateCover: return "DuplicateCover";
  case ErrorKind::DirectedCycle: return "DirectedCycle";
  case ErrorKind::NotACover: return "NotACover";
  case ErrorKind::Disconnected: return "Disconnected";
  case ErrorKind::EmptySubset: return "EmptySubset";
  case ErrorKind::PosetMismatch: return "PosetMismatch";
  case ErrorKind::FieldMismatch: return "FieldMismatch";
  case ErrorKind::DivisionByZero: return "DivisionByZero";
  case ErrorKind::NotInRadical: return "NotInRadical";
  case ErrorKind::NotInvertible: return "NotInvertible";
  case ErrorKind::Singular: return "Singular";
  case ErrorKind::NotLieAutomorphism: return "NotLieAutomorphism";
  case ErrorKind::NotElementary: return "NotElementary";
  case ErrorKind::NotMaximalChain: return "NotMaximalChain";
  case ErrorKind::NotClosed: return "NotClosed";
  case ErrorKind::NotAWalkStep: return "NotAWalkStep";
  case ErrorKind::Conflict: return "Conflict";
  case ErrorKind::MissingSeed: return "MissingSeed";
  case ErrorKind::NotAdmissible: return "NotAdmissible";
  case ErrorKind::NotMonotone: return "NotMonotone";
  case ErrorKind::NotCompatible: return "NotCompatible";
  case ErrorKind::ZeroTrace: return "ZeroTrace";
  case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
  }
  return "Unknown";
}

namespace {

bool is_prime(std::uint64_t p)
{
  if (p < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

std::uint64_t reduce(long v, std::uint64_t p)
{
  long m = v % static_cast<long>(p);
  if (m < 0)
    m += static_cast<long>(p);
  return static_cast<std::uint64_t>(m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p)
{
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1)
      r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

} // namespace

Field Field::prime(std::uint64_t p)
{
  if (p >= (std::uint64_t{1} << 32) || !is_prime(p))
    throw Error(ErrorKind::InvalidArgument,
                "field characteristic " + std::to_string(p) + " is not a prime below 2^32");
  return Field(p);
}

std::string Field::name() const
{
  return is_rational() ? "Q" : "F" + std::to_string(p_);
}

Scalar::Scalar(Field field, long value) : field_(field)
{
  if (field_.is_rational())
    q_ = value;
  else
    r_ = reduce(value, field_.characteristic());
}

Scalar::Scalar(Field field, long num, long den) : Scalar(field, num)
{
  if (den == 0)
    throw Error(ErrorKind::DivisionByZero, "zero denominator");
  *this /= Scalar(field, den);
}

Scalar Scalar::parse(Field field, const std::string &text)
{
  auto bad = [&] { return Error(ErrorKind::ParseError, "malformed coefficient '" + text + "'"); };
  auto valid_int = [](const std::string &s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size())
      return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        return false;
    return true;
  };
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw bad();
  if (num[0] == '+')
    num.erase(0, 1);

  mpz_class n(num), d(den);
  if (d == 0)
    throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + text + "'");

  Scalar s(field);
  if (field.is_rational()) {
    s.q_ = mpq_class(n, d);
    s.q_.canonicalize();
    return s;
  }
  mpz_class p(static_cast<unsigned long>(field.characteristic()));
  mpz_class nr = n % p, dr = d % p;
  if (nr < 0)
    nr += p;
  Scalar top(field), bottom(field);
  top.r_ = nr.get_ui();
  bottom.r_ = dr.get_ui();
  return top / bottom;
}

bool Scalar::is_zero() const
{
  return field_.is_rational() ? sgn(q_) == 0 : r_ == 0;
}

bool Scalar::is_one() const
{
  return field_.is_rational() ? q_ == 1 : r_ == 1 % field_.characteristic();
}

bool Scalar::is_negative() const
{
  return field_.is_rational() && sgn(q_) < 0;
}

void Scalar::check_field(const Scalar &o) const
{
  if (!(field_ == o.field_))
    throw Error(ErrorKind::FieldMismatch, field_.name() + " vs " + o.field_.name());
}

Scalar Scalar::operator-() const
{
  Scalar s(*this);
  if (field_.is_rational())
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : field_.characteristic() - r_;
  return s;
}

Scalar Scalar::inverse() const
{
  if (is_zero())
    throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  Scalar s(field_);
  if (field_.is_rational())
    s.q_ = 1 / q_;
  else
    s.r_ = pow_mod(r_, field_.characteristic() - 2, field_.characteristic());
  return s;
}

Scalar &Scalar::operator+=(const Scalar &o)
{
  check_field(o);
  if (field_.is_rational())
    q_ += o.q_;
  else
    r_ = (r_ + o.r_) % field_.characteristic();
  return *this;
}

Scalar &Scalar::operator-=(const Scalar &o)
{
  return *this += -o;
}

Scalar &Scalar::operator*=(const Scalar &o)
{
  check_field(o);
  if (field_.is_rational())
    q_ *= o.q_;
  else
    r_ = r_ * o.r_ % field_.characteristic();
  return *this;
}

Scalar &Scalar::operator/=(const Scalar &o)
{
  check_field(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar &a, const Scalar &b)
{
  a.check_field(b);
  return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::to_string() const
{
  return field_.is_rational() ? q_.get_str() : std::to_string(r_);
}

std::ostream &operator<<(std::ostream &os, const Scalar &s)
{
  return os << s.to_string();
}

} // namespace incidence
