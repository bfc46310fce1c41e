#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace incidence {

/// An exact field: the rationals, or GF(p) for a prime p < 2^32.
class Field {
public:
  Field() = default;

  static Field rationals() { return Field(); }
  static Field prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  /// 0 for Q.
  std::uint64_t characteristic() const { return p_; }

  std::string name() const;

  friend bool operator==(const Field &, const Field &) = default;

private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

class Scalar {
public:
  Scalar() = default;
  explicit Scalar(Field field) : field_(field) {}
  Scalar(Field field, long value);
  Scalar(Field field, long num, long den);
  /// Parses an integer or `a/b`. Throws ParseError on malformed text.
  static Scalar parse(Field field, const std::string &text);

  static Scalar zero(Field f) { return Scalar(f); }
  static Scalar one(Field f) { return Scalar(f, 1); }

  const Field &field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar inverse() const;

  Scalar &operator+=(const Scalar &o);
  Scalar &operator-=(const Scalar &o);
  Scalar &operator*=(const Scalar &o);
  Scalar &operator/=(const Scalar &o);

  friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }

  friend bool operator==(const Scalar &a, const Scalar &b);

  /// Canonical text: `3`, `-1/2`, or the residue in [0, p).
  std::string to_string() const;

  /// Negative for Q values below zero; residues are never negative.
  bool is_negative() const;

  /// Residue in [0, p); only meaningful for prime fields.
  std::uint64_t residue() const { return r_; }
  const mpq_class &rational() const { return q_; }

private:
  void check_field(const Scalar &o) const;

  Field field_;
  mpq_class q_;
  std::uint64_t r_ = 0;
};

std::ostream &operator<<(std::ostream &os, const Scalar &s);

} // namespace incidence
