#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace stt {

/// Raised on malformed user input (bad field spec, unparsable scalars, ...).
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when an internal invariant is violated; indicates a bug, not bad input.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

/// Raised when a computation gives up for a declared reason (budget, non-split field, ...).
struct compute_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class FieldKind { Rationals, PrimeField };

/// Coefficient field: the rationals, or F_p for a prime p.
struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  std::int64_t p = 0;  // modulus; meaningful for PrimeField only

  static FieldSpec rationals() { return FieldSpec{FieldKind::Rationals, 0}; }
  static FieldSpec prime(std::int64_t p);

  bool operator==(const FieldSpec&) const = default;
  std::string str() const;
};

bool is_prime(std::int64_t n);

/// One field element in canonical form: lowest-terms fraction over Q,
/// least nonnegative residue over F_p. Self-describing (carries its field),
/// so mixed-field arithmetic is rejected rather than silently wrong.
class Scalar {
 public:
  Scalar() = default;  // zero over Q

  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  static Scalar of_int(const FieldSpec& f, std::int64_t n);
  static Scalar of_mpq(const FieldSpec& f, const mpq_class& q);
  /// Parses "n", "-n" or "n/d" (the fraction form reduces mod p over F_p).
  static Scalar parse(const FieldSpec& f, const std::string& text);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws on division by zero
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Total order within one field (numeric over Q, residue order over F_p);
  /// used only to make outputs deterministic.
  int cmp(const Scalar& o) const;

  std::string str() const;

  /// Rational value; valid over Q only.
  mpq_class rat() const;
  /// Residue in [0,p); valid over F_p only.
  std::int64_t residue() const;

 private:
  FieldSpec field_ = FieldSpec::rationals();
  // int64 holds small integer values (and every F_p residue); rationals
  // promote to mpq_class only when they must. Representations are canonical:
  // an integer-valued rational that fits is always stored as int64, so
  // variant equality is value equality.
  std::variant<std::int64_t, mpq_class> v_ = std::int64_t{0};

  bool small() const { return v_.index() == 0; }
  std::int64_t i64() const { return std::get<std::int64_t>(v_); }
  const mpq_class& big() const { return std::get<mpq_class>(v_); }
  static Scalar of_rat(const FieldSpec& f, mpq_class q);
  void check_same(const Scalar& o) const;
};

}  // namespace stt
