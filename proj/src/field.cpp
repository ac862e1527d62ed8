#include "stt/field.hpp"

#include <cctype>

namespace stt {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::int64_t p) {
  if (!is_prime(p)) throw input_error("field modulus " + std::to_string(p) + " is not prime");
  if (p >= (std::int64_t(1) << 31)) throw input_error("prime modulus too large (need p < 2^31)");
  return FieldSpec{FieldKind::PrimeField, p};
}

std::string FieldSpec::str() const {
  return kind == FieldKind::Rationals ? "Q" : "F" + std::to_string(p);
}

namespace {

constexpr std::int64_t kSmallBound = std::int64_t(1) << 62;

std::int64_t mod_norm(std::int64_t v, std::int64_t p) {
  v %= p;
  return v < 0 ? v + p : v;
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = mod_norm(a, p);
  if (nr == 0) throw compute_error("division by zero in F_" + std::to_string(p));
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw internal_error("modulus not prime in mod_inv");
  return mod_norm(t, p);
}

bool fits_small(const mpq_class& q) {
  return q.get_den() == 1 && q.get_num().fits_slong_p();
}

}  // namespace

Scalar Scalar::of_rat(const FieldSpec& f, mpq_class q) {
  Scalar s;
  s.field_ = f;
  q.canonicalize();
  if (fits_small(q))
    s.v_ = static_cast<std::int64_t>(q.get_num().get_si());
  else
    s.v_ = std::move(q);
  return s;
}

Scalar Scalar::zero(const FieldSpec& f) {
  Scalar s;
  s.field_ = f;
  return s;
}

Scalar Scalar::one(const FieldSpec& f) { return of_int(f, 1); }

Scalar Scalar::of_int(const FieldSpec& f, std::int64_t n) {
  Scalar s;
  s.field_ = f;
  s.v_ = f.kind == FieldKind::Rationals ? n : mod_norm(n, f.p);
  return s;
}

Scalar Scalar::of_mpq(const FieldSpec& f, const mpq_class& q) {
  if (f.kind == FieldKind::Rationals) return of_rat(f, q);
  mpz_class pz(static_cast<long>(f.p));
  mpz_class nr = q.get_num() % pz, dr = q.get_den() % pz;
  std::int64_t n = mod_norm(nr.get_si(), f.p);
  std::int64_t d = mod_norm(dr.get_si(), f.p);
  if (d == 0) throw input_error("denominator divisible by p in " + f.str());
  Scalar s;
  s.field_ = f;
  s.v_ = static_cast<std::int64_t>((static_cast<__int128>(n) * mod_inv(d, f.p)) % f.p);
  return s;
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
  if (text.empty()) throw input_error("empty scalar literal");
  for (char c : text)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
      throw input_error("bad scalar literal '" + text + "'");
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw input_error("bad scalar literal '" + text + "'");
  if (q.get_den() == 0) throw input_error("zero denominator in '" + text + "'");
  q.canonicalize();
  return of_mpq(f, q);
}

bool Scalar::is_zero() const { return small() ? i64() == 0 : big() == 0; }

bool Scalar::is_one() const { return small() ? i64() == 1 : big() == 1; }

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_)) throw internal_error("mixed-field scalar arithmetic");
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (field_.kind == FieldKind::PrimeField) {
    s.v_ = i64() == 0 ? 0 : field_.p - i64();
  } else if (small()) {
    s.v_ = -i64();
  } else {
    s.v_ = mpq_class(-big());
  }
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  if (field_.kind == FieldKind::PrimeField) {
    Scalar s;
    s.field_ = field_;
    s.v_ = (i64() + o.i64()) % field_.p;
    return s;
  }
  if (small() && o.small()) {
    std::int64_t a = i64(), b = o.i64();
    if (a < kSmallBound - std::abs(b) && a > -(kSmallBound - std::abs(b))) {
      Scalar s;
      s.field_ = field_;
      s.v_ = a + b;
      return s;
    }
  }
  mpq_class qa = small() ? mpq_class(static_cast<long>(i64())) : big();
  mpq_class qb = o.small() ? mpq_class(static_cast<long>(o.i64())) : o.big();
  return of_rat(field_, qa + qb);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  if (field_.kind == FieldKind::PrimeField) {
    Scalar s;
    s.field_ = field_;
    s.v_ = static_cast<std::int64_t>((static_cast<__int128>(i64()) * o.i64()) % field_.p);
    return s;
  }
  if (small() && o.small()) {
    __int128 prod = static_cast<__int128>(i64()) * o.i64();
    if (prod < kSmallBound && prod > -static_cast<__int128>(kSmallBound)) {
      Scalar s;
      s.field_ = field_;
      s.v_ = static_cast<std::int64_t>(prod);
      return s;
    }
  }
  mpq_class qa = small() ? mpq_class(static_cast<long>(i64())) : big();
  mpq_class qb = o.small() ? mpq_class(static_cast<long>(o.i64())) : o.big();
  return of_rat(field_, qa * qb);
}

Scalar Scalar::inverse() const {
  if (field_.kind == FieldKind::PrimeField) {
    Scalar s;
    s.field_ = field_;
    s.v_ = mod_inv(i64(), field_.p);
    return s;
  }
  if (is_zero()) throw compute_error("division by zero over Q");
  mpq_class q = small() ? mpq_class(static_cast<long>(i64())) : big();
  return of_rat(field_, 1 / q);
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same(o);
  return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  return v_ == o.v_;  // canonical representations make this value equality
}

int Scalar::cmp(const Scalar& o) const {
  check_same(o);
  if (field_.kind == FieldKind::PrimeField)
    return i64() < o.i64() ? -1 : i64() > o.i64() ? 1 : 0;
  if (small() && o.small()) return i64() < o.i64() ? -1 : i64() > o.i64() ? 1 : 0;
  mpq_class qa = small() ? mpq_class(static_cast<long>(i64())) : big();
  mpq_class qb = o.small() ? mpq_class(static_cast<long>(o.i64())) : o.big();
  int c = ::cmp(qa, qb);
  return c < 0 ? -1 : c > 0 ? 1 : 0;
}

std::string Scalar::str() const {
  if (small()) return std::to_string(i64());
  return big().get_str();
}

mpq_class Scalar::rat() const {
  if (field_.kind != FieldKind::Rationals) throw internal_error("rat() on F_p scalar");
  return small() ? mpq_class(static_cast<long>(i64())) : big();
}

std::int64_t Scalar::residue() const {
  if (field_.kind != FieldKind::PrimeField) throw internal_error("residue() on Q scalar");
  return i64();
}

}  // namespace stt
