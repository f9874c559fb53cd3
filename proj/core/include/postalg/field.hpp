#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace postalg {

/// Ground field of a computation: exact rationals Q or a prime field F_p.
struct FieldSpec {
  enum class Kind { Rationals, Prime };

  Kind kind = Kind::Rationals;
  std::int64_t p = 0;  // modulus, set iff kind == Prime

  static FieldSpec rationals() { return {}; }
  /// Throws std::invalid_argument unless p is prime and p < 2^31.
  static FieldSpec prime(std::int64_t p);

  bool operator==(const FieldSpec&) const = default;

  bool is_rationals() const { return kind == Kind::Rationals; }
  bool is_prime_field() const { return kind == Kind::Prime; }

  std::string name() const;  // "Q" or "Fp:<p>"
  static FieldSpec parse(std::string_view name);
};

bool is_prime(std::int64_t n);

/// Exact field element. Rational values are kept fully reduced with a
/// positive denominator; prime-field values are canonical residues in [0, p).
class Scalar {
 public:
  Scalar() = default;  // zero over Q
  explicit Scalar(const FieldSpec& field) : field_(field) {}
  Scalar(const FieldSpec& field, long value);
  Scalar(const FieldSpec& field, long num, long den);
  Scalar(const FieldSpec& field, const mpq_class& value);

  /// Parses "num", "num/den" (rationals) or a residue / "a/b" (prime field).
  static Scalar from_string(const FieldSpec& field, std::string_view text);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& rhs) const;
  Scalar operator-(const Scalar& rhs) const;
  Scalar operator*(const Scalar& rhs) const;
  Scalar operator/(const Scalar& rhs) const;  // throws on division by zero
  Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
  Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
  Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }

  Scalar inverse() const;

  bool operator==(const Scalar& rhs) const;
  bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

  const mpq_class& rational() const;  // requires rationals
  std::int64_t residue() const;       // requires prime field

  std::string str() const;

 private:
  FieldSpec field_;
  mpq_class rat_;           // used iff rationals
  std::int64_t res_ = 0;    // used iff prime field

  void require_same_field(const Scalar& rhs) const;
};

using Vec = std::vector<Scalar>;

Vec zero_vec(int n, const FieldSpec& field);
Vec unit_vec(int n, int i, const FieldSpec& field);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);

}  // namespace postalg
