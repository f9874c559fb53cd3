#include "postalg/field.hpp"

#include <charconv>
#include <stdexcept>

namespace postalg {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::int64_t p) {
  if (p >= (std::int64_t{1} << 31)) {
    throw std::invalid_argument("prime field modulus must be < 2^31");
  }
  if (!is_prime(p)) {
    throw std::invalid_argument("prime field modulus " + std::to_string(p) +
                                " is not prime");
  }
  return FieldSpec{Kind::Prime, p};
}

std::string FieldSpec::name() const {
  return is_rationals() ? "Q" : "Fp:" + std::to_string(p);
}

FieldSpec FieldSpec::parse(std::string_view name) {
  if (name == "Q") return rationals();
  if (name.rfind("Fp:", 0) == 0) {
    std::int64_t p = 0;
    auto body = name.substr(3);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
    if (ec == std::errc{} && ptr == body.data() + body.size()) return prime(p);
  }
  throw std::invalid_argument("unknown field name: " + std::string(name));
}

namespace {

std::int64_t mod_reduce(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

// Extended Euclid; requires gcd(a, p) = 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = mod_reduce(a, p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::domain_error("division by zero in prime field");
  return mod_reduce(t, p);
}

}  // namespace

Scalar::Scalar(const FieldSpec& field, long value) : field_(field) {
  if (field_.is_rationals()) {
    rat_ = value;
  } else {
    res_ = mod_reduce(value, field_.p);
  }
}

Scalar::Scalar(const FieldSpec& field, long num, long den) : field_(field) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (field_.is_rationals()) {
    rat_ = mpq_class(num, den);
    rat_.canonicalize();
  } else {
    res_ = mod_reduce(mod_reduce(num, field_.p) *
                          mod_inverse(mod_reduce(den, field_.p), field_.p),
                      field_.p);
  }
}

Scalar::Scalar(const FieldSpec& field, const mpq_class& value) : field_(field) {
  if (field_.is_rationals()) {
    rat_ = value;
    rat_.canonicalize();
  } else {
    mpz_class num = value.get_num() % field_.p;
    mpz_class den = value.get_den() % field_.p;
    std::int64_t n = mod_reduce(num.get_si(), field_.p);
    std::int64_t d = mod_reduce(den.get_si(), field_.p);
    res_ = mod_reduce(n * mod_inverse(d, field_.p), field_.p);
  }
}

Scalar Scalar::from_string(const FieldSpec& field, std::string_view text) {
  mpq_class q;
  if (q.set_str(std::string(text), 10) != 0) {
    throw std::invalid_argument("bad scalar literal: " + std::string(text));
  }
  if (q.get_den() == 0) throw std::domain_error("zero denominator");
  q.canonicalize();
  return Scalar(field, q);
}

bool Scalar::is_zero() const {
  return field_.is_rationals() ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rationals() ? rat_ == 1 : res_ == 1;
}

void Scalar::require_same_field(const Scalar& rhs) const {
  if (field_ != rhs.field_) {
    throw std::invalid_argument("scalar field mismatch: " + field_.name() +
                                " vs " + rhs.field_.name());
  }
}

Scalar Scalar::operator-() const {
  Scalar out(field_);
  if (field_.is_rationals()) {
    out.rat_ = -rat_;
  } else {
    out.res_ = res_ == 0 ? 0 : field_.p - res_;
  }
  return out;
}

Scalar Scalar::operator+(const Scalar& rhs) const {
  require_same_field(rhs);
  Scalar out(field_);
  if (field_.is_rationals()) {
    out.rat_ = rat_ + rhs.rat_;
  } else {
    out.res_ = mod_reduce(res_ + rhs.res_, field_.p);
  }
  return out;
}

Scalar Scalar::operator-(const Scalar& rhs) const {
  require_same_field(rhs);
  Scalar out(field_);
  if (field_.is_rationals()) {
    out.rat_ = rat_ - rhs.rat_;
  } else {
    out.res_ = mod_reduce(res_ - rhs.res_, field_.p);
  }
  return out;
}

Scalar Scalar::operator*(const Scalar& rhs) const {
  require_same_field(rhs);
  Scalar out(field_);
  if (field_.is_rationals()) {
    out.rat_ = rat_ * rhs.rat_;
  } else {
    out.res_ = mod_reduce(res_ * rhs.res_, field_.p);
  }
  return out;
}

Scalar Scalar::inverse() const {
  Scalar out(field_);
  if (field_.is_rationals()) {
    if (rat_ == 0) throw std::domain_error("division by zero");
    out.rat_ = 1 / rat_;
  } else {
    out.res_ = mod_inverse(res_, field_.p);
  }
  return out;
}

Scalar Scalar::operator/(const Scalar& rhs) const {
  require_same_field(rhs);
  return *this * rhs.inverse();
}

bool Scalar::operator==(const Scalar& rhs) const {
  if (field_ != rhs.field_) return false;
  return field_.is_rationals() ? rat_ == rhs.rat_ : res_ == rhs.res_;
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rationals()) {
    throw std::logic_error("rational() on prime-field scalar");
  }
  return rat_;
}

std::int64_t Scalar::residue() const {
  if (!field_.is_prime_field()) {
    throw std::logic_error("residue() on rational scalar");
  }
  return res_;
}

std::string Scalar::str() const {
  if (field_.is_rationals()) {
    return rat_.get_den() == 1 ? rat_.get_num().get_str()
                               : rat_.get_str();
  }
  return std::to_string(res_);
}

Vec zero_vec(int n, const FieldSpec& field) {
  return Vec(static_cast<std::size_t>(n), Scalar(field));
}

Vec unit_vec(int n, int i, const FieldSpec& field) {
  Vec v = zero_vec(n, field);
  v.at(static_cast<std::size_t>(i)) = Scalar(field, 1);
  return v;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Vec out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Vec out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Vec scale(const Scalar& c, const Vec& v) {
  Vec out = v;
  for (auto& x : out) x = c * x;
  return out;
}

}  // namespace postalg
