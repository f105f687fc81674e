#include "cohann/coefficient.hpp"

#include "cohann/error.hpp"

namespace cohann {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field::Field(std::uint32_t p) : p_(p) {
  if (p != 0 && (p >= (1u << 31) || !is_prime(p)))
    throw DomainError("characteristic must be 0 or a prime below 2^31, got " +
                      std::to_string(p));
}

namespace {

std::uint32_t reduce_mpz(const mpz_class& v, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p prime: a^(p-2)
  std::uint64_t result = 1, base = a, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

Coefficient Coefficient::from_int(const Field& f, long v) {
  if (f.is_rational()) return Coefficient(mpq_class(v));
  long p = f.characteristic();
  long r = v % p;
  if (r < 0) r += p;
  return Coefficient(Residue{static_cast<std::uint32_t>(r), f.characteristic()});
}

Coefficient Coefficient::from_mpz(const Field& f, const mpz_class& v) {
  if (f.is_rational()) return Coefficient(mpq_class(v));
  return Coefficient(Residue{reduce_mpz(v, f.characteristic()), f.characteristic()});
}

Coefficient Coefficient::from_rational(const Field& f, const mpq_class& v) {
  if (f.is_rational()) {
    mpq_class q(v);
    q.canonicalize();
    return Coefficient(std::move(q));
  }
  std::uint32_t p = f.characteristic();
  std::uint32_t den = reduce_mpz(v.get_den(), p);
  if (den == 0) throw DomainError("denominator vanishes modulo " + std::to_string(p));
  std::uint64_t num = reduce_mpz(v.get_num(), p);
  return Coefficient(Residue{static_cast<std::uint32_t>(num * inv_mod(den, p) % p), p});
}

Field Coefficient::field() const {
  if (auto* r = std::get_if<Residue>(&v_)) return Field(r->prime);
  return Field(0);
}

bool Coefficient::is_zero() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return sgn(*q) == 0;
  return std::get<Residue>(v_).value == 0;
}

bool Coefficient::is_one() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return *q == 1;
  return std::get<Residue>(v_).value == 1;
}

bool Coefficient::is_negative() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return sgn(*q) < 0;
  return false;
}

void Coefficient::check_same(const Coefficient& o) const {
  if (v_.index() != o.v_.index()) throw RingMismatch("coefficients from different fields");
  if (auto* r = std::get_if<Residue>(&v_))
    if (r->prime != std::get<Residue>(o.v_).prime)
      throw RingMismatch("coefficients from different prime fields");
}

Coefficient Coefficient::operator-() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return Coefficient(mpq_class(-*q));
  auto r = std::get<Residue>(v_);
  r.value = r.value == 0 ? 0 : r.prime - r.value;
  return Coefficient(r);
}

Coefficient Coefficient::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  if (auto* q = std::get_if<mpq_class>(&v_)) return Coefficient(mpq_class(1 / *q));
  auto r = std::get<Residue>(v_);
  r.value = inv_mod(r.value, r.prime);
  return Coefficient(r);
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
  check_same(o);
  if (auto* q = std::get_if<mpq_class>(&v_)) {
    *q += std::get<mpq_class>(o.v_);
  } else {
    auto& r = std::get<Residue>(v_);
    std::uint64_t s = std::uint64_t(r.value) + std::get<Residue>(o.v_).value;
    r.value = static_cast<std::uint32_t>(s % r.prime);
  }
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
  check_same(o);
  if (auto* q = std::get_if<mpq_class>(&v_)) {
    *q -= std::get<mpq_class>(o.v_);
  } else {
    auto& r = std::get<Residue>(v_);
    std::uint64_t s = std::uint64_t(r.value) + r.prime - std::get<Residue>(o.v_).value;
    r.value = static_cast<std::uint32_t>(s % r.prime);
  }
  return *this;
}

Coefficient& Coefficient::operator*=(const Coefficient& o) {
  check_same(o);
  if (auto* q = std::get_if<mpq_class>(&v_)) {
    *q *= std::get<mpq_class>(o.v_);
  } else {
    auto& r = std::get<Residue>(v_);
    std::uint64_t s = std::uint64_t(r.value) * std::get<Residue>(o.v_).value;
    r.value = static_cast<std::uint32_t>(s % r.prime);
  }
  return *this;
}

Coefficient& Coefficient::operator/=(const Coefficient& o) {
  return *this *= o.inverse();
}

bool operator==(const Coefficient& a, const Coefficient& b) { return a.v_ == b.v_; }

Coefficient Coefficient::magnitude() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return Coefficient(mpq_class(abs(*q)));
  return *this;
}

std::string Coefficient::to_string() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return q->get_str();
  return std::to_string(std::get<Residue>(v_).value);
}

}  // namespace cohann
