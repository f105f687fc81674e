#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace cohann {

/// The ground field: Q when `characteristic == 0`, otherwise F_p.
class Field {
public:
  /// Throws DomainError unless `p` is 0 or a prime below 2^31.
  explicit Field(std::uint32_t p = 0);

  std::uint32_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }

  friend bool operator==(const Field&, const Field&) = default;

private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// Exact element of a Field. Rationals are kept canonical (reduced, positive
/// denominator); residues live in [0, p).
class Coefficient {
public:
  /// Zero of Q.
  Coefficient() : v_(mpq_class(0)) {}

  static Coefficient from_int(const Field& f, long v);
  static Coefficient from_mpz(const Field& f, const mpz_class& v);
  static Coefficient from_rational(const Field& f, const mpq_class& v);
  static Coefficient zero(const Field& f) { return from_int(f, 0); }
  static Coefficient one(const Field& f) { return from_int(f, 1); }

  Field field() const;
  bool is_zero() const;
  bool is_one() const;
  /// True for rationals < 0; residues are never negative.
  bool is_negative() const;

  Coefficient operator-() const;
  Coefficient inverse() const;

  Coefficient& operator+=(const Coefficient& o);
  Coefficient& operator-=(const Coefficient& o);
  Coefficient& operator*=(const Coefficient& o);
  Coefficient& operator/=(const Coefficient& o);

  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }
  friend Coefficient operator/(Coefficient a, const Coefficient& b) { return a /= b; }

  friend bool operator==(const Coefficient& a, const Coefficient& b);

  /// Absolute value for rationals (identity on residues); used by printing.
  Coefficient magnitude() const;
  std::string to_string() const;

  const mpq_class* as_rational() const { return std::get_if<mpq_class>(&v_); }

private:
  struct Residue {
    std::uint32_t value;
    std::uint32_t prime;
    friend bool operator==(const Residue&, const Residue&) = default;
  };
  explicit Coefficient(mpq_class q) : v_(std::move(q)) {}
  explicit Coefficient(Residue r) : v_(r) {}
  void check_same(const Coefficient& o) const;

  std::variant<mpq_class, Residue> v_;
};

}  // namespace cohann
