#pragma once

// Exact coefficient fields: prime fields GF(p), p < 2^31, and the rationals.
//
// A field is a small value object; elements are plain values manipulated
// through the field (`F.mul(a, b)`), so the same engine code runs over both.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace k2 {

/// Malformed input: parse failures, violated preconditions on user data.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A query or computation needs data beyond the declared degree bounds.
class BoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_prime(std::uint64_t n);

class PrimeField {
 public:
  using Elem = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }

  Elem add(Elem a, Elem b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem from_int(std::int64_t v) const;
  /// Image of num/den; throws InputError when den vanishes mod p.
  Elem from_rational(const mpq_class& q) const;

  /// Symmetric representative in (-p/2, p/2].
  std::int64_t lift(Elem a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
  }
  std::string to_string(Elem a) const { return std::to_string(lift(a)); }
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

class RationalField {
 public:
  using Elem = mpq_class;

  std::uint32_t characteristic() const { return 0; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_one(const Elem& a) const { return a == 1; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const { return a * inv(b); }

  Elem from_int(std::int64_t v) const { return mpq_class(static_cast<long>(v)); }
  Elem from_rational(const mpq_class& q) const { return q; }

  std::string to_string(const Elem& a) const { return a.get_str(); }
  std::string name() const { return "Q"; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// Runtime choice of field, as selected on the command line.
class FieldSpec {
 public:
  enum class Kind { rationals, prime };

  static FieldSpec rationals() { return FieldSpec(Kind::rationals, 0); }
  static FieldSpec prime(std::uint32_t p);
  /// Parses `q` or `gf:<p>`.
  static FieldSpec parse(const std::string& text);

  Kind kind() const { return kind_; }
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

 private:
  FieldSpec(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

inline constexpr std::uint32_t kDefaultPrime = 32003;

/// Calls `fn(field)` with the concrete field type selected by `spec`.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.kind() == FieldSpec::Kind::rationals) {
    return std::forward<Fn>(fn)(RationalField{});
  }
  return std::forward<Fn>(fn)(PrimeField(spec.characteristic()));
}

}  // namespace k2
