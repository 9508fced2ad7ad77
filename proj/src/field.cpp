#include "k2/field.hpp"

#include <charconv>
#include <tuple>

namespace k2 {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw InputError("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
  }
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero in " + name());
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::pair{new_t, t - q * new_t};
    std::tie(r, new_r) = std::pair{new_r, r - q * new_r};
  }
  if (t < 0) t += p_;
  return static_cast<Elem>(t);
}

PrimeField::Elem PrimeField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

PrimeField::Elem PrimeField::from_rational(const mpq_class& q) const {
  mpz_class num = q.get_num() % p_;
  mpz_class den = q.get_den() % p_;
  if (num < 0) num += p_;
  if (den == 0) {
    throw InputError("coefficient " + q.get_str() + " has a denominator divisible by " +
                     std::to_string(p_));
  }
  return div(static_cast<Elem>(num.get_ui()), static_cast<Elem>(den.get_ui()));
}

RationalField::Elem RationalField::inv(const Elem& a) const {
  if (sgn(a) == 0) throw std::domain_error("inverse of zero in Q");
  return 1 / a;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  PrimeField check(p);
  (void)check;
  return FieldSpec(Kind::prime, p);
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.rfind("gf:", 0) == 0) {
    std::uint64_t p = 0;
    const char* first = text.data() + 3;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, p);
    if (ec != std::errc() || ptr != last || first == last || p >= (1ull << 31)) {
      throw InputError("bad field '" + text + "': expected q or gf:<prime>");
    }
    return prime(static_cast<std::uint32_t>(p));
  }
  throw InputError("bad field '" + text + "': expected q or gf:<prime>");
}

std::string FieldSpec::name() const {
  return kind_ == Kind::rationals ? "q" : "gf:" + std::to_string(p_);
}

}  // namespace k2
