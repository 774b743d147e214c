#include "cellx/ring.hpp"

#include <charconv>

#include "cellx/errors.hpp"

namespace cellx {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t inverse_mod_prime(std::int64_t a, std::int64_t p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw DomainError("zero has no inverse modulo " + std::to_string(p));
  // Extended Euclid on (a, p).
  std::int64_t old_r = a, r = p, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  old_s %= p;
  return old_s < 0 ? old_s + p : old_s;
}

RingSpec::RingSpec(Flavor flavor, std::int64_t p) : flavor_(flavor), p_(p) {
  if (p < 2 || p >= (std::int64_t{1} << 31) || !is_prime(p))
    throw UsageError("ring characteristic must be a prime below 2^31, got " +
                     std::to_string(p));
}

RingSpec RingSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw UsageError("ring must look like zpsq:<p> or dual:<p>, got '" +
                     std::string(text) + "'");
  const auto kind = text.substr(0, colon);
  const auto digits = text.substr(colon + 1);
  Flavor flavor;
  if (kind == "zpsq")
    flavor = Flavor::ZModPSquared;
  else if (kind == "dual")
    flavor = Flavor::DualNumbers;
  else
    throw UsageError("unknown ring flavor '" + std::string(kind) + "'");
  std::int64_t p = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
    throw UsageError("bad ring characteristic '" + std::string(digits) + "'");
  return RingSpec(flavor, p);
}

std::string RingSpec::to_string() const {
  return (flavor_ == Flavor::ZModPSquared ? "zpsq:" : "dual:") + std::to_string(p_);
}

RingElement RingSpec::zero() const { return RingElement(*this, 0, 0); }
RingElement RingSpec::one() const { return RingElement(*this, 1, 0); }
RingElement RingSpec::r() const { return RingElement(*this, 0, 1); }

RingElement RingSpec::element(std::int64_t a, std::int64_t b) const {
  return RingElement(*this, a, b);
}

RingElement RingSpec::element_at(std::int64_t index) const {
  if (index < 0 || index >= order())
    throw UsageError("element index out of range");
  return RingElement(*this, index % p_, index / p_);
}

RingElement RingSpec::from_integer(std::int64_t n) const {
  const std::int64_t a = ((n % p_) + p_) % p_;
  if (flavor_ == Flavor::DualNumbers) return RingElement(*this, a, 0);
  const std::int64_t q = order();
  const std::int64_t v = ((n % q) + q) % q;
  return element_at(v);
}

ResidueElement RingSpec::residue_element(std::int64_t v) const {
  return ResidueElement(p_, ((v % p_) + p_) % p_);
}

ResidueElement::ResidueElement(std::int64_t p, std::int64_t value) : p_(p), value_(value) {
  if (value < 0 || value >= p) throw UsageError("residue out of range");
}

ResidueElement ResidueElement::operator+(const ResidueElement& o) const {
  return ResidueElement(p_, (value_ + o.value_) % p_);
}
ResidueElement ResidueElement::operator-(const ResidueElement& o) const {
  return ResidueElement(p_, (value_ - o.value_ + p_) % p_);
}
ResidueElement ResidueElement::operator*(const ResidueElement& o) const {
  return ResidueElement(p_, (value_ * o.value_) % p_);
}
ResidueElement ResidueElement::operator-() const {
  return ResidueElement(p_, (p_ - value_) % p_);
}
ResidueElement ResidueElement::inverse() const {
  return ResidueElement(p_, inverse_mod_prime(value_, p_));
}

RingElement::RingElement(const RingSpec& spec, std::int64_t a, std::int64_t b)
    : spec_(spec), a_(a), b_(b) {
  if (a < 0 || a >= spec.p() || b < 0 || b >= spec.p())
    throw UsageError("ring element coordinates must lie in [0, " +
                     std::to_string(spec.p()) + ")");
}

void RingElement::require_same_ring(const RingElement& o) const {
  if (!(spec_ == o.spec_))
    throw UsageError("ring mismatch: " + spec_.to_string() + " vs " + o.spec_.to_string());
}

RingElement RingElement::operator+(const RingElement& o) const {
  require_same_ring(o);
  const std::int64_t p = spec_.p();
  const std::int64_t sa = a_ + o.a_;
  const std::int64_t carry = spec_.flavor() == Flavor::ZModPSquared ? sa / p : 0;
  return RingElement(spec_, sa % p, (b_ + o.b_ + carry) % p);
}

RingElement RingElement::operator-() const {
  const std::int64_t p = spec_.p();
  if (spec_.flavor() == Flavor::DualNumbers)
    return RingElement(spec_, (p - a_) % p, (p - b_) % p);
  const std::int64_t q = spec_.order();
  return spec_.element_at((q - index()) % q);
}

RingElement RingElement::operator-(const RingElement& o) const {
  require_same_ring(o);
  return *this + (-o);
}

RingElement RingElement::operator*(const RingElement& o) const {
  require_same_ring(o);
  const std::int64_t p = spec_.p();
  // (a1 + b1 r)(a2 + b2 r) = a1 a2 + (a1 b2 + a2 b1) r, plus the carry of
  // a1 a2 past p when r = p.
  const std::int64_t low = a_ * o.a_;
  const std::int64_t carry = spec_.flavor() == Flavor::ZModPSquared ? low / p : 0;
  const std::int64_t high = (carry + (a_ * o.b_) % p + (o.a_ * b_) % p) % p;
  return RingElement(spec_, low % p, high);
}

RingElement RingElement::inverse() const {
  if (!is_unit())
    throw DomainError("element (" + std::to_string(a_) + "," + std::to_string(b_) +
                      ") lies in m and has no inverse");
  const std::int64_t p = spec_.p();
  const std::int64_t c = inverse_mod_prime(a_, p);
  // a c = 1 + k p; the r-coordinate of (a + b r)(c + d r) is k + a d + b c.
  const std::int64_t k = spec_.flavor() == Flavor::ZModPSquared ? (a_ * c) / p : 0;
  const std::int64_t t = (k + (b_ * c) % p) % p;
  const std::int64_t d = ((p - t) % p) * c % p;
  return RingElement(spec_, c, d);
}

RingElement lift(const RingSpec& spec, const ResidueElement& v) {
  return RingElement(spec, v.value(), 0);
}

RingElement times_r(const RingSpec& spec, const ResidueElement& v) {
  return RingElement(spec, 0, v.value());
}

}  // namespace cellx
