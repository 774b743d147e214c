#pragma once

// Local rings (R, m) with m = (r) principal and m^2 = 0.
//
// Two families are supported, both parameterized by a prime p:
//   zpsq:<p>  the integers modulo p^2, with r = p
//   dual:<p>  the dual numbers F_p[X]/(X^2), with r = X
// An element is stored as the pair (a, b) meaning a + b*r with a, b in [0, p).
// The encoding is the same for both flavors; only the carry rule used by
// addition and multiplication differs.

#include <cstdint>
#include <string>
#include <string_view>

namespace cellx {

enum class Flavor : std::uint8_t { ZModPSquared, DualNumbers };

class RingElement;
class ResidueElement;

class RingSpec {
 public:
  // Throws UsageError unless p is a prime in [2, 2^31).
  RingSpec(Flavor flavor, std::int64_t p);

  // Parses "zpsq:<p>" or "dual:<p>".
  static RingSpec parse(std::string_view text);

  Flavor flavor() const noexcept { return flavor_; }
  std::int64_t p() const noexcept { return p_; }
  // |R| = p^2.
  std::int64_t order() const noexcept { return p_ * p_; }
  std::string to_string() const;

  RingElement zero() const;
  RingElement one() const;
  // The fixed generator of m, the element (0, 1).
  RingElement r() const;
  // Throws UsageError when a or b is outside [0, p).
  RingElement element(std::int64_t a, std::int64_t b) const;
  // Element number `index` in [0, p^2): a = index mod p, b = index div p.
  // For zpsq this is the residue class of `index` itself.
  RingElement element_at(std::int64_t index) const;
  // Image of an arbitrary integer under Z -> R.
  RingElement from_integer(std::int64_t n) const;

  ResidueElement residue_element(std::int64_t v) const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  Flavor flavor_;
  std::int64_t p_;
};

// Element of the residue field k = R/m = F_p.
class ResidueElement {
 public:
  ResidueElement(std::int64_t p, std::int64_t value);

  std::int64_t p() const noexcept { return p_; }
  std::int64_t value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_ == 0; }

  ResidueElement operator+(const ResidueElement& o) const;
  ResidueElement operator-(const ResidueElement& o) const;
  ResidueElement operator*(const ResidueElement& o) const;
  ResidueElement operator-() const;
  // Throws DomainError on zero.
  ResidueElement inverse() const;

  friend bool operator==(const ResidueElement&, const ResidueElement&) = default;

 private:
  std::int64_t p_;
  std::int64_t value_;
};

class RingElement {
 public:
  RingElement(const RingSpec& spec, std::int64_t a, std::int64_t b);

  const RingSpec& spec() const noexcept { return spec_; }
  // Residue-field coordinate.
  std::int64_t a() const noexcept { return a_; }
  // Coordinate along r.
  std::int64_t b() const noexcept { return b_; }
  // Position in the enumeration order of RingSpec::element_at.
  std::int64_t index() const noexcept { return a_ + b_ * spec_.p(); }

  bool is_zero() const noexcept { return a_ == 0 && b_ == 0; }
  // x is a unit iff x is not in m iff a != 0.
  bool is_unit() const noexcept { return a_ != 0; }

  // Arithmetic across different rings throws UsageError.
  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement operator*(const RingElement& o) const;
  RingElement operator-() const;
  RingElement& operator+=(const RingElement& o) { return *this = *this + o; }
  RingElement& operator-=(const RingElement& o) { return *this = *this - o; }
  RingElement& operator*=(const RingElement& o) { return *this = *this * o; }

  // Throws DomainError for non-units.
  RingElement inverse() const;

  ResidueElement residue() const { return ResidueElement(spec_.p(), a_); }

  friend bool operator==(const RingElement&, const RingElement&) = default;

 private:
  void require_same_ring(const RingElement& o) const;

  RingSpec spec_;
  std::int64_t a_;
  std::int64_t b_;
};

// Coefficient section k -> R, v |-> (v, 0).
RingElement lift(const RingSpec& spec, const ResidueElement& v);
// v |-> r * lift(v) = (0, v). Well defined on k because r*x depends only on
// the residue of x.
RingElement times_r(const RingSpec& spec, const ResidueElement& v);

// Inverse of a modulo the prime p; a must be nonzero mod p.
std::int64_t inverse_mod_prime(std::int64_t a, std::int64_t p);

bool is_prime(std::int64_t n);

}  // namespace cellx
