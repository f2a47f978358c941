#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace jnt {

// GF(p^a) with q <= 4096. Element i has base-p digits equal to its polynomial
// coefficients (constant term least significant) modulo the Conway polynomial.
class GaloisField {
 public:
  using Value = std::uint32_t;

  static constexpr std::uint32_t kMaxOrder = 4096;

  // Shared, cached instances. Throws DomainError for non-prime p or q > kMaxOrder.
  static std::shared_ptr<const GaloisField> get(std::uint32_t p, std::uint32_t a);
  static std::shared_ptr<const GaloisField> of_order(std::uint32_t q);

  std::uint32_t p() const { return p_; }
  std::uint32_t a() const { return a_; }
  std::uint32_t q() const { return q_; }
  // Monic modulus, coefficients from constant term upwards (length a+1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  std::string modulus_string() const;

  Value zero() const { return 0; }
  Value one() const { return 1; }
  // The class of x, a generator of the multiplicative group.
  Value primitive() const { return exp_[1]; }

  Value add(Value x, Value y) const;
  Value sub(Value x, Value y) const { return add(x, neg(y)); }
  Value neg(Value x) const;
  Value mul(Value x, Value y) const;
  Value inv(Value x) const;
  Value div(Value x, Value y) const { return mul(x, inv(y)); }
  // Negative exponents are allowed for non-zero x.
  Value pow(Value x, long long e) const;
  // x^(p^i).
  Value frobenius(Value x, unsigned i = 1) const;
  // Discrete logarithm to base primitive(); x must be non-zero.
  std::uint32_t log(Value x) const;
  Value exp(long long n) const;
  // Embedding of the prime field element c.
  Value from_int(long long c) const;

  // Fixed points of x -> x^(p^a0), sorted; a0 must divide a.
  std::vector<Value> subfield(std::uint32_t a0) const;

  // x -> x^(sqrt q); defined only for even a.
  bool has_conjugation() const { return a_ % 2 == 0; }
  Value conjugate(Value x) const;

  std::vector<std::uint32_t> digits(Value x) const;
  Value from_digits(const std::vector<std::uint32_t>& d) const;

  GaloisField(std::uint32_t p, std::uint32_t a);

 private:
  void check(Value x) const;

  std::uint32_t p_;
  std::uint32_t a_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Value> exp_;       // length 2(q-1)
  std::vector<std::uint32_t> log_;
  std::vector<Value> neg_;
  std::vector<std::uint16_t> add_table_;  // filled for q <= 256
};

// The Conway polynomial C(p,a), computed as the least primitive polynomial in
// the standard ordering compatible with all C(p,d), d | a.
std::vector<std::uint32_t> conway_polynomial(std::uint32_t p, std::uint32_t a);

bool is_prime(std::uint64_t n);
// q = p^a with p prime; returns false when q is not a prime power.
bool prime_power(std::uint64_t q, std::uint32_t& p, std::uint32_t& a);

// Value type bound to a field.
class FieldElement {
 public:
  FieldElement(std::shared_ptr<const GaloisField> field, GaloisField::Value value);

  const GaloisField& field() const { return *field_; }
  GaloisField::Value value() const { return value_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement inv() const;
  FieldElement pow(long long e) const;
  FieldElement frobenius(unsigned i = 1) const;
  FieldElement conjugate() const;
  bool is_zero() const { return value_ == 0; }

  bool operator==(const FieldElement& o) const;

 private:
  void same_field(const FieldElement& o) const;

  std::shared_ptr<const GaloisField> field_;
  GaloisField::Value value_;
};

FieldElement hermitian_conjugate(const FieldElement& e);
std::vector<FieldElement> subfield_elements(const std::shared_ptr<const GaloisField>& f, std::uint32_t a0);

}  // namespace jnt
