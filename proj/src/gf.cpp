#include "jnt/gf.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "jnt/errors.hpp"

namespace jnt {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool prime_power(std::uint64_t q, std::uint32_t& p, std::uint32_t& a) {
  if (q < 2) return false;
  std::uint64_t d = 2;
  while (q % d != 0) ++d;
  std::uint32_t e = 0;
  std::uint64_t r = q;
  while (r % d == 0) {
    r /= d;
    ++e;
  }
  if (r != 1) return false;
  p = static_cast<std::uint32_t>(d);
  a = e;
  return true;
}

namespace {

using Poly = std::vector<std::uint32_t>;

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Arithmetic in GF(p)[x]/(f) for monic f of degree a; residues have length a.
struct QuotientRing {
  std::uint32_t p;
  Poly f;
  std::size_t a;

  Poly mul(const Poly& x, const Poly& y) const {
    std::vector<std::uint64_t> t(2 * a - 1, 0);
    for (std::size_t i = 0; i < a; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < a; ++j) t[i + j] = (t[i + j] + std::uint64_t{x[i]} * y[j]) % p;
    }
    for (std::size_t d = t.size(); d-- > a;) {
      const std::uint64_t c = t[d];
      if (c == 0) continue;
      // x^d = x^(d-a) * x^a and x^a = -sum f_i x^i.
      for (std::size_t i = 0; i < a; ++i) {
        t[d - a + i] = (t[d - a + i] + (p - f[i]) % p * c) % p;
      }
      t[d] = 0;
    }
    Poly r(a);
    for (std::size_t i = 0; i < a; ++i) r[i] = static_cast<std::uint32_t>(t[i]);
    return r;
  }

  Poly one() const {
    Poly r(a, 0);
    r[0] = 1 % p;
    return r;
  }

  Poly x() const {
    Poly r(a, 0);
    if (a == 1) {
      r[0] = (p - f[0]) % p;
    } else {
      r[1] = 1;
    }
    return r;
  }

  Poly pow(Poly b, std::uint64_t e) const {
    Poly r = one();
    while (e > 0) {
      if (e & 1U) r = mul(r, b);
      b = mul(b, b);
      e >>= 1U;
    }
    return r;
  }

  bool is_zero(const Poly& x) const {
    for (auto c : x) {
      if (c != 0) return false;
    }
    return true;
  }
};

bool is_primitive_poly(const QuotientRing& ring, std::uint64_t order) {
  const Poly x = ring.x();
  if (ring.pow(x, order) != ring.one()) return false;
  for (std::uint64_t r : prime_factors(order)) {
    if (ring.pow(x, order / r) == ring.one()) return false;
  }
  return true;
}

std::mutex conway_mutex;
std::map<std::pair<std::uint32_t, std::uint32_t>, Poly> conway_cache;

}  // namespace

std::vector<std::uint32_t> conway_polynomial(std::uint32_t p, std::uint32_t a) {
  if (!is_prime(p) || a == 0) throw DomainError("invalid field parameters");
  if (ipow(p, a) > GaloisField::kMaxOrder) throw DomainError("field order exceeds " + std::to_string(GaloisField::kMaxOrder));
  {
    std::lock_guard lock(conway_mutex);
    auto it = conway_cache.find({p, a});
    if (it != conway_cache.end()) return it->second;
  }
  std::vector<std::pair<std::uint32_t, Poly>> sub;
  for (std::uint32_t d = 1; d < a; ++d) {
    if (a % d == 0) sub.emplace_back(d, conway_polynomial(p, d));
  }
  const std::uint64_t q = ipow(p, a);
  Poly result;
  for (std::uint64_t n = 0; n < q && result.empty(); ++n) {
    Poly f(a + 1, 0);
    f[a] = 1;
    std::uint64_t rest = n;
    for (std::uint32_t i = 0; i < a; ++i) {
      const auto s = static_cast<std::uint32_t>(rest % p);
      rest /= p;
      // Coefficient of x^i enters the ordering with sign (-1)^(a-i).
      f[i] = ((a - i) % 2 == 0) ? s : (p - s) % p;
    }
    if (f[0] == 0) continue;
    const QuotientRing ring{p, f, a};
    if (!is_primitive_poly(ring, q - 1)) continue;
    bool compatible = true;
    for (const auto& [d, cd] : sub) {
      const Poly y = ring.pow(ring.x(), (q - 1) / (ipow(p, d) - 1));
      Poly acc(a, 0);
      for (std::size_t i = cd.size(); i-- > 0;) {
        acc = ring.mul(acc, y);
        acc[0] = (acc[0] + cd[i]) % p;
      }
      if (!ring.is_zero(acc)) {
        compatible = false;
        break;
      }
    }
    if (compatible) result = f;
  }
  if (result.empty()) throw Error("no Conway polynomial found");
  std::lock_guard lock(conway_mutex);
  conway_cache.emplace(std::make_pair(p, a), result);
  return result;
}

GaloisField::GaloisField(std::uint32_t p, std::uint32_t a) : p_(p), a_(a), q_(static_cast<std::uint32_t>(ipow(p, a))) {
  modulus_ = conway_polynomial(p, a);
  const QuotientRing ring{p, modulus_, a};
  auto to_value = [&](const Poly& c) {
    Value v = 0;
    for (std::size_t i = a; i-- > 0;) v = v * p + c[i];
    return v;
  };
  exp_.assign(2 * static_cast<std::size_t>(q_ - 1), 0);
  log_.assign(q_, 0);
  Poly cur = ring.one();
  const Poly x = ring.x();
  for (std::uint32_t i = 0; i < q_ - 1; ++i) {
    const Value v = to_value(cur);
    exp_[i] = v;
    exp_[i + q_ - 1] = v;
    log_[v] = i;
    cur = ring.mul(cur, x);
  }
  if (to_value(cur) != 1) throw Error("field modulus is not primitive");
  neg_.assign(q_, 0);
  for (Value v = 0; v < q_; ++v) {
    auto d = digits(v);
    for (auto& c : d) c = (p_ - c) % p_;
    neg_[v] = from_digits(d);
  }
  if (q_ <= 256) {
    add_table_.assign(static_cast<std::size_t>(q_) * q_, 0);
    for (Value x0 = 0; x0 < q_; ++x0) {
      for (Value y0 = 0; y0 < q_; ++y0) {
        auto dx = digits(x0);
        const auto dy = digits(y0);
        for (std::size_t i = 0; i < a_; ++i) dx[i] = (dx[i] + dy[i]) % p_;
        add_table_[static_cast<std::size_t>(x0) * q_ + y0] = static_cast<std::uint16_t>(from_digits(dx));
      }
    }
  }
}

std::shared_ptr<const GaloisField> GaloisField::get(std::uint32_t p, std::uint32_t a) {
  if (!is_prime(p) || a == 0) throw DomainError("GF(p^a) requires prime p and a >= 1");
  if (ipow(p, a) > kMaxOrder) throw DomainError("field order exceeds " + std::to_string(kMaxOrder));
  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const GaloisField>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{p, a}];
  if (!slot) slot = std::make_shared<const GaloisField>(p, a);
  return slot;
}

std::shared_ptr<const GaloisField> GaloisField::of_order(std::uint32_t q) {
  std::uint32_t p = 0;
  std::uint32_t a = 0;
  if (!prime_power(q, p, a)) throw DomainError(std::to_string(q) + " is not a prime power");
  return get(p, a);
}

std::string GaloisField::modulus_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = modulus_.size(); i-- > 0;) {
    const auto c = modulus_[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c != 1) os << c;
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

void GaloisField::check(Value x) const {
  if (x >= q_) throw DomainError("value " + std::to_string(x) + " is not an element of GF(" + std::to_string(q_) + ")");
}

std::vector<std::uint32_t> GaloisField::digits(Value x) const {
  check(x);
  std::vector<std::uint32_t> d(a_);
  for (std::size_t i = 0; i < a_; ++i) {
    d[i] = x % p_;
    x /= p_;
  }
  return d;
}

GaloisField::Value GaloisField::from_digits(const std::vector<std::uint32_t>& d) const {
  if (d.size() != a_) throw DomainError("digit vector has wrong length");
  Value v = 0;
  for (std::size_t i = a_; i-- > 0;) {
    if (d[i] >= p_) throw DomainError("digit out of range");
    v = v * p_ + d[i];
  }
  return v;
}

GaloisField::Value GaloisField::add(Value x, Value y) const {
  check(x);
  check(y);
  if (p_ == 2) return x ^ y;
  if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(x) * q_ + y];
  Value r = 0;
  Value scale = 1;
  for (std::size_t i = 0; i < a_; ++i) {
    r += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return r;
}

GaloisField::Value GaloisField::neg(Value x) const {
  check(x);
  return neg_[x];
}

GaloisField::Value GaloisField::mul(Value x, Value y) const {
  check(x);
  check(y);
  if (x == 0 || y == 0) return 0;
  return exp_[log_[x] + log_[y]];
}

GaloisField::Value GaloisField::inv(Value x) const {
  check(x);
  if (x == 0) throw DomainError("inverse of zero");
  return exp_[(q_ - 1 - log_[x]) % (q_ - 1)];
}

GaloisField::Value GaloisField::pow(Value x, long long e) const {
  check(x);
  if (x == 0) {
    if (e < 0) throw DomainError("negative power of zero");
    return e == 0 ? 1 : 0;
  }
  const long long m = q_ - 1;
  const long long r = ((static_cast<long long>(log_[x]) * (e % m)) % m + m) % m;
  return exp_[static_cast<std::size_t>(r)];
}

GaloisField::Value GaloisField::frobenius(Value x, unsigned i) const {
  check(x);
  Value r = x;
  for (unsigned j = 0; j < i % a_; ++j) r = pow(r, p_);
  return r;
}

std::uint32_t GaloisField::log(Value x) const {
  check(x);
  if (x == 0) throw DomainError("logarithm of zero");
  return log_[x];
}

GaloisField::Value GaloisField::exp(long long n) const {
  const long long m = q_ - 1;
  return exp_[static_cast<std::size_t>(((n % m) + m) % m)];
}

GaloisField::Value GaloisField::from_int(long long c) const {
  const long long r = ((c % static_cast<long long>(p_)) + p_) % p_;
  return static_cast<Value>(r);
}

std::vector<GaloisField::Value> GaloisField::subfield(std::uint32_t a0) const {
  if (a0 == 0 || a_ % a0 != 0) {
    throw DomainError(std::to_string(a0) + " does not divide the extension degree " + std::to_string(a_));
  }
  std::vector<Value> out;
  for (Value x = 0; x < q_; ++x) {
    if (frobenius(x, a0) == x) out.push_back(x);
  }
  return out;
}

GaloisField::Value GaloisField::conjugate(Value x) const {
  if (!has_conjugation()) {
    throw DomainError("GF(" + std::to_string(q_) + ") has no involutory automorphism x -> x^sqrt(q)");
  }
  return frobenius(x, a_ / 2);
}

// ---- FieldElement -------------------------------------------------------

FieldElement::FieldElement(std::shared_ptr<const GaloisField> field, GaloisField::Value value)
    : field_(std::move(field)), value_(value) {
  if (!field_) throw DomainError("field element without a field");
  if (value_ >= field_->q()) throw DomainError("value outside the field");
}

void FieldElement::same_field(const FieldElement& o) const {
  if (field_->p() != o.field_->p() || field_->a() != o.field_->a()) {
    throw DomainError("operands belong to different fields");
  }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  same_field(o);
  return {field_, field_->add(value_, o.value_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  same_field(o);
  return {field_, field_->sub(value_, o.value_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }
FieldElement FieldElement::operator*(const FieldElement& o) const {
  same_field(o);
  return {field_, field_->mul(value_, o.value_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  same_field(o);
  return {field_, field_->div(value_, o.value_)};
}
FieldElement FieldElement::inv() const { return {field_, field_->inv(value_)}; }
FieldElement FieldElement::pow(long long e) const { return {field_, field_->pow(value_, e)}; }
FieldElement FieldElement::frobenius(unsigned i) const { return {field_, field_->frobenius(value_, i)}; }
FieldElement FieldElement::conjugate() const { return {field_, field_->conjugate(value_)}; }
bool FieldElement::operator==(const FieldElement& o) const {
  same_field(o);
  return value_ == o.value_;
}

FieldElement hermitian_conjugate(const FieldElement& e) { return e.conjugate(); }

std::vector<FieldElement> subfield_elements(const std::shared_ptr<const GaloisField>& f, std::uint32_t a0) {
  std::vector<FieldElement> out;
  for (auto v : f->subfield(a0)) out.emplace_back(f, v);
  return out;
}

}  // namespace jnt
