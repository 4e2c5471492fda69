#pragma once

#include <cstdint>

namespace bei {

/// The prime field F_p with 2 < p < 2^31.
class PrimeField {
 public:
  static constexpr std::uint32_t kDefaultPrime = 32003;

  /// Throws InputError unless p is an odd prime below 2^31.
  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t p() const { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t from_int(long long v) const;
  /// Representative in (-p/2, p/2].
  long long to_signed(std::uint32_t a) const { return a > p_ / 2 ? static_cast<long long>(a) - p_ : a; }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t p);

}  // namespace bei
