#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace qbsa {

/// Field characteristic used for an analysis: 0 or a prime.
class Characteristic {
 public:
  constexpr Characteristic() = default;
  /// Throws BadCharacteristic unless p is 0 or a prime below 2^31.
  explicit Characteristic(std::int64_t p);

  constexpr std::int64_t value() const noexcept { return p_; }
  constexpr bool is_zero() const noexcept { return p_ == 0; }
  auto operator<=>(const Characteristic&) const = default;

 private:
  std::int64_t p_ = 0;
};

/// Exact nonzero-or-zero rational in lowest terms with positive denominator.
class Scalar {
 public:
  constexpr Scalar() = default;
  Scalar(std::int64_t num, std::int64_t den = 1);

  static std::optional<Scalar> parse(std::string_view text);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_ == 0; }
  bool is_one() const noexcept { return num_ == 1 && den_ == 1; }

  /// False when the reduction mod p is zero or undefined.
  bool nonzero_in(Characteristic ch) const noexcept;

  std::string to_string() const;

  bool operator==(const Scalar&) const = default;

 private:
  std::int64_t num_ = 1;
  std::int64_t den_ = 1;
};

}  // namespace qbsa
