#include "qbsa/scalar.hpp"

#include <charconv>
#include <cstdlib>
#include <numeric>

#include "qbsa/error.hpp"

namespace qbsa {

namespace {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::int64_t> parse_int(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return std::nullopt;
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

Characteristic::Characteristic(std::int64_t p) : p_(p) {
  if (p != 0 && (p >= (std::int64_t{1} << 31) || !is_prime(p)))
    fail(ErrorCode::BadCharacteristic, "characteristic must be 0 or a prime, got " + std::to_string(p));
}

Scalar::Scalar(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ == 0) fail(ErrorCode::ZeroScalar, "scalar with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const std::int64_t g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

std::optional<Scalar> Scalar::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto n = parse_int(text);
    if (!n) return std::nullopt;
    return Scalar(*n);
  }
  auto n = parse_int(text.substr(0, slash));
  auto d = parse_int(text.substr(slash + 1));
  if (!n || !d || *d <= 0) return std::nullopt;
  return Scalar(*n, *d);
}

bool Scalar::nonzero_in(Characteristic ch) const noexcept {
  if (ch.is_zero()) return num_ != 0;
  const std::int64_t p = ch.value();
  return num_ % p != 0 && den_ % p != 0;
}

std::string Scalar::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace qbsa
