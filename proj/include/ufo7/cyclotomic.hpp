#ifndef UFO7_CYCLOTOMIC_HPP
#define UFO7_CYCLOTOMIC_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <iosfwd>

#include <gmpxx.h>

namespace ufo7 {

using Rat = mpq_class;

/// Element of Q(zeta), zeta a fixed primitive 12th root of unity, in the
/// power basis {1, z, z^2, z^3} with z^4 = z^2 - 1.  Coordinates are exact
/// rationals in lowest terms, so equality is coordinatewise.
class Cyc {
public:
  Cyc() = default;
  Cyc(long n) { c_[0] = n; }
  explicit Cyc(const Rat& r) { c_[0] = r; }
  Cyc(const Rat& c0, const Rat& c1, const Rat& c2, const Rat& c3)
      : c_{c0, c1, c2, c3} {}

  /// Canonical form of zeta^k, any integer k.
  static const Cyc& zeta(int k);
  static Cyc one() { return Cyc(1); }

  const Rat& coord(int i) const { return c_[static_cast<size_t>(i)]; }

  bool is_zero() const;
  bool is_one() const { return *this == Cyc(1); }

  Cyc& operator+=(const Cyc& o);
  Cyc& operator-=(const Cyc& o);
  Cyc& operator*=(const Cyc& o);
  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
  friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }
  Cyc operator-() const;

  /// Multiplicative inverse; throws std::domain_error on zero.
  Cyc inv() const;

  /// a^n for any integer n (n < 0 inverts first).
  Cyc pow(long n) const;

  /// Multiplicative order if this is a 12th root of unity, else nullopt.
  std::optional<int> root_of_unity_order() const;

  bool operator==(const Cyc& o) const { return c_ == o.c_; }
  bool operator!=(const Cyc& o) const { return !(*this == o); }

  /// Canonical text form: terms in increasing power order, lowest-terms
  /// rationals, "z^k" notation, zero printed as "0".
  std::string str() const;

  /// Parses the cyclotomic literal grammar; throws CycParseError.
  static Cyc parse(std::string_view s);

private:
  std::array<Rat, 4> c_{};
};

struct CycParseError : std::runtime_error {
  CycParseError(const std::string& msg, size_t position)
      : std::runtime_error(msg + " at position " + std::to_string(position)),
        pos(position) {}
  size_t pos;
};

std::ostream& operator<<(std::ostream& os, const Cyc& a);

} // namespace ufo7

#endif
