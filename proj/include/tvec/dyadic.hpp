#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tvec {

using Int = boost::multiprecision::cpp_int;

/// Binary digits, most significant first.  Words may carry trailing zeros;
/// the empty word is the root address and denotes the value 0.
using BinaryWord = std::vector<int>;

/// Exact signed dyadic rational num / 2^exp.
///
/// Canonical form: num is odd, or exp == 0.  Exponents are machine ints;
/// operations that would push the exponent past an internal bound throw
/// std::overflow_error instead of wrapping.
class DyadicFraction {
public:
  DyadicFraction() = default;
  DyadicFraction(Int num, int exp);

  const Int& num() const { return num_; }
  int exp() const { return exp_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }

  DyadicFraction operator+(const DyadicFraction& o) const;
  DyadicFraction operator-(const DyadicFraction& o) const;
  DyadicFraction operator-() const;
  /// Value multiplied by 2^e (e may be negative).
  DyadicFraction shifted(int e) const;

  Int floor() const;
  /// Representative in [0, 1).
  DyadicFraction mod1() const;

  std::strong_ordering operator<=>(const DyadicFraction& o) const;
  bool operator==(const DyadicFraction& o) const = default;

  /// "0", "2", "-3/2", "5/8".  Denominator printed as a plain integer.
  std::string str() const;
  /// Accepts "p/q" with q a power of two, plain integers, and binary-point
  /// form "0.101" / ".101", each with an optional leading '-'.
  static std::optional<DyadicFraction> parse(std::string_view text);

private:
  void canonicalize();

  Int num_ = 0;
  int exp_ = 0;
};

/// A dyadic point of the unit circle: p/2^k with 0 <= value < 1, all
/// arithmetic taken mod 1 (the value 1 is the same point as 0).
class Dyadic {
public:
  Dyadic() = default;
  explicit Dyadic(const DyadicFraction& v) : frac_(v.mod1()) {}
  static Dyadic from_parts(Int num, int exp) {
    return Dyadic(DyadicFraction(std::move(num), exp));
  }

  const DyadicFraction& fraction() const { return frac_; }
  const Int& num() const { return frac_.num(); }
  int exp() const { return frac_.exp(); }
  bool is_zero() const { return frac_.is_zero(); }

  Dyadic plus(const Dyadic& o) const { return Dyadic(frac_ + o.frac_); }
  Dyadic minus(const Dyadic& o) const { return Dyadic(frac_ - o.frac_); }
  /// 2^e * value, mod 1.
  Dyadic scaled(int e) const { return Dyadic(frac_.shifted(e)); }

  std::strong_ordering operator<=>(const Dyadic& o) const = default;
  bool operator==(const Dyadic& o) const = default;

  std::string str() const { return frac_.str(); }
  /// "0." followed by the canonical digits ("0." alone for zero).
  std::string binary_str() const;
  /// Accepts both textual forms; any parsed value is reduced mod 1.
  static std::optional<Dyadic> parse(std::string_view text);

private:
  DyadicFraction frac_;
};

/// Sum of w_i * 2^(-i), in canonical form.
Dyadic word_to_dyadic(const BinaryWord& w);

/// Canonical binary expansion, zero-padded on the right to `length` when
/// requested.  Throws std::invalid_argument if length < exponent of d.
BinaryWord dyadic_to_word(const Dyadic& d,
                          std::optional<int> length = std::nullopt);

/// Sum of the binary digits of the canonical expansion, mod 2.
/// parity(0) = 0.
int parity(const Dyadic& d);

}  // namespace tvec
