#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace tvec {

enum class GenFamily { x, c, g };

struct GroupLetter {
  GenFamily family;
  int index;
  int exponent;
  bool operator==(const GroupLetter&) const = default;
};

/// Formal word over the generator alphabet x_i (i >= 0), c_n (n >= 0) and
/// g_n (n >= 1).  Adjacent letters with the same name are merged and zero
/// exponents dropped.  Textual form: whitespace-separated letters such as
/// "x0 x1^-1 c2^3 f12"; the aliases c = c1 and f12 = c0 are accepted on
/// input, and "1" (or the empty string) is the identity.
class GroupWord {
public:
  GroupWord() = default;
  explicit GroupWord(std::vector<GroupLetter> letters);
  static GroupWord letter(GenFamily family, int index, int exponent = 1);

  /// Throws std::invalid_argument naming the offending token.
  static GroupWord parse(std::string_view text);

  const std::vector<GroupLetter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  /// Total number of single-generator factors (sum of |exponent|).
  int length() const;

  GroupWord inverse() const;
  GroupWord operator*(const GroupWord& o) const;
  bool operator==(const GroupWord& o) const = default;

  std::string str() const;

private:
  void normalize();

  std::vector<GroupLetter> letters_;
};

}  // namespace tvec
