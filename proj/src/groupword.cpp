#include "tvec/groupword.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace tvec {

namespace {

char family_char(GenFamily f) {
  switch (f) {
    case GenFamily::x: return 'x';
    case GenFamily::c: return 'c';
    case GenFamily::g: return 'g';
  }
  return '?';
}

void validate(const GroupLetter& l) {
  int min_index = l.family == GenFamily::g ? 1 : 0;
  if (l.index < min_index)
    throw std::invalid_argument(std::string("bad generator index: ") +
                                family_char(l.family) +
                                std::to_string(l.index));
}

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  size_t i = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
    if (s.size() == 1) return false;
  }
  long v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    v = v * 10 + (s[i] - '0');
    if (v > 1'000'000) return false;
  }
  out = static_cast<int>(neg ? -v : v);
  return true;
}

GroupLetter parse_token(std::string_view tok) {
  std::string_view name = tok;
  int exponent = 1;
  if (auto caret = tok.find('^'); caret != std::string_view::npos) {
    name = tok.substr(0, caret);
    if (!parse_int(tok.substr(caret + 1), exponent))
      throw std::invalid_argument("bad exponent in token: " +
                                  std::string(tok));
  }
  GenFamily fam;
  int index = -1;
  if (name == "f12") {
    fam = GenFamily::c;
    index = 0;
  } else if (name == "c") {
    fam = GenFamily::c;
    index = 1;
  } else if (!name.empty() &&
             (name[0] == 'x' || name[0] == 'c' || name[0] == 'g') &&
             parse_int(name.substr(1), index) && index >= 0) {
    fam = name[0] == 'x' ? GenFamily::x
                         : (name[0] == 'c' ? GenFamily::c : GenFamily::g);
  } else {
    throw std::invalid_argument("unknown generator: " + std::string(tok));
  }
  GroupLetter l{fam, index, exponent};
  validate(l);
  return l;
}

}  // namespace

GroupWord::GroupWord(std::vector<GroupLetter> letters)
    : letters_(std::move(letters)) {
  for (const auto& l : letters_) validate(l);
  normalize();
}

GroupWord GroupWord::letter(GenFamily family, int index, int exponent) {
  return GroupWord({GroupLetter{family, index, exponent}});
}

void GroupWord::normalize() {
  std::vector<GroupLetter> out;
  for (const auto& l : letters_) {
    if (l.exponent == 0) continue;
    if (!out.empty() && out.back().family == l.family &&
        out.back().index == l.index) {
      out.back().exponent += l.exponent;
      if (out.back().exponent == 0) out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  letters_ = std::move(out);
}

GroupWord GroupWord::parse(std::string_view text) {
  std::vector<GroupLetter> letters;
  std::istringstream in{std::string(text)};
  std::string tok;
  std::vector<std::string> toks;
  while (in >> tok) toks.push_back(tok);
  if (toks.size() == 1 && toks[0] == "1") return {};
  for (const auto& t : toks) letters.push_back(parse_token(t));
  return GroupWord(std::move(letters));
}

int GroupWord::length() const {
  int n = 0;
  for (const auto& l : letters_) n += std::abs(l.exponent);
  return n;
}

GroupWord GroupWord::inverse() const {
  std::vector<GroupLetter> out;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.push_back({it->family, it->index, -it->exponent});
  return GroupWord(std::move(out));
}

GroupWord GroupWord::operator*(const GroupWord& o) const {
  std::vector<GroupLetter> out = letters_;
  out.insert(out.end(), o.letters_.begin(), o.letters_.end());
  return GroupWord(std::move(out));
}

std::string GroupWord::str() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += ' ';
    out += family_char(l.family);
    out += std::to_string(l.index);
    if (l.exponent != 1) out += "^" + std::to_string(l.exponent);
  }
  return out;
}

}  // namespace tvec
