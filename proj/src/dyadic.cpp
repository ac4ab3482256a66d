#include "tvec/dyadic.hpp"

#include <cctype>
#include <stdexcept>

namespace tvec {

namespace {

constexpr int kMaxExp = 1 << 20;

void check_exp(long long e) {
  if (e < 0 || e > kMaxExp)
    throw std::overflow_error("dyadic exponent out of range: " +
                              std::to_string(e));
}

Int pow2(int e) {
  check_exp(e);
  return Int(1) << e;
}

}  // namespace

DyadicFraction::DyadicFraction(Int num, int exp)
    : num_(std::move(num)), exp_(exp) {
  if (exp < 0) throw std::invalid_argument("negative dyadic exponent");
  check_exp(exp);
  canonicalize();
}

void DyadicFraction::canonicalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  bool neg = num_ < 0;
  Int mag = neg ? Int(-num_) : num_;
  while (exp_ > 0 && (mag & 1) == 0) {
    mag >>= 1;
    --exp_;
  }
  num_ = neg ? Int(-mag) : mag;
}

DyadicFraction DyadicFraction::operator+(const DyadicFraction& o) const {
  int m = std::max(exp_, o.exp_);
  return DyadicFraction(num_ * pow2(m - exp_) + o.num_ * pow2(m - o.exp_), m);
}

DyadicFraction DyadicFraction::operator-(const DyadicFraction& o) const {
  return *this + (-o);
}

DyadicFraction DyadicFraction::operator-() const {
  DyadicFraction r = *this;
  r.num_ = -r.num_;
  return r;
}

DyadicFraction DyadicFraction::shifted(int e) const {
  if (is_zero()) return {};
  if (e >= 0) {
    check_exp(static_cast<long long>(exp_));
    return DyadicFraction(num_ * pow2(e), exp_);
  }
  check_exp(static_cast<long long>(exp_) - e);
  return DyadicFraction(num_, exp_ - e);
}

Int DyadicFraction::floor() const {
  if (num_ >= 0) return num_ >> exp_;
  Int mag = -num_;
  Int q = (mag + pow2(exp_) - 1) >> exp_;
  return -q;
}

DyadicFraction DyadicFraction::mod1() const {
  return *this - DyadicFraction(floor(), 0);
}

std::strong_ordering DyadicFraction::operator<=>(
    const DyadicFraction& o) const {
  int m = std::max(exp_, o.exp_);
  Int a = num_ * pow2(m - exp_);
  Int b = o.num_ * pow2(m - o.exp_);
  if (a < b) return std::strong_ordering::less;
  if (a > b) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string DyadicFraction::str() const {
  if (exp_ == 0) return num_.str();
  return num_.str() + "/" + pow2(exp_).str();
}

std::optional<DyadicFraction> DyadicFraction::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool neg = false;
  if (text.front() == '-') {
    neg = true;
    text.remove_prefix(1);
    if (text.empty()) return std::nullopt;
  }
  auto all_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  DyadicFraction out;
  auto slash = text.find('/');
  auto dot = text.find('.');
  if (slash != std::string_view::npos) {
    auto p = text.substr(0, slash);
    auto q = text.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) return std::nullopt;
    Int num{std::string(p)};
    Int den{std::string(q)};
    if (den <= 0) return std::nullopt;
    int exp = 0;
    while ((den & 1) == 0) {
      den >>= 1;
      ++exp;
      if (exp > kMaxExp) return std::nullopt;
    }
    if (den != 1) return std::nullopt;
    out = DyadicFraction(num, exp);
  } else if (dot != std::string_view::npos) {
    auto ip = text.substr(0, dot);
    auto fp = text.substr(dot + 1);
    if (!ip.empty() && !all_digits(ip)) return std::nullopt;
    Int num = ip.empty() ? Int(0) : Int(std::string(ip));
    for (char c : fp) {
      if (c != '0' && c != '1') return std::nullopt;
      num = num * 2 + (c - '0');
    }
    if (fp.size() > static_cast<size_t>(kMaxExp)) return std::nullopt;
    out = DyadicFraction(num, static_cast<int>(fp.size()));
  } else {
    if (!all_digits(text)) return std::nullopt;
    out = DyadicFraction(Int(std::string(text)), 0);
  }
  return neg ? -out : out;
}

std::string Dyadic::binary_str() const {
  std::string s = "0.";
  for (int b : dyadic_to_word(*this)) s += static_cast<char>('0' + b);
  return s;
}

std::optional<Dyadic> Dyadic::parse(std::string_view text) {
  auto f = DyadicFraction::parse(text);
  if (!f) return std::nullopt;
  return Dyadic(*f);
}

Dyadic word_to_dyadic(const BinaryWord& w) {
  Int num = 0;
  for (int b : w) {
    if (b != 0 && b != 1) throw std::invalid_argument("binary digit not 0/1");
    num = num * 2 + b;
  }
  if (w.size() > static_cast<size_t>(1 << 20))
    throw std::overflow_error("binary word too long");
  return Dyadic::from_parts(num, static_cast<int>(w.size()));
}

BinaryWord dyadic_to_word(const Dyadic& d, std::optional<int> length) {
  int k = d.exp();
  if (length && *length < k)
    throw std::invalid_argument("length " + std::to_string(*length) +
                                " too short for exponent " +
                                std::to_string(k));
  int n = length ? *length : k;
  BinaryWord w(n, 0);
  Int mag = d.num();
  for (int i = k - 1; i >= 0 && mag != 0; --i) {
    w[i] = static_cast<int>(mag & 1);
    mag >>= 1;
  }
  return w;
}

int parity(const Dyadic& d) {
  Int mag = d.num();
  int p = 0;
  while (mag != 0) {
    p ^= static_cast<int>(mag & 1);
    mag >>= 1;
  }
  return p;
}

}  // namespace tvec
