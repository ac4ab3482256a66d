#include "tvec/presentation.hpp"

#include <stdexcept>

namespace tvec {

bool verify_relation(const GroupWord& lhs, const GroupWord& rhs) {
  return equal(from_word(lhs), from_word(rhs));
}

namespace {

GroupWord W(const std::string& s) { return GroupWord::parse(s); }

GroupWord x(int i, int e = 1) { return GroupWord::letter(GenFamily::x, i, e); }
GroupWord c(int i, int e = 1) { return GroupWord::letter(GenFamily::c, i, e); }
GroupWord g(int i, int e = 1) { return GroupWord::letter(GenFamily::g, i, e); }

// The twelve relations of the finite presentation, as fixture data.
const char* kFinitePresentation[][2] = {
    {"g1^-1 g3 g1", "g2^-1 g3 g2"},
    {"g1^-3 g2 g1^3", "g3^-1 g1^-2 g2 g1^2 g3"},
    {"g1^-2 g3 g1^2", "g2^-1 g1^-1 g3 g1 g2"},
    {"g1^-2 g3 g1^2", "g3^-1 g1^-1 g3 g1 g3"},
    {"g1^-2 g2 g1^2", "g2^-1 g1^-1 g2 g1 g2"},
    {"g1^-2 g2 g1^2", "g3^-1 g1^-1 g2 g1 g3"},
    {"c2 g2", "g1 c4"},
    {"c2 g3", "g2 c4"},
    {"c4 g4", "g3 c6"},
    {"c0 g1", "c2^3"},
    {"c2 g1", "c4^3"},
    {"c0^2", "1"},
};

void add(std::vector<RelationInstance>& out, std::string name, GroupWord lhs,
         GroupWord rhs) {
  out.push_back({std::move(name), std::move(lhs), std::move(rhs)});
}

std::string idx(std::initializer_list<int> vals) {
  std::string s;
  for (int v : vals) s += (s.empty() ? "" : ",") + std::to_string(v);
  return "(" + s + ")";
}

}  // namespace

std::vector<RelationInstance> suite_instances(const std::string& suite,
                                              int range) {
  if (range < 1) throw std::invalid_argument("range must be >= 1");
  std::vector<RelationInstance> out;
  if (suite == "classical") {
    // Mixed x/c relations of the ambient circle group.
    for (int n = 0; n <= range; ++n) {
      for (int k = 0; k < n; ++k)
        add(out, "conj" + idx({n, k}), x(k, -1) * x(n) * x(k), x(n + 1));
      add(out, "split" + idx({n}), c(n), x(n) * c(n + 1));
      for (int k = 1; k <= n; ++k)
        add(out, "slide" + idx({n, k}), c(n) * x(k), x(k - 1) * c(n + 1));
      add(out, "square" + idx({n}), c(n) * x(0), c(n + 1, 2));
      add(out, "torsion" + idx({n}), c(n, n + 2), {});
    }
  } else if (suite == "infinite-presentation") {
    // Defining relations of the bipartite subgroup on g_k and c_{2n}.
    for (int n = 0; n <= range; ++n) {
      for (int k = 1; k < n; ++k)
        add(out, "conj" + idx({n, k}), g(k, -1) * g(n) * g(k), g(n + 2));
      add(out, "torsion" + idx({n}), c(2 * n, 2 * n + 2), {});
      add(out, "split" + idx({n}), c(2 * n), g(2 * n + 1) * c(2 * n + 2));
      for (int k = 2; k < 2 * n + 2; ++k)
        add(out, "slide" + idx({n, k}), c(2 * n) * g(k),
            g(k - 1) * c(2 * n + 2));
      add(out, "cube" + idx({n}), c(2 * n) * g(1), c(2 * n + 2, 3));
    }
  } else if (suite == "power-raise") {
    // Comb powers raised one subscript, emitting a g letter on either side.
    for (int n = 0; n <= range; ++n)
      for (int m = 1; m <= 2 * n + 1; ++m) {
        add(out, "left" + idx({n, m}), c(2 * n, m),
            g(2 * n + 1 - (m - 1)) * c(2 * n + 2, m));
        add(out, "right" + idx({n, m}), c(2 * n, m),
            c(2 * n + 2, m + 2) * g(m, -1));
      }
  } else if (suite == "commutation") {
    // Moving a g letter left through a comb power; three index regimes.
    for (int n = 0; n <= range; ++n)
      for (int m = 1; m < 2 * n + 2; ++m)
        for (int k = 1; k < 2 * n + 2; ++k) {
          GroupWord rhs;
          if (k > m)
            rhs = g(k - m) * c(2 * n + 2, m);
          else if (k == m)
            rhs = c(2 * n + 2, m + 2);
          else
            rhs = g(2 * n + 2 + k - m) * c(2 * n + 2, m + 2);
          add(out, "move" + idx({n, m, k}), c(2 * n, m) * g(k), rhs);
        }
  } else if (suite == "finite-presentation") {
    int i = 0;
    for (const auto& rel : kFinitePresentation)
      add(out, "fp" + std::to_string(++i), W(rel[0]), W(rel[1]));
  } else {
    throw std::invalid_argument("unknown suite: " + suite);
  }
  return out;
}

SuiteReport relation_suite(const std::string& suite, int range) {
  SuiteReport report;
  report.suite = suite;
  for (auto& inst : suite_instances(suite, range)) {
    ++report.total;
    if (!verify_relation(inst.lhs, inst.rhs))
      report.failures.push_back(std::move(inst));
  }
  return report;
}

std::string SuiteReport::str() const {
  std::string out = std::to_string(total - static_cast<int>(failures.size())) +
                    "/" + std::to_string(total) + " relations hold";
  for (const auto& f : failures) {
    out += "\nFAIL " + f.name + ": " + f.lhs.str() + " = " + f.rhs.str();
    out += "\n  lhs reduces to " + reduce(from_word(f.lhs)).str();
    out += "\n  rhs reduces to " + reduce(from_word(f.rhs)).str();
  }
  return out;
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json fails = nlohmann::json::array();
  for (const auto& f : failures)
    fails.push_back({{"name", f.name},
                     {"lhs", f.lhs.str()},
                     {"rhs", f.rhs.str()},
                     {"lhs_reduced", reduce(from_word(f.lhs)).str()},
                     {"rhs_reduced", reduce(from_word(f.rhs)).str()}});
  return {{"suite", suite},
          {"total", total},
          {"held", total - static_cast<int>(failures.size())},
          {"failures", fails}};
}

namespace {

// Positive-negative form in the g alphabet.  Letters are (index, sign);
// the only moves are  g_a^-1 g_b -> g_{b+2} g_a^-1  (a < b),
// g_a^-1 g_b -> g_b g_{a+2}^-1  (a > b)  and cancellation (a = b).
// Each move cancels a pair or swaps an inverted adjacency, so the scan
// terminates.
void positive_negative(std::vector<std::pair<int, int>> word,
                       std::vector<int>& pos, std::vector<int>& neg_rev) {
  bool moved = true;
  while (moved) {
    moved = false;
    for (size_t i = 0; i + 1 < word.size(); ++i) {
      if (word[i].second != -1 || word[i + 1].second != 1) continue;
      int a = word[i].first, b = word[i + 1].first;
      if (a == b) {
        word.erase(word.begin() + static_cast<long>(i),
                   word.begin() + static_cast<long>(i) + 2);
      } else if (a < b) {
        word[i] = {b + 2, 1};
        word[i + 1] = {a, -1};
      } else {
        word[i] = {b, 1};
        word[i + 1] = {a + 2, -1};
      }
      moved = true;
      break;
    }
  }
  for (const auto& [index, sign] : word)
    (sign == 1 ? pos : neg_rev).push_back(index);
  std::reverse(neg_rev.begin(), neg_rev.end());
}

struct CPower {
  // p * c_{2n}^m with p positive; m == 0 means the c part is trivial
  // (then n == 0 as well).
  std::vector<int> p;
  int n = 0;
  int m = 0;
};

// Raise the c subscript by one step, emitting a positive letter on the
// left: c_{2n}^m = g_{2n+2-m} c_{2n+2}^m  (1 <= m <= 2n+1).
void raise_left(CPower& cp) {
  cp.p.push_back(2 * cp.n + 2 - cp.m);
  ++cp.n;
}

// Absorb a positive letter g_k from the right through the c power:
//   k larger than the torsion window: raise the subscript first;
//   k > m: c^m g_k = g_{k-m} c_{2n+2}^m;
//   k = m: c^m g_k = c_{2n+2}^{m+2};
//   k < m: c^m g_k = g_{2n+2+k-m} c_{2n+2}^{m+2}.
void absorb_right(CPower& cp, int k) {
  if (cp.m == 0) {
    cp.p.push_back(k);
    return;
  }
  while (k >= 2 * cp.n + 2) raise_left(cp);
  if (k > cp.m) {
    cp.p.push_back(k - cp.m);
    ++cp.n;
  } else if (k == cp.m) {
    ++cp.n;
    cp.m += 2;
  } else {
    cp.p.push_back(2 * cp.n + 2 + k - cp.m);
    ++cp.n;
    cp.m += 2;
  }
}

struct SF {
  std::vector<int> p;
  int n = 0;
  int m = 0;
  std::vector<int> q;
};

SF multiply_sf(const SF& a, const SF& b) {
  // a.q^-1 * b.p, rewritten positive-negative.
  std::vector<std::pair<int, int>> mid;
  for (auto it = a.q.rbegin(); it != a.q.rend(); ++it) mid.push_back({*it, -1});
  for (int k : b.p) mid.push_back({k, 1});
  std::vector<int> p3, q3;
  positive_negative(std::move(mid), p3, q3);

  // Left half: a.p c_{2a.n}^{a.m} p3  ->  P c_{2nl}^{ml}.
  CPower left{a.p, a.n, a.m};
  for (int k : p3) absorb_right(left, k);

  // Right half: q3^-1 c_{2b.n}^{b.m} b.q^-1 = (b.q c^{-b.m} q3)^-1.
  CPower inv{b.q, b.n, b.m == 0 ? 0 : 2 * b.n + 2 - b.m};
  if (inv.m == 0) inv.n = 0;
  for (int k : q3) absorb_right(inv, k);
  int nr = inv.n;
  int mr = inv.m == 0 ? 0 : (2 * inv.n + 2 - inv.m) % (2 * inv.n + 2);
  if (mr == 0) nr = 0;
  std::vector<int> q_final = inv.p;

  // Merge the two c powers on a common subscript.
  SF out;
  if (left.m == 0) {
    out = {left.p, nr, mr, q_final};
  } else if (mr == 0) {
    out = {left.p, left.n, left.m, q_final};
  } else {
    while (left.n < nr) raise_left(left);
    while (nr < left.n) {
      // c_{2n}^m = c_{2n+2}^{m+2} g_m^-1 pushes a letter onto q.
      q_final.push_back(mr);
      ++nr;
      mr += 2;
    }
    int N = left.n;
    int M = (left.m + mr) % (2 * N + 2);
    out = M == 0 ? SF{left.p, 0, 0, q_final} : SF{left.p, N, M, q_final};
  }
  return out;
}

SF letter_sf(const GroupLetter& l) {
  if (l.family == GenFamily::x)
    throw std::invalid_argument("standard form needs a word over g and c");
  if (l.family == GenFamily::g) {
    if (l.exponent > 0) return {std::vector<int>(l.exponent, l.index), 0, 0, {}};
    return {{}, 0, 0, std::vector<int>(-l.exponent, l.index)};
  }
  if (l.index % 2 != 0)
    throw std::invalid_argument("standard form needs even c indices, got c" +
                                std::to_string(l.index));
  return {};  // c powers are expanded by the caller
}

}  // namespace

GroupWord StandardForm::to_word() const {
  GroupWord out = p;
  if (m > 0) out = out * GroupWord::letter(GenFamily::c, 2 * n, m);
  return out * q.inverse();
}

StandardForm symbolic_standard_form(const GroupWord& w) {
  SF acc;
  for (const GroupLetter& l : w.letters()) {
    if (l.family == GenFamily::c) {
      if (l.index % 2 != 0)
        throw std::invalid_argument(
            "standard form needs even c indices, got c" +
            std::to_string(l.index));
      int half = l.index / 2;
      int count = l.exponent > 0 ? l.exponent : -l.exponent;
      int m1 = l.exponent > 0 ? 1 : 2 * half + 1;  // c^-1 = c^(2n+1)
      for (int i = 0; i < count; ++i)
        acc = multiply_sf(acc, SF{{}, half, m1, {}});
    } else {
      acc = multiply_sf(acc, letter_sf(l));
    }
  }
  StandardForm out;
  std::vector<GroupLetter> pl, ql;
  for (int k : acc.p) pl.push_back({GenFamily::g, k, 1});
  for (int k : acc.q) ql.push_back({GenFamily::g, k, 1});
  out.p = GroupWord(std::move(pl));
  out.q = GroupWord(std::move(ql));
  out.n = acc.n;
  out.m = acc.m;
  return out;
}

DihedralElement DihedralElement::operator*(const DihedralElement& o) const {
  // Apply *this first, then o.
  return {o.flip ? o.translation - translation : o.translation + translation,
          flip ^ o.flip};
}

DihedralElement DihedralElement::inverse() const {
  return {flip ? translation : -translation, flip};
}

std::string DihedralElement::str() const {
  std::string t = flip ? "-t" : "t";
  if (translation > 0) t += " + " + std::to_string(translation);
  if (translation < 0) t += " - " + std::to_string(-translation);
  return "t -> " + t;
}

DihedralElement dihedral_alpha(const GroupWord& w) {
  DihedralElement acc;
  for (const GroupLetter& l : w.letters()) {
    DihedralElement base;
    if (l.family == GenFamily::x)
      throw std::invalid_argument("alpha needs a word over g and c");
    if (l.family == GenFamily::c) {
      if (l.index % 2 != 0)
        throw std::invalid_argument("alpha needs even c indices, got c" +
                                    std::to_string(l.index));
      base = {l.index / 2, 1};
    } else {
      base = l.index % 2 == 1 ? DihedralElement{1, 0} : DihedralElement{};
    }
    DihedralElement pow = DihedralElement::identity();
    int count = l.exponent > 0 ? l.exponent : -l.exponent;
    DihedralElement factor = l.exponent > 0 ? base : base.inverse();
    for (int i = 0; i < count; ++i) pow = pow * factor;
    acc = acc * pow;
  }
  return acc;
}

}  // namespace tvec
