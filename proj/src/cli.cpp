#include "tvec/cli.hpp"

#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tvec/core2.hpp"
#include "tvec/jones.hpp"
#include "tvec/presentation.hpp"
#include "tvec/t3.hpp"
#include "tvec/treepair.hpp"

namespace tvec {

namespace {

using nlohmann::json;

TreePair pair_of_word(const std::string& text) {
  return from_word(GroupWord::parse(text));
}

TreePair parse_pair(const std::string& text) {
  auto tp = TreePair::parse(text);
  if (!tp)
    throw std::invalid_argument("cannot parse tree pair: " + text);
  return *tp;
}

Dyadic parse_point(const std::string& text) {
  auto d = Dyadic::parse(text);
  if (!d) throw std::invalid_argument("cannot parse point: " + text);
  return *d;
}

struct Options {
  std::string word;
  std::string point;
  std::string pair;
  std::string suite;
  std::vector<std::string> gen_words;
  int cap = 30;
  int range = 5;
  int arity = 3;
  int torder = 2;
  int max_leaves = 7;
  bool dot = false;
  bool presentation = false;
  bool json_out = false;
};

int run_eval(const Options& o, std::ostream& out) {
  Dyadic t = parse_point(o.point);
  Dyadic v = evaluate(pair_of_word(o.word), t);
  if (o.json_out)
    out << json{{"word", o.word},
                {"point", t.str()},
                {"value", v.str()},
                {"value_binary", v.binary_str()}}
               .dump()
        << "\n";
  else
    out << v.str() << "\n";
  return 0;
}

int run_mul(const Options& o, std::ostream& out) {
  TreePair p = pair_of_word(o.word);
  if (o.json_out)
    out << p.to_json().dump() << "\n";
  else
    out << p.str() << "\n";
  return 0;
}

int run_reduce(const Options& o, std::ostream& out) {
  TreePair p = reduce(parse_pair(o.pair));
  if (o.json_out)
    out << p.to_json().dump() << "\n";
  else
    out << p.str() << "\n";
  return 0;
}

int run_order(const Options& o, std::ostream& out) {
  auto k = order(pair_of_word(o.word), o.cap);
  if (o.json_out) {
    json j{{"word", o.word}, {"cap", o.cap}};
    if (k)
      j["order"] = *k;
    else
      j["order"] = nullptr;
    out << j.dump() << "\n";
  } else if (k) {
    out << *k << "\n";
  } else {
    out << "none up to " << o.cap << "\n";
  }
  return k ? 0 : 1;
}

int run_member(const Options& o, std::ostream& out) {
  TreePair f = pair_of_word(o.word);
  bool bip = member_vect_bipartite(f);
  ParityClass pc = member_vect_parity(f);
  if (o.json_out)
    out << json{{"word", o.word},
                {"bipartite", bip},
                {"parity", to_string(pc)}}
               .dump()
        << "\n";
  else
    out << "bipartite: " << (bip ? "yes" : "no")
        << "; parity: " << to_string(pc) << "\n";
  return bip ? 0 : 1;
}

int run_factor(const Options& o, std::ostream& out) {
  Factorization f = factorize(pair_of_word(o.word));
  if (o.json_out) {
    out << json{{"p", f.p.str()},
                {"n", f.n},
                {"m", f.m},
                {"q", f.q.str()}}
               .dump()
        << "\n";
  } else {
    out << "p: " << f.p.str() << "\n";
    out << "c: c" << 2 * f.n << "^" << f.m << "\n";
    out << "q: " << f.q.str() << "\n";
  }
  return 0;
}

int run_graph(const Options& o, std::ostream& out) {
  ThompsonGraph g = thompson_graph_of_pair(pair_of_word(o.word));
  auto bip = is_bipartite(g);
  if (bip.bipartite) g.coloring = bip.coloring;
  if (o.dot) {
    out << g.to_dot();
    return 0;
  }
  if (o.json_out) {
    json edges = json::array();
    for (const auto& [u, v] : g.edges) edges.push_back({u, v});
    json j{{"vertices", g.vertex_count},
           {"edges", edges},
           {"bipartite", bip.bipartite}};
    if (bip.bipartite)
      j["coloring"] = bip.coloring;
    else
      j["odd_cycle"] = bip.odd_cycle;
    out << j.dump() << "\n";
    return 0;
  }
  out << g.vertex_count << " vertices, " << g.edges.size() << " edges; "
      << (bip.bipartite ? "bipartite" : "not bipartite") << "\n";
  return 0;
}

std::vector<TreePair> parse_generators(const std::vector<std::string>& words) {
  std::vector<TreePair> gens;
  for (const auto& w : words) gens.push_back(pair_of_word(w));
  return gens;
}

int run_core(const Options& o, std::ostream& out) {
  CoreGraph core = build_core(parse_generators(o.gen_words));
  if (o.dot) out << core.to_dot();
  if (o.presentation) out << core_presentation(core).str() << "\n";
  if (o.json_out) {
    json rules = json::array();
    for (const auto& r : core_presentation(core).rules)
      rules.push_back({{"lhs", r.lhs}, {"rhs", r.rhs_left + r.rhs_right}});
    out << json{{"vertices", core.vertex_count()},
                {"base", core_presentation(core).base},
                {"rules", rules}}
               .dump()
        << "\n";
  } else if (!o.dot && !o.presentation) {
    out << core.vertex_count() << " vertices\n";
  }
  return 0;
}

int run_accept(const Options& o, std::ostream& out) {
  CoreGraph core = build_core(parse_generators(o.gen_words));
  bool acc = accepts(core, pair_of_word(o.word));
  if (o.json_out)
    out << json{{"word", o.word}, {"accepted", acc}}.dump() << "\n";
  else
    out << (acc ? "accepted" : "rejected") << "\n";
  return acc ? 0 : 1;
}

int run_verify(const Options& o, std::ostream& out) {
  SuiteReport report = relation_suite(o.suite, o.range);
  if (o.json_out)
    out << report.to_json().dump() << "\n";
  else
    out << report.str() << "\n";
  return report.ok() ? 0 : 1;
}

int run_standard_form(const Options& o, std::ostream& out) {
  StandardForm sf = symbolic_standard_form(GroupWord::parse(o.word));
  if (o.json_out) {
    out << json{{"p", sf.p.str()},
                {"n", sf.n},
                {"m", sf.m},
                {"q", sf.q.str()},
                {"word", sf.to_word().str()}}
               .dump()
        << "\n";
  } else {
    out << "p: " << sf.p.str() << "\n";
    out << "c: c" << 2 * sf.n << "^" << sf.m << "\n";
    out << "q: " << sf.q.str() << "\n";
    out << "word: " << sf.to_word().str() << "\n";
  }
  return 0;
}

int run_alpha(const Options& o, std::ostream& out) {
  DihedralElement d = dihedral_alpha(GroupWord::parse(o.word));
  if (o.json_out)
    out << json{{"translation", d.translation},
                {"flip", d.flip},
                {"identity", d.is_identity()}}
               .dump()
        << "\n";
  else
    out << d.str() << (d.is_identity() ? " (identity)" : "") << "\n";
  return 0;
}

int run_torsion(const Options& o, std::ostream& out) {
  auto hits = search_torsion(o.arity, o.torder, o.max_leaves);
  json j = json::array();
  for (const auto& h : hits) j.push_back(h.to_json());
  out << j.dump() << "\n";
  return 0;
}

int run_witness(const Options& o, std::ostream& out) {
  int n = commensurator_witness(pair_of_word(o.word), o.cap);
  if (o.json_out)
    out << json{{"word", o.word}, {"witness", n}}.dump() << "\n";
  else
    out << n << "\n";
  return 0;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact computations in the circle Thompson groups"};
  app.require_subcommand(1);
  Options o;

  auto* eval = app.add_subcommand("eval", "apply a word to a dyadic point");
  eval->add_option("word", o.word, "group word")->required();
  eval->add_option("point", o.point, "dyadic point, e.g. 3/4 or 0.11")
      ->required();

  auto* mul = app.add_subcommand("mul", "reduced product of a word");
  mul->add_option("word", o.word)->required();

  auto* red = app.add_subcommand("reduce", "reduce a tree pair 'R ; S ; n'");
  red->add_option("pair", o.pair)->required();

  auto* ord = app.add_subcommand("order", "order of an element, up to a cap");
  ord->add_option("word", o.word)->required();
  ord->add_option("--cap", o.cap, "search bound")->capture_default_str();

  auto* mem = app.add_subcommand("member", "membership tests for the "
                                           "bipartite subgroup");
  mem->add_option("word", o.word)->required();

  auto* fac = app.add_subcommand("factor", "factor a member as p c_{2n}^m q");
  fac->add_option("word", o.word)->required();

  auto* gra = app.add_subcommand("graph", "Thompson graph of an element");
  gra->add_option("word", o.word)->required();
  gra->add_flag("--dot", o.dot, "emit DOT");

  auto* cor = app.add_subcommand("core", "folded core of a subgroup");
  cor->add_option("generators", o.gen_words, "generator words")->required();
  cor->add_flag("--dot", o.dot, "emit DOT");
  cor->add_flag("--presentation", o.presentation,
                "emit the rewriting presentation");

  auto* acc = app.add_subcommand("accept", "test an element against a core");
  acc->add_option("--core-from", o.gen_words, "generator words")->required();
  acc->add_option("word", o.word)->required();

  auto* ver = app.add_subcommand("verify", "run a relation suite");
  ver->add_option("suite", o.suite,
                  "classical | infinite-presentation | power-raise | commutation | finite-presentation")
      ->required();
  ver->add_option("--range", o.range, "max index")->capture_default_str();

  auto* stf = app.add_subcommand("standard-form",
                                 "rewrite a g/c word to p c_{2n}^m q^-1");
  stf->add_option("word", o.word)->required();

  auto* alp = app.add_subcommand("alpha", "image in the dihedral quotient");
  alp->add_option("word", o.word)->required();

  auto* tor = app.add_subcommand("torsion", "search for torsion elements");
  tor->add_option("--arity", o.arity)->capture_default_str();
  tor->add_option("--order", o.torder)->capture_default_str();
  tor->add_option("--max-leaves", o.max_leaves)->capture_default_str();

  auto* wit = app.add_subcommand("witness",
                                 "commensurator witness exponent for a "
                                 "non-member");
  wit->add_option("word", o.word)->required();
  wit->add_option("--cap", o.cap)->capture_default_str();

  for (auto* sub : std::initializer_list<CLI::App*>{
           eval, mul, red, ord, mem, fac, gra, cor, acc, ver, stf, alp, tor,
           wit})
    sub->add_flag("--json", o.json_out, "machine-readable output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help lands here.
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (eval->parsed()) return run_eval(o, out);
    if (mul->parsed()) return run_mul(o, out);
    if (red->parsed()) return run_reduce(o, out);
    if (ord->parsed()) return run_order(o, out);
    if (mem->parsed()) return run_member(o, out);
    if (fac->parsed()) return run_factor(o, out);
    if (gra->parsed()) return run_graph(o, out);
    if (cor->parsed()) return run_core(o, out);
    if (acc->parsed()) return run_accept(o, out);
    if (ver->parsed()) return run_verify(o, out);
    if (stf->parsed()) return run_standard_form(o, out);
    if (alp->parsed()) return run_alpha(o, out);
    if (tor->parsed()) return run_torsion(o, out);
    if (wit->parsed()) return run_witness(o, out);
  } catch (const CapExhausted& e) {
    out << "none up to the cap: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace tvec
