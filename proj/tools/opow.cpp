// Command-line front end: batch queries over dictionary and tree files.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "opow/opow.hpp"

using namespace opow;
using nlohmann::json;

namespace {

// Exit codes: 0 success / positive decision, 1 negative decision or failed
// check, 2 malformed input.
constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitBadInput = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

DictFile load_dict(const std::string& path) { return parse_dict_file(read_file(path)); }

FiniteDict load_finite(const std::string& path) {
  DictFile f = load_dict(path);
  auto fin = try_finite(f.main);
  if (!fin)
    throw std::invalid_argument(path + ": this verb needs a finite dictionary, "
                                       "but main denotes an infinite word set");
  return *fin;
}

bool g_json = false;

void emit(const json& j, const std::string& text) {
  if (g_json)
    std::cout << j.dump() << "\n";
  else
    std::cout << text << "\n";
}

std::string words_text(const std::vector<Word>& ws) {
  std::string out = "{ ";
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (i) out += ", ";
    out += ws[i].str();
  }
  return out + " }";
}

json words_json(const std::vector<Word>& ws) {
  json a = json::array();
  for (const Word& w : ws) a.push_back(w.str());
  return a;
}

std::string dict_file_text(const FiniteDict& d) {
  std::string out = "alphabet " + std::to_string(d.alphabet.size) + "\n";
  out += "main = { ";
  for (std::size_t i = 0; i < d.words.size(); ++i) {
    if (i) out += ", ";
    out += d.words[i].str();
  }
  out += d.words.empty() ? "}" : " }";
  return out;
}

int verb_member(const std::string& dictfile, const std::string& lasso) {
  DictFile f = load_dict(dictfile);
  Lasso l = Lasso::parse(lasso);
  bool in = member_lasso(compile(f.main), l);
  emit(json{{"verb", "member"}, {"lasso", l.str()}, {"member", in}},
       l.str() + (in ? " is in" : " is not in") + " the omega-power");
  return in ? kExitTrue : kExitFalse;
}

int verb_classify(const std::string& dictfile) {
  FiniteDict d = load_finite(dictfile);
  ClassifyReport r = classify_report(d);
  json j{{"verb", "classify"},
         {"class", to_string(r.topo)},
         {"g0", r.gclass.g0},
         {"g1", r.gclass.g1},
         {"g2", r.gclass.g2},
         {"rank", {{"kind", to_string(r.rank.kind)}, {"lower_bound", r.rank.lower_bound}}}};
  if (r.gclass.g1_witness) j["g1_witness"] = r.gclass.g1_witness->str();
  if (r.gclass.g2_witness)
    j["g2_witness"] = json::array(
        {r.gclass.g2_witness->first.str(), r.gclass.g2_witness->second.str()});
  std::string text = "topological class: " + to_string(r.topo) +
                     "\nsingly generated: " + (r.gclass.g1 ? "yes" : "no") +
                     "\ntwo-word generated: " + (r.gclass.g2 ? "yes" : "no") +
                     "\nrank summary: " + to_string(r.rank.kind);
  if (r.rank.kind == RankSummary::Kind::FiniteClopen)
    text += " (certified lower bound " + std::to_string(r.rank.lower_bound) + ")";
  emit(j, text);
  return kExitTrue;
}

int verb_gclass(const std::string& dictfile, int max_p) {
  FiniteDict d = load_finite(dictfile);
  GClassReport r = g_class_report(d);
  json j{{"verb", "gclass"}, {"g0", r.g0}, {"g1", r.g1}, {"g2", r.g2}};
  if (r.g1_witness) j["g1_witness"] = r.g1_witness->str();
  if (r.g2_witness)
    j["g2_witness"] = json::array({r.g2_witness->first.str(), r.g2_witness->second.str()});
  std::string text = std::string("g0: ") + (r.g0 ? "yes" : "no") + ", g1: " +
                     (r.g1 ? "yes" : "no") + ", g2: " + (r.g2 ? "yes" : "no");
  for (int p = 3; p <= max_p; ++p) {
    GSearchResult s = g_search(d, p);
    json e{{"p", p}, {"found", s.found}, {"conclusive", s.conclusive}};
    if (s.found) e["witness"] = words_json(s.witness);
    j["search"].push_back(e);
    text += "\np = " + std::to_string(p) + ": " +
            (s.found ? "witness " + words_text(s.witness)
                     : (s.conclusive ? "no generator" : "no prefix-tuple witness (inconclusive)"));
  }
  emit(j, text);
  return kExitTrue;
}

int verb_equiv(const std::string& fa, const std::string& fb, bool inclusion_only) {
  FiniteDict a = load_finite(fa);
  FiniteDict b = load_finite(fb);
  bool result = inclusion_only ? included(a, b) : equivalent(a, b);
  const char* rel = inclusion_only ? "included" : "equivalent";
  emit(json{{"verb", rel}, {"result", result}},
       std::string(rel) + ": " + (result ? "yes" : "no"));
  return result ? kExitTrue : kExitFalse;
}

int verb_rank(const std::string& dictfile, const std::string& lasso) {
  DictFile f = load_dict(dictfile);
  Lasso l = Lasso::parse(lasso);
  RankResult r = rank_lasso(compile(f.main), l);
  if (r.member) {
    emit(json{{"result", "member"}}, l.str() + " is in the omega-power; no rank");
  } else {
    emit(json{{"result", "rank"}, {"value", r.rank}},
         "decomposition tree rank at " + l.str() + ": " + std::to_string(r.rank));
  }
  return kExitTrue;
}

int verb_elevel(const std::string& dictfile, const std::string& lasso, int k) {
  DictFile f = load_dict(dictfile);
  Lasso l = Lasso::parse(lasso);
  if (k < 0) throw std::invalid_argument("level must be nonnegative");
  bool in = e_level(compile(f.main), l, k);
  emit(json{{"verb", "elevel"}, {"k", k}, {"holds", in}},
       l.str() + (in ? " is in E_" : " is not in E_") + std::to_string(k));
  return in ? kExitTrue : kExitFalse;
}

int verb_decompose(const std::string& dictfile, const std::string& lasso, int k) {
  DictFile f = load_dict(dictfile);
  Lasso l = Lasso::parse(lasso);
  std::vector<Word> chunks = greedy_decompose(compile(f.main), l, k);
  emit(json{{"verb", "decompose"}, {"chunks", words_json(chunks)}},
       "greedy chunks: " + words_text(chunks));
  return kExitTrue;
}

int verb_code_check(const std::string& dictfile) {
  FiniteDict d = load_finite(dictfile);
  bool code = is_code(d);
  emit(json{{"verb", "code-check"}, {"code", code}},
       code ? "uniquely decipherable" : "not a code");
  return code ? kExitTrue : kExitFalse;
}

int verb_antichain(const std::string& dictfile) {
  FiniteDict d = load_finite(dictfile);
  bool anti = is_antichain(d);
  emit(json{{"verb", "antichain"}, {"antichain", anti}},
       anti ? "antichain for the prefix ordering" : "not an antichain");
  return anti ? kExitTrue : kExitFalse;
}

int verb_minimal(const std::string& dictfile) {
  FiniteDict d = load_finite(dictfile);
  FiniteDict m = minimal_generator(d);
  emit(json{{"verb", "minimal"}, {"generator", words_json(m.words)}}, dict_file_text(m));
  return kExitTrue;
}

int verb_tree_encode(const std::string& treefile) {
  FiniteTree t = parse_tree_file(read_file(treefile));
  FiniteDict d = tree_dict(t);
  emit(json{{"verb", "tree-encode"}, {"dictionary", words_json(d.words)}}, dict_file_text(d));
  return kExitTrue;
}

int verb_alpha0(std::uint64_t prefix) {
  Word w = alpha0().prefix(prefix);
  emit(json{{"verb", "alpha0"}, {"prefix", w.str()}}, w.str());
  return kExitTrue;
}

int verb_examples(bool run) {
  auto entries = corpus();
  if (!run) {
    json j = json::array();
    std::string text;
    for (const CorpusEntry& e : entries) {
      j.push_back({{"name", e.name},
                   {"description", e.description},
                   {"checks", e.checks.size()}});
      text += e.name + ": " + e.description + " (" + std::to_string(e.checks.size()) +
              " checks)\n";
    }
    emit(j, text.empty() ? "" : text.substr(0, text.size() - 1));
    return kExitTrue;
  }
  long fails = 0;
  json results = json::array();
  std::string text;
  for (const CorpusEntry& e : entries) {
    long entry_fails = 0;
    for (const CorpusCheck& c : e.checks) {
      bool ok = c.run();
      if (!ok) {
        ++entry_fails;
        text += "  FAIL " + e.name + ": " + c.what + "\n";
      }
    }
    fails += entry_fails;
    results.push_back({{"name", e.name}, {"failures", entry_fails}});
    text += std::string(entry_fails == 0 ? "PASS " : "FAIL ") + e.name + "\n";
  }
  emit(json{{"verb", "examples"}, {"results", results}, {"failures", fails}},
       text + (fails == 0 ? "all example checks pass" : "example checks failed"));
  return fails == 0 ? kExitTrue : kExitFalse;
}

int verb_explore(int max_len, int max_words) {
  Alphabet two(2);
  std::vector<Word> words;
  {
    Word w;
    std::function<void(int)> rec = [&](int len) {
      if (len > 0) words.push_back(w);
      if (len == max_len) return;
      for (int l = 0; l < 2; ++l) {
        w.append(l);
        rec(len + 1);
        w.pop_back();
      }
    };
    rec(0);
    std::sort(words.begin(), words.end(), shortlex_less);
  }

  json counterexamples = json::array();
  std::string text;

  // Two-word generator-length inequality along inclusions.
  struct Pair {
    Word s1, s2;
    SafetyAutomaton sa;
    std::vector<bool> viable;
  };
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      if (commutes(words[i], words[j])) continue;
      SafetyAutomaton sa = SafetyAutomaton::build(FiniteDict::of(two, {words[i], words[j]}));
      auto v = sa.viable_states();
      pairs.push_back({words[i], words[j], std::move(sa), std::move(v)});
    }
  long inclusions = 0;
  for (const Pair& a : pairs)
    for (const Pair& b : pairs) {
      if (!included(a.sa, a.viable, b.sa)) continue;
      ++inclusions;
      if (b.s1.size() + b.s2.size() > a.s1.size() + a.s2.size()) {
        counterexamples.push_back({{"kind", "length-inequality"},
                                   {"a", words_json({a.s1, a.s2})},
                                   {"b", words_json({b.s1, b.s2})}});
        text += "length inequality fails: {" + a.s1.str() + "," + a.s2.str() + "} vs {" +
                b.s1.str() + "," + b.s2.str() + "}\n";
      }
    }

  // Prefix-pair completeness of the two-word search.
  long dicts = 0;
  {
    std::vector<Word> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
      FiniteDict d = FiniteDict::of(two, cur);
      ++dicts;
      auto [pos, wit] = g2(d);
      if (!pos) {
        int cap = static_cast<int>(d.max_len());
        for (std::size_t i = 0; i < words.size(); ++i)
          for (std::size_t j = i + 1; j < words.size(); ++j) {
            if (static_cast<int>(words[i].size()) > cap ||
                static_cast<int>(words[j].size()) > cap)
              continue;
            if (equivalent(d, FiniteDict::of(two, {words[i], words[j]}))) {
              counterexamples.push_back({{"kind", "missed-two-word-generator"},
                                         {"dictionary", words_json(d.words)},
                                         {"pair", words_json({words[i], words[j]})}});
              text += "missed generator for " + words_text(d.words) + "\n";
            }
          }
      }
      if (static_cast<int>(cur.size()) == max_words) return;
      for (std::size_t i = from; i < words.size(); ++i) {
        cur.push_back(words[i]);
        rec(i + 1);
        cur.pop_back();
      }
    };
    rec(0);
  }

  bool clean = counterexamples.empty();
  emit(json{{"verb", "explore-conjecture"},
            {"dictionaries", dicts},
            {"two_word_inclusions", inclusions},
            {"counterexamples", counterexamples}},
       text + (clean ? "no counterexample found (" + std::to_string(dicts) +
                           " dictionaries, " + std::to_string(inclusions) + " inclusions)"
                     : "counterexamples found"));
  return clean ? kExitTrue : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"omega-power dictionary toolkit"};
  app.require_subcommand(1);
  app.add_flag("--json", g_json, "machine-readable output");

  std::string dictfile, dictfile2, lasso, treefile;
  int level = 0, chunks = 0, max_p = 2, max_len = 3, max_words = 3;
  std::uint64_t prefix_len = 0;
  bool run_examples = false;

  auto add_subcommand = [&](const std::string& name, const std::string& desc) {
    CLI::App* s = app.add_subcommand(name, desc);
    s->add_flag("--json", g_json, "machine-readable output");
    return s;
  };

  auto* member = add_subcommand("member", "lasso membership in the omega-power");
  member->add_option("dictfile", dictfile)->required();
  member->add_option("lasso", lasso)->required();

  auto* classify = add_subcommand("classify", "topological and generator classification");
  classify->add_option("dictfile", dictfile)->required();

  auto* gclass = add_subcommand("gclass", "finitely-generated classification");
  gclass->add_option("dictfile", dictfile)->required();
  gclass->add_option("--max-p", max_p, "search up to p-word generators");

  auto* equiv = add_subcommand("equiv", "omega-power equivalence of finite dictionaries");
  equiv->add_option("dictfile_a", dictfile)->required();
  equiv->add_option("dictfile_b", dictfile2)->required();

  auto* incl = add_subcommand("included", "omega-power inclusion of finite dictionaries");
  incl->add_option("dictfile_a", dictfile)->required();
  incl->add_option("dictfile_b", dictfile2)->required();

  auto* rank = add_subcommand("rank", "decomposition-tree rank at a lasso");
  rank->add_option("dictfile", dictfile)->required();
  rank->add_option("lasso", lasso)->required();

  auto* elevel = add_subcommand("elevel", "finite level-set membership");
  elevel->add_option("dictfile", dictfile)->required();
  elevel->add_option("lasso", lasso)->required();
  elevel->add_option("k", level)->required();

  auto* decompose = add_subcommand("decompose", "greedy leftmost-minimal decomposition");
  decompose->add_option("dictfile", dictfile)->required();
  decompose->add_option("lasso", lasso)->required();
  decompose->add_option("k", chunks)->required();

  auto* code = add_subcommand("code-check", "unique decipherability");
  code->add_option("dictfile", dictfile)->required();

  auto* anti = add_subcommand("antichain", "prefix antichain test");
  anti->add_option("dictfile", dictfile)->required();

  auto* minimal = add_subcommand("minimal", "inclusion-minimal generator subset");
  minimal->add_option("dictfile", dictfile)->required();

  auto* tree = add_subcommand("tree-encode", "encode a finite tree as a dictionary");
  tree->add_option("treefile", treefile)->required();

  auto* a0 = add_subcommand("alpha0", "prefix of the coding stream");
  a0->add_option("--prefix", prefix_len, "letters to print")->required();

  auto* examples = add_subcommand("examples", "built-in example corpus");
  examples->add_flag("--run", run_examples, "run all corpus checks");

  auto* explore = add_subcommand("explore-conjecture",
                                     "search small dictionaries for counterexamples");
  explore->add_option("--max-len", max_len, "maximum word length");
  explore->add_option("--max-words", max_words, "maximum dictionary size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code_ = app.exit(e);
    return code_ == 0 ? 0 : kExitBadInput;
  }

  try {
    if (member->parsed()) return verb_member(dictfile, lasso);
    if (classify->parsed()) return verb_classify(dictfile);
    if (gclass->parsed()) return verb_gclass(dictfile, max_p);
    if (equiv->parsed()) return verb_equiv(dictfile, dictfile2, false);
    if (incl->parsed()) return verb_equiv(dictfile, dictfile2, true);
    if (rank->parsed()) return verb_rank(dictfile, lasso);
    if (elevel->parsed()) return verb_elevel(dictfile, lasso, level);
    if (decompose->parsed()) return verb_decompose(dictfile, lasso, chunks);
    if (code->parsed()) return verb_code_check(dictfile);
    if (anti->parsed()) return verb_antichain(dictfile);
    if (minimal->parsed()) return verb_minimal(dictfile);
    if (tree->parsed()) return verb_tree_encode(treefile);
    if (a0->parsed()) return verb_alpha0(prefix_len);
    if (examples->parsed()) return verb_examples(run_examples);
    if (explore->parsed()) return verb_explore(max_len, max_words);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
