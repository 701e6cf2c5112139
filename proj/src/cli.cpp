#include "repwords/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "repwords/claims.hpp"
#include "repwords/constructions.hpp"
#include "repwords/power.hpp"
#include "repwords/search.hpp"
#include "repwords/squares.hpp"

namespace repwords::cli {

using json = nlohmann::ordered_json;

Rational parse_rational(std::string_view text, bool threshold) {
  Rational r;
  try {
    r = Rational::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (threshold && r <= Rational(1)) {
    throw UsageError("exponent threshold must exceed 1 (got " + std::string(text) + ")");
  }
  return r;
}

namespace {

struct WordSource {
  std::string word;
  std::string file;

  void attach(CLI::App* cmd) {
    auto* w = cmd->add_option("--word", word, "Word as a string of 0/1");
    auto* f = cmd->add_option("--file", file, "File holding the word");
    w->excludes(f);
  }

  Word read(std::istream& in) const {
    std::string text;
    if (!word.empty()) {
      text = word;
    } else if (!file.empty()) {
      std::ifstream f(file, std::ios::binary);
      if (!f) throw UsageError("cannot open '" + file + "'");
      text.assign(std::istreambuf_iterator<char>(f), {});
    } else {
      text.assign(std::istreambuf_iterator<char>(in), {});
    }
    if (!text.empty() && text.back() == '\n') text.pop_back();
    try {
      return Word::parse(text);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("bad word input: ") + e.what());
    }
  }
};

json witness_json(const PowerWitness& w) {
  return {{"start", w.start}, {"period", w.period}, {"length", w.length}, {"exponent", w.exponent().to_string()}};
}

std::string witness_text(const PowerWitness& w) {
  return "start=" + std::to_string(w.start) + " period=" + std::to_string(w.period) +
         " length=" + std::to_string(w.length) + " exponent=" + w.exponent().to_string();
}

json claim_json(const ClaimResult& r) {
  json j;
  j["claim_id"] = r.claim_id;
  j["holds"] = r.holds;
  if (!r.witness) {
    j["witness"] = nullptr;
  } else if (const auto* w = std::get_if<Word>(&*r.witness)) {
    j["witness"] = w->to_string();
  } else {
    j["witness"] = witness_json(std::get<PowerWitness>(*r.witness));
  }
  json stats = json::object();
  for (const auto& [k, v] : r.stats) stats[k] = v;
  j["stats"] = stats;
  json ex = json::array();
  for (const auto& w : r.exemptions) ex.push_back(w.to_string());
  j["exemptions"] = ex;
  j["detail"] = r.detail;
  return j;
}

json window_json(const SquareWindow& w) {
  return {{"first", w.first_position}, {"last", w.last_position}, {"square_length", w.square_length}};
}

Recurrence recurrence_for(Construction c, const std::optional<Rational>& alpha) {
  switch (c) {
    case Construction::g:
      return g_recurrence();
    case Construction::a:
      return a_recurrence();
    case Construction::general:
      break;
  }
  if (!alpha) throw UsageError("--alpha is required for the general construction");
  try {
    return general_recurrence(general_params(*alpha));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::optional<Rational> optional_alpha(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return parse_rational(text, true);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Repetition analysis for binary words"};
  app.name("repwords");
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Print a prefix of a construction");
  std::string gen_construction;
  std::string gen_alpha;
  unsigned gen_iterations = 0;
  std::optional<std::uint64_t> gen_max_len;
  gen->add_option("--construction", gen_construction, "g | a | general")
      ->required()
      ->check(CLI::IsMember({"g", "a", "general"}));
  gen->add_option("--alpha", gen_alpha, "Threshold P/Q for the general construction (2 < alpha < 7/3)");
  gen->add_option("--iterations", gen_iterations, "Number of recurrence steps")->required();
  gen->add_option("--max-len", gen_max_len, "Truncate the output to this many letters");

  // check
  auto* chk = app.add_subcommand("check", "Test a word for power-freeness");
  std::string chk_alpha;
  bool chk_strict = false;
  bool chk_json = false;
  WordSource chk_src;
  chk->add_option("--alpha", chk_alpha, "Threshold P/Q (> 1)")->required();
  chk->add_flag("--strict-plus", chk_strict, "Forbid only exponents strictly above alpha");
  chk->add_flag("--json", chk_json, "JSON output");
  chk_src.attach(chk);

  // analyze
  auto* ana = app.add_subcommand("analyze", "Square analysis");
  ana->require_subcommand(1);
  auto* ana_sq = ana->add_subcommand("squares", "Per-position square profile");
  WordSource sq_src;
  bool sq_json = false;
  sq_src.attach(ana_sq);
  ana_sq->add_flag("--json", sq_json, "JSON output");
  auto* ana_cls = ana->add_subcommand("classify", "Is the word a conjugate of a Thue-Morse square?");
  WordSource cls_src;
  bool cls_json = false;
  cls_src.attach(ana_cls);
  ana_cls->add_flag("--json", cls_json, "JSON output");

  // enumerate
  auto* en = app.add_subcommand("enumerate", "Count power-free words by length");
  std::string en_alpha;
  bool en_strict = false;
  std::size_t en_max_len = 0;
  bool en_words = false;
  bool en_json = false;
  en->add_option("--alpha", en_alpha, "Threshold P/Q (> 1)")->required();
  en->add_flag("--strict-plus", en_strict, "Forbid only exponents strictly above alpha");
  en->add_option("--max-len", en_max_len, "Largest length")->required();
  en->add_flag("--words", en_words, "Also list the words");
  en->add_flag("--json", en_json, "JSON output");

  // verify
  auto* ver = app.add_subcommand("verify", "Run the claim suite");
  std::vector<std::string> ver_claims;
  bool ver_all = false;
  bool ver_list = false;
  bool ver_json = false;
  auto* claim_opt = ver->add_option("--claim", ver_claims, "Claim id (repeatable)");
  auto* all_opt = ver->add_flag("--all", ver_all, "Run every claim");
  auto* list_opt = ver->add_flag("--list", ver_list, "List claim ids");
  claim_opt->excludes(all_opt)->excludes(list_opt);
  all_opt->excludes(list_opt);
  ver->add_flag("--json", ver_json, "JSON output");

  // windows
  auto* win = app.add_subcommand("windows", "Predicted square window of a construction");
  std::string win_construction;
  std::string win_alpha;
  unsigned win_n = 0;
  win->add_option("--construction", win_construction, "g | a | general")
      ->required()
      ->check(CLI::IsMember({"g", "a", "general"}));
  win->add_option("--alpha", win_alpha, "Threshold P/Q for the general construction");
  win->add_option("--n", win_n, "Window index")->required();

  std::vector<const char*> argv{"repwords"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kUsage;
  }

  try {
    if (*gen) {
      const Construction c = parse_construction(gen_construction);
      const Recurrence rec = recurrence_for(c, optional_alpha(gen_alpha));
      ConstructionStream stream(rec, gen_iterations);
      std::string buf;
      constexpr std::size_t chunk = 1 << 16;
      buf.reserve(chunk);
      std::uint64_t emitted = 0;
      while (!gen_max_len || emitted < *gen_max_len) {
        const auto letter = stream.next();
        if (!letter) break;
        buf.push_back(static_cast<char>('0' + *letter));
        ++emitted;
        if (buf.size() == chunk) {
          out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
          buf.clear();
        }
      }
      out << buf << '\n';
      return kSuccess;
    }

    if (*chk) {
      const Rational alpha = parse_rational(chk_alpha, true);
      const Word w = chk_src.read(in);
      const auto v = find_violation(w, alpha, chk_strict);
      if (chk_json) {
        json j;
        j["length"] = w.size();
        j["alpha"] = alpha.to_string();
        j["strict"] = chk_strict;
        j["power_free"] = !v.has_value();
        j["witness"] = v ? witness_json(*v) : json(nullptr);
        out << j.dump(2) << '\n';
      } else if (v) {
        out << "violation " << witness_text(*v) << '\n';
      } else {
        out << "power-free\n";
      }
      return v ? kFailed : kSuccess;
    }

    if (*ana_sq) {
      const Word w = sq_src.read(in);
      const SquareProfile prof = square_profile(w);
      if (sq_json) {
        json j;
        j["horizon"] = prof.horizon;
        json pos = json::array();
        for (std::size_t i = 0; i < prof.positions.size(); ++i) {
          const auto& p = prof.positions[i];
          pos.push_back({{"position", i},
                         {"min_half_length", p.min_half_length ? json(*p.min_half_length) : json(nullptr)},
                         {"max_half_length", p.max_half_length ? json(*p.max_half_length) : json(nullptr)}});
        }
        j["positions"] = pos;
        out << j.dump(2) << '\n';
      } else {
        out << "horizon " << prof.horizon << '\n';
        for (std::size_t i = 0; i < prof.positions.size(); ++i) {
          const auto& p = prof.positions[i];
          out << i << ' ' << (p.min_half_length ? std::to_string(*p.min_half_length) : "-") << ' '
              << (p.max_half_length ? std::to_string(*p.max_half_length) : "-") << '\n';
        }
      }
      return kSuccess;
    }

    if (*ana_cls) {
      const Word w = cls_src.read(in);
      const auto c = classify_script_A(w);
      if (cls_json) {
        json j;
        j["word"] = w.to_string();
        if (c) {
          j["witness"] = {{"k", c->k}, {"base", c->base.to_string()}, {"rotation", c->rotation}};
        } else {
          j["witness"] = nullptr;
        }
        out << j.dump(2) << '\n';
      } else if (c) {
        out << "k=" << c->k << " base=" << c->base.to_string() << " rotation=" << c->rotation << '\n';
      } else {
        out << "not-in-conjugates-of-A\n";
      }
      return kSuccess;
    }

    if (*en) {
      const Rational alpha = parse_rational(en_alpha, true);
      const EnumerationReport rep = enumerate_power_free(alpha, en_strict, en_max_len, en_words);
      if (en_json) {
        json j;
        j["alpha"] = rep.alpha.to_string();
        j["strict"] = rep.strict;
        j["counts"] = rep.counts;
        j["nodes"] = rep.nodes;
        if (rep.exemplars) {
          json ws = json::array();
          for (const auto& w : *rep.exemplars) ws.push_back(w.to_string());
          j["words"] = ws;
        }
        out << j.dump(2) << '\n';
      } else {
        for (std::size_t n = 0; n < rep.counts.size(); ++n) out << n << ' ' << rep.counts[n] << '\n';
        if (rep.exemplars) {
          out << "# words\n";
          for (const auto& w : *rep.exemplars) out << w.to_string() << '\n';
        }
      }
      return kSuccess;
    }

    if (*ver) {
      const auto registry = claim_registry();
      if (ver_list) {
        for (const auto& c : registry) out << c.id << "  " << c.statement << '\n';
        return kSuccess;
      }
      if (!ver_all && ver_claims.empty()) throw UsageError("verify needs --claim <id>, --all or --list");
      std::vector<ClaimSpec> selected;
      if (ver_all) {
        selected = registry;
      } else {
        for (const auto& id : ver_claims) {
          auto it = std::find_if(registry.begin(), registry.end(), [&](const ClaimSpec& c) { return c.id == id; });
          if (it == registry.end()) throw UsageError("unknown claim '" + id + "'");
          selected.push_back(*it);
        }
      }
      const auto results = run_claims(selected);
      bool all_hold = true;
      json arr = json::array();
      for (const auto& r : results) {
        all_hold = all_hold && r.holds;
        if (ver_json) {
          arr.push_back(claim_json(r));
          continue;
        }
        out << (r.holds ? "PASS " : "FAIL ") << r.claim_id << "  " << r.detail << '\n';
        if (!r.holds && r.witness) {
          if (const auto* w = std::get_if<Word>(&*r.witness)) {
            out << "  witness " << w->to_string() << '\n';
          } else {
            out << "  witness " << witness_text(std::get<PowerWitness>(*r.witness)) << '\n';
          }
        }
      }
      if (ver_json) out << arr.dump(2) << '\n';
      return all_hold ? kSuccess : kFailed;
    }

    if (*win) {
      const Construction c = parse_construction(win_construction);
      SquareWindow w;
      switch (c) {
        case Construction::g:
          if (win_n < 1) throw UsageError("g-word windows require --n >= 1");
          w = g_word_windows(win_n);
          break;
        case Construction::a:
          w = a_word_windows(win_n);
          break;
        case Construction::general: {
          const auto alpha = optional_alpha(win_alpha);
          if (!alpha) throw UsageError("--alpha is required for the general construction");
          try {
            w = general_word_windows(general_params(*alpha), win_n);
          } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
          }
          break;
        }
      }
      out << window_json(w).dump(2) << '\n';
      return kSuccess;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace repwords::cli
