#include <pav/cli.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

#include <CLI11.hpp>

namespace pav {

Verdict decide(const Pattern& u, std::optional<int> depth, const SearchLimits& limits) {
  // A depth below alpha can miss witnesses and would turn the verdict into
  // a lie; the override is for raising the searched rank only.
  if (depth && *depth < u.alpha())
    throw DomainError("zimin depth " + std::to_string(*depth) + " is below alpha=" +
                      std::to_string(u.alpha()) + "; the override may only raise it");
  Verdict v;
  v.pattern = u.text();
  v.alpha = u.alpha();
  v.claimed_bound = 2 * u.alpha() + 4;
  if (auto witness = is_blocking(u, depth, limits)) {
    v.avoidable = false;
    v.witness = std::move(*witness);
  } else {
    v.avoidable = true;
    v.k = choose_k(u.alpha());
  }
  return v;
}

VerifyResult verify_pattern(const Pattern& u, std::optional<int> k_override, int m,
                            std::size_t max_j_length,
                            std::optional<std::chrono::milliseconds> budget) {
  SearchLimits decide_limits;
  decide_limits.budget = budget;
  if (is_blocking(u, {}, decide_limits))
    throw DomainError("pattern '" + u.text() +
                      "' is unavoidable; verification is vacuous");
  const int k = k_override.value_or(choose_k(u.alpha()));
  if (u.alpha() > k / 2 - 1)
    throw DomainError("alpha=" + std::to_string(u.alpha()) + " exceeds k/2-1=" +
                      std::to_string(k / 2 - 1) + " for k=" + std::to_string(k) +
                      "; choose a larger k");
  const BlockSystem system = build_blocks(k);
  const JWord j = j_word(system, m, max_j_length);
  SearchLimits limits;
  limits.max_host_length = std::max<std::size_t>(limits.max_host_length, j.word.size());
  limits.budget = budget;
  VerifyResult result;
  result.pattern = u.text();
  result.k = k;
  result.m = m;
  result.j_length = j.word.size();
  result.violation = find_instance(j.word, u, limits);
  return result;
}

std::vector<PropertyReport> run_props(const std::vector<int>& ks,
                                      std::optional<int> alpha) {
  std::vector<PropertyReport> reports;
  for (int k : ks) {
    if (k < 8 || k % 4 != 0)
      throw DomainError("k must be a multiple of 4 and >= 8, got " + std::to_string(k));
    const BlockSystem system = build_blocks(k);
    reports.push_back(check_lemma1_a(system));
    reports.push_back(check_lemma1_b(system));
    reports.push_back(check_lemma1_c(system));
    reports.push_back(check_even_surplus(system, alpha.value_or(k / 2 - 1)));
    reports.push_back(check_c_remark(system));
    const JWord j = j_word(system, k == 8 ? 3 : 2);
    PropertyReport sf = check_square_free(j.word);
    sf.instances = "k=" + std::to_string(k) + ", J_" + std::to_string(j.m) + ", " +
                   sf.instances;
    reports.push_back(sf);
  }
  return reports;
}

// --- plain rendering ---------------------------------------------------------

std::string render_word_tokens(const Word& w, bool compact) {
  std::string out;
  if (compact) {
    out.reserve(w.size());
    for (int letter : w.letters()) {
      if (letter > 26)
        throw DomainError("compact rendering needs letter indices <= 26, got " +
                          std::to_string(letter));
      out.push_back(static_cast<char>('a' + letter - 1));
    }
    return out;
  }
  const char* prefix = (w.alphabet() == Alphabet::x) ? "x" : "s";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out.push_back(' ');
    out += prefix;
    out += std::to_string(w.letter(i));
  }
  return out;
}

namespace {

std::string render_mapping(const Substitution& s, const Pattern& u) {
  std::string out;
  for (int v = 0; v < u.alpha(); ++v) {
    if (v) out += ", ";
    out.push_back(u.variable_name(v));
    out += " -> ";
    out += render_word_tokens(s.image(v));
  }
  return out;
}

}  // namespace

std::string render_verdict(const Verdict& v, bool include_image) {
  const Pattern u = make_pattern(v.pattern);
  std::ostringstream out;
  out << "pattern: " << v.pattern << "\n";
  out << "alpha: " << v.alpha << "\n";
  if (v.avoidable) {
    out << "verdict: avoidable\n";
    out << "k: " << *v.k << "\n";
    out << "claimed_bound: " << v.claimed_bound << "\n";
  } else {
    out << "verdict: unavoidable\n";
    out << "rank: " << v.witness->rank << "\n";
    out << "position: " << v.witness->position << "\n";
    out << "mapping: " << render_mapping(v.witness->mapping, u) << "\n";
    if (include_image)
      out << "image: " << render_word_tokens(substitute(v.witness->mapping, u)) << "\n";
  }
  return out.str();
}

std::string render_verify(const VerifyResult& r, const Pattern& u) {
  std::ostringstream out;
  if (r.violation) {
    out << "VIOLATION: pattern " << r.pattern << " occurs in J_" << r.m << " (k=" << r.k
        << ", length " << r.j_length << ") at position " << r.violation->start
        << " with span " << r.violation->span << ": "
        << render_mapping(r.violation->assignment, u) << "\n";
  } else {
    out << "PASS: J_" << r.m << " over k=" << r.k << " letters (length " << r.j_length
        << ") avoids pattern " << r.pattern << "\n";
  }
  return out.str();
}

std::string render_props(const std::vector<PropertyReport>& reports) {
  std::ostringstream out;
  std::size_t failed = 0;
  for (const auto& r : reports) {
    out << (r.pass ? "[PASS] " : "[FAIL] ") << r.property << " (" << r.instances << ")";
    if (!r.pass) {
      ++failed;
      out << ": " << r.detail;
      for (const auto& [name, word] : r.words)
        out << "; " << name << " = " << render_word_tokens(word);
      for (const auto& [name, value] : r.values) out << "; " << name << " = " << value;
    }
    out << "\n";
  }
  if (failed == 0)
    out << "all properties passed (" << reports.size() << " checks)\n";
  else
    out << failed << " of " << reports.size() << " checks failed\n";
  return out.str();
}

// --- JSON payloads and round-trip ------------------------------------------------

nlohmann::json word_to_json(const Word& w) {
  nlohmann::json j;
  j["alphabet"] = (w.alphabet() == Alphabet::x) ? "x" : "xi";
  if (w.alphabet() == Alphabet::x) j["k"] = w.bound();
  j["letters"] = w.letters();
  return j;
}

Word word_from_json(const nlohmann::json& j) {
  const std::string alphabet = j.at("alphabet").get<std::string>();
  auto letters = j.at("letters").get<std::vector<int>>();
  if (alphabet == "x") return Word::over_x(std::move(letters), j.at("k").get<int>());
  if (alphabet == "xi") return Word::over_xi(std::move(letters));
  throw DomainError("unknown alphabet tag '" + alphabet + "'");
}

nlohmann::json witness_to_json(const BlockingWitness& w, const Pattern& u,
                               bool include_image) {
  nlohmann::json j;
  j["rank"] = w.rank;
  j["position"] = w.position;
  nlohmann::json mapping;
  for (int v = 0; v < u.alpha(); ++v)
    mapping[std::string(1, u.variable_name(v))] = word_to_json(w.mapping.image(v));
  j["mapping"] = std::move(mapping);
  if (include_image) j["image"] = word_to_json(substitute(w.mapping, u));
  return j;
}

BlockingWitness witness_from_json(const nlohmann::json& j, const Pattern& u) {
  std::map<char, Word> bindings;
  for (const auto& [name, word] : j.at("mapping").items()) {
    if (name.size() != 1) throw DomainError("mapping keys must be single variables");
    bindings.emplace(name[0], word_from_json(word));
  }
  return BlockingWitness{j.at("rank").get<int>(), j.at("position").get<int>(),
                         Substitution(u, bindings)};
}

nlohmann::json occurrence_to_json(const Occurrence& o, const Pattern& u) {
  nlohmann::json j;
  j["start"] = o.start;
  j["span"] = o.span;
  nlohmann::json mapping;
  for (int v = 0; v < u.alpha(); ++v)
    mapping[std::string(1, u.variable_name(v))] = word_to_json(o.assignment.image(v));
  j["mapping"] = std::move(mapping);
  return j;
}

nlohmann::json verdict_to_json(const Verdict& v, bool include_image) {
  const Pattern u = make_pattern(v.pattern);
  nlohmann::json j;
  j["pattern"] = v.pattern;
  j["alpha"] = v.alpha;
  j["avoidable"] = v.avoidable;
  j["claimed_bound"] = v.claimed_bound;
  if (v.witness) j["witness"] = witness_to_json(*v.witness, u, include_image);
  if (v.k) j["k"] = *v.k;
  return j;
}

nlohmann::json verify_to_json(const VerifyResult& r, const Pattern& u) {
  nlohmann::json j;
  j["pattern"] = r.pattern;
  j["k"] = r.k;
  j["m"] = r.m;
  j["j_length"] = r.j_length;
  j["status"] = r.violation ? "violation" : "pass";
  if (r.violation) j["occurrence"] = occurrence_to_json(*r.violation, u);
  return j;
}

nlohmann::json report_to_json(const PropertyReport& r) {
  nlohmann::json j;
  j["property"] = r.property;
  j["pass"] = r.pass;
  j["instances"] = r.instances;
  if (!r.pass) {
    j["detail"] = r.detail;
    nlohmann::json words;
    for (const auto& [name, word] : r.words) words[name] = word_to_json(word);
    if (!r.words.empty()) j["words"] = std::move(words);
    nlohmann::json values;
    for (const auto& [name, value] : r.values) values[name] = value;
    if (!r.values.empty()) j["values"] = std::move(values);
  }
  return j;
}

// --- process entry ----------------------------------------------------------------

namespace {

Format parse_format(const std::string& name) {
  if (name == "plain") return Format::plain;
  if (name == "json") return Format::json;
  if (name == "compact") return Format::compact;
  throw DomainError("unknown format '" + name + "'");
}

std::optional<std::chrono::milliseconds> budget_from_ms(long long ms) {
  if (ms < 0) return std::nullopt;
  return std::chrono::milliseconds(ms);
}

nlohmann::json top_level(const char* command, nlohmann::json inputs,
                         const char* payload_key, nlohmann::json payload) {
  nlohmann::json j;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  j[payload_key] = std::move(payload);
  return j;
}

std::string render_word_command(const char* command, nlohmann::json inputs,
                                const Word& w, Format format) {
  if (format == Format::json)
    return top_level(command, std::move(inputs), "word", word_to_json(w)).dump(2) + "\n";
  return render_word_tokens(w, format == Format::compact) + "\n";
}

void require_not_compact(Format format) {
  if (format == Format::compact)
    throw DomainError("compact format applies to word output only");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"pattern avoidance toolkit: decides avoidability of word patterns "
               "and materializes avoiding words"};
  app.require_subcommand(1);

  std::string pattern_text;
  std::string format_name = "plain";
  int n = 0;
  int iterations = 0;
  long long min_length = 0;
  long long max_length = 1'000'000;
  long long budget_ms = -1;  // negative: no budget
  int zimin_depth = 0;
  int k_flag = 0;
  int alpha_flag = 0;
  bool force_witness = false;
  std::vector<int> k_list;

  auto* cmd_decide = app.add_subcommand("decide", "decide whether a pattern is avoidable");
  cmd_decide->add_option("--pattern", pattern_text, "pattern over letters a-z")->required();
  cmd_decide->add_option("--zimin-depth", zimin_depth,
                         "override the Zimin rank searched (default: alpha)");
  cmd_decide->add_option("--budget-ms", budget_ms, "wall-clock budget in milliseconds");
  cmd_decide->add_option("--format", format_name, "plain or json");
  cmd_decide->add_flag("--witness", force_witness, "also print the substituted image");

  auto* cmd_construct =
      app.add_subcommand("construct", "materialize the avoiding word J_m");
  cmd_construct->add_option("--k", k_flag, "alphabet size (multiple of 4, >= 8)");
  cmd_construct->add_option("--alpha", alpha_flag, "pattern variable count; sets k");
  cmd_construct->add_option("--iterations", iterations, "iteration index m");
  cmd_construct->add_option("--min-length", min_length,
                            "smallest m with k^m >= this length");
  cmd_construct->add_option("--max-length", max_length, "length guard for k^m");
  cmd_construct->add_option("--format", format_name, "plain, compact or json");

  auto* cmd_verify =
      app.add_subcommand("verify", "check that J_m avoids an avoidable pattern");
  cmd_verify->add_option("--pattern", pattern_text, "pattern over letters a-z")->required();
  cmd_verify->add_option("--k", k_flag, "alphabet size override");
  cmd_verify->add_option("--iterations", iterations, "iteration index m")->required();
  cmd_verify->add_option("--max-length", max_length, "length guard for k^m");
  cmd_verify->add_option("--budget-ms", budget_ms, "wall-clock budget in milliseconds");
  cmd_verify->add_option("--format", format_name, "plain or json");

  auto* cmd_props = app.add_subcommand("props", "run the block-family property suite");
  cmd_props->add_option("--k", k_list, "alphabet sizes to check (default: 8 12)");
  cmd_props->add_option("--alpha", alpha_flag, "alpha for the even-surplus check");
  cmd_props->add_option("--format", format_name, "plain or json");

  auto* cmd_zimin = app.add_subcommand("zimin", "print the Zimin word Z_n");
  cmd_zimin->add_option("--n", n, "rank, 1..20")->required();
  cmd_zimin->add_option("--format", format_name, "plain, compact or json");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }

  try {
    const Format format = parse_format(format_name);
    std::string rendered;
    int exit_code = kExitOk;

    if (cmd_decide->parsed()) {
      require_not_compact(format);
      const Pattern u = make_pattern(pattern_text);
      SearchLimits limits;
      limits.budget = budget_from_ms(budget_ms);
      std::optional<int> depth;
      if (zimin_depth > 0) depth = zimin_depth;
      const Verdict v = decide(u, depth, limits);
      if (format == Format::json) {
        nlohmann::json inputs;
        inputs["pattern"] = pattern_text;
        if (depth) inputs["zimin_depth"] = *depth;
        rendered = top_level("decide", std::move(inputs), "verdict",
                             verdict_to_json(v, force_witness))
                       .dump(2) +
                   "\n";
      } else {
        rendered = render_verdict(v, force_witness);
      }
    } else if (cmd_construct->parsed()) {
      if ((k_flag > 0) == (alpha_flag > 0))
        throw DomainError("construct needs exactly one of --k and --alpha");
      if ((iterations > 0) == (min_length > 0))
        throw DomainError("construct needs exactly one of --iterations and --min-length");
      const int k = k_flag > 0 ? k_flag : choose_k(alpha_flag);
      const BlockSystem system = build_blocks(k);
      int m = iterations;
      if (min_length > 0) {
        m = 1;
        long long length = k;
        while (length < min_length) {
          if (length > max_length)
            throw GuardError("no k^m below the length guard reaches the target length");
          length *= k;
          ++m;
        }
      }
      const JWord j = j_word(system, m, static_cast<std::size_t>(max_length));
      nlohmann::json inputs;
      inputs["k"] = k;
      inputs["iterations"] = m;
      rendered = render_word_command("construct", std::move(inputs), j.word, format);
    } else if (cmd_verify->parsed()) {
      require_not_compact(format);
      const Pattern u = make_pattern(pattern_text);
      std::optional<int> k_override;
      if (k_flag > 0) k_override = k_flag;
      const VerifyResult r =
          verify_pattern(u, k_override, iterations, static_cast<std::size_t>(max_length),
                         budget_from_ms(budget_ms));
      if (format == Format::json) {
        nlohmann::json inputs;
        inputs["pattern"] = pattern_text;
        inputs["k"] = r.k;
        inputs["m"] = r.m;
        rendered =
            top_level("verify", std::move(inputs), "report", verify_to_json(r, u)).dump(2) +
            "\n";
      } else {
        rendered = render_verify(r, u);
      }
      if (r.violation) exit_code = kExitViolation;
    } else if (cmd_props->parsed()) {
      require_not_compact(format);
      const std::vector<int> ks = k_list.empty() ? std::vector<int>{8, 12} : k_list;
      std::optional<int> alpha;
      if (alpha_flag > 0) alpha = alpha_flag;
      const std::vector<PropertyReport> reports = run_props(ks, alpha);
      const bool all_pass =
          std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
      if (format == Format::json) {
        nlohmann::json inputs;
        inputs["k"] = ks;
        nlohmann::json payload;
        payload["all_pass"] = all_pass;
        payload["properties"] = nlohmann::json::array();
        for (const auto& r : reports) payload["properties"].push_back(report_to_json(r));
        rendered =
            top_level("props", std::move(inputs), "report", std::move(payload)).dump(2) +
            "\n";
      } else {
        rendered = render_props(reports);
      }
      if (!all_pass) exit_code = kExitViolation;
    } else if (cmd_zimin->parsed()) {
      const ZiminWord z = zimin(n);
      nlohmann::json inputs;
      inputs["n"] = n;
      rendered = render_word_command("zimin", std::move(inputs), z.word, format);
    }

    out << rendered;
    return exit_code;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace pav
