// Copyright 2026 The gatex Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gatex/cli.h"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "gatex/corpus.h"
#include "gatex/engenderer.h"
#include "gatex/errors.h"
#include "gatex/evaluator.h"
#include "gatex/neutralizer.h"
#include "gatex/word_list.h"
#include "json.hpp"

namespace gatex {
namespace {

constexpr const char* kEndpointEnv = "GATEX_PROVIDER_ENDPOINT";

struct Settings {
  std::string input = "-";
  std::string output = "-";
  std::string provider = "rule";
  std::string endpoint;
  std::string prompt = "zero-shot";
  long timeout_ms = 30000;
  int max_parallel = 1;
  std::string agreement;
  std::string word_list;

  std::string gender;
  std::string anchor;
  bool reject_nouns = false;

  std::string kept;
  std::string scenarios;
  bool no_consistency = false;

  std::string hyp;
  std::string ref;
  std::string eval_input;
  std::string report;
  std::string smoothing = "none";
};

class Diagnostics {
 public:
  explicit Diagnostics(std::ostream& err) : err_(err) {}

  void emit(const std::string& id, std::string_view code, std::string_view message) {
    nlohmann::ordered_json j;
    j["id"] = id;
    j["code"] = code;
    j["message"] = message;
    err_ << j.dump() << '\n';
  }

  // "Code: message" strings as produced by the rewriters.
  void emit_tagged(const std::string& id, std::string_view tagged) {
    const auto colon = tagged.find(": ");
    if (colon == std::string_view::npos) {
      emit(id, "Diagnostic", tagged);
    } else {
      emit(id, tagged.substr(0, colon), tagged.substr(colon + 2));
    }
  }

 private:
  std::ostream& err_;
};

class Io {
 public:
  Io(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  std::vector<std::string> read_lines(const std::string& path) {
    std::unique_ptr<std::ifstream> file;
    std::istream* source = &in_;
    if (path != "-") {
      file = std::make_unique<std::ifstream>(path, std::ios::binary);
      if (!*file) throw IoError("cannot open " + path);
      source = file.get();
    }
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(*source, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines.push_back(std::move(line));
    }
    if (source->bad()) throw IoError("read failure on " + path);
    return lines;
  }

  std::ostream& output(const std::string& path) {
    if (path == "-") return out_;
    files_.push_back(std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc));
    if (!*files_.back()) throw IoError("cannot write " + path);
    return *files_.back();
  }

  LoadResult load_corpus(const std::string& path, const LoadOptions& options) {
    if (path == "-") return load_stream(in_, options);
    return load(path, options);
  }

 private:
  std::istream& in_;
  std::ostream& out_;
  std::vector<std::unique_ptr<std::ofstream>> files_;
};

struct Resources {
  AgreementRules rules;
  WordList words;
  std::set<std::string, std::less<>> nouns;
  GenderLexicon lexicon;

  explicit Resources(const Settings& s)
      : rules(s.agreement.empty() ? AgreementRules::builtin() : AgreementRules::load(s.agreement)),
        words(s.word_list.empty() ? WordList::builtin() : WordList::load(s.word_list)),
        nouns(words.nouns) {
    lexicon = GenderLexicon::from(words, rules);
  }
};

ProviderConfig provider_config(const Settings& s, const AgreementRules& rules) {
  ProviderConfig config;
  if (s.provider == "subprocess") {
    config.mode = ProviderMode::ExternalSubprocess;
  } else if (s.provider == "http") {
    config.mode = ProviderMode::ExternalHttp;
  }
  config.prompt_template = s.prompt == "few-shot" ? PromptTemplate::FewShot : PromptTemplate::ZeroShot;
  config.endpoint_or_command = s.endpoint;
  if (config.endpoint_or_command.empty()) {
    if (const char* env = std::getenv(kEndpointEnv)) config.endpoint_or_command = env;
  }
  config.timeout = std::chrono::milliseconds(s.timeout_ms);
  config.max_parallel = s.max_parallel;
  config.rules = &rules;
  config.validate();
  return config;
}

std::string line_id(std::size_t index) { return std::to_string(index + 1); }

int cmd_neutralize(const Settings& s, Io& io, Diagnostics& diag) {
  Resources res(s);
  const ProviderConfig config = provider_config(s, res.rules);
  const std::vector<std::string> lines = io.read_lines(s.input);
  const std::vector<NeutralRewrite> rewrites = neutralize_batch(lines, config);
  std::ostream& out = io.output(s.output);
  for (std::size_t i = 0; i < rewrites.size(); ++i) {
    out << rewrites[i].text << '\n';
    for (const std::string& d : rewrites[i].diagnostics) diag.emit_tagged(line_id(i), d);
  }
  out.flush();
  return out ? kExitOk : kExitFailure;
}

int cmd_engender(const Settings& s, Io& io, Diagnostics& diag) {
  Resources res(s);
  const std::vector<std::string> lines = io.read_lines(s.input);
  std::vector<std::string> anchors;
  if (!s.anchor.empty()) {
    anchors = io.read_lines(s.anchor);
    if (anchors.size() != lines.size()) {
      diag.emit("", "AnchorMisaligned",
                "anchor file has " + std::to_string(anchors.size()) + " lines, input has " +
                    std::to_string(lines.size()));
      return kExitFailure;
    }
  } else {
    for (NeutralRewrite& r : neutralize_batch(lines, provider_config(s, res.rules))) {
      anchors.push_back(std::move(r.text));
    }
  }
  const Gender target = *gender_from_code(static_cast<char>(std::toupper(s.gender.front())));
  EngenderOptions options;
  options.rules = &res.rules;
  if (s.reject_nouns) options.gendered_nouns = &res.nouns;

  std::ostream& out = io.output(s.output);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    try {
      EngenderResult result = engender_uniform(lines[i], anchors[i], target, options);
      out << result.text << '\n';
      for (const std::string& d : result.diagnostics) diag.emit_tagged(line_id(i), d);
    } catch (const InvalidInput& e) {
      out << lines[i] << '\n';
      diag.emit(line_id(i), e.code(), e.what());
    }
  }
  out.flush();
  return out ? kExitOk : kExitFailure;
}

void report_issues(const LoadResult& loaded, Diagnostics& diag) {
  for (const RecordIssue& issue : loaded.issues) {
    diag.emit(issue.id.empty() ? "line " + std::to_string(issue.line) : issue.id, "SchemaError",
              issue.message);
  }
}

int cmd_prep(const Settings& s, Io& io, Diagnostics& diag) {
  Resources res(s);
  LoadOptions options{!s.no_consistency, &res.lexicon};
  const LoadResult loaded = io.load_corpus(s.input, options);
  report_issues(loaded, diag);
  const PrepResult prep = prepare_pronoun_only(loaded.instances);
  save_stream(io.output(s.kept), prep.kept);
  save_scenarios(io.output(s.scenarios), prep.scenarios);
  return loaded.issues.empty() ? kExitOk : kExitFailure;
}

std::string rewrite_for(const std::string& input, const std::string& neutral,
                        const GenderAssignment& target, const AgreementRules& rules) {
  if (!target.uniform()) {
    throw InvalidInput("non-uniform target " + target.key() + " needs cluster annotations");
  }
  const Gender gender = target.per_cluster().front();
  if (gender == Gender::Neutral) return neutral;
  EngenderOptions options;
  options.rules = &rules;
  return engender_uniform(input, neutral, gender, options).text;
}

int cmd_eval(const Settings& s, Io& io, Diagnostics& diag) {
  Resources res(s);
  std::vector<EvalItem> items;
  if (!s.scenarios.empty()) {
    std::vector<RewriteScenario> scenarios;
    if (s.scenarios == "-") {
      throw ConfigError("--scenarios must name a file");
    }
    std::ifstream file(s.scenarios, std::ios::binary);
    if (!file) throw IoError("cannot open " + s.scenarios);
    scenarios = load_scenarios(file);

    std::vector<std::string> hypotheses;
    if (!s.hyp.empty()) {
      hypotheses = io.read_lines(s.hyp);
      if (hypotheses.size() != scenarios.size()) {
        throw LengthMismatch(std::to_string(hypotheses.size()) + " hypotheses for " +
                             std::to_string(scenarios.size()) + " scenarios");
      }
    } else {
      std::vector<std::string> inputs;
      for (const RewriteScenario& sc : scenarios) inputs.push_back(sc.input_text);
      const std::vector<NeutralRewrite> neutral =
          neutralize_batch(inputs, provider_config(s, res.rules));
      for (std::size_t i = 0; i < scenarios.size(); ++i) {
        hypotheses.push_back(
            rewrite_for(inputs[i], neutral[i].text, scenarios[i].target, res.rules));
      }
    }
    for (std::size_t i = 0; i < scenarios.size(); ++i) {
      const RewriteScenario& sc = scenarios[i];
      items.push_back({sc.instance_id + ":" + sc.input_key + ">" + sc.expected_key,
                       sc.input_text, hypotheses[i], sc.expected_text});
    }
  } else {
    const std::vector<std::string> hypotheses = io.read_lines(s.hyp);
    const std::vector<std::string> references = io.read_lines(s.ref);
    if (hypotheses.size() != references.size()) {
      throw LengthMismatch(std::to_string(hypotheses.size()) + " hypotheses vs " +
                           std::to_string(references.size()) + " references");
    }
    std::vector<std::string> inputs(references.size());
    if (!s.eval_input.empty()) {
      inputs = io.read_lines(s.eval_input);
      if (inputs.size() != references.size()) {
        throw LengthMismatch(std::to_string(inputs.size()) + " inputs vs " +
                             std::to_string(references.size()) + " references");
      }
    }
    for (std::size_t i = 0; i < references.size(); ++i) {
      items.push_back({line_id(i), inputs[i], hypotheses[i], references[i]});
    }
  }

  BleuOptions options;
  if (s.smoothing == "add-one") options.smoothing = BleuSmoothing::AddOne;
  if (s.smoothing == "exp") options.smoothing = BleuSmoothing::Exp;
  const EvalReport report = evaluate(items, options);
  for (const EvalItem& item : items) {
    if (trim(item.hypothesis) == trim(item.reference)) continue;
    std::string labels;
    for (ErrorLabel label : classify_error(item.input, item.hypothesis, item.reference, res.rules)) {
      if (!labels.empty()) labels += ',';
      labels += to_string(label);
    }
    diag.emit(item.id, "Mismatch", labels);
  }
  std::ostream& out = io.output(s.output);
  out << format_report_table(report);
  if (!s.report.empty()) io.output(s.report) << report_to_json(report) << '\n';
  return kExitOk;
}

int cmd_stats(const Settings& s, Io& io, Diagnostics& diag) {
  Resources res(s);
  LoadOptions options{!s.no_consistency, &res.lexicon};
  const LoadResult loaded = io.load_corpus(s.input, options);
  report_issues(loaded, diag);
  io.output(s.output) << format_stats(stats(loaded.instances));
  return loaded.issues.empty() ? kExitOk : kExitFailure;
}

int cmd_validate(const Settings& s, Io& io, Diagnostics& diag) {
  Resources res(s);
  const LoadResult loaded = io.load_corpus(s.input, LoadOptions{false, &res.lexicon});
  report_issues(loaded, diag);
  std::ostream& out = io.output(s.output);
  std::size_t inconsistent = 0;
  for (const RewriteInstance& instance : loaded.instances) {
    if (instance.variants.size() < 2) continue;
    const ConsistencyReport report = validate_consistency(instance.variants, res.lexicon);
    if (report.consistent()) continue;
    ++inconsistent;
    for (const InconsistentSpan& span : report.spans) {
      nlohmann::ordered_json j;
      j["id"] = instance.id;
      j["base_key"] = span.base_key;
      j["other_key"] = span.other_key;
      j["base_text"] = span.base_text;
      j["other_text"] = span.other_text;
      out << j.dump() << '\n';
    }
  }
  diag.emit("", "Summary",
            std::to_string(loaded.instances.size()) + " records checked, " +
                std::to_string(inconsistent) + " inconsistent, " +
                std::to_string(loaded.issues.size()) + " invalid");
  return loaded.issues.empty() && inconsistent == 0 ? kExitOk : kExitFailure;
}

void add_io(CLI::App* cmd, Settings& s) {
  cmd->add_option("-i,--input", s.input, "Input file, - for standard input");
  cmd->add_option("-o,--output", s.output, "Output file, - for standard output");
}

void add_resources(CLI::App* cmd, Settings& s) {
  cmd->add_option("--agreement", s.agreement, "Verb agreement rules file")->check(CLI::ExistingFile);
  cmd->add_option("--word-list", s.word_list, "Gendered word list file")->check(CLI::ExistingFile);
}

void add_provider(CLI::App* cmd, Settings& s) {
  cmd->add_option("--provider", s.provider, "Neutral rewriter")
      ->check(CLI::IsMember({"rule", "subprocess", "http"}));
  cmd->add_option("--endpoint", s.endpoint,
                  std::string("Command or URL of an external provider (default: $") +
                      kEndpointEnv + ")");
  cmd->add_option("--prompt", s.prompt, "Prompt template")
      ->check(CLI::IsMember({"zero-shot", "few-shot"}));
  cmd->add_option("--timeout-ms", s.timeout_ms, "Per-request timeout")->check(CLI::PositiveNumber);
  cmd->add_option("--max-parallel", s.max_parallel, "Concurrent provider requests")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  Settings s;
  CLI::App app{"Gender rewriting and evaluation tool", "gatex"};
  app.require_subcommand(1);

  auto* neutralize_cmd = app.add_subcommand("neutralize", "Rewrite each line with singular they");
  add_io(neutralize_cmd, s);
  add_resources(neutralize_cmd, s);
  add_provider(neutralize_cmd, s);

  auto* engender_cmd = app.add_subcommand("engender", "Rewrite each line into one gender");
  add_io(engender_cmd, s);
  add_resources(engender_cmd, s);
  add_provider(engender_cmd, s);
  engender_cmd->add_option("-g,--gender", s.gender, "Target gender")
      ->required()
      ->check(CLI::IsMember({"f", "m", "n"}, CLI::ignore_case));
  engender_cmd->add_option("--anchor", s.anchor, "Line-aligned neutral rewrites");
  engender_cmd->add_flag("--reject-gendered-nouns", s.reject_nouns,
                         "Leave lines containing gendered nouns unchanged");

  auto* prep_cmd = app.add_subcommand("prep", "Filter a corpus and list rewrite scenarios");
  add_io(prep_cmd, s);
  add_resources(prep_cmd, s);
  prep_cmd->add_option("--kept", s.kept, "Output file for kept records")->required();
  prep_cmd->add_option("--scenarios", s.scenarios, "Output file for scenarios")->required();
  prep_cmd->add_flag("--no-consistency", s.no_consistency, "Skip the variant consistency check");

  auto* eval_cmd = app.add_subcommand("eval", "Score rewrites against references");
  eval_cmd->add_option("-o,--output", s.output, "Report table destination");
  add_resources(eval_cmd, s);
  add_provider(eval_cmd, s);
  auto* scenarios_opt = eval_cmd->add_option("--scenarios", s.scenarios, "Scenario file");
  auto* hyp_opt = eval_cmd->add_option("--hyp", s.hyp, "Hypotheses, one per line");
  auto* ref_opt = eval_cmd->add_option("--ref", s.ref, "References, one per line");
  eval_cmd->add_option("--input", s.eval_input, "Rewriter inputs, one per line")->needs(ref_opt);
  ref_opt->excludes(scenarios_opt)->needs(hyp_opt);
  eval_cmd->add_option("--report", s.report, "Write the report as JSON");
  eval_cmd->add_option("--smoothing", s.smoothing, "BLEU smoothing")
      ->check(CLI::IsMember({"none", "add-one", "exp"}));

  auto* stats_cmd = app.add_subcommand("stats", "Label, AGME and length statistics");
  add_io(stats_cmd, s);
  add_resources(stats_cmd, s);
  stats_cmd->add_flag("--no-consistency", s.no_consistency, "Skip the variant consistency check");

  auto* validate_cmd = app.add_subcommand("validate", "List non-gender differences between variants");
  add_io(validate_cmd, s);
  add_resources(validate_cmd, s);

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (eval_cmd->parsed() && s.scenarios.empty() && s.ref.empty()) {
      throw CLI::ValidationError("eval", "give --scenarios, or --hyp with --ref");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Io io(in, out);
  Diagnostics diag(err);
  try {
    if (neutralize_cmd->parsed()) return cmd_neutralize(s, io, diag);
    if (engender_cmd->parsed()) return cmd_engender(s, io, diag);
    if (prep_cmd->parsed()) return cmd_prep(s, io, diag);
    if (eval_cmd->parsed()) return cmd_eval(s, io, diag);
    if (stats_cmd->parsed()) return cmd_stats(s, io, diag);
    return cmd_validate(s, io, diag);
  } catch (const ConfigError& e) {
    diag.emit("", e.code(), e.what());
    return kExitUsage;
  } catch (const Error& e) {
    diag.emit("", e.code(), e.what());
    return kExitFailure;
  }
}

}  // namespace gatex
