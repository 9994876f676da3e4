// Command-line front end: score remarks, store them per student, report
// aggregates, trace taxonomy paths and validate the fixture files.

#include <CLI11.hpp>

#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lor/analyzer.hpp"
#include "lor/aspect_tree.hpp"
#include "lor/lexicon.hpp"
#include "lor/rational.hpp"
#include "lor/scoring.hpp"
#include "lor/store.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kError = 1;     // operational / config failure
constexpr int kNoResult = 2;  // empty or not-found result

struct RunConfig {
  std::string tree_path = "./fixtures/aspect_tree.tsv";
  std::string lexicon_path = "./fixtures/lexicon.tsv";
  std::string store_path;
  std::string format = "table";
  lor::AnalysisConfig analysis;
};

std::string read_remark_input(const std::string& arg) {
  if (arg != "-") return arg;
  std::ostringstream buffer;
  buffer << std::cin.rdbuf();
  return buffer.str();
}

std::string resolve_store_path(const RunConfig& config) {
  if (!config.store_path.empty()) return config.store_path;
  if (const char* env = std::getenv("ASPECT_STORE"); env != nullptr && *env != '\0') {
    return env;
  }
  return "./remarks.tsv";
}

std::string join_path(const std::vector<std::string>& path) {
  std::string out;
  for (const std::string& name : path) {
    if (!out.empty()) out += ">";
    out += name;
  }
  return out;
}

void print_trace(const std::vector<lor::SentenceAnalysis>& analyses) {
  for (const lor::SentenceAnalysis& analysis : analyses) {
    std::cerr << "# sentence " << analysis.sentence.index << ": \"" << analysis.sentence.raw
              << "\"\n";
    if (analysis.skipped()) {
      std::cerr << "#   skipped: " << analysis.skipped_reason << "\n";
      continue;
    }
    for (const lor::ScoredUnit& unit : analysis.units) {
      std::cerr << "#   aspect "
                << (unit.general ? std::string("GENERAL")
                                 : unit.node->name + " g=" + unit.traversal.aspect_value.str() +
                                       " c=" + std::to_string(unit.traversal.branch_count))
                << "\n";
    }
    for (const lor::OpinionTermMatch& term : analysis.units.front().terms) {
      std::cerr << "#   opinion " << term.entry->phrase << " base " << term.entry->base_score
                << " -> " << term.effective_score;
      for (const lor::ModifierMatch& mod : term.modifiers) {
        std::cerr << " [" << lor::role_name(mod.entry->role) << " " << mod.entry->phrase << "]";
      }
      std::cerr << "\n";
    }
  }
}

void print_units(const lor::RemarkScore& score, const RunConfig& config,
                 const std::string& student, const std::string& remark_seq) {
  if (config.format == "records") {
    std::cout << "#student\tremark_seq\tsentence_index\taspect_path\tg\ts\tc\tf\n";
    for (const lor::SentenceScore& unit : score.units) {
      std::cout << student << '\t' << remark_seq << '\t' << unit.sentence_index << '\t'
                << join_path(unit.aspect_path) << '\t' << unit.g.str() << '\t'
                << lor::render_score(unit.s) << '\t' << unit.c << '\t'
                << lor::render_score(unit.f) << "\n";
    }
  } else {
    std::cout << "sentence\taspect\tg\ts\tc\tf\n";
    for (const lor::SentenceScore& unit : score.units) {
      std::cout << unit.sentence_index << '\t' << join_path(unit.aspect_path) << '\t'
                << unit.g.str() << '\t' << lor::render_score(unit.s) << '\t' << unit.c << '\t'
                << lor::render_score(unit.f) << "\n";
    }
  }
  for (const std::string& reason : score.skipped) {
    std::cout << "# skipped " << reason << "\n";
  }
}

int cmd_score(const RunConfig& config, const std::string& remark_arg) {
  lor::AspectTree tree = lor::AspectTree::load_file(config.tree_path);
  lor::Lexicon lexicon = lor::Lexicon::load_file(config.lexicon_path);
  std::string remark = read_remark_input(remark_arg);

  auto analyses = lor::analyze_remark(tree, lexicon, remark, config.analysis);
  if (config.analysis.emit_trace) {
    print_trace(analyses);
  }
  std::vector<lor::SentenceScore> units;
  std::vector<std::string> skipped;
  for (const lor::SentenceAnalysis& analysis : analyses) {
    if (analysis.skipped()) {
      skipped.push_back("sentence " + std::to_string(analysis.sentence.index) + ": " +
                        analysis.skipped_reason);
      continue;
    }
    for (const lor::ScoredUnit& unit : analysis.units) {
      units.push_back(lor::to_sentence_score(analysis, unit));
    }
  }
  lor::RemarkScore score = lor::score_remark(std::move(units));
  score.skipped = std::move(skipped);

  if (!score.average) {
    std::cout << "no scorable sentences\n";
    return kNoResult;
  }
  print_units(score, config, "-", "-");
  std::cout << "average\t" << lor::render_score(*score.average) << "\n";
  return kOk;
}

int cmd_put(const RunConfig& config, const std::string& student, const std::string& reviewer,
            const std::string& remark_arg) {
  lor::RemarkStore store(resolve_store_path(config));
  std::uint64_t seq = store.put(student, reviewer, read_remark_input(remark_arg));
  std::cout << seq << "\n";
  return kOk;
}

int cmd_report(const RunConfig& config, const std::string& student) {
  lor::AspectTree tree = lor::AspectTree::load_file(config.tree_path);
  lor::Lexicon lexicon = lor::Lexicon::load_file(config.lexicon_path);
  lor::RemarkStore store(resolve_store_path(config));

  std::vector<lor::RemarkRecord> records = store.list(student);
  if (records.empty()) {
    std::cout << "no remarks for student " << student << "\n";
    return kNoResult;
  }

  lor::StudentReport report;
  report.student_id = student;
  std::vector<lor::RemarkScore> scores;
  for (const lor::RemarkRecord& record : records) {
    lor::RemarkScore score =
        lor::score_remark_text(tree, lexicon, record.remark_text, config.analysis);
    scores.push_back(score);
    report.remarks.push_back({record.reviewer_id, record.seq, std::move(score)});
  }

  bool records_format = config.format == "records";
  if (records_format) {
    std::cout << "#student\tremark_seq\tsentence_index\taspect_path\tg\ts\tc\tf\n";
  } else {
    std::cout << "student: " << student << "\n";
  }
  for (std::size_t i = 0; i < report.remarks.size(); ++i) {
    const auto& entry = report.remarks[i];
    if (records_format) {
      for (const lor::SentenceScore& unit : entry.score.units) {
        std::cout << student << '\t' << entry.seq << '\t' << unit.sentence_index << '\t'
                  << join_path(unit.aspect_path) << '\t' << unit.g.str() << '\t'
                  << lor::render_score(unit.s) << '\t' << unit.c << '\t'
                  << lor::render_score(unit.f) << "\n";
      }
    } else if (entry.score.average) {
      std::cout << "remark " << entry.seq << " (reviewer " << entry.reviewer_id
                << "): average " << lor::render_score(*entry.score.average) << "\n";
    } else {
      std::cout << "remark " << entry.seq << " (reviewer " << entry.reviewer_id
                << "): no scorable sentences\n";
      report.excluded.push_back(i);
    }
  }

  try {
    report.overall = lor::aggregate_student(scores);
  } catch (const std::runtime_error&) {
    std::cout << "no scorable remarks\n";
    return kNoResult;
  }
  std::cout << (records_format ? "#overall\t" : "overall: ")
            << lor::render_score(report.overall) << "\n";
  return kOk;
}

int cmd_trace(const RunConfig& config, const std::string& term) {
  lor::AspectTree tree = lor::AspectTree::load_file(config.tree_path);
  std::vector<std::string> tokens = lor::tokenize(term);
  std::string phrase;
  for (const std::string& token : tokens) {
    if (!phrase.empty()) phrase += ' ';
    phrase += token;
  }
  const lor::AspectNode* node = tree.find(phrase);
  if (node == nullptr || node->is_root()) {
    std::cout << "aspect not found: " << term << "\n";
    return kNoResult;
  }
  lor::TraversalResult result = tree.evaluate(*node);

  std::vector<std::string> path(result.path.rbegin(), result.path.rend());
  path.erase(path.begin());  // drop the root
  std::cout << "path: " << join_path(path) << "\n";
  std::vector<int> weights;
  for (const lor::AspectNode* cur = node; cur != nullptr && !cur->is_root();
       cur = cur->parent) {
    weights.push_back(cur->branch_weight);
  }
  std::cout << "weights:";
  for (auto it = weights.rbegin(); it != weights.rend(); ++it) {
    std::cout << " " << *it;
  }
  std::cout << "\naspect_value (g): " << result.aspect_value.str() << "\n";
  std::cout << "branch_count (c): " << result.branch_count << "\n";
  return kOk;
}

int cmd_validate(const RunConfig& config) {
  std::vector<std::string> violations;

  std::ifstream tree_in(config.tree_path);
  if (!tree_in) {
    throw std::runtime_error("cannot open tree file: " + config.tree_path);
  }
  lor::AspectTree tree = lor::AspectTree::parse(tree_in);
  for (const std::string& violation : tree.validate()) {
    violations.push_back("tree: " + violation);
  }

  std::ifstream lexicon_in(config.lexicon_path);
  if (!lexicon_in) {
    throw std::runtime_error("cannot open lexicon file: " + config.lexicon_path);
  }
  lor::Lexicon lexicon = lor::Lexicon::parse(lexicon_in);
  for (const std::string& violation : lexicon.validate()) {
    violations.push_back("lexicon: " + violation);
  }

  for (const std::string& violation : violations) {
    std::cout << violation << "\n";
  }
  std::cout << violations.size() << " violations\n";
  return violations.empty() ? kOk : kNoResult;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Aspect-weighted remark scoring"};
  app.require_subcommand(1);

  RunConfig config;
  bool no_general = false;
  app.add_option("--tree", config.tree_path, "Aspect tree file")->capture_default_str();
  app.add_option("--lexicon", config.lexicon_path, "Sentiment lexicon file")
      ->capture_default_str();
  app.add_option("--store", config.store_path, "Remark store file (or env ASPECT_STORE)");
  app.add_option("--format", config.format, "Output format")
      ->check(CLI::IsMember({"table", "records"}))
      ->capture_default_str();
  app.add_flag("--no-general", no_general, "Skip aspect-free sentences instead of GENERAL");
  app.add_option("--modifier-window", config.analysis.modifier_window,
                 "Max token gap between a modifier and its opinion term")
      ->capture_default_str();
  app.add_flag("--trace", config.analysis.emit_trace, "Verbose analysis trace on stderr");

  std::string remark_arg = "-";
  std::string student;
  std::string reviewer;
  std::string term;

  CLI::App* score = app.add_subcommand("score", "Score one remark (argument or '-' for stdin)");
  score->add_option("remark", remark_arg, "Remark text or '-' to read standard input");

  CLI::App* put = app.add_subcommand("put", "Store a remark for a student");
  put->add_option("student", student, "Student id")->required();
  put->add_option("reviewer", reviewer, "Reviewer id")->required();
  put->add_option("remark", remark_arg, "Remark text or '-' to read standard input");

  CLI::App* report = app.add_subcommand("report", "Aggregate stored remarks for a student");
  report->add_option("student", student, "Student id")->required();

  CLI::App* trace = app.add_subcommand("trace", "Show the root path for an aspect term");
  trace->add_option("term", term, "Aspect name or synonym")->required();

  CLI::App* validate = app.add_subcommand("validate", "Check tree and lexicon files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  try {
    config.analysis.general_enabled = !no_general;
    if (score->parsed()) return cmd_score(config, remark_arg);
    if (put->parsed()) return cmd_put(config, student, reviewer, remark_arg);
    if (report->parsed()) return cmd_report(config, student);
    if (trace->parsed()) return cmd_trace(config, term);
    if (validate->parsed()) return cmd_validate(config);
  } catch (const lor::ValidationError& err) {
    std::cerr << "error: " << err.what() << "\n";
    for (const std::string& violation : err.violations()) {
      std::cerr << "  " << violation << "\n";
    }
    return kError;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kError;
  }
  return kError;
}
