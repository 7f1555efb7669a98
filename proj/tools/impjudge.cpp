#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "impjudge/corpus.hpp"
#include "impjudge/judge.hpp"
#include "impjudge/lexicon.hpp"
#include "impjudge/render.hpp"

namespace {

impjudge::Lexicon load_or_seed(const std::string& path) {
  if (path.empty()) return impjudge::Lexicon::seed();
  return impjudge::Lexicon::load_file(path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"grammaticality judge for Yemeni Arabic imperative clauses"};
  app.require_subcommand(1);

  std::string lexicon_path;
  bool with_trace = false;
  std::string format = "text";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--lexicon", lexicon_path, "lexicon file (default: built-in seed)");
    cmd->add_flag("--trace", with_trace, "include the derivation step log");
    cmd->add_option("--format", format, "text|structured")
        ->check(CLI::IsMember({"text", "structured"}));
  };

  std::vector<std::string> words;
  CLI::App* judge_cmd = app.add_subcommand("judge", "judge one sentence");
  judge_cmd->add_option("sentence", words, "whitespace-separated forms (trailing ! ignored)");
  add_common(judge_cmd);

  std::string corpus_path;
  CLI::App* corpus_cmd = app.add_subcommand("corpus", "run a corpus file, diff expectations");
  corpus_cmd->add_option("path", corpus_path, "corpus file")->required();
  add_common(corpus_cmd);

  CLI::App* lexicon_cmd = app.add_subcommand("lexicon", "lexicon inspection");
  CLI::App* dump_cmd = lexicon_cmd->add_subcommand("dump", "print the lexicon in file format");
  dump_cmd->add_option("--lexicon", lexicon_path, "lexicon file (default: built-in seed)");
  lexicon_cmd->require_subcommand(1);

  CLI11_PARSE(app, argc, argv);

  try {
    if (judge_cmd->parsed()) {
      std::string sentence;
      for (const std::string& w : words) sentence += (sentence.empty() ? "" : " ") + w;
      impjudge::Lexicon lex = load_or_seed(lexicon_path);
      impjudge::Judgment j = impjudge::judge(lex, sentence);
      if (format == "structured")
        std::cout << impjudge::render_structured(j) << "\n";
      else
        std::cout << impjudge::render_text(j, with_trace);
      return j.exit_code();
    }

    if (corpus_cmd->parsed()) {
      impjudge::Lexicon lex = load_or_seed(lexicon_path);
      impjudge::CorpusParse corpus = impjudge::parse_corpus_file(corpus_path);
      impjudge::RunReport report = impjudge::run_corpus(lex, corpus);
      std::cout << impjudge::render_report(report);
      return report.all_ok() ? 0 : 1;
    }

    if (lexicon_cmd->parsed()) {
      impjudge::Lexicon lex = load_or_seed(lexicon_path);
      std::cout << lex.dump();
      return 0;
    }
  } catch (const impjudge::LexiconError& err) {
    std::cerr << "lexicon error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 2;
}
