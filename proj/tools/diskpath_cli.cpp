// Command-line front end: batch subcommands over the free-group machinery.
// Exit codes: 0 success / pass, 1 mathematical negative (not primitive,
// verification failed, not an automorphism), 2 usage or parse errors.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "diskpath/explore.hpp"
#include "diskpath/ledger.hpp"
#include "diskpath/nielsen.hpp"
#include "diskpath/path.hpp"
#include "diskpath/whitehead.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

int run(int argc, char** argv) {
  CLI::App app{"free-group toolkit for primitive-disk path certificates"};
  app.require_subcommand(0, 1);

  bool show_version = false;
  app.add_flag("--version", show_version, "print version and ledger table hash");

  // reduce
  std::string reduce_word;
  int reduce_rank = 2;
  bool reduce_json = false;
  CLI::App* cmd_reduce = app.add_subcommand("reduce", "freely reduce a word");
  cmd_reduce->add_option("word", reduce_word, "word text, e.g. \"x1 x2 X1\"")
      ->required();
  cmd_reduce->add_option("-g,--rank", reduce_rank, "free group rank")->required();
  cmd_reduce->add_flag("--json", reduce_json, "JSON output");

  // decompose
  std::string dec_auto;
  bool dec_json = false;
  CLI::App* cmd_dec = app.add_subcommand(
      "decompose", "decompose an automorphism into elementary moves");
  cmd_dec->add_option("automorphism", dec_auto,
                      "e.g. \"x1 -> x1 x2; x2 -> x2\"")
      ->required();
  cmd_dec->add_flag("--json", dec_json, "JSON output");

  // primitive
  std::string prim_word;
  int prim_rank = 2;
  CLI::App* cmd_prim =
      app.add_subcommand("primitive", "test a word for primitivity");
  cmd_prim->add_option("word", prim_word, "word text")->required();
  cmd_prim->add_option("-g,--rank", prim_rank, "free group rank")->required();

  // path
  std::string path_u, path_v, path_json_file;
  int path_rank = 2;
  bool path_compress = false;
  CLI::App* cmd_path = app.add_subcommand(
      "path", "certified path between two primitive classes");
  cmd_path->add_option("source", path_u, "source word")->required();
  cmd_path->add_option("target", path_v, "target word")->required();
  cmd_path->add_option("-g,--rank", path_rank, "free group rank")->required();
  cmd_path->add_option("--json", path_json_file, "write the path as JSON");
  cmd_path->add_flag("--compress", path_compress,
                     "drop steps that repeat the previous disk");

  // verify
  std::string verify_file;
  CLI::App* cmd_verify =
      app.add_subcommand("verify", "re-check a path JSON file");
  cmd_verify->add_option("file", verify_file, "path JSON file")->required();

  // ledger
  int ledger_rank = 2;
  bool ledger_as_json = false;
  CLI::App* cmd_ledger =
      app.add_subcommand("ledger", "realized-move fact table");
  cmd_ledger->add_option("-g,--rank", ledger_rank, "free group rank");
  cmd_ledger->add_flag("--json", ledger_as_json, "JSON output");

  // explore
  int exp_rank = 2, exp_bound = 4;
  std::string exp_dot, exp_csv;
  bool exp_serial = false;
  CLI::App* cmd_exp = app.add_subcommand(
      "explore", "enumerate primitive classes and certify reachability");
  cmd_exp->add_option("-g,--rank", exp_rank, "free group rank")->required();
  cmd_exp->add_option("-L,--bound", exp_bound, "cyclic length bound")->required();
  cmd_exp->add_option("--dot", exp_dot, "write the reach graph as DOT");
  cmd_exp->add_option("--csv", exp_csv, "write the class table as CSV");
  cmd_exp->add_flag("--serial", exp_serial, "disable parallel synthesis");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (show_version) {
    std::cout << "diskpath " << kVersion
              << " (ledger-table-hash: " << diskpath::ledger_table_hash()
              << ")\n";
    return 0;
  }

  if (cmd_reduce->parsed()) {
    diskpath::Word w = diskpath::parse_word(reduce_word, reduce_rank);
    if (reduce_json) {
      nlohmann::json j{{"rank", reduce_rank},
                       {"word", diskpath::format_word(w)},
                       {"length", w.size()}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << diskpath::format_word(w) << "\n";
    }
    return 0;
  }

  if (cmd_dec->parsed()) {
    diskpath::Automorphism a = diskpath::parse_automorphism(dec_auto);
    try {
      diskpath::MoveSequence seq = diskpath::decompose(a);
      if (dec_json) {
        nlohmann::json j{{"rank", a.rank()},
                         {"automorphism", diskpath::format_automorphism(a)},
                         {"moves", diskpath::format_moves(seq)},
                         {"count", seq.size()}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << diskpath::format_moves(seq) << "\n";
      }
      return 0;
    } catch (const diskpath::NotAnAutomorphism& e) {
      std::cerr << "not an automorphism: " << e.what() << "\n";
      return 1;
    }
  }

  if (cmd_prim->parsed()) {
    diskpath::Word w = diskpath::parse_word(prim_word, prim_rank);
    if (w.empty()) {
      std::cerr << "the empty word is not a disk boundary\n";
      return 2;
    }
    diskpath::MinimizationLog log = diskpath::whitehead_minimize(w);
    bool primitive = log.end.size() == 1;
    nlohmann::json j{
        {"word", diskpath::format_word(w)},
        {"primitive", primitive},
        {"minimized", diskpath::format_word(log.end.canonical())},
        {"moves_applied", log.moves.size()}};
    std::cout << j.dump(2) << "\n";
    return primitive ? 0 : 1;
  }

  if (cmd_path->parsed()) {
    diskpath::Word u = diskpath::parse_word(path_u, path_rank);
    diskpath::Word v = diskpath::parse_word(path_v, path_rank);
    try {
      diskpath::HPath p = diskpath::synthesize(u, v);
      if (path_compress) p = diskpath::compress(p);
      if (!path_json_file.empty()) {
        std::ofstream out(path_json_file);
        if (!out) {
          std::cerr << "cannot write " << path_json_file << "\n";
          return 2;
        }
        out << diskpath::path_to_json(p).dump(2) << "\n";
      }
      std::cout << "steps: " << p.steps.size() << "\n";
      for (const diskpath::PathStep& s : p.steps) {
        std::cout << "  " << diskpath::format_word(s.word);
        if (s.move) std::cout << "   [" << diskpath::move_char(*s.move) << "]";
        std::cout << "\n";
      }
      return 0;
    } catch (const diskpath::NotPrimitive& e) {
      std::cerr << "not primitive: " << e.what() << "\n";
      return 1;
    }
  }

  if (cmd_verify->parsed()) {
    std::ifstream in(verify_file);
    if (!in) {
      std::cerr << "cannot read " << verify_file << "\n";
      return 2;
    }
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      std::cerr << "bad JSON: " << e.what() << "\n";
      return 2;
    }
    diskpath::HPath p = diskpath::path_from_json(j);
    diskpath::VerificationReport r = diskpath::verify(p);
    std::cout << diskpath::report_to_json(r).dump(2) << "\n";
    return r.pass() ? 0 : 1;
  }

  if (cmd_ledger->parsed()) {
    if (ledger_as_json) {
      std::cout << diskpath::ledger_json(ledger_rank).dump(2) << "\n";
    } else {
      for (const nlohmann::json& f : diskpath::ledger_json(ledger_rank)) {
        std::cout << f.at("move").get<std::string>() << ": fixed";
        for (const auto& l : f.at("fixed")) std::cout << ' ' << l.get<std::string>();
        std::cout << "; moved";
        for (const auto& l : f.at("moved")) std::cout << ' ' << l.get<std::string>();
        std::cout << "\n";
      }
    }
    return 0;
  }

  if (cmd_exp->parsed()) {
    diskpath::ClassTable table = exp_serial
                                     ? diskpath::enumerate_classes_serial(exp_rank, exp_bound)
                                     : diskpath::enumerate_classes(exp_rank, exp_bound);
    diskpath::ReachResult r = diskpath::reach_all(table, !exp_serial);
    std::cout << "classes: " << table.classes.size() << "\n"
              << "reached: " << r.reached << "\n"
              << "failures: " << r.failures << "\n"
              << "max_path_steps: " << r.max_path_steps << "\n";
    if (!exp_dot.empty()) {
      std::ofstream out(exp_dot);
      if (!out) {
        std::cerr << "cannot write " << exp_dot << "\n";
        return 2;
      }
      out << diskpath::reach_dot(r);
    }
    if (!exp_csv.empty()) {
      std::ofstream out(exp_csv);
      if (!out) {
        std::cerr << "cannot write " << exp_csv << "\n";
        return 2;
      }
      out << diskpath::reach_csv(r);
    }
    return r.failures == 0 ? 0 : 1;
  }

  std::cerr << app.help();
  return 2;
}

} // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const diskpath::ParseError& e) {
    std::cerr << "parse error";
    if (e.token_position()) std::cerr << " at token " << e.token_position();
    std::cerr << ": " << e.what() << "\n";
    return 2;
  } catch (const diskpath::RankError& e) {
    std::cerr << "rank error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
