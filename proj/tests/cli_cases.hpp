#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "modmotif/cli.hpp"

// Every CLI invocation of the test suite, in run order (later cases read
// files written by earlier ones). `@fx/` expands to the fixture directory
// and `@tmp/` to a scratch directory.

namespace test_support {

struct CliCase {
  std::string name;
  std::vector<std::string> args;
  int exit_code;
};

inline const std::vector<CliCase>& cli_cases() {
  using namespace modmotif::cli;
  static const std::vector<CliCase> cases = {
      {"decompose appendix json", {"decompose", "-g", "@fx/appendix.gm", "--format", "json"}, kOk},
      {"decompose appendix default", {"decompose", "-g", "@fx/appendix.gm"}, kOk},
      {"decompose appendix text", {"decompose", "-g", "@fx/appendix.gm", "--format", "text"}, kOk},
      {"decompose appendix dot", {"decompose", "-g", "@fx/appendix.gm", "--format", "dot"}, kOk},
      {"decompose fig3", {"decompose", "-g", "@fx/fig3.gm"}, kOk},
      {"decompose bad format", {"decompose", "-g", "@fx/fig3.gm", "--format", "xml"}, kInputError},
      {"decompose missing file", {"decompose", "-g", "@fx/nope.gm"}, kInputError},

      {"solve fig3", {"solve", "module-motif", "-g", "@fx/fig3.gm", "-m", "@fx/fig3.motif"}, kOk},
      {"solve fig3 --json",
       {"solve", "module-motif", "-g", "@fx/fig3.gm", "-m", "@fx/fig3.motif", "--json"}, kOk},
      {"solve fig3 text",
       {"solve", "module-motif", "-g", "@fx/fig3.gm", "-m", "@fx/fig3.motif", "--format", "text"},
       kOk},
      {"solve fig3 wrong motif",
       {"solve", "module-motif", "-g", "@fx/fig3.gm", "-m", "@fx/fig3_wrong.motif"}, kNotFound},
      {"solve appendix --all",
       {"solve", "module-motif", "-g", "@fx/appendix.gm", "-m", "@fx/two_a.motif", "--all"}, kOk},
      {"solve appendix --all capped",
       {"solve", "module-motif", "-g", "@fx/appendix.gm", "-m", "@fx/two_a.motif", "--all",
        "--cap", "2"},
       kOk},
      {"solve appendix --all text",
       {"solve", "module-motif", "-g", "@fx/appendix.gm", "-m", "@fx/two_a.motif", "--all",
        "--format", "text"},
       kOk},
      {"solve fig3 --all wrong",
       {"solve", "module-motif", "-g", "@fx/fig3.gm", "-m", "@fx/fig3_wrong.motif", "--all"},
       kNotFound},
      {"solve empty motif", {"solve", "module-motif", "-g", "@fx/fig3.gm", "-m", "@fx/empty.motif"},
       kInputError},
      {"solve list graph in simple mode",
       {"solve", "module-motif", "-g", "@fx/p3_list.gm", "-m", "@fx/p3_list.motif"}, kInputError},
      {"solve strong-only p3", {"solve", "strong-only", "-g", "@fx/p3.gm", "-m", "@fx/p3_red.motif"},
       kOk},
      {"solve strong-only fig3",
       {"solve", "strong-only", "-g", "@fx/fig3.gm", "-m", "@fx/fig3.motif"}, kNotFound},
      {"solve list-colored p3",
       {"solve", "list-colored", "-g", "@fx/p3_list.gm", "-m", "@fx/p3_list.motif"}, kOk},
      {"solve list-colored p3 text",
       {"solve", "list-colored", "-g", "@fx/p3_list.gm", "-m", "@fx/p3_list.motif", "--format",
        "text"},
       kOk},
      {"solve missing motif", {"solve", "module-motif", "-g", "@fx/fig3.gm"}, kInputError},
      {"solve malformed graph", {"solve", "module-motif", "-g", "@fx/bad.gm", "-m", "@fx/fig3.motif"},
       kInputError},

      {"oracle modules p3", {"oracle", "enumerate-modules", "-g", "@fx/p3.gm"}, kOk},
      {"oracle modules appendix budget",
       {"oracle", "enumerate-modules", "-g", "@fx/appendix.gm", "--budget", "8"}, kBudgetExceeded},
      {"oracle find-motif fig3",
       {"oracle", "find-motif", "-g", "@fx/fig3.gm", "-m", "@fx/fig3.motif"}, kOk},
      {"oracle find-motif wrong",
       {"oracle", "find-motif", "-g", "@fx/fig3.gm", "-m", "@fx/fig3_wrong.motif"}, kNotFound},
      {"oracle find-motif list",
       {"oracle", "find-motif", "-g", "@fx/p3_list.gm", "-m", "@fx/p3_list.motif"}, kOk},
      {"oracle mis fig1", {"oracle", "mis", "-g", "@fx/fig1_gi.gm"}, kOk},
      {"oracle setcover fig2", {"oracle", "setcover", "-i", "@fx/fig2.sets"}, kOk},
      {"oracle setcover uncoverable", {"oracle", "setcover", "-i", "@fx/uncoverable.sets"},
       kInputError},
      {"oracle x3c fig3", {"oracle", "x3c", "-i", "@fx/fig3.x3c"}, kOk},

      {"gen mis2maxmotif fig1",
       {"gen", "mis2maxmotif", "-i", "@fx/fig1_gi.gm", "-o", "@tmp/fig1.gm", "--provenance",
        "@tmp/fig1.json", "--motif", "@tmp/fig1.motif"},
       kOk},
      {"gen sc2minsubst fig2",
       {"gen", "sc2minsubst", "-i", "@fx/fig2.sets", "-o", "@tmp/fig2.gm", "--provenance",
        "@tmp/fig2.json", "--motif", "@tmp/fig2.motif"},
       kOk},
      {"gen x3c2module fig3",
       {"gen", "x3c2module", "-i", "@fx/fig3.x3c", "-o", "@tmp/fig3.gm", "--provenance",
        "@tmp/fig3.json", "--motif", "@tmp/fig3.motif"},
       kOk},
      {"gen x3c2module malformed",
       {"gen", "x3c2module", "-i", "@fx/fig2.sets", "-o", "@tmp/bad.gm"}, kInputError},
      {"solve generated fig3",
       {"solve", "module-motif", "-g", "@tmp/fig3.gm", "-m", "@tmp/fig3.motif"}, kOk},
      {"gen corpus", {"gen", "corpus", "-o", "@tmp/corpus", "--seed", "1", "--count", "6"}, kOk},

      {"verify lemma1 fig1",
       {"verify", "lemma1", "--cert", "@tmp/fig1.json", "--solution", "@fx/fig1_is.txt"}, kOk},
      {"verify lemma1 not independent",
       {"verify", "lemma1", "--cert", "@tmp/fig1.json", "--solution", "@fx/fig1_edge.txt"},
       kVerificationFailed},
      {"verify lemma2 fig1",
       {"verify", "lemma2", "--cert", "@tmp/fig1.json", "--solution", "@fx/fig1_bold.txt"}, kOk},
      {"verify lemma3 fig2",
       {"verify", "lemma3", "--cert", "@tmp/fig2.json", "--solution", "@fx/fig2_cover.txt"}, kOk},
      {"verify lemma3 not a cover",
       {"verify", "lemma3", "--cert", "@tmp/fig2.json", "--solution", "@fx/fig2_partial.txt"},
       kVerificationFailed},
      {"verify lemma4 fig2",
       {"verify", "lemma4", "--cert", "@tmp/fig2.json", "--solution", "@fx/fig2_bold.txt"}, kOk},
      {"verify lemma1 wrong certificate",
       {"verify", "lemma1", "--cert", "@tmp/fig2.json", "--solution", "@fx/fig1_is.txt"},
       kInputError},
      {"verify x3c-equiv fig3", {"verify", "x3c-equiv", "--cert", "@tmp/fig3.json"}, kOk},
      {"verify tampered certificate", {"verify", "x3c-equiv", "--cert", "@fx/tampered.json"},
       kVerificationFailed},
      {"verify tree appendix", {"verify", "tree", "-g", "@fx/appendix.gm"}, kOk},

      {"no subcommand", {}, kInputError},
      {"unknown subcommand", {"frobnicate"}, kInputError},
  };
  return cases;
}

inline std::vector<std::string> expand(const std::vector<std::string>& args,
                                       const std::filesystem::path& fixtures,
                                       const std::filesystem::path& tmp) {
  std::vector<std::string> out;
  for (auto a : args) {
    if (a.rfind("@fx/", 0) == 0) a = (fixtures / a.substr(4)).string();
    if (a.rfind("@tmp/", 0) == 0) a = (tmp / a.substr(5)).string();
    out.push_back(a);
  }
  return out;
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

/// Runs every case in a fresh `tmp`; returns one result per case.
inline std::vector<CliRun> run_all_cases(const std::filesystem::path& fixtures,
                                         const std::filesystem::path& tmp) {
  std::filesystem::remove_all(tmp);
  std::filesystem::create_directories(tmp);
  std::vector<CliRun> runs;
  for (const auto& c : cli_cases()) {
    std::ostringstream out, err;
    int code = modmotif::cli::run(expand(c.args, fixtures, tmp), out, err);
    runs.push_back({code, out.str(), err.str()});
  }
  return runs;
}

/// Contents of every regular file under `dir`, keyed by relative path.
inline std::vector<std::pair<std::string, std::string>> snapshot(const std::filesystem::path& dir) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& e : std::filesystem::recursive_directory_iterator(dir)) {
    if (!e.is_regular_file()) continue;
    std::ifstream in(e.path(), std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    out.emplace_back(std::filesystem::relative(e.path(), dir).string(), s.str());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace test_support
