// Golden-file harness for the command line tool. Each manifest row is run
// twice; the two byte-identical captures (exit code, stdout, stderr) must
// match <name>.golden. Pass --update to regenerate the golden files.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#ifdef _WIN32
#error "posix only"
#endif
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string quoted(const std::string& s) { return "'" + s + "'"; }

struct Row {
  std::string name;
  int expected_exit = 0;
  std::vector<std::string> args;
};

std::vector<Row> read_manifest(const fs::path& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot read manifest " << path << "\n";
    std::exit(2);
  }
  std::vector<Row> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto t1 = line.find('\t');
    auto t2 = line.find('\t', t1 + 1);
    if (t1 == std::string::npos || t2 == std::string::npos) {
      std::cerr << "malformed manifest row: " << line << "\n";
      std::exit(2);
    }
    Row row;
    row.name = line.substr(0, t1);
    row.expected_exit = std::stoi(line.substr(t1 + 1, t2 - t1 - 1));
    std::istringstream rest(line.substr(t2 + 1));
    std::string tok;
    while (rest >> tok) row.args.push_back(tok);
    rows.push_back(std::move(row));
  }
  return rows;
}

// exit code + captured streams, serialized so a golden file is one artifact
std::string capture(const std::string& tool, const fs::path& dir, const Row& row,
                    const fs::path& scratch) {
  std::string cmd = quoted(tool);
  for (const auto& arg : row.args) {
    bool is_doc = arg.size() > 4 && arg.rfind(".thc") == arg.size() - 4;
    cmd += " " + quoted(is_doc ? (dir / arg).string() : arg);
  }
  fs::path out_file = scratch / (row.name + ".out");
  fs::path err_file = scratch / (row.name + ".err");
  cmd += " > " + quoted(out_file.string()) + " 2> " + quoted(err_file.string());
  int status = std::system(cmd.c_str());
  int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::string blob = "exit: " + std::to_string(exit_code) + "\n[stdout]\n" + slurp(out_file) +
                     "[stderr]\n" + slurp(err_file);
  return blob;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: golden_runner <tool> <fixtures-dir> [--update]\n";
    return 2;
  }
  std::string tool = argv[1];
  fs::path dir = argv[2];
  bool update = argc > 3 && std::string(argv[3]) == "--update";

  fs::path scratch = fs::path("golden-scratch");
  fs::create_directories(scratch);

  auto rows = read_manifest(dir / "manifest.txt");
  int failures = 0;
  for (const auto& row : rows) {
    std::string first = capture(tool, dir, row, scratch);
    std::string expected_prefix = "exit: " + std::to_string(row.expected_exit) + "\n";
    bool ok = true;
    std::string why;

    if (first.rfind(expected_prefix, 0) != 0) {
      ok = false;
      why = "exit code mismatch (wanted " + std::to_string(row.expected_exit) + ")";
    }

    if (update) {
      std::ofstream out(dir / (row.name + ".golden"), std::ios::binary);
      out << first;
      std::cout << (ok ? "WROTE " : "WROTE-BAD-EXIT ") << row.name << "\n";
      if (!ok) ++failures;
      continue;
    }

    std::string second = capture(tool, dir, row, scratch);
    if (ok && first != second) {
      ok = false;
      why = "output differs between two runs";
    }
    if (ok) {
      std::string golden = slurp(dir / (row.name + ".golden"));
      if (golden.empty()) {
        ok = false;
        why = "missing golden file";
      } else if (golden != first) {
        ok = false;
        why = "output differs from golden file";
      }
    }

    std::cout << (ok ? "PASS " : "FAIL ") << row.name << (ok ? "" : "  (" + why + ")") << "\n";
    if (!ok) ++failures;
  }

  if (failures) std::cout << failures << " golden check(s) failed\n";
  return failures == 0 ? 0 : 1;
}
