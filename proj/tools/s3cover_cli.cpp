// s3cover command-line tool. Every subcommand goes through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "s3cover/s3cover.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitBadInput = 2;

bool pretty = false;

struct Input {
  std::string text;
  bool ok = false;
};

Input slurp(const std::string &path) {
  Input in;
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) {
      std::cerr << "error: cannot read " << path << "\n";
      return in;
    }
    buf << f.rdbuf();
  }
  in.text = buf.str();
  in.ok = true;
  return in;
}

std::string format(const char *json_text) {
  if (!pretty)
    return json_text;
  return nlohmann::ordered_json::parse(json_text).dump(2);
}

// Prints the report (if any) and maps the status to an exit code.
int finish(s3c_status st, char *report) {
  if (report) {
    std::cout << format(report) << "\n";
    s3c_string_free(report);
  }
  switch (st) {
  case S3C_OK:
    return kExitOk;
  case S3C_CHECK_FAILED:
    return kExitFailed;
  case S3C_BAD_INPUT:
  case S3C_SHAPE_MISMATCH:
    std::cerr << "error: " << s3c_last_error() << "\n";
    return kExitBadInput;
  default:
    std::cerr << "internal error: " << s3c_last_error() << "\n";
    return 3;
  }
}

bool write_text(const std::string &path, const std::string &text) {
  if (path.empty() || path == "-") {
    std::cout << text << "\n";
    return true;
  }
  std::ofstream f(path);
  if (!f) {
    std::cerr << "error: cannot write " << path << "\n";
    return false;
  }
  f << text << "\n";
  return static_cast<bool>(f);
}

struct ParamsDeleter {
  void operator()(s3c_params *p) const { s3c_params_free(p); }
};
struct TableDeleter {
  void operator()(s3c_table *t) const { s3c_table_free(t); }
};
struct BuildingDataDeleter {
  void operator()(s3c_building_data *b) const { s3c_building_data_free(b); }
};
using ParamsPtr = std::unique_ptr<s3c_params, ParamsDeleter>;
using TablePtr = std::unique_ptr<s3c_table, TableDeleter>;
using BuildingDataPtr = std::unique_ptr<s3c_building_data, BuildingDataDeleter>;

// Loaders return an empty pointer after printing the error.
ParamsPtr load_params(const std::string &path) {
  auto in = slurp(path);
  if (!in.ok)
    return nullptr;
  s3c_params *p = nullptr;
  if (s3c_params_parse(in.text.c_str(), &p) != S3C_OK) {
    std::cerr << "error: " << path << ": " << s3c_last_error() << "\n";
    return nullptr;
  }
  return ParamsPtr(p);
}

TablePtr load_table(const std::string &path) {
  auto in = slurp(path);
  if (!in.ok)
    return nullptr;
  s3c_table *t = nullptr;
  if (s3c_table_parse(in.text.c_str(), &t) != S3C_OK) {
    std::cerr << "error: " << path << ": " << s3c_last_error() << "\n";
    return nullptr;
  }
  return TablePtr(t);
}

BuildingDataPtr load_building_data(const std::string &path) {
  auto in = slurp(path);
  if (!in.ok)
    return nullptr;
  s3c_building_data *bd = nullptr;
  if (s3c_building_data_parse(in.text.c_str(), &bd) != S3C_OK) {
    std::cerr << "error: " << path << ": " << s3c_last_error() << "\n";
    return nullptr;
  }
  return BuildingDataPtr(bd);
}

int write_table(const s3c_table *t, const std::string &out) {
  char *text = nullptr;
  if (auto st = s3c_table_to_json(t, &text); st != S3C_OK)
    return finish(st, nullptr);
  bool ok = write_text(out, format(text));
  s3c_string_free(text);
  return ok ? kExitOk : kExitBadInput;
}

int cmd_check(const std::string &params) {
  auto p = load_params(params);
  if (!p)
    return kExitBadInput;
  char *report = nullptr;
  auto st = s3c_check(p.get(), &report);
  return finish(st, report);
}

int cmd_build(const std::string &params, const std::string &out) {
  auto p = load_params(params);
  if (!p)
    return kExitBadInput;
  s3c_table *t = nullptr;
  if (auto st = s3c_build(p.get(), &t); st != S3C_OK)
    return finish(st, nullptr);
  TablePtr table(t);
  return write_table(table.get(), out);
}

int cmd_verify(const std::string &path) {
  auto t = load_table(path);
  if (!t)
    return kExitBadInput;
  char *report = nullptr;
  auto st = s3c_verify(t.get(), &report);
  return finish(st, report);
}

int cmd_building_data(const std::string &params) {
  auto p = load_params(params);
  if (!p)
    return kExitBadInput;
  char *report = nullptr;
  auto st = s3c_building_data_report(p.get(), &report);
  return finish(st, report);
}

int cmd_reconstruct(const std::string &bd_path, const std::string &out,
                    const std::string &compare) {
  auto bd = load_building_data(bd_path);
  if (!bd)
    return kExitBadInput;
  s3c_table *t = nullptr;
  if (auto st = s3c_reconstruct(bd.get(), &t); st != S3C_OK)
    return finish(st, nullptr);
  TablePtr rebuilt(t);
  if (!out.empty())
    if (int rc = write_table(rebuilt.get(), out); rc != kExitOk)
      return rc;
  if (compare.empty())
    return kExitOk;

  auto p = load_params(compare);
  if (!p)
    return kExitBadInput;
  s3c_table *expected = nullptr;
  if (auto st = s3c_build(p.get(), &expected); st != S3C_OK)
    return finish(st, nullptr);
  TablePtr reference(expected);
  char *report = nullptr;
  auto st = s3c_table_compare(reference.get(), rebuilt.get(), &report);
  return finish(st, report);
}

int cmd_basis_change(const std::string &params, const std::string &change) {
  auto p = load_params(params);
  if (!p)
    return kExitBadInput;
  auto in = slurp(change);
  if (!in.ok)
    return kExitBadInput;
  char *report = nullptr;
  auto st = s3c_basis_change(p.get(), in.text.c_str(), &report);
  return finish(st, report);
}

int cmd_ramification(const std::string &params, bool nonzero, bool dedup,
                     const std::string &out, unsigned jobs) {
  auto p = load_params(params);
  if (!p)
    return kExitBadInput;
  unsigned flags = (nonzero ? S3C_MINORS_NONZERO : 0u) | (dedup ? S3C_MINORS_DEDUP : 0u);
  char *text = nullptr;
  if (auto st = s3c_ramification(p.get(), flags, jobs, &text); st != S3C_OK)
    return finish(st, nullptr);
  bool ok = write_text(out, format(text));
  s3c_string_free(text);
  return ok ? kExitOk : kExitBadInput;
}

int cmd_search(long bound, bool degenerate, unsigned jobs) {
  char *text = nullptr;
  auto st = s3c_search(bound, degenerate ? 1 : 0, jobs, &text);
  return finish(st, text);
}

int cmd_selftest() {
  char *report = nullptr;
  auto st = s3c_selftest(&report);
  return finish(st, report);
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact local models of S3-covers: build, verify, transform, analyze."};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--pretty", pretty, "Indent JSON output");
  app.set_version_flag("--version", s3c_version());

  std::string params, table, out, bd, compare, change;
  bool nonzero = false, dedup = false, degenerate = false;
  unsigned jobs = 1;
  long bound = 0;
  int rc = kExitOk;

  auto *selftest = app.add_subcommand("selftest", "Group-ring and projector identities");
  selftest->callback([&] { rc = cmd_selftest(); });

  auto *check = app.add_subcommand("check", "Constraint residual report");
  check->add_option("--params", params, "Parameter JSON (a..h)")->required();
  check->callback([&] { rc = cmd_check(params); });

  auto *build = app.add_subcommand("build", "Build the multiplication table");
  build->add_option("--params", params, "Parameter JSON (a..h)")->required();
  build->add_option("--out", out, "Output table JSON (default stdout)");
  build->callback([&] { rc = cmd_build(params, out); });

  auto *verify = app.add_subcommand("verify", "Unit, commutativity, associativity, equivariance");
  verify->add_option("--table", table, "Table JSON")->required();
  verify->callback([&] { rc = cmd_verify(table); });

  auto *building = app.add_subcommand("building-data", "Building data with tester residuals");
  building->add_option("--params", params, "Parameter JSON (a..h)")->required();
  building->callback([&] { rc = cmd_building_data(params); });

  auto *reconstruct = app.add_subcommand("reconstruct", "Assemble a table from building data");
  reconstruct->add_option("--building-data", bd, "Building data JSON (A..G, h)")->required();
  reconstruct->add_option("--out", out, "Output table JSON");
  reconstruct->add_option("--compare", compare, "Parameter JSON to compare against");
  reconstruct->callback([&] {
    // Without --out or --compare the table goes to stdout.
    rc = cmd_reconstruct(bd, out.empty() && compare.empty() ? "-" : out, compare);
  });

  auto *basis = app.add_subcommand("basis-change", "Transformed parameters and covariance check");
  basis->add_option("--params", params, "Parameter JSON (a..h)")->required();
  basis->add_option("--change", change, "Basis change JSON {u, C}")->required();
  basis->callback([&] { rc = cmd_basis_change(params, change); });

  auto *ram = app.add_subcommand("ramification", "5x5 minors of the relation Jacobian");
  ram->add_option("--params", params, "Parameter JSON (a..h)")->required();
  ram->add_flag("--nonzero", nonzero, "Drop zero minors");
  ram->add_flag("--dedup", dedup, "Drop rational multiples of earlier minors");
  ram->add_option("--out", out, "Output JSON (default stdout)");
  ram->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  ram->callback([&] { rc = cmd_ramification(params, nonzero, dedup, out, jobs); });

  auto *search = app.add_subcommand("search", "Integer solutions with |a..h| <= N");
  search->add_option("--bound", bound, "Coefficient bound N")->required();
  search->add_flag("--degenerate", degenerate, "Include tuples with a^2 + bc = 0");
  search->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  search->callback([&] { rc = cmd_search(bound, degenerate, jobs); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  } catch (const nlohmann::json::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return rc;
}
