#include "s3cover/s3cover.h"

#include <cstring>
#include <string>

#include "s3cover/json_io.hpp"
#include "s3cover/selftest.hpp"

using namespace s3cover;

struct s3c_params {
  CoverParams value;
};

struct s3c_table {
  MultiplicationTable value;
  std::optional<CoverParams> params;
};

struct s3c_building_data {
  BuildingData value;
};

namespace {

thread_local std::string last_error;

char *dup(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (out)
    std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

s3c_status emit(const json::Json &j, char **out) {
  if (!out) {
    last_error = "null output pointer";
    return S3C_BAD_INPUT;
  }
  *out = dup(j.dump());
  return S3C_OK;
}

// Runs fn, translating exceptions into status codes.
template <class Fn> s3c_status guarded(Fn &&fn) {
  try {
    return fn();
  } catch (const json::FormatError &e) {
    last_error = e.what();
    return S3C_BAD_INPUT;
  } catch (const ArithmeticError &e) {
    last_error = e.what();
    return S3C_BAD_INPUT;
  } catch (const std::invalid_argument &e) {
    last_error = e.what();
    return S3C_BAD_INPUT;
  } catch (const ShapeError &e) {
    last_error = e.what();
    return S3C_SHAPE_MISMATCH;
  } catch (const nlohmann::json::exception &e) {
    last_error = e.what();
    return S3C_BAD_INPUT;
  } catch (const std::exception &e) {
    last_error = e.what();
    return S3C_INTERNAL;
  }
}

bool null_arg(const void *p, const char *what) {
  if (p)
    return false;
  last_error = std::string("null argument: ") + what;
  return true;
}

s3c_status verdict(bool ok) { return ok ? S3C_OK : S3C_CHECK_FAILED; }

} // namespace

extern "C" {

const char *s3c_version(void) { return "1.0.0"; }

const char *s3c_last_error(void) { return last_error.c_str(); }

void s3c_string_free(char *s) { std::free(s); }

s3c_status s3c_params_parse(const char *json_text, s3c_params **out) {
  if (null_arg(json_text, "json") || null_arg(out, "out"))
    return S3C_BAD_INPUT;
  return guarded([&] {
    auto p = json::decode_params(json::parse(json_text));
    *out = new s3c_params{p};
    return S3C_OK;
  });
}

s3c_status s3c_params_from_strings(const char *const values[8], s3c_params **out) {
  if (null_arg(values, "values") || null_arg(out, "out"))
    return S3C_BAD_INPUT;
  return guarded([&] {
    std::array<Rational, 8> v;
    for (std::size_t i = 0; i < 8; ++i) {
      if (null_arg(values[i], "value"))
        return S3C_BAD_INPUT;
      v[i] = Rational::parse(values[i]);
    }
    *out = new s3c_params{CoverParams::from_array(v)};
    return S3C_OK;
  });
}

s3c_status s3c_params_to_json(const s3c_params *p, char **out) {
  if (null_arg(p, "params"))
    return S3C_BAD_INPUT;
  return guarded([&] { return emit(json::encode(p->value), out); });
}

void s3c_params_free(s3c_params *p) { delete p; }

s3c_status s3c_check(const s3c_params *p, char **report) {
  if (null_arg(p, "params"))
    return S3C_BAD_INPUT;
  return guarded([&] {
    auto r = check_constraints(p->value);
    json::Json j = json::encode(r);
    j["params"] = json::encode(p->value);
    if (auto st = emit(j, report); st != S3C_OK)
      return st;
    return verdict(r.satisfied());
  });
}

s3c_status s3c_build(const s3c_params *p, s3c_table **out) {
  if (null_arg(p, "params") || null_arg(out, "out"))
    return S3C_BAD_INPUT;
  return guarded([&] {
    *out = new s3c_table{build_cover(p->value), p->value};
    return S3C_OK;
  });
}

s3c_status s3c_table_parse(const char *json_text, s3c_table **out) {
  if (null_arg(json_text, "json") || null_arg(out, "out"))
    return S3C_BAD_INPUT;
  return guarded([&] {
    auto doc = json::decode_table(json::parse(json_text));
    *out = new s3c_table{doc.table, doc.params};
    return S3C_OK;
  });
}

s3c_status s3c_table_to_json(const s3c_table *t, char **out) {
  if (null_arg(t, "table"))
    return S3C_BAD_INPUT;
  return guarded([&] { return emit(json::encode_table(t->value, t->params), out); });
}

void s3c_table_free(s3c_table *t) { delete t; }

s3c_status s3c_verify(const s3c_table *t, char **report) {
  if (null_arg(t, "table"))
    return S3C_BAD_INPUT;
  return guarded([&] {
    auto r = verify(t->value);
    if (auto st = emit(json::encode(r), report); st != S3C_OK)
      return st;
    return verdict(r.all_passed());
  });
}

s3c_status s3c_table_compare(const s3c_table *expected, const s3c_table *actual, char **report) {
  if (null_arg(expected, "expected") || null_arg(actual, "actual"))
    return S3C_BAD_INPUT;
  return guarded([&] {
    auto diff = compare_tables(expected->value, actual->value);
    json::Json j = json::Json::object();
    j["equal"] = diff.empty();
    json::Json list = json::Json::array();
    for (const auto &m : diff)
      list.push_back({{"entry", m.key},
                      {"expected", json::encode(m.expected)},
                      {"actual", json::encode(m.actual)}});
    j["mismatches"] = list;
    if (auto st = emit(j, report); st != S3C_OK)
      return st;
    return verdict(diff.empty());
  });
}

s3c_status s3c_extract_params(const s3c_table *t, s3c_params **out) {
  if (null_arg(t, "table") || null_arg(out, "out"))
    return S3C_BAD_INPUT;
  return guarded([&] {
    *out = new s3c_params{extract_params(t->value)};
    return S3C_OK;
  });
}

s3c_status s3c_building_data_report(const s3c_params *p, char **report) {
  if (null_arg(p, "params"))
    return S3C_BAD_INPUT;
  return guarded([&] {
    auto r = pipeline_check(p->value);
    if (auto st = emit(json::encode(r), report); st != S3C_OK)
      return st;
    return verdict(r.residual.in_kernel() && r.ok());
  });
}

s3c_status s3c_building_data_parse(const char *json_text, s3c_building_data **out) {
  if (null_arg(json_text, "json") || null_arg(out, "out"))
    return S3C_BAD_INPUT;
  return guarded([&] {
    *out = new s3c_building_data{json::decode_building_data(json::parse(json_text))};
    return S3C_OK;
  });
}

s3c_status s3c_building_data_to_json(const s3c_building_data *bd, char **out) {
  if (null_arg(bd, "building data"))
    return S3C_BAD_INPUT;
  return guarded([&] { return emit(json::encode(bd->value), out); });
}

void s3c_building_data_free(s3c_building_data *bd) { delete bd; }

s3c_status s3c_reconstruct(const s3c_building_data *bd, s3c_table **out) {
  if (null_arg(bd, "building data") || null_arg(out, "out"))
    return S3C_BAD_INPUT;
  return guarded([&] {
    *out = new s3c_table{reconstruct_table(bd->value), from_building_data(bd->value)};
    return S3C_OK;
  });
}

s3c_status s3c_basis_change(const s3c_params *p, const char *change_json, char **report) {
  if (null_arg(p, "params") || null_arg(change_json, "change"))
    return S3C_BAD_INPUT;
  return guarded([&] {
    auto bc = json::decode_basis_change(json::parse(change_json));
    require_invertible(bc);
    auto r = check_covariance(p->value, bc);
    json::Json j = json::encode(r);
    j["change"] = json::encode(bc);
    j["module_map"] = json::encode(induced_module_map(bc));
    if (auto st = emit(j, report); st != S3C_OK)
      return st;
    return verdict(r.ok());
  });
}

s3c_status s3c_ramification(const s3c_params *p, unsigned flags, unsigned jobs, char **out) {
  if (null_arg(p, "params"))
    return S3C_BAD_INPUT;
  return guarded([&] {
    MinorOptions opts;
    opts.nonzero_only = (flags & S3C_MINORS_NONZERO) != 0;
    opts.dedup = (flags & S3C_MINORS_DEDUP) != 0;
    opts.jobs = jobs;
    return emit(json::encode(all_minors(p->value, opts)), out);
  });
}

s3c_status s3c_minor(const s3c_params *p, const int rows[5], char **out) {
  if (null_arg(p, "params") || null_arg(rows, "rows"))
    return S3C_BAD_INPUT;
  return guarded([&] {
    RowSet rs{rows[0], rows[1], rows[2], rows[3], rows[4]};
    json::Json j = json::Json::object();
    j["rows"] = rs;
    j["value"] = json::encode(minor(p->value, rs));
    return emit(j, out);
  });
}

s3c_status s3c_search(long bound, int include_degenerate, unsigned jobs, char **out) {
  return guarded([&] {
    auto all = enumerate_integer(bound, jobs);
    if (!include_degenerate)
      std::erase_if(all, [](const IntegerSolution &s) { return s.degenerate; });
    return emit(json::encode(all), out);
  });
}

s3c_status s3c_selftest(char **report) {
  return guarded([&] {
    auto r = run_selftest();
    json::Json checks = json::Json::array();
    for (const auto &c : r.checks)
      checks.push_back({{"name", c.name}, {"passed", c.passed}});
    json::Json j = json::Json::object();
    j["checks"] = checks;
    j["passed"] = r.passed();
    if (auto st = emit(j, report); st != S3C_OK)
      return st;
    return verdict(r.passed());
  });
}

} // extern "C"
