/*
 * Copyright 2026 The Orient Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command-line frontend for liborient. Deliberately written against the
// public C API only, so it doubles as an integration exercise of the shared
// library surface.
//
// Exit codes: 0 success, 1 usage error, 2 data/parse error,
// 3 numeric/degenerate error.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "orient/orient.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitNumeric = 3;

struct CliError {
  int exit_code;
  std::string message;
};

[[noreturn]] void fail(int exit_code, const std::string& message) {
  throw CliError{exit_code, message};
}

[[noreturn]] void fail_status(orient_status status, const std::string& context) {
  int exit_code = kExitNumeric;
  switch (status) {
    case ORIENT_ERROR_INVALID_SCHEME:
      exit_code = kExitUsage;
      break;
    case ORIENT_ERROR_PARSE:
    case ORIENT_ERROR_IO:
      exit_code = kExitData;
      break;
    default:
      exit_code = kExitNumeric;
      break;
  }
  fail(exit_code, context + ": " + orient_last_error());
}

void check_status(orient_status status, const std::string& context) {
  if (status != ORIENT_OK) {
    fail_status(status, context);
  }
}

struct SchemeDeleter {
  void operator()(orient_scheme* s) const { orient_scheme_free(s); }
};
using SchemePtr = std::unique_ptr<orient_scheme, SchemeDeleter>;

struct LabelsDeleter {
  void operator()(orient_labels* l) const { orient_labels_free(l); }
};
using LabelsPtr = std::unique_ptr<orient_labels, LabelsDeleter>;

SchemePtr parse_scheme(const std::string& descriptor) {
  orient_scheme* raw = nullptr;
  const orient_status status = orient_scheme_parse(descriptor.c_str(), &raw);
  if (status != ORIENT_OK) {
    fail(kExitUsage, std::string("--scheme: ") + orient_last_error());
  }
  return SchemePtr(raw);
}

void require_loss_compatible(const std::string& loss, const SchemePtr& scheme) {
  int compatible = 0;
  check_status(orient_loss_compatible(loss.c_str(), scheme.get(), &compatible),
               "--loss");
  if (compatible == 0) {
    char descriptor[64] = {0};
    orient_scheme_descriptor(scheme.get(), descriptor, sizeof(descriptor));
    fail(kExitUsage,
         "--loss: '" + loss + "' is not defined for scheme '" + descriptor + "'");
  }
}

LabelsPtr parse_labels_file(const std::string& path) {
  orient_labels* raw = nullptr;
  check_status(orient_labels_parse_file(path.c_str(), &raw), path);
  LabelsPtr labels(raw);
  for (size_t i = 0; i < orient_labels_warning_count(raw); ++i) {
    std::cerr << "orient: warning: " << path << ": " << orient_labels_warning(raw, i)
              << "\n";
  }
  return labels;
}

std::istream& open_input(std::ifstream& file, const std::string& path) {
  if (path.empty()) {
    return std::cin;
  }
  file.open(path);
  if (!file) {
    fail(kExitData, "cannot open '" + path + "' for reading");
  }
  return file;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty()) {
    return std::cout;
  }
  file.open(path);
  if (!file) {
    fail(kExitData, "cannot open '" + path + "' for writing");
  }
  return file;
}

std::string trim(const std::string& line) {
  const auto begin = line.find_first_not_of(" \t\r");
  if (begin == std::string::npos) {
    return "";
  }
  const auto end = line.find_last_not_of(" \t\r");
  return line.substr(begin, end - begin + 1);
}

double parse_double_token(const std::string& token, const std::string& where) {
  char* end = nullptr;
  const double value = std::strtod(token.c_str(), &end);
  if (token.empty() || end != token.c_str() + token.size()) {
    fail(kExitData, where + ": expected a number, got '" + token + "'");
  }
  return value;
}

std::string format_value(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

void write_all(std::ostream& out, const std::string& text, const std::string& path) {
  out << text;
  out.flush();
  if (!out) {
    fail(kExitData,
         "failed writing output" + (path.empty() ? "" : " to '" + path + "'"));
  }
}

// ---- subcommand bodies -----------------------------------------------------

int run_encode(const std::string& descriptor, const std::string& input_path,
               const std::string& output_path) {
  const SchemePtr scheme = parse_scheme(descriptor);
  const size_t dim = orient_scheme_dimension(scheme.get());
  std::vector<double> buffer(dim);

  std::ifstream in_file;
  std::ofstream out_file;
  std::istream& in = open_input(in_file, input_path);
  std::ostream& out = open_output(out_file, output_path);

  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string token = trim(line);
    if (token.empty()) continue;
    const std::string where = (input_path.empty() ? "stdin" : input_path) + ", line " +
                              std::to_string(line_no);
    const double theta = parse_double_token(token, where);
    check_status(orient_encode(scheme.get(), theta, buffer.data(), dim), where);
    std::string row;
    for (size_t i = 0; i < dim; ++i) {
      if (i > 0) row += ',';
      row += format_value(buffer[i]);
    }
    row += '\n';
    write_all(out, row, output_path);
  }
  return kExitOk;
}

int run_decode(const std::string& descriptor, const std::string& input_path,
               const std::string& output_path) {
  const SchemePtr scheme = parse_scheme(descriptor);
  const size_t dim = orient_scheme_dimension(scheme.get());

  std::ifstream in_file;
  std::ofstream out_file;
  std::istream& in = open_input(in_file, input_path);
  std::ostream& out = open_output(out_file, output_path);

  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string row = trim(line);
    if (row.empty()) continue;
    const std::string where = (input_path.empty() ? "stdin" : input_path) + ", line " +
                              std::to_string(line_no);

    std::vector<double> values;
    size_t pos = 0;
    while (pos <= row.size()) {
      const size_t comma = row.find(',', pos);
      const std::string token = trim(
          row.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
      values.push_back(parse_double_token(token, where));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (values.size() != dim) {
      fail(kExitData, where + ": expected " + std::to_string(dim) +
                          " comma-separated values, got " +
                          std::to_string(values.size()));
    }
    double theta = 0.0;
    check_status(orient_decode(scheme.get(), values.data(), values.size(), &theta),
                 where);
    write_all(out, format_value(theta) + "\n", output_path);
  }
  return kExitOk;
}

int run_convert(const std::string& from, const std::string& to,
                const std::string& input_path, const std::string& output_path) {
  if (from == to) {
    fail(kExitUsage, "--from and --to must differ");
  }
  const LabelsPtr labels = parse_labels_file(input_path);
  orient_labels* converted_raw = nullptr;
  const orient_angle_field target_field =
      to == "roty" ? ORIENT_FIELD_ROTY : ORIENT_FIELD_ALPHA;
  check_status(orient_labels_convert(labels.get(), target_field, &converted_raw),
               input_path);
  const LabelsPtr converted(converted_raw);

  if (output_path.empty()) {
    char* text = nullptr;
    check_status(orient_labels_write(converted.get(), &text), "convert");
    std::cout << text;
    orient_string_free(text);
  } else {
    check_status(orient_labels_write_file(converted.get(), output_path.c_str()),
                 output_path);
  }
  return kExitOk;
}

int run_eval(const std::string& pred_path, const std::string& gt_path,
             const std::string& class_filter, const std::string& field) {
  LabelsPtr pred = parse_labels_file(pred_path);
  LabelsPtr gt = parse_labels_file(gt_path);

  if (!class_filter.empty()) {
    orient_labels* filtered = nullptr;
    check_status(
        orient_labels_filter_class(pred.get(), class_filter.c_str(), &filtered),
        pred_path);
    pred.reset(filtered);
    check_status(orient_labels_filter_class(gt.get(), class_filter.c_str(), &filtered),
                 gt_path);
    gt.reset(filtered);
  }

  const size_t n_pred = orient_labels_count(pred.get());
  const size_t n_gt = orient_labels_count(gt.get());
  if (n_pred != n_gt) {
    fail(kExitData, "label count mismatch: " + std::to_string(n_pred) + " in '" +
                        pred_path + "' vs " + std::to_string(n_gt) + " in '" + gt_path +
                        "'");
  }
  if (n_pred == 0) {
    fail(kExitData,
         "no labels to evaluate" +
             (class_filter.empty() ? std::string() : " for class '" + class_filter + "'"));
  }

  const orient_angle_field angle_field =
      field == "alpha" ? ORIENT_FIELD_ALPHA : ORIENT_FIELD_ROTY;
  std::vector<double> pred_angles(n_pred);
  std::vector<double> gt_angles(n_gt);
  check_status(
      orient_labels_get_angles(pred.get(), angle_field, pred_angles.data(), n_pred),
      pred_path);
  check_status(orient_labels_get_angles(gt.get(), angle_field, gt_angles.data(), n_gt),
               gt_path);

  double os = 0.0;
  check_status(
      orient_orientation_similarity(pred_angles.data(), gt_angles.data(), n_pred, &os),
      "eval");
  std::printf("%.6f\n", os);
  return kExitOk;
}

int run_landscape(const std::string& descriptor, const std::string& loss, double gt,
                  size_t points, const std::string& output_path) {
  const SchemePtr scheme = parse_scheme(descriptor);
  require_loss_compatible(loss, scheme);
  char* csv = nullptr;
  check_status(orient_landscape_csv(scheme.get(), loss.c_str(), gt, points, &csv),
               "landscape");
  std::ofstream out_file;
  std::ostream& out = open_output(out_file, output_path);
  write_all(out, csv, output_path);
  orient_string_free(csv);
  return kExitOk;
}

int run_fit(const std::string& descriptor, const std::string& loss, double init,
            double gt, int steps, double step_size, const std::string& output_path) {
  const SchemePtr scheme = parse_scheme(descriptor);
  require_loss_compatible(loss, scheme);
  char* csv = nullptr;
  check_status(
      orient_fit_csv(scheme.get(), loss.c_str(), init, gt, steps, step_size, &csv),
      "fit");
  std::ofstream out_file;
  std::ostream& out = open_output(out_file, output_path);
  write_all(out, csv, output_path);
  orient_string_free(csv);
  return kExitOk;
}

int run_simulate(const std::string& descriptor, double sigma, uint64_t seed,
                 size_t count) {
  const SchemePtr scheme = parse_scheme(descriptor);
  double os = 0.0;
  check_status(orient_simulate_os(scheme.get(), sigma, seed, count, &os), "simulate");
  std::printf("%.6f\n", os);
  return kExitOk;
}

int run_check(const std::string& labels_path, double tol) {
  const LabelsPtr labels = parse_labels_file(labels_path);
  const size_t count = orient_labels_count(labels.get());
  size_t failures = 0;
  size_t skipped = 0;
  for (size_t i = 0; i < count; ++i) {
    orient_label_view view;
    check_status(orient_labels_get(labels.get(), i, &view), labels_path);
    if (view.location[2] <= 0.0) {
      std::printf("line %zu: skipped (%s, z = %.2f)\n", i + 1, view.object_type,
                  view.location[2]);
      ++skipped;
      continue;
    }
    const std::string where = labels_path + ", line " + std::to_string(i + 1);
    double expected = 0.0;
    check_status(
        orient_alpha_to_roty(view.alpha, view.location[0], view.location[2], &expected),
        where);
    double residual = 0.0;
    check_status(orient_circular_diff(view.rotation_y, expected, &residual), where);
    int consistent = 0;
    check_status(orient_labels_check(labels.get(), i, tol, &consistent), where);
    if (consistent != 0) {
      std::printf("line %zu: ok (|residual| = %.4f <= %.4f)\n", i + 1,
                  std::fabs(residual), tol);
    } else {
      std::printf("line %zu: FAIL (|residual| = %.4f > %.4f)\n", i + 1,
                  std::fabs(residual), tol);
      ++failures;
    }
  }
  std::printf("%zu checked, %zu ok, %zu failed, %zu skipped\n", count - skipped,
              count - skipped - failures, failures, skipped);
  return failures == 0 ? kExitOk : kExitData;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vehicle orientation representation toolkit"};
  app.require_subcommand(1);

  std::string scheme_arg;
  std::string input_path;
  std::string output_path;
  std::string loss_arg = "l2";
  double gt_angle = 0.0;

  CLI::App* encode = app.add_subcommand(
      "encode", "read angles (radians, one per line), write CSV vectors");
  encode->add_option("--scheme", scheme_arg, "representation scheme descriptor")
      ->required();
  encode->add_option("--input", input_path, "input file (default stdin)");
  encode->add_option("--output", output_path, "output file (default stdout)");

  CLI::App* decode = app.add_subcommand(
      "decode", "read CSV vectors, write angles (radians, one per line)");
  decode->add_option("--scheme", scheme_arg, "representation scheme descriptor")
      ->required();
  decode->add_option("--input", input_path, "input file (default stdin)");
  decode->add_option("--output", output_path, "output file (default stdout)");

  std::string from_field;
  std::string to_field;
  CLI::App* convert = app.add_subcommand(
      "convert", "rewrite one KITTI angle column from the other and the location");
  convert->add_option("--from", from_field, "source field")
      ->required()
      ->check(CLI::IsMember({"alpha", "roty"}));
  convert->add_option("--to", to_field, "target field")
      ->required()
      ->check(CLI::IsMember({"alpha", "roty"}));
  convert->add_option("--input", input_path, "KITTI label file")->required();
  convert->add_option("--output", output_path, "output file (default stdout)");

  std::string pred_path;
  std::string gt_path;
  std::string class_filter;
  std::string eval_field = "roty";
  CLI::App* eval =
      app.add_subcommand("eval", "orientation similarity between two KITTI label files");
  eval->add_option("--pred", pred_path, "predicted labels")->required();
  eval->add_option("--gt", gt_path, "ground-truth labels")->required();
  eval->add_option("--class", class_filter, "keep only this object class");
  eval->add_option("--field", eval_field, "angle column to compare (default roty)")
      ->check(CLI::IsMember({"roty", "alpha"}));

  std::size_t points = 1000;
  CLI::App* landscape = app.add_subcommand(
      "landscape", "CSV sweep of loss(encode(theta_pred), encode(gt))");
  landscape->add_option("--scheme", scheme_arg, "representation scheme descriptor")
      ->required();
  landscape->add_option("--loss", loss_arg, "loss function")
      ->required()
      ->check(CLI::IsMember({"l2", "angular", "multibin"}));
  landscape->add_option("--gt", gt_angle, "ground-truth angle (radians, default 0)");
  landscape->add_option("--points", points, "grid size (default 1000)")
      ->check(CLI::PositiveNumber);
  landscape->add_option("--output", output_path, "output file (default stdout)");

  double init_angle = 0.0;
  int steps = 500;
  double step_size = 0.1;
  CLI::App* fit =
      app.add_subcommand("fit", "gradient-descent trace on the prediction vector (CSV)");
  fit->add_option("--scheme", scheme_arg, "representation scheme descriptor")
      ->required();
  fit->add_option("--loss", loss_arg, "loss function")
      ->required()
      ->check(CLI::IsMember({"l2", "angular", "multibin"}));
  fit->add_option("--init", init_angle, "initial angle (radians)")->required();
  fit->add_option("--gt", gt_angle, "ground-truth angle (radians)")->required();
  fit->add_option("--steps", steps, "number of updates (default 500)")
      ->check(CLI::PositiveNumber);
  fit->add_option("--lr", step_size, "step size in (0, 1] (default 0.1)")
      ->check(CLI::Range(1e-12, 1.0));
  fit->add_option("--output", output_path, "output file (default stdout)");

  double sigma = 0.0;
  uint64_t seed = 0;
  std::size_t count = 10000;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "orientation similarity under Gaussian representation noise");
  simulate->add_option("--scheme", scheme_arg, "representation scheme descriptor")
      ->required();
  simulate->add_option("--sigma", sigma, "noise sigma per vector component")
      ->required()
      ->check(CLI::NonNegativeNumber);
  simulate->add_option("--seed", seed, "random seed (default 0)");
  simulate->add_option("--count", count, "number of instances (default 10000)")
      ->check(CLI::PositiveNumber);

  std::string labels_path;
  double tol = 0.02;
  CLI::App* check = app.add_subcommand(
      "check", "per-row alpha/rotation_y consistency report for a label file");
  check->add_option("--labels", labels_path, "KITTI label file")->required();
  check->add_option("--tol", tol, "tolerance in radians (default 0.02)")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(encode)) {
      return run_encode(scheme_arg, input_path, output_path);
    }
    if (app.got_subcommand(decode)) {
      return run_decode(scheme_arg, input_path, output_path);
    }
    if (app.got_subcommand(convert)) {
      return run_convert(from_field, to_field, input_path, output_path);
    }
    if (app.got_subcommand(eval)) {
      return run_eval(pred_path, gt_path, class_filter, eval_field);
    }
    if (app.got_subcommand(landscape)) {
      return run_landscape(scheme_arg, loss_arg, gt_angle, points, output_path);
    }
    if (app.got_subcommand(fit)) {
      return run_fit(scheme_arg, loss_arg, init_angle, gt_angle, steps, step_size,
                     output_path);
    }
    if (app.got_subcommand(simulate)) {
      return run_simulate(scheme_arg, sigma, seed, count);
    }
    if (app.got_subcommand(check)) {
      return run_check(labels_path, tol);
    }
  } catch (const CliError& e) {
    std::cerr << "orient: " << e.message << "\n";
    return e.exit_code;
  }
  return kExitUsage;
}
