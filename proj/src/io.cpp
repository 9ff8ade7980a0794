// Copyright 2026 purext contributors
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

#include "purext/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>

#include "purext/errors.hpp"

namespace purext {

namespace {

constexpr const char* kGridHeader =
    "eps_tau,theta_over_pi,upsilon,lambda_eff,sigma,degenerate,defective";
constexpr const char* kDiffHeaderTail =
    ",d_upsilon,d_lambda,d_sigma,class_upsilon,class_lambda,class_sigma";

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  return out;
}

void write_meta(std::ofstream& out, const std::vector<std::string>& meta) {
  for (const std::string& line : meta) out << "# " << line << '\n';
}

void append_witness_row(std::string& row, double eps_tau, double theta,
                        const WitnessTriple& w, bool degenerate, bool defective) {
  row += fmt12(eps_tau);
  row += ',';
  row += fmt12(theta);
  row += ',';
  row += fmt12(w.upsilon);
  row += ',';
  row += fmt12(w.lambda_eff);
  row += ',';
  row += fmt12(w.sigma);
  row += ',';
  row += degenerate ? '1' : '0';
  row += ',';
  row += defective ? '1' : '0';
}

struct Rgb {
  unsigned char r, g, b;
};

Rgb witness_color(double v) {
  const double x = std::clamp(v, 0.0, 1.0);
  const auto ch = [](double d) {
    return static_cast<unsigned char>(std::lround(std::clamp(d, 0.0, 255.0)));
  };
  return {ch(255.0 * (1.0 - x)), ch(255.0 * (1.0 - x)), ch(255.0 - 116.0 * x)};
}

Rgb class_color(DiffClass c) {
  switch (c) {
    case DiffClass::none: return {255, 255, 255};
    case DiffClass::moderate_increase: return {173, 216, 230};
    case DiffClass::large_increase: return {0, 0, 139};
    case DiffClass::moderate_decrease: return {255, 182, 193};
    case DiffClass::large_decrease: return {139, 0, 0};
  }
  return {255, 255, 255};
}

void write_ppm(const std::vector<std::string>& meta, int width, int height,
               const std::function<Rgb(int col, int row_from_top)>& pixel,
               const std::string& path) {
  std::ofstream out = open_out(path);
  out << "P6\n";
  write_meta(out, meta);
  out << width << ' ' << height << "\n255\n";
  std::string bytes;
  bytes.reserve(static_cast<std::size_t>(width) * static_cast<std::size_t>(height) * 3);
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      const Rgb px = pixel(c, r);
      bytes.push_back(static_cast<char>(px.r));
      bytes.push_back(static_cast<char>(px.g));
      bytes.push_back(static_cast<char>(px.b));
    }
  }
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed: " + path);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  fields.push_back(cur);
  return fields;
}

} // namespace

const char* quantity_name(Quantity q) {
  switch (q) {
    case Quantity::upsilon: return "upsilon";
    case Quantity::lambda_eff: return "lambda_eff";
    case Quantity::sigma: return "sigma";
  }
  return "upsilon";
}

std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void write_grid_csv(const SweepGrid& grid, const std::vector<std::string>& meta,
                    const std::string& path) {
  std::ofstream out = open_out(path);
  write_meta(out, meta);
  out << kGridHeader << '\n';
  const int nt = grid.spec.eps_tau.count;
  const int nh = grid.spec.theta_over_pi.count;
  for (int ti = 0; ti < nt; ++ti) {
    for (int j = 0; j < nh; ++j) {
      const SweepCell& c = grid.cell(ti, j);
      std::string row;
      append_witness_row(row, grid.spec.eps_tau.at(ti), grid.spec.theta_over_pi.at(j), c.w,
                         c.degenerate, c.defective);
      out << row << '\n';
    }
  }
  if (!out) throw IoError("write failed: " + path);
}

void write_diff_csv(const SweepGrid& grid, const DiffMap& diff,
                    const std::vector<std::string>& meta, const std::string& path) {
  if (!grid.spec.same_axes(diff.spec))
    throw SpecMismatch("write_diff_csv: grid and diff axes differ");
  std::ofstream out = open_out(path);
  write_meta(out, meta);
  out << kGridHeader << kDiffHeaderTail << '\n';
  const int nt = grid.spec.eps_tau.count;
  const int nh = grid.spec.theta_over_pi.count;
  for (int ti = 0; ti < nt; ++ti) {
    for (int j = 0; j < nh; ++j) {
      const SweepCell& c = grid.cell(ti, j);
      const DiffCell& d = diff.cell(ti, j);
      std::string row;
      append_witness_row(row, grid.spec.eps_tau.at(ti), grid.spec.theta_over_pi.at(j), c.w,
                         d.degenerate, d.defective);
      row += ',';
      row += fmt12(d.d_upsilon);
      row += ',';
      row += fmt12(d.d_lambda);
      row += ',';
      row += fmt12(d.d_sigma);
      row += ',';
      row += diff_class_name(d.c_upsilon);
      row += ',';
      row += diff_class_name(d.c_lambda);
      row += ',';
      row += diff_class_name(d.c_sigma);
      out << row << '\n';
    }
  }
  if (!out) throw IoError("write failed: " + path);
}

void write_point_csv(double eps_tau, double theta_over_pi, const WitnessTriple& w,
                     bool defective, const std::vector<std::string>& meta,
                     const std::string& path) {
  std::ofstream out = open_out(path);
  write_meta(out, meta);
  out << kGridHeader << '\n';
  std::string row;
  append_witness_row(row, eps_tau, theta_over_pi, w, w.degenerate_top, defective);
  out << row << '\n';
  if (!out) throw IoError("write failed: " + path);
}

void write_grid_ppm(const SweepGrid& grid, Quantity q,
                    const std::vector<std::string>& meta, const std::string& path) {
  const int nt = grid.spec.eps_tau.count;
  const int nh = grid.spec.theta_over_pi.count;
  write_ppm(meta, nt, nh,
            [&](int col, int row) {
              const SweepCell& c = grid.cell(col, nh - 1 - row);
              const double v = q == Quantity::upsilon     ? c.w.upsilon
                               : q == Quantity::lambda_eff ? c.w.lambda_eff
                                                           : c.w.sigma;
              return witness_color(v);
            },
            path);
}

void write_diff_ppm(const DiffMap& diff, Quantity q, const std::vector<std::string>& meta,
                    const std::string& path) {
  const int nt = diff.spec.eps_tau.count;
  const int nh = diff.spec.theta_over_pi.count;
  write_ppm(meta, nt, nh,
            [&](int col, int row) {
              const DiffCell& d = diff.cell(col, nh - 1 - row);
              const DiffClass c = q == Quantity::upsilon     ? d.c_upsilon
                                  : q == Quantity::lambda_eff ? d.c_lambda
                                                              : d.c_sigma;
              return class_color(c);
            },
            path);
}

SweepGrid load_grid_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open for reading: " + path);

  std::string line;
  bool header_seen = false;
  struct Row {
    double eps_tau, theta, upsilon, lambda, sigma;
    bool degenerate, defective;
  };
  std::vector<Row> rows;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != kGridHeader)
        throw IoError("unexpected CSV header in " + path + ": " + line);
      header_seen = true;
      continue;
    }
    const std::vector<std::string> f = split_csv_line(line);
    if (f.size() != 7) throw IoError("malformed CSV row in " + path + ": " + line);
    Row r{};
    try {
      r.eps_tau = std::stod(f[0]);
      r.theta = std::stod(f[1]);
      r.upsilon = std::stod(f[2]);
      r.lambda = std::stod(f[3]);
      r.sigma = std::stod(f[4]);
      r.degenerate = std::stoi(f[5]) != 0;
      r.defective = std::stoi(f[6]) != 0;
    } catch (const std::exception&) {
      throw IoError("malformed CSV row in " + path + ": " + line);
    }
    rows.push_back(r);
  }
  if (!header_seen || rows.empty()) throw IoError("empty grid CSV: " + path);

  // Rows ascend in eps_tau (outer) and theta (inner); the theta block length
  // is the index of the first eps_tau change.
  std::size_t nh = rows.size();
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].eps_tau != rows[0].eps_tau) {
      nh = i;
      break;
    }
  }
  if (rows.size() % nh != 0) throw IoError("ragged grid CSV: " + path);
  const std::size_t nt = rows.size() / nh;
  if (nt < 2 || nh < 2) throw IoError("grid CSV too small: " + path);

  SweepGrid grid;
  grid.spec.eps_tau = {rows.front().eps_tau, rows.back().eps_tau, static_cast<int>(nt)};
  grid.spec.theta_over_pi = {rows.front().theta, rows[nh - 1].theta, static_cast<int>(nh)};
  grid.cells.resize(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    SweepCell c;
    c.w.upsilon = rows[i].upsilon;
    c.w.lambda_eff = rows[i].lambda;
    c.w.sigma = rows[i].sigma;
    c.w.degenerate_top = rows[i].degenerate;
    c.degenerate = rows[i].degenerate;
    c.defective = rows[i].defective;
    grid.cells[i] = c;
  }
  return grid;
}

} // namespace purext
