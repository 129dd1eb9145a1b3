// Copyright the slitwave authors
// SPDX-License-Identifier: Apache-2.0

#include "slitwave/table_io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "slitwave/errors.hpp"

namespace slitwave {

namespace {

const char* kSweepHeader =
    "Lp_eps,Lm_eps,beta_p,beta_m,R_re,R_im,Tp_re,Tp_im,Tm_re,Tm_im,"
    "energy_residual,source";

double parse_field(const std::string& token, int line_no) {
  char* end = nullptr;
  const double v = std::strtod(token.c_str(), &end);
  if (end == token.c_str() || *end != '\0') {
    throw ParseError("bad CSV numeric field '" + token + "'", line_no);
  }
  return v;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string current;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  fields.push_back(current);
  return fields;
}

void write_row(std::ofstream& out, double lp, double lm, double bp, double bm,
               const ScatteringTriple& t, const char* source) {
  out << format_double(lp) << ',' << format_double(lm) << ','
      << format_double(bp) << ',' << format_double(bm) << ','
      << format_double(t.r.real()) << ',' << format_double(t.r.imag()) << ','
      << format_double(t.t_plus.real()) << ','
      << format_double(t.t_plus.imag()) << ','
      << format_double(t.t_minus.real()) << ','
      << format_double(t.t_minus.imag()) << ','
      << format_double(t.energy_residual) << ',' << source << '\n';
}

}  // namespace

std::string format_double(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

void write_sweep_csv(const SweepTable& table, const std::string& path,
                     const std::string& run_id) {
  std::ofstream out(path);
  if (!out) throw Error("sweep CSV not writable: " + path);
  out << "# run: " << run_id << '\n' << kSweepHeader << '\n';
  for (const SweepCell& cell : table.cells) {
    if (cell.failed) {
      out << "# failed cell (L+=" << format_double(cell.length_plus)
          << ", L-=" << format_double(cell.length_minus)
          << "): " << cell.error << '\n';
      continue;
    }
    write_row(out, cell.length_plus, cell.length_minus, cell.beta_plus,
              cell.beta_minus, cell.asym, "asym");
    if (cell.fem.has_value()) {
      write_row(out, cell.length_plus, cell.length_minus, cell.beta_plus,
                cell.beta_minus, *cell.fem, "fem");
    }
  }
}

std::vector<SweepRecord> read_sweep_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("sweep CSV not readable: " + path);
  std::vector<SweepRecord> records;
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != kSweepHeader) {
        throw ParseError("unexpected sweep CSV header", line_no);
      }
      header_seen = true;
      continue;
    }
    const std::vector<std::string> fields = split_csv(line);
    if (fields.size() != 12) {
      throw ParseError("expected 12 CSV fields", line_no);
    }
    SweepRecord rec;
    rec.lp_eps = parse_field(fields[0], line_no);
    rec.lm_eps = parse_field(fields[1], line_no);
    rec.beta_p = parse_field(fields[2], line_no);
    rec.beta_m = parse_field(fields[3], line_no);
    const std::complex<double> r(parse_field(fields[4], line_no),
                                 parse_field(fields[5], line_no));
    const std::complex<double> tp(parse_field(fields[6], line_no),
                                  parse_field(fields[7], line_no));
    const std::complex<double> tm(parse_field(fields[8], line_no),
                                  parse_field(fields[9], line_no));
    rec.triple.r = r;
    rec.triple.t_plus = tp;
    rec.triple.t_minus = tm;
    rec.triple.energy_residual = parse_field(fields[10], line_no);
    rec.source = fields[11];
    records.push_back(rec);
  }
  return records;
}

void write_curve_csv(const MinReflectionCurve& curve, const std::string& path,
                     const std::string& run_id) {
  std::ofstream out(path);
  if (!out) throw Error("curve CSV not writable: " + path);
  out << "# run: " << run_id << '\n'
      << "Lp_eps,Lm_eps,beta_p,beta_m,absR,absTp,absTm\n";
  for (const CurvePoint& p : curve.points) {
    out << format_double(p.length_plus) << ',' << format_double(p.length_minus)
        << ',' << format_double(p.beta_plus) << ','
        << format_double(p.beta_minus) << ',' << format_double(p.abs_r) << ','
        << format_double(p.abs_t_plus) << ',' << format_double(p.abs_t_minus)
        << '\n';
  }
}

}  // namespace slitwave
