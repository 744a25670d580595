#include "rolling/output.hpp"

#include <charconv>
#include <sstream>

namespace rolling {

namespace {

void write_termination(std::ostream& out, const std::optional<Termination>& termination) {
  if (termination) {
    out << "# terminated: " << to_string(termination->kind)
        << " t=" << format_double(termination->time) << '\n';
  }
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void write_csv_row(std::ostream& out, const std::vector<double>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << format_double(fields[i]);
  }
  out << '\n';
}

void write_full_csv(std::ostream& out, const Trajectory<FullState>& traj,
                    const std::optional<Termination>& termination) {
  out << kFullCsvHeader << '\n';
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const FullState& s = traj.states[k];
    std::vector<double> row{traj.times[k]};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) row.push_back(s.A(i, j));
    }
    row.insert(row.end(), {s.yM(0), s.yM(1), s.yH(0), s.yH(1), s.Omega(0), s.Omega(1),
                           s.Omega(2), traj.energy[k], traj.so3_residual[k],
                           traj.contact_residual[k]});
    write_csv_row(out, row);
  }
  write_termination(out, termination);
}

void write_reduced_csv(std::ostream& out, const Trajectory<ReducedState>& traj,
                       const std::optional<Termination>& termination) {
  out << kReducedCsvHeader << '\n';
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const ReducedState& s = traj.states[k];
    write_csv_row(out, {traj.times[k], s.y(0), s.y(1), s.Omega(0), s.Omega(1), s.Omega(2),
                        traj.energy[k]});
  }
  write_termination(out, termination);
}

std::string gnuplot_script(const std::string& csv_path, const std::string& header) {
  std::vector<std::string> columns;
  std::stringstream ss(header);
  for (std::string col; std::getline(ss, col, ',');) columns.push_back(col);

  std::ostringstream out;
  out << "set datafile separator ','\n"
      << "set datafile commentschars '#'\n"
      << "set key autotitle columnhead\n"
      << "set xlabel 't [s]'\n"
      << "set grid\n"
      << "plot ";
  for (std::size_t c = 1; c < columns.size(); ++c) {
    if (c > 1) out << ", \\\n     ";
    out << "'" << csv_path << "' using 1:" << (c + 1) << " with lines title '" << columns[c]
        << "'";
  }
  out << "\npause mouse close\n";
  return out.str();
}

}  // namespace rolling
