#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "rolling/integrate.hpp"

namespace rolling {

inline constexpr const char* kFullCsvHeader =
    "t,A11,A12,A13,A21,A22,A23,A31,A32,A33,yM1,yM2,yH1,yH2,Ox,Oy,Oz,E,res_so3,res_contact";
inline constexpr const char* kReducedCsvHeader = "t,y1,y2,Ox,Oy,Oz,E";
inline constexpr const char* kCompareCsvHeader = "t,dev_y,dev_omega,dev_E";

/// printf("%.17g")-style text, '.' as the decimal separator regardless of
/// the global locale.
std::string format_double(double value);

/// Writes one CSV row; fields joined by ',' and terminated by '\n'.
void write_csv_row(std::ostream& out, const std::vector<double>& fields);

void write_full_csv(std::ostream& out, const Trajectory<FullState>& traj,
                    const std::optional<Termination>& termination);
void write_reduced_csv(std::ostream& out, const Trajectory<ReducedState>& traj,
                       const std::optional<Termination>& termination);

/// gnuplot script plotting every data column of `csv_path` against t.
std::string gnuplot_script(const std::string& csv_path, const std::string& header);

}  // namespace rolling
