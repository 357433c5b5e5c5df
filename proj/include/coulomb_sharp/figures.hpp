#pragma once

// Tabulated data behind the three standard plots: the d = 3 eigenvalue-sum
// correction between its envelopes, R_d against Q_d, and f_6 with its zeros.

#include "coulomb_sharp/exact/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace coulomb_sharp::figures {

struct Grid {
  BigRational start;
  BigRational stop;
  BigRational step;
};

struct FigureDataset {
  std::string figure_id;
  std::string description;
  std::vector<std::string> header;  // column names with unit annotations
  std::vector<std::vector<std::string>> rows;

  /// Header row plus one line per row, comma separated, '\n' line endings.
  std::string to_csv() const;
};

/// lt-d3, rd-vs-qd, f-plot.
const std::vector<std::string>& figure_ids();
bool is_figure(const std::string& id);

/// eta in (2, 20] step 1/100 by default: Tr - (eta^3/12 - eta^2/8) with the
/// envelopes -eta/12 and (2 ceil(eta/2) - 1)/24.
FigureDataset lt_d3(const std::optional<Grid>& grid = std::nullopt, int threads = 1);

/// d in {5, 6}, tau in (0, 8] step 1/100 by default: Q_d(tau) and
/// R_d(2 tau + d - 1).
FigureDataset rd_vs_qd(const std::optional<Grid>& grid = std::nullopt, int threads = 1);

/// f_6(t) on [-11/2, 8] step 1/100 by default, dropping points within 1/20 of a
/// pole. The branch column numbers the pole-free intervals so that sign changes
/// are counted within one branch only.
FigureDataset f_plot(const std::optional<Grid>& grid = std::nullopt, int threads = 1);

/// Dispatch by id; throws std::invalid_argument for an unknown id or an
/// invalid grid (step <= 0 or start >= stop).
FigureDataset make_figure(const std::string& id, const std::optional<Grid>& grid = std::nullopt, int threads = 1);

}  // namespace coulomb_sharp::figures
