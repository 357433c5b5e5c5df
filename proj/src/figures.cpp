#include "coulomb_sharp/figures.hpp"

#include "coulomb_sharp/parallel.hpp"
#include "coulomb_sharp/ratfun_zoo.hpp"
#include "coulomb_sharp/spectrum.hpp"

#include <algorithm>
#include <stdexcept>

namespace coulomb_sharp::figures {

namespace {

constexpr int kDigits = 15;

std::string dec(const BigRational& v) { return to_decimal(v, kDigits); }

void validate(const Grid& grid) {
  if (grid.step <= 0) throw std::invalid_argument("grid step must be positive");
  if (grid.start >= grid.stop) throw std::invalid_argument("grid start must be below stop");
}

// start + k step for k = first..; while <= stop
std::vector<BigRational> points(const Grid& grid, bool include_start) {
  validate(grid);
  std::vector<BigRational> out;
  for (BigRational x = include_start ? grid.start : BigRational(grid.start + grid.step); x <= grid.stop;
       x += grid.step)
    out.push_back(x);
  return out;
}

}  // namespace

std::string FigureDataset::to_csv() const {
  std::string out;
  auto append_row = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  append_row(header);
  for (const auto& row : rows) append_row(row);
  return out;
}

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids = {"lt-d3", "rd-vs-qd", "f-plot"};
  return ids;
}

bool is_figure(const std::string& id) {
  const auto& ids = figure_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

FigureDataset lt_d3(const std::optional<Grid>& grid, int threads) {
  const auto etas = points(grid.value_or(Grid{2, 20, make_rational(1, 100)}), false);
  FigureDataset out;
  out.figure_id = "lt-d3";
  out.description = "d = 3, gamma = 1: Tr - (eta^3/12 - eta^2/8) oscillating between -eta/12 and (2 ceil(eta/2) - 1)/24";
  out.header = {"eta [kappa/sqrt(Lambda)]", "trace_minus_leading [Lambda]", "lower_envelope [Lambda]",
                "upper_envelope [Lambda]"};
  out.rows = ordered_parallel_map(etas.size(), threads, [&](std::size_t i) {
    const BigRational& eta = etas[i];
    const BigRational trace = spectrum::riesz_mean_exact(spectrum::SpectrumParams(3, eta), 1);
    const BigRational middle = trace - (pow(eta, 3) / 12 - eta * eta / 8);
    const BigRational upper = BigRational(2 * ceil_int(eta / 2) - 1) / 24;
    return std::vector<std::string>{dec(eta), dec(middle), dec(-eta / 12), dec(upper)};
  });
  return out;
}

FigureDataset rd_vs_qd(const std::optional<Grid>& grid, int threads) {
  const auto taus = points(grid.value_or(Grid{0, 8, make_rational(1, 100)}), false);
  FigureDataset out;
  out.figure_id = "rd-vs-qd";
  out.description = "Q_d(tau) against R_d(2 tau + d - 1) for d = 5, 6";
  out.header = {"d", "tau [1]", "Q_d(tau) [1]", "R_d(2tau+d-1) [1]"};
  const std::vector<int> dims = {5, 6};
  out.rows = ordered_parallel_map(dims.size() * taus.size(), threads, [&](std::size_t i) {
    const int d = dims[i / taus.size()];
    const BigRational& tau = taus[i % taus.size()];
    const BigRational q = zoo::q_eval(d, tau);
    const BigRational r = zoo::r_eval(d, 2 * tau + d - 1);
    return std::vector<std::string>{std::to_string(d), dec(tau), dec(q), dec(r)};
  });
  return out;
}

FigureDataset f_plot(const std::optional<Grid>& grid, int threads) {
  constexpr int d = 6;
  std::vector<BigRational> poles;
  for (const auto& term : zoo::f_terms(d)) poles.push_back(-term.shift);
  std::sort(poles.begin(), poles.end());
  poles.erase(std::unique(poles.begin(), poles.end()), poles.end());

  const BigRational gap = make_rational(1, 20);
  std::vector<BigRational> ts;
  for (const auto& t : points(grid.value_or(Grid{make_rational(-11, 2), 8, make_rational(1, 100)}), true)) {
    const bool near_pole =
        std::any_of(poles.begin(), poles.end(), [&](const BigRational& p) { return abs(t - p) <= gap; });
    if (!near_pole) ts.push_back(t);
  }

  FigureDataset out;
  out.figure_id = "f-plot";
  out.description = "f_6(t) = Q_6'(t)/Q_6(t) away from its poles; four zeros";
  out.header = {"t [1]", "f_6(t) [1]", "branch"};
  const RationalFunction f = zoo::f_as_ratfun(d);
  out.rows = ordered_parallel_map(ts.size(), threads, [&](std::size_t i) {
    const BigRational& t = ts[i];
    const auto branch = std::count_if(poles.begin(), poles.end(), [&](const BigRational& p) { return p < t; });
    return std::vector<std::string>{dec(t), dec(f(t)), std::to_string(branch)};
  });
  return out;
}

FigureDataset make_figure(const std::string& id, const std::optional<Grid>& grid, int threads) {
  if (id == "lt-d3") return lt_d3(grid, threads);
  if (id == "rd-vs-qd") return rd_vs_qd(grid, threads);
  if (id == "f-plot") return f_plot(grid, threads);
  throw std::invalid_argument("unknown figure: " + id);
}

}  // namespace coulomb_sharp::figures
