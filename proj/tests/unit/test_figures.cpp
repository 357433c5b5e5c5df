#include "coulomb_sharp/figures.hpp"

#include <gtest/gtest.h>

#include "support.hpp"

using namespace coulomb_sharp;
using namespace coulomb_sharp::figures;
using test_support::q;

namespace {

BigRational cell(const FigureDataset& f, std::size_t row, std::size_t col) { return q(f.rows[row][col].c_str()); }

int sign_of(const BigRational& v) { return sign(v); }

}  // namespace

TEST(Figures, Ids) {
  EXPECT_TRUE(is_figure("lt-d3"));
  EXPECT_FALSE(is_figure("lt-d4"));
  EXPECT_THROW(make_figure("nope"), std::invalid_argument);
  EXPECT_THROW(make_figure("lt-d3", Grid{2, 3, 0}), std::invalid_argument);
  EXPECT_THROW(make_figure("lt-d3", Grid{3, 2, 1}), std::invalid_argument);
}

TEST(Figures, LtD3WithinEnvelopesAndTouchingAtParities) {
  const FigureDataset f = lt_d3();
  ASSERT_EQ(f.rows.size(), 1800u);
  EXPECT_EQ(f.rows.front()[0], "2.01");
  EXPECT_EQ(f.rows.back()[0], "20");
  int upper_touches = 0, lower_touches = 0;
  for (std::size_t i = 0; i < f.rows.size(); ++i) {
    const BigRational eta = cell(f, i, 0);
    const BigRational middle = cell(f, i, 1);
    ASSERT_LE(cell(f, i, 2), middle) << f.rows[i][0];
    ASSERT_LE(middle, cell(f, i, 3)) << f.rows[i][0];
    if (eta.get_den() != 1) continue;
    if (eta.get_num() % 2 != 0) {
      EXPECT_EQ(f.rows[i][1], f.rows[i][3]) << f.rows[i][0];
      ++upper_touches;
    } else {
      EXPECT_EQ(f.rows[i][1], f.rows[i][2]) << f.rows[i][0];
      ++lower_touches;
    }
  }
  EXPECT_EQ(upper_touches, 9);   // 3, 5, ..., 19
  EXPECT_EQ(lower_touches, 9);   // 4, 6, ..., 20
  // eta = 5: 15/2 - (125/12 - 25/8) = 5/24 (0.208333...)
  EXPECT_EQ(f.rows[299][0], "5");
  EXPECT_EQ(f.rows[299][1], "0.208333333333333");
}

TEST(Figures, RdBelowQd) {
  const FigureDataset f = rd_vs_qd();
  ASSERT_EQ(f.rows.size(), 1600u);
  for (std::size_t i = 0; i < f.rows.size(); ++i) ASSERT_LE(cell(f, i, 3), cell(f, i, 2)) << i;
  EXPECT_EQ(f.rows.front()[0], "5");
  EXPECT_EQ(f.rows.back()[0], "6");
}

TEST(Figures, FPlotHasFourSignChangesWithinBranches) {
  const FigureDataset f = f_plot();
  int changes = 0;
  for (std::size_t i = 1; i < f.rows.size(); ++i) {
    if (f.rows[i][2] != f.rows[i - 1][2]) continue;
    if (sign_of(cell(f, i, 1)) * sign_of(cell(f, i - 1, 1)) < 0) ++changes;
  }
  EXPECT_EQ(changes, 4);
  for (std::size_t i = 0; i < f.rows.size(); ++i) {
    const BigRational t = cell(f, i, 0);
    for (const char* pole : {"-1", "-2", "-5/2", "-3", "-4", "-5"}) ASSERT_GT(abs(t - q(pole)), q("1/20"));
  }
  EXPECT_EQ(f.rows.front()[0], "-5.5");
  EXPECT_EQ(f.rows.back()[0], "8");
}

TEST(Figures, CsvFormatAndThreadIndependence) {
  for (const auto& id : figure_ids()) {
    const std::string one = make_figure(id, std::nullopt, 1).to_csv();
    const std::string four = make_figure(id, std::nullopt, 4).to_csv();
    EXPECT_EQ(one, four) << id;
    EXPECT_EQ(one.find('\r'), std::string::npos);
    EXPECT_EQ(one.back(), '\n');
    EXPECT_NE(one.substr(0, one.find('\n')).find('['), std::string::npos) << id;
  }
  const FigureDataset small = lt_d3(Grid{2, 3, q("1/2")});
  EXPECT_EQ(small.to_csv(),
            "eta [kappa/sqrt(Lambda)],trace_minus_leading [Lambda],lower_envelope [Lambda],upper_envelope [Lambda]\n"
            "2.5,0.0416666666666667,-0.208333333333333,0.125\n"
            "3,0.125,-0.25,0.125\n");
}
