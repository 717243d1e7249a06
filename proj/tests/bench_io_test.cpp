#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "vrtree/bench.hpp"

using namespace vrtree;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);)
    out.push_back(l);
  return out;
}

std::vector<std::string> fields_of(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

ExperimentConfig small_config() {
  ExperimentConfig cfg;
  cfg.n = 30;
  cfg.p_list = {0.1};
  cfg.dim_list = {2};
  cfg.trials = 5;
  cfg.seed = 1;
  return cfg;
}

} // namespace

TEST(Experiment, AlgorithmsAgreeOnFVector) {
  auto cfg = small_config();
  cfg.n = 100;
  const auto cells = run_experiment(cfg);
  ASSERT_EQ(cells.size(), 2u);
  EXPECT_EQ(cells[0].algorithm, Algorithm::new_vr);
  EXPECT_EQ(cells[1].algorithm, Algorithm::incremental);
  EXPECT_EQ(cells[0].mean_f_vector, cells[1].mean_f_vector);
  EXPECT_EQ(cells[0].failures, 0u);
  EXPECT_GT(cells[0].mean_edge_probes, 0.0);
  EXPECT_GT(cells[1].mean_merge_comparisons, 0.0);
}

TEST(Experiment, EmptyGraphs) {
  auto cfg = small_config();
  cfg.p_list = {0.0};
  for (const auto& c : run_experiment(cfg)) {
    EXPECT_EQ(c.mean_f_vector, (std::vector<double>{30.0}));
    EXPECT_GE(c.mean_time_us, 0.0);
  }
}

TEST(Experiment, SameGraphsAcrossAlgorithms) {
  auto cfg = small_config();
  cfg.algorithms = {Algorithm::new_vr, Algorithm::incremental, Algorithm::inductive};
  std::vector<TrialRecord> recs;
  run_experiment(cfg, [&](const TrialRecord& r) { recs.push_back(r); });
  ASSERT_EQ(recs.size(), 15u);
  for (std::size_t t = 0; t < 5; ++t) {
    EXPECT_EQ(recs[3 * t].nodes_created, recs[3 * t + 1].nodes_created);
    EXPECT_EQ(recs[3 * t].nodes_created, recs[3 * t + 2].nodes_created);
  }
}

TEST(Experiment, CountersReproducible) {
  auto cfg = small_config();
  const auto a = run_experiment(cfg);
  const auto b = run_experiment(cfg);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].mean_edge_probes, b[i].mean_edge_probes);
    EXPECT_EQ(a[i].mean_merge_comparisons, b[i].mean_merge_comparisons);
    EXPECT_EQ(a[i].mean_f_vector, b[i].mean_f_vector);
  }
}

TEST(Experiment, BudgetExhaustionRendersNoData) {
  auto cfg = small_config();
  cfg.p_list = {0.9};
  cfg.dim_list = {6};
  cfg.node_budget = 40;
  const auto cells = run_experiment(cfg);
  for (const auto& c : cells)
    EXPECT_TRUE(c.exhausted());
  EXPECT_NE(emit_table(cells, OutputFormat::markdown).find("No Data Available"), std::string::npos);
  EXPECT_NE(emit_table(cells, OutputFormat::csv).find("No Data Available"), std::string::npos);
}

TEST(Experiment, ConfigValidation) {
  auto cfg = small_config();
  cfg.trials = 0;
  EXPECT_THROW(run_experiment(cfg), validation_error);
  cfg = small_config();
  cfg.p_list = {1.5};
  EXPECT_THROW(run_experiment(cfg), validation_error);
}

TEST(EmitTable, SingleCell) {
  CellResult c;
  c.p = 0.1;
  c.dim = 2;
  c.trials = 1;
  c.mean_time_us = 1234.5;
  const auto md = lines_of(emit_table({c}, OutputFormat::markdown));
  // Title, blank, header, rule, one row.
  ASSERT_EQ(md.size(), 5u);
  EXPECT_EQ(md[4], "| 0.1 | 1,234.50 |");
}

TEST(EmitTable, MarkdownGridShape) {
  std::vector<CellResult> cells;
  for (Algorithm a : {Algorithm::new_vr, Algorithm::incremental})
    for (double p : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6})
      for (std::size_t d = 2; d <= 6; ++d) {
        CellResult c;
        c.p = p;
        c.dim = d;
        c.algorithm = a;
        c.trials = 1;
        c.failures = (p == 0.6 && d == 6) ? 1 : 0;
        cells.push_back(c);
      }
  const auto md = lines_of(emit_table(cells, OutputFormat::markdown));
  std::size_t rows = 0, tables = 0;
  for (const auto& l : md) {
    if (l.rfind("| p \\ dim |", 0) == 0) {
      ++tables;
      EXPECT_EQ(l, "| p \\ dim | 2 | 3 | 4 | 5 | 6 |");
    } else if (l.rfind("| 0.", 0) == 0) {
      ++rows;
      EXPECT_EQ(std::count(l.begin(), l.end(), '|'), 7);
    }
  }
  EXPECT_EQ(tables, 2u);
  EXPECT_EQ(rows, 12u);
}

TEST(EmitTable, CsvParses) {
  const auto cells = run_experiment(small_config());
  const auto lines = lines_of(emit_table(cells, OutputFormat::csv));
  ASSERT_EQ(lines.size(), 3u);
  const auto header = fields_of(lines[0]);
  EXPECT_EQ(header.size(), 10u);
  EXPECT_EQ(header[0], "algorithm");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = fields_of(lines[i]);
    ASSERT_EQ(f.size(), header.size());
    EXPECT_DOUBLE_EQ(std::stod(f[1]), 0.1);
    EXPECT_EQ(std::stoul(f[2]), 2u);
    EXPECT_GE(std::stod(f[5]), 0.0);
  }
}

TEST(EmitTable, Thousands) {
  EXPECT_EQ(with_thousands(0), "0.00");
  EXPECT_EQ(with_thousands(999.999), "1,000.00");
  EXPECT_EQ(with_thousands(1234567.891), "1,234,567.89");
  EXPECT_EQ(with_thousands(-1234.5), "-1,234.50");
}

TEST(StatsCsv, RowShape) {
  TrialRecord r{3, 0.2, 4, Algorithm::incremental, 12.5, 0, 77, 9, false};
  EXPECT_EQ(stats_csv_header(), "trial,algorithm,dim,time_us,edge_probes,merge_comparisons,nodes_created,p\n");
  EXPECT_EQ(stats_csv_row(r), "3,incremental,4,12.5,0,77,9,0.2\n");
}
