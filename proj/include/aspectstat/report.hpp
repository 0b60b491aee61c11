#pragma once

#include <aspectstat/config.hpp>
#include <aspectstat/pipeline.hpp>

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace aspectstat {

enum class HeatmapStatistic { R, U };

std::string_view to_string(HeatmapStatistic s);

/// `heatmap_{r|u}_{fp|fn|nfp|nfn}.csv`
std::string heatmap_file_name(HeatmapStatistic stat, ScoreKind kind);

/// Matrix of one statistic for one score kind: rows are aspects, columns
/// tickers, both in first-appearance order within `cells`. Values have three
/// decimals; missing values (and u flagged invalid) are empty. Throws
/// DomainError when `cells` is empty.
void emit_heatmap(std::ostream& out, const std::vector<DependenceCell>& cells, HeatmapStatistic stat, ScoreKind kind);
void emit_heatmap(const std::vector<DependenceCell>& cells, HeatmapStatistic stat, ScoreKind kind,
                  const std::filesystem::path& path);

/// `ticker,aspect,kind,f_stat,p_value` for every causal cell. Tickers in
/// first-appearance order; within a ticker by p ascending, then aspect, then
/// kind.
void emit_granger_table(std::ostream& out, const std::vector<DependenceCell>& cells);
void emit_granger_table(const std::vector<DependenceCell>& cells, const std::filesystem::path& path);

/// All DependenceCell fields. Numbers use the shortest exact representation
/// so parse_cells(write_cells(c)) == c.
void write_cells(std::ostream& out, const std::vector<DependenceCell>& cells);
std::vector<DependenceCell> parse_cells(std::istream& in);
std::vector<DependenceCell> parse_cells(const std::filesystem::path& path);

/// Writes granger.csv and the eight heatmaps into `dir`; returns the paths.
std::vector<std::filesystem::path> emit_reports(const std::vector<DependenceCell>& cells,
                                                const std::filesystem::path& dir);

/// Lowercase hex SHA-256 of a file's bytes.
std::string file_sha256(const std::filesystem::path& path);

/// Config echo, SHA-256 of every input, tool version and seed. Contains no
/// timestamps, so identical runs give identical manifests.
void write_manifest(const std::filesystem::path& path, const PipelineConfig& cfg, const Warnings& warnings);

}  // namespace aspectstat
