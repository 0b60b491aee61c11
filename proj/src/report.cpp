#include <aspectstat/report.hpp>

#include "csv.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <memory>
#include <ostream>
#include <tuple>

namespace aspectstat {

namespace fs = std::filesystem;

std::string_view to_string(HeatmapStatistic s) { return s == HeatmapStatistic::R ? "r" : "u"; }

std::string heatmap_file_name(HeatmapStatistic stat, ScoreKind kind) {
    return "heatmap_" + std::string(to_string(stat)) + "_" + std::string(to_string(kind)) + ".csv";
}

namespace {

template <typename T, typename Key>
void push_unique(std::vector<T>& v, const Key& key) {
    if (std::find(v.begin(), v.end(), key) == v.end()) v.push_back(key);
}

std::string fmt_general(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

void emit_heatmap(std::ostream& out, const std::vector<DependenceCell>& cells, HeatmapStatistic stat, ScoreKind kind) {
    if (cells.empty()) throw Error(ErrorCode::DomainError, "heatmap needs at least one cell");
    std::vector<std::string> aspects, tickers;
    std::map<std::pair<std::string, std::string>, double> values;
    for (const auto& c : cells) {
        push_unique(aspects, c.aspect);
        push_unique(tickers, c.ticker);
        if (c.kind != kind) continue;
        std::optional<double> v = stat == HeatmapStatistic::R ? c.r : (c.u_valid ? c.u : std::nullopt);
        if (v) values[{c.aspect, c.ticker}] = *v;
    }
    out << "aspect";
    for (const auto& t : tickers) out << ',' << detail::csv_escape(t);
    out << '\n';
    for (const auto& a : aspects) {
        out << detail::csv_escape(a);
        for (const auto& t : tickers) {
            out << ',';
            auto it = values.find({a, t});
            if (it != values.end()) out << detail::format_fixed(it->second, 3);
        }
        out << '\n';
    }
}

void emit_heatmap(const std::vector<DependenceCell>& cells, HeatmapStatistic stat, ScoreKind kind,
                  const fs::path& path) {
    auto out = detail::open_output(path);
    emit_heatmap(out, cells, stat, kind);
    if (!out) throw Error(ErrorCode::IoError, "failed writing " + path.string());
}

void emit_granger_table(std::ostream& out, const std::vector<DependenceCell>& cells) {
    std::vector<std::string> tickers;
    for (const auto& c : cells) push_unique(tickers, c.ticker);
    out << "ticker,aspect,kind,f_stat,p_value\n";
    for (const auto& t : tickers) {
        std::vector<const DependenceCell*> causal;
        for (const auto& c : cells) {
            if (c.ticker == t && c.granger_causal && c.granger_p) causal.push_back(&c);
        }
        std::stable_sort(causal.begin(), causal.end(), [](const DependenceCell* a, const DependenceCell* b) {
            return std::make_tuple(*a->granger_p, std::cref(a->aspect), static_cast<int>(a->kind)) <
                   std::make_tuple(*b->granger_p, std::cref(b->aspect), static_cast<int>(b->kind));
        });
        for (const auto* c : causal) {
            out << detail::csv_escape(t) << ',' << detail::csv_escape(c->aspect) << ',' << to_string(c->kind) << ','
                << (c->granger_f ? fmt_general(*c->granger_f) : "") << ',' << fmt_general(*c->granger_p) << '\n';
        }
    }
}

void emit_granger_table(const std::vector<DependenceCell>& cells, const fs::path& path) {
    auto out = detail::open_output(path);
    emit_granger_table(out, cells);
    if (!out) throw Error(ErrorCode::IoError, "failed writing " + path.string());
}

// ---------------------------------------------------------------------------
// cells.csv

namespace {

constexpr std::array<const char*, 23> kCellColumns{
    "aspect",         "kind",           "ticker",         "n",
    "r",              "r_significant",  "r_reason",       "granger_f",
    "granger_p",      "granger_causal", "granger_perfect_fit", "granger_n",
    "granger_reason", "granger_rev_f",  "granger_rev_p",  "granger_rev_causal",
    "granger_rev_reason", "u",          "u_valid",        "h_y",
    "h_y_given_x",    "mutual_information", "u_reason"};

std::string opt(const std::optional<double>& v) { return v ? detail::format_double(*v) : ""; }
const char* flag(bool b) { return b ? "true" : "false"; }

}  // namespace

void write_cells(std::ostream& out, const std::vector<DependenceCell>& cells) {
    for (std::size_t i = 0; i < kCellColumns.size(); ++i) out << (i ? "," : "") << kCellColumns[i];
    out << '\n';
    for (const auto& c : cells) {
        out << detail::csv_escape(c.aspect) << ',' << to_string(c.kind) << ',' << detail::csv_escape(c.ticker) << ','
            << c.n << ',' << opt(c.r) << ',' << flag(c.r_significant) << ',' << c.r_reason << ','
            << opt(c.granger_f) << ',' << opt(c.granger_p) << ',' << flag(c.granger_causal) << ','
            << flag(c.granger_perfect_fit) << ',' << c.granger_n << ',' << c.granger_reason << ','
            << opt(c.granger_rev_f) << ',' << opt(c.granger_rev_p) << ',' << flag(c.granger_rev_causal) << ','
            << c.granger_rev_reason << ',' << opt(c.u) << ',' << flag(c.u_valid) << ',' << opt(c.h_y) << ','
            << opt(c.h_y_given_x) << ',' << opt(c.mutual_information) << ',' << c.u_reason << '\n';
    }
}

std::vector<DependenceCell> parse_cells(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw Error(ErrorCode::FormatError, "cells: missing header");
    const auto header = detail::split_csv_line(detail::trim(line));
    if (header != std::vector<std::string>(kCellColumns.begin(), kCellColumns.end())) {
        throw Error(ErrorCode::HeaderMismatch, "cells: unexpected header");
    }
    std::vector<DependenceCell> cells;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (detail::trim(line).empty()) continue;
        const auto where = "cells line " + std::to_string(line_no);
        const auto f = detail::split_csv_line(detail::trim(line));
        if (f.size() != kCellColumns.size()) throw Error(ErrorCode::FormatError, where + ": wrong field count");

        auto num = [&](std::size_t i) -> std::optional<double> {
            if (f[i].empty()) return std::nullopt;
            double v = 0.0;
            auto [ptr, ec] = std::from_chars(f[i].data(), f[i].data() + f[i].size(), v);
            if (ec != std::errc{} || ptr != f[i].data() + f[i].size()) {
                throw Error(ErrorCode::FormatError, where + ": bad number '" + f[i] + "'");
            }
            return v;
        };
        auto boolean = [&](std::size_t i) {
            if (f[i] == "true") return true;
            if (f[i] == "false") return false;
            throw Error(ErrorCode::FormatError, where + ": bad flag '" + f[i] + "'");
        };
        auto count = [&](std::size_t i) {
            auto v = num(i);
            if (!v || *v < 0 || *v != std::floor(*v)) throw Error(ErrorCode::FormatError, where + ": bad count");
            return static_cast<std::size_t>(*v);
        };

        DependenceCell c;
        c.aspect = f[0];
        auto kind = parse_score_kind(f[1]);
        if (!kind) throw Error(ErrorCode::FormatError, where + ": bad kind '" + f[1] + "'");
        c.kind = *kind;
        c.ticker = f[2];
        c.n = count(3);
        c.r = num(4);
        c.r_significant = boolean(5);
        c.r_reason = f[6];
        c.granger_f = num(7);
        c.granger_p = num(8);
        c.granger_causal = boolean(9);
        c.granger_perfect_fit = boolean(10);
        c.granger_n = count(11);
        c.granger_reason = f[12];
        c.granger_rev_f = num(13);
        c.granger_rev_p = num(14);
        c.granger_rev_causal = boolean(15);
        c.granger_rev_reason = f[16];
        c.u = num(17);
        c.u_valid = boolean(18);
        c.h_y = num(19);
        c.h_y_given_x = num(20);
        c.mutual_information = num(21);
        c.u_reason = f[22];
        cells.push_back(std::move(c));
    }
    return cells;
}

std::vector<DependenceCell> parse_cells(const fs::path& path) {
    auto in = detail::open_input(path);
    return parse_cells(in);
}

std::vector<fs::path> emit_reports(const std::vector<DependenceCell>& cells, const fs::path& dir) {
    std::vector<fs::path> written;
    const auto granger = dir / "granger.csv";
    emit_granger_table(cells, granger);
    written.push_back(granger);
    if (cells.empty()) return written;
    for (HeatmapStatistic stat : {HeatmapStatistic::R, HeatmapStatistic::U}) {
        for (ScoreKind kind : kAllScoreKinds) {
            const auto path = dir / heatmap_file_name(stat, kind);
            emit_heatmap(cells, stat, kind, path);
            written.push_back(path);
        }
    }
    return written;
}

// ---------------------------------------------------------------------------
// Manifest

std::string file_sha256(const fs::path& path) {
    auto in = detail::open_input(path);
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
        throw Error(ErrorCode::IoError, "sha256 init failed");
    }
    std::array<char, 1 << 16> buf;
    while (in) {
        in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
        if (in.gcount() > 0) EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<std::size_t>(in.gcount()));
    }
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx.get(), md.data(), &len);
    std::string hex;
    static const char* const kDigits = "0123456789abcdef";
    for (unsigned int i = 0; i < len; ++i) {
        hex.push_back(kDigits[md[i] >> 4]);
        hex.push_back(kDigits[md[i] & 0xF]);
    }
    return hex;
}

void write_manifest(const fs::path& path, const PipelineConfig& cfg, const Warnings& warnings) {
    nlohmann::ordered_json j;
    j["tool"] = "aspectstat";
    j["version"] = kVersion;
    j["seed"] = cfg.seed;
    nlohmann::ordered_json config = nlohmann::ordered_json::object();
    for (const auto& [k, v] : config_echo(cfg)) config[k] = v;
    j["config"] = config;

    nlohmann::ordered_json inputs = nlohmann::ordered_json::array();
    auto add = [&](const std::string& key, const std::optional<fs::path>& p) {
        if (!p) return;
        inputs.push_back({{"key", key}, {"path", p->generic_string()}, {"sha256", file_sha256(*p)}});
    };
    add("input.tweets", cfg.tweets);
    add("input.labels", cfg.labels);
    add("input.aspects", cfg.aspects);
    add("input.positive_terms", cfg.positive_terms);
    add("input.negative_terms", cfg.negative_terms);
    add("input.calendar", cfg.calendar);
    for (const auto& tf : cfg.prices) add("prices." + tf.ticker, tf.path);
    j["inputs"] = inputs;
    j["warnings"] = warnings;

    auto out = detail::open_output(path);
    out << j.dump(2) << '\n';
    if (!out) throw Error(ErrorCode::IoError, "failed writing " + path.string());
}

}  // namespace aspectstat
