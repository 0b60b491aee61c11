#include <aspectstat/config.hpp>

#include "csv.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <charconv>
#include <functional>
#include <sstream>

namespace aspectstat {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void config_error(const std::string& msg) { throw Error(ErrorCode::ConfigError, msg); }

template <typename T>
T parse_number(const std::string& key, const std::string& text) {
    auto s = detail::trim(text);
    T v{};
    if constexpr (std::is_floating_point_v<T>) {
        auto parsed = detail::parse_double(s);
        if (!parsed) config_error(key + ": expected a number, got '" + text + "'");
        v = static_cast<T>(*parsed);
    } else {
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
            config_error(key + ": expected an integer, got '" + text + "'");
        }
    }
    return v;
}

bool parse_bool(const std::string& key, const std::string& text) {
    auto s = detail::trim(text);
    if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
    if (s == "false" || s == "0" || s == "no" || s == "off") return false;
    config_error(key + ": expected true or false, got '" + text + "'");
}

fs::path resolve(const fs::path& base, const std::string& text) {
    fs::path p{std::string(detail::trim(text))};
    return p.is_relative() && !base.empty() ? base / p : p;
}

std::string show(double v) { return detail::format_double(v); }
std::string show(bool v) { return v ? "true" : "false"; }
std::string show(const std::optional<fs::path>& p) { return p ? p->generic_string() : ""; }

struct KeySpec {
    const char* section;
    const char* name;
    const char* help;
    std::function<void(PipelineConfig&, const std::string& key, const std::string& value, const fs::path& base)> set;
    std::function<std::string(const PipelineConfig&)> get;
};

const std::vector<KeySpec>& key_specs() {
    using C = PipelineConfig;
    using S = std::string;
    static const std::vector<KeySpec> specs = {
        {"input", "tweets", "JSON Lines tweet file (id, created_at, text, lang)",
         [](C& c, const S&, const S& v, const fs::path& b) { c.tweets = resolve(b, v); },
         [](const C& c) { return show(c.tweets); }},
        {"input", "labels", "CSV tweet_id,date,aspect,polarity from an external labeler; replaces the built-in labeler",
         [](C& c, const S&, const S& v, const fs::path& b) { c.labels = resolve(b, v); },
         [](const C& c) { return show(c.labels); }},
        {"input", "aspects", "aspect lexicon, one aspect per line (default: bundled top-20 list)",
         [](C& c, const S&, const S& v, const fs::path& b) { c.aspects = resolve(b, v); },
         [](const C& c) { return show(c.aspects); }},
        {"input", "positive_terms", "positive sentiment terms, one per line (default: bundled list)",
         [](C& c, const S&, const S& v, const fs::path& b) { c.positive_terms = resolve(b, v); },
         [](const C& c) { return show(c.positive_terms); }},
        {"input", "negative_terms", "negative sentiment terms, one per line (default: bundled list)",
         [](C& c, const S&, const S& v, const fs::path& b) { c.negative_terms = resolve(b, v); },
         [](const C& c) { return show(c.negative_terms); }},
        {"input", "calendar", "trading days, one YYYY-MM-DD per line (default: union of price dates)",
         [](C& c, const S&, const S& v, const fs::path& b) { c.calendar = resolve(b, v); },
         [](const C& c) { return show(c.calendar); }},
        {"input", "max_malformed_fraction", "reject the tweet file above this share of malformed lines (0.1)",
         [](C& c, const S& k, const S& v, const fs::path&) { c.max_malformed_fraction = parse_number<double>(k, v); },
         [](const C& c) { return show(c.max_malformed_fraction); }},
        {"keywords", "min_count", "keep tokens found in at least this many tweets (100)",
         [](C& c, const S& k, const S& v, const fs::path&) { c.keyword_min_count = parse_number<std::size_t>(k, v); },
         [](const C& c) { return std::to_string(c.keyword_min_count); }},
        {"label", "window", "tokens inspected on each side of an aspect (5)",
         [](C& c, const S& k, const S& v, const fs::path&) { c.label_window = parse_number<int>(k, v); },
         [](const C& c) { return std::to_string(c.label_window); }},
        {"score", "absent_as_zero", "treat days without any label as 0 for absolute scores (false)",
         [](C& c, const S& k, const S& v, const fs::path&) { c.absent_as_zero = parse_bool(k, v); },
         [](const C& c) { return show(c.absent_as_zero); }},
        {"score", "top_n", "number of most frequent aspects analysed (20)",
         [](C& c, const S& k, const S& v, const fs::path&) { c.top_n = parse_number<std::size_t>(k, v); },
         [](const C& c) { return std::to_string(c.top_n); }},
        {"analyze", "lag", "trading days between sentiment and price (1)",
         [](C& c, const S& k, const S& v, const fs::path&) { c.lag = parse_number<int>(k, v); },
         [](const C& c) { return std::to_string(c.lag); }},
        {"analyze", "pearson_threshold", "|r| above this is significant (0.4)",
         [](C& c, const S& k, const S& v, const fs::path&) { c.pearson_threshold = parse_number<double>(k, v); },
         [](const C& c) { return show(c.pearson_threshold); }},
        {"analyze", "granger_alpha", "Granger F-test significance level (0.05)",
         [](C& c, const S& k, const S& v, const fs::path&) { c.granger_alpha = parse_number<double>(k, v); },
         [](const C& c) { return show(c.granger_alpha); }},
        {"analyze", "granger_lag", "Granger lag order (1)",
         [](C& c, const S& k, const S& v, const fs::path&) { c.granger_lag = parse_number<int>(k, v); },
         [](const C& c) { return std::to_string(c.granger_lag); }},
        {"analyze", "granger_difference", "run the Granger test on first differences (false)",
         [](C& c, const S& k, const S& v, const fs::path&) { c.granger_difference = parse_bool(k, v); },
         [](const C& c) { return show(c.granger_difference); }},
        {"analyze", "granger_reverse", "also test price -> sentiment (false)",
         [](C& c, const S& k, const S& v, const fs::path&) { c.granger_reverse = parse_bool(k, v); },
         [](const C& c) { return show(c.granger_reverse); }},
        {"analyze", "entropy_k", "neighbour order of the entropy estimator, 1-20 (3)",
         [](C& c, const S& k, const S& v, const fs::path&) { c.entropy_k = parse_number<int>(k, v); },
         [](const C& c) { return std::to_string(c.entropy_k); }},
        {"analyze", "entropy_min_denominator", "u is flagged invalid when H(price) is below this, or below 3 standard errors (1e-06)",
         [](C& c, const S& k, const S& v, const fs::path&) {
             c.entropy_min_denominator = parse_number<double>(k, v);
         },
         [](const C& c) { return show(c.entropy_min_denominator); }},
        {"analyze", "threads", "worker threads for the analyze stage, 0 = all cores (0)",
         [](C& c, const S& k, const S& v, const fs::path&) { c.threads = parse_number<unsigned>(k, v); },
         [](const C& c) { return std::to_string(c.threads); }},
        {"output", "dir", "directory receiving all artifacts (out)",
         [](C& c, const S&, const S& v, const fs::path& b) { c.output_dir = resolve(b, v); },
         [](const C& c) { return c.output_dir.generic_string(); }},
        {"run", "seed", "seed for every random draw (fixture generation)",
         [](C& c, const S& k, const S& v, const fs::path&) { c.seed = parse_number<std::uint64_t>(k, v); },
         [](const C& c) { return std::to_string(c.seed); }},
    };
    return specs;
}

void set_key(PipelineConfig& cfg, const std::string& section, const std::string& name, const std::string& value,
             const fs::path& base) {
    const std::string key = section + "." + name;
    if (section == "prices") {
        if (name.empty()) config_error("prices: empty ticker");
        auto path = resolve(base, value);
        for (auto& tf : cfg.prices) {
            if (tf.ticker == name) {
                tf.path = path;
                return;
            }
        }
        cfg.prices.push_back({name, path});
        return;
    }
    for (const auto& spec : key_specs()) {
        if (section == spec.section && name == spec.name) {
            spec.set(cfg, key, value, base);
            return;
        }
    }
    config_error("unknown config key '" + key + "'");
}

}  // namespace

PipelineConfig load_config(const fs::path& path) {
    if (!fs::exists(path)) config_error("config file not found: " + path.string());
    boost::property_tree::ptree tree;
    try {
        boost::property_tree::ini_parser::read_ini(path.string(), tree);
    } catch (const boost::property_tree::ini_parser_error& e) {
        config_error(e.what());
    }
    PipelineConfig cfg;
    const fs::path base = path.parent_path();
    for (const auto& [section, body] : tree) {
        if (body.empty()) config_error("config key '" + section + "' must be inside a [section]");
        for (const auto& [name, value] : body) set_key(cfg, section, name, value.get_value<std::string>(), base);
    }
    return cfg;
}

void apply_override(PipelineConfig& cfg, const std::string& assignment) {
    const auto eq = assignment.find('=');
    const auto dot = assignment.find('.');
    if (eq == std::string::npos || dot == std::string::npos || dot > eq) {
        config_error("override must look like section.key=value, got '" + assignment + "'");
    }
    set_key(cfg, assignment.substr(0, dot), assignment.substr(dot + 1, eq - dot - 1), assignment.substr(eq + 1), {});
}

void validate(const PipelineConfig& cfg, bool need_inputs) {
    if (cfg.lag < 1) config_error("analyze.lag must be >= 1");
    if (!(cfg.pearson_threshold > 0.0 && cfg.pearson_threshold < 1.0)) {
        config_error("analyze.pearson_threshold must be in (0, 1)");
    }
    if (!(cfg.granger_alpha > 0.0 && cfg.granger_alpha < 1.0)) config_error("analyze.granger_alpha must be in (0, 1)");
    if (cfg.granger_lag < 1) config_error("analyze.granger_lag must be >= 1");
    if (cfg.entropy_k < 1 || cfg.entropy_k > 20) config_error("analyze.entropy_k must be in 1..20");
    if (!(cfg.entropy_min_denominator >= 0.0)) config_error("analyze.entropy_min_denominator must be >= 0");
    if (cfg.top_n < 1) config_error("score.top_n must be >= 1");
    if (cfg.label_window < 1) config_error("label.window must be >= 1");
    if (!(cfg.max_malformed_fraction >= 0.0 && cfg.max_malformed_fraction <= 1.0)) {
        config_error("input.max_malformed_fraction must be in [0, 1]");
    }
    if (!need_inputs) return;

    if (!cfg.tweets && !cfg.labels) config_error("input.tweets or input.labels is required");
    if (cfg.prices.empty()) config_error("[prices] needs at least one ticker = path entry");
    auto must_exist = [](const std::string& key, const fs::path& p) {
        if (!fs::is_regular_file(p)) config_error(key + ": file not found: " + p.string());
    };
    for (const auto& [key, p] : {std::pair{"input.tweets", cfg.tweets}, std::pair{"input.labels", cfg.labels},
                                 std::pair{"input.aspects", cfg.aspects},
                                 std::pair{"input.positive_terms", cfg.positive_terms},
                                 std::pair{"input.negative_terms", cfg.negative_terms},
                                 std::pair{"input.calendar", cfg.calendar}}) {
        if (p) must_exist(key, *p);
    }
    for (const auto& tf : cfg.prices) must_exist("prices." + tf.ticker, tf.path);
}

std::string config_help() {
    std::ostringstream os;
    os << "Config file keys (INI; [section] then key = value; override with --set section.key=value):\n";
    const char* current = "";
    for (const auto& spec : key_specs()) {
        if (std::string(current) != spec.section) {
            current = spec.section;
            if (std::string(current) == "keywords") {
                os << "  [prices]\n    <TICKER> = <path>       Yahoo-layout CSV per ticker; order sets report columns\n";
            }
            os << "  [" << current << "]\n";
        }
        std::string name = spec.name;
        name.resize(std::max<std::size_t>(name.size(), 24), ' ');
        os << "    " << name << spec.help << '\n';
    }
    return os.str();
}

std::vector<std::pair<std::string, std::string>> config_echo(const PipelineConfig& cfg) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& spec : key_specs()) {
        out.emplace_back(std::string(spec.section) + "." + spec.name, spec.get(cfg));
    }
    for (const auto& tf : cfg.prices) out.emplace_back("prices." + tf.ticker, tf.path.generic_string());
    return out;
}

}  // namespace aspectstat
