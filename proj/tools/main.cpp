// fcast: forecast evaluation driver.
// Subcommands: bench, summary, compare, mz, fluct, align-survey.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <thread>

#include "fcast/benchmarks.hpp"
#include "fcast/csv_io.hpp"
#include "fcast/inference.hpp"
#include "fcast/loss.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace fcast;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitIngest = 3;
constexpr int kExitCompute = 4;

struct EvalConfig {
    std::string realizations_path;
    std::vector<std::string> forecast_specs;  // LABEL:PATH
    std::string survey_path;
    std::string candidate;  // default: first forecast source
    std::vector<int> horizons{0, 1, 2, 4, 8, 12};
    std::optional<QuarterlyPeriod> cut;
    std::vector<std::string> loss_tokens{"quadratic", "absolute", "linex:0.5", "linex:-0.5"};
    bool bench_rw = true;
    bool bench_ar = true;
    std::string origins_range;  // "2014Q1..2023Q4"; default realization span
    int window_length = 60;
    int p_max = 4;
    int availability_lag = 1;
    std::string cv = "fixed_b";  // fixed_b | normal
    int fluct_window = 20;
    std::string out_dir = ".";
    std::uint64_t seed = 0;
    int threads = 1;
};

std::vector<std::string> split_list(const std::string& s, char sep = ',') {
    std::vector<std::string> out;
    std::string item;
    std::istringstream ss(s);
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

QuarterlyPeriod parse_period_or_throw(const std::string& token) {
    auto p = QuarterlyPeriod::parse(token);
    if (!p) throw ConfigError("bad period token: " + token);
    return *p;
}

void apply_config_key(EvalConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "realizations") cfg.realizations_path = value;
    else if (key == "forecast") cfg.forecast_specs.push_back(value);
    else if (key == "survey") cfg.survey_path = value;
    else if (key == "candidate") cfg.candidate = value;
    else if (key == "horizons") {
        cfg.horizons.clear();
        for (const auto& t : split_list(value)) cfg.horizons.push_back(std::stoi(t));
    } else if (key == "cut") cfg.cut = parse_period_or_throw(value);
    else if (key == "losses") cfg.loss_tokens = split_list(value);
    else if (key == "benchmarks") {
        cfg.bench_rw = cfg.bench_ar = false;
        for (const auto& t : split_list(value)) {
            if (t == "rw") cfg.bench_rw = true;
            else if (t == "ar") cfg.bench_ar = true;
            else if (t == "none") {}
            else throw ConfigError("unknown benchmark: " + t);
        }
    } else if (key == "origins") cfg.origins_range = value;
    else if (key == "window_length") cfg.window_length = std::stoi(value);
    else if (key == "p_max") cfg.p_max = std::stoi(value);
    else if (key == "availability_lag") cfg.availability_lag = std::stoi(value);
    else if (key == "cv") cfg.cv = value;
    else if (key == "fluct_window") cfg.fluct_window = std::stoi(value);
    else if (key == "out") cfg.out_dir = value;
    else if (key == "seed") cfg.seed = std::stoull(value);
    else if (key == "threads") cfg.threads = std::stoi(value);
    else throw ConfigError("unknown config key: " + key);
}

void load_config_file(EvalConfig& cfg, const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path.string());
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        auto e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("bad config line " + std::to_string(lineno) + ": " + line);
        try {
            apply_config_key(cfg, line.substr(0, eq), line.substr(eq + 1));
        } catch (const std::invalid_argument&) {
            throw ConfigError("bad value on config line " + std::to_string(lineno));
        }
    }
}

void validate(const EvalConfig& cfg) {
    if (cfg.horizons.empty()) throw ConfigError("horizons must be nonempty");
    for (int h : cfg.horizons)
        if (h < 0) throw ConfigError("horizons must be >= 0");
    if (cfg.loss_tokens.empty()) throw ConfigError("losses must be nonempty");
    if (cfg.cv != "fixed_b" && cfg.cv != "normal")
        throw ConfigError("cv must be fixed_b or normal");
    if (cfg.threads < 1) throw ConfigError("threads must be >= 1");
}

CvSource cv_source(const EvalConfig& cfg) {
    return cfg.cv == "normal" ? CvSource::standard_normal : CvSource::fixed_b;
}

std::vector<LossSpec> parse_losses(const EvalConfig& cfg) {
    std::vector<LossSpec> out;
    for (const auto& t : cfg.loss_tokens) out.push_back(LossSpec::parse(t));
    return out;
}

std::vector<QuarterlyPeriod> resolve_origins(const EvalConfig& cfg,
                                             const RealizationSeries& real) {
    QuarterlyPeriod first = real.start(), last = real.last_period();
    if (!cfg.origins_range.empty()) {
        auto sep = cfg.origins_range.find("..");
        if (sep == std::string::npos)
            throw ConfigError("origins must look like 2014Q1..2023Q4");
        first = parse_period_or_throw(cfg.origins_range.substr(0, sep));
        last = parse_period_or_throw(cfg.origins_range.substr(sep + 2));
        if (last < first) throw ConfigError("origins range is empty");
    }
    std::vector<QuarterlyPeriod> out;
    for (int i = first.index(); i <= last.index(); ++i)
        out.push_back(QuarterlyPeriod::from_index(i));
    return out;
}

// Loaded data: realizations plus every forecast source in a stable order
// (files as given, then survey, then rw, then ar).
struct Dataset {
    RealizationSeries real;
    std::vector<ForecastPanel> panels;
};

Dataset load_dataset(const EvalConfig& cfg, bool with_benchmarks) {
    if (cfg.realizations_path.empty()) throw ConfigError("realizations path is required");
    Dataset ds{read_realizations(cfg.realizations_path), {}};
    for (const auto& spec : cfg.forecast_specs) {
        auto colon = spec.find(':');
        if (colon == std::string::npos || colon == 0)
            throw ConfigError("forecast spec must be LABEL:PATH, got: " + spec);
        ds.panels.push_back(
            read_forecast_panel(spec.substr(colon + 1), spec.substr(0, colon)));
    }
    if (!cfg.survey_path.empty()) {
        int ignored = 0;
        auto panel = align_survey(read_survey(cfg.survey_path), "survey", &ignored);
        if (ignored > 0)
            std::cerr << "note: " << ignored
                      << " survey record(s) outside the May/August/November map\n";
        ds.panels.push_back(std::move(panel));
    }
    if (with_benchmarks) {
        auto origins = resolve_origins(cfg, ds.real);
        if (cfg.bench_rw)
            ds.panels.push_back(random_walk_panel(ds.real, origins, cfg.horizons,
                                                  cfg.availability_lag));
        if (cfg.bench_ar) {
            std::vector<std::string> warnings;
            ds.panels.push_back(ar_panel(ds.real, origins, cfg.horizons, cfg.window_length,
                                         cfg.p_max, cfg.availability_lag, "AR", &warnings));
            for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
        }
    }
    return ds;
}

struct Sample {
    std::string name;  // full | sub1 | sub2
    std::optional<std::pair<QuarterlyPeriod, QuarterlyPeriod>> window;
};

std::vector<Sample> samples_for(const EvalConfig& cfg) {
    std::vector<Sample> out{{"full", std::nullopt}};
    if (cfg.cut) {
        QuarterlyPeriod lo = QuarterlyPeriod::from_index(-1000000);
        QuarterlyPeriod hi = QuarterlyPeriod::from_index(1000000);
        out.push_back({"sub1", std::make_pair(lo, *cfg.cut)});
        out.push_back({"sub2", std::make_pair(cfg.cut->plus(1), hi)});
    }
    return out;
}

std::vector<double> errors_in(const ErrorPanel& panel, int horizon, const Sample& sample) {
    std::vector<double> out;
    for (const auto& [target, e] : panel.at_horizon(horizon)) {
        if (sample.window && (target < sample.window->first || target > sample.window->second))
            continue;
        out.push_back(e);
    }
    return out;
}

std::ofstream open_out(const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write file: " + path.string());
    return out;
}

std::string fmt(double x) { return format_double(x); }

// ---------------------------------------------------------------- bench

int cmd_bench(const EvalConfig& cfg) {
    if (!cfg.bench_rw && !cfg.bench_ar) throw ConfigError("nothing to do: no benchmarks enabled");
    auto real = read_realizations(cfg.realizations_path.empty()
                                      ? throw ConfigError("realizations path is required")
                                      : cfg.realizations_path);
    auto origins = resolve_origins(cfg, real);
    fs::create_directories(cfg.out_dir);
    if (cfg.bench_rw) {
        auto panel = random_walk_panel(real, origins, cfg.horizons, cfg.availability_lag);
        write_forecast_panel(panel, fs::path(cfg.out_dir) / "rw_forecasts.csv");
        std::cout << "wrote rw_forecasts.csv (" << panel.size() << " rows)\n";
    }
    if (cfg.bench_ar) {
        std::vector<std::string> warnings;
        auto panel = ar_panel(real, origins, cfg.horizons, cfg.window_length, cfg.p_max,
                              cfg.availability_lag, "AR", &warnings);
        for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
        write_forecast_panel(panel, fs::path(cfg.out_dir) / "ar_forecasts.csv");
        std::cout << "wrote ar_forecasts.csv (" << panel.size() << " rows)\n";
    }
    return 0;
}

// ---------------------------------------------------------------- summary

int cmd_summary(const EvalConfig& cfg) {
    Dataset ds = load_dataset(cfg, true);
    if (ds.panels.empty()) throw ConfigError("no forecast sources");
    fs::create_directories(cfg.out_dir);

    auto samples = samples_for(cfg);
    auto csv = open_out(fs::path(cfg.out_dir) / "summary.csv");
    csv << "source,sample,horizon,n,mean,median,mae,mdae,std,max,min,skew,ac1,ac4,note\n";
    json j = json::array();

    std::cout << "source   sample  h    n     mean   median      mae     mdae      std\n";
    for (const auto& panel : ds.panels) {
        ErrorPanel errors = build_error_panel(panel, ds.real);
        for (const auto& sample : samples) {
            for (int h : cfg.horizons) {
                auto e = errors_in(errors, h, sample);
                std::string base = panel.source() + "," + sample.name + "," +
                                   std::to_string(h) + "," + std::to_string(e.size());
                json row{{"source", panel.source()},
                         {"sample", sample.name},
                         {"horizon", h},
                         {"n", e.size()}};
                try {
                    SummaryStats s = summarize(e);
                    csv << base << "," << fmt(s.mean) << "," << fmt(s.median) << ","
                        << fmt(s.mae) << "," << fmt(s.mdae) << "," << fmt(s.std) << ","
                        << fmt(s.max) << "," << fmt(s.min) << "," << fmt(s.skew) << ","
                        << fmt(s.ac1) << "," << fmt(s.ac4) << ",\n";
                    for (auto [k, v] : std::initializer_list<std::pair<const char*, double>>{
                             {"mean", s.mean}, {"median", s.median}, {"mae", s.mae},
                             {"mdae", s.mdae}, {"std", s.std}, {"max", s.max},
                             {"min", s.min}, {"skew", s.skew}, {"ac1", s.ac1},
                             {"ac4", s.ac4}})
                        row[k] = v;
                    char line[160];
                    std::snprintf(line, sizeof line,
                                  "%-8s %-6s %2d %4zu %8.3f %8.3f %8.3f %8.3f %8.3f\n",
                                  panel.source().c_str(), sample.name.c_str(), h, e.size(),
                                  s.mean, s.median, s.mae, s.mdae, s.std);
                    std::cout << line;
                } catch (const ComputeError& err) {
                    csv << base << ",,,,,,,,,," << err.what() << "\n";
                    row["note"] = err.what();
                }
                j.push_back(std::move(row));
            }
        }
    }
    open_out(fs::path(cfg.out_dir) / "summary.json") << j.dump(2) << "\n";
    return 0;
}

// ---------------------------------------------------------------- compare

struct CompareCell {
    std::string pair_label;
    std::string sample;
    std::string loss;
    int horizon = 0;
    std::optional<DMOutcome> outcome;
    std::string note;
};

int cmd_compare(const EvalConfig& cfg) {
    Dataset ds = load_dataset(cfg, true);
    if (ds.panels.size() < 2)
        throw ConfigError("compare needs at least two forecast sources");
    fs::create_directories(cfg.out_dir);

    std::string candidate = cfg.candidate.empty() ? ds.panels.front().source() : cfg.candidate;
    const ForecastPanel* cand = nullptr;
    for (const auto& p : ds.panels)
        if (p.source() == candidate) cand = &p;
    if (!cand) throw ConfigError("candidate source not found: " + candidate);

    ErrorPanel cand_err = build_error_panel(*cand, ds.real);
    std::vector<std::pair<std::string, ErrorPanel>> others;
    for (const auto& p : ds.panels)
        if (p.source() != candidate)
            others.emplace_back(p.source(), build_error_panel(p, ds.real));

    auto samples = samples_for(cfg);
    auto losses = parse_losses(cfg);
    CvSource cvs = cv_source(cfg);

    // flat, deterministic grid; cells computed independently
    std::vector<CompareCell> cells;
    for (const auto& [label, other] : others)
        for (const auto& sample : samples)
            for (const auto& spec : losses)
                for (int h : cfg.horizons)
                    cells.push_back({candidate + " vs " + label, sample.name, spec.name(), h,
                                     std::nullopt, ""});
    auto compute = [&](std::size_t idx) {
        CompareCell& cell = cells[idx];
        std::size_t per_pair = samples.size() * losses.size() * cfg.horizons.size();
        std::size_t pair_idx = idx / per_pair;
        std::size_t rem = idx % per_pair;
        const Sample& sample = samples[rem / (losses.size() * cfg.horizons.size())];
        const LossSpec& spec = losses[(rem / cfg.horizons.size()) % losses.size()];
        int h = cfg.horizons[rem % cfg.horizons.size()];
        try {
            cell.outcome = compare_forecasts(cand_err, others[pair_idx].second, spec, h, cvs,
                                             sample.window);
        } catch (const ComputeError& err) {
            cell.note = err.what();
        }
    };
    if (cfg.threads <= 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) compute(i);
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (cells.size() + cfg.threads - 1) / cfg.threads;
        for (int t = 0; t < cfg.threads; ++t)
            pool.emplace_back([&, t] {
                std::size_t begin = t * chunk;
                std::size_t end = std::min(cells.size(), begin + chunk);
                for (std::size_t i = begin; i < end; ++i) compute(i);
            });
        for (auto& th : pool) th.join();
    }

    auto csv = open_out(fs::path(cfg.out_dir) / "dm_tests.csv");
    csv << "pair,sample,loss,horizon,n,bandwidth,b,statistic,cv10,cv05,reject10,reject05,"
           "note\n";
    auto plot = open_out(fs::path(cfg.out_dir) / "dm_plot.csv");
    plot << "pair,sample,loss,horizon,statistic,cv10,cv05\n";
    json j = json::array();
    for (const auto& cell : cells) {
        std::string base = cell.pair_label + "," + cell.sample + "," + cell.loss + "," +
                           std::to_string(cell.horizon);
        json row{{"pair", cell.pair_label},
                 {"sample", cell.sample},
                 {"loss", cell.loss},
                 {"horizon", cell.horizon}};
        if (cell.outcome) {
            const DMOutcome& o = *cell.outcome;
            csv << base << "," << o.n << "," << o.bandwidth << "," << fmt(o.b_ratio) << ","
                << fmt(o.statistic) << "," << fmt(o.cv10) << "," << fmt(o.cv05) << ","
                << (o.reject10 ? 1 : 0) << "," << (o.reject05 ? 1 : 0) << ",\n";
            plot << base << "," << fmt(o.statistic) << "," << fmt(o.cv10) << ","
                 << fmt(o.cv05) << "\n";
            row["n"] = o.n;
            row["bandwidth"] = o.bandwidth;
            row["b"] = o.b_ratio;
            row["statistic"] = o.statistic;
            row["cv10"] = o.cv10;
            row["cv05"] = o.cv05;
            row["reject10"] = o.reject10;
            row["reject05"] = o.reject05;
        } else {
            csv << base << ",,,,,,,,," << cell.note << "\n";
            row["note"] = cell.note;
        }
        j.push_back(std::move(row));
    }
    open_out(fs::path(cfg.out_dir) / "dm_tests.json") << j.dump(2) << "\n";
    std::cout << "wrote dm_tests.csv / dm_tests.json / dm_plot.csv (" << cells.size()
              << " cells)\n";
    return 0;
}

// ---------------------------------------------------------------- mz

int cmd_mz(const EvalConfig& cfg) {
    Dataset ds = load_dataset(cfg, true);
    if (ds.panels.empty()) throw ConfigError("no forecast sources");
    fs::create_directories(cfg.out_dir);

    auto samples = samples_for(cfg);
    auto csv = open_out(fs::path(cfg.out_dir) / "mz.csv");
    csv << "source,sample,horizon,n,bandwidth,intercept,slope,se_intercept,se_slope,wald,"
           "note\n";
    json j = json::array();
    for (const auto& panel : ds.panels) {
        for (const auto& sample : samples) {
            for (int h : cfg.horizons) {
                // paired (forecast, realization) at this horizon
                std::vector<double> f, y;
                for (const auto& [key, value] : panel.entries()) {
                    if (key.horizon != h) continue;
                    QuarterlyPeriod target = key.origin.plus(h);
                    if (sample.window &&
                        (target < sample.window->first || target > sample.window->second))
                        continue;
                    if (auto realized = ds.real.get(target)) {
                        f.push_back(value);
                        y.push_back(*realized);
                    }
                }
                std::string base = panel.source() + "," + sample.name + "," +
                                   std::to_string(h) + "," + std::to_string(f.size());
                json row{{"source", panel.source()},
                         {"sample", sample.name},
                         {"horizon", h},
                         {"n", f.size()}};
                try {
                    if (f.size() < 8) throw ComputeError("need at least 8 paired observations");
                    MZOutcome o = mz_regression(f, y, bandwidth_rule(static_cast<int>(f.size())));
                    csv << base << "," << o.bandwidth << "," << fmt(o.intercept) << ","
                        << fmt(o.slope) << "," << fmt(o.se_intercept) << "," << fmt(o.se_slope)
                        << "," << fmt(o.joint_wald) << ",\n";
                    row["bandwidth"] = o.bandwidth;
                    row["intercept"] = o.intercept;
                    row["slope"] = o.slope;
                    row["se_intercept"] = o.se_intercept;
                    row["se_slope"] = o.se_slope;
                    row["wald"] = o.joint_wald;
                } catch (const ComputeError& err) {
                    csv << base << ",,,,,,," << err.what() << "\n";
                    row["note"] = err.what();
                }
                j.push_back(std::move(row));
            }
        }
    }
    open_out(fs::path(cfg.out_dir) / "mz.json") << j.dump(2) << "\n";
    std::cout << "wrote mz.csv / mz.json\n";
    return 0;
}

// ---------------------------------------------------------------- fluct

int cmd_fluct(const EvalConfig& cfg) {
    Dataset ds = load_dataset(cfg, true);
    if (ds.panels.size() < 2) throw ConfigError("fluct needs at least two forecast sources");
    fs::create_directories(cfg.out_dir);

    std::string candidate = cfg.candidate.empty() ? ds.panels.front().source() : cfg.candidate;
    const ForecastPanel* cand = nullptr;
    for (const auto& p : ds.panels)
        if (p.source() == candidate) cand = &p;
    if (!cand) throw ConfigError("candidate source not found: " + candidate);
    ErrorPanel cand_err = build_error_panel(*cand, ds.real);

    auto losses = parse_losses(cfg);
    CvSource cvs = cv_source(cfg);

    auto csv = open_out(fs::path(cfg.out_dir) / "fluct.csv");
    csv << "pair,loss,horizon,window_end,statistic,cv10,cv05,note\n";
    for (const auto& p : ds.panels) {
        if (p.source() == candidate) continue;
        ErrorPanel other = build_error_panel(p, ds.real);
        for (const auto& spec : losses) {
            for (int h : cfg.horizons) {
                std::string base = candidate + " vs " + p.source() + "," + spec.name() + "," +
                                   std::to_string(h);
                auto path = fluctuation_dm(cand_err, other, spec, h, cfg.fluct_window, cvs);
                for (const auto& pt : path) {
                    if (pt.outcome)
                        csv << base << "," << pt.window_end.str() << ","
                            << fmt(pt.outcome->statistic) << "," << fmt(pt.outcome->cv10)
                            << "," << fmt(pt.outcome->cv05) << ",\n";
                    else
                        csv << base << "," << pt.window_end.str() << ",,,," << pt.note << "\n";
                }
            }
        }
    }
    std::cout << "wrote fluct.csv\n";
    return 0;
}

// ---------------------------------------------------------------- align-survey

int cmd_align_survey(const EvalConfig& cfg) {
    if (cfg.survey_path.empty()) throw ConfigError("survey path is required");
    int ignored = 0;
    auto panel = align_survey(read_survey(cfg.survey_path), "survey", &ignored);
    fs::create_directories(cfg.out_dir);
    write_forecast_panel(panel, fs::path(cfg.out_dir) / "survey_forecasts.csv");
    std::cout << "wrote survey_forecasts.csv (" << panel.size() << " rows, " << ignored
              << " records outside the alignment map)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multi-horizon point forecast evaluation"};
    app.require_subcommand(1);

    EvalConfig cfg;
    std::string config_path, cut_token;
    std::vector<std::string> horizons_tokens, loss_list, bench_list;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "flat key=value config file");
        cmd->add_option("--out", cfg.out_dir, "output directory");
        cmd->add_option("--seed", cfg.seed, "master seed");
        cmd->add_option("--threads", cfg.threads, "worker threads for the test grid");
        cmd->add_option("--realizations", cfg.realizations_path, "realizations CSV");
        cmd->add_option("--forecast", cfg.forecast_specs, "forecast panel as LABEL:PATH");
        cmd->add_option("--survey", cfg.survey_path, "fixed-event survey CSV");
        cmd->add_option("--candidate", cfg.candidate, "candidate source label");
        cmd->add_option("--horizons", horizons_tokens, "horizons, e.g. 0,1,2,4,8,12");
        cmd->add_option("--cut", cut_token, "sub-sample cut period, e.g. 2018Q4");
        cmd->add_option("--losses", loss_list, "loss specs, e.g. quadratic,linex:0.5");
        cmd->add_option("--benchmarks", bench_list, "rw,ar or none");
        cmd->add_option("--origins", cfg.origins_range, "origin range, e.g. 2014Q1..2023Q4");
        cmd->add_option("--window-length", cfg.window_length, "AR rolling window");
        cmd->add_option("--p-max", cfg.p_max, "AR maximum lag order");
        cmd->add_option("--lag", cfg.availability_lag, "availability lag in quarters");
        cmd->add_option("--cv", cfg.cv, "critical values: fixed_b or normal");
        cmd->add_option("--fluct-window", cfg.fluct_window, "fluctuation window length");
    };

    auto* bench = app.add_subcommand("bench", "generate benchmark forecast panels");
    auto* summary = app.add_subcommand("summary", "forecast-error summary statistics");
    auto* compare = app.add_subcommand("compare", "equal-predictive-accuracy test matrix");
    auto* mz = app.add_subcommand("mz", "rationality regressions");
    auto* fluct = app.add_subcommand("fluct", "rolling fluctuation analysis");
    auto* align = app.add_subcommand("align-survey", "fixed-event to fixed-horizon alignment");
    for (auto* cmd : {bench, summary, compare, mz, fluct, align}) add_common(cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitConfig;
    }

    try {
        // config file first, then CLI flags win
        if (!config_path.empty()) {
            EvalConfig from_file;
            load_config_file(from_file, config_path);
            EvalConfig merged = from_file;
            // re-apply CLI-provided values over the file
            if (!cfg.realizations_path.empty()) merged.realizations_path = cfg.realizations_path;
            if (!cfg.forecast_specs.empty()) merged.forecast_specs = cfg.forecast_specs;
            if (!cfg.survey_path.empty()) merged.survey_path = cfg.survey_path;
            if (!cfg.candidate.empty()) merged.candidate = cfg.candidate;
            if (!cfg.origins_range.empty()) merged.origins_range = cfg.origins_range;
            if (cfg.out_dir != ".") merged.out_dir = cfg.out_dir;
            if (cfg.seed != 0) merged.seed = cfg.seed;
            if (cfg.threads != 1) merged.threads = cfg.threads;
            if (cfg.window_length != 60) merged.window_length = cfg.window_length;
            if (cfg.p_max != 4) merged.p_max = cfg.p_max;
            if (cfg.availability_lag != 1) merged.availability_lag = cfg.availability_lag;
            if (cfg.cv != "fixed_b") merged.cv = cfg.cv;
            if (cfg.fluct_window != 20) merged.fluct_window = cfg.fluct_window;
            cfg = merged;
        }
        if (!horizons_tokens.empty()) {
            cfg.horizons.clear();
            for (const auto& group : horizons_tokens)
                for (const auto& t : split_list(group)) cfg.horizons.push_back(std::stoi(t));
        }
        if (!cut_token.empty()) cfg.cut = parse_period_or_throw(cut_token);
        if (!loss_list.empty()) {
            cfg.loss_tokens.clear();
            for (const auto& group : loss_list)
                for (const auto& t : split_list(group)) cfg.loss_tokens.push_back(t);
        }
        if (!bench_list.empty()) {
            std::string joined;
            for (const auto& group : bench_list) joined += (joined.empty() ? "" : ",") + group;
            apply_config_key(cfg, "benchmarks", joined);
        }
        validate(cfg);

        if (*bench) return cmd_bench(cfg);
        if (*summary) return cmd_summary(cfg);
        if (*compare) return cmd_compare(cfg);
        if (*mz) return cmd_mz(cfg);
        if (*fluct) return cmd_fluct(cfg);
        if (*align) return cmd_align_survey(cfg);
        throw ConfigError("no subcommand");
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitIngest;
    } catch (const DataError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitIngest;
    } catch (const ComputeError& e) {
        std::cerr << "computation error: " << e.what() << "\n";
        return kExitCompute;
    }
}
