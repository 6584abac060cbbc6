// pybind11 bindings for the forecast-evaluation core.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "fcast/benchmarks.hpp"
#include "fcast/csv_io.hpp"
#include "fcast/inference.hpp"
#include "fcast/loss.hpp"

namespace py = pybind11;
using namespace fcast;

PYBIND11_MODULE(_fcast, m) {
    m.doc() = "Multi-horizon point forecast evaluation: benchmarks, loss "
              "statistics, and Diebold-Mariano tests with fixed-b critical values";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DataError>(m, "DataError", PyExc_ValueError);
    py::register_exception<ComputeError>(m, "ComputeError", PyExc_ArithmeticError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    py::class_<QuarterlyPeriod>(m, "QuarterlyPeriod")
        .def(py::init<int, int>(), py::arg("year"), py::arg("quarter"))
        .def_readonly("year", &QuarterlyPeriod::year)
        .def_readonly("quarter", &QuarterlyPeriod::quarter)
        .def("plus", &QuarterlyPeriod::plus, py::arg("quarters"))
        .def("__str__", &QuarterlyPeriod::str)
        .def("__repr__", [](const QuarterlyPeriod& p) { return "QuarterlyPeriod(" + p.str() + ")"; })
        .def("__eq__", [](const QuarterlyPeriod& a, const QuarterlyPeriod& b) { return a == b; })
        .def("__lt__", [](const QuarterlyPeriod& a, const QuarterlyPeriod& b) { return a < b; })
        .def("__hash__", [](const QuarterlyPeriod& p) { return p.index(); })
        .def_static("parse", [](const std::string& s) {
            auto p = QuarterlyPeriod::parse(s);
            if (!p) throw DataError("bad period token: " + s);
            return *p;
        });

    py::class_<RealizationSeries>(m, "RealizationSeries")
        .def(py::init<QuarterlyPeriod, std::vector<double>>(), py::arg("start"),
             py::arg("values"))
        .def_property_readonly("start", &RealizationSeries::start)
        .def_property_readonly("values", &RealizationSeries::values)
        .def("at", &RealizationSeries::at, py::arg("period"))
        .def("__len__", &RealizationSeries::size);

    py::class_<ForecastPanel>(m, "ForecastPanel")
        .def(py::init<std::string>(), py::arg("source"))
        .def_property_readonly("source", &ForecastPanel::source)
        .def("insert", &ForecastPanel::insert, py::arg("origin"), py::arg("horizon"),
             py::arg("value"))
        .def("get", &ForecastPanel::get, py::arg("origin"), py::arg("horizon"))
        .def("__len__", &ForecastPanel::size)
        .def("items", [](const ForecastPanel& p) {
            std::vector<std::tuple<QuarterlyPeriod, int, double>> out;
            for (const auto& [key, v] : p.entries()) out.emplace_back(key.origin, key.horizon, v);
            return out;
        });

    py::class_<ErrorPanel>(m, "ErrorPanel")
        .def_property_readonly("source", &ErrorPanel::source)
        .def("at_horizon", &ErrorPanel::at_horizon, py::arg("horizon"))
        .def("horizons", &ErrorPanel::horizons)
        .def("__len__", &ErrorPanel::size)
        .def("items", [](const ErrorPanel& p) {
            std::vector<std::tuple<QuarterlyPeriod, int, double>> out;
            for (const auto& [key, e] : p.entries()) out.emplace_back(key.target, key.horizon, e);
            return out;
        });

    m.def("build_error_panel", &build_error_panel, py::arg("panel"), py::arg("realizations"));
    m.def("split_subsamples", &split_subsamples, py::arg("panel"), py::arg("cut"));

    py::class_<LossSpec>(m, "LossSpec")
        .def_static("quadratic", &LossSpec::quadratic)
        .def_static("absolute", &LossSpec::absolute)
        .def_static("linex", &LossSpec::linex, py::arg("alpha"))
        .def_static("parse", &LossSpec::parse, py::arg("token"))
        .def_property_readonly("alpha", [](const LossSpec& s) { return s.alpha; })
        .def("__repr__", &LossSpec::name);

    m.def("loss", &loss, py::arg("spec"), py::arg("error"));

    py::class_<SummaryStats>(m, "SummaryStats")
        .def_readonly("n", &SummaryStats::n)
        .def_readonly("mean", &SummaryStats::mean)
        .def_readonly("median", &SummaryStats::median)
        .def_readonly("mae", &SummaryStats::mae)
        .def_readonly("mdae", &SummaryStats::mdae)
        .def_readonly("std", &SummaryStats::std)
        .def_readonly("max", &SummaryStats::max)
        .def_readonly("min", &SummaryStats::min)
        .def_readonly("skew", &SummaryStats::skew)
        .def_readonly("ac1", &SummaryStats::ac1)
        .def_readonly("ac4", &SummaryStats::ac4);

    m.def("summarize",
          [](const std::vector<double>& e) { return summarize(e); }, py::arg("errors"));

    py::class_<ARFit>(m, "ARFit")
        .def_readonly("lag_order", &ARFit::lag_order)
        .def_readonly("intercept", &ARFit::intercept)
        .def_readonly("coefficients", &ARFit::coefficients)
        .def_readonly("residual_variance", &ARFit::residual_variance)
        .def_readonly("window_length", &ARFit::window_length)
        .def_readonly("aic", &ARFit::aic)
        .def("iterate_forecasts",
             [](const ARFit& f, const std::vector<double>& w, int steps) {
                 return f.iterate_forecasts(w, steps);
             },
             py::arg("window"), py::arg("steps"));

    m.def("fit_ar",
          [](const std::vector<double>& w, int p, int p_max) { return fit_ar(w, p, p_max); },
          py::arg("window"), py::arg("p"), py::arg("p_max") = 0);
    m.def("select_lag_aic",
          [](const std::vector<double>& w, int p_max) { return select_lag_aic(w, p_max); },
          py::arg("window"), py::arg("p_max"));
    m.def("random_walk_panel",
          [](const RealizationSeries& real, const std::vector<QuarterlyPeriod>& origins,
             const std::vector<int>& horizons, int lag, const std::string& source) {
              return random_walk_panel(real, origins, horizons, lag, source);
          },
          py::arg("realizations"), py::arg("origins"), py::arg("horizons"),
          py::arg("availability_lag") = 1, py::arg("source") = "RW");
    m.def("ar_panel",
          [](const RealizationSeries& real, const std::vector<QuarterlyPeriod>& origins,
             const std::vector<int>& horizons, int window_length, int p_max, int lag,
             const std::string& source) {
              return ar_panel(real, origins, horizons, window_length, p_max, lag, source);
          },
          py::arg("realizations"), py::arg("origins"), py::arg("horizons"),
          py::arg("window_length") = 60, py::arg("p_max") = 4,
          py::arg("availability_lag") = 1, py::arg("source") = "AR");

    py::enum_<CvSource>(m, "CvSource")
        .value("fixed_b", CvSource::fixed_b)
        .value("standard_normal", CvSource::standard_normal);

    py::class_<DMOutcome>(m, "DMOutcome")
        .def_readonly("statistic", &DMOutcome::statistic)
        .def_readonly("n", &DMOutcome::n)
        .def_readonly("bandwidth", &DMOutcome::bandwidth)
        .def_readonly("b_ratio", &DMOutcome::b_ratio)
        .def_readonly("mean_differential", &DMOutcome::mean_differential)
        .def_readonly("lrv", &DMOutcome::lrv)
        .def_readonly("cv10", &DMOutcome::cv10)
        .def_readonly("cv05", &DMOutcome::cv05)
        .def_readonly("reject10", &DMOutcome::reject10)
        .def_readonly("reject05", &DMOutcome::reject05)
        .def_readonly("cv_source", &DMOutcome::cv_source);

    py::class_<MZOutcome>(m, "MZOutcome")
        .def_readonly("intercept", &MZOutcome::intercept)
        .def_readonly("slope", &MZOutcome::slope)
        .def_readonly("joint_wald", &MZOutcome::joint_wald)
        .def_readonly("se_intercept", &MZOutcome::se_intercept)
        .def_readonly("se_slope", &MZOutcome::se_slope)
        .def_readonly("n", &MZOutcome::n)
        .def_readonly("bandwidth", &MZOutcome::bandwidth);

    m.def("bandwidth_rule", &bandwidth_rule, py::arg("n"));
    m.def("bartlett_lrv",
          [](const std::vector<double>& d, int m) { return bartlett_lrv(d, m); },
          py::arg("d"), py::arg("bandwidth"));
    m.def("fixed_b_cv", &fixed_b_cv, py::arg("b"), py::arg("level"));
    m.def("test_dm",
          [](const std::vector<double>& a, const std::vector<double>& b, CvSource cv) {
              return test_dm(a, b, cv);
          },
          py::arg("loss_a"), py::arg("loss_b"), py::arg("cv_source") = CvSource::fixed_b);
    m.def("compare_forecasts",
          [](const ErrorPanel& a, const ErrorPanel& b, const LossSpec& spec, int horizon,
             CvSource cv) { return compare_forecasts(a, b, spec, horizon, cv); },
          py::arg("err_a"), py::arg("err_b"), py::arg("spec"), py::arg("horizon"),
          py::arg("cv_source") = CvSource::fixed_b);
    m.def("mz_regression",
          [](const std::vector<double>& f, const std::vector<double>& y, int bw) {
              return mz_regression(f, y, bw);
          },
          py::arg("forecasts"), py::arg("realizations"), py::arg("bandwidth"));

    py::class_<FluctuationPoint>(m, "FluctuationPoint")
        .def_readonly("window_end", &FluctuationPoint::window_end)
        .def_readonly("outcome", &FluctuationPoint::outcome)
        .def_readonly("note", &FluctuationPoint::note);

    m.def("fluctuation_dm",
          [](const ErrorPanel& a, const ErrorPanel& b, const LossSpec& spec, int horizon,
             int window, CvSource cv) {
              return fluctuation_dm(a, b, spec, horizon, window, cv);
          },
          py::arg("err_a"), py::arg("err_b"), py::arg("spec"), py::arg("horizon"),
          py::arg("window_length"), py::arg("cv_source") = CvSource::fixed_b);

    py::class_<MonthlyPeriod>(m, "MonthlyPeriod")
        .def(py::init<int, int>(), py::arg("year"), py::arg("month"))
        .def_readonly("year", &MonthlyPeriod::year)
        .def_readonly("month", &MonthlyPeriod::month);

    py::class_<SurveyRecord>(m, "SurveyRecord")
        .def(py::init([](MonthlyPeriod pub, int target_year, double value) {
                 return SurveyRecord{pub, target_year, value};
             }),
             py::arg("publication"), py::arg("target_year"), py::arg("value"))
        .def_readonly("publication", &SurveyRecord::publication)
        .def_readonly("target_year", &SurveyRecord::target_year)
        .def_readonly("value", &SurveyRecord::value);

    m.def("align_survey",
          [](const std::vector<SurveyRecord>& records, const std::string& label) {
              return align_survey(records, label);
          },
          py::arg("records"), py::arg("source_label") = "survey");
    m.def("read_survey", [](const std::string& p) { return read_survey(p); }, py::arg("path"));

    // file I/O
    m.def("read_realizations",
          [](const std::string& p) { return read_realizations(p); }, py::arg("path"));
    m.def("read_forecast_panel",
          [](const std::string& p, const std::string& label) {
              return read_forecast_panel(p, label);
          },
          py::arg("path"), py::arg("source_label"));
    m.def("write_forecast_panel",
          [](const ForecastPanel& panel, const std::string& p) {
              write_forecast_panel(panel, p);
          },
          py::arg("panel"), py::arg("path"));
}
