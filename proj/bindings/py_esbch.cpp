#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "esbch/bch_code.hpp"
#include "esbch/bm_decoder.hpp"
#include "esbch/channel_sim.hpp"
#include "esbch/fault_analysis.hpp"

namespace py = pybind11;
using namespace esbch;

namespace {

StopCriterion criterion_from(const std::string& name, int kappa) {
    if (name == "full") return StopCriterion::full2t();
    if (name == "es1") return StopCriterion::es1();
    if (name == "es2") return StopCriterion::es2();
    if (name == "es3") return StopCriterion::es3(kappa);
    throw DomainError("criterion must be one of full|es1|es2|es3");
}

} // namespace

PYBIND11_MODULE(_esbch, m) {
    m.doc() = "Binary BCH codec with early-stopped Berlekamp-Massey decoding "
              "and malfunction-probability analysis";

    py::register_exception<NonPrimitivePolynomial>(m, "NonPrimitivePolynomial");
    py::register_exception<DegreeMismatch>(m, "DegreeMismatch");
    py::register_exception<DivisionByZero>(m, "DivisionByZero");
    py::register_exception<LengthMismatch>(m, "LengthMismatch");
    py::register_exception<CapacityExceeded>(m, "CapacityExceeded");
    py::register_exception<DomainError>(m, "DomainError");
    py::register_exception<NegativeProbability>(m, "NegativeProbability");
    py::register_exception<BoundInvalid>(m, "BoundInvalid");
    py::register_exception<InstanceTooLarge>(m, "InstanceTooLarge");

    py::class_<GaloisField, std::shared_ptr<GaloisField>>(m, "GaloisField")
        .def(py::init<int>(), py::arg("m"))
        .def(py::init<int, std::uint32_t>(), py::arg("m"), py::arg("primitive_poly"))
        .def_static("default_primitive_poly", &GaloisField::default_primitive_poly)
        .def_property_readonly("m", &GaloisField::m)
        .def_property_readonly("order", &GaloisField::order)
        .def_property_readonly("primitive_poly", &GaloisField::primitive_poly)
        .def("add", &GaloisField::add)
        .def("mul", &GaloisField::mul)
        .def("inv", &GaloisField::inv)
        .def("pow", &GaloisField::pow)
        .def("alpha_pow", &GaloisField::alpha_pow)
        .def("log", &GaloisField::log);

    py::enum_<DecodeStatus>(m, "DecodeStatus")
        .value("NoErrors", DecodeStatus::NoErrors)
        .value("Corrected", DecodeStatus::Corrected)
        .value("DecodeFailure", DecodeStatus::DecodeFailure);

    py::class_<StopCriterion>(m, "StopCriterion")
        .def_static("full2t", &StopCriterion::full2t)
        .def_static("es1", &StopCriterion::es1)
        .def_static("es2", &StopCriterion::es2)
        .def_static("es3", &StopCriterion::es3, py::arg("kappa"))
        .def_readonly("kappa", &StopCriterion::kappa)
        .def("name", &StopCriterion::name);

    py::class_<DecodeOutcome>(m, "DecodeOutcome")
        .def_readonly("status", &DecodeOutcome::status)
        .def_readonly("corrected", &DecodeOutcome::corrected)
        .def_readonly("error_locations", &DecodeOutcome::error_locations)
        .def_readonly("v_hat", &DecodeOutcome::v_hat)
        .def_readonly("iterations_used", &DecodeOutcome::iterations_used)
        .def_readonly("mul_count", &DecodeOutcome::mul_count)
        .def_readonly("early_stopped", &DecodeOutcome::early_stopped)
        .def_readonly("stop_iteration", &DecodeOutcome::stop_iteration)
        .def_readonly("locator", &DecodeOutcome::locator)
        .def_readonly("discrepancies", &DecodeOutcome::discrepancies);

    py::class_<BchCode>(m, "BchCode")
        .def(py::init<int, int>(), py::arg("m"), py::arg("t"))
        .def_property_readonly("n", &BchCode::n)
        .def_property_readonly("k", &BchCode::k)
        .def_property_readonly("t", &BchCode::t)
        .def_property_readonly("generator_hex",
                               [](const BchCode& c) { return c.generator().to_hex(); })
        .def("encode", &BchCode::encode, py::arg("message"))
        .def("is_codeword", &BchCode::is_codeword, py::arg("word"))
        .def("decode",
             [](const BchCode& code, const BitVec& received, const std::string& criterion,
                int kappa) { return decode(code, received, criterion_from(criterion, kappa)); },
             py::arg("received"), py::arg("criterion") = "full", py::arg("kappa") = 4)
        .def("syndromes",
             [](const BchCode& code, const BitVec& received) {
                 return compute_syndromes(code, received).s;
             },
             py::arg("received"));

    m.def("binary_entropy", &binary_entropy, py::arg("p"));
    m.def("relative_entropy", &relative_entropy, py::arg("lam"), py::arg("eps"));
    m.def("log2_binomial", &log2_binomial, py::arg("n"), py::arg("k"));
    m.def(
        "binomial_tail",
        [](int n, int h0, double eps) { return binomial_tail(n, h0, eps).log2_value(); },
        py::arg("n"), py::arg("h0"), py::arg("eps"),
        "log2 of the binomial tail sum from h0");

    auto analysis = [](int m_, int t, int kappa, double eps) {
        return AnalysisPoint::for_code(m_, t, kappa, eps);
    };
    m.def(
        "p_ud_log2",
        [analysis](int m_, int t, double eps) {
            return p_ud(analysis(m_, t, 1, eps)).log2_value();
        },
        py::arg("m"), py::arg("t"), py::arg("eps"));
    m.def(
        "p_mf_binomial_log2",
        [analysis](int m_, int t, int kappa, double eps) {
            return p_mf_binomial(analysis(m_, t, kappa, eps)).log2_value();
        },
        py::arg("m"), py::arg("t"), py::arg("kappa"), py::arg("eps"));
    m.def(
        "p_mf_exponent_log2",
        [analysis](int m_, int t, int kappa, double eps) {
            return p_mf_exponent(analysis(m_, t, kappa, eps)).log2_value();
        },
        py::arg("m"), py::arg("t"), py::arg("kappa"), py::arg("eps"));

    m.def(
        "complexity_bounds",
        [](std::int64_t t, std::int64_t e, std::int64_t kappa) {
            const auto b = complexity_bounds(t, e, kappa);
            return py::dict(py::arg("c_esbm") = b.c_esbm, py::arg("c_hv") = b.c_hv,
                            py::arg("c_bm") = b.c_bm, py::arg("c_es3") = b.c_es3);
        },
        py::arg("t"), py::arg("e"), py::arg("kappa"));
    m.def("reduction_ratio", &reduction_ratio, py::arg("t"), py::arg("e"), py::arg("kappa"));

    py::class_<SimBucket>(m, "SimBucket")
        .def_readonly("count", &SimBucket::count)
        .def_readonly("agree", &SimBucket::agree)
        .def_readonly("malfunction", &SimBucket::malfunction)
        .def_readonly("detected_failure", &SimBucket::detected_failure)
        .def_readonly("sum_iter_full", &SimBucket::sum_iter_full)
        .def_readonly("sum_iter_es", &SimBucket::sum_iter_es)
        .def_readonly("sum_muls_full", &SimBucket::sum_muls_full)
        .def_readonly("sum_muls_es", &SimBucket::sum_muls_es);

    py::class_<SimSummary>(m, "SimSummary")
        .def_readonly("by_weight", &SimSummary::by_weight)
        .def_readonly("totals", &SimSummary::totals)
        .def("agreement_rate", &SimSummary::agreement_rate)
        .def("mean_iter_full", &SimSummary::mean_iter_full)
        .def("mean_iter_es", &SimSummary::mean_iter_es)
        .def("mean_muls_full", &SimSummary::mean_muls_full)
        .def("mean_muls_es", &SimSummary::mean_muls_es);

    m.def(
        "run_trials",
        [](int m_, int t, const std::string& criterion, int kappa, double eps,
           std::uint64_t trials, std::uint64_t seed, int workers) {
            SimConfig cfg;
            cfg.m = m_;
            cfg.t = t;
            cfg.criterion = criterion_from(criterion, kappa);
            cfg.eps = eps;
            cfg.trials = trials;
            cfg.seed = seed;
            cfg.workers = workers;
            return run_trials(cfg);
        },
        py::arg("m"), py::arg("t"), py::arg("criterion"), py::arg("kappa"), py::arg("eps"),
        py::arg("trials"), py::arg("seed") = 0, py::arg("workers") = 1,
        py::call_guard<py::gil_scoped_release>());

    py::class_<OracleWeightStats>(m, "OracleWeightStats")
        .def_readonly("patterns", &OracleWeightStats::patterns)
        .def_readonly("disagreements", &OracleWeightStats::disagreements)
        .def_readonly("es_malfunctions", &OracleWeightStats::es_malfunctions)
        .def_readonly("es_detected_failures", &OracleWeightStats::es_detected_failures)
        .def_readonly("full_corrected", &OracleWeightStats::full_corrected)
        .def_readonly("full_detected_failures", &OracleWeightStats::full_detected_failures)
        .def_readonly("full_miscorrections", &OracleWeightStats::full_miscorrections);

    py::class_<OracleReport>(m, "OracleReport")
        .def_readonly("by_weight", &OracleReport::by_weight)
        .def_readonly("full_failures_within_t", &OracleReport::full_failures_within_t)
        .def("total_disagreements", &OracleReport::total_disagreements);

    m.def(
        "exhaustive_oracle",
        [](int m_, int t, const std::string& criterion, int kappa, int max_weight) {
            return exhaustive_oracle(m_, t, criterion_from(criterion, kappa), max_weight);
        },
        py::arg("m"), py::arg("t"), py::arg("criterion"), py::arg("kappa"),
        py::arg("max_weight"), py::call_guard<py::gil_scoped_release>());

    m.attr("rng_name") = kRngName;
    m.attr("__version__") = "0.1.0";
}
