#include "sdd/sdd.h"

#include <cmath>
#include <cstring>
#include <exception>
#include <string>

#include "../core/baselines.hpp"
#include "../core/dtrace.hpp"
#include "../core/errors.hpp"
#include "../core/expanded.hpp"
#include "../core/metrics.hpp"
#include "../core/panel.hpp"
#include "../core/spectral.hpp"
#include "../core/tuning.hpp"
#include "../core/varsim.hpp"

/* Handle definitions. Each wraps the corresponding core value type. */
struct sdd_panel {
    sdd::TimeSeriesPanel v;
};
struct sdd_spectral {
    sdd::SpectralEngine v;
};
struct sdd_cmatrix {
    sdd::ComplexMatrix v;
};
struct sdd_expanded {
    sdd::ExpandedMatrix v;
};
struct sdd_estimate {
    sdd::DifferenceEstimate v;
};
struct sdd_path {
    sdd::PathResult v;
};
struct sdd_var_model {
    sdd::VarModel v;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) {
    g_last_error = msg;
}

// Run a callable, translating exceptions into status codes.
template <typename Fn>
int guarded(Fn&& fn) {
    try {
        fn();
        return SDD_OK;
    } catch (const sdd::ParseError& e) {
        set_error(e.what());
        return SDD_ERR_PARSE;
    } catch (const sdd::StructureError& e) {
        set_error(e.what());
        return SDD_ERR_STRUCTURE;
    } catch (const sdd::BoundsError& e) {
        set_error(e.what());
        return SDD_ERR_BOUNDS;
    } catch (const sdd::BandwidthError& e) {
        set_error(e.what());
        return SDD_ERR_BANDWIDTH;
    } catch (const sdd::NotPsdError& e) {
        set_error(e.what());
        return SDD_ERR_NOT_PSD;
    } catch (const sdd::SingularityError& e) {
        set_error(e.what());
        return SDD_ERR_SINGULAR;
    } catch (const sdd::DegeneratePathError& e) {
        set_error(e.what());
        return SDD_ERR_DEGENERATE_PATH;
    } catch (const sdd::GenerationError& e) {
        set_error(e.what());
        return SDD_ERR_GENERATION;
    } catch (const sdd::IoError& e) {
        set_error(e.what());
        return SDD_ERR_IO;
    } catch (const sdd::ArgumentError& e) {
        set_error(e.what());
        return SDD_ERR_ARGUMENT;
    } catch (const std::exception& e) {
        set_error(e.what());
        return SDD_ERR_INTERNAL;
    } catch (...) {
        set_error("unknown internal error");
        return SDD_ERR_INTERNAL;
    }
}

int require(bool ok, const char* what) {
    if (ok) return SDD_OK;
    set_error(std::string("null or invalid argument: ") + what);
    return SDD_ERR_ARGUMENT;
}

sdd::SolverOptions to_core(const sdd_solver_options* o) {
    sdd::SolverOptions c;
    if (o != nullptr) {
        c.rho = o->rho;
        c.max_iters = o->max_iters;
        c.primal_tol = o->primal_tol;
        c.dual_tol = o->dual_tol;
        c.symmetrize = o->symmetrize != 0;
    }
    return c;
}

sdd::Matrix from_row_major(const double* data, int64_t rows, int64_t cols) {
    return Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                          Eigen::RowMajor>>(data, rows, cols);
}

void to_row_major(const sdd::Matrix& m, double* out) {
    Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
        out, m.rows(), m.cols()) = m;
}

sdd_metrics to_c(const sdd::FrequencyMetrics& m) {
    sdd_metrics c{};
    c.tp = m.tp;
    c.fp = m.fp;
    c.tn = m.tn;
    c.fn = m.fn;
    c.n_true_edges = m.n_true_edges;
    c.n_est_edges = m.n_est_edges;
    c.accuracy = m.accuracy;
    c.precision = m.precision.value_or(0.0);
    c.recall = m.recall.value_or(0.0);
    c.rrmse = m.rrmse.value_or(0.0);
    c.precision_defined = m.precision.has_value();
    c.recall_defined = m.recall.has_value();
    c.rrmse_defined = m.rrmse.has_value();
    return c;
}

sdd_metric_summary to_c(const sdd::MetricSummary& s) {
    return sdd_metric_summary{s.mean, s.se, s.count, s.skipped};
}

} // namespace

extern "C" {

const char* sdd_version(void) {
    return SDD_VERSION;
}

const char* sdd_status_name(int status) {
    switch (status) {
        case SDD_OK: return "SDD_OK";
        case SDD_ERR_ARGUMENT: return "SDD_ERR_ARGUMENT";
        case SDD_ERR_PARSE: return "SDD_ERR_PARSE";
        case SDD_ERR_STRUCTURE: return "SDD_ERR_STRUCTURE";
        case SDD_ERR_BOUNDS: return "SDD_ERR_BOUNDS";
        case SDD_ERR_BANDWIDTH: return "SDD_ERR_BANDWIDTH";
        case SDD_ERR_NOT_PSD: return "SDD_ERR_NOT_PSD";
        case SDD_ERR_SINGULAR: return "SDD_ERR_SINGULAR";
        case SDD_ERR_DEGENERATE_PATH: return "SDD_ERR_DEGENERATE_PATH";
        case SDD_ERR_GENERATION: return "SDD_ERR_GENERATION";
        case SDD_ERR_IO: return "SDD_ERR_IO";
        case SDD_ERR_INTERNAL: return "SDD_ERR_INTERNAL";
        default: return "SDD_ERR_UNKNOWN";
    }
}

const char* sdd_last_error_message(void) {
    return g_last_error.c_str();
}

/* --- panels -------------------------------------------------------------- */

int sdd_panel_load_csv(const char* path, int rows_are_channels, sdd_panel** out) {
    int rc = require(path && out, "sdd_panel_load_csv");
    if (rc) return rc;
    return guarded([&] { *out = new sdd_panel{sdd::load_panel_csv(path, rows_are_channels != 0)}; });
}

int sdd_panel_create(const double* data, int64_t n, int64_t p, sdd_panel** out) {
    int rc = require(data && out && n >= 2 && p >= 1, "sdd_panel_create");
    if (rc) return rc;
    return guarded([&] {
        sdd::TimeSeriesPanel panel;
        panel.data = from_row_major(data, n, p);
        panel.channel_names.resize(static_cast<std::size_t>(p));
        for (int64_t j = 0; j < p; ++j) {
            panel.channel_names[static_cast<std::size_t>(j)] = "ch" + std::to_string(j + 1);
        }
        *out = new sdd_panel{std::move(panel)};
    });
}

int sdd_panel_save_csv(const sdd_panel* panel, const char* path) {
    int rc = require(panel && path, "sdd_panel_save_csv");
    if (rc) return rc;
    return guarded([&] { sdd::save_panel_csv(panel->v, path); });
}

int sdd_panel_demean(const sdd_panel* panel, sdd_panel** out) {
    int rc = require(panel && out, "sdd_panel_demean");
    if (rc) return rc;
    return guarded([&] { *out = new sdd_panel{sdd::demean(panel->v)}; });
}

int sdd_panel_segment(const sdd_panel* panel, int64_t start, int64_t end, sdd_panel** out) {
    int rc = require(panel && out, "sdd_panel_segment");
    if (rc) return rc;
    return guarded([&] { *out = new sdd_panel{sdd::segment(panel->v, start, end)}; });
}

int64_t sdd_panel_rows(const sdd_panel* panel) {
    return panel ? panel->v.n() : 0;
}

int64_t sdd_panel_cols(const sdd_panel* panel) {
    return panel ? panel->v.p() : 0;
}

int sdd_panel_copy(const sdd_panel* panel, double* buffer) {
    int rc = require(panel && buffer, "sdd_panel_copy");
    if (rc) return rc;
    to_row_major(panel->v.data, buffer);
    return SDD_OK;
}

void sdd_panel_free(sdd_panel* panel) {
    delete panel;
}

/* --- Fourier grid and smoothing ------------------------------------------ */

int sdd_default_bandwidth(int64_t n, int64_t* out) {
    int rc = require(out != nullptr, "sdd_default_bandwidth");
    if (rc) return rc;
    return guarded([&] { *out = sdd::default_bandwidth(n); });
}

int sdd_nearest_fourier_index(double target_hz, int64_t n, double fs, int64_t* out) {
    int rc = require(out != nullptr, "sdd_nearest_fourier_index");
    if (rc) return rc;
    return guarded([&] { *out = sdd::nearest_fourier_index(target_hz, n, fs); });
}

int sdd_nearest_fourier_index_rad(double target_rad, int64_t n, int64_t* out) {
    int rc = require(out != nullptr, "sdd_nearest_fourier_index_rad");
    if (rc) return rc;
    return guarded([&] { *out = sdd::nearest_fourier_index_rad(target_rad, n); });
}

int sdd_fourier_frequency(int64_t n, int64_t j, double* out) {
    int rc = require(out != nullptr, "sdd_fourier_frequency");
    if (rc) return rc;
    return guarded([&] { *out = sdd::fourier_grid(n).frequency(j); });
}

int sdd_evenly_spaced_indices(int64_t n, int64_t count, int64_t* indices, int64_t* out_count) {
    int rc = require(indices && out_count, "sdd_evenly_spaced_indices");
    if (rc) return rc;
    return guarded([&] {
        const auto v = sdd::evenly_spaced_indices(n, count);
        for (std::size_t i = 0; i < v.size(); ++i) indices[i] = v[i];
        *out_count = static_cast<int64_t>(v.size());
    });
}

/* --- spectral estimation -------------------------------------------------- */

int sdd_spectral_create(const sdd_panel* panel, sdd_spectral** out) {
    int rc = require(panel && out, "sdd_spectral_create");
    if (rc) return rc;
    return guarded([&] { *out = new sdd_spectral{sdd::SpectralEngine(panel->v)}; });
}

int sdd_spectral_periodogram(const sdd_spectral* engine, int64_t j, sdd_cmatrix** out) {
    int rc = require(engine && out, "sdd_spectral_periodogram");
    if (rc) return rc;
    return guarded([&] { *out = new sdd_cmatrix{engine->v.periodogram(j)}; });
}

int sdd_spectral_smoothed(const sdd_spectral* engine, int64_t j, int64_t bandwidth,
                          sdd_cmatrix** out) {
    int rc = require(engine && out, "sdd_spectral_smoothed");
    if (rc) return rc;
    return guarded([&] { *out = new sdd_cmatrix{engine->v.smoothed(j, bandwidth)}; });
}

void sdd_spectral_free(sdd_spectral* engine) {
    delete engine;
}

/* --- complex matrices ----------------------------------------------------- */

int sdd_cmatrix_create(const double* re, const double* im, int64_t p, sdd_cmatrix** out) {
    int rc = require(re && im && out && p >= 1, "sdd_cmatrix_create");
    if (rc) return rc;
    return guarded([&] {
        sdd::ComplexMatrix m(p, p);
        m.real() = from_row_major(re, p, p);
        m.imag() = from_row_major(im, p, p);
        *out = new sdd_cmatrix{std::move(m)};
    });
}

int64_t sdd_cmatrix_dim(const sdd_cmatrix* m) {
    return m ? m->v.rows() : 0;
}

int sdd_cmatrix_copy(const sdd_cmatrix* m, double* re, double* im) {
    int rc = require(m != nullptr, "sdd_cmatrix_copy");
    if (rc) return rc;
    if (re) to_row_major(m->v.real(), re);
    if (im) to_row_major(m->v.imag(), im);
    return SDD_OK;
}

int sdd_cmatrix_save_csv(const sdd_cmatrix* m, const char* path) {
    int rc = require(m && path, "sdd_cmatrix_save_csv");
    if (rc) return rc;
    return guarded([&] { sdd::save_complex_csv(m->v, path); });
}

int sdd_cmatrix_load_csv(const char* path, sdd_cmatrix** out) {
    int rc = require(path && out, "sdd_cmatrix_load_csv");
    if (rc) return rc;
    return guarded([&] { *out = new sdd_cmatrix{sdd::load_complex_csv(path)}; });
}

void sdd_cmatrix_free(sdd_cmatrix* m) {
    delete m;
}

/* --- expanded real representation ----------------------------------------- */

int sdd_expand(const sdd_cmatrix* f, sdd_expanded** out) {
    int rc = require(f && out, "sdd_expand");
    if (rc) return rc;
    return guarded([&] { *out = new sdd_expanded{sdd::expand(f->v)}; });
}

int sdd_recover(const sdd_expanded* s, sdd_cmatrix** out) {
    int rc = require(s && out, "sdd_recover");
    if (rc) return rc;
    return guarded([&] { *out = new sdd_cmatrix{sdd::recover(s->v)}; });
}

int sdd_expanded_create(const double* data, int64_t dim, int project, sdd_expanded** out) {
    int rc = require(data && out && dim >= 2, "sdd_expanded_create");
    if (rc) return rc;
    return guarded([&] {
        const sdd::Matrix raw = from_row_major(data, dim, dim);
        *out = new sdd_expanded{project ? sdd::project_block_structure(raw)
                                        : sdd::ExpandedMatrix::from_raw(raw)};
    });
}

int64_t sdd_expanded_dim(const sdd_expanded* s) {
    return s ? s->v.dim() : 0;
}

int sdd_expanded_copy(const sdd_expanded* s, double* buffer) {
    int rc = require(s && buffer, "sdd_expanded_copy");
    if (rc) return rc;
    to_row_major(s->v.matrix(), buffer);
    return SDD_OK;
}

int sdd_expanded_save_csv(const sdd_expanded* s, const char* path) {
    int rc = require(s && path, "sdd_expanded_save_csv");
    if (rc) return rc;
    return guarded([&] { sdd::save_matrix_csv(s->v.matrix(), path); });
}

int sdd_expanded_load_csv(const char* path, sdd_expanded** out) {
    int rc = require(path && out, "sdd_expanded_load_csv");
    if (rc) return rc;
    return guarded([&] {
        *out = new sdd_expanded{sdd::ExpandedMatrix::from_raw(sdd::load_matrix_csv(path))};
    });
}

void sdd_expanded_free(sdd_expanded* s) {
    delete s;
}

/* --- D-trace loss and solver ---------------------------------------------- */

int sdd_dtrace_loss(const double* d, int64_t dim, const sdd_expanded* s1,
                    const sdd_expanded* s2, double* out) {
    int rc = require(d && s1 && s2 && out, "sdd_dtrace_loss");
    if (rc) return rc;
    return guarded([&] { *out = sdd::dtrace_loss(from_row_major(d, dim, dim), s1->v, s2->v); });
}

int sdd_dtrace_gradient(const double* d, int64_t dim, const sdd_expanded* s1,
                        const sdd_expanded* s2, double* out) {
    int rc = require(d && s1 && s2 && out, "sdd_dtrace_gradient");
    if (rc) return rc;
    return guarded([&] {
        to_row_major(sdd::dtrace_gradient(from_row_major(d, dim, dim), s1->v, s2->v), out);
    });
}

int sdd_kkt_residual(const double* d, int64_t dim, const sdd_expanded* s1,
                     const sdd_expanded* s2, double tau, double* out) {
    int rc = require(d && s1 && s2 && out, "sdd_kkt_residual");
    if (rc) return rc;
    return guarded([&] {
        *out = sdd::kkt_residual(from_row_major(d, dim, dim), s1->v, s2->v, tau);
    });
}

sdd_solver_options sdd_solver_options_default(void) {
    const sdd::SolverOptions c;
    sdd_solver_options o;
    o.rho = c.rho;
    o.max_iters = c.max_iters;
    o.primal_tol = c.primal_tol;
    o.dual_tol = c.dual_tol;
    o.symmetrize = c.symmetrize ? 1 : 0;
    return o;
}

int sdd_solve(const sdd_expanded* s1, const sdd_expanded* s2, double tau,
              const sdd_solver_options* options, sdd_estimate** out) {
    int rc = require(s1 && s2 && out, "sdd_solve");
    if (rc) return rc;
    return guarded([&] {
        *out = new sdd_estimate{sdd::solve_sdd(s1->v, s2->v, tau, to_core(options))};
    });
}

int64_t sdd_estimate_dim(const sdd_estimate* e) {
    return e ? e->v.delta.rows() : 0;
}

double sdd_estimate_tau(const sdd_estimate* e) {
    return e ? e->v.tau : 0.0;
}

int64_t sdd_estimate_iterations(const sdd_estimate* e) {
    return e ? e->v.iterations : 0;
}

int sdd_estimate_converged(const sdd_estimate* e) {
    return e && e->v.converged ? 1 : 0;
}

double sdd_estimate_kkt(const sdd_estimate* e) {
    return e && e->v.kkt ? *e->v.kkt : std::nan("");
}

int sdd_estimate_expanded(const sdd_estimate* e, sdd_expanded** out) {
    int rc = require(e && out, "sdd_estimate_expanded");
    if (rc) return rc;
    return guarded([&] {
        *out = new sdd_expanded{sdd::ExpandedMatrix::from_raw(e->v.delta, 1e-6)};
    });
}

int sdd_estimate_complex(const sdd_estimate* e, sdd_cmatrix** out) {
    int rc = require(e && out, "sdd_estimate_complex");
    if (rc) return rc;
    return guarded([&] { *out = new sdd_cmatrix{e->v.delta_complex}; });
}

int sdd_count_edges(const sdd_estimate* e, double threshold, int64_t* out) {
    int rc = require(e && out, "sdd_count_edges");
    if (rc) return rc;
    return guarded([&] { *out = sdd::count_edges(e->v.delta, threshold); });
}

void sdd_estimate_free(sdd_estimate* e) {
    delete e;
}

/* --- tuning ---------------------------------------------------------------- */

int sdd_tau_max(const sdd_expanded* s1, const sdd_expanded* s2, double* out) {
    int rc = require(s1 && s2 && out, "sdd_tau_max");
    if (rc) return rc;
    return guarded([&] { *out = sdd::tau_max(s1->v, s2->v); });
}

int sdd_penalty_path(const sdd_expanded* s1, const sdd_expanded* s2, int64_t k, double* taus) {
    int rc = require(s1 && s2 && taus, "sdd_penalty_path");
    if (rc) return rc;
    return guarded([&] {
        const auto path = sdd::penalty_path(s1->v, s2->v, k);
        for (std::size_t i = 0; i < path.size(); ++i) taus[i] = path[i];
    });
}

int sdd_ebic(const sdd_estimate* e, const sdd_expanded* s1, const sdd_expanded* s2,
             int64_t n1, int64_t n2, double gamma, int64_t p_channels, double* out) {
    int rc = require(e && s1 && s2 && out, "sdd_ebic");
    if (rc) return rc;
    return guarded([&] { *out = sdd::ebic(e->v.delta, s1->v, s2->v, n1, n2, gamma, p_channels); });
}

int sdd_solve_path(const sdd_expanded* s1, const sdd_expanded* s2, int64_t n1, int64_t n2,
                   double gamma, int64_t p_channels, int64_t k,
                   const sdd_solver_options* options, sdd_path** out) {
    int rc = require(s1 && s2 && out, "sdd_solve_path");
    if (rc) return rc;
    return guarded([&] {
        *out = new sdd_path{
            sdd::solve_path(s1->v, s2->v, n1, n2, gamma, p_channels, k, to_core(options))};
    });
}

int64_t sdd_path_length(const sdd_path* path) {
    return path ? static_cast<int64_t>(path->v.records.size()) : 0;
}

int sdd_path_records(const sdd_path* path, sdd_tuning_record* records) {
    int rc = require(path && records, "sdd_path_records");
    if (rc) return rc;
    for (std::size_t i = 0; i < path->v.records.size(); ++i) {
        const auto& r = path->v.records[i];
        records[i] = sdd_tuning_record{r.tau, r.edge_count, r.ebic, r.converged ? 1 : 0};
    }
    return SDD_OK;
}

int64_t sdd_path_selected(const sdd_path* path) {
    return path ? static_cast<int64_t>(path->v.selected) : 0;
}

int sdd_path_estimate(const sdd_path* path, sdd_estimate** out) {
    int rc = require(path && out, "sdd_path_estimate");
    if (rc) return rc;
    return guarded([&] { *out = new sdd_estimate{path->v.estimate}; });
}

void sdd_path_free(sdd_path* path) {
    delete path;
}

/* --- baselines -------------------------------------------------------------- */

int sdd_naive_difference(const sdd_expanded* s1, const sdd_expanded* s2, sdd_estimate** out) {
    int rc = require(s1 && s2 && out, "sdd_naive_difference");
    if (rc) return rc;
    return guarded([&] { *out = new sdd_estimate{sdd::naive_difference(s1->v, s2->v)}; });
}

int sdd_hard_threshold(const sdd_estimate* e, double t, sdd_estimate** out) {
    int rc = require(e && out, "sdd_hard_threshold");
    if (rc) return rc;
    return guarded([&] { *out = new sdd_estimate{sdd::hard_threshold(e->v, t)}; });
}

int sdd_threshold_path(const sdd_estimate* e, int64_t k, double* thresholds) {
    int rc = require(e && thresholds, "sdd_threshold_path");
    if (rc) return rc;
    return guarded([&] {
        const auto path = sdd::threshold_path(e->v, k);
        for (std::size_t i = 0; i < path.size(); ++i) thresholds[i] = path[i];
    });
}

int sdd_hard_threshold_select(const sdd_estimate* e, const sdd_expanded* s1,
                              const sdd_expanded* s2, int64_t n1, int64_t n2, double gamma,
                              int64_t p_channels, int64_t k, sdd_path** out) {
    int rc = require(e && s1 && s2 && out, "sdd_hard_threshold_select");
    if (rc) return rc;
    return guarded([&] {
        *out = new sdd_path{
            sdd::hard_threshold_select(e->v, s1->v, s2->v, n1, n2, gamma, p_channels, k)};
    });
}

/* --- VAR(1) simulation ------------------------------------------------------- */

int sdd_var_model_create(const double* a, int64_t p, sdd_var_model** out) {
    int rc = require(a && out && p >= 1, "sdd_var_model_create");
    if (rc) return rc;
    return guarded([&] { *out = new sdd_var_model{sdd::make_var_model(from_row_major(a, p, p))}; });
}

int64_t sdd_var_model_dim(const sdd_var_model* m) {
    return m ? m->v.p() : 0;
}

int sdd_var_model_copy(const sdd_var_model* m, double* a) {
    int rc = require(m && a, "sdd_var_model_copy");
    if (rc) return rc;
    to_row_major(m->v.a, a);
    return SDD_OK;
}

int sdd_var_model_spectral_radius(const sdd_var_model* m, double* out) {
    int rc = require(m && out, "sdd_var_model_spectral_radius");
    if (rc) return rc;
    return guarded([&] { *out = sdd::spectral_radius(m->v.a); });
}

int sdd_setting_build(int setting, uint64_t seed, sdd_var_model** a1, sdd_var_model** a2,
                      int64_t* retries, int* rescaled) {
    int rc = require(a1 && a2, "sdd_setting_build");
    if (rc) return rc;
    return guarded([&] {
        sdd::VarModel m1, m2;
        sdd::SettingInfo info;
        sdd::build_setting(setting, seed, m1, m2, &info);
        *a1 = new sdd_var_model{std::move(m1)};
        *a2 = new sdd_var_model{std::move(m2)};
        if (retries) *retries = info.retries;
        if (rescaled) *rescaled = info.rescaled ? 1 : 0;
    });
}

int sdd_var_simulate(const sdd_var_model* m, int64_t n, int64_t burn_in, uint64_t seed,
                     sdd_panel** out) {
    int rc = require(m && out, "sdd_var_simulate");
    if (rc) return rc;
    return guarded([&] { *out = new sdd_panel{sdd::simulate_var1(m->v, n, seed, burn_in)}; });
}

int sdd_var_true_spectrum(const sdd_var_model* m, double lambda, sdd_cmatrix** out) {
    int rc = require(m && out, "sdd_var_true_spectrum");
    if (rc) return rc;
    return guarded([&] { *out = new sdd_cmatrix{sdd::true_spectral_density(m->v, lambda)}; });
}

int sdd_var_true_difference(const sdd_var_model* m1, const sdd_var_model* m2, double lambda,
                            sdd_expanded** out) {
    int rc = require(m1 && m2 && out, "sdd_var_true_difference");
    if (rc) return rc;
    return guarded([&] { *out = new sdd_expanded{sdd::true_difference(m1->v, m2->v, lambda)}; });
}

void sdd_var_model_free(sdd_var_model* m) {
    delete m;
}

/* --- metrics ------------------------------------------------------------------ */

int sdd_score(const sdd_expanded* estimate, const sdd_expanded* truth, double edge_tol,
              sdd_metrics* out) {
    int rc = require(estimate && truth && out, "sdd_score");
    if (rc) return rc;
    return guarded([&] { *out = to_c(sdd::score(estimate->v.matrix(), truth->v.matrix(), edge_tol)); });
}

int sdd_metrics_aggregate(const sdd_metrics* reports, int64_t count, sdd_metrics_summary* out) {
    int rc = require(reports && out && count > 0, "sdd_metrics_aggregate");
    if (rc) return rc;
    return guarded([&] {
        std::vector<sdd::FrequencyMetrics> rs(static_cast<std::size_t>(count));
        for (int64_t i = 0; i < count; ++i) {
            const sdd_metrics& c = reports[i];
            sdd::FrequencyMetrics& m = rs[static_cast<std::size_t>(i)];
            m.tp = c.tp;
            m.fp = c.fp;
            m.tn = c.tn;
            m.fn = c.fn;
            m.n_true_edges = c.n_true_edges;
            m.n_est_edges = c.n_est_edges;
            m.accuracy = c.accuracy;
            if (c.precision_defined) m.precision = c.precision;
            if (c.recall_defined) m.recall = c.recall;
            if (c.rrmse_defined) m.rrmse = c.rrmse;
        }
        const sdd::MetricsReport agg = sdd::aggregate(std::move(rs));
        out->precision = to_c(agg.precision);
        out->recall = to_c(agg.recall);
        out->accuracy = to_c(agg.accuracy);
        out->rrmse = to_c(agg.rrmse);
        out->true_edges = to_c(agg.true_edges);
        out->est_edges = to_c(agg.est_edges);
    });
}

} /* extern "C" */
