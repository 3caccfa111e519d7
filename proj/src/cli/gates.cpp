// SPDX-License-Identifier: Apache-2.0
//
// astars-noma: link-level analysis of active STAR-surface assisted NOMA downlinks
// Copyright (C) 2026 The astars-noma authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "astars/validation.hpp"
#include "astars/asymptotic.hpp"
#include "astars/error.hpp"
#include "cli/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

namespace astars::cli
{
    using analytic::MetricKind;
    using analytic::SicMode;
    using montecarlo::Scheme;

    bool GateBatch::passed() const
    {
        return std::all_of(gates.begin(), gates.end(), [](const GateResult &g) { return g.pass; });
    }

    void GateBatch::append(GateBatch other)
    {
        gates.insert(gates.end(), std::make_move_iterator(other.gates.begin()), std::make_move_iterator(other.gates.end()));
        rows.insert(rows.end(), std::make_move_iterator(other.rows.begin()), std::make_move_iterator(other.rows.end()));
    }

    namespace gates
    {
        namespace
        {
            struct Check
            {
                MetricKind kind;
                SicMode mode;
                const char *mode_label;
            };

            std::string describe(double analytic, const montecarlo::Estimate &e)
            {
                return "analytic=" + format_double(analytic) + " mc=" + format_double(e.mean) + " ci95=" + format_double(e.ci95_halfwidth);
            }

            GateBatch agreement(const model::NetworkConfig &cfg, std::span<const double> q_tot_dbm, const RunOptions &options,
                                const std::vector<Check> &checks, bool relative, const char *label)
            {
                std::vector<double> ps;
                for (double q : q_tot_dbm)
                    ps.push_back(montecarlo::budget_to_ps(model::dbm_to_watts(q), cfg, true));
                const auto mc = montecarlo::simulate(cfg, Scheme::astars_noma, ps, {options.trials, options.seed, options.workers});

                std::vector<double> analytic(ps.size() * checks.size());
                detail::parallel_for(analytic.size(), options.workers, [&](std::size_t k)
                                     {
                    const auto &c = checks[k % checks.size()];
                    analytic[k] = analytic::evaluate(cfg, c.kind, c.mode, ps[k / checks.size()]).value; });

                GateBatch out;
                for (std::size_t i = 0; i < ps.size(); ++i)
                    for (std::size_t j = 0; j < checks.size(); ++j)
                    {
                        const auto &c = checks[j];
                        const double a = analytic[i * checks.size() + j];
                        const auto &e = mc[i].get(c.kind, c.mode);
                        const double diff = std::abs(a - e.mean);
                        const double tol = std::max(relative ? 0.03 * std::abs(e.mean) : 0.02, 3.0 * e.ci95_halfwidth);
                        GateResult g;
                        g.name = std::string(label) + " " + std::string(analytic::to_string(c.kind)) + " " + c.mode_label + " @ Q_tot=" +
                                 format_double(q_tot_dbm[i]) + " dBm";
                        g.observed = diff;
                        g.tolerance = tol;
                        g.pass = diff <= tol;
                        g.detail = describe(a, e);
                        out.gates.push_back(g);

                        CsvRow row;
                        row.axis_name = "q_tot_dbm";
                        row.axis_value = format_double(q_tot_dbm[i]);
                        row.metric = std::string(analytic::to_string(c.kind));
                        row.mode = c.mode_label;
                        row.scheme = "astars_noma";
                        row.analytic = a;
                        row.mc_mean = e.mean;
                        row.mc_ci95 = e.ci95_halfwidth;
                        row.trials = e.trials;
                        row.flag = g.pass ? "pass" : "fail";
                        out.rows.push_back(row);
                    }
                return out;
            }

            std::vector<double> high_snr_ps_watts()
            {
                std::vector<double> ps;
                for (double dbm : high_snr_ps_dbm())
                    ps.push_back(model::dbm_to_watts(dbm));
                return ps;
            }

            // Evaluates f over the high-SNR sweep and records rows; values that throw are skipped.
            template <class F>
            std::vector<std::pair<double, double>> sweep_curve(GateBatch &out, const std::string &metric, const std::string &mode,
                                                               const std::string &scheme, F f)
            {
                const auto dbm = high_snr_ps_dbm();
                const auto ps = high_snr_ps_watts();
                std::vector<std::optional<double>> values(ps.size());
                detail::parallel_for(ps.size(), 0, [&](std::size_t i)
                                     {
                    try
                    {
                        values[i] = f(ps[i]);
                    }
                    catch (const OutOfRegimeError &)
                    {
                    } });
                std::vector<std::pair<double, double>> curve;
                for (std::size_t i = 0; i < ps.size(); ++i)
                {
                    CsvRow row;
                    row.axis_name = "ps_dbm";
                    row.axis_value = format_double(dbm[i]);
                    row.metric = metric;
                    row.mode = mode;
                    row.scheme = scheme;
                    row.analytic = values[i];
                    if (values[i])
                        curve.emplace_back(ps[i], *values[i]);
                    else
                        row.flag = "out_of_regime";
                    out.rows.push_back(row);
                }
                return curve;
            }

            GateResult slope_gate(std::string name, const std::vector<std::pair<double, double>> &curve, asymptotic::FitScale scale,
                                  double target, double tolerance)
            {
                const auto window = asymptotic::top_decade(curve);
                GateResult g;
                g.name = std::move(name);
                g.tolerance = tolerance;
                asymptotic::SlopeFit fit;
                try
                {
                    fit = asymptotic::fit_order(window, scale);
                }
                catch (const DomainError &e)
                {
                    g.detail = e.what();
                    return g;
                }
                g.observed = fit.slope;
                g.pass = std::abs(fit.slope - target) <= tolerance;
                g.detail = "target=" + format_double(target) + " r2=" + format_double(fit.r_squared) + " points=" + std::to_string(fit.points_used);
                return g;
            }
        }

        GateBatch outage_agreement(const model::NetworkConfig &cfg, std::span<const double> q_tot_dbm, const RunOptions &options)
        {
            return agreement(cfg, q_tot_dbm, options,
                             {{MetricKind::outage_r, SicMode::psic, "psic"}, {MetricKind::outage_r, SicMode::ipsic, "ipsic"}, {MetricKind::outage_t, SicMode::psic, "na"}},
                             false, "agreement");
        }

        GateBatch rate_agreement(const model::NetworkConfig &cfg, std::span<const double> q_tot_dbm, const RunOptions &options)
        {
            return agreement(cfg, q_tot_dbm, options,
                             {{MetricKind::rate_r, SicMode::psic, "psic"}, {MetricKind::rate_r, SicMode::ipsic, "ipsic"}, {MetricKind::rate_t, SicMode::psic, "na"}},
                             true, "agreement");
        }

        std::vector<double> high_snr_ps_dbm()
        {
            return linear_grid(20.0, 70.0, 2.5);
        }

        GateBatch diversity(const model::NetworkConfig &cfg, std::span<const int> element_counts)
        {
            GateBatch out;
            for (int L : element_counts)
            {
                model::NetworkConfig c = cfg;
                c.num_elements = L;
                const std::string scheme = "astars_noma[L=" + std::to_string(L) + "]";
                const double tol = 0.05 * L;
                const auto r = sweep_curve(out, "outage_r", "psic", scheme, [&](double ps) { return analytic::outage_r(c, SicMode::psic, ps); });
                const auto t = sweep_curve(out, "outage_t", "na", scheme, [&](double ps) { return analytic::outage_t(c, ps); });
                const auto ra = sweep_curve(out, "outage_r_asym", "psic", scheme, [&](double ps) { return asymptotic::outage_asym_r_psic(c, ps); });
                const auto ta = sweep_curve(out, "outage_t_asym", "na", scheme, [&](double ps) { return asymptotic::outage_asym_t(c, ps); });
                const std::string suffix = " L=" + std::to_string(L);
                out.gates.push_back(slope_gate("diversity outage_r psic closed form" + suffix, r, asymptotic::FitScale::loglog, L, tol));
                out.gates.push_back(slope_gate("diversity outage_t closed form" + suffix, t, asymptotic::FitScale::loglog, L, tol));
                out.gates.push_back(slope_gate("diversity outage_r psic high-SNR expression" + suffix, ra, asymptotic::FitScale::loglog, L, tol));
                out.gates.push_back(slope_gate("diversity outage_t high-SNR expression" + suffix, ta, asymptotic::FitScale::loglog, L, tol));
            }
            return out;
        }

        GateBatch error_floor(const model::NetworkConfig &cfg)
        {
            GateBatch out;
            const auto r = sweep_curve(out, "outage_r", "ipsic", "astars_noma", [&](double ps) { return analytic::outage_r(cfg, SicMode::ipsic, ps); });
            out.gates.push_back(slope_gate("diversity outage_r ipsic closed form", r, asymptotic::FitScale::loglog, 0.0, 0.05));
            const double floor = asymptotic::outage_floor_r_ipsic(cfg);
            const double top = r.back().second;
            GateResult g;
            g.name = "error floor vs outage_r ipsic at top power";
            g.observed = std::abs(top / floor - 1.0);
            g.tolerance = 0.05;
            g.pass = g.observed <= g.tolerance;
            g.detail = "floor=" + format_double(floor) + " closed_form=" + format_double(top);
            out.gates.push_back(g);
            return out;
        }

        GateBatch multiplexing(const model::NetworkConfig &cfg)
        {
            GateBatch out;
            const auto rp = sweep_curve(out, "rate_r", "psic", "astars_noma", [&](double ps) { return analytic::ergodic_rate_r(cfg, SicMode::psic, ps); });
            const auto ri = sweep_curve(out, "rate_r", "ipsic", "astars_noma", [&](double ps) { return analytic::ergodic_rate_r(cfg, SicMode::ipsic, ps); });
            const auto rt = sweep_curve(out, "rate_t", "na", "astars_noma", [&](double ps) { return analytic::ergodic_rate_t(cfg, ps); });
            const auto bound = sweep_curve(out, "rate_r_bound", "psic", "astars_noma", [&](double ps) { return asymptotic::ergodic_bound_r_psic(cfg, ps); });
            out.gates.push_back(slope_gate("multiplexing rate_r psic", rp, asymptotic::FitScale::semilogx, 1.0, 0.05));
            out.gates.push_back(slope_gate("multiplexing rate_r ipsic", ri, asymptotic::FitScale::semilogx, 0.0, 0.05));
            out.gates.push_back(slope_gate("multiplexing rate_t", rt, asymptotic::FitScale::semilogx, 0.0, 0.05));

            double worst = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < rp.size(); ++i)
                worst = std::min(worst, bound[i].second - rp[i].second);
            GateResult g;
            g.name = "Jensen bound dominates rate_r psic";
            g.observed = worst;
            g.tolerance = -1e-9;
            g.pass = worst >= -1e-9;
            g.detail = "min(bound - rate) over the sweep";
            out.gates.push_back(g);
            return out;
        }

        GateBatch rate_ceiling(const model::NetworkConfig &cfg)
        {
            GateBatch out;
            const double ps = high_snr_ps_watts().back();
            const double rate = analytic::ergodic_rate_t(cfg, ps);
            const double ceiling = std::log2(1.0 + cfg.a_t / cfg.a_r);
            GateResult g;
            g.name = "rate_t ceiling log2(1+a_t/a_r) at top power";
            g.observed = std::abs(rate - ceiling);
            g.tolerance = 1e-3;
            g.pass = g.observed <= g.tolerance;
            g.detail = "rate=" + format_double(rate) + " ceiling=" + format_double(ceiling);
            out.gates.push_back(g);
            return out;
        }
    }
}
