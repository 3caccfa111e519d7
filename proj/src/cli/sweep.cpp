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

#include "astars/sweep.hpp"
#include "astars/asymptotic.hpp"
#include "astars/config_io.hpp"
#include "astars/error.hpp"
#include "cli/parallel.hpp"

#include <cmath>
#include <map>
#include <tuple>

namespace astars::cli
{
    using analytic::MetricKind;
    using analytic::SicMode;
    using montecarlo::Scheme;

    namespace
    {
        struct MetricInfo
        {
            std::string_view tag;
            std::optional<MetricKind> kind; // closed-form / Monte Carlo metric
            bool mode_dependent;
            std::optional<SicMode> fixed_mode;
            bool probability;
        };

        const std::vector<MetricInfo> &metric_table()
        {
            static const std::vector<MetricInfo> table = {
                {"outage_r", MetricKind::outage_r, true, std::nullopt, true},
                {"outage_t", MetricKind::outage_t, false, std::nullopt, true},
                {"outage_system", MetricKind::outage_system, true, std::nullopt, true},
                {"rate_r", MetricKind::rate_r, true, std::nullopt, false},
                {"rate_t", MetricKind::rate_t, false, std::nullopt, false},
                {"throughput_limited", MetricKind::throughput_limited, true, std::nullopt, false},
                {"throughput_tolerant", MetricKind::throughput_tolerant, true, std::nullopt, false},
                {"outage_r_asym", std::nullopt, false, SicMode::psic, true},
                {"outage_t_asym", std::nullopt, false, std::nullopt, true},
                {"outage_r_floor", std::nullopt, false, SicMode::ipsic, true},
                {"rate_r_ceiling", std::nullopt, false, SicMode::ipsic, false},
                {"rate_r_bound", std::nullopt, false, SicMode::psic, false},
                {"rate_t_ceiling", std::nullopt, false, std::nullopt, false},
            };
            return table;
        }

        const MetricInfo &metric_info(std::string_view tag)
        {
            for (const auto &m : metric_table())
                if (m.tag == tag)
                    return m;
            throw ConfigError("unknown metric '" + std::string(tag) + "'");
        }

        double high_snr_value(std::string_view tag, const model::NetworkConfig &cfg, double ps)
        {
            if (tag == "outage_r_asym")
                return asymptotic::outage_asym_r_psic(cfg, ps);
            if (tag == "outage_t_asym")
                return asymptotic::outage_asym_t(cfg, ps);
            if (tag == "outage_r_floor")
                return asymptotic::outage_floor_r_ipsic(cfg);
            if (tag == "rate_r_ceiling")
                return asymptotic::ergodic_asym_r_ipsic(cfg);
            if (tag == "rate_r_bound")
                return asymptotic::ergodic_bound_r_psic(cfg, ps);
            if (tag == "rate_t_ceiling")
                return asymptotic::ergodic_asym_t(cfg);
            throw ConfigError("unknown metric '" + std::string(tag) + "'");
        }

        struct AxisPoint
        {
            std::string text;
            double x = 0.0;
            model::NetworkConfig cfg;
            double power_dbm = 0.0;
            bool budget = true;
        };

        bool power_axis(Axis a) { return a == Axis::q_tot_dbm || a == Axis::ps_dbm; }

        std::vector<AxisPoint> axis_points(const model::NetworkConfig &base, const SweepSpec &spec)
        {
            std::vector<AxisPoint> pts;
            auto add = [&](std::string text, double x, model::NetworkConfig c, double power, bool budget)
            {
                c.validate();
                pts.push_back({std::move(text), x, std::move(c), power, budget});
            };
            for (double v : spec.values)
            {
                model::NetworkConfig c = base;
                switch (spec.axis)
                {
                case Axis::q_tot_dbm: add(format_double(v), v, c, v, true); break;
                case Axis::ps_dbm: add(format_double(v), v, c, v, false); break;
                case Axis::num_elements:
                    c.num_elements = int(std::lround(v));
                    add(std::to_string(c.num_elements), v, c, spec.fixed.dbm, spec.fixed.is_budget);
                    break;
                case Axis::amp_lambda:
                    c.amp_lambda = v;
                    add(format_double(v), v, c, spec.fixed.dbm, spec.fixed.is_budget);
                    break;
                case Axis::beta_r_a_r:
                    for (double a : spec.secondary_values)
                    {
                        model::NetworkConfig g = c;
                        g.beta_r = v;
                        g.beta_t = 1.0 - v;
                        g.a_r = a;
                        g.a_t = 1.0 - a;
                        add(format_double(v) + "|" + format_double(a), double(pts.size()), g, spec.fixed.dbm, spec.fixed.is_budget);
                    }
                    break;
                }
            }
            return pts;
        }

        // One (variant, axis point, scheme) combination.
        struct Cell
        {
            std::size_t variant = 0, point = 0, scheme = 0;
            std::optional<double> ps; // empty when the budget is infeasible
            std::optional<montecarlo::PointEstimates> mc;
        };

        void check_range(const MetricInfo &m, double v)
        {
            const bool ok = m.probability ? (v >= -1e-9 && v <= 1.0 + 1e-9) : (v >= 0.0);
            if (!ok || std::isnan(v))
                throw NumericIntegrityError("metric " + std::string(m.tag) + " produced out-of-range value " + format_double(v));
        }
    }

    std::string_view to_string(Axis axis)
    {
        switch (axis)
        {
        case Axis::q_tot_dbm: return "q_tot_dbm";
        case Axis::ps_dbm: return "ps_dbm";
        case Axis::num_elements: return "num_elements";
        case Axis::amp_lambda: return "amp_lambda";
        case Axis::beta_r_a_r: return "beta_r|a_r";
        }
        return "unknown";
    }

    Axis parse_axis(std::string_view tag)
    {
        for (Axis a : {Axis::q_tot_dbm, Axis::ps_dbm, Axis::num_elements, Axis::amp_lambda, Axis::beta_r_a_r})
            if (to_string(a) == tag)
                return a;
        if (tag == "beta_r_a_r")
            return Axis::beta_r_a_r;
        throw ConfigError("unknown sweep axis '" + std::string(tag) + "'");
    }

    bool is_known_metric(std::string_view tag)
    {
        for (const auto &m : metric_table())
            if (m.tag == tag)
                return true;
        return false;
    }

    void SweepSpec::validate() const
    {
        if (values.empty())
            throw ConfigError("sweep: empty axis grid");
        if (axis == Axis::beta_r_a_r && secondary_values.empty())
            throw ConfigError("sweep: beta_r|a_r grid needs a_r values");
        if (metrics.empty())
            throw ConfigError("sweep: no metrics requested");
        for (const auto &m : metrics)
            metric_info(m);
        if (modes.empty())
            throw ConfigError("sweep: no SIC modes requested");
        if (schemes.empty())
            throw ConfigError("sweep: no schemes requested");
    }

    std::vector<double> linear_grid(double start, double stop, double step)
    {
        if (!(step > 0.0) || !(stop >= start))
            throw ConfigError("grid: requires step > 0 and stop >= start");
        std::vector<double> out;
        const auto n = std::size_t(std::floor((stop - start) / step + 1e-9));
        for (std::size_t i = 0; i <= n; ++i)
            out.push_back(start + double(i) * step);
        return out;
    }

    std::vector<std::pair<std::string, std::vector<CsvRow>>> sweep_rows(const model::NetworkConfig &cfg, const SweepSpec &spec,
                                                                         const RunOptions &options)
    {
        spec.validate();
        std::vector<Variant> variants = spec.variants;
        if (variants.empty())
            variants.push_back({"", {}});

        std::vector<std::vector<AxisPoint>> points;
        for (const auto &v : variants)
        {
            model::NetworkConfig base = cfg;
            for (const auto &[key, value] : v.settings)
                apply_setting(base, key, value);
            base.validate();
            points.push_back(axis_points(base, spec));
        }

        // Resolve transmit powers
        std::vector<Cell> cells;
        std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> cell_index;
        for (std::size_t v = 0; v < variants.size(); ++v)
            for (std::size_t i = 0; i < points[v].size(); ++i)
                for (std::size_t s = 0; s < spec.schemes.size(); ++s)
                {
                    Cell c{v, i, s, std::nullopt, std::nullopt};
                    const auto &pt = points[v][i];
                    const double watts = model::dbm_to_watts(pt.power_dbm);
                    if (pt.budget)
                    {
                        try
                        {
                            c.ps = montecarlo::scheme_ps(watts, pt.cfg, spec.schemes[s]);
                        }
                        catch (const ConfigError &)
                        {
                        }
                    }
                    else
                        c.ps = watts;
                    cell_index[{v, i, s}] = cells.size();
                    cells.push_back(std::move(c));
                }

        // Monte Carlo: one pass per configuration, shared across powers on power axes
        bool need_mc = false;
        for (const auto &m : spec.metrics)
            need_mc = need_mc || metric_info(m).kind.has_value();
        if (options.trials > 0 && need_mc)
        {
            const montecarlo::SimulationOptions sim{options.trials, options.seed, options.workers};
            for (std::size_t v = 0; v < variants.size(); ++v)
                for (std::size_t s = 0; s < spec.schemes.size(); ++s)
                {
                    if (power_axis(spec.axis))
                    {
                        std::vector<double> ps;
                        std::vector<std::size_t> idx;
                        for (std::size_t i = 0; i < points[v].size(); ++i)
                        {
                            auto &c = cells[cell_index[{v, i, s}]];
                            if (c.ps)
                            {
                                ps.push_back(*c.ps);
                                idx.push_back(cell_index[{v, i, s}]);
                            }
                        }
                        if (ps.empty())
                            continue;
                        const auto est = montecarlo::simulate(points[v][0].cfg, spec.schemes[s], ps, sim);
                        for (std::size_t j = 0; j < idx.size(); ++j)
                            cells[idx[j]].mc = est[j];
                    }
                    else
                    {
                        for (std::size_t i = 0; i < points[v].size(); ++i)
                        {
                            auto &c = cells[cell_index[{v, i, s}]];
                            if (!c.ps)
                                continue;
                            const double p[] = {*c.ps};
                            c.mc = montecarlo::simulate(points[v][i].cfg, spec.schemes[s], p, sim)[0];
                        }
                    }
                }
        }

        // Row skeleton in output order, analytic values filled concurrently afterwards
        struct Pending
        {
            std::size_t group;
            std::size_t row;
            std::size_t cell;
            const MetricInfo *info;
            SicMode mode;
        };
        std::vector<std::pair<std::string, std::vector<CsvRow>>> groups;
        std::vector<Pending> pending;
        for (const auto &tag : spec.metrics)
        {
            const MetricInfo &info = metric_info(tag);
            std::vector<SicMode> modes = info.mode_dependent ? spec.modes : std::vector<SicMode>{info.fixed_mode.value_or(SicMode::psic)};
            groups.push_back({tag, {}});
            auto &rows = groups.back().second;
            const std::size_t npoints = points[0].size();
            for (std::size_t i = 0; i < npoints; ++i)
                for (std::size_t v = 0; v < variants.size(); ++v)
                    for (std::size_t s = 0; s < spec.schemes.size(); ++s)
                        for (SicMode mode : modes)
                        {
                            const std::size_t ci = cell_index[{v, i, s}];
                            const Cell &c = cells[ci];
                            const Scheme scheme = spec.schemes[s];
                            CsvRow row;
                            row.axis_name = std::string(to_string(spec.axis));
                            row.axis_value = points[v][i].text;
                            row.metric = tag;
                            row.mode = (info.mode_dependent || info.fixed_mode) ? std::string(analytic::to_string(mode)) : "na";
                            row.scheme = std::string(montecarlo::to_string(scheme)) + (variants[v].label.empty() ? "" : "[" + variants[v].label + "]");
                            std::vector<std::string> flags;
                            if (!c.ps)
                                flags.push_back("infeasible_budget");
                            else if (points[v][i].budget && scheme != Scheme::pstars_noma)
                                flags.push_back("pr_act_expected");
                            if (c.ps && c.mc && info.kind)
                            {
                                const auto &e = c.mc->get(*info.kind, mode);
                                check_range(info, e.mean);
                                row.mc_mean = e.mean;
                                row.mc_ci95 = e.ci95_halfwidth;
                                row.trials = e.trials;
                            }
                            for (std::size_t f = 0; f < flags.size(); ++f)
                                row.flag += (f ? ";" : "") + flags[f];
                            if (c.ps && scheme != Scheme::astars_oma)
                                pending.push_back({groups.size() - 1, rows.size(), ci, &info, mode});
                            rows.push_back(std::move(row));
                        }
        }

        detail::parallel_for(pending.size(), options.workers, [&](std::size_t k)
                             {
            const Pending &p = pending[k];
            const Cell &c = cells[p.cell];
            const Scheme scheme = spec.schemes[c.scheme];
            const model::NetworkConfig &pc = points[c.variant][c.point].cfg;
            const model::NetworkConfig link = (scheme == Scheme::pstars_noma) ? montecarlo::passive_view(pc) : pc;
            CsvRow &row = groups[p.group].second[p.row];
            try
            {
                const double v = p.info->kind ? analytic::evaluate(link, *p.info->kind, p.mode, *c.ps).value
                                              : high_snr_value(p.info->tag, link, *c.ps);
                check_range(*p.info, v);
                row.analytic = v;
            }
            catch (const OutOfRegimeError &)
            {
                row.flag += row.flag.empty() ? "out_of_regime" : ";out_of_regime";
            } });
        return groups;
    }

    std::vector<std::filesystem::path> run_sweep(const model::NetworkConfig &cfg, const SweepSpec &spec, const std::filesystem::path &out_dir,
                                                 const RunOptions &options)
    {
        const auto groups = sweep_rows(cfg, spec, options);
        std::vector<std::filesystem::path> written;
        for (const auto &[metric, rows] : groups)
        {
            const auto csv_path = out_dir / (spec.name + "_" + metric + ".csv");
            write_text_file(csv_path, csv_text(rows));
            written.push_back(csv_path);
            if (!options.plots)
                continue;

            std::map<std::string, PlotSeries> analytic_series, mc_series;
            std::map<std::string, int> seen;
            std::vector<std::string> order;
            for (std::size_t r = 0; r < rows.size(); ++r)
            {
                const auto &row = rows[r];
                const std::string key = row.scheme + " " + row.mode;
                if (!analytic_series.count(key))
                {
                    order.push_back(key);
                    analytic_series[key].label = key + " analytic";
                    mc_series[key].label = key + " MC";
                    mc_series[key].markers_only = true;
                }
                const int index = seen[key]++;
                const double x = (spec.axis == Axis::beta_r_a_r) ? double(index) : std::stod(row.axis_value);
                if (row.analytic)
                    analytic_series[key].points.emplace_back(x, *row.analytic);
                if (row.mc_mean)
                    mc_series[key].points.emplace_back(x, *row.mc_mean);
            }
            std::vector<PlotSeries> series;
            for (const auto &k : order)
            {
                if (!analytic_series[k].points.empty())
                    series.push_back(analytic_series[k]);
                if (!mc_series[k].points.empty())
                    series.push_back(mc_series[k]);
            }
            PlotSpec ps;
            ps.title = (spec.title.empty() ? spec.name : spec.title) + ": " + metric + (spec.range_approximated ? " (range approximated)" : "");
            ps.x_label = std::string(to_string(spec.axis));
            ps.y_label = metric;
            ps.log_y = metric_info(metric).probability;
            const auto svg_path = out_dir / (spec.name + "_" + metric + ".svg");
            write_text_file(svg_path, svg_plot(ps, series));
            written.push_back(svg_path);
        }
        return written;
    }
}
