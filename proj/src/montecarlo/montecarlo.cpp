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

#include "astars/montecarlo.hpp"
#include "astars/error.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

namespace astars::montecarlo
{
    namespace
    {
        constexpr std::uint64_t block_size = 1024;
        constexpr std::size_t metric_count = 7;

        std::uint64_t splitmix64(std::uint64_t x)
        {
            x += 0x9e3779b97f4a7c15ULL;
            x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
            x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
            return x ^ (x >> 31);
        }

        struct LinkPowers
        {
            double s_r, n_r, s_t, n_t;
        };

        LinkPowers link_powers(const TrialDraw &trial, const model::NetworkConfig &cfg, double ps)
        {
            const std::size_t L = trial.h_s.size();
            double amp_r = 0.0, amp_t = 0.0;
            std::complex<double> noise_r{}, noise_t{};
            for (std::size_t l = 0; l < L; ++l)
            {
                const double hs = std::abs(trial.h_s[l]);
                amp_r += hs * std::abs(trial.h_r[l]);
                amp_t += hs * std::abs(trial.h_t[l]);
                noise_r += trial.n_s[l] * trial.h_r[l];
                noise_t += trial.n_s[l] * trial.h_t[l];
            }
            double surface_r = std::norm(noise_r);
            double surface_t = std::norm(noise_t);
            if (cfg.mean_noise_mode)
            {
                surface_r = surface_t = model::noise_power_factor(cfg.rician_kappa, int(L)) * cfg.noise_sigma_s2;
            }

            const double eta0 = cfg.path_eta0;
            const double a = cfg.path_alpha;
            const double gain_r = std::pow(cfg.dist_bs * trial.d_r, -a);
            const double gain_t = std::pow(cfg.dist_bs * trial.d_t, -a);
            LinkPowers out;
            out.s_r = cfg.amp_lambda * cfg.beta_r * ps * eta0 * eta0 * gain_r * amp_r * amp_r;
            out.s_t = cfg.amp_lambda * cfg.beta_t * ps * eta0 * eta0 * gain_t * amp_t * amp_t;
            out.n_r = cfg.amp_lambda * cfg.beta_r * eta0 * std::pow(trial.d_r, -a) * surface_r + cfg.noise_sigma_02;
            out.n_t = cfg.amp_lambda * cfg.beta_t * eta0 * std::pow(trial.d_t, -a) * surface_t + cfg.noise_sigma_02;
            return out;
        }

        struct Welford
        {
            std::uint64_t n = 0;
            double mean = 0.0;
            double m2 = 0.0;

            void add(double x)
            {
                ++n;
                const double delta = x - mean;
                mean += delta / double(n);
                m2 += delta * (x - mean);
            }

            void merge(const Welford &o)
            {
                if (o.n == 0)
                    return;
                if (n == 0)
                {
                    *this = o;
                    return;
                }
                const double total = double(n + o.n);
                const double delta = o.mean - mean;
                mean += delta * double(o.n) / total;
                m2 += o.m2 + delta * delta * double(n) * double(o.n) / total;
                n += o.n;
            }
        };

        struct PointAccumulator
        {
            std::array<std::array<std::uint64_t, 2>, metric_count> failures{};
            std::array<std::array<Welford, 2>, metric_count> values{};

            void merge(const PointAccumulator &o)
            {
                for (std::size_t k = 0; k < metric_count; ++k)
                    for (std::size_t m = 0; m < 2; ++m)
                    {
                        failures[k][m] += o.failures[k][m];
                        values[k][m].merge(o.values[k][m]);
                    }
            }
        };

        struct TrialOutcome
        {
            bool r_fail, t_fail;
            double rate_r, rate_t;
        };

        void record(PointAccumulator &acc, std::size_t mode, const TrialOutcome &o, double target_r, double target_t)
        {
            const auto idx = [](MetricKind k) { return std::size_t(k); };
            acc.failures[idx(MetricKind::outage_r)][mode] += o.r_fail;
            acc.failures[idx(MetricKind::outage_t)][mode] += o.t_fail;
            acc.failures[idx(MetricKind::outage_system)][mode] += (o.r_fail || o.t_fail);
            acc.values[idx(MetricKind::rate_r)][mode].add(o.rate_r);
            acc.values[idx(MetricKind::rate_t)][mode].add(o.rate_t);
            acc.values[idx(MetricKind::throughput_limited)][mode].add((o.r_fail ? 0.0 : target_r) + (o.t_fail ? 0.0 : target_t));
            acc.values[idx(MetricKind::throughput_tolerant)][mode].add(o.rate_r + o.rate_t);
        }

        Estimate finish(MetricKind kind, const PointAccumulator &acc, std::size_t mode, std::uint64_t trials)
        {
            Estimate e;
            e.kind = kind;
            e.trials = trials;
            const double n = double(trials);
            if (analytic::is_probability(kind))
            {
                const double p = double(acc.failures[std::size_t(kind)][mode]) / n;
                e.mean = p;
                e.ci95_halfwidth = 1.96 * std::sqrt(p * (1.0 - p) / n);
            }
            else
            {
                const Welford &w = acc.values[std::size_t(kind)][mode];
                e.mean = w.mean;
                e.ci95_halfwidth = (trials > 1) ? 1.96 * std::sqrt(w.m2 / (n - 1.0)) / std::sqrt(n) : 0.0;
            }
            return e;
        }

        unsigned resolve_workers(unsigned workers, std::size_t blocks)
        {
            unsigned w = workers ? workers : std::max(1u, std::thread::hardware_concurrency());
            return unsigned(std::min<std::size_t>(w, std::max<std::size_t>(blocks, 1)));
        }

        // Runs job(b) for every block index, spread over worker threads.
        template <class Job>
        void for_each_block(std::size_t blocks, unsigned workers, Job job)
        {
            const unsigned w = resolve_workers(workers, blocks);
            if (w <= 1)
            {
                for (std::size_t b = 0; b < blocks; ++b)
                    job(b);
                return;
            }
            std::atomic<std::size_t> next{0};
            std::vector<std::thread> pool;
            std::exception_ptr failure;
            std::mutex failure_mutex;
            for (unsigned i = 0; i < w; ++i)
                pool.emplace_back([&]
                                  {
                                      try
                                      {
                                          for (std::size_t b = next++; b < blocks; b = next++)
                                              job(b);
                                      }
                                      catch (...)
                                      {
                                          std::lock_guard<std::mutex> lock(failure_mutex);
                                          if (!failure)
                                              failure = std::current_exception();
                                      } });
            for (auto &t : pool)
                t.join();
            if (failure)
                std::rethrow_exception(failure);
        }
    }

    std::string_view to_string(Scheme scheme)
    {
        switch (scheme)
        {
        case Scheme::astars_noma: return "astars_noma";
        case Scheme::astars_oma: return "astars_oma";
        case Scheme::pstars_noma: return "pstars_noma";
        }
        return "unknown";
    }

    Scheme parse_scheme(std::string_view tag)
    {
        if (tag == "astars_noma")
            return Scheme::astars_noma;
        if (tag == "astars_oma")
            return Scheme::astars_oma;
        if (tag == "pstars_noma")
            return Scheme::pstars_noma;
        throw ConfigError("unknown scheme '" + std::string(tag) + "'");
    }

    RandomStream trial_stream(std::uint64_t seed, std::uint64_t trial)
    {
        return RandomStream(splitmix64(splitmix64(seed) ^ trial));
    }

    TrialDraw draw_trial(RandomStream &rng, const model::NetworkConfig &cfg)
    {
        const double kappa = cfg.rician_kappa;
        const double los = std::isinf(kappa) ? 1.0 : std::sqrt(kappa / (kappa + 1.0));
        const double scatter = std::isinf(kappa) ? 0.0 : std::sqrt(1.0 / (kappa + 1.0));
        std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
        auto cn = [&] { const double re = gauss(rng); return std::complex<double>(re, gauss(rng)); };

        const std::size_t L = std::size_t(cfg.num_elements);
        TrialDraw t;
        t.h_s.resize(L);
        t.h_r.resize(L);
        t.h_t.resize(L);
        t.n_s.resize(L);
        for (auto &h : t.h_s)
            h = los + scatter * cn();
        for (auto &h : t.h_r)
            h = los + scatter * cn();
        for (auto &h : t.h_t)
            h = los + scatter * cn();
        const double noise_amp = std::sqrt(cfg.noise_sigma_s2);
        for (auto &n : t.n_s)
            n = noise_amp * cn();
        if (cfg.noise_sigma_re2 > 0.0)
            t.h_re_sq = std::exponential_distribution<double>(1.0 / cfg.noise_sigma_re2)(rng);
        t.d_r = model::sample_distance(rng, cfg.radius_d);
        t.d_t = model::sample_distance(rng, cfg.radius_d);
        return t;
    }

    SinrSet sinr_set(const TrialDraw &trial, const model::NetworkConfig &cfg, double ps)
    {
        const LinkPowers p = link_powers(trial, cfg, ps);
        SinrSet s;
        s.r_to_t = cfg.a_t * p.s_r / (cfg.a_r * p.s_r + p.n_r);
        s.r_psic = cfg.a_r * p.s_r / p.n_r;
        s.r_ipsic = cfg.a_r * p.s_r / (p.n_r + trial.h_re_sq * ps);
        s.t = cfg.a_t * p.s_t / (cfg.a_r * p.s_t + p.n_t);
        return s;
    }

    model::NetworkConfig passive_view(const model::NetworkConfig &cfg)
    {
        model::NetworkConfig out = cfg;
        out.amp_lambda = 1.0;
        out.noise_sigma_s2 = 0.0;
        return out;
    }

    double budget_to_ps(double q_tot, const model::NetworkConfig &cfg, bool active)
    {
        const double L = cfg.num_elements;
        double ps;
        if (active)
        {
            const double beta = cfg.beta_r + cfg.beta_t;
            const double fixed = L * (cfg.pc_watts + cfg.pd_watts) + cfg.amp_lambda * beta * L * cfg.noise_sigma_s2;
            const double slope = 1.0 + cfg.amp_lambda * beta * L * cfg.path_eta0 * std::pow(cfg.dist_bs, -cfg.path_alpha);
            ps = (q_tot - fixed) / slope;
        }
        else
        {
            ps = q_tot - L * cfg.pc_watts;
        }
        if (!(ps > 0.0) || !std::isfinite(ps))
            throw ConfigError("power budget " + std::to_string(q_tot) + " W is infeasible: nothing left for the base station");
        return ps;
    }

    double scheme_ps(double q_tot, const model::NetworkConfig &cfg, Scheme scheme)
    {
        return budget_to_ps(q_tot, cfg, scheme != Scheme::pstars_noma);
    }

    std::vector<PointEstimates> simulate(const model::NetworkConfig &cfg, Scheme scheme, std::span<const double> ps,
                                         const SimulationOptions &options)
    {
        if (options.trials == 0)
            throw ConfigError("simulate: trials must be positive");
        for (double p : ps)
            if (!(p > 0.0) || !std::isfinite(p))
                throw DomainError("simulate: transmit power must be positive and finite");

        const model::NetworkConfig link = (scheme == Scheme::pstars_noma) ? passive_view(cfg) : cfg;
        const double gt = cfg.target_sinr_t();
        const double gr = cfg.target_sinr_r();
        const double oma_gr = std::exp2(2.0 * cfg.target_rate_r) - 1.0;
        const double oma_gt = std::exp2(2.0 * cfg.target_rate_t) - 1.0;
        const std::size_t points = ps.size();
        const std::size_t blocks = std::size_t((options.trials + block_size - 1) / block_size);

        std::vector<std::vector<PointAccumulator>> partial(blocks, std::vector<PointAccumulator>(points));
        for_each_block(blocks, options.workers, [&](std::size_t b)
                       {
            auto &acc = partial[b];
            const std::uint64_t first = b * block_size;
            const std::uint64_t last = std::min<std::uint64_t>(first + block_size, options.trials);
            for (std::uint64_t trial = first; trial < last; ++trial)
            {
                RandomStream rng = trial_stream(options.seed, trial);
                const TrialDraw draw = draw_trial(rng, link);
                for (std::size_t i = 0; i < points; ++i)
                {
                    if (scheme == Scheme::astars_oma)
                    {
                        const LinkPowers p = link_powers(draw, link, ps[i]);
                        const double snr_r = p.s_r / p.n_r;
                        const double snr_t = p.s_t / p.n_t;
                        const TrialOutcome o{snr_r <= oma_gr, snr_t <= oma_gt, 0.5 * std::log2(1.0 + snr_r), 0.5 * std::log2(1.0 + snr_t)};
                        record(acc[i], 0, o, cfg.target_rate_r, cfg.target_rate_t);
                        record(acc[i], 1, o, cfg.target_rate_r, cfg.target_rate_t);
                        continue;
                    }
                    const SinrSet s = sinr_set(draw, link, ps[i]);
                    const bool t_fail = s.t <= gt;
                    const double rate_t = std::log2(1.0 + s.t);
                    const bool sic_fail = s.r_to_t <= gt;
                    const TrialOutcome perfect{sic_fail || s.r_psic <= gr, t_fail, std::log2(1.0 + s.r_psic), rate_t};
                    const TrialOutcome imperfect{sic_fail || s.r_ipsic <= gr, t_fail, std::log2(1.0 + s.r_ipsic), rate_t};
                    record(acc[i], std::size_t(SicMode::psic), perfect, cfg.target_rate_r, cfg.target_rate_t);
                    record(acc[i], std::size_t(SicMode::ipsic), imperfect, cfg.target_rate_r, cfg.target_rate_t);
                }
            } });

        // Fixed block order keeps the reduction independent of scheduling
        std::vector<PointAccumulator> total(points);
        for (std::size_t b = 0; b < blocks; ++b)
            for (std::size_t i = 0; i < points; ++i)
                total[i].merge(partial[b][i]);

        std::vector<PointEstimates> out(points);
        for (std::size_t i = 0; i < points; ++i)
        {
            out[i].ps = ps[i];
            for (std::size_t k = 0; k < metric_count; ++k)
                for (std::size_t m = 0; m < 2; ++m)
                    out[i].values[k][m] = finish(MetricKind(k), total[i], m, options.trials);
        }
        return out;
    }

    OutageEstimates estimate_outage(const model::NetworkConfig &cfg, SicMode mode, double ps, std::uint64_t trials, std::uint64_t seed)
    {
        if (trials < 1000)
            throw DomainError("estimate_outage: at least 1000 trials are required");
        const double p[] = {ps};
        const auto r = simulate(cfg, Scheme::astars_noma, p, {trials, seed, 0});
        return {r[0].get(MetricKind::outage_r, mode), r[0].get(MetricKind::outage_t, mode), r[0].get(MetricKind::outage_system, mode)};
    }

    ErgodicEstimates estimate_ergodic(const model::NetworkConfig &cfg, SicMode mode, double ps, std::uint64_t trials, std::uint64_t seed)
    {
        if (trials < 1000)
            throw DomainError("estimate_ergodic: at least 1000 trials are required");
        const double p[] = {ps};
        const auto r = simulate(cfg, Scheme::astars_noma, p, {trials, seed, 0});
        return {r[0].get(MetricKind::rate_r, mode), r[0].get(MetricKind::rate_t, mode), r[0].get(MetricKind::throughput_tolerant, mode)};
    }

    PointEstimates baseline_estimate(const model::NetworkConfig &cfg, Scheme scheme, double ps, std::uint64_t trials, std::uint64_t seed)
    {
        if (trials < 1000)
            throw DomainError("baseline_estimate: at least 1000 trials are required");
        const double p[] = {ps};
        return simulate(cfg, scheme, p, {trials, seed, 0})[0];
    }

    std::vector<double> sample_cascade_gain(double kappa, int L, std::uint64_t samples, std::uint64_t seed, unsigned workers)
    {
        if (L < 1 || !(kappa >= 0.0))
            throw DomainError("sample_cascade_gain: requires kappa >= 0 and L >= 1");
        const double los = std::isinf(kappa) ? 1.0 : std::sqrt(kappa / (kappa + 1.0));
        const double scatter = std::isinf(kappa) ? 0.0 : std::sqrt(1.0 / (kappa + 1.0));
        std::vector<double> out(samples);
        const std::size_t blocks = std::size_t((samples + block_size - 1) / block_size);
        for_each_block(blocks, workers, [&](std::size_t b)
                       {
            const std::uint64_t first = b * block_size;
            const std::uint64_t last = std::min<std::uint64_t>(first + block_size, samples);
            for (std::uint64_t i = first; i < last; ++i)
            {
                RandomStream rng = trial_stream(seed, i);
                std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
                double amp = 0.0;
                for (int l = 0; l < L; ++l)
                {
                    const double sr = gauss(rng), si = gauss(rng);
                    const double pr = gauss(rng), pi = gauss(rng);
                    amp += std::abs(std::complex<double>(los + scatter * sr, scatter * si)) *
                           std::abs(std::complex<double>(los + scatter * pr, scatter * pi));
                }
                out[i] = amp * amp;
            } });
        return out;
    }
}
