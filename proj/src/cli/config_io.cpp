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

#include "astars/config_io.hpp"
#include "astars/error.hpp"
#include "astars/report.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace astars::cli
{
    namespace
    {
        std::string_view trim(std::string_view s)
        {
            const auto first = s.find_first_not_of(" \t\r\n");
            if (first == std::string_view::npos)
                return {};
            const auto last = s.find_last_not_of(" \t\r\n");
            return s.substr(first, last - first + 1);
        }

        double to_double(std::string_view key, std::string_view text)
        {
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
            if (ec != std::errc() || ptr != text.data() + text.size())
                throw ConfigError(std::string(key) + ": '" + std::string(text) + "' is not a number");
            return v;
        }

        template <class Int>
        Int to_integer(std::string_view key, std::string_view text)
        {
            Int v = 0;
            const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
            if (ec != std::errc() || ptr != text.data() + text.size())
            {
                // accept integral values written in floating notation, e.g. 1e5
                const double d = to_double(key, text);
                if (d != double(Int(d)))
                    throw ConfigError(std::string(key) + ": '" + std::string(text) + "' is not an integer");
                return Int(d);
            }
            return v;
        }

        bool to_bool(std::string_view key, std::string_view text)
        {
            if (text == "true" || text == "1" || text == "yes" || text == "on")
                return true;
            if (text == "false" || text == "0" || text == "no" || text == "off")
                return false;
            throw ConfigError(std::string(key) + ": '" + std::string(text) + "' is not a boolean");
        }
    }

    void apply_setting(model::NetworkConfig &c, std::string_view key, std::string_view v)
    {
        using namespace model;
        if (key == "kappa_db") c.rician_kappa = db_to_linear(to_double(key, v));
        else if (key == "lambda") c.amp_lambda = to_double(key, v);
        else if (key == "num_elements") c.num_elements = to_integer<int>(key, v);
        else if (key == "radius_d") c.radius_d = to_double(key, v);
        else if (key == "dist_bs") c.dist_bs = to_double(key, v);
        else if (key == "beta_r") c.beta_r = to_double(key, v);
        else if (key == "beta_t") c.beta_t = to_double(key, v);
        else if (key == "a_r") c.a_r = to_double(key, v);
        else if (key == "a_t") c.a_t = to_double(key, v);
        else if (key == "sigma_s2_dbm") c.noise_sigma_s2 = dbm_to_watts(to_double(key, v));
        else if (key == "sigma_02_dbm") c.noise_sigma_02 = dbm_to_watts(to_double(key, v));
        else if (key == "sigma_re2_dbm") c.noise_sigma_re2 = dbm_to_watts(to_double(key, v));
        else if (key == "alpha") c.path_alpha = to_double(key, v);
        else if (key == "eta0_db") c.path_eta0 = db_to_linear(to_double(key, v));
        else if (key == "rate_r") c.target_rate_r = to_double(key, v);
        else if (key == "rate_t") c.target_rate_t = to_double(key, v);
        else if (key == "quad_k") c.quad_k = to_integer<int>(key, v);
        else if (key == "quad_u") c.quad_u = to_integer<int>(key, v);
        else if (key == "quad_q") c.quad_q = to_integer<int>(key, v);
        else if (key == "cheb_n") c.cheb_n = to_integer<int>(key, v);
        else if (key == "mc_trials") c.mc_trials = to_integer<std::uint64_t>(key, v);
        else if (key == "seed") c.seed = to_integer<std::uint64_t>(key, v);
        else if (key == "pc_dbm") c.pc_watts = dbm_to_watts(to_double(key, v));
        else if (key == "pd_dbm") c.pd_watts = dbm_to_watts(to_double(key, v));
        else if (key == "hyp2f1_z_cap") c.hyp2f1_z_cap = to_double(key, v);
        else if (key == "mean_noise_mode") c.mean_noise_mode = to_bool(key, v);
        else
            throw ConfigError("unknown key '" + std::string(key) + "'");
    }

    model::NetworkConfig parse_config_text(std::string_view text, std::string_view source)
    {
        model::NetworkConfig cfg;
        std::set<std::string, std::less<>> seen;
        std::size_t line_no = 0;
        while (!text.empty())
        {
            const auto eol = text.find('\n');
            std::string_view line = text.substr(0, eol);
            text = (eol == std::string_view::npos) ? std::string_view{} : text.substr(eol + 1);
            ++line_no;
            if (const auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            line = trim(line);
            if (line.empty())
                continue;
            const auto eq = line.find('=');
            const std::string where = std::string(source) + ":" + std::to_string(line_no) + ": ";
            if (eq == std::string_view::npos)
                throw ConfigError(where + "expected 'key = value'");
            const auto key = trim(line.substr(0, eq));
            const auto value = trim(line.substr(eq + 1));
            if (!seen.insert(std::string(key)).second)
                throw ConfigError(where + "duplicate key '" + std::string(key) + "'");
            try
            {
                apply_setting(cfg, key, value);
            }
            catch (const ConfigError &e)
            {
                throw ConfigError(where + e.what());
            }
        }
        try
        {
            cfg.validate();
        }
        catch (const ConfigError &e)
        {
            throw ConfigError(std::string(source) + ": " + e.what());
        }
        return cfg;
    }

    model::NetworkConfig parse_config(const std::filesystem::path &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw IoError("cannot read config file " + path.string());
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return parse_config_text(buffer.str(), path.string());
    }

    std::string format_config(const model::NetworkConfig &c)
    {
        // dB values are rounded to 15 digits so that a written config reads back to the same text
        auto db15 = [](double v)
        {
            char buf[32];
            const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 15);
            return format_double(std::stod(std::string(buf, r.ptr)));
        };
        auto linear_to_db = [&](double v) { return db15(model::linear_to_db(v)); };
        auto watts_to_dbm = [&](double v) { return db15(model::watts_to_dbm(v)); };
        std::ostringstream out;
        auto line = [&](const char *key, const std::string &value) { out << key << " = " << value << "\n"; };
        line("kappa_db", linear_to_db(c.rician_kappa));
        line("lambda", format_double(c.amp_lambda));
        line("num_elements", std::to_string(c.num_elements));
        line("radius_d", format_double(c.radius_d));
        line("dist_bs", format_double(c.dist_bs));
        line("beta_r", format_double(c.beta_r));
        line("beta_t", format_double(c.beta_t));
        line("a_r", format_double(c.a_r));
        line("a_t", format_double(c.a_t));
        line("sigma_s2_dbm", watts_to_dbm(c.noise_sigma_s2));
        line("sigma_02_dbm", watts_to_dbm(c.noise_sigma_02));
        line("sigma_re2_dbm", watts_to_dbm(c.noise_sigma_re2));
        line("alpha", format_double(c.path_alpha));
        line("eta0_db", linear_to_db(c.path_eta0));
        line("rate_r", format_double(c.target_rate_r));
        line("rate_t", format_double(c.target_rate_t));
        line("quad_k", std::to_string(c.quad_k));
        line("quad_u", std::to_string(c.quad_u));
        line("quad_q", std::to_string(c.quad_q));
        line("cheb_n", std::to_string(c.cheb_n));
        line("mc_trials", std::to_string(c.mc_trials));
        line("seed", std::to_string(c.seed));
        line("pc_dbm", watts_to_dbm(c.pc_watts));
        line("pd_dbm", watts_to_dbm(c.pd_watts));
        line("hyp2f1_z_cap", format_double(c.hyp2f1_z_cap));
        line("mean_noise_mode", c.mean_noise_mode ? "true" : "false");
        return out.str();
    }
}
