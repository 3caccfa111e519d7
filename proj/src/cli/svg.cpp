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

#include "astars/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace astars::cli
{
    namespace
    {
        constexpr double width = 760.0, height = 500.0;
        constexpr double left = 80.0, right = 220.0, top = 50.0, bottom = 60.0;
        const char *palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf", "#7f7f7f", "#bcbd22"};

        std::string escape(const std::string &s)
        {
            std::string out;
            for (char c : s)
            {
                switch (c)
                {
                case '&': out += "&amp;"; break;
                case '<': out += "&lt;"; break;
                case '>': out += "&gt;"; break;
                case '"': out += "&quot;"; break;
                default: out += c;
                }
            }
            return out;
        }

        std::string num(double v)
        {
            std::ostringstream s;
            s.precision(6);
            s << v;
            return s.str();
        }
    }

    std::string svg_plot(const PlotSpec &spec, const std::vector<PlotSeries> &series)
    {
        double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
        double ymin = xmin, ymax = -xmin;
        auto ty = [&](double y) { return spec.log_y ? std::log10(y) : y; };
        for (const auto &s : series)
            for (const auto &[x, y] : s.points)
            {
                if (!std::isfinite(x) || !std::isfinite(y) || (spec.log_y && !(y > 0.0)))
                    continue;
                xmin = std::min(xmin, x);
                xmax = std::max(xmax, x);
                ymin = std::min(ymin, ty(y));
                ymax = std::max(ymax, ty(y));
            }
        if (!std::isfinite(xmin))
        {
            xmin = 0.0;
            xmax = 1.0;
            ymin = 0.0;
            ymax = 1.0;
        }
        if (spec.log_y)
        {
            ymin = std::floor(ymin);
            ymax = std::ceil(ymax);
        }
        if (xmax == xmin)
            xmax = xmin + 1.0;
        if (ymax == ymin)
            ymax = ymin + 1.0;

        const double pw = width - left - right, ph = height - top - bottom;
        auto px = [&](double x) { return left + (x - xmin) / (xmax - xmin) * pw; };
        auto py = [&](double y) { return top + ph - (ty(y) - ymin) / (ymax - ymin) * ph; };

        std::ostringstream o;
        o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
        o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
        o << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" << escape(spec.title) << "</text>\n";
        o << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph << "\" fill=\"none\" stroke=\"black\"/>\n";

        for (int i = 0; i <= 5; ++i)
        {
            const double x = xmin + (xmax - xmin) * i / 5.0;
            o << "<line x1=\"" << px(x) << "\" y1=\"" << top + ph << "\" x2=\"" << px(x) << "\" y2=\"" << top << "\" stroke=\"#ddd\"/>\n";
            o << "<text x=\"" << px(x) << "\" y=\"" << top + ph + 18 << "\" text-anchor=\"middle\">" << num(x) << "</text>\n";
        }
        if (spec.log_y)
        {
            const int step = std::max(1, int(std::ceil((ymax - ymin) / 10.0)));
            for (int e = int(ymin); e <= int(ymax); e += step)
            {
                const double y = top + ph - (e - ymin) / (ymax - ymin) * ph;
                o << "<line x1=\"" << left << "\" y1=\"" << y << "\" x2=\"" << left + pw << "\" y2=\"" << y << "\" stroke=\"#ddd\"/>\n";
                o << "<text x=\"" << left - 6 << "\" y=\"" << y + 4 << "\" text-anchor=\"end\">1e" << e << "</text>\n";
            }
        }
        else
        {
            for (int i = 0; i <= 5; ++i)
            {
                const double v = ymin + (ymax - ymin) * i / 5.0;
                const double y = top + ph - (v - ymin) / (ymax - ymin) * ph;
                o << "<line x1=\"" << left << "\" y1=\"" << y << "\" x2=\"" << left + pw << "\" y2=\"" << y << "\" stroke=\"#ddd\"/>\n";
                o << "<text x=\"" << left - 6 << "\" y=\"" << y + 4 << "\" text-anchor=\"end\">" << num(v) << "</text>\n";
            }
        }
        o << "<text x=\"" << left + pw / 2 << "\" y=\"" << height - 15 << "\" text-anchor=\"middle\">" << escape(spec.x_label) << "</text>\n";
        o << "<text transform=\"translate(18," << top + ph / 2 << ") rotate(-90)\" text-anchor=\"middle\">" << escape(spec.y_label) << "</text>\n";

        for (std::size_t i = 0; i < series.size(); ++i)
        {
            const auto &s = series[i];
            const char *color = palette[i % std::size(palette)];
            std::vector<std::pair<double, double>> pts;
            for (const auto &[x, y] : s.points)
                if (std::isfinite(x) && std::isfinite(y) && (!spec.log_y || y > 0.0))
                    pts.emplace_back(px(x), py(y));
            if (s.markers_only)
            {
                for (const auto &[x, y] : pts)
                    o << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"3\" fill=\"none\" stroke=\"" << color << "\"/>\n";
            }
            else if (!pts.empty())
            {
                o << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
                for (const auto &[x, y] : pts)
                    o << x << ',' << y << ' ';
                o << "\"/>\n";
            }
            const double ly = top + 12 + 16.0 * i;
            o << "<line x1=\"" << left + pw + 10 << "\" y1=\"" << ly << "\" x2=\"" << left + pw + 30 << "\" y2=\"" << ly << "\" stroke=\"" << color
              << "\"" << (s.markers_only ? " stroke-dasharray=\"2,3\"" : "") << "/>\n";
            o << "<text x=\"" << left + pw + 34 << "\" y=\"" << ly + 4 << "\">" << escape(s.label) << "</text>\n";
        }
        o << "</svg>\n";
        return o.str();
    }
}
