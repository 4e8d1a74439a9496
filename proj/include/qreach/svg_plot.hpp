// Copyright 2026 The qaoa-reach Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qreach::svg {

struct Point {
    double x = 0.0;
    double y = 0.0;
    double err = 0.0;     ///< symmetric vertical error bar; 0 draws none
    bool hollow = false;  ///< open marker, used for censored values
};

struct Series {
    std::string label;
    std::vector<Point> points;
    bool lines = true;
    bool markers = true;
};

struct ReferenceLine {
    double x;
    std::string label;
};

/// Minimal x/y chart: linear axes (optionally log y), one colour per series,
/// a legend, and dashed vertical reference lines.
class Chart {
  public:
    Chart(std::string title, std::string x_label, std::string y_label)
        : title_(std::move(title)), x_label_(std::move(x_label)), y_label_(std::move(y_label)) {}

    void add(Series s) { series_.push_back(std::move(s)); }
    void add_reference(ReferenceLine line) { refs_.push_back(std::move(line)); }
    void set_log_y(bool on) { log_y_ = on; }
    /// Forces the y range to include zero (off by default for log axes).
    void set_y_from_zero(bool on) { y_from_zero_ = on; }

    [[nodiscard]] bool empty() const;
    [[nodiscard]] std::string render(int width = 720, int height = 480) const;

  private:
    std::string title_;
    std::string x_label_;
    std::string y_label_;
    std::vector<Series> series_;
    std::vector<ReferenceLine> refs_;
    bool log_y_ = false;
    bool y_from_zero_ = true;
};

/// Round tick positions covering [lo, hi], roughly `target` of them.
[[nodiscard]] std::vector<double> nice_ticks(double lo, double hi, int target = 6);

[[nodiscard]] std::string xml_escape(const std::string &s);

} // namespace qreach::svg
