// Copyright 2026 The rotframe Authors
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

#include <algorithm>
#include <cstddef>
#include <functional>
#include <future>
#include <string>
#include <vector>

namespace rotframe {

enum class AxisSpacing { linear, logarithmic };

/// `count` points from start to stop inclusive. Throws DomainError for
/// count < 1, a decreasing range, or a logarithmic range touching zero.
std::vector<double> make_axis(double start, double stop, int count,
                              AxisSpacing spacing = AxisSpacing::linear);

AxisSpacing parse_axis_spacing(const std::string& name);

/// Throws DomainError unless the values are finite and strictly increasing.
void require_increasing(const std::vector<double>& axis, const std::string& what);

/// Evaluates compute(0..count-1) on up to `threads` concurrent workers and
/// hands results to `sink` strictly in index order. At most `threads`
/// results are held at once.
template <class Point>
void run_ordered(std::size_t count, int threads, const std::function<Point(std::size_t)>& compute,
                 const std::function<void(const Point&)>& sink) {
  const std::size_t width = static_cast<std::size_t>(std::max(1, threads));
  if (width == 1) {
    for (std::size_t i = 0; i < count; ++i) sink(compute(i));
    return;
  }
  for (std::size_t first = 0; first < count; first += width) {
    const std::size_t last = std::min(count, first + width);
    std::vector<std::future<Point>> batch;
    batch.reserve(last - first);
    for (std::size_t i = first; i < last; ++i)
      batch.push_back(std::async(std::launch::async, compute, i));
    for (auto& f : batch) sink(f.get());
  }
}

}  // namespace rotframe
