// SPDX-License-Identifier: Apache-2.0
//
// riscope: deterministic urban coverage simulation with reflecting surfaces
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

#ifndef RISCOPE_ERRORS_HPP
#define RISCOPE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace riscope {

// A scenario document that cannot be parsed or violates a model invariant.
// `field` carries the JSON path of the offending value when known.
class ScenarioError : public std::runtime_error {
public:
    ScenarioError(std::string field, const std::string& message)
        : std::runtime_error(field.empty() ? message : field + ": " + message), field_(std::move(field))
    {
    }

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

// A propagation model evaluated outside its range of validity.
class ModelRangeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A model range error raised while sweeping a grid, tagged with where it happened.
class SweepPointError : public ModelRangeError {
public:
    SweepPointError(std::size_t x, std::size_t y, int cell_id, const std::string& cause)
        : ModelRangeError("grid point (" + std::to_string(x) + ", " + std::to_string(y) + "), cell " +
                          std::to_string(cell_id) + ": " + cause),
          x_(x), y_(y), cell_id_(cell_id)
    {
    }

    std::size_t x() const noexcept { return x_; }
    std::size_t y() const noexcept { return y_; }
    int cell_id() const noexcept { return cell_id_; }

private:
    std::size_t x_;
    std::size_t y_;
    int cell_id_;
};

}  // namespace riscope

#endif  // RISCOPE_ERRORS_HPP
