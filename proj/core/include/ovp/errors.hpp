/*
   Copyright 2026 The ovpbench Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace ovp {

/// A sampler or solver was called with a parameter outside its domain
/// (nonpositive mean, p <= c, negative order quantity, ...).
class parameter_error : public std::invalid_argument {
public:
    explicit parameter_error(const std::string& what) : std::invalid_argument(what) {}
};

/// The data cannot support the requested estimate (empty dataset,
/// all-zero demands, empty sample family).
class degenerate_data_error : public std::runtime_error {
public:
    explicit degenerate_data_error(const std::string& what) : std::runtime_error(what) {}
};

/// The bisection bracket could not be made to straddle a sign change.
class no_root_error : public std::runtime_error {
public:
    explicit no_root_error(const std::string& what) : std::runtime_error(what) {}
};

/// A policy failed inside the evaluation sweep; the message carries
/// (theta, policy, replicate) context.
class evaluation_error : public std::runtime_error {
public:
    explicit evaluation_error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or inconsistent configuration; the message names the field.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ovp
