/* Copyright (C) 2026 The pembed Authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace pembed {

// Malformed or inconsistent input (bad table, rank mismatch, non-epi map...).
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A desk-scale size cap was exceeded.
class CapExceeded : public std::length_error {
public:
  using std::length_error::length_error;
};

// Exponent or coordinate arithmetic left the int64 range.
class RangeError : public std::overflow_error {
public:
  using std::overflow_error::overflow_error;
};

} // namespace pembed
