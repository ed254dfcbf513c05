// SPDX-License-Identifier: Apache-2.0
//
// hetf: heterogeneous F composite fading channel and resource allocation library
// Copyright (C) 2026 The hetf authors
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

#pragma once

// CSV output with RFC 4180 quoting. Numbers are written with 12 significant digits.

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace hetf::csv {

std::string format_number(double v);
std::string quote(std::string_view field);

class Writer {
 public:
  Writer(std::ostream& os, std::vector<std::string> header);

  Writer& field(std::string_view s);
  Writer& field(double v);
  Writer& field(long v);
  Writer& field(int v) { return field(static_cast<long>(v)); }
  void end_row();

  std::size_t columns() const { return header_size_; }

 private:
  void sep();
  std::ostream& os_;
  std::size_t header_size_;
  std::size_t col_ = 0;
};

}  // namespace hetf::csv
