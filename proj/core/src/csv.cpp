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

#include "hetf/csv.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace hetf::csv {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";  // folds -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string quote(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

Writer::Writer(std::ostream& os, std::vector<std::string> header) : os_(os), header_size_(header.size()) {
  for (const auto& h : header) field(h);
  end_row();
}

void Writer::sep() {
  if (col_ == header_size_) throw std::logic_error("csv: row has more fields than the header");
  if (col_ > 0) os_ << ',';
  ++col_;
}

Writer& Writer::field(std::string_view s) {
  sep();
  os_ << quote(s);
  return *this;
}

Writer& Writer::field(double v) {
  sep();
  os_ << format_number(v);
  return *this;
}

Writer& Writer::field(long v) {
  sep();
  os_ << v;
  return *this;
}

void Writer::end_row() {
  if (col_ != header_size_) throw std::logic_error("csv: row has fewer fields than the header");
  os_ << "\r\n";
  col_ = 0;
}

}  // namespace hetf::csv
