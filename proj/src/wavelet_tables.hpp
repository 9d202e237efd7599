/*
Copyright 2026 The wavesr Authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
you may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <vector>

#include "wavesr/dwt.hpp"

namespace wavesr::detail {

// Raw registry rows. Orthogonal rows carry only dec_lo; the other three tap
// arrays are derived when the FilterBank is built.
struct BankEntry {
  const char* name;
  bool orthogonal;
  SymmetricExtension symmetric_extension;
  int dec_lo_offset;
  int dec_hi_offset;
  int rec_lo_offset;
  int rec_hi_offset;
  std::vector<double> dec_lo;
  std::vector<double> dec_hi;
  std::vector<double> rec_lo;
  std::vector<double> rec_hi;
};

const std::vector<BankEntry>& bank_entries();

}  // namespace wavesr::detail
