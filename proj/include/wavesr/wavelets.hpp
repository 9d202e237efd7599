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

#include <string>
#include <string_view>
#include <vector>

#include "wavesr/dwt.hpp"

namespace wavesr {

/// Registered single-level wavelet by name, e.g. "db4", "bior2.6".
///
/// Throws wavesr::Error listing the valid names when `name` is unknown.
/// "haar" and "db1" are the same bank under two names.
const FilterBank& get_wavelet(std::string_view name);

bool is_registered(std::string_view name);

/// The 36 registered names in family order: haar, db, sym, coif, bior, rbio.
std::vector<std::string> list_wavelets();

/// Self-check magnitudes for a filter bank. All fields are >= 0.
struct PrReport {
  double max_roundtrip_error = 0.0;
  double lowpass_sum_error = 0.0;
  double highpass_sum_error = 0.0;
  /// Double-shift orthogonality of dec_lo; 0 for biorthogonal banks.
  double orthogonality_error = 0.0;
};

/// Measures round trips on seeded probe signals in periodic mode (where the
/// synthesis taps are exercised directly) and in the bank's default mode,
/// plus the tap-sum identities sum(lo) = sqrt(2), sum(hi) = 0.
PrReport verify_filterbank(const FilterBank& fb);

}  // namespace wavesr
