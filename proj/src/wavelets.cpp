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

#include "wavesr/wavelets.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include "wavelet_tables.hpp"
#include "wavesr/error.hpp"

namespace wavesr {

namespace {

FilterBank build(const detail::BankEntry& e, const char* name) {
  FilterBank fb;
  fb.name = name;
  fb.orthogonal = e.orthogonal;
  fb.symmetric_extension = e.symmetric_extension;
  fb.dec_lo_offset = e.dec_lo_offset;
  fb.dec_hi_offset = e.dec_hi_offset;
  fb.rec_lo_offset = e.rec_lo_offset;
  fb.rec_hi_offset = e.rec_hi_offset;
  fb.dec_lo = e.dec_lo;
  if (e.orthogonal) {
    const std::size_t len = e.dec_lo.size();
    fb.dec_hi.resize(len);
    for (std::size_t k = 0; k < len; ++k) {
      fb.dec_hi[k] = (k % 2 == 0 ? 1.0 : -1.0) * e.dec_lo[len - 1 - k];
    }
    fb.rec_lo = fb.dec_lo;
    fb.rec_hi = fb.dec_hi;
  } else {
    fb.dec_hi = e.dec_hi;
    fb.rec_lo = e.rec_lo;
    fb.rec_hi = e.rec_hi;
  }
  fb.validate();
  return fb;
}

struct Registry {
  std::vector<std::string> names;
  std::map<std::string, FilterBank, std::less<>> banks;
};

const Registry& registry() {
  static const Registry reg = [] {
    Registry r;
    for (const auto& e : detail::bank_entries()) {
      r.names.emplace_back(e.name);
      r.banks.emplace(e.name, build(e, e.name));
      if (std::string_view(e.name) == "haar") {
        r.names.emplace_back("db1");
        r.banks.emplace("db1", build(e, "db1"));
      }
    }
    return r;
  }();
  return reg;
}

}  // namespace

const FilterBank& get_wavelet(std::string_view name) {
  const auto& reg = registry();
  auto it = reg.banks.find(name);
  if (it == reg.banks.end()) {
    std::string valid;
    for (const auto& n : reg.names) valid += (valid.empty() ? "" : ", ") + n;
    throw Error("unknown wavelet '" + std::string(name) + "'; valid names: " + valid);
  }
  return it->second;
}

bool is_registered(std::string_view name) {
  const auto& reg = registry();
  return reg.banks.find(name) != reg.banks.end();
}

std::vector<std::string> list_wavelets() { return registry().names; }

PrReport verify_filterbank(const FilterBank& fb) {
  fb.validate();
  PrReport rep;
  const double sqrt2 = std::sqrt(2.0);
  auto sum = [](const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); };
  rep.lowpass_sum_error =
      std::max(std::abs(sum(fb.dec_lo) - sqrt2), std::abs(sum(fb.rec_lo) - sqrt2));
  rep.highpass_sum_error = std::max(std::abs(sum(fb.dec_hi)), std::abs(sum(fb.rec_hi)));

  if (fb.orthogonal) {
    const auto len = static_cast<std::ptrdiff_t>(fb.dec_lo.size());
    for (std::ptrdiff_t shift = 0; 2 * shift < len; ++shift) {
      double dot = 0.0;
      for (std::ptrdiff_t n = 0; n + 2 * shift < len; ++n) dot += fb.dec_lo[n] * fb.dec_lo[n + 2 * shift];
      rep.orthogonality_error =
          std::max(rep.orthogonality_error, std::abs(dot - (shift == 0 ? 1.0 : 0.0)));
    }
  }

  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<BoundaryMode> modes{BoundaryMode::periodic};
  if (fb.default_mode() != BoundaryMode::periodic) modes.push_back(fb.default_mode());
  for (std::size_t len : {8u, 16u, 33u, 64u}) {
    std::vector<double> x(len);
    for (double& v : x) v = dist(rng);
    for (BoundaryMode mode : modes) {
      const auto bands = dwt1d(x, fb, mode);
      const auto y = idwt1d(bands.approx, bands.detail, fb, mode, len);
      for (std::size_t i = 0; i < len; ++i)
        rep.max_roundtrip_error = std::max(rep.max_roundtrip_error, std::abs(x[i] - y[i]));
    }
  }
  return rep;
}

}  // namespace wavesr
