// Copyright 2026 The crfkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "state_file.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "json_writer.hpp"

namespace crfkit::cli {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PureState parse_state_file(const std::string& text, std::vector<std::string>& warnings) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("state file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("state file must be a JSON object");
  for (const char* key : {"parties", "local_dim", "amplitudes"}) {
    if (!doc.contains(key)) throw ValidationError(std::string("state file is missing '") + key + "'");
  }
  if (!doc["parties"].is_number_integer() || !doc["local_dim"].is_number_integer()) {
    throw ValidationError("'parties' and 'local_dim' must be integers");
  }
  const auto parties = doc["parties"].get<std::int64_t>();
  const auto local_dim = doc["local_dim"].get<std::int64_t>();
  if (parties < 2 || parties > 64) throw ValidationError("'parties' must be >= 2");
  if (local_dim < 2 || local_dim > 1 << 20) throw ValidationError("'local_dim' must be >= 2");
  const std::size_t dim = checked_dimension(static_cast<int>(parties), static_cast<int>(local_dim));

  const Json& amps = doc["amplitudes"];
  if (!amps.is_array()) throw ValidationError("'amplitudes' must be an array");
  if (amps.size() != dim) {
    throw ValidationError("expected " + std::to_string(dim) + " amplitudes, got " + std::to_string(amps.size()));
  }
  CVector c(static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    const Json& pair = amps[i];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw ValidationError("amplitude " + std::to_string(i) + " must be a [re, im] pair");
    }
    c(static_cast<Eigen::Index>(i)) = Complex(pair[0].get<double>(), pair[1].get<double>());
  }
  if (!c.allFinite()) throw ValidationError("amplitudes must be finite");
  const double norm = c.norm();
  const double dev = std::abs(norm - 1.0);
  if (!(dev <= kMaxNormDeviation)) {
    std::ostringstream os;
    os << "state norm " << std::setprecision(17) << norm << " deviates from 1 by more than " << kMaxNormDeviation;
    throw ValidationError(os.str());
  }
  if (dev > kSilentNormTol) {
    std::ostringstream os;
    os << "state norm " << std::setprecision(17) << norm << " renormalized";
    warnings.push_back(os.str());
  }
  return normalize_state(static_cast<int>(parties), static_cast<int>(local_dim), std::move(c));
}

PureState read_state_file(const std::string& path, std::vector<std::string>& warnings) {
  return parse_state_file(read_file(path), warnings);
}

std::string format_state_file(const PureState& state) {
  Json doc;
  doc["parties"] = state.parties();
  doc["local_dim"] = state.local_dim();
  Json amps = Json::array();
  for (Eigen::Index i = 0; i < state.amplitudes().size(); ++i) {
    amps.push_back(Json::array({state.amplitudes()(i).real(), state.amplitudes()(i).imag()}));
  }
  doc["amplitudes"] = std::move(amps);
  return dump_json(doc);
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw NumericalError("SHA-256 digest failed");
  }
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) {
    os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return os.str();
}

}  // namespace crfkit::cli
