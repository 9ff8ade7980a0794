// Copyright 2026 purext contributors
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

#include <stdexcept>
#include <string>

namespace purext {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotHermitian final : Error {
  using Error::Error;
};
struct NoConvergence final : Error {
  using Error::Error;
};
struct SingularMatrix final : Error {
  using Error::Error;
};
struct DefectiveMatrix final : Error {
  using Error::Error;
};
struct NotNormalized final : Error {
  using Error::Error;
};
struct DegenerateTop final : Error {
  using Error::Error;
};
struct InvalidRegime final : Error {
  using Error::Error;
};
struct ZeroProbability final : Error {
  using Error::Error;
};
struct SpecMismatch final : Error {
  using Error::Error;
};
struct UsageError final : Error {
  using Error::Error;
};
struct IoError final : Error {
  using Error::Error;
};

} // namespace purext
