// Copyright 2026 The chainbreak Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace chainbreak {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Vector length or index out of range for the model it is used with.
class DimensionError : public Error {
  public:
    using Error::Error;
};

// Entry outside its allowed domain (non-binary x, spin not +-1, p outside [0,1]).
class ValueError : public Error {
  public:
    using Error::Error;
};

// Problem too large for an exhaustive solver or hardware graph too small.
class CapacityError : public Error {
  public:
    using Error::Error;
};

class ConfigError : public Error {
  public:
    using Error::Error;
};

class EmbeddingError : public Error {
  public:
    using Error::Error;
};

// Malformed or incomplete input data (files, samples).
class DataError : public Error {
  public:
    using Error::Error;
};

}  // namespace chainbreak
