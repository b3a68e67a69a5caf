// Copyright 2026 The leakctl Authors
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

namespace leakctl {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define LEAKCTL_DEFINE_ERROR(Name)          \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

LEAKCTL_DEFINE_ERROR(InvalidOperator);
LEAKCTL_DEFINE_ERROR(InvalidState);
LEAKCTL_DEFINE_ERROR(LabelError);
LEAKCTL_DEFINE_ERROR(DimError);
LEAKCTL_DEFINE_ERROR(ConfigError);
LEAKCTL_DEFINE_ERROR(DegenerateTrajectory);
LEAKCTL_DEFINE_ERROR(SingularAnharmonicity);
LEAKCTL_DEFINE_ERROR(DivergentDuration);
LEAKCTL_DEFINE_ERROR(IntegrationError);
LEAKCTL_DEFINE_ERROR(FitError);
LEAKCTL_DEFINE_ERROR(OptError);

#undef LEAKCTL_DEFINE_ERROR

}  // namespace leakctl
