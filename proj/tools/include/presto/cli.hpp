// Copyright 2026 The Presto Authors
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

#ifndef PRESTO_CLI_HPP_
#define PRESTO_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "presto/device.hpp"

namespace presto::cli {

enum ExitCode : int {
  kOk = 0,
  kSourceError = 1,   // parse, context, interpreter or codegen failure
  kDataError = 2,     // malformed cost table or device file
  kTooManyConstraints = 3,
  kUsageError = 4,    // bad arguments or preference strings
  kIoError = 5,
};

/// Runs the compiler driver. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const DeviceInfoProvider& device_info = probe_local_device);

}  // namespace presto::cli

#endif  // PRESTO_CLI_HPP_
