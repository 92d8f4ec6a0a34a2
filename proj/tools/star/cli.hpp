// Copyright 2026 The star-engine Authors
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

#ifndef STAR_TOOLS_CLI_HPP_
#define STAR_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>

#include "star/pipeline.hpp"

namespace star::cli {

enum ExitStatus : int { kOk = 0, kDiagnostics = 1, kUsage = 2, kEngine = 3 };

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err);

/// `format` is "raw" or "model".
int cmd_read(const std::string& path, const std::string& format,
             const ReadOptions& options, std::ostream& out, std::ostream& err);

/// `format` is "graph" or "dot".
int cmd_graph(const std::string& path, const std::string& format,
              std::ostream& out, std::ostream& err);

/// Full argument handling, argv[0] included.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace star::cli

#endif  // STAR_TOOLS_CLI_HPP_
