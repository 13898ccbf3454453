// Copyright 2026 The hochster Authors
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

#ifndef HOCHSTER_ERRORS_HPP
#define HOCHSTER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hochster {

// Malformed input file; line is 1-based.
class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// A configured cap (face count, variable count, enumeration size) was hit.
class resource_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The witness recursion produced a set whose homology check failed.  This is
// never expected; it signals an implementation bug and carries the trace.
class witness_certification_error : public std::runtime_error {
public:
    witness_certification_error(const std::string& what, std::string trace)
        : std::runtime_error(what), trace_(std::move(trace)) {}
    const std::string& trace() const { return trace_; }

private:
    std::string trace_;
};

}  // namespace hochster

#endif  // HOCHSTER_ERRORS_HPP
