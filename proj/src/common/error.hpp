/*
   Copyright 2026 The secrecy-mimo Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace secrecy {

/// Root of the library's exception hierarchy. The C API maps each subclass
/// onto a status code, so new subclasses need an entry there as well.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Evaluation at a pole of the gamma function (or a contour through one).
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Iterative procedure (quadrature, root finding) failed to reach tolerance.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// Malformed or inconsistent configuration document.
class ConfigError : public Error {
public:
    ConfigError(int line, const std::string& what)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what)
        , line_(line)
    {
    }

    int line() const noexcept { return line_; }

private:
    int line_;
};

} // namespace secrecy
