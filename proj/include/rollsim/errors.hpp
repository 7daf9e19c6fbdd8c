// Copyright 2026 The rollsim Authors
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
#include <utility>

namespace rollsim
{

/// Invalid configuration. `key()` names the offending field when there is one.
class ConfigError : public std::runtime_error
{
public:
  explicit ConfigError(const std::string & message, std::string key = {})
  : std::runtime_error(message), key_(std::move(key))
  {
  }

  const std::string & key() const noexcept { return key_; }

private:
  std::string key_;
};

/// Non-finite or out-of-domain argument passed to a model or control law.
class InputError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace rollsim
