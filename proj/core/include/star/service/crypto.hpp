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

#ifndef STAR_SERVICE_CRYPTO_HPP_
#define STAR_SERVICE_CRYPTO_HPP_

#include <cstddef>
#include <string>

namespace star::service {

/// Hex of `bytes` random bytes.
std::string random_hex(std::size_t bytes);

/// Hex SHA-256, used to store bearer tokens.
std::string sha256_hex(const std::string& data);

/// Argon2id via libsodium. `fast` selects the minimum cost, for tests.
std::string hash_password(const std::string& password, bool fast = false);
bool verify_password(const std::string& credential, const std::string& password);

}  // namespace star::service

#endif  // STAR_SERVICE_CRYPTO_HPP_
