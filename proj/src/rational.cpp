// Copyright 2026 The wpscount Authors
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

#include "wps/rational.hpp"

#include <stdexcept>

namespace wps {

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const auto valid = [](const std::string& s, bool allow_sign) {
    std::size_t i = allow_sign && !s.empty() && s[0] == '-' ? 1 : 0;
    return i < s.size() && s.find_first_not_of("0123456789", i) == std::string::npos;
  };
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid(num, true) || !valid(den, false)) {
    throw std::invalid_argument("cannot parse rational '" + text + "'");
  }
  const Integer d{den};
  if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  Rational q{Integer{num}, d};
  q.canonicalize();
  return q;
}

}  // namespace wps
