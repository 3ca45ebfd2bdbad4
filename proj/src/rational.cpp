// Copyright 2026 The tcompact Authors. All Rights Reserved.
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

#include "tcompact/rational.hpp"

#include "tcompact/error.hpp"

namespace tcompact {

Rat make_rat(long num, long den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') return false;
    }
    return true;
  };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw Error(ErrorKind::Parse, "bad rational '" + s + "'");
    return Rat(mpz_class(s.front() == '+' ? s.substr(1) : s));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+') {
    throw Error(ErrorKind::Parse, "bad rational '" + s + "'");
  }
  mpz_class n(num.front() == '+' ? num.substr(1) : num);
  mpz_class d(den);
  if (d == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + s + "'");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string format_rat(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace tcompact
