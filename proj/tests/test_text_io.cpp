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

#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "tcompact/error.hpp"
#include "tcompact/text_io.hpp"

using namespace tcompact;

TEST_CASE("rationals") {
  CHECK(parse_rat("3/6") == make_rat(1, 2));
  CHECK(parse_rat("-2") == make_rat(-2));
  CHECK(format_rat(make_rat(4, 8)) == "1/2");
  CHECK_THROWS_AS(parse_rat("1/0"), Error);
  CHECK_THROWS_AS(parse_rat("x"), Error);
}

TEST_CASE("intervals") {
  const Interval i = parse_interval("(1/4,3/4]");
  CHECK(i.lo == make_rat(1, 4));
  CHECK_FALSE(i.lo_closed);
  CHECK(i.hi_closed);
  const Interval p = parse_interval("1/3");
  CHECK(p.lo == p.hi);
  CHECK(p.lo_closed);
  CHECK_THROWS_AS(parse_interval("[1/2,1/4"), Error);
  CHECK(parse_interval_set("# comment\n[0,1/4]\n[3/4,1] # tail\n").intervals().size() == 2);
  CHECK(parse_interval_set("{}").empty());
  CHECK(parse_interval_set("[0,1/2) [1/4,1]").str() == "[0,1]");
}

TEST_CASE("other set formats") {
  CHECK(parse_cylinder_set("- 0").words().size() == 1);
  CHECK(parse_cylinder_set("{}").empty());
  CHECK_THROWS_AS(parse_cylinder_set("012"), Error);
  CHECK(parse_product_set("[0,1]x[0,1/2]").contains({make_rat(1), make_rat(1, 2)}));
  CHECK_THROWS_AS(parse_product_set("[0,1]"), Error);
  const ProductSet p = parse_product_set("[0,1/2]x(1/4,3/4)");
  CHECK(parse_product_set(p.str()) == p);
}

TEST_CASE("backend dispatch") {
  CHECK(std::holds_alternative<IntervalSet>(parse_sym_set(Backend(SpaceKind::GrayUnit), "[0,1]")));
  CHECK(std::holds_alternative<CylSet>(parse_sym_set(Backend(SpaceKind::Cantor), "01")));
  CHECK(std::holds_alternative<ProductSet>(parse_sym_set(Backend(SpaceKind::GraySquare), "[0,1]x[0,1]")));
  const auto xs = parse_points(Backend(SpaceKind::GraySquare), "1/2,1/3 0,1");
  REQUIRE(xs.size() == 2);
  CHECK(std::get<SquarePoint>(xs[0]).second == make_rat(1, 3));
  CHECK_THROWS_AS(parse_points(Backend(SpaceKind::GrayUnit), "3/2"), Error);
  CHECK_THROWS_AS(parse_space("hilbert"), Error);
  CHECK(parse_space("gray-square") == SpaceKind::GraySquare);
}

TEST_CASE("files") {
  const auto path = (std::filesystem::temp_directory_path() / "tcompact_text_io_test.txt").string();
  write_file(path, "[0,1]\n");
  CHECK(read_file(path) == "[0,1]\n");
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_file(path), Error);
}
