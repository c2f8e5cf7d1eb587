#include "doctest_main.hpp"

TEST_CASE("placeholder_bm") { CHECK(true); }
