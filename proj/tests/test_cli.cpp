#include "doctest_main.hpp"

TEST_CASE("placeholder_cli") { CHECK(true); }
