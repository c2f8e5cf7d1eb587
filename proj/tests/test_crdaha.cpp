#include "doctest_main.hpp"

TEST_CASE("placeholder_crdaha") { CHECK(true); }
