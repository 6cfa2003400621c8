// Builds the amalgamated test framework once.
#include <catch2/catch_amalgamated.cpp>
