#include <array>

#include "agperf/cli.hpp"

namespace agperf::cli {

namespace {

// Published values of (I), (II), (III) and a_{2g-1}^{(g)}.
constexpr std::array<GoldenRecord, 6> kGolden{{
    {2, "1/12", "-3/2", "1/2", "-11/12"},
    {3, "-1/80", "-25/24", "5/24", "-203/240"},
    {4, "1/672", "-49/80", "7/80", "-1759/3360"},
    {5, "-1/1296", "-3637/2520", "1063/7560", "-59123/45360"},
    {6, "1/220", "-23837/315", "1639/315", "-976649/13860"},
    {7, "-11/18", "-4194073/189", "17594928013/16329600", "-49254708341/2332800"},
}};

}  // namespace

std::span<const GoldenRecord> golden_table() { return kGolden; }

}  // namespace agperf::cli
