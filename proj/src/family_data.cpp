#include "genusforge/family.hpp"

namespace genusforge {

namespace {

// Index-4 logs for K_12 (Pengelley-Jungerman) and K_24; rotation at k is
// row [k mod 4] plus k.
const std::vector<std::vector<int>> kTable1 = {
    {11, 8, 9, 1, 4, 3, 6, 2, 7, 5, 10},
    {1, 4, 3, 11, 8, 9, 6, 10, 5, 7, 2},
    {11, 1, 2, 7, 5, 10, 4, 8, 6, 9, 3},
    {1, 11, 10, 5, 7, 2, 8, 4, 6, 3, 9},
};

const std::vector<std::vector<int>> kTable2 = {
    {19, 16, 4, 1, 21, 20, 12, 8, 3, 5, 2, 13, 11, 22, 10, 17, 7, 14, 6, 15, 9, 18, 23},
    {5, 8, 20, 23, 3, 4, 12, 16, 21, 19, 22, 11, 13, 2, 14, 7, 17, 10, 18, 9, 15, 6, 1},
    {19, 20, 21, 1, 4, 23, 5, 6, 15, 9, 18, 8, 16, 10, 17, 7, 14, 12, 2, 13, 11, 22, 3},
    {5, 4, 3, 23, 20, 1, 19, 18, 9, 15, 6, 16, 8, 14, 7, 17, 10, 12, 22, 11, 13, 2, 21},
};

const char* kLogS3 =
    "3 x 1 y 31 z 29 24 20 2 21 25 15 6 16 22 7 28 8 5 23 17 10 26 9 14 12 4 11 13 w 19 30 18 27";

}  // namespace

const std::vector<std::vector<int>>& builtin_index4_rows(int table) {
  if (table == 1) return kTable1;
  if (table == 2) return kTable2;
  throw StructureError("no built-in index-4 table " + std::to_string(table));
}

Log builtin_log_s3() { return Log::parse(kLogS3, 32); }

BuiltinData builtin(int s) {
  BuiltinData data;
  data.s = s;
  switch (s) {
    case 1: data.index4_rows = kTable1; break;
    case 2: data.index4_rows = kTable2; break;
    case 3: data.log = builtin_log_s3(); break;
    default:
      throw StructureError("no built-in data for s=" + std::to_string(s) +
                           "; use search_family for s >= 4");
  }
  return data;
}

}  // namespace genusforge
