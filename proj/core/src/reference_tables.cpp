// Reference classification data: M-sets, class counts, four-qubit classes and h zero patterns.
#include "entinv/reference_tables.hpp"

#include "entinv/errors.hpp"
#include "entinv/rational.hpp"

namespace entinv::tables {

const std::vector<MSetEntry>& m_set_table() {
  static const std::vector<MSetEntry> table = {
      {{1, 1, 1}, {2}},
      {{1, 2, 2}, {5}},
      {{1, 3, 3}, {10}},
      {{1, 4, 4}, {17}},
      {{1, 5, 5}, {26}},
      {{1, 6, 6}, {37}},
      {{2, 2, 2}, {4, 5}},
      {{2, 2, 3}, {5, 6}},
      {{2, 2, 4}, {8}},
      {{2, 3, 3}, {4, 5, 6, 7, 8}},
      {{2, 3, 4}, {5, 6, 7, 8, 10}},
      {{2, 3, 5}, {8, 10}},
      {{2, 3, 6}, {13}},
      {{2, 4, 4}, {5, 6, 7, 8, 9, 10, 11, 12, 13}},
      {{2, 4, 5}, {5, 6, 7, 8, 9, 10, 11, 12, 13, 16}},
      {{2, 4, 6}, {8, 9, 10, 12, 13, 15}},
      {{2, 4, 7}, {13, 16}},
      {{2, 4, 8}, {20}},
      {{2, 5, 5}, {6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 19, 20}},
      {{2, 5, 6}, {5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 24}},
      {{2, 5, 7}, {8, 10, 11, 12, 13, 14, 15, 16, 17, 18, 20, 22}},
      {{2, 5, 8}, {13, 15, 16, 19, 20, 22}},
      {{2, 5, 9}, {20, 24}},
      {{2, 5, 10}, {29}},
      {{2, 6, 6}, {7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 28, 29}},
      {{2, 6, 7}, {5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 24, 25, 26, 34}},
      {{2, 6, 8}, {8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 31}},
      {{2, 6, 9}, {13, 14, 16, 17, 18, 19, 20, 22, 23, 24, 25, 26, 29, 30}},
      {{2, 6, 10}, {20, 23, 24, 28, 29, 31}},
      {{2, 6, 11}, {29, 34}},
      {{2, 6, 12}, {40}},
      {{3, 3, 3}, {2, 3, 4, 5, 6, 7, 8, 10}},
      {{3, 3, 4}, {2, 3, 4, 5, 6, 7, 8, 9, 10, 11}},
      {{3, 3, 5}, {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 14}},
      {{3, 3, 6}, {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}},
      {{3, 3, 7}, {4, 5, 6, 7, 8, 9, 10, 11, 14}},
      {{3, 3, 8}, {10, 11, 14}},
      {{3, 3, 9}, {18}},
      {{3, 4, 4}, {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 14}},
      {{3, 4, 5}, {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16}},
      {{3, 4, 6}, {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 20}},
      {{3, 4, 7}, {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17}},
      {{3, 4, 8}, {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 19}},
      {{3, 4, 9}, {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 20}},
      {{3, 4, 10}, {5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 19, 20}},
      {{3, 4, 11}, {14, 16, 20}},
      {{3, 4, 12}, {25}},
  };
  return table;
}

const std::vector<ClassCountEntry>& class_count_table() {
  static const std::vector<ClassCountEntry> table = {
      {{2, 2, 2}, 7, false},
      {{2, 2, 3}, 9, false},
      {{2, 2, 4}, 10, true},
      {{2, 3, 3}, 17, false},
      {{2, 3, 4}, 23, false},
      {{2, 3, 5}, 25, false},
      {{2, 3, 6}, 26, true},
      {{2, 4, 4}, 39, false},
      {{2, 4, 5}, 51, false},
      {{2, 4, 6}, 58, false},
      {{2, 4, 7}, 60, false},
      {{2, 4, 8}, 61, true},
      {{2, 5, 5}, 77, false},
      {{2, 5, 6}, 99, false},
      {{2, 5, 7}, 113, false},
      {{2, 5, 8}, 120, false},
      {{2, 5, 9}, 122, false},
      {{2, 5, 10}, 123, true},
      {{2, 6, 6}, 141, false},
      {{2, 6, 7}, 177, false},
      {{2, 6, 8}, 203, false},
      {{2, 6, 9}, 219, false},
      {{2, 6, 10}, 226, false},
      {{2, 6, 11}, 228, false},
      {{2, 6, 12}, 229, true},
      {{3, 3, 3}, 39, false},
      {{3, 3, 4}, 60, false},
      {{3, 3, 5}, 75, false},
      {{3, 3, 6}, 88, false},
      {{3, 3, 7}, 97, false},
      {{3, 3, 8}, 100, false},
      {{3, 3, 9}, 101, true},
      {{3, 4, 4}, 103, false},
      {{3, 4, 5}, 143, false},
      {{3, 4, 6}, 178, false},
      {{3, 4, 7}, 205, false},
      {{3, 4, 8}, 226, false},
      {{3, 4, 9}, 244, false},
      {{3, 4, 10}, 258, false},
      {{3, 4, 11}, 261, false},
      {{3, 4, 12}, 262, true},
  };
  return table;
}

const std::vector<FourQubitRow>& four_qubit_rows() {
  static const std::vector<FourQubitRow> rows = {
      {"C0", {2, 2, 2, 2, 8, 8, 8, 8, 16, 16, 16, 16, 16, 16, 16, 16, 16, 16, 16}, "0"},
      {"C1", {1, 1, 1, 1, 4, 4, 4, 4, 10, 10, 10, 10, 10, 10, 8, 8, 8, 8, 11}, "[1,1,1,1]"},
      {"C2", {0, 0, 1, 1, 3, 3, 2, 2, 9, 7, 7, 7, 7, 10, 3, 3, 7, 7, 10}, "[1,1,1,1]+[2,2,1,1]"},
      {"C3", {0, 1, 0, 1, 3, 2, 3, 2, 7, 9, 7, 7, 10, 7, 3, 7, 3, 7, 10}, "[1,1,1,1]+[2,1,2,1]"},
      {"C4", {0, 1, 1, 0, 2, 3, 3, 2, 7, 7, 9, 10, 7, 7, 3, 7, 7, 3, 10}, "[1,1,1,1]+[2,1,1,2]"},
      {"C5", {1, 0, 0, 1, 3, 2, 2, 3, 7, 7, 10, 9, 7, 7, 7, 3, 3, 7, 10}, "[1,1,1,1]+[1,2,2,1]"},
      {"C6", {1, 0, 1, 0, 2, 3, 2, 3, 7, 10, 7, 7, 9, 7, 7, 3, 7, 3, 10}, "[1,1,1,1]+[1,2,1,2]"},
      {"C7", {1, 1, 0, 0, 2, 2, 3, 3, 10, 7, 7, 7, 7, 9, 7, 7, 3, 3, 10}, "[1,1,1,1]+[1,1,2,2]"},
      {"C8", {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 9, 9, 0, 0, 0, 0, 0, 0, 9}, "[1,1,1,1]+[1,2,2,1]+[2,1,1,2]+[2,2,2,2]"},
      {"C9", {0, 0, 0, 0, 0, 0, 0, 0, 0, 9, 0, 0, 9, 0, 0, 0, 0, 0, 9}, "[1,1,1,1]+[1,2,1,2]+[2,1,2,1]+[2,2,2,2]"},
      {"C10", {0, 0, 0, 0, 0, 0, 0, 0, 9, 0, 0, 0, 0, 9, 0, 0, 0, 0, 9}, "[1,1,1,1]+[1,1,2,2]+[2,2,1,1]+[2,2,2,2]"},
      {"C11", {0, 0, 0, 1, 1, 2, 2, 2, 5, 5, 7, 5, 7, 7, 2, 2, 2, 7, 8}, "[1,1,1,1]+[2,1,2,1]+[2,2,1,1]"},
      {"C12", {0, 0, 1, 0, 2, 1, 2, 2, 5, 7, 5, 7, 5, 7, 2, 2, 7, 2, 8}, "[1,1,1,1]+[1,2,1,2]+[2,2,1,1]"},
      {"C13", {0, 1, 0, 0, 2, 2, 1, 2, 7, 5, 5, 7, 7, 5, 2, 7, 2, 2, 8}, "[1,1,1,1]+[1,1,2,2]+[2,1,2,1]"},
      {"C14", {1, 0, 0, 0, 2, 2, 2, 1, 7, 7, 7, 5, 5, 5, 7, 2, 2, 2, 8}, "[1,1,1,1]+[1,1,2,2]+[1,2,1,2]"},
      {"C15", {0, 0, 0, 1, 0, 2, 2, 2, 4, 4, 7, 4, 7, 7, 2, 2, 2, 7, 7}, "[1,1,1,1]+[2,2,2,1]"},
      {"C16", {0, 0, 1, 0, 2, 0, 2, 2, 4, 7, 4, 7, 4, 7, 2, 2, 7, 2, 7}, "[1,1,1,1]+[2,2,1,2]"},
      {"C17", {0, 1, 0, 0, 2, 2, 0, 2, 7, 4, 4, 7, 7, 4, 2, 7, 2, 2, 7}, "[1,1,1,1]+[2,1,2,2]"},
      {"C18", {1, 0, 0, 0, 2, 2, 2, 0, 7, 7, 7, 4, 4, 4, 7, 2, 2, 2, 7}, "[1,1,1,1]+[1,2,2,2]"},
      {"C19", {0, 0, 0, 0, 1, 1, 1, 1, 5, 5, 5, 5, 5, 5, 2, 2, 2, 2, 7}, "[1,1,1,1]+[2,1,1,2]+[2,1,2,1]+[2,2,1,1]"},
      {"C20", {0, 0, 0, 0, 1, 0, 0, 1, 2, 2, 4, 5, 2, 2, 1, 1, 1, 1, 6}, "[1,1,1,1]+[1,2,2,1]+[2,2,1,2]"},
      {"C21", {0, 0, 0, 0, 0, 1, 1, 0, 2, 2, 5, 4, 2, 2, 1, 1, 1, 1, 6}, "[1,1,1,1]+[2,1,1,2]+[2,2,2,1]"},
      {"C22", {0, 0, 0, 0, 0, 1, 0, 1, 2, 4, 2, 2, 5, 2, 1, 1, 1, 1, 6}, "[1,1,1,1]+[1,2,1,2]+[2,2,2,1]"},
      {"C23", {0, 0, 0, 0, 1, 0, 1, 0, 2, 5, 2, 2, 4, 2, 1, 1, 1, 1, 6}, "[1,1,1,1]+[2,1,2,1]+[2,2,1,2]"},
      {"C24", {0, 0, 0, 0, 0, 0, 1, 1, 4, 2, 2, 2, 2, 5, 1, 1, 1, 1, 6}, "[1,1,1,1]+[1,1,2,2]+[2,2,2,1]"},
      {"C25", {0, 0, 0, 0, 1, 1, 0, 0, 5, 2, 2, 2, 2, 4, 1, 1, 1, 1, 6}, "[1,1,1,1]+[2,1,2,2]+[2,2,1,1]"},
      {"C26", {0, 0, 0, 0, 0, 0, 0, 0, 4, 4, 4, 4, 4, 4, 0, 0, 0, 0, 6}, "[1,1,1,1]+[2,2,2,2]"},
      {"C27", {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 5, 5, 0, 0, 0, 0, 0, 0, 6}, "[1,1,1,1]+[1,1,2,2]+[1,2,1,2]+[2,1,2,1]+[2,2,1,1]"},
      {"C28", {0, 0, 0, 0, 0, 0, 0, 0, 0, 5, 0, 0, 5, 0, 0, 0, 0, 0, 6}, "[1,1,1,1]+[1,1,2,2]+[1,2,2,1]+[2,1,1,2]+[2,2,1,1]"},
      {"C29", {0, 0, 0, 0, 0, 0, 0, 0, 5, 0, 0, 0, 0, 5, 0, 0, 0, 0, 6}, "[1,1,1,1]+[1,2,1,2]+[1,2,2,1]+[2,1,1,2]+[2,1,2,1]"},
      {"C30", {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 6}, "[1,1,1,1]-[1,1,1,2]-[1,1,2,1]-[1,2,1,1]+[1,2,2,1]+[1,2,2,2]-[2,1,1,1]+[2,1,1,2]+[2,1,2,2]+[2,2,1,2]+[2,2,2,1]+[2,2,2,2]"},
      {"C31", {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 6}, "[1,1,1,1]-[1,1,1,2]-[1,1,2,1]-[1,2,1,1]+[1,2,1,2]+[1,2,2,2]-[2,1,1,1]+[2,1,2,1]+[2,1,2,2]+[2,2,1,2]+[2,2,2,1]+[2,2,2,2]"},
      {"C32", {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 6}, "[1,1,1,1]-[1,1,1,2]-[1,1,2,1]+[1,1,2,2]-[1,2,1,1]+[1,2,2,2]-[2,1,1,1]+[2,1,2,2]+[2,2,1,1]+[2,2,1,2]+[2,2,2,1]+[2,2,2,2]"},
      {"C33", {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 6}, ""},
      {"C34", {0, 0, 0, 0, 0, 0, 0, 1, 2, 2, 2, 2, 2, 2, 0, 1, 1, 1, 5}, "[1,1,1,1]+[1,2,2,1]+[2,1,1,1]+[2,2,1,2]"},
      {"C35", {0, 0, 0, 0, 0, 0, 1, 0, 2, 2, 2, 2, 2, 2, 1, 0, 1, 1, 5}, "[1,1,1,1]+[1,1,2,2]+[1,2,1,1]+[2,2,2,1]"},
      {"C36", {0, 0, 0, 0, 0, 1, 0, 0, 2, 2, 2, 2, 2, 2, 1, 1, 0, 1, 5}, "[1,1,1,1]+[1,1,2,1]+[1,2,2,2]+[2,1,1,2]"},
      {"C37", {0, 0, 0, 0, 1, 0, 0, 0, 2, 2, 2, 2, 2, 2, 1, 1, 1, 0, 5}, "[1,1,1,1]+[1,1,1,2]+[2,1,2,2]+[2,2,1,1]"},
      {"C38", {0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 4, 4, 2, 2, 0, 0, 0, 0, 5}, "[1,1,1,1]+[1,2,2,1]+[2,1,1,2]"},
      {"C39", {0, 0, 0, 0, 0, 0, 0, 0, 2, 4, 2, 2, 4, 2, 0, 0, 0, 0, 5}, "[1,1,1,1]+[1,2,1,2]+[2,1,2,1]"},
      {"C40", {0, 0, 0, 0, 0, 0, 0, 0, 4, 2, 2, 2, 2, 4, 0, 0, 0, 0, 5}, "[1,1,1,1]+[1,1,2,2]+[2,2,1,1]"},
      {"C41", {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 5, 0, 0, 0, 0, 0, 0, 5}, "[1,1,1,1]+[1,1,2,1]+[1,2,1,1]+[2,1,2,2]+[2,2,1,2]"},
      {"C42", {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 5, 4, 0, 0, 0, 0, 0, 0, 5}, "[1,1,1,1]+[1,1,1,2]+[1,2,2,2]+[2,1,1,1]+[2,2,2,1]"},
      {"C43", {0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 5, 0, 0, 0, 0, 0, 5}, "[1,1,1,1]+[1,1,1,2]+[1,2,1,1]+[2,1,2,2]+[2,2,2,1]"},
      {"C44", {0, 0, 0, 0, 0, 0, 0, 0, 0, 5, 0, 0, 4, 0, 0, 0, 0, 0, 5}, "[1,1,1,1]+[1,1,2,1]+[1,2,2,2]+[2,1,1,1]+[2,2,1,2]"},
      {"C45", {0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 5, 0, 0, 0, 0, 5}, "[1,1,1,1]+[1,1,1,2]+[1,1,2,1]+[2,2,1,2]+[2,2,2,1]"},
      {"C46", {0, 0, 0, 0, 0, 0, 0, 0, 5, 0, 0, 0, 0, 4, 0, 0, 0, 0, 5}, "[1,1,1,1]+[1,2,1,1]+[1,2,2,2]+[2,1,1,1]+[2,1,2,2]"},
      {"C47", {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 4, 0, 0, 0, 0, 0, 0, 5}, "[1,1,1,1]+[1,2,2,2]+[2,1,1,2]+[2,2,2,1]"},
      {"C48", {0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 4, 0, 0, 0, 0, 0, 5}, "[1,1,1,1]+[1,2,2,2]+[2,1,2,1]+[2,2,1,2]"},
      {"C49", {0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 4, 0, 0, 0, 0, 5}, "[1,1,1,1]+[1,2,2,2]+[2,1,2,2]+[2,2,1,1]"},
      {"C50", {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 2, 1, 2, 2, 0, 0, 0, 1, 4}, "[1,1,1,1]+[1,2,2,2]+[2,1,2,1]+[2,2,1,1]"},
      {"C51", {0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 1, 2, 1, 2, 0, 0, 1, 0, 4}, "[1,1,1,1]+[1,2,1,2]+[2,1,2,2]+[2,2,1,1]"},
      {"C52", {0, 0, 0, 0, 0, 0, 0, 0, 2, 1, 1, 2, 2, 1, 0, 1, 0, 0, 4}, "[1,1,1,1]+[1,1,2,2]+[2,1,2,1]+[2,2,1,2]"},
      {"C53", {0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 2, 1, 1, 1, 1, 0, 0, 0, 4}, "[1,1,1,1]+[1,1,2,2]+[1,2,1,2]+[2,2,2,1]"},
      {"C54", {0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 2, 2, 2, 2, 0, 0, 0, 0, 4}, "[1,1,1,1]+[1,2,1,2]+[2,1,2,1]+[2,2,1,1]"},
      {"C55", {0, 0, 0, 0, 0, 0, 0, 0, 2, 1, 2, 2, 2, 2, 0, 0, 0, 0, 4}, "[1,1,1,1]+[1,1,2,2]+[2,1,2,1]+[2,2,1,1]"},
      {"C56", {0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 1, 2, 2, 2, 0, 0, 0, 0, 4}, "[1,1,1,1]+[1,1,2,2]+[2,1,1,2]+[2,2,1,1]"},
      {"C57", {0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 2, 1, 2, 2, 0, 0, 0, 0, 4}, "[1,1,1,1]+[1,1,2,2]+[1,2,2,1]+[2,2,1,1]"},
      {"C58", {0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 2, 2, 1, 2, 0, 0, 0, 0, 4}, "[1,1,1,1]+[1,1,2,2]+[1,2,1,2]+[2,2,1,1]"},
      {"C59", {0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 2, 2, 2, 1, 0, 0, 0, 0, 4}, "[1,1,1,1]+[1,1,2,2]+[1,2,1,2]+[2,1,2,1]"},
      {"C60", {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 4}, "[1,1,1,1]+[1,2,1,2]+[1,2,2,1]+[2,1,1,2]+[2,1,2,1]+[2,2,2,2]"},
      {"C61", {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 0, 0, 0, 0, 0, 4}, "[1,1,1,1]+[1,1,2,2]+[1,2,1,1]+[2,1,1,1]+[2,1,2,1]+[2,2,1,2]"},
      {"C62", {0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 2, 0, 0, 0, 0, 0, 4}, "[1,1,1,1]+[1,1,1,2]+[1,2,2,1]+[2,1,1,1]+[2,1,2,2]+[2,2,1,1]"},
      {"C63", {0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 4}, "[1,1,1,1]+[1,1,2,1]+[1,2,1,2]+[2,1,1,1]+[2,1,1,2]+[2,2,2,1]"},
      {"C64", {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 4}, "[1,1,1,1]+[1,1,2,2]+[1,2,1,1]+[1,2,1,2]+[1,2,2,1]+[2,1,1,1]+[2,1,1,2]+[2,1,2,2]+[2,2,2,1]+[2,2,2,2]"},
      {"C65", {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 4}, "[1,1,1,1]+[1,1,1,2]+[1,1,2,2]+[1,2,1,2]+[1,2,2,1]+[2,1,1,1]+[2,1,2,1]+[2,2,1,2]+[2,2,2,1]+[2,2,2,2]"},
      {"C66", {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 4}, "[1,1,1,1]+[1,1,2,1]+[1,1,2,2]+[1,2,1,2]+[1,2,2,1]+[2,1,1,1]+[2,1,2,2]+[2,2,1,1]+[2,2,1,2]+[2,2,2,2]"},
      {"C67", {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4}, "[1,1,1,1]+[1,1,1,2]+[1,1,2,1]-[1,2,1,1]+[1,2,1,2]-[2,1,1,1]+[2,1,2,1]+[2,2,1,1]+[2,2,2,2]"},
      {"C68", {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 2, 1, 2, 2, 0, 0, 0, 0, 3}, "[1,1,1,1]+[1,1,2,1]+[1,2,1,1]+[2,1,1,1]+[2,2,2,2]"},
      {"C69", {0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 1, 2, 1, 2, 0, 0, 0, 0, 3}, "[1,1,1,1]+[1,1,1,2]+[1,2,1,1]+[2,1,1,1]+[2,2,2,2]"},
      {"C70", {0, 0, 0, 0, 0, 0, 0, 0, 2, 1, 1, 2, 2, 1, 0, 0, 0, 0, 3}, "[1,1,1,1]+[1,1,1,2]+[1,1,2,1]+[2,1,1,1]+[2,2,2,2]"},
      {"C71", {0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 2, 1, 1, 1, 0, 0, 0, 0, 3}, "[1,1,1,1]+[1,1,1,2]+[1,1,2,1]+[1,2,1,1]+[2,2,2,2]"},
      {"C72", {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 3}, "[1,1,1,1]+[1,2,2,2]+[2,1,1,2]+[2,1,2,1]+[2,2,1,1]"},
      {"C73", {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 0, 0, 0, 0, 0, 0, 3}, "[1,1,1,1]+[1,1,2,2]+[1,2,1,1]+[2,1,2,1]+[2,2,1,2]"},
      {"C74", {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 1, 0, 0, 0, 0, 0, 0, 3}, "[1,1,1,1]+[1,1,2,2]+[1,2,1,2]+[2,1,1,1]+[2,2,2,1]"},
      {"C75", {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 2, 0, 0, 0, 0, 0, 3}, "[1,1,1,1]+[1,1,2,2]+[1,2,1,1]+[2,1,1,2]+[2,2,2,1]"},
      {"C76", {0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 1, 0, 0, 0, 0, 0, 3}, "[1,1,1,1]+[1,1,2,2]+[1,2,2,1]+[2,1,1,1]+[2,2,1,2]"},
      {"C77", {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 2, 0, 0, 0, 0, 3}, "[1,1,1,1]+[1,1,2,1]+[1,2,1,2]+[2,1,1,2]+[2,2,2,1]"},
      {"C78", {0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 1, 0, 0, 0, 0, 3}, "[1,1,1,1]+[1,2,1,2]+[1,2,2,1]+[2,1,1,1]+[2,1,2,2]"},
      {"C79", {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 3}, "[1,1,1,1]+[1,1,1,2]+[1,2,2,1]+[2,1,1,1]+[2,1,2,2]+[2,2,1,2]"},
      {"C80", {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 3}, "[1,1,1,1]+[1,1,2,1]+[1,2,1,2]+[2,1,1,1]+[2,1,2,2]+[2,2,2,1]"},
      {"C81", {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 3}, "[1,1,1,1]+[1,1,2,2]+[1,2,1,1]+[2,1,1,1]+[2,2,1,2]+[2,2,2,1]"},
      {"C82", {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 3}, "[1,1,1,1]+[1,1,2,2]+[1,2,1,1]+[1,2,1,2]+[2,1,1,1]+[2,1,2,1]+[2,2,2,2]"},
  };
  return rows;
}

const std::vector<PatternRow>& four_qubit_patterns() {
  static const std::vector<PatternRow> rows = {
      {"C0", {"0000000"}},
      {"C1", {"0000000"}},
      {"C2", {"0000000"}},
      {"C3", {"0000000"}},
      {"C4", {"0000000"}},
      {"C5", {"0000000"}},
      {"C6", {"0000000"}},
      {"C7", {"0000000"}},
      {"C8", {"1110001"}},
      {"C9", {"1101010"}},
      {"C10", {"1011100"}},
      {"C11", {"0000000"}},
      {"C12", {"0000000"}},
      {"C13", {"0000000"}},
      {"C14", {"0000000"}},
      {"C15", {"0000000"}},
      {"C16", {"0000000"}},
      {"C17", {"0000000"}},
      {"C18", {"0000000"}},
      {"C19", {"0000000"}},
      {"C20", {"0000000"}},
      {"C21", {"0000000"}},
      {"C22", {"0000000"}},
      {"C23", {"0000000"}},
      {"C24", {"0000000"}},
      {"C25", {"0000000"}},
      {"C26", {"1000000"}},
      {"C27", {"1110001"}},
      {"C28", {"1101010"}},
      {"C29", {"1011100"}},
      {"C30", {"1110111"}},
      {"C31", {"1101111"}},
      {"C32", {"1011111"}},
      {"C33", {"1111111"}},
      {"C34", {"0000000"}},
      {"C35", {"0000000"}},
      {"C36", {"0000000"}},
      {"C37", {"0000000"}},
      {"C38", {"1000000"}},
      {"C39", {"1000000"}},
      {"C40", {"1000000"}},
      {"C41", {"1110001"}},
      {"C42", {"1110001"}},
      {"C43", {"1101010"}},
      {"C44", {"1101010"}},
      {"C45", {"1011100"}},
      {"C46", {"1011100"}},
      {"C47", {"0110000", "1110001"}},
      {"C48", {"0101000", "1101010"}},
      {"C49", {"0011000", "1011100"}},
      {"C50", {"0000000"}},
      {"C51", {"0000000"}},
      {"C52", {"0000000"}},
      {"C53", {"0000000"}},
      {"C54", {"1000000"}},
      {"C55", {"1000000"}},
      {"C56", {"1000000"}},
      {"C57", {"1000000"}},
      {"C58", {"1000000"}},
      {"C59", {"1000000"}},
      {"C60", {"1000111"}},
      {"C61", {"0110000", "1110001"}},
      {"C62", {"0101000", "1101010"}},
      {"C63", {"0011000", "1011100"}},
      {"C64", {"0110111", "1110110", "1110111"}},
      {"C65", {"0101111", "1101101", "1101111"}},
      {"C66", {"0011111", "1011011", "1011111"}},
      {"C67", {"0111111", "1111110", "1111101", "1111011", "1111111"}},
      {"C68", {"1000000"}},
      {"C69", {"1000000"}},
      {"C70", {"1000000"}},
      {"C71", {"1000000"}},
      {"C72", {"0000111"}},
      {"C73", {"0110000"}},
      {"C74", {"0110000"}},
      {"C75", {"0101000"}},
      {"C76", {"0101000"}},
      {"C77", {"0011000"}},
      {"C78", {"0011000"}},
      {"C79", {"0110111"}},
      {"C80", {"0101111"}},
      {"C81", {"0011111"}},
      {"C82", {"0111000"}},
  };
  return rows;
}

const std::vector<PatternRow>& three_qubit_patterns() {
  static const std::vector<PatternRow> rows = {
      {"C0", {"0000"}},
      {"C1", {"0000"}},
      {"C2", {"0010"}},
      {"C3", {"0100"}},
      {"C4", {"1000"}},
      {"C5", {"1110"}},
      {"C6", {"0001"}},
  };
  return rows;
}

const std::vector<ParametricRow>& family_22d() {
  static const std::vector<ParametricRow> rows = {
      {"C0", {{{2, 0}, {2, 0}, {0, 1}, {0, 4}}}, "0"},
      {"C1", {{{1, 0}, {1, 0}, {-1, 1}, {-2, 3}}}, "[1,1,1]"},
      {"C2", {{{0, 0}, {0, 0}, {-1, 1}, {-3, 3}}}, "[1,1,1]+[2,2,1]"},
      {"C3", {{{0, 0}, {1, 0}, {-2, 1}, {-1, 2}}}, "[1,1,1]+[2,1,2]"},
      {"C4", {{{1, 0}, {0, 0}, {-2, 1}, {-1, 2}}}, "[1,1,1]+[1,2,2]"},
      {"C5", {{{0, 0}, {0, 0}, {-2, 1}, {-3, 2}}}, "[1,1,1]+[1,2,2]+[2,1,2]"},
      {"C6", {{{0, 0}, {0, 0}, {-2, 1}, {-4, 2}}}, "[1,1,1]+[2,2,2]"},
      {"C7", {{{0, 0}, {0, 0}, {-3, 1}, {-2, 1}}}, "[1,1,1]+[1,2,2]+[2,2,3]"},
      {"C8", {{{0, 0}, {0, 0}, {-3, 1}, {-3, 1}}}, "[1,1,1]+[1,2,2]+[2,1,2]+[2,2,3]"},
      {"C9", {{{0, 0}, {0, 0}, {-4, 1}, {0, 0}}}, "[1,1,1]+[1,2,2]+[2,1,3]+[2,2,4]"},
  };
  return rows;
}

const std::vector<ParametricRow>& family_23d() {
  static const std::vector<ParametricRow> rows = {
      {"C0", {{{2, 0}, {3, 0}, {0, 1}, {0, 6}}}, "0"},
      {"C1", {{{1, 0}, {2, 0}, {-1, 1}, {-3, 5}}}, "[1,1,1]"},
      {"C2", {{{0, 0}, {1, 0}, {-1, 1}, {-5, 5}}}, "[1,1,1]+[2,2,1]"},
      {"C3", {{{0, 0}, {2, 0}, {-2, 1}, {-2, 4}}}, "[1,1,1]+[2,1,2]"},
      {"C4", {{{1, 0}, {1, 0}, {-2, 1}, {-3, 4}}}, "[1,1,1]+[1,2,2]"},
      {"C5", {{{0, 0}, {1, 0}, {-2, 1}, {-5, 4}}}, "[1,1,1]+[1,2,2]+[2,1,2]"},
      {"C6", {{{0, 0}, {1, 0}, {-2, 1}, {-6, 4}}}, "[1,1,1]+[2,2,2]"},
      {"C7", {{{0, 0}, {0, 0}, {-2, 1}, {-7, 4}}}, "[1,1,1]+[1,2,2]+[2,3,1]"},
      {"C8", {{{0, 0}, {0, 0}, {-2, 1}, {-8, 4}}}, "[1,1,1]+[1,2,2]+[2,2,1]+[2,3,2]"},
      {"C9", {{{1, 0}, {0, 0}, {-3, 1}, {-1, 3}}}, "[1,1,1]+[1,2,2]+[1,3,3]"},
      {"C10", {{{0, 0}, {1, 0}, {-3, 1}, {-4, 3}}}, "[1,1,1]+[1,2,2]+[2,1,3]"},
      {"C11", {{{0, 0}, {1, 0}, {-3, 1}, {-5, 3}}}, "[1,1,1]+[1,2,2]+[2,1,2]+[2,2,3]"},
      {"C12", {{{0, 0}, {0, 0}, {-3, 1}, {-5, 3}}}, "[1,1,1]+[1,2,2]+[1,3,3]+[2,1,2]"},
      {"C13", {{{0, 0}, {0, 0}, {-3, 1}, {-6, 3}}}, "[1,1,1]+[1,2,2]+[2,3,3]"},
      {"C14", {{{0, 0}, {0, 0}, {-3, 1}, {-7, 3}}}, "[1,1,1]+[1,2,2]+[1,3,3]+[2,1,2]+[2,2,3]"},
      {"C15", {{{0, 0}, {0, 0}, {-3, 1}, {-8, 3}}}, "[1,1,1]+[1,2,2]+[2,1,3]+[2,3,1]"},
      {"C16", {{{0, 0}, {0, 0}, {-3, 1}, {-9, 3}}}, "[1,1,1]+[1,2,2]+[2,2,2]+[2,3,3]"},
      {"C17", {{{0, 0}, {1, 0}, {-4, 1}, {-2, 2}}}, "[1,1,1]+[1,2,2]+[2,1,3]+[2,2,4]"},
      {"C18", {{{0, 0}, {0, 0}, {-4, 1}, {-3, 2}}}, "[1,1,1]+[1,2,2]+[1,3,3]+[2,3,4]"},
      {"C19", {{{0, 0}, {0, 0}, {-4, 1}, {-5, 2}}}, "[1,1,1]+[1,2,2]+[1,3,3]+[2,2,4]+[2,3,1]"},
      {"C20", {{{0, 0}, {0, 0}, {-4, 1}, {-6, 2}}}, "[1,1,1]+[1,2,2]+[2,2,3]+[2,3,4]"},
      {"C21", {{{0, 0}, {0, 0}, {-4, 1}, {-7, 2}}}, "[1,1,1]+[1,2,2]+[1,3,3]+[2,2,3]+[2,3,4]"},
      {"C22", {{{0, 0}, {0, 0}, {-4, 1}, {-8, 2}}}, "[1,1,1]+[1,2,2]+[1,3,3]+[2,1,2]+[2,2,3]+[2,3,4]"},
      {"C23", {{{0, 0}, {0, 0}, {-5, 1}, {-3, 1}}}, "[1,1,1]+[1,2,2]+[1,3,3]+[2,1,4]+[2,2,5]"},
      {"C24", {{{0, 0}, {0, 0}, {-5, 1}, {-5, 1}}}, "[1,1,1]+[1,2,2]+[1,3,3]+[2,1,3]+[2,2,4]+[2,3,5]"},
      {"C25", {{{0, 0}, {0, 0}, {-6, 1}, {0, 0}}}, "[1,1,1]+[1,2,2]+[1,3,3]+[2,1,4]+[2,2,5]+[2,3,6]"},
  };
  return rows;
}
std::string c33_representative_text(long c_num, long c_den) {
  if (c_den <= 0) throw InvalidArgument("C33 parameter needs a positive denominator");
  const Rational c = Rational(c_num) / Rational(c_den);
  for (int bad : {-2, -1, 0, 1})
    if (c == Rational(bad)) throw InvalidArgument("C33 parameter must avoid -2, -1, 0, 1");
  const Rational one_plus_c = Rational(1) + c;
  auto coeff = [](const Rational& x) {
    const Rational mag = x.sign() < 0 ? -x : x;
    return std::string(x.sign() < 0 ? "-" : "+") + mag.to_string() + "*";
  };
  return "[1,1,1,1]" + coeff(c) + "[1,1,2,2]" + coeff(-one_plus_c) + "[1,2,1,2]" + coeff(-one_plus_c) + "[2,1,2,1]" +
         coeff(c) + "[2,2,1,1]+[2,2,2,2]";
}

namespace {

std::vector<std::string> range(int first, int last) {
  std::vector<std::string> out;
  for (int i = first; i <= last; ++i) out.push_back("C" + std::to_string(i));
  return out;
}

}  // namespace

const std::vector<OrbitGroup>& orbit_groups_222() {
  static const std::vector<OrbitGroup> groups = {
      {range(0, 0), "0"},
      {range(1, 1), "1"},
      {range(2, 4), "1+a_i a_j"},
      {range(5, 5), "1+a_i(a_j+a_k)"},
      {range(6, 6), "1+a_i a_j a_k"},
  };
  return groups;
}

const std::vector<OrbitGroup>& orbit_groups_2222() {
  static const std::vector<OrbitGroup> groups = {
      {range(0, 0), "0"},
      {range(1, 1), "1"},
      {range(2, 7), "1+a_i a_j"},
      {range(8, 10), "(1+a_i a_j)(1+a_k a_l)"},
      {range(11, 14), "1+a_i(a_j+a_k)"},
      {range(15, 18), "1+a_i a_j a_k"},
      {range(19, 19), "1+a_i(a_j+a_k+a_l)"},
      {range(20, 25), "1+a_i(a_j+a_k a_l)"},
      {range(26, 26), "1+a_i a_j a_k a_l"},
      {range(27, 29), "1+(a_i+a_j)(a_k+a_l)"},
      {range(30, 32), "1-(a_i+a_j+a_k+a_l)+a_j a_k a_l+a_i a_k a_l+a_i a_j a_l+a_i a_j a_k+a_i a_j+a_k a_l+a_i a_j a_k a_l"},
      {range(33, 33), "1+c(a_i a_j+a_k a_l)-(1+c)(a_i a_k+a_j a_l)+a_i a_j a_k a_l"},
      {range(34, 37), "1+a_i+a_j a_k+a_i a_k a_l"},
      {range(38, 40), "1+a_i a_j+a_k a_l"},
      {range(41, 46), "1+(a_i+a_j)(1+a_k a_l)"},
      {range(47, 49), "1+a_i a_j+(a_i+a_j)a_k a_l"},
      {range(50, 53), "1+a_i(a_j+a_k)+a_j a_k a_l"},
      {range(54, 59), "1+a_i a_j+a_k a_l+a_i a_k"},
      {range(60, 60), "1+(a_i+a_j)(a_k+a_l)+a_i a_j a_k a_l"},
      {range(61, 63), "1+a_i+a_j+a_k a_l+a_i a_k+a_i a_j a_l"},
      {range(64, 66), "1+a_i+a_j+a_k a_l+a_i a_l+a_j a_k+a_j a_l+a_i a_k a_l+a_i a_j a_k+a_i a_j a_k a_l"},
      {range(67, 67), "1-a_i-a_j+a_k+a_l+a_i a_j+a_i a_k+a_j a_l+a_i a_j a_k a_l"},
      {range(68, 71), "1+a_i+a_j+a_k+a_i a_j a_k a_l"},
      {range(72, 72), "1+a_i(a_j+a_k+a_l)+a_j a_k a_l"},
      {range(73, 78), "1+a_i(1+a_k a_l)+a_j(a_k+a_l)"},
      {range(79, 81), "1+a_i+a_j+a_k a_l+a_i a_j(a_k+a_l)"},
      {range(82, 82), "1+a_i+a_j+a_k a_l+a_i a_k+a_j a_l+a_i a_j a_k a_l"},
  };
  return groups;
}

const std::vector<std::string>& binary_classes_2222() {
  static const std::vector<std::string> labels = [] {
    std::vector<std::string> out = range(0, 29);
    for (const auto& part : {range(34, 66), range(68, 82)}) out.insert(out.end(), part.begin(), part.end());
    return out;
  }();
  return labels;
}

const std::vector<std::string>& signed_classes_2222() {
  static const std::vector<std::string> labels = {"C30", "C31", "C32", "C67"};
  return labels;
}

const std::vector<PatternGroup>& four_qubit_pattern_groups() {
  static const std::vector<PatternGroup> groups = [] {
    auto join = [](std::initializer_list<std::vector<std::string>> parts) {
      std::vector<std::string> out;
      for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
      return out;
    };
    using V = std::vector<std::string>;
    return std::vector<PatternGroup>{
        {"0000000", join({range(0, 7), range(11, 25), range(34, 37), range(50, 53)})},
        // The grouping as printed files C60 under 1000000, but its own pattern row and its
        // representative both give 1000111, so it gets a separate group here.
        {"1000000", join({V{"C26"}, range(38, 40), range(54, 59), range(68, 71)})},
        {"1000111", V{"C60"}},
        {"0110000", V{"C47", "C61", "C73", "C74"}},
        {"0101000", V{"C48", "C62", "C75", "C76"}},
        {"0011000", V{"C49", "C63", "C77", "C78"}},
        {"0000111", V{"C72"}},
        {"0111000", V{"C82"}},
        {"1110001", V{"C8", "C27", "C41", "C42", "C47'", "C61'"}},
        {"1101010", V{"C9", "C28", "C43", "C44", "C48'", "C62'"}},
        {"1011100", V{"C10", "C29", "C45", "C46", "C49'", "C63'"}},
        {"0110111", V{"C64", "C79"}},
        {"0101111", V{"C65", "C80"}},
        {"0011111", V{"C66", "C81"}},
        {"1110110", V{"C64'"}},
        {"1101101", V{"C65'"}},
        {"1011011", V{"C66'"}},
        {"1110111", V{"C30", "C64''"}},
        {"1101111", V{"C31", "C65''"}},
        {"1011111", V{"C32", "C66''"}},
        {"0111111", V{"C67"}},
        {"1111110", V{"C67'"}},
        {"1111101", V{"C67''"}},
        {"1111011", V{"C67'''"}},
        {"1111111", V{"C33", "C67''''"}},
    };
  }();
  return groups;
}

std::pair<std::string, int> split_primes(const std::string& member) {
  std::size_t end = member.size();
  while (end > 0 && member[end - 1] == '\'') --end;
  return {member.substr(0, end), static_cast<int>(member.size() - end)};
}

}  // namespace entinv::tables
