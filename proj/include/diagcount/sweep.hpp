#pragma once

#include "diagcount/io.hpp"
#include "diagcount/route.hpp"

namespace diagcount {

// One evaluated grid row. String fields hold "-" when not applicable.
struct SweepRow {
  u64 p = 0;
  unsigned N = 0;
  unsigned s = 0;
  std::string d_vec;
  std::string m_vec;
  u64 b_index = 0;
  std::string count = "-";
  std::string method = "skipped";
  std::string micros_closed = "-";
  std::string micros_charsum = "-";
  std::string micros_brute = "-";
  std::string weil_ok = "-";
  std::string exist_ok = "-";
};

// Grid specification:
//   {"p": 3, "N": 2, "m": [[2,2]], "d": [[2,2],[4,4]],
//    "b": [{"int":0}], "a"?: [[...]], "max_bits"?: 40}
// Rows are the cross product of the m-vectors, d-vectors of matching
// arity, coefficient vectors (default all ones), and right-hand sides,
// in specification order. Every applicable path runs per row; rows whose
// paths all exceed the budget come back with method "skipped".
std::vector<SweepRow> run_sweep(const json& spec, const RouteOptions& opts,
                                unsigned jobs);

std::string sweep_to_tsv(const std::vector<SweepRow>& rows);
json sweep_to_json(const std::vector<SweepRow>& rows);

}  // namespace diagcount
