#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "owct/model.hpp"

namespace owct {

using AnyInstance = std::variant<CosInstance, CoflowInstance, ClusterInstance>;

enum class Model { Cos, Coflow, Cluster };

const char* model_name(Model m);
Model model_of(const AnyInstance& inst);

// Text formats (one record per line, tokens separated by blanks; numbers are
// integers, exact decimals, or a/b rationals):
//
//   COS n m        COFLOW n m          CC n m
//   w_1 .. w_n     w_1 .. w_n          w_1 .. w_n
//   r_1 .. r_n     r_1 .. r_n          r_1 .. r_n
//   m rows of n    per job: m rows     sizes_1 .. sizes_m
//   processing     of m demands        per job and cluster: t d_1 .. d_t
//
// Wrong token counts and trailing input are rejected with the line number.
AnyInstance parse_instance(std::istream& in);
AnyInstance parse_instance_file(const std::string& path);

std::string format_instance(const AnyInstance& inst);
void write_instance_file(const std::string& path, const AnyInstance& inst);

// One line per round: "round k tau D |R| |S| offset makespan".
struct RoundLog;
std::string format_round_log(const RoundLog& log);

}  // namespace owct
