#pragma once

#include <json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bidual::cli {

inline constexpr int kPass = 0;
inline constexpr int kFail = 1;
inline constexpr int kUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string tpl;
  std::string term;
  std::string perm = "all";
  bool all = false;
  std::string relations = "none";
  std::string levels = "E**,E**,E**";
  std::vector<std::string> systems;
  std::string tripotent;
  int trials = 100;
  double tol = -1.0;  // negative: per-check defaults
  std::uint64_t seed = 42;
  std::string space = "l1z";
  std::string functional = "heaviside";
  std::string families;
  std::int64_t N = 100;
  std::int64_t window = 10;
  int center = 0;
  std::string triple;
  std::string golden;
  bool json = false;
  bool ascii = false;
  std::string out;
};

/// Command output: text or a JSON document, plus the exit status.
struct Result {
  int status = kPass;
  std::string text;
  nlohmann::json doc;
};

Result cmd_extend(const Options& o);
Result cmd_normalize(const Options& o);
Result cmd_centers(const Options& o);
Result cmd_jordan(const Options& o);
Result cmd_peirce(const Options& o);
Result cmd_witness(const Options& o);
Result cmd_selftest(const Options& o);

}  // namespace bidual::cli
