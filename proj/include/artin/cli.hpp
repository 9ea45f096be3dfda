#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace artin::cli {

inline constexpr const char* kToolVersion = "0.3.0";

// args excludes the program name. Exit codes: 0 all verdicts pass,
// 2 falsification report written (or a scan flagged), 1 usage/input/gate error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Write to a sibling temp file, then rename over the target.
void write_atomic(const std::filesystem::path& path, const std::string& content);

// "Cyc(3)xSym(3)" -> "Cyc3xSym3"
std::string file_stem(const std::string& spec);

}  // namespace artin::cli
