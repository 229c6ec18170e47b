#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace homreg {

// Exit codes of the command line front end.
inline constexpr int kExitOk = 0;      // success, or the checked property holds
inline constexpr int kExitFails = 1;   // the checked property fails
inline constexpr int kExitError = 2;   // usage, IO, integrity or refused computation

// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

} // namespace homreg
