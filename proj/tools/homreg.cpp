#include "homreg/cli.hpp"

int main(int argc, char** argv) { return homreg::run(argc, argv); }
