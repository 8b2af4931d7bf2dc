#include "ifcrack/cli.hpp"

int main(int argc, char** argv) { return ifcrack::cli::main_entry(argc, argv); }
