#include "cli.hpp"

int main(int argc, char** argv) { return stems::cli::main_entry(argc, argv); }
