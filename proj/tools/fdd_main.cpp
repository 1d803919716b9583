#include "fdd/cli.hpp"

int main(int argc, char** argv) { return fdd::cli::main_entry(argc, argv); }
