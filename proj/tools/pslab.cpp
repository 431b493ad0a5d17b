#include "pslab/cli.hpp"

int main(int argc, char** argv) { return pslab::cli::main_entry(argc, argv); }
