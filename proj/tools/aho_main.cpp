#include "aho/cli.hpp"

int main(int argc, char** argv) { return aho::cli::main_entry(argc, argv); }
